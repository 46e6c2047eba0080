#include "nsg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace nsg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonPositiveGenerator: return "NonPositiveGenerator";
    case ErrorKind::GeneratorTooLarge: return "GeneratorTooLarge";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::InvalidGluingData: return "InvalidGluingData";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorKind::ScanBoundTooSmall: return "ScanBoundTooSmall";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::NotSingleBetti: return "NotSingleBetti";
    case ErrorKind::NotTwoBetti: return "NotTwoBetti";
    case ErrorKind::NotThreeBetti: return "NotThreeBetti";
    case ErrorKind::NoValidParametrization: return "NoValidParametrization";
    case ErrorKind::InvalidArithmeticData: return "InvalidArithmeticData";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

std::string_view to_string(Symmetry s) noexcept {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::PseudoSymmetric: return "pseudo_symmetric";
    case Symmetry::Neither: return "neither";
  }
  return "neither";
}

namespace {

// Shortest paths over Z/m where each generator is an edge of its own weight:
// entry r is the least combination of `gens` congruent to r mod m.
std::vector<Int> least_by_residue(std::span<const Int> gens, Int m) {
  constexpr Int kUnreached = -1;
  std::vector<Int> best(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  best[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != best[static_cast<std::size_t>(residue)]) continue;
    for (Int g : gens) {
      const Int next = value + g;
      auto& slot = best[static_cast<std::size_t>(next % m)];
      if (slot == kUnreached || next < slot) {
        slot = next;
        queue.emplace(next, next % m);
      }
    }
  }
  return best;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> raw_generators)
    : NumericalSemigroup(std::span<const Int>(raw_generators.begin(), raw_generators.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw_generators, Int max_generator) {
  if (raw_generators.empty()) throw Error(ErrorKind::EmptyInput, "no generators given");
  std::vector<Int> sorted(raw_generators.begin(), raw_generators.end());
  for (Int g : sorted) {
    if (g <= 0) throw Error(ErrorKind::NonPositiveGenerator, std::to_string(g));
    if (g > max_generator) {
      throw Error(ErrorKind::GeneratorTooLarge,
                  std::to_string(g) + " exceeds " + std::to_string(max_generator));
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Int d = 0;
  for (Int g : sorted) d = std::gcd(d, g);
  if (d != 1) throw Error(ErrorKind::GcdNotOne, "gcd of generators is " + std::to_string(d));

  // A generator is redundant iff it is a combination of the smaller kept ones.
  const Int top = sorted.back();
  std::vector<char> reachable(static_cast<std::size_t>(top) + 1, 0);
  reachable[0] = 1;
  for (Int g : sorted) {
    if (reachable[static_cast<std::size_t>(g)]) continue;
    generators_.push_back(g);
    for (Int x = g; x <= top; ++x) {
      if (reachable[static_cast<std::size_t>(x - g)]) reachable[static_cast<std::size_t>(x)] = 1;
    }
  }
  apery_ = least_by_residue(generators_, generators_.front());
}

bool NumericalSemigroup::contains(Int x) const noexcept {
  if (x < 0) return false;
  const Int n1 = generators_.front();
  return x >= apery_[static_cast<std::size_t>(x % n1)];
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int m) {
  if (m <= 0 || !s.contains(m)) {
    throw Error(ErrorKind::NotAMember, std::to_string(m) + " is not a positive element");
  }
  auto w = least_by_residue(s.generators(), m);
  std::sort(w.begin(), w.end());
  return w;
}

Int frobenius(const NumericalSemigroup& s) {
  const auto& ap = s.apery_by_residue();
  return *std::max_element(ap.begin(), ap.end()) - s.multiplicity();
}

Int genus(const NumericalSemigroup& s) {
  Int g = 0;
  for (Int w : s.apery_by_residue()) g += w / s.multiplicity();
  return g;
}

std::vector<Int> gaps(const NumericalSemigroup& s) {
  std::vector<Int> out;
  const Int f = frobenius(s);
  for (Int x = 1; x <= f; ++x) {
    if (!s.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  // Candidates are w - n_1 for w in Ap(S, n_1).
  std::vector<Int> out;
  for (Int w : s.apery_by_residue()) {
    const Int x = w - s.multiplicity();
    if (s.contains(x)) continue;
    const bool all = std::all_of(s.generators().begin(), s.generators().end(),
                                 [&](Int n) { return s.contains(x + n); });
    if (all) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Symmetry symmetry_class(const NumericalSemigroup& s) {
  const Int f = frobenius(s);
  const Int g = genus(s);
  if (2 * g == f + 1) return Symmetry::Symmetric;
  if (2 * g == f + 2) return Symmetry::PseudoSymmetric;
  return Symmetry::Neither;
}

ClassicalInvariants classical_invariants(const NumericalSemigroup& s) {
  ClassicalInvariants inv;
  inv.frobenius = frobenius(s);
  inv.genus = genus(s);
  inv.gaps = gaps(s);
  inv.pseudo_frobenius = pseudo_frobenius(s);
  inv.symmetry = symmetry_class(s);
  return inv;
}

NumericalSemigroup glue(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda,
                        Int mu) {
  auto is_generator = [](const NumericalSemigroup& s, Int x) {
    return std::binary_search(s.generators().begin(), s.generators().end(), x);
  };
  if (!s1.contains(lambda) || lambda <= 0 || is_generator(s1, lambda)) {
    throw Error(ErrorKind::InvalidGluingData,
                "lambda=" + std::to_string(lambda) + " must be a non-generator element of S1");
  }
  if (!s2.contains(mu) || mu <= 0 || is_generator(s2, mu)) {
    throw Error(ErrorKind::InvalidGluingData,
                "mu=" + std::to_string(mu) + " must be a non-generator element of S2");
  }
  if (std::gcd(lambda, mu) != 1) {
    throw Error(ErrorKind::InvalidGluingData, "gcd(lambda, mu) != 1");
  }
  std::vector<Int> gens;
  for (Int n : s1.generators()) gens.push_back(mu * n);
  for (Int m : s2.generators()) gens.push_back(lambda * m);
  NumericalSemigroup glued(gens);
  if (symmetry_class(s1) == Symmetry::Symmetric && symmetry_class(s2) == Symmetry::Symmetric &&
      symmetry_class(glued) != Symmetry::Symmetric) {
    throw Error(ErrorKind::InternalInconsistency, "gluing of symmetric semigroups is not symmetric");
  }
  return glued;
}

}  // namespace nsg
