#include "nsg/dim3.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "nsg/factorization.hpp"

namespace nsg {

namespace {

void require_dim3(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 3) {
    throw Error(ErrorKind::UnsupportedDimension,
                "embedding dimension is " + std::to_string(s.embedding_dimension()) + ", not 3");
  }
}

// All (x, y) >= 0 with x * a + y * b = v, by increasing y.
std::vector<std::pair<Int, Int>> representations(Int v, Int a, Int b) {
  std::vector<std::pair<Int, Int>> out;
  for (Int y = 0; y * b <= v; ++y) {
    if ((v - y * b) % a == 0) out.emplace_back((v - y * b) / a, y);
  }
  return out;
}

bool in_two_generated(Int v, Int a, Int b) {
  for (Int y = 0; y * b <= v; ++y) {
    if ((v - y * b) % a == 0) return true;
  }
  return false;
}

std::string bullet(std::string_view theorem, int n) {
  return std::string(theorem) + ".bullet" + std::to_string(n);
}

Int floor_div(Int a, Int b) { return a / b; }  // operands are nonnegative here

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

void check_verdict(const Verdict& v, const ClosedFormInvariants& inv, std::string_view what) {
  if (v.minimal != (inv.delta_max + 2 == inv.catenary)) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string(what) + " verdict disagrees with closed forms (delta_max=" +
                    std::to_string(inv.delta_max) + ", cat=" + std::to_string(inv.catenary) + ")");
  }
}

}  // namespace

Int Dim3Data::betti_value(std::size_t i) const { return c.at(i) * n.at(i); }

Dim3Data dim3_params(const NumericalSemigroup& s) {
  require_dim3(s);
  Dim3Data d;
  std::copy(s.generators().begin(), s.generators().end(), d.n.begin());
  bool any_zero = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i == 0) ? 1 : 0;
    const std::size_t k = (i == 2) ? 1 : 2;
    Int ci = 1;
    while (!in_two_generated(ci * d.n[i], d.n[j], d.n[k])) ++ci;
    d.c[i] = ci;

    const auto reps = representations(ci * d.n[i], d.n[j], d.n[k]);
    if (reps.size() != 1) d.representation_unique = false;
    auto chosen = reps.front();
    auto zero_j = std::find_if(reps.begin(), reps.end(), [](auto r) { return r.first == 0; });
    auto zero_k = std::find_if(reps.begin(), reps.end(), [](auto r) { return r.second == 0; });
    if (zero_j != reps.end()) {
      chosen = *zero_j;
    } else if (zero_k != reps.end()) {
      chosen = *zero_k;
    } else {
      chosen = *std::min_element(reps.begin(), reps.end());
    }
    if (zero_j != reps.end() || zero_k != reps.end()) any_zero = true;
    d.r[i][j] = chosen.first;
    d.r[i][k] = chosen.second;
  }
  d.symmetric = any_zero;
  std::set<Int> distinct{d.betti_value(0), d.betti_value(1), d.betti_value(2)};
  d.betti_count = static_cast<int>(distinct.size());
  if (!d.symmetric && !d.representation_unique) {
    throw Error(ErrorKind::InternalInconsistency,
                "nonsymmetric semigroup with non-unique r_ij representation");
  }
  if ((d.betti_count == 3) == d.symmetric) {
    throw Error(ErrorKind::InternalInconsistency,
                "Betti count " + std::to_string(d.betti_count) + " contradicts symmetry flag");
  }
  return d;
}

int betti_count(const NumericalSemigroup& s) { return dim3_params(s).betti_count; }

SingleBettiStructure single_betti_structure(const NumericalSemigroup& s) {
  const Dim3Data d = dim3_params(s);
  if (d.betti_count != 1) {
    throw Error(ErrorKind::NotSingleBetti,
                "S has " + std::to_string(d.betti_count) + " Betti elements");
  }
  SingleBettiStructure st{std::gcd(d.n[1], d.n[2]), std::gcd(d.n[0], d.n[2]),
                          std::gcd(d.n[0], d.n[1])};
  const bool ok = st.p1 > st.p2 && st.p2 > st.p3 && st.p3 > 1 && d.n[0] == st.p2 * st.p3 &&
                  d.n[1] == st.p1 * st.p3 && d.n[2] == st.p1 * st.p2 && d.c[0] == st.p1 &&
                  d.c[1] == st.p2 && d.c[2] == st.p3;
  if (!ok) {
    throw Error(ErrorKind::InternalInconsistency, "single Betti element without p1 p2 p3 structure");
  }
  return st;
}

SingleBettiResult single_betti_invariants(const NumericalSemigroup& s) {
  const Dim3Data d = dim3_params(s);
  if (d.betti_count != 1) {
    throw Error(ErrorKind::NotSingleBetti,
                "S has " + std::to_string(d.betti_count) + " Betti elements");
  }
  SingleBettiResult res;
  res.invariants.delta_max = std::max(d.c[1] - d.c[2], d.c[0] - d.c[1]);
  res.invariants.catenary = d.c[0];
  res.verdict = Verdict{false, "singleBetti.never"};
  if (res.invariants.delta_max + 2 >= res.invariants.catenary) {
    throw Error(ErrorKind::InternalInconsistency, "single Betti element attains the bound");
  }
  return res;
}

TwoBettiParametrization make_two_betti_parametrization(Int a, Int m1, Int m2, Int b, Int c) {
  const bool ok = m1 > 1 && m1 < m2 && std::gcd(m1, m2) == 1 && a >= 2 && b >= 0 && c >= 0 &&
                  b + c >= 2 && std::gcd(a, b * m1 + c * m2) == 1;
  if (!ok) {
    throw Error(ErrorKind::NoValidParametrization,
                "(a, m1, m2, b, c) = (" + std::to_string(a) + ", " + std::to_string(m1) + ", " +
                    std::to_string(m2) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  }
  TwoBettiParametrization p{a, m1, m2, b, c};
  p.delta1 = m2 - m1;
  const Int lo = -floor_div(b, m2);
  const Int hi = floor_div(c, m1);
  p.lambda_star = lo;
  p.delta2 = std::abs(b + c + lo * (m2 - m1) - a);
  for (Int lambda = lo + 1; lambda <= hi; ++lambda) {
    const Int v = std::abs(b + c + lambda * (m2 - m1) - a);
    if (v < p.delta2) {
      p.delta2 = v;
      p.lambda_star = lambda;
    }
  }
  return p;
}

std::vector<TwoBettiCandidate> two_betti_candidates(const NumericalSemigroup& s) {
  const Dim3Data d = dim3_params(s);
  std::vector<TwoBettiCandidate> out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const std::size_t k = 3 - i - j;
      const Int a = std::gcd(d.n[i], d.n[j]);
      if (a < 2) continue;
      const Int m1 = d.n[i] / a;
      const Int m2 = d.n[j] / a;
      for (Int b = 0; b < m2 && b * m1 <= d.n[k]; ++b) {
        if ((d.n[k] - b * m1) % m2 != 0) continue;
        const Int c = (d.n[k] - b * m1) / m2;
        try {
          TwoBettiCandidate cand{i, j, make_two_betti_parametrization(a, m1, m2, b, c), false};
          cand.consistent = d.c[k] == a && d.c[i] == m2 && d.c[j] == m1;
          out.push_back(cand);
        } catch (const Error&) {
          // hypotheses fail for this pair
        }
        break;
      }
    }
  }
  return out;
}

ClosedFormInvariants two_betti_invariants(const TwoBettiParametrization& p) {
  ClosedFormInvariants inv;
  inv.delta_max = std::max(p.delta1, p.delta2);
  const Int top_class = p.b + p.c - floor_div(p.b, p.m2) * (p.m2 - p.m1);
  inv.catenary = std::max({p.m2, p.a, top_class});
  return inv;
}

Verdict two_betti_minimal(const TwoBettiParametrization& p) {
  const Int a = p.a, m1 = p.m1, m2 = p.m2, b = p.b, c = p.c;
  const Int fb = floor_div(b, m2);
  const Int fc = floor_div(c, m1);
  const Int top = b + c - fb * (m2 - m1);
  std::array<bool, 5> holds{
      a == 2 && m2 < top,
      a == 2 && 2 < m1 && m2 == top,
      m1 == 2 && a < b + c - fb * (m2 - 2) && b + c - fb * (m2 - 2) <= m2,
      m1 == 2 && m2 >= a && b + c - fb * (m2 - 2) <= a && a < b + c + fc * (m2 - 2) + m2 - 2,
      b + c == 2 && c < m1 && m2 <= a,
  };
  Verdict v;
  for (int n = 0; n < 5; ++n) {
    if (holds[static_cast<std::size_t>(n)]) {
      v = Verdict{true, bullet("thmB2", n + 1)};
      break;
    }
  }
  check_verdict(v, two_betti_invariants(p), "two-Betti");
  return v;
}

TwoBettiParametrization two_betti_parametrize(const NumericalSemigroup& s) {
  const int count = betti_count(s);
  if (count != 2) {
    throw Error(ErrorKind::NotTwoBetti, "S has " + std::to_string(count) + " Betti elements");
  }
  std::vector<TwoBettiCandidate> consistent;
  for (const auto& cand : two_betti_candidates(s)) {
    if (cand.consistent) consistent.push_back(cand);
  }
  if (consistent.empty()) {
    throw Error(ErrorKind::NoValidParametrization, "no parametrization matches c_1, c_2, c_3");
  }
  const auto& first = consistent.front().params;
  const auto inv = two_betti_invariants(first);
  const auto verdict = two_betti_minimal(first);
  for (const auto& other : consistent) {
    if (two_betti_invariants(other.params) != inv ||
        two_betti_minimal(other.params).minimal != verdict.minimal) {
      throw Error(ErrorKind::InternalInconsistency,
                  "parametrizations of the same semigroup disagree");
    }
  }
  return first;
}

ClosedFormInvariants three_betti_invariants(const Dim3Data& d) {
  if (d.betti_count != 3) {
    throw Error(ErrorKind::NotThreeBetti,
                "S has " + std::to_string(d.betti_count) + " Betti elements");
  }
  const auto& r = d.r;
  const Int delta1 = d.c[0] - r[0][1] - r[0][2];
  const Int delta3 = r[2][0] + r[2][1] - d.c[2];
  ClosedFormInvariants inv;
  inv.delta_max = std::max(delta1, delta3);
  inv.catenary = std::max({d.c[0], d.c[1], r[1][0] + r[1][2], r[2][0] + r[2][1]});
  return inv;
}

Verdict three_betti_minimal(const Dim3Data& d) {
  const auto inv = three_betti_invariants(d);
  const auto& r = d.r;
  const auto& c = d.c;
  const Int row2 = r[1][0] + r[1][2];
  const Int row3 = r[2][0] + r[2][1];
  Verdict v;
  if (r[0][1] == 1 && r[0][2] == 1 && row2 > c[1] && c[0] >= std::max(row2, row3)) {
    v = Verdict{true, bullet("thm24", 1)};
  } else if (c[2] == 2 && row3 >= std::max(c[0], c[1])) {
    v = Verdict{true, bullet("thm24", 2)};
  }
  check_verdict(v, inv, "three-Betti");
  return v;
}

ArithmeticResult arithmetic_invariants(Int n, Int k, Int t) {
  auto invalid = [&](const std::string& why) {
    return Error(ErrorKind::InvalidArithmeticData, "(n, k, t) = (" + std::to_string(n) + ", " +
                                                       std::to_string(k) + ", " +
                                                       std::to_string(t) + "): " + why);
  };
  if (t < 1 || t >= n) throw invalid("need 1 <= t < n");
  if (k < 1) throw invalid("need k >= 1");
  if (std::gcd(n, k) != 1) throw invalid("need gcd(n, k) = 1");
  ArithmeticResult res;
  for (Int i = 0; i <= t; ++i) res.generators.push_back(n + i * k);
  try {
    NumericalSemigroup s(res.generators);
    if (s.generators() != res.generators) throw invalid("generators are not minimal");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArithmeticData) throw;
    throw invalid(e.what());
  }
  res.delta_set = {k};
  res.catenary = ceil_div(n, t) + k;
  res.verdict = ceil_div(n, t) == 2 ? Verdict{true, "arithmetic.ceil2"} : Verdict{};
  return res;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::SingleBetti: return "single_betti";
    case Family::TwoBetti: return "two_betti";
    case Family::ThreeBetti: return "three_betti";
    case Family::Arithmetic: return "arithmetic";
  }
  return "unknown";
}

CharacterizationResult characterize(const NumericalSemigroup& s) {
  CharacterizationResult res;
  const auto& g = s.generators();
  if (g.size() == 3) {
    const Dim3Data d = dim3_params(s);
    res.betti_count = d.betti_count;
    ClosedFormInvariants inv;
    Verdict verdict;
    switch (d.betti_count) {
      case 1: {
        res.family = Family::SingleBetti;
        const auto single = single_betti_invariants(s);
        inv = single.invariants;
        verdict = single.verdict;
        break;
      }
      case 2: {
        res.family = Family::TwoBetti;
        const auto p = two_betti_parametrize(s);
        inv = two_betti_invariants(p);
        verdict = two_betti_minimal(p);
        break;
      }
      default: {
        res.family = Family::ThreeBetti;
        inv = three_betti_invariants(d);
        verdict = three_betti_minimal(d);
        break;
      }
    }
    res.closed_form_delta_max = inv.delta_max;
    res.closed_form_catenary = inv.catenary;
    res.minimal_catenary = verdict.minimal;
    res.witness = verdict.witness;
    return res;
  }

  bool arithmetic = g.size() >= 2;
  for (std::size_t i = 2; arithmetic && i < g.size(); ++i) {
    arithmetic = g[i] - g[i - 1] == g[1] - g[0];
  }
  if (!arithmetic) {
    throw Error(ErrorKind::UnsupportedDimension,
                "embedding dimension " + std::to_string(g.size()) +
                    " is only supported for arithmetic sequences");
  }
  const Int k = g[1] - g[0];
  const auto ar = arithmetic_invariants(g[0], k, static_cast<Int>(g.size()) - 1);
  res.family = Family::Arithmetic;
  res.betti_count = static_cast<int>(betti_elements(s).size());
  res.closed_form_delta_max = ar.delta_set.back();
  res.closed_form_catenary = ar.catenary;
  res.minimal_catenary = ar.verdict.minimal;
  res.witness = ar.verdict.witness;
  return res;
}

}  // namespace nsg
