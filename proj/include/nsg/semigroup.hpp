#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "nsg/error.hpp"

namespace nsg {

using Int = std::int64_t;

// Default cap on accepted generators.
inline constexpr Int kDefaultMaxGenerator = Int{1} << 20;

/// A numerical semigroup given by its minimal generating set n_1 < ... < n_p.
///
/// The Apery set with respect to the multiplicity n_1 is computed once in the
/// constructor; membership is then a single table lookup. Values are immutable
/// and safe to share between threads.
class NumericalSemigroup {
 public:
  /// Reduces `raw_generators` to the minimal generating set, sorted ascending.
  /// Throws EmptyInput, NonPositiveGenerator, GeneratorTooLarge or GcdNotOne.
  explicit NumericalSemigroup(std::span<const Int> raw_generators,
                              Int max_generator = kDefaultMaxGenerator);
  NumericalSemigroup(std::initializer_list<Int> raw_generators);

  const std::vector<Int>& generators() const noexcept { return generators_; }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Int multiplicity() const noexcept { return generators_.front(); }
  Int generator(std::size_t i) const { return generators_.at(i); }
  bool is_naturals() const noexcept { return generators_.front() == 1; }

  bool contains(Int x) const noexcept;

  /// Least element of S in each residue class modulo n_1, indexed by residue.
  const std::vector<Int>& apery_by_residue() const noexcept { return apery_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> apery_;
};

enum class Symmetry { Symmetric, PseudoSymmetric, Neither };

std::string_view to_string(Symmetry s) noexcept;

struct ClassicalInvariants {
  Int frobenius = -1;
  Int genus = 0;
  std::vector<Int> gaps;
  std::vector<Int> pseudo_frobenius;
  Symmetry symmetry = Symmetry::Symmetric;
};

/// Least element of S in every residue class modulo m, sorted ascending.
/// Throws NotAMember unless m is a positive element of S.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int m);

/// F(N) = -1 by convention.
Int frobenius(const NumericalSemigroup& s);
Int genus(const NumericalSemigroup& s);
std::vector<Int> gaps(const NumericalSemigroup& s);
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
Symmetry symmetry_class(const NumericalSemigroup& s);
ClassicalInvariants classical_invariants(const NumericalSemigroup& s);

/// Gluing <mu*S1, lambda*S2>. Throws InvalidGluingData when lambda is not a
/// non-generator element of S1, mu is not a non-generator element of S2, or
/// gcd(lambda, mu) != 1.
NumericalSemigroup glue(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int lambda,
                        Int mu);

}  // namespace nsg
