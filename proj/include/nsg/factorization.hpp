#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Atom multiplicities (x_1, ..., x_p) of a factorization, indexed like the
/// semigroup's sorted generators.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<Int> coordinates) : coords_(std::move(coordinates)) {}

  std::span<const Int> coordinates() const noexcept { return coords_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_.at(i); }

  /// |x| = x_1 + ... + x_p.
  Int length() const noexcept;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Int> coords_;
};

/// Componentwise minimum. Throws DimensionMismatch.
Factorization meet(const Factorization& x, const Factorization& y);
Int dot(const Factorization& x, const Factorization& y);
/// max(|x|, |y|) - |x ^ y|. Throws DimensionMismatch.
Int distance(const Factorization& x, const Factorization& y);

struct ElementReport {
  Int element = 0;
  std::vector<Factorization> factorizations;
  std::vector<Int> length_set;
  std::vector<Int> delta;
  std::vector<std::vector<Factorization>> r_classes;
  std::vector<Int> r_class_min_lengths;
  Int mu = 0;
  Int cat = 0;
};

struct BettiReport {
  std::vector<Int> betti_elements;
  /// Parallel to betti_elements.
  std::vector<ElementReport> per_element;
  Int delta_max = 0;
  Int catenary = 0;
  Int presentation_cardinality = 0;
};

/// Z(s) in lexicographically decreasing order; empty when s is not in S.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int element);

// The following throw NotAMember when `element` is not in S.
std::vector<Int> length_set(const NumericalSemigroup& s, Int element);
std::vector<Int> delta_of_element(const NumericalSemigroup& s, Int element);
/// Connected components of the graph on Z(s) joining factorizations with a
/// common atom. Classes are ordered by their lexicographically largest member
/// and members keep the order of factorizations().
std::vector<std::vector<Factorization>> r_classes(const NumericalSemigroup& s, Int element);
/// Number of R-classes, from the atom graph {i : s - n_i in S} with i ~ j when
/// s - n_i - n_j in S. Does not enumerate Z(s).
std::size_t r_class_count(const NumericalSemigroup& s, Int element);
Int mu_of_element(const NumericalSemigroup& s, Int element);
Int catenary_of_element(const NumericalSemigroup& s, Int element);
ElementReport element_report(const NumericalSemigroup& s, Int element);

/// Least N such that any two of `zs` are joined by an N-chain: the largest
/// edge of a minimum spanning tree of the complete distance graph. 0 when
/// |zs| <= 1.
Int chain_catenary(std::span<const Factorization> zs);

/// Betti elements, sorted. Closed form {c_1 n_1, c_2 n_2, c_3 n_3} when p = 3;
/// otherwise every s <= scan_bound (default n_{p-1} n_p) with at least two
/// R-classes.
std::vector<Int> betti_elements(const NumericalSemigroup& s,
                                std::optional<Int> scan_bound = std::nullopt);
/// Scan-based Betti elements up to `bound`, for every embedding dimension.
std::vector<Int> betti_elements_scan(const NumericalSemigroup& s, Int bound);

/// Reports for every Betti element plus max Delta(S), cat(S) and the minimal
/// presentation cardinality. cat(S) is cross-checked against max mu(b).
BettiReport betti_report(const NumericalSemigroup& s,
                         std::optional<Int> scan_bound = std::nullopt);
/// Same, over an explicit element list such as a scanned Betti set.
BettiReport betti_report_for(const NumericalSemigroup& s, std::vector<Int> elements);

/// max Delta(S) over Betti elements. Throws TrivialSemigroup for N.
Int delta_max(const NumericalSemigroup& s);
/// cat(S) over Betti elements. Throws TrivialSemigroup for N.
Int catenary(const NumericalSemigroup& s);

/// Union of Delta(s) over s <= stop (default 2 n_{p-1} n_p). Throws
/// ScanBoundTooSmall when the union has not reached delta_max(S).
std::vector<Int> delta_set_scan(const NumericalSemigroup& s, std::optional<Int> stop = std::nullopt);

/// Sum over Betti elements of (number of R-classes - 1).
Int presentation_cardinality(const NumericalSemigroup& s);
/// p = 3 only: true iff S is nonsymmetric. Throws UnsupportedDimension.
bool is_generic_candidate(const NumericalSemigroup& s);

}  // namespace nsg
