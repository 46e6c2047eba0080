#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Parameters of an embedding-dimension-three semigroup <n_1, n_2, n_3>.
///
/// c[i] is the least positive multiple of n_i lying in the semigroup of the
/// other two generators, and r[i][j], r[i][k] express it:
///   c_i n_i = r_ij n_j + r_ik n_k.
/// Indices are zero-based here (c[0] is c_1). When S is nonsymmetric the r_ij
/// are unique and positive. When S is symmetric they are not unique; the
/// stored representation has a zero coordinate whenever one exists, preferring
/// a zero at the lower index.
struct Dim3Data {
  std::array<Int, 3> n{};
  std::array<Int, 3> c{};
  std::array<std::array<Int, 3>, 3> r{};
  bool symmetric = false;
  bool representation_unique = true;
  int betti_count = 0;

  Int betti_value(std::size_t i) const;
};

Dim3Data dim3_params(const NumericalSemigroup& s);
int betti_count(const NumericalSemigroup& s);

/// Pairwise coprime p_1 > p_2 > p_3 > 1 with n_1 = p_2 p_3, n_2 = p_1 p_3,
/// n_3 = p_1 p_2.
struct SingleBettiStructure {
  Int p1 = 0;
  Int p2 = 0;
  Int p3 = 0;
};

struct ClosedFormInvariants {
  Int delta_max = 0;
  Int catenary = 0;

  friend bool operator==(const ClosedFormInvariants&, const ClosedFormInvariants&) = default;
};

struct Verdict {
  bool minimal = false;
  std::string witness = "none";
};

SingleBettiStructure single_betti_structure(const NumericalSemigroup& s);

struct SingleBettiResult {
  ClosedFormInvariants invariants;
  Verdict verdict;
};
SingleBettiResult single_betti_invariants(const NumericalSemigroup& s);

/// S = <a m1, a m2, b m1 + c m2> with m1 < m2 coprime and greater than one,
/// a >= 2, b + c >= 2, gcd(a, b m1 + c m2) = 1.
struct TwoBettiParametrization {
  Int a = 0;
  Int m1 = 0;
  Int m2 = 0;
  Int b = 0;
  Int c = 0;
  /// Minimizer of |b + c + lambda (m2 - m1) - a| over
  /// lambda in [-floor(b/m2), floor(c/m1)]; smaller lambda on ties.
  Int lambda_star = 0;
  Int delta1 = 0;
  Int delta2 = 0;
};

/// Validates the hypotheses and fills lambda_star, delta1, delta2.
/// Throws NoValidParametrization.
TwoBettiParametrization make_two_betti_parametrization(Int a, Int m1, Int m2, Int b, Int c);

struct TwoBettiCandidate {
  /// Zero-based indices of the generators a m1 and a m2.
  std::size_t first = 0;
  std::size_t second = 0;
  TwoBettiParametrization params;
  /// c_k = a for the remaining generator, c_first = m2 and c_second = m1.
  bool consistent = false;
};

/// Every parametrization of S satisfying the hypotheses above, with b < m2,
/// in lexicographic order of the generator pair.
std::vector<TwoBettiCandidate> two_betti_candidates(const NumericalSemigroup& s);

/// The first parametrization consistent with the c_i of S. Throws NotTwoBetti
/// or NoValidParametrization.
TwoBettiParametrization two_betti_parametrize(const NumericalSemigroup& s);
ClosedFormInvariants two_betti_invariants(const TwoBettiParametrization& p);
/// Five-bullet criterion; witness "thmB2.bulletN" for the first bullet that holds.
Verdict two_betti_minimal(const TwoBettiParametrization& p);

/// Requires three Betti elements. Throws NotThreeBetti.
ClosedFormInvariants three_betti_invariants(const Dim3Data& d);
/// Two-bullet criterion; witness "thm24.bulletN".
Verdict three_betti_minimal(const Dim3Data& d);

struct ArithmeticResult {
  std::vector<Int> generators;
  std::vector<Int> delta_set;
  Int catenary = 0;
  Verdict verdict;
};

/// S = <n, n + k, ..., n + t k>. Throws InvalidArithmeticData unless
/// 1 <= t < n, k >= 1, gcd(n, k) = 1 and the listed generators are minimal.
ArithmeticResult arithmetic_invariants(Int n, Int k, Int t);

enum class Family { SingleBetti, TwoBetti, ThreeBetti, Arithmetic };
std::string_view to_string(Family f) noexcept;

struct CharacterizationResult {
  Family family = Family::ThreeBetti;
  int betti_count = 0;
  Int closed_form_delta_max = 0;
  Int closed_form_catenary = 0;
  bool minimal_catenary = false;
  std::string witness = "none";
};

/// Embedding dimension three, or any generator list forming an arithmetic
/// sequence. Throws UnsupportedDimension otherwise.
CharacterizationResult characterize(const NumericalSemigroup& s);

}  // namespace nsg
