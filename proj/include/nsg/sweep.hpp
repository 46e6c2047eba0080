#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

struct SweepRecord {
  std::array<Int, 3> generators{};
  int betti_count = 0;
  Int delta_max_cf = 0;
  Int delta_max_direct = 0;
  Int cat_cf = 0;
  Int cat_direct = 0;
  bool minimal = false;
  std::string witness;
  /// Not serialized; CSV and JSON rows carry no timing data.
  Int elapsed_micros = 0;
};

struct Violation {
  std::vector<Int> generators;
  std::string check;
  std::string detail;
};

std::ostream& operator<<(std::ostream& os, const Violation& v);

/// All triples 2 < n_1 < n_2 < n_3 <= max_n3 with gcd 1 that are minimal
/// generating sets, in lexicographic order.
std::vector<std::array<Int, 3>> minimal_triples(Int max_n3);

/// Runs every embedding-dimension-three check on one semigroup: residuals of
/// c_i n_i = sum r_ij n_j, c_i = r_ji + r_ki and the two strict inequalities
/// when nonsymmetric, the symmetry equivalences, representation invariance for
/// two Betti elements, closed forms against direct Betti-element computations
/// (Betti set found by scan), max Delta(s) over s <= 2 n_2 n_3, cat(S) =
/// max mu(b), and the theorem verdicts.
/// Appends any failures to `violations`.
///
/// Betti elements with cat(b) != mu(b) are appended to `element_mu_mismatches`
/// (e.g. <4,10,15> at b = 30: cat 5, mu 3).
SweepRecord check_triple(const NumericalSemigroup& s, std::vector<Violation>& violations,
                         std::vector<Violation>* element_mu_mismatches = nullptr);

struct TripleSweep {
  std::vector<SweepRecord> records;
  std::vector<Violation> violations;
  std::vector<Violation> element_mu_mismatches;
  std::size_t semigroups = 0;
};

/// Partitions the triples by n_3 over `workers` threads; records come back
/// sorted by generators regardless of scheduling.
TripleSweep run_triple_sweep(Int max_n3, unsigned workers = 1);

/// S = <p_2 p_3, p_1 p_3, p_1 p_2> for pairwise coprime p_1 > p_2 > p_3 >= 2,
/// p_1 <= max_p1: one Betti element, structure recovered, strict inequality,
/// closed forms equal direct values.
struct SimpleSweep {
  std::vector<Violation> violations;
  std::size_t semigroups = 0;
};
SimpleSweep run_single_betti_sweep(Int max_p1);

/// <n, n+k, ..., n+tk> for n <= max_n, k <= max_k, 1 <= t < n, gcd(n, k) = 1,
/// minimal generators: Delta(S) = {k} by scan and cat(S) = ceil(n/t) + k via
/// the general Betti scan.
SimpleSweep run_arithmetic_sweep(Int max_n, Int max_k, unsigned workers = 1);

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records);

}  // namespace nsg
