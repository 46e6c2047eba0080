#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "nsg/dim3.hpp"
#include "nsg/factorization.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

/// Everything `nsg invariants` prints for one semigroup.
struct SemigroupReport {
  std::vector<Int> generators;
  ClassicalInvariants classical;
  BettiReport betti;
  /// Absent for S = N.
  std::optional<std::vector<Int>> delta_set;
  std::optional<CharacterizationResult> characterization;
  std::optional<Dim3Data> dim3;
  std::optional<TwoBettiParametrization> two_betti;
};

/// `scan_bound` overrides both the Betti scan bound (p != 3) and the stop of
/// the Delta set scan.
SemigroupReport build_report(const NumericalSemigroup& s, std::optional<Int> scan_bound);

Json to_json(const Factorization& x);
Json to_json(const ElementReport& e);
Json to_json(const BettiReport& b);
Json to_json(const SemigroupReport& r);

void write_text(std::ostream& os, const SemigroupReport& r);
void write_text(std::ostream& os, const BettiReport& b);

}  // namespace nsg
