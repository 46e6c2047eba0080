#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nsg {

struct FixtureOutcome {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Reproduces the worked examples: eleven embedding-dimension-three
/// semigroups with their Delta sets, catenary degrees and theorem bullets, the
/// arithmetic sequence <7,9,11,13,15>, the gluings <4, 4+k, 4+2k> and the
/// pseudo-symmetric family <3, 3+k, 3+2k>.
///
/// `inject_failure` perturbs one expected value (harness self-test).
std::vector<FixtureOutcome> run_example_fixtures(bool inject_failure = false);

nlohmann::ordered_json to_json(const std::vector<FixtureOutcome>& outcomes);

}  // namespace nsg
