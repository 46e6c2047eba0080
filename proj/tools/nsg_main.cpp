#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsg/factorization.hpp"
#include "nsg/fixtures.hpp"
#include "nsg/report.hpp"
#include "nsg/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

nsg::Int max_generator_from_env() {
  const char* raw = std::getenv("NSG_MAX_GEN");
  if (raw == nullptr || *raw == '\0') return nsg::kDefaultMaxGenerator;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(raw, &used);
    if (used != std::string(raw).size() || v <= 0) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw nsg::Error(nsg::ErrorKind::GeneratorTooLarge,
                     std::string("NSG_MAX_GEN must be a positive integer, got '") + raw + "'");
  }
}

int exit_code_for(const nsg::Error& e) {
  return e.kind() == nsg::ErrorKind::InternalInconsistency ? kExitViolation : kExitUsage;
}

struct InvariantsArgs {
  std::vector<nsg::Int> generators;
  bool json = false;
  std::optional<nsg::Int> scan_bound;
};

int cmd_invariants(const InvariantsArgs& a) {
  const nsg::NumericalSemigroup s(a.generators, max_generator_from_env());
  const auto report = nsg::build_report(s, a.scan_bound);
  if (a.json) {
    std::cout << nsg::to_json(report).dump(2) << '\n';
  } else {
    nsg::write_text(std::cout, report);
  }
  return kExitOk;
}

int cmd_betti(const InvariantsArgs& a) {
  const nsg::NumericalSemigroup s(a.generators, max_generator_from_env());
  const auto report = nsg::betti_report(s, a.scan_bound);
  if (a.json) {
    std::cout << nsg::to_json(report).dump(2) << '\n';
  } else {
    nsg::write_text(std::cout, report);
  }
  return kExitOk;
}

int cmd_examples(bool json, bool inject_failure) {
  const auto outcomes = nsg::run_example_fixtures(inject_failure);
  std::size_t passed = 0;
  for (const auto& o : outcomes) passed += o.pass;
  if (json) {
    std::cout << nsg::to_json(outcomes).dump(2) << '\n';
  } else {
    for (const auto& o : outcomes) {
      std::cout << (o.pass ? "PASS  " : "FAIL  ") << o.name << '\n';
      if (!o.pass) {
        std::cout << "      expected: " << o.expected << '\n'
                  << "      actual:   " << o.actual << '\n';
      }
    }
    std::cout << passed << '/' << outcomes.size() << " pass\n";
  }
  return passed == outcomes.size() ? kExitOk : kExitViolation;
}

struct VerifyArgs {
  nsg::Int max_n3 = 0;
  bool json = false;
  std::string csv;
  std::string filter = "all";
  unsigned parallel = 1;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.max_n3 < 5) {
    std::cerr << "verify: max_n3 must be at least 5\n";
    return kExitUsage;
  }
  if (a.max_n3 > max_generator_from_env()) {
    std::cerr << "verify: max_n3 exceeds NSG_MAX_GEN\n";
    return kExitUsage;
  }
  const auto sweep = nsg::run_triple_sweep(a.max_n3, a.parallel);

  std::vector<nsg::SweepRecord> rows;
  for (const auto& r : sweep.records) {
    if (a.filter == "all" || r.minimal) rows.push_back(r);
  }

  if (!a.csv.empty()) {
    std::ofstream out(a.csv, std::ios::binary);
    if (!out) {
      std::cerr << "verify: cannot open " << a.csv << '\n';
      return kExitUsage;
    }
    nsg::write_csv(out, rows);
  }

  if (a.json) {
    nsg::Json j;
    j["max_n3"] = a.max_n3;
    j["semigroups"] = sweep.semigroups;
    j["violations"] = nsg::Json::array();
    for (const auto& v : sweep.violations) {
      j["violations"].push_back({{"generators", v.generators}, {"check", v.check}, {"detail", v.detail}});
    }
    // Informational only.
    j["element_cat_mu_mismatches"] = sweep.element_mu_mismatches.size();
    j["records"] = nsg::Json::array();
    for (const auto& r : rows) {
      j["records"].push_back({{"generators", r.generators},
                              {"betti_count", r.betti_count},
                              {"delta_max_cf", r.delta_max_cf},
                              {"delta_max_direct", r.delta_max_direct},
                              {"cat_cf", r.cat_cf},
                              {"cat_direct", r.cat_direct},
                              {"minimal", r.minimal},
                              {"witness", r.witness}});
    }
    std::cout << j.dump(2) << '\n';
  } else {
    if (a.csv.empty()) nsg::write_csv(std::cout, rows);
    std::cerr << sweep.semigroups << " semigroups checked, " << sweep.violations.size()
              << " violations, " << sweep.element_mu_mismatches.size()
              << " Betti elements with cat(b) != mu(b)\n";
  }
  if (!sweep.violations.empty()) {
    std::cerr << "first counterexample: " << sweep.violations.front() << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization invariants of numerical semigroups"};
  app.require_subcommand(1);

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "Full invariant report for one semigroup");
  invariants->add_option("generators", inv.generators, "Generators")->required()->expected(1, -1);
  invariants->add_flag("--json", inv.json, "Emit JSON");
  invariants->add_option("--scan-bound", inv.scan_bound, "Upper bound for the Betti and Delta scans");

  InvariantsArgs bet;
  auto* betti = app.add_subcommand("betti", "Betti elements with per-element data");
  betti->add_option("generators", bet.generators, "Generators")->required()->expected(1, -1);
  betti->add_flag("--json", bet.json, "Emit JSON");
  betti->add_option("--scan-bound", bet.scan_bound, "Upper bound for the Betti scan");

  bool ex_json = false;
  bool ex_inject = false;
  auto* examples = app.add_subcommand("examples", "Run the worked-example fixtures");
  examples->add_flag("--json", ex_json, "Emit JSON");
  examples->add_flag("--inject-failure", ex_inject, "Corrupt one fixture (harness self-test)")
      ->group("");

  VerifyArgs ver;
  ver.parallel = 1;
  auto* verify = app.add_subcommand("verify", "Exhaustive sweep over triples n3 <= max_n3");
  verify->add_option("max_n3", ver.max_n3, "Largest n3")->required();
  verify->add_flag("--json", ver.json, "Emit JSON");
  verify->add_option("--csv", ver.csv, "Write records to this CSV file");
  verify->add_option("--filter", ver.filter, "Which records to emit")
      ->check(CLI::IsMember({"minimal", "all"}));
  verify->add_option("--parallel", ver.parallel, "Worker threads")->check(CLI::Range(1u, 1024u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*invariants) return cmd_invariants(inv);
    if (*betti) return cmd_betti(bet);
    if (*examples) return cmd_examples(ex_json, ex_inject);
    if (*verify) return cmd_verify(ver);
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
