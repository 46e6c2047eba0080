#include "nsg/fixtures.hpp"

#include <numeric>
#include <sstream>

#include "nsg/dim3.hpp"
#include "nsg/factorization.hpp"

namespace nsg {

namespace {

struct Dim3Fixture {
  std::vector<Int> generators;
  std::vector<Int> delta_set;
  Int catenary;
  std::string witness;
};

// All eleven attain max Delta(S) + 2 = cat(S).
const std::vector<Dim3Fixture>& dim3_fixtures() {
  static const std::vector<Dim3Fixture> fixtures{
      {{10, 14, 53}, {1, 2, 3, 5, 7}, 9, "thmB2.bullet1"},
      {{6, 8, 15}, {1, 2}, 4, "thmB2.bullet2"},
      {{4, 10, 17}, {1, 2, 3}, 5, "thmB2.bullet3"},
      {{10, 16, 35}, {1, 2, 3, 5}, 7, "thmB2.bullet4"},
      {{9, 10, 25}, {1, 2, 3}, 5, "thmB2.bullet4"},
      {{5, 14, 21}, {1, 2, 3, 4, 5}, 7, "thmB2.bullet5"},
      {{5, 6, 9}, {1}, 3, "thmB2.bullet5"},
      {{4, 9, 15}, {1, 2, 3, 4}, 6, "thm24.bullet1"},
      {{3, 8, 13}, {5}, 7, "thm24.bullet2"},
      {{4, 5, 7}, {1}, 3, "thm24.bullet2"},
      {{7, 11, 38}, {1, 2, 3, 4, 5, 6}, 8, "thm24.bullet2"},
  };
  return fixtures;
}

std::string set_string(const std::vector<Int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::string gens_string(const std::vector<Int>& xs) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '>';
  return os.str();
}

FixtureOutcome run_dim3(const Dim3Fixture& f, Int catenary_expected) {
  FixtureOutcome out;
  out.name = gens_string(f.generators);
  std::ostringstream exp;
  exp << "Delta=" << set_string(f.delta_set) << " cat=" << catenary_expected
      << " minimal=true witness=" << f.witness;
  out.expected = exp.str();
  try {
    const NumericalSemigroup s(f.generators);
    const auto delta = delta_set_scan(s);
    const Int cat = catenary(s);
    const auto ch = characterize(s);
    std::ostringstream act;
    act << "Delta=" << set_string(delta) << " cat=" << cat
        << " minimal=" << (ch.minimal_catenary ? "true" : "false") << " witness=" << ch.witness;
    out.actual = act.str();
    out.pass = delta == f.delta_set && cat == catenary_expected && ch.minimal_catenary &&
               ch.witness == f.witness && ch.closed_form_catenary == cat &&
               ch.closed_form_delta_max == delta.back();
  } catch (const Error& e) {
    out.actual = e.what();
  }
  return out;
}

FixtureOutcome run_arithmetic_example() {
  FixtureOutcome out;
  out.name = "arithmetic (n,k,t)=(7,2,4)";
  out.expected = "S=<7,9,11,13,15> Delta={2} cat=4 minimal=true";
  try {
    const auto ar = arithmetic_invariants(7, 2, 4);
    const NumericalSemigroup s(ar.generators);
    const auto delta = delta_set_scan(s);
    const Int cat = catenary(s);
    std::ostringstream act;
    act << "S=" << gens_string(s.generators()) << " Delta=" << set_string(delta) << " cat=" << cat
        << " minimal=" << (ar.verdict.minimal ? "true" : "false");
    out.actual = act.str();
    out.pass = s.generators() == std::vector<Int>{7, 9, 11, 13, 15} && delta == ar.delta_set &&
               delta == std::vector<Int>{2} && cat == 4 && ar.catenary == 4 && ar.verdict.minimal;
  } catch (const Error& e) {
    out.actual = e.what();
  }
  return out;
}

FixtureOutcome run_gluing_family() {
  FixtureOutcome out;
  out.name = "gluing <4,4+k,4+2k>, odd k <= 15";
  out.expected = "Betti={8+2k,8+4k}, glue(<2,2+k>, N, 4+k, 2) symmetric";
  std::ostringstream act;
  bool pass = true;
  try {
    for (Int k = 1; k <= 15; k += 2) {
      const NumericalSemigroup s{4, 4 + k, 4 + 2 * k};
      const NumericalSemigroup glued = glue(NumericalSemigroup{2, 2 + k}, NumericalSemigroup{1}, 4 + k, 2);
      const auto betti = betti_elements(s);
      const auto scanned = betti_elements_scan(s, s.generator(1) * s.generator(2));
      const bool ok = betti == std::vector<Int>{8 + 2 * k, 8 + 4 * k} && scanned == betti &&
                      glued == s && symmetry_class(s) == Symmetry::Symmetric;
      if (!ok) {
        act << "k=" << k << " Betti=" << set_string(betti) << "; ";
        pass = false;
      }
    }
  } catch (const Error& e) {
    act << e.what();
    pass = false;
  }
  out.actual = pass ? "all k match" : act.str();
  out.pass = pass;
  return out;
}

FixtureOutcome run_pseudo_symmetric_family() {
  FixtureOutcome out;
  out.name = "pseudo-symmetric <3,3+k,3+2k>, gcd(3,k)=1, k <= 20";
  out.expected = "F=2k g=k+1 pseudo_symmetric c=(2+k,2,2) three Betti elements";
  std::ostringstream act;
  bool pass = true;
  try {
    for (Int k = 1; k <= 20; ++k) {
      if (std::gcd(Int{3}, k) != 1) continue;
      const NumericalSemigroup s{3, 3 + k, 3 + 2 * k};
      const auto d = dim3_params(s);
      const bool ok = frobenius(s) == 2 * k && genus(s) == k + 1 &&
                      symmetry_class(s) == Symmetry::PseudoSymmetric && d.c[0] == 2 + k &&
                      d.c[1] == 2 && d.c[2] == 2 && d.betti_count == 3;
      if (!ok) {
        act << "k=" << k << " F=" << frobenius(s) << " g=" << genus(s) << "; ";
        pass = false;
      }
    }
  } catch (const Error& e) {
    act << e.what();
    pass = false;
  }
  out.actual = pass ? "all k match" : act.str();
  out.pass = pass;
  return out;
}

}  // namespace

std::vector<FixtureOutcome> run_example_fixtures(bool inject_failure) {
  std::vector<FixtureOutcome> out;
  bool first = true;
  for (const auto& f : dim3_fixtures()) {
    out.push_back(run_dim3(f, f.catenary + ((inject_failure && first) ? 1 : 0)));
    first = false;
  }
  out.push_back(run_arithmetic_example());
  out.push_back(run_gluing_family());
  out.push_back(run_pseudo_symmetric_family());
  return out;
}

nlohmann::ordered_json to_json(const std::vector<FixtureOutcome>& outcomes) {
  nlohmann::ordered_json j;
  std::size_t passed = 0;
  j["fixtures"] = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    passed += o.pass;
    j["fixtures"].push_back(
        {{"name", o.name}, {"expected", o.expected}, {"actual", o.actual}, {"pass", o.pass}});
  }
  j["passed"] = passed;
  j["total"] = outcomes.size();
  return j;
}

}  // namespace nsg
