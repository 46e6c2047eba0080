#include <doctest.h>

#include <numeric>
#include <vector>

#include "nsg/dim3.hpp"
#include "nsg/factorization.hpp"
#include "nsg/sweep.hpp"
#include "oracles.hpp"

using nsg::ErrorKind;
using nsg::Int;
using nsg::NumericalSemigroup;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const nsg::Error& e) {
    return e.kind();
  }
  FAIL("no nsg::Error thrown");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("c_i and r_ij") {
  const auto a = nsg::dim3_params(NumericalSemigroup{4, 9, 15});
  CHECK(a.c == std::array<Int, 3>{6, 3, 2});
  CHECK(a.r[0][1] == 1);
  CHECK(a.r[0][2] == 1);
  CHECK(a.r[1][0] == 3);
  CHECK(a.r[1][2] == 1);
  CHECK(a.r[2][0] == 3);
  CHECK(a.r[2][1] == 2);
  CHECK_FALSE(a.symmetric);

  const auto b = nsg::dim3_params(NumericalSemigroup{7, 11, 38});
  CHECK(b.c == std::array<Int, 3>{7, 6, 2});
  CHECK(b.r[2][0] == 3);
  CHECK(b.r[2][1] == 5);

  const auto c = nsg::dim3_params(NumericalSemigroup{4, 5, 7});
  CHECK(c.c == std::array<Int, 3>{3, 3, 2});
  CHECK(c.r[2][0] == 1);
  CHECK(c.r[0][1] == 1);
  CHECK(c.r[1][0] == 2);

  CHECK(kind_of([] { nsg::dim3_params(NumericalSemigroup{3, 5}); }) == ErrorKind::UnsupportedDimension);
}

TEST_CASE("c_i against the oracle") {
  for (const auto& t : nsg::minimal_triples(30)) {
    const std::vector<Int> g{t[0], t[1], t[2]};
    const auto d = nsg::dim3_params(NumericalSemigroup(g));
    for (std::size_t i = 0; i < 3; ++i) CHECK(d.c[i] == oracle::c_i(g, i));
  }
}

TEST_CASE("symmetric representations prefer a zero") {
  const auto d = nsg::dim3_params(NumericalSemigroup{5, 6, 9});
  CHECK(d.symmetric);
  bool zero = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) zero |= (i != j && d.r[i][j] == 0);
  CHECK(zero);

  // 18 = 3*6 = 3*4 + 6: the zero at the lower index wins.
  const auto e = nsg::dim3_params(NumericalSemigroup{4, 6, 9});
  CHECK(e.symmetric);
  CHECK_FALSE(e.representation_unique);
  CHECK(e.c[2] == 2);
  CHECK(e.r[2][0] == 0);
  CHECK(e.r[2][1] == 3);
}

TEST_CASE("Betti counts") {
  CHECK(nsg::betti_count(NumericalSemigroup{10, 15, 6}) == 1);
  CHECK(nsg::betti_count(NumericalSemigroup{5, 6, 9}) == 2);
  CHECK(nsg::betti_count(NumericalSemigroup{4, 9, 15}) == 3);
}

TEST_CASE("single Betti element structure and invariants") {
  auto check_structure = [](NumericalSemigroup s, Int p1, Int p2, Int p3) {
    const auto st = nsg::single_betti_structure(s);
    CHECK(st.p1 == p1);
    CHECK(st.p2 == p2);
    CHECK(st.p3 == p3);
  };
  check_structure(NumericalSemigroup{6, 10, 15}, 5, 3, 2);
  check_structure(NumericalSemigroup{15, 21, 35}, 7, 5, 3);
  check_structure(NumericalSemigroup{10, 14, 35}, 7, 5, 2);

  const auto a = nsg::single_betti_invariants(NumericalSemigroup{6, 10, 15});
  CHECK(a.invariants.delta_max == 2);
  CHECK(a.invariants.catenary == 5);
  CHECK_FALSE(a.verdict.minimal);
  CHECK(a.verdict.witness == "singleBetti.never");
  const auto b = nsg::single_betti_invariants(NumericalSemigroup{10, 14, 35});
  CHECK(b.invariants.delta_max == 3);
  CHECK(b.invariants.catenary == 7);
  CHECK_FALSE(b.verdict.minimal);

  CHECK(kind_of([] { nsg::single_betti_structure(NumericalSemigroup{5, 6, 9}); }) ==
        ErrorKind::NotSingleBetti);
  CHECK(kind_of([] { nsg::single_betti_invariants(NumericalSemigroup{4, 9, 15}); }) ==
        ErrorKind::NotSingleBetti);
}

TEST_CASE("two Betti elements: parametrization") {
  auto check = [](NumericalSemigroup s, Int a, Int m1, Int m2, Int b, Int c) {
    const auto p = nsg::two_betti_parametrize(s);
    CHECK(p.a == a);
    CHECK(p.m1 == m1);
    CHECK(p.m2 == m2);
    CHECK(p.b == b);
    CHECK(p.c == c);
  };
  check(NumericalSemigroup{10, 14, 53}, 2, 5, 7, 5, 4);
  check(NumericalSemigroup{9, 10, 25}, 5, 2, 5, 2, 1);
  check(NumericalSemigroup{5, 6, 9}, 3, 2, 3, 1, 1);
  CHECK(kind_of([] { nsg::two_betti_parametrize(NumericalSemigroup{4, 9, 15}); }) ==
        ErrorKind::NotTwoBetti);
  CHECK(kind_of([] { nsg::make_two_betti_parametrization(2, 3, 3, 1, 1); }) ==
        ErrorKind::NoValidParametrization);
  CHECK(kind_of([] { nsg::make_two_betti_parametrization(1, 2, 3, 1, 1); }) ==
        ErrorKind::NoValidParametrization);
  CHECK(kind_of([] { nsg::make_two_betti_parametrization(2, 2, 3, 1, 0); }) ==
        ErrorKind::NoValidParametrization);
}

TEST_CASE("two Betti elements: closed forms and verdicts") {
  const auto p = nsg::two_betti_parametrize(NumericalSemigroup{10, 14, 53});
  CHECK(nsg::two_betti_invariants(p) == nsg::ClosedFormInvariants{7, 9});
  CHECK(nsg::two_betti_minimal(p).witness == "thmB2.bullet1");

  const auto q = nsg::make_two_betti_parametrization(2, 2, 5, 1, 3);
  CHECK(nsg::two_betti_invariants(q) == nsg::ClosedFormInvariants{3, 5});

  const auto r = nsg::two_betti_parametrize(NumericalSemigroup{9, 10, 25});
  CHECK(nsg::two_betti_invariants(r) == nsg::ClosedFormInvariants{3, 5});

  CHECK(nsg::two_betti_minimal(nsg::two_betti_parametrize(NumericalSemigroup{6, 8, 15})).witness ==
        "thmB2.bullet2");
  CHECK(nsg::two_betti_minimal(nsg::two_betti_parametrize(NumericalSemigroup{5, 14, 21})).witness ==
        "thmB2.bullet5");
}

TEST_CASE("two Betti elements: shifting (b, c) leaves the answer unchanged") {
  for (const auto& t : nsg::minimal_triples(40)) {
    const NumericalSemigroup s{t[0], t[1], t[2]};
    if (nsg::betti_count(s) != 2) continue;
    const auto p = nsg::two_betti_parametrize(s);
    for (Int k = 1; p.c - k * p.m1 >= 0; ++k) {
      const auto q = nsg::make_two_betti_parametrization(p.a, p.m1, p.m2, p.b + k * p.m2, p.c - k * p.m1);
      CHECK(nsg::two_betti_invariants(q) == nsg::two_betti_invariants(p));
      CHECK(nsg::two_betti_minimal(q).minimal == nsg::two_betti_minimal(p).minimal);
    }
  }
}

// Parametrizations whose c_i do not match the roles a, m1, m2 satisfy the
// stated hypotheses but give a wrong catenary degree.
TEST_CASE("two Betti elements: only parametrizations matching the c_i are used") {
  const NumericalSemigroup s{10, 12, 15};
  const auto cands = nsg::two_betti_candidates(s);
  bool saw_a2 = false, saw_a5 = false;
  for (const auto& c : cands) {
    if (c.params.a == 2) {
      saw_a2 = true;
      CHECK_FALSE(c.consistent);
      CHECK(nsg::two_betti_invariants(c.params).catenary == 6);
    }
    if (c.params.a == 5) {
      saw_a5 = true;
      CHECK(c.consistent);
      CHECK(nsg::two_betti_invariants(c.params) == nsg::ClosedFormInvariants{1, 5});
    }
  }
  CHECK(saw_a2);
  CHECK(saw_a5);
  CHECK(nsg::two_betti_parametrize(s).a == 5);
  CHECK(nsg::catenary(s) == 5);

  const NumericalSemigroup t{10, 16, 35};
  CHECK(nsg::two_betti_invariants(nsg::two_betti_parametrize(t)).catenary == 7);
  CHECK(nsg::catenary(t) == 7);

  // Across the sweep every consistent parametrization agrees with direct values.
  for (const auto& tr : nsg::minimal_triples(40)) {
    const NumericalSemigroup u{tr[0], tr[1], tr[2]};
    if (nsg::betti_count(u) != 2) continue;
    const nsg::ClosedFormInvariants direct{nsg::delta_max(u), nsg::catenary(u)};
    for (const auto& c : nsg::two_betti_candidates(u)) {
      if (c.consistent) CHECK(nsg::two_betti_invariants(c.params) == direct);
    }
  }
}

TEST_CASE("three Betti elements") {
  const auto a = nsg::dim3_params(NumericalSemigroup{4, 9, 15});
  CHECK(nsg::three_betti_invariants(a) == nsg::ClosedFormInvariants{4, 6});
  CHECK(nsg::three_betti_minimal(a).witness == "thm24.bullet1");
  const auto b = nsg::dim3_params(NumericalSemigroup{3, 8, 13});
  CHECK(nsg::three_betti_invariants(b) == nsg::ClosedFormInvariants{5, 7});
  const auto c = nsg::dim3_params(NumericalSemigroup{4, 5, 7});
  CHECK(nsg::three_betti_invariants(c) == nsg::ClosedFormInvariants{1, 3});
  CHECK(nsg::three_betti_minimal(nsg::dim3_params(NumericalSemigroup{7, 11, 38})).witness ==
        "thm24.bullet2");
  CHECK(kind_of([] { nsg::three_betti_invariants(nsg::dim3_params(NumericalSemigroup{5, 6, 9})); }) ==
        ErrorKind::NotThreeBetti);
  CHECK(kind_of([] { nsg::three_betti_minimal(nsg::dim3_params(NumericalSemigroup{5, 6, 9})); }) ==
        ErrorKind::NotThreeBetti);

  // A nonsymmetric triple failing both bullets.
  bool found = false;
  for (const auto& t : nsg::minimal_triples(20)) {
    const auto d = nsg::dim3_params(NumericalSemigroup{t[0], t[1], t[2]});
    if (d.betti_count != 3) continue;
    const auto v = nsg::three_betti_minimal(d);
    if (!v.minimal) {
      CHECK(v.witness == "none");
      const auto inv = nsg::three_betti_invariants(d);
      CHECK(inv.delta_max + 2 < inv.catenary);
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("arithmetic sequences") {
  const auto a = nsg::arithmetic_invariants(7, 2, 4);
  CHECK(a.generators == std::vector<Int>{7, 9, 11, 13, 15});
  CHECK(a.delta_set == std::vector<Int>{2});
  CHECK(a.catenary == 4);
  CHECK(a.verdict.minimal);
  CHECK(a.verdict.witness == "arithmetic.ceil2");

  const auto b = nsg::arithmetic_invariants(4, 1, 2);
  CHECK(b.generators == std::vector<Int>{4, 5, 6});
  CHECK(b.delta_set == std::vector<Int>{1});
  CHECK(b.catenary == 3);
  CHECK(b.verdict.minimal);
  CHECK(nsg::delta_max(NumericalSemigroup{4, 5, 6}) == 1);
  CHECK(nsg::catenary(NumericalSemigroup{4, 5, 6}) == 3);

  for (Int k = 1; k <= 20; ++k) {
    if (k % 3 == 0) continue;
    CHECK(nsg::arithmetic_invariants(3, k, 2).verdict.minimal);
  }

  CHECK(kind_of([] { nsg::arithmetic_invariants(4, 2, 2); }) == ErrorKind::InvalidArithmeticData);
  CHECK(kind_of([] { nsg::arithmetic_invariants(4, 1, 4); }) == ErrorKind::InvalidArithmeticData);
  CHECK(kind_of([] { nsg::arithmetic_invariants(4, 0, 1); }) == ErrorKind::InvalidArithmeticData);
}

TEST_CASE("characterize") {
  const auto a = nsg::characterize(NumericalSemigroup{5, 6, 9});
  CHECK(a.betti_count == 2);
  CHECK(a.closed_form_delta_max == 1);
  CHECK(a.closed_form_catenary == 3);
  CHECK(a.minimal_catenary);

  const auto b = nsg::characterize(NumericalSemigroup{6, 10, 15});
  CHECK(b.betti_count == 1);
  CHECK_FALSE(b.minimal_catenary);
  CHECK(b.family == nsg::Family::SingleBetti);

  const auto c = nsg::characterize(NumericalSemigroup{3, 8, 13});
  CHECK(c.betti_count == 3);
  CHECK(c.minimal_catenary);
  CHECK(c.witness == "thm24.bullet2");

  const auto d = nsg::characterize(NumericalSemigroup{7, 9, 11, 13, 15});
  CHECK(d.family == nsg::Family::Arithmetic);
  CHECK(d.witness == "arithmetic.ceil2");

  CHECK(kind_of([] { nsg::characterize(NumericalSemigroup{5, 7, 8, 11}); }) ==
        ErrorKind::UnsupportedDimension);
}

TEST_CASE("sweep checks find nothing on small triples") {
  const auto sweep = nsg::run_triple_sweep(20);
  CHECK(sweep.violations.empty());
  CHECK(sweep.semigroups == nsg::minimal_triples(20).size());
  CHECK(sweep.records.size() == sweep.semigroups);
}
