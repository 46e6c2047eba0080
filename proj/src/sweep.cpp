#include "nsg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <string>
#include <thread>

#include "nsg/dim3.hpp"
#include "nsg/factorization.hpp"

namespace nsg {

namespace {

std::string fmt_pair(Int cf, Int direct) {
  return "closed form " + std::to_string(cf) + " vs direct " + std::to_string(direct);
}

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks write to
// their own slot; nothing else is shared.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
}

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

}  // namespace

std::ostream& operator<<(std::ostream& os, const Violation& v) {
  os << "<";
  for (std::size_t i = 0; i < v.generators.size(); ++i) os << (i ? "," : "") << v.generators[i];
  return os << "> " << v.check << ": " << v.detail;
}

std::vector<std::array<Int, 3>> minimal_triples(Int max_n3) {
  std::vector<std::array<Int, 3>> out;
  for (Int n1 = 3; n1 <= max_n3; ++n1) {
    for (Int n2 = n1 + 1; n2 <= max_n3; ++n2) {
      if (n2 % n1 == 0) continue;
      for (Int n3 = n2 + 1; n3 <= max_n3; ++n3) {
        if (std::gcd(std::gcd(n1, n2), n3) != 1) continue;
        bool redundant = false;
        for (Int y = 0; y * n2 <= n3 && !redundant; ++y) redundant = (n3 - y * n2) % n1 == 0;
        if (!redundant) out.push_back({n1, n2, n3});
      }
    }
  }
  return out;
}

SweepRecord check_triple(const NumericalSemigroup& s, std::vector<Violation>& violations,
                         std::vector<Violation>* element_mu_mismatches) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  std::copy(s.generators().begin(), s.generators().end(), rec.generators.begin());
  auto fail = [&](std::string check, std::string detail) {
    violations.push_back({s.generators(), std::move(check), std::move(detail)});
  };

  try {
    const Dim3Data d = dim3_params(s);
    rec.betti_count = d.betti_count;
    const auto& n = d.n;
    const auto& c = d.c;
    const auto& r = d.r;

    for (std::size_t i = 0; i < 3; ++i) {
      Int residual = c[i] * n[i];
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != i) residual -= r[i][j] * n[j];
      }
      if (residual != 0) fail("relation-residual", "row " + std::to_string(i + 1));
    }

    const bool symmetric = symmetry_class(s) == Symmetry::Symmetric;
    if (!symmetric) {
      for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        if (r[i][j] <= 0 || r[i][k] <= 0) fail("r-positive", "row " + std::to_string(i + 1));
        if (c[i] != r[j][i] + r[k][i]) fail("c-column-sum", "c_" + std::to_string(i + 1));
      }
      if (!(c[0] > r[0][1] + r[0][2])) fail("c1-strict", "c_1 <= r_12 + r_13");
      if (!(c[2] < r[2][0] + r[2][1])) fail("c3-strict", "c_3 >= r_31 + r_32");
    }

    const auto scanned = betti_elements_scan(s, n[1] * n[2]);
    if (scanned != betti_elements(s)) fail("betti-closed-vs-scan", "Betti sets differ");
    const BettiReport direct = betti_report_for(s, scanned);

    const bool count_says = d.betti_count <= 2;
    const bool presentation_says = direct.presentation_cardinality == 2;
    if (count_says != symmetric || d.symmetric != symmetric || presentation_says != symmetric) {
      fail("symmetry-equivalences", "betti_count=" + std::to_string(d.betti_count) +
                                        " presentation=" +
                                        std::to_string(direct.presentation_cardinality));
    }

    Int mu_max = 0;
    for (const auto& e : direct.per_element) {
      mu_max = std::max(mu_max, e.mu);
      if (e.cat != e.mu && element_mu_mismatches != nullptr) {
        element_mu_mismatches->push_back(
            {s.generators(), "element-cat-equals-mu",
             "b=" + std::to_string(e.element) + " cat=" + std::to_string(e.cat) +
                 " mu=" + std::to_string(e.mu)});
      }
    }
    if (mu_max != direct.catenary) fail("cat-equals-mu", fmt_pair(mu_max, direct.catenary));
    if (direct.delta_max + 2 > direct.catenary) fail("global-inequality", "max Delta + 2 > cat");
    // max Delta(s) over s <= 2 n_2 n_3 against the Betti-element value.
    const auto scanned_delta = delta_set_scan(s, 2 * n[1] * n[2]);
    if (scanned_delta.back() != direct.delta_max) {
      fail("delta-scan", fmt_pair(scanned_delta.back(), direct.delta_max));
    }

    const CharacterizationResult ch = characterize(s);
    rec.delta_max_cf = ch.closed_form_delta_max;
    rec.cat_cf = ch.closed_form_catenary;
    rec.delta_max_direct = direct.delta_max;
    rec.cat_direct = direct.catenary;
    rec.minimal = ch.minimal_catenary;
    rec.witness = ch.witness;
    if (rec.delta_max_cf != rec.delta_max_direct) {
      fail("delta-max", fmt_pair(rec.delta_max_cf, rec.delta_max_direct));
    }
    if (rec.cat_cf != rec.cat_direct) fail("catenary", fmt_pair(rec.cat_cf, rec.cat_direct));
    if (ch.minimal_catenary != (direct.delta_max + 2 == direct.catenary)) {
      fail("verdict", "witness " + ch.witness + " disagrees with direct values");
    }

    if (d.betti_count == 2) {
      const auto p = two_betti_parametrize(s);
      const auto inv = two_betti_invariants(p);
      const bool minimal = two_betti_minimal(p).minimal;
      for (Int shift = 1; p.c - shift * p.m1 >= 0; ++shift) {
        const auto q = make_two_betti_parametrization(p.a, p.m1, p.m2, p.b + shift * p.m2,
                                                      p.c - shift * p.m1);
        if (two_betti_invariants(q) != inv || two_betti_minimal(q).minimal != minimal) {
          fail("representation-invariance", "shift " + std::to_string(shift));
        }
      }
    }
  } catch (const Error& e) {
    fail("exception", e.what());
  }
  rec.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return rec;
}

TripleSweep run_triple_sweep(Int max_n3, unsigned workers) {
  const auto triples = minimal_triples(max_n3);
  // One task per n_3 value.
  std::vector<std::vector<std::array<Int, 3>>> buckets(static_cast<std::size_t>(std::max<Int>(max_n3, 0) + 1));
  for (const auto& t : triples) buckets[static_cast<std::size_t>(t[2])].push_back(t);
  std::vector<TripleSweep> partial(buckets.size());
  parallel_for(buckets.size(), workers, [&](std::size_t i) {
    for (const auto& t : buckets[i]) {
      const NumericalSemigroup s{t[0], t[1], t[2]};
      partial[i].records.push_back(
          check_triple(s, partial[i].violations, &partial[i].element_mu_mismatches));
    }
  });
  TripleSweep out;
  out.semigroups = triples.size();
  for (auto& part : partial) {
    out.records.insert(out.records.end(), part.records.begin(), part.records.end());
    out.violations.insert(out.violations.end(), part.violations.begin(), part.violations.end());
    out.element_mu_mismatches.insert(out.element_mu_mismatches.end(),
                                     part.element_mu_mismatches.begin(),
                                     part.element_mu_mismatches.end());
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const SweepRecord& a, const SweepRecord& b) { return a.generators < b.generators; });
  std::stable_sort(out.violations.begin(), out.violations.end(),
                   [](const Violation& a, const Violation& b) { return a.generators < b.generators; });
  std::stable_sort(out.element_mu_mismatches.begin(), out.element_mu_mismatches.end(),
                   [](const Violation& a, const Violation& b) { return a.generators < b.generators; });
  return out;
}

SimpleSweep run_single_betti_sweep(Int max_p1) {
  SimpleSweep out;
  for (Int p1 = 4; p1 <= max_p1; ++p1) {
    for (Int p2 = 3; p2 < p1; ++p2) {
      for (Int p3 = 2; p3 < p2; ++p3) {
        if (std::gcd(p1, p2) != 1 || std::gcd(p1, p3) != 1 || std::gcd(p2, p3) != 1) continue;
        const NumericalSemigroup s{p2 * p3, p1 * p3, p1 * p2};
        ++out.semigroups;
        auto fail = [&](std::string check, std::string detail) {
          out.violations.push_back({s.generators(), std::move(check), std::move(detail)});
        };
        try {
          const auto st = single_betti_structure(s);
          if (st.p1 != p1 || st.p2 != p2 || st.p3 != p3) fail("structure", "p_i not recovered");
          const auto closed = single_betti_invariants(s);
          const auto direct = betti_report_for(s, betti_elements_scan(s, s.generator(1) * s.generator(2)));
          if (direct.betti_elements.size() != 1) fail("betti-count", "scan found other Betti elements");
          if (closed.invariants.delta_max != direct.delta_max) {
            fail("delta-max", fmt_pair(closed.invariants.delta_max, direct.delta_max));
          }
          if (closed.invariants.catenary != direct.catenary) {
            fail("catenary", fmt_pair(closed.invariants.catenary, direct.catenary));
          }
          if (!(direct.delta_max + 2 < direct.catenary)) fail("strict-inequality", "attained");
        } catch (const Error& e) {
          fail("exception", e.what());
        }
      }
    }
  }
  return out;
}

SimpleSweep run_arithmetic_sweep(Int max_n, Int max_k, unsigned workers) {
  struct Case {
    Int n, k, t;
  };
  std::vector<Case> cases;
  for (Int n = 2; n <= max_n; ++n) {
    for (Int k = 1; k <= max_k; ++k) {
      if (std::gcd(n, k) != 1) continue;
      for (Int t = 1; t < n; ++t) cases.push_back({n, k, t});
    }
  }
  std::vector<SimpleSweep> partial(cases.size());
  parallel_for(cases.size(), workers, [&](std::size_t i) {
    const auto [n, k, t] = cases[i];
    ArithmeticResult ar;
    try {
      ar = arithmetic_invariants(n, k, t);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidArithmeticData) return;  // not minimally generated
      throw;
    }
    const NumericalSemigroup s(ar.generators);
    auto& out = partial[i];
    out.semigroups = 1;
    auto fail = [&](std::string check, std::string detail) {
      out.violations.push_back({s.generators(), std::move(check), std::move(detail)});
    };
    try {
      const auto& g = s.generators();
      const Int bound = g.size() >= 2 ? g[g.size() - 2] * g.back() : 0;
      const auto direct = betti_report_for(s, betti_elements_scan(s, bound));
      const auto delta = delta_set_scan(s);
      if (delta != ar.delta_set) fail("delta-set", "scan differs from {k}");
      if (direct.catenary != ar.catenary) fail("catenary", fmt_pair(ar.catenary, direct.catenary));
      if (direct.delta_max + 2 > direct.catenary) fail("global-inequality", "max Delta + 2 > cat");
      if (ar.verdict.minimal != (ceil_div(n, t) == 2) ||
          ar.verdict.minimal != (direct.delta_max + 2 == direct.catenary)) {
        fail("verdict", "minimality disagrees with direct values");
      }
    } catch (const Error& e) {
      fail("exception", e.what());
    }
  });
  SimpleSweep out;
  for (auto& part : partial) {
    out.semigroups += part.semigroups;
    out.violations.insert(out.violations.end(), part.violations.begin(), part.violations.end());
  }
  return out;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << "n1,n2,n3,betti_count,delta_max_cf,delta_max_direct,cat_cf,cat_direct,minimal,witness\n";
  for (const auto& r : records) {
    os << r.generators[0] << ',' << r.generators[1] << ',' << r.generators[2] << ','
       << r.betti_count << ',' << r.delta_max_cf << ',' << r.delta_max_direct << ',' << r.cat_cf
       << ',' << r.cat_direct << ',' << (r.minimal ? "true" : "false") << ',' << r.witness << '\n';
  }
}

}  // namespace nsg
