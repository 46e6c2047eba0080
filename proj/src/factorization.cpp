#include "nsg/factorization.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "nsg/dim3.hpp"

namespace nsg {

Int Factorization::length() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), Int{0});
}

namespace {

void require_same_dimension(const Factorization& x, const Factorization& y) {
  if (x.dimension() != y.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(x.dimension()) + " vs " +
                                                  std::to_string(y.dimension()));
  }
}

void require_member(const NumericalSemigroup& s, Int element) {
  if (!s.contains(element)) {
    throw Error(ErrorKind::NotAMember, std::to_string(element) + " is not in S");
  }
}

// Minimal union-find over dense indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<Int> deltas_of(const std::vector<Int>& sorted_lengths) {
  std::set<Int> d;
  for (std::size_t i = 1; i < sorted_lengths.size(); ++i) {
    d.insert(sorted_lengths[i] - sorted_lengths[i - 1]);
  }
  return {d.begin(), d.end()};
}

std::vector<Int> lengths_of(const std::vector<Factorization>& zs) {
  std::vector<Int> lengths;
  lengths.reserve(zs.size());
  for (const auto& z : zs) lengths.push_back(z.length());
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

std::vector<std::vector<Factorization>> partition_r_classes(const std::vector<Factorization>& zs) {
  if (zs.empty()) return {};
  const std::size_t p = zs.front().dimension();
  // Join each factorization to the first holder of every atom in its support.
  DisjointSets sets(zs.size());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first_holder(p, kNone);
  for (std::size_t z = 0; z < zs.size(); ++z) {
    for (std::size_t i = 0; i < p; ++i) {
      if (zs[z][i] == 0) continue;
      if (first_holder[i] == kNone) {
        first_holder[i] = z;
      } else {
        sets.unite(first_holder[i], z);
      }
    }
  }
  std::vector<std::vector<Factorization>> classes;
  std::vector<std::size_t> class_of_root(zs.size(), kNone);
  for (std::size_t z = 0; z < zs.size(); ++z) {
    const std::size_t root = sets.find(z);
    if (class_of_root[root] == kNone) {
      class_of_root[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back(zs[z]);
  }
  return classes;
}

Int mu_of_classes(const std::vector<std::vector<Factorization>>& classes,
                  std::vector<Int>* min_lengths) {
  Int mu = 0;
  for (const auto& cls : classes) {
    Int least = std::numeric_limits<Int>::max();
    for (const auto& z : cls) least = std::min(least, z.length());
    if (min_lengths) min_lengths->push_back(least);
    mu = std::max(mu, least);
  }
  return mu;
}

// Candidates for Betti elements: w + n_i with w in Ap(S, n_1), i >= 2.
std::vector<Int> betti_candidates(const NumericalSemigroup& s, Int bound) {
  std::vector<Int> out;
  for (Int w : s.apery_by_residue()) {
    for (std::size_t i = 1; i < s.embedding_dimension(); ++i) {
      const Int b = w + s.generator(i);
      if (b <= bound) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int default_scan_bound(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  if (g.size() < 2) return 0;
  return g[g.size() - 2] * g.back();
}

}  // namespace

Factorization meet(const Factorization& x, const Factorization& y) {
  require_same_dimension(x, y);
  std::vector<Int> m(x.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(x[i], y[i]);
  return Factorization(std::move(m));
}

Int dot(const Factorization& x, const Factorization& y) {
  require_same_dimension(x, y);
  Int d = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) d += x[i] * y[i];
  return d;
}

Int distance(const Factorization& x, const Factorization& y) {
  return std::max(x.length(), y.length()) - meet(x, y).length();
}

std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int element) {
  std::vector<Factorization> out;
  if (!s.contains(element)) return out;
  const auto& g = s.generators();
  const std::size_t p = g.size();
  std::vector<Int> x(p, 0);
  // Depth-first from the last generator down to n_2; x_1 is then forced.
  std::function<void(std::size_t, Int)> descend = [&](std::size_t i, Int remaining) {
    if (i == 0) {
      if (remaining % g[0] == 0) {
        x[0] = remaining / g[0];
        out.emplace_back(x);
      }
      return;
    }
    for (Int xi = remaining / g[i]; xi >= 0; --xi) {
      x[i] = xi;
      descend(i - 1, remaining - xi * g[i]);
    }
    x[i] = 0;
  };
  descend(p - 1, element);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Int> length_set(const NumericalSemigroup& s, Int element) {
  require_member(s, element);
  return lengths_of(factorizations(s, element));
}

std::vector<Int> delta_of_element(const NumericalSemigroup& s, Int element) {
  return deltas_of(length_set(s, element));
}

std::vector<std::vector<Factorization>> r_classes(const NumericalSemigroup& s, Int element) {
  require_member(s, element);
  return partition_r_classes(factorizations(s, element));
}

std::size_t r_class_count(const NumericalSemigroup& s, Int element) {
  require_member(s, element);
  if (element == 0) return 1;
  const auto& g = s.generators();
  const std::size_t p = g.size();
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < p; ++i) {
    if (s.contains(element - g[i])) atoms.push_back(i);
  }
  DisjointSets sets(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t b = a + 1; b < atoms.size(); ++b) {
      if (s.contains(element - g[atoms[a]] - g[atoms[b]])) sets.unite(a, b);
    }
  }
  std::size_t components = 0;
  for (std::size_t a = 0; a < atoms.size(); ++a) components += (sets.find(a) == a);
  return components;
}

Int mu_of_element(const NumericalSemigroup& s, Int element) {
  return mu_of_classes(r_classes(s, element), nullptr);
}

Int chain_catenary(std::span<const Factorization> zs) {
  const std::size_t n = zs.size();
  if (n <= 1) return 0;
  // Prim on the complete graph; the bottleneck is the heaviest tree edge.
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> link(n, kInf);
  std::vector<char> in_tree(n, 0);
  link[0] = 0;
  Int bottleneck = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v] && (next == n || link[v] < link[next])) next = v;
    }
    in_tree[next] = 1;
    bottleneck = std::max(bottleneck, link[next]);
    for (std::size_t v = 0; v < n; ++v) {
      if (!in_tree[v]) link[v] = std::min(link[v], distance(zs[next], zs[v]));
    }
  }
  return bottleneck;
}

Int catenary_of_element(const NumericalSemigroup& s, Int element) {
  require_member(s, element);
  return chain_catenary(factorizations(s, element));
}

ElementReport element_report(const NumericalSemigroup& s, Int element) {
  require_member(s, element);
  ElementReport rep;
  rep.element = element;
  rep.factorizations = factorizations(s, element);
  rep.length_set = lengths_of(rep.factorizations);
  rep.delta = deltas_of(rep.length_set);
  rep.r_classes = partition_r_classes(rep.factorizations);
  rep.mu = mu_of_classes(rep.r_classes, &rep.r_class_min_lengths);
  rep.cat = chain_catenary(rep.factorizations);
  return rep;
}

std::vector<Int> betti_elements_scan(const NumericalSemigroup& s, Int bound) {
  std::vector<Int> out;
  if (s.embedding_dimension() < 2) return out;
  for (Int b : betti_candidates(s, bound)) {
    if (r_class_count(s, b) >= 2) out.push_back(b);
  }
  return out;
}

std::vector<Int> betti_elements(const NumericalSemigroup& s, std::optional<Int> scan_bound) {
  if (s.embedding_dimension() == 3) {
    const Dim3Data d = dim3_params(s);
    std::vector<Int> out{d.betti_value(0), d.betti_value(1), d.betti_value(2)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  return betti_elements_scan(s, scan_bound.value_or(default_scan_bound(s)));
}

BettiReport betti_report(const NumericalSemigroup& s, std::optional<Int> scan_bound) {
  return betti_report_for(s, betti_elements(s, scan_bound));
}

BettiReport betti_report_for(const NumericalSemigroup& s, std::vector<Int> elements) {
  BettiReport rep;
  rep.betti_elements = std::move(elements);
  Int mu_max = 0;
  for (Int b : rep.betti_elements) {
    ElementReport e = element_report(s, b);
    if (!e.delta.empty()) rep.delta_max = std::max(rep.delta_max, e.delta.back());
    rep.catenary = std::max(rep.catenary, e.cat);
    mu_max = std::max(mu_max, e.mu);
    rep.presentation_cardinality += static_cast<Int>(e.r_classes.size()) - 1;
    rep.per_element.push_back(std::move(e));
  }
  if (mu_max != rep.catenary) {
    throw Error(ErrorKind::InternalInconsistency,
                "max cat(b) = " + std::to_string(rep.catenary) + " but max mu(b) = " +
                    std::to_string(mu_max));
  }
  return rep;
}

Int delta_max(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorKind::TrivialSemigroup, "S = N has empty Delta set");
  return betti_report(s).delta_max;
}

Int catenary(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorKind::TrivialSemigroup, "S = N is factorial");
  return betti_report(s).catenary;
}

std::vector<Int> delta_set_scan(const NumericalSemigroup& s, std::optional<Int> stop) {
  if (s.is_naturals()) throw Error(ErrorKind::TrivialSemigroup, "S = N has empty Delta set");
  const Int limit = stop.value_or(2 * default_scan_bound(s));
  const auto& g = s.generators();
  const Int n1 = g.front();
  // L(s) = union over i of (L(s - n_i) + 1), as bitsets over lengths, kept in
  // a ring of n_p + 1 slots.
  const std::size_t words = static_cast<std::size_t>(std::max<Int>(limit, 0) / n1 / 64 + 1);
  const std::size_t ring = static_cast<std::size_t>(g.back()) + 1;
  std::vector<std::uint64_t> lengths(ring * words, 0);
  auto slot = [&](Int x) { return lengths.data() + static_cast<std::size_t>(x % static_cast<Int>(ring)) * words; };
  slot(0)[0] = 1;
  std::set<Int> found;
  for (Int x = 1; x <= limit; ++x) {
    std::uint64_t* cur = slot(x);
    std::fill(cur, cur + words, 0);
    if (!s.contains(x)) continue;
    for (Int n : g) {
      if (x < n || !s.contains(x - n)) continue;
      const std::uint64_t* prev = slot(x - n);
      std::uint64_t carry = 0;
      for (std::size_t w = 0; w < words; ++w) {
        cur[w] |= (prev[w] << 1) | carry;
        carry = prev[w] >> 63;
      }
    }
    Int last = -1;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cur[w];
      while (bits) {
        const Int len = static_cast<Int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (last >= 0) found.insert(len - last);
        last = len;
      }
    }
  }
  std::vector<Int> out(found.begin(), found.end());
  const Int certified = delta_max(s);
  const Int reached = out.empty() ? 0 : out.back();
  if (reached < certified) {
    throw Error(ErrorKind::ScanBoundTooSmall, "scan up to " + std::to_string(limit) +
                                                  " reached max " + std::to_string(reached) +
                                                  " < " + std::to_string(certified));
  }
  if (reached > certified) {
    throw Error(ErrorKind::InternalInconsistency,
                "scanned Delta max " + std::to_string(reached) + " exceeds Betti max " +
                    std::to_string(certified));
  }
  return out;
}

Int presentation_cardinality(const NumericalSemigroup& s) {
  Int total = 0;
  for (Int b : betti_elements(s)) total += static_cast<Int>(r_class_count(s, b)) - 1;
  return total;
}

bool is_generic_candidate(const NumericalSemigroup& s) {
  if (s.embedding_dimension() != 3) {
    throw Error(ErrorKind::UnsupportedDimension, "generic presentations are classified for p = 3");
  }
  return symmetry_class(s) != Symmetry::Symmetric;
}

}  // namespace nsg
