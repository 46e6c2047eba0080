#include "nsg/report.hpp"

#include <sstream>
#include <string>

namespace nsg {

namespace {

std::string join(std::span<const Int> xs, std::string_view sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string braces(std::span<const Int> xs) { return "{" + join(xs) + "}"; }

std::string tuple(const Factorization& x) { return "(" + join(x.coordinates()) + ")"; }

}  // namespace

SemigroupReport build_report(const NumericalSemigroup& s, std::optional<Int> scan_bound) {
  SemigroupReport r;
  r.generators = s.generators();
  r.classical = classical_invariants(s);
  r.betti = betti_report(s, scan_bound);
  if (s.is_naturals()) return r;
  r.delta_set = delta_set_scan(s, scan_bound);
  if (s.embedding_dimension() == 3) {
    r.dim3 = dim3_params(s);
    if (r.dim3->betti_count == 2) r.two_betti = two_betti_parametrize(s);
  }
  try {
    r.characterization = characterize(s);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedDimension) throw;
  }
  return r;
}

Json to_json(const Factorization& x) {
  Json j = Json::array();
  for (Int v : x.coordinates()) j.push_back(v);
  return j;
}

Json to_json(const ElementReport& e) {
  Json j;
  j["element"] = e.element;
  j["factorizations"] = Json::array();
  for (const auto& z : e.factorizations) j["factorizations"].push_back(to_json(z));
  j["length_set"] = e.length_set;
  j["delta"] = e.delta;
  j["r_classes"] = Json::array();
  for (const auto& cls : e.r_classes) {
    Json c = Json::array();
    for (const auto& z : cls) c.push_back(to_json(z));
    j["r_classes"].push_back(std::move(c));
  }
  j["r_class_min_lengths"] = e.r_class_min_lengths;
  j["mu"] = e.mu;
  j["cat"] = e.cat;
  return j;
}

Json to_json(const BettiReport& b) {
  Json j;
  j["elements"] = b.betti_elements;
  j["delta_max"] = b.delta_max;
  j["catenary"] = b.catenary;
  j["presentation_cardinality"] = b.presentation_cardinality;
  j["reports"] = Json::array();
  for (const auto& e : b.per_element) j["reports"].push_back(to_json(e));
  return j;
}

Json to_json(const SemigroupReport& r) {
  Json j;
  j["generators"] = r.generators;

  Json inv;
  inv["embedding_dimension"] = r.generators.size();
  inv["multiplicity"] = r.generators.front();
  inv["frobenius"] = r.classical.frobenius;
  inv["genus"] = r.classical.genus;
  inv["gaps"] = r.classical.gaps;
  inv["pseudo_frobenius"] = r.classical.pseudo_frobenius;
  inv["symmetry"] = std::string(to_string(r.classical.symmetry));
  inv["delta_set"] = r.delta_set ? Json(*r.delta_set) : Json(nullptr);
  inv["delta_max"] = r.delta_set ? Json(r.betti.delta_max) : Json(nullptr);
  inv["catenary"] = r.betti.catenary;
  inv["presentation_cardinality"] = r.betti.presentation_cardinality;
  j["invariants"] = std::move(inv);

  j["betti"] = to_json(r.betti);

  if (!r.characterization) {
    j["characterization"] = nullptr;
    return j;
  }
  const auto& ch = *r.characterization;
  Json c;
  c["family"] = std::string(to_string(ch.family));
  c["betti_count"] = ch.betti_count;
  c["delta_max"] = ch.closed_form_delta_max;
  c["catenary"] = ch.closed_form_catenary;
  c["minimal_catenary"] = ch.minimal_catenary;
  c["witness"] = ch.witness;
  if (r.dim3) {
    Json d;
    d["c"] = r.dim3->c;
    Json rij = Json::object();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) {
        if (i != k) rij["r" + std::to_string(i + 1) + std::to_string(k + 1)] = r.dim3->r[i][k];
      }
    }
    d["r"] = std::move(rij);
    d["symmetric"] = r.dim3->symmetric;
    d["representation_unique"] = r.dim3->representation_unique;
    c["dim3"] = std::move(d);
  }
  if (r.two_betti) {
    const auto& p = *r.two_betti;
    c["two_betti"] = Json{{"a", p.a},           {"m1", p.m1},         {"m2", p.m2},
                          {"b", p.b},           {"c", p.c},           {"lambda", p.lambda_star},
                          {"delta1", p.delta1}, {"delta2", p.delta2}};
  }
  j["characterization"] = std::move(c);
  return j;
}

void write_text(std::ostream& os, const BettiReport& b) {
  os << "Betti elements: " << braces(b.betti_elements) << '\n';
  for (const auto& e : b.per_element) {
    os << "  b = " << e.element << '\n';
    os << "    Z(b):";
    for (const auto& z : e.factorizations) os << ' ' << tuple(z);
    os << "\n    L(b) = " << braces(e.length_set) << ", Delta(b) = " << braces(e.delta) << '\n';
    os << "    R-classes:";
    for (const auto& cls : e.r_classes) {
      os << " [";
      for (std::size_t i = 0; i < cls.size(); ++i) os << (i ? " " : "") << tuple(cls[i]);
      os << "]";
    }
    os << "\n    mu(b) = " << e.mu << ", cat(b) = " << e.cat << '\n';
  }
  os << "presentation cardinality: " << b.presentation_cardinality << '\n';
}

void write_text(std::ostream& os, const SemigroupReport& r) {
  os << "S = <" << join(r.generators) << ">\n";
  os << "embedding dimension: " << r.generators.size() << ", multiplicity: " << r.generators.front()
     << '\n';
  os << "Frobenius number: " << r.classical.frobenius << ", genus: " << r.classical.genus << '\n';
  os << "gaps: " << braces(r.classical.gaps) << '\n';
  os << "pseudo-Frobenius numbers: " << braces(r.classical.pseudo_frobenius) << '\n';
  os << "symmetry: " << to_string(r.classical.symmetry) << '\n';
  write_text(os, r.betti);
  if (!r.delta_set) {
    os << "S = N: every element has a unique factorization\n";
    return;
  }
  os << "Delta(S) = " << braces(*r.delta_set) << '\n';
  os << "delta_max = " << r.betti.delta_max << ", catenary = " << r.betti.catenary << '\n';
  if (r.characterization) {
    const auto& ch = *r.characterization;
    os << "characterization: " << to_string(ch.family) << ", betti_count=" << ch.betti_count
       << ", delta_max=" << ch.closed_form_delta_max << ", cat=" << ch.closed_form_catenary
       << ", minimal=" << (ch.minimal_catenary ? "true" : "false") << ", witness=" << ch.witness
       << '\n';
  }
  if (r.dim3) {
    const auto& d = *r.dim3;
    os << "c = (" << join(d.c) << "), r12=" << d.r[0][1] << " r13=" << d.r[0][2]
       << " r21=" << d.r[1][0] << " r23=" << d.r[1][2] << " r31=" << d.r[2][0]
       << " r32=" << d.r[2][1] << '\n';
  }
  if (r.two_betti) {
    const auto& p = *r.two_betti;
    os << "a=" << p.a << " m1=" << p.m1 << " m2=" << p.m2 << " b=" << p.b << " c=" << p.c
       << " lambda=" << p.lambda_star << " delta1=" << p.delta1 << " delta2=" << p.delta2 << '\n';
  }
}

}  // namespace nsg
