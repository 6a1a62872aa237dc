#include "sympair/json_io.hpp"

#include <set>
#include <stdexcept>

namespace sympair {

void require_schema(const Json& j) {
  if (j.is_object() && j.contains("schema") && j["schema"] != 1)
    throw std::invalid_argument("unsupported schema version");
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return rational_str(s.rational_part());
  Json j;
  j["a"] = rational_str(s.rational_part());
  j["b"] = rational_str(s.radical_part());
  j["d"] = s.radicand();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_object()) {
    Rational a = j.contains("a") ? parse_rational(j["a"].get<std::string>()) : Rational(0);
    Rational b = j.contains("b") ? parse_rational(j["b"].get<std::string>()) : Rational(0);
    unsigned long d = j.contains("d") ? j["d"].get<unsigned long>() : 0;
    return Scalar(a, b, d);
  }
  throw std::invalid_argument("scalar literal must be a string or {a,b,d} object");
}

Json form_to_json(const ExteriorForm& f) {
  Json j;
  j["dim"] = f.dim();
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["idx"] = indices_of(m);
    t["c"] = scalar_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = std::move(terms);
  return j;
}

ExteriorForm form_from_json(const Json& j) {
  require_schema(j);
  if (!j.is_object() || !j.contains("dim") || !j.contains("degree"))
    throw std::invalid_argument("form literal needs dim and degree");
  ExteriorForm f(j["dim"].get<int>(), j["degree"].get<int>());
  for (const auto& t : j.value("terms", Json::array())) {
    std::vector<int> idx = t.at("idx").get<std::vector<int>>();
    if (static_cast<int>(idx.size()) != f.degree())
      throw std::invalid_argument("form term arity does not match degree");
    for (int i : idx)
      if (i < 1 || i > f.dim()) throw std::invalid_argument("form term index out of range");
    f.add_term(mask_of(idx), scalar_from_json(t.at("c")));
  }
  return f;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json j;
  j["schema"] = 1;
  j["dim"] = g.dim();
  if (!g.name().empty()) j["name"] = g.name();
  Json brackets = Json::array();
  for (int i = 1; i <= g.dim(); ++i) {
    for (int k = i + 1; k <= g.dim(); ++k) {
      VecX v = g.bracket_basis(i, k);
      Json out = Json::object();
      for (int t = 1; t <= g.dim(); ++t)
        if (!v(t - 1).is_zero()) out[std::to_string(t)] = scalar_to_json(v(t - 1));
      if (!out.empty()) brackets.push_back(Json{{"i", i}, {"j", k}, {"out", std::move(out)}});
    }
  }
  j["brackets"] = std::move(brackets);
  return j;
}

LieAlgebra algebra_from_json(const Json& j) {
  require_schema(j);
  if (!j.is_object()) throw std::invalid_argument("algebra literal must be an object");
  if (j.contains("catalog")) {
    std::vector<Rational> params;
    for (const auto& p : j.value("params", Json::array()))
      params.push_back(parse_rational(p.get<std::string>()));
    return catalog_get(j["catalog"].get<std::string>(), params).algebra;
  }
  if (!j.contains("dim")) throw std::invalid_argument("algebra literal needs dim");
  LieAlgebra g(j["dim"].get<int>(), j.value("name", std::string()));
  std::set<std::pair<int, int>> seen;
  for (const auto& b : j.value("brackets", Json::array())) {
    int i = b.at("i").get<int>();
    int k = b.at("j").get<int>();
    if (i == k) throw std::invalid_argument("bracket with equal indices");
    auto key = std::minmax(i, k);
    if (!seen.insert({key.first, key.second}).second)
      throw std::invalid_argument("bracket pair given twice");
    VecX v(g.dim());
    v.setConstant(Scalar(0));
    for (const auto& [idx, val] : b.at("out").items()) {
      int t = std::stoi(idx);
      if (t < 1 || t > g.dim()) throw std::invalid_argument("bracket output index out of range");
      v(t - 1) = scalar_from_json(val);
    }
    g.set_bracket(i, k, v);
  }
  return g;
}

Json report_to_json(const PairReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["dim"] = r.dim;
  if (r.k >= 0) j["k"] = r.k;
  if (r.l >= 0) j["l"] = r.l;
  j["verdict"] = r.verdict;
  Json axioms = Json::array();
  for (const auto& a : r.axioms) {
    Json e;
    e["name"] = a.name;
    e["pass"] = a.pass;
    if (!a.detail.empty()) e["detail"] = a.detail;
    axioms.push_back(e);
  }
  j["axioms"] = std::move(axioms);
  j["notes"] = r.notes;
  return j;
}

Json jacobi_to_json(const JacobiReport& r) {
  Json j;
  j["ok"] = r.ok;
  if (!r.ok) {
    j["triple"] = {r.i, r.j, r.k};
    Json res = Json::array();
    for (Eigen::Index t = 0; t < r.residual.size(); ++t) res.push_back(scalar_to_json(r.residual(t)));
    j["residual"] = std::move(res);
  }
  return j;
}

Json gram_to_json(const WedgeGram& g) {
  Json j;
  Json basis = Json::array();
  for (const auto& f : g.basis) basis.push_back(form_to_json(f));
  j["basis"] = std::move(basis);
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < g.gram.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < g.gram.cols(); ++c) row.push_back(scalar_to_json(g.gram(r, c)));
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  j["volume"] = form_to_json(g.volume);
  return j;
}

Json signature_to_json(const SignatureResult& s) {
  return Json::array({s.positive, s.negative, s.zero});
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["c"] = rational_str(c);
    terms.push_back(t);
  }
  return Json{{"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j, int nvars) {
  Poly p(nvars);
  for (const auto& t : j.value("terms", Json::array())) {
    std::vector<int> e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("polynomial exponent tuple has wrong length");
    p.add_term(e, parse_rational(t.at("c").get<std::string>()));
  }
  return p;
}

Json polyform_to_json(const PolyForm& f) {
  Json j;
  j["dim"] = f.dim();
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["idx"] = indices_of(m);
    t["c"] = poly_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = std::move(terms);
  return j;
}

PolyForm polyform_from_json(const Json& j) {
  require_schema(j);
  if (!j.contains("dim") || !j.contains("degree"))
    throw std::invalid_argument("polynomial form needs dim and degree");
  PolyForm f(j["dim"].get<int>(), j["degree"].get<int>());
  for (const auto& t : j.value("terms", Json::array())) {
    std::vector<int> idx = t.at("idx").get<std::vector<int>>();
    f.add_term(mask_of(idx), poly_from_json(t.at("c"), f.dim()));
  }
  return f;
}

Json polymap_to_json(const PolyMap& m) {
  Json comps = Json::array();
  for (const auto& c : m.components) comps.push_back(poly_to_json(c));
  return Json{{"source_dim", m.source_dim}, {"target_dim", m.target_dim}, {"components", std::move(comps)}};
}

PolyMap polymap_from_json(const Json& j) {
  PolyMap m;
  m.source_dim = j.at("source_dim").get<int>();
  m.target_dim = j.at("target_dim").get<int>();
  for (const auto& c : j.at("components")) m.components.push_back(poly_from_json(c, m.source_dim));
  if (static_cast<int>(m.components.size()) != m.target_dim)
    throw std::invalid_argument("polynomial map needs one component per target coordinate");
  return m;
}

Json descriptor_to_json(const PairedManifoldDescriptor& d) {
  Json leaves = Json::array();
  for (const auto& l : d.leaves) {
    leaves.push_back(Json{{"genus", l.genus},
                          {"area", scalar_to_json(l.area)},
                          {"trivial_normal_bundle", l.trivial_normal_bundle},
                          {"product_neighbourhood", l.product_neighbourhood}});
  }
  return Json{{"chi", d.euler_characteristic},
              {"sigma", d.signature},
              {"p1_tf", d.p1_tangent_first},
              {"p1_tg", d.p1_tangent_second},
              {"leaves", std::move(leaves)}};
}

PairedManifoldDescriptor descriptor_from_json(const Json& j) {
  require_schema(j);
  PairedManifoldDescriptor d;
  d.euler_characteristic = j.at("chi").get<long>();
  d.signature = j.at("sigma").get<long>();
  d.p1_tangent_first = j.at("p1_tf").get<long>();
  d.p1_tangent_second = j.at("p1_tg").get<long>();
  for (const auto& l : j.value("leaves", Json::array())) {
    LeafData leaf;
    leaf.genus = l.at("genus").get<int>();
    leaf.area = scalar_from_json(l.at("area"));
    leaf.trivial_normal_bundle = l.value("trivial_normal_bundle", false);
    leaf.product_neighbourhood = l.value("product_neighbourhood", false);
    if (leaf.genus < 0) throw std::invalid_argument("leaf genus must be non-negative");
    if (leaf.area.sign() <= 0) throw std::invalid_argument("leaf area must be positive");
    d.leaves.push_back(std::move(leaf));
  }
  return d;
}

Json bundle_class_to_json(const BundleClass& c) {
  Json j;
  j["row"] = std::string(1, c.row);
  j["b1"] = c.b1;
  j["geometry"] = c.geometry;
  j["verified_by"] = c.coordinate_route ? "coordinate-forms" : "invariant-forms";
  return j;
}

}  // namespace sympair
