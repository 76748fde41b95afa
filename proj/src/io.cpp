#include "dynq/io.hpp"

#include <sstream>

namespace dynq {

Json vector_json(const DimVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json poly_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coef"] = c.str();
    terms.push_back(t);
  }
  return terms;
}

Json qpoly_json(const QPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coef"] = c.str();
    terms.push_back(t);
  }
  return terms;
}

MultiPoly poly_from_json(const Json& j, int nvars) {
  MultiPoly p(nvars);
  for (const auto& t : j) {
    Exponent e;
    for (const auto& x : t.at("exp")) e.push_back(x.get<Int>());
    p.add_term(e, BigInt(t.at("coef").get<std::string>()));
  }
  return p;
}

Json quiver_json(const Quiver& q) {
  Json j;
  j["type"] = q.type_string();
  j["vertices"] = q.labels();
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({q.label(a.source), q.label(a.target)});
  j["arrows"] = arrows;
  Json canon = Json::object();
  for (int v = 0; v < q.size(); ++v)
    canon[std::to_string(q.label(v))] =
        q.components()[q.component_of(v)].label() + ":" +
        std::to_string(q.canonical_number(v));
  j["canonical_vertices"] = canon;
  return j;
}

Json ar_json(const ARQuiver& ar) {
  Json j;
  j["quiver"] = quiver_json(ar.quiver());
  Json verts = Json::array();
  for (int v = 0; v < ar.size(); ++v) {
    Json vj;
    vj["label"] = ar.label(v);
    vj["dim"] = vector_json(ar.vertex(v).dim);
    vj["projective"] = ar.vertex(v).projective;
    vj["injective"] = ar.vertex(v).injective;
    verts.push_back(vj);
  }
  j["vertices"] = verts;
  Json meshes = Json::array();
  for (const Mesh& m : ar.meshes()) {
    Json mj;
    mj["tail"] = ar.label(m.tail);
    Json mid = Json::array();
    for (int x : m.middle) mid.push_back(ar.label(x));
    mj["middle"] = mid;
    mj["head"] = ar.label(m.head);
    meshes.push_back(mj);
  }
  j["meshes"] = meshes;
  return j;
}

Json homext_json(const HomTable& t) {
  const ARQuiver& ar = t.ar();
  Json j;
  Json labels = Json::array();
  for (int v = 0; v < ar.size(); ++v) labels.push_back(ar.label(v));
  j["labels"] = labels;
  Json hom = Json::array(), ext = Json::array();
  for (int x = 0; x < ar.size(); ++x) {
    Json hrow = Json::array(), erow = Json::array();
    for (int y = 0; y < ar.size(); ++y) {
      hrow.push_back(t.hom(x, y));
      erow.push_back(t.ext(x, y));
    }
    hom.push_back(hrow);
    ext.push_back(erow);
  }
  j["hom"] = hom;
  j["ext"] = ext;
  return j;
}

std::string homext_csv(const HomTable& t) {
  const ARQuiver& ar = t.ar();
  std::ostringstream os;
  os << "x,y,hom,ext\n";
  for (int x = 0; x < ar.size(); ++x)
    for (int y = 0; y < ar.size(); ++y)
      os << ar.label(x) << "," << ar.label(y) << "," << t.hom(x, y) << ","
         << t.ext(x, y) << "\n";
  return os.str();
}

Json module_expr_json(const ARQuiver& ar, const ModuleExpr& m) {
  Json parts = Json::array();
  for (const auto& [v, mult] : m.summands()) {
    Json p;
    p["vertex"] = ar.label(v);
    p["dim"] = vector_json(ar.vertex(v).dim);
    p["mult"] = mult;
    parts.push_back(p);
  }
  return parts;
}

Json exchange_report_json(const ExchangeReport& r) {
  Json j;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["kind"] = c.kind;
    cj["relation"] = c.label;
    cj["pass"] = c.pass;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["notes"] = r.notes;
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace dynq
