#include "dynq/grassmann.hpp"

#include <algorithm>

namespace dynq {

MultiPoly f_poly_projective(const ARQuiver& ar, int vertex) {
  const ARVertex& v = ar.vertex(vertex);
  if (!v.projective)
    throw DomainError("f_poly_projective: " + ar.label(vertex) +
                      " is not projective");
  const Quiver& q = ar.quiver();
  const int n = q.size();
  std::vector<int> supp;
  for (int i = 0; i < n; ++i) {
    if (v.dim[i] == 1) supp.push_back(i);
    else if (v.dim[i] != 0)
      throw InternalError("projective is not thin");
  }
  std::vector<std::pair<int, int>> inner;  // arrows inside the support
  for (const Arrow& a : q.arrows()) {
    int s = -1, t = -1;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (supp[i] == a.source) s = static_cast<int>(i);
      if (supp[i] == a.target) t = static_cast<int>(i);
    }
    if (s >= 0 && t >= 0) inner.emplace_back(s, t);
  }
  MultiPoly f(n);
  const std::size_t s = supp.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    bool closed = true;
    for (auto [a, b] : inner) {
      if ((mask >> a & 1) && !(mask >> b & 1)) {
        closed = false;
        break;
      }
    }
    if (!closed) continue;
    Exponent e(n, 0);
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1) e[supp[i]] = 1;
    f.add_term(e, 1);
  }
  return f;
}

FTable::FTable(const ARQuiver& ar) : ar_(&ar) {
  table_.reserve(ar.size());
  for (int v = 0; v < ar.size(); ++v) {
    if (ar.vertex(v).projective) {
      table_.push_back(f_poly_projective(ar, v));
    } else {
      const Mesh& mesh = ar.mesh_of(v);
      MultiPoly fe = MultiPoly::constant(ar.quiver().size(), 1);
      for (int mid : mesh.middle) fe = fe * table_[mid];
      MultiPoly num = fe + MultiPoly::monomial(ar.vertex(v).dim);
      table_.push_back(exact_divide(num, table_[mesh.tail]));
    }
    const MultiPoly& f = table_.back();
    if (f.coeff(zero_vector(ar.quiver().size())) != 1 ||
        f.coeff(ar.vertex(v).dim) != 1)
      throw InternalError("F-polynomial of " + ar.label(v) +
                          " has wrong extreme terms");
    for (const auto& [e, c] : f.terms())
      if (c < 0)
        throw InternalError("negative coefficient in F-polynomial of " +
                            ar.label(v));
  }
}

MultiPoly FTable::of_module(const ModuleExpr& m) const {
  MultiPoly f = MultiPoly::constant(ar_->quiver().size(), 1);
  for (const auto& [v, mult] : m.summands())
    for (int i = 0; i < mult; ++i) f = f * table_[v];
  return f;
}

BigInt euler_char(const FTable& ft, const ModuleExpr& m, const DimVector& e) {
  BigInt chi = ft.of_module(m).coeff(e);
  if (chi < 0) throw InternalError("negative Euler characteristic");
  return chi;
}

PoincareTable::PoincareTable(const ARQuiver& ar, const FTable& ft)
    : ar_(&ar), ft_(&ft) {
  memo_.resize(ar.size());
  mesh_memo_.resize(ar.size());
}

void PoincareTable::validate(const QPoly& p, const std::string& what) const {
  if (p.is_zero()) return;
  if (!p.is_polynomial())
    throw InternalError("Poincare polynomial of " + what +
                        " has negative exponents: " + p.to_string());
  if (!p.even_exponents_only())
    throw InternalError("Poincare polynomial of " + what +
                        " has odd exponents: " + p.to_string());
  if (!p.nonnegative_coefficients())
    throw InternalError("Poincare polynomial of " + what +
                        " has negative coefficients: " + p.to_string());
}

const QPoly& PoincareTable::of_vertex(int vertex, const DimVector& e) const {
  static const QPoly kZero;
  const std::lock_guard<std::recursive_mutex> lock(mu_);
  const ARVertex& v = ar_->vertex(vertex);
  if (!nonneg(e) || !leq(e, v.dim)) return kZero;
  auto it = memo_[vertex].find(e);
  if (it != memo_[vertex].end()) return it->second;

  QPoly result;
  if (e.sum() == 0 || eq(e, v.dim)) {
    result = QPoly::constant(1);
  } else if (v.projective) {
    // Non-empty Grassmannians of a thin projective are points.
    result = QPoly();
    BigInt chi = ft_->of_vertex(vertex).coeff(e);
    if (chi != 0) result = QPoly::constant(chi);
  } else {
    const Mesh& mesh = ar_->mesh_of(vertex);
    const DimVector& dim_tau = ar_->vertex(mesh.tail).dim;
    if (mesh_memo_[vertex].empty())
      mesh_memo_[vertex].resize(mesh.middle.size() + 1);
    QPoly acc = sum_poincare(mesh.middle, 0, e, &mesh_memo_[vertex]);
    // Solve P_{Gr_e(E)} = q^{2<e,dim tau M>} P_{Gr_e(M)}
    //   + sum_{f+g=e, f != e} q^{2<f, dim tau M - g>} P_{Gr_f(M)} P_{Gr_g(tau M)}
    // for P_{Gr_e(M)}; smaller f are available by induction on |e|.
    DimVector fbound = e.cwiseMin(v.dim);
    for_each_subvector(fbound, [&](const DimVector& f) {
      if (eq(f, e)) return;
      DimVector g = e - f;
      if (!leq(g, dim_tau)) return;
      const QPoly& pf = of_vertex(vertex, f);
      if (pf.is_zero()) return;
      const QPoly& pg = of_vertex(mesh.tail, g);
      if (pg.is_zero()) return;
      const Int w = ar_->euler(f, DimVector(dim_tau - g));
      acc -= (pf * pg).shifted(2 * w);
    });
    result = acc.shifted(-2 * ar_->euler(e, dim_tau));
    validate(result, "Gr_" + format_vector(e) + ar_->label(vertex));
  }
  return memo_[vertex].emplace(e, std::move(result)).first->second;
}

QPoly PoincareTable::sum_poincare(const std::vector<int>& parts,
                                  std::size_t from, const DimVector& e,
                                  std::vector<Memo>* suffix_memo) const {
  if (from == parts.size())
    return e.sum() == 0 ? QPoly::constant(1) : QPoly();
  if (from + 1 == parts.size()) return of_vertex(parts[from], e);
  if (suffix_memo) {
    auto it = (*suffix_memo)[from].find(e);
    if (it != (*suffix_memo)[from].end()) return it->second;
  }
  DimVector rest_dim = zero_vector(ar_->quiver().size());
  for (std::size_t i = from + 1; i < parts.size(); ++i)
    rest_dim += ar_->vertex(parts[i]).dim;
  const DimVector& head_dim = ar_->vertex(parts[from]).dim;

  QPoly acc;
  DimVector fbound = e.cwiseMin(head_dim);
  for_each_subvector(fbound, [&](const DimVector& f) {
    DimVector g = e - f;
    if (!leq(g, rest_dim)) return;
    const QPoly& pf = of_vertex(parts[from], f);
    if (pf.is_zero()) return;
    QPoly pg = sum_poincare(parts, from + 1, g, suffix_memo);
    if (pg.is_zero()) return;
    const Int w = ar_->euler(f, DimVector(rest_dim - g));
    acc += (pf * pg).shifted(2 * w);
  });
  if (suffix_memo) (*suffix_memo)[from].emplace(e, acc);
  return acc;
}

QPoly PoincareTable::of_module(const ModuleExpr& m, const DimVector& e) const {
  const std::lock_guard<std::recursive_mutex> lock(mu_);
  const DimVector d = m.dim(*ar_);
  if (e.size() != d.size())
    throw DomainError("poincare: vector size mismatch");
  if (!nonneg(e) || !leq(e, d))
    throw DomainError("poincare requires 0 <= e <= dim m");
  if (m.is_zero()) return QPoly::constant(1);

  std::vector<int> parts = m.flattened();
  if (parts.size() == 1) return of_vertex(parts[0], e);

  if (parts.size() == 2) {
    // Mesh pair {M, tau M}: Gr_{dim M}(M + tau M) is a reduced point;
    // for all other e the pair behaves like the rigid middle term and
    // the product formula applies (with M first).
    for (int swap = 0; swap < 2; ++swap) {
      const int head = parts[swap], tail = parts[1 - swap];
      auto t = ar_->tau(head);
      if (t && *t == tail) {
        if (eq(e, ar_->vertex(head).dim)) return QPoly::constant(1);
        std::vector<int> ordered{head, tail};
        QPoly p = sum_poincare(ordered, 0, e, nullptr);
        validate(p, "Gr_" + format_vector(e) + "(mesh pair)");
        return p;
      }
    }
  }

  QPoly p = sum_poincare(parts, 0, e, nullptr);
  validate(p, "Gr_" + format_vector(e) + "(direct sum)");
  return p;
}

bool check_duality(const FTable& ft, const FTable& ft_op, const ModuleExpr& m,
                   const DimVector& e) {
  const ARQuiver& ar = ft.ar();
  const ARQuiver& ar_op = ft_op.ar();
  ModuleExpr dual;
  for (const auto& [v, mult] : m.summands())
    dual.add(ar_op.vertex_by_dim(ar.vertex(v).dim), mult);
  const DimVector d = m.dim(ar);
  return euler_char(ft, m, e) == euler_char(ft_op, dual, DimVector(d - e));
}

}  // namespace dynq
