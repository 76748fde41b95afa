#include "dynq/cluster.hpp"

#include <algorithm>

namespace dynq {

DimVector g_vector(const QuiverMatrices& m, const DimVector& dim) {
  if (dim.size() != m.H.rows()) throw DomainError("g_vector: size mismatch");
  return -(m.H * dim);
}

DimVector coindex(const QuiverMatrices& m, const DimVector& dim) {
  if (dim.size() != m.H.rows()) throw DomainError("coindex: size mismatch");
  return -(m.H.transpose() * dim);
}

MultiPoly cc(const FTable& ft, const QuiverMatrices& m,
             const ModuleExpr& expr) {
  const int n = static_cast<int>(m.B.rows());
  std::vector<DimVector> columns;
  columns.reserve(n);
  for (int i = 0; i < n; ++i) columns.push_back(m.B.col(i));
  const MultiPoly f = ft.of_module(expr);
  const DimVector g = g_vector(m, expr.dim(ft.ar()));
  return substitute_monomials(f, columns, g);
}

std::vector<MultiPoly> cluster_variables(const FTable& ft,
                                         const QuiverMatrices& m) {
  const ARQuiver& ar = ft.ar();
  const int n = ar.quiver().size();
  std::set<MultiPoly> seen;
  std::vector<MultiPoly> out;
  auto insert = [&](MultiPoly p, const std::string& what) {
    if (!seen.insert(p).second)
      throw InternalError("duplicate cluster variable from " + what);
    out.push_back(std::move(p));
  };
  for (int i = 0; i < n; ++i)
    insert(MultiPoly::monomial(unit_vector(n, i)), "x_" + std::to_string(i));
  for (int v = 0; v < ar.size(); ++v)
    insert(cc(ft, m, ModuleExpr::indecomposable(v)), "CC" + ar.label(v));
  return out;
}

ExchangeReport verify_exchange(const FTable& ft, const QuiverMatrices& m) {
  const ARQuiver& ar = ft.ar();
  const Quiver& q = ar.quiver();
  const int n = q.size();
  ExchangeReport report;
  const MultiPoly one = MultiPoly::constant(n, 1);

  for (const auto& type : q.components())
    if (type.rank == 1)
      report.notes.push_back(
          "rank-1 component " + type.label() +
          ": B vanishes there, so CC of its simple is 2/x; the exchange "
          "relations below still hold literally");

  for (const Mesh& mesh : ar.meshes()) {
    ModuleExpr emod;
    for (int mid : mesh.middle) emod.add(mid);
    const MultiPoly lhs = cc(ft, m, ModuleExpr::indecomposable(mesh.tail)) *
                          cc(ft, m, ModuleExpr::indecomposable(mesh.head));
    const MultiPoly rhs = cc(ft, m, emod) + one;
    report.checks.push_back({"mesh",
                             ar.label(mesh.tail) + " -> E -> " +
                                 ar.label(mesh.head),
                             lhs == rhs});
  }

  for (int k = 0; k < n; ++k) {
    const MultiPoly cik =
        cc(ft, m, ModuleExpr::indecomposable(ar.injective_vertex(k)));
    MultiPoly lhs = cik * MultiPoly::monomial(unit_vector(n, k));
    MultiPoly rhs = one;
    DimVector mono = zero_vector(n);
    for (int i : q.out_neighbors(k)) mono[i] += 1;
    MultiPoly prod = MultiPoly::monomial(mono);
    for (int j : q.in_neighbors(k))
      prod = prod * cc(ft, m, ModuleExpr::indecomposable(ar.injective_vertex(j)));
    rhs += prod;
    report.checks.push_back(
        {"injective", "I_" + std::to_string(q.label(k)), lhs == rhs});
  }

  for (int v = 0; v < ar.size(); ++v) {
    if (ar.vertex(v).projective) continue;
    const DimVector& d = ar.vertex(v).dim;
    const DimVector gm = g_vector(m, d);
    const DimVector gt = g_vector(m, ar.vertex(*ar.tau(v)).dim);
    const DimVector sum = gm + gt + m.B * d;
    report.checks.push_back(
        {"g-identity", "M" + ar.label(v), (sum.array() == 0).all()});
  }
  return report;
}

}  // namespace dynq
