#include "dynq/hom.hpp"

#include <algorithm>
#include <functional>

namespace dynq {

ModuleExpr ModuleExpr::indecomposable(int vertex, int mult) {
  ModuleExpr m;
  m.add(vertex, mult);
  return m;
}

ModuleExpr& ModuleExpr::add(int vertex, int mult) {
  if (mult < 1) throw DomainError("ModuleExpr: multiplicity must be >= 1");
  auto it = std::lower_bound(
      parts_.begin(), parts_.end(), vertex,
      [](const std::pair<int, int>& p, int v) { return p.first < v; });
  if (it != parts_.end() && it->first == vertex)
    it->second += mult;
  else
    parts_.insert(it, {vertex, mult});
  return *this;
}

int ModuleExpr::summand_count() const {
  int c = 0;
  for (const auto& [v, m] : parts_) c += m;
  return c;
}

DimVector ModuleExpr::dim(const ARQuiver& ar) const {
  DimVector d = zero_vector(ar.quiver().size());
  for (const auto& [v, m] : parts_) d += m * ar.vertex(v).dim;
  return d;
}

std::vector<int> ModuleExpr::flattened() const {
  std::vector<int> out;
  for (const auto& [v, m] : parts_)
    for (int i = 0; i < m; ++i) out.push_back(v);
  return out;
}

HomTable::HomTable(const ARQuiver& ar) : ar_(&ar) {
  const int r = ar.size();
  hom_ = IntMatrix::Zero(r, r);
  ext_ = IntMatrix::Zero(r, r);
  // [M,X]: base case [P_j, X] = (dim X)_j; across the mesh ending at M,
  // [M,X] = [E,X] - [tau M, X] + (1 if X = tau M), the correction being
  // the one-dimensional cokernel of restriction along the almost split
  // sequence.
  for (int x = 0; x < r; ++x) {
    const DimVector& dx = ar.vertex(x).dim;
    for (int m = 0; m < r; ++m) {
      if (ar.vertex(m).projective) {
        hom_(m, x) = dx[ar.vertex(m).orbit];
      } else {
        const Mesh& mesh = ar.mesh_of(m);
        Int v = -hom_(mesh.tail, x);
        for (int mid : mesh.middle) v += hom_(mid, x);
        if (x == mesh.tail) v += 1;
        hom_(m, x) = v;
      }
      if (hom_(m, x) < 0)
        throw InternalError("hom recursion produced a negative dimension");
      ext_(m, x) = hom_(m, x) - euler_form(ar.quiver(), ar.vertex(m).dim, dx);
      if (ext_(m, x) < 0)
        throw InternalError("negative Ext dimension; hom table is wrong");
    }
  }
}

Int HomTable::hom(const ModuleExpr& x, const ModuleExpr& y) const {
  Int s = 0;
  for (const auto& [vx, mx] : x.summands())
    for (const auto& [vy, my] : y.summands())
      s += static_cast<Int>(mx) * my * hom_(vx, vy);
  return s;
}

Int HomTable::ext(const ModuleExpr& x, const ModuleExpr& y) const {
  Int s = 0;
  for (const auto& [vx, mx] : x.summands())
    for (const auto& [vy, my] : y.summands())
      s += static_cast<Int>(mx) * my * ext_(vx, vy);
  return s;
}

bool degeneration_leq(const HomTable& t, const ModuleExpr& m,
                      const ModuleExpr& n) {
  const ARQuiver& ar = t.ar();
  if (!eq(m.dim(ar), n.dim(ar)))
    throw DomainError("degeneration_leq: dimension vectors differ");
  for (int x = 0; x < ar.size(); ++x) {
    const ModuleExpr xe = ModuleExpr::indecomposable(x);
    if (t.hom(xe, m) > t.hom(xe, n)) return false;
  }
  return true;
}

bool degeneration_leq_dual(const HomTable& t, const ModuleExpr& m,
                           const ModuleExpr& n) {
  const ARQuiver& ar = t.ar();
  if (!eq(m.dim(ar), n.dim(ar)))
    throw DomainError("degeneration_leq: dimension vectors differ");
  for (int x = 0; x < ar.size(); ++x) {
    const ModuleExpr xe = ModuleExpr::indecomposable(x);
    if (t.hom(m, xe) > t.hom(n, xe)) return false;
  }
  return true;
}

ModuleExpr generic_decomposition(const HomTable& t, const DimVector& d) {
  const ARQuiver& ar = t.ar();
  if (d.size() != ar.quiver().size())
    throw DomainError("generic_decomposition: vector size mismatch");
  if (!nonneg(d))
    throw DomainError("generic_decomposition: negative dimension vector");

  // Backtracking over roots in decreasing AR order under the
  // pairwise-Ext-zero constraint; the rigid module is unique, so the
  // first decomposition found is the answer.
  const int r = ar.size();
  std::vector<int> chosen;  // vertex ids, each may repeat
  std::vector<int> result;
  DimVector rem = d;

  std::function<bool(int)> dfs = [&](int idx) -> bool {
    if (rem.sum() == 0) {
      result = chosen;
      return true;
    }
    if (idx < 0) return false;
    const DimVector& root = ar.vertex(idx).dim;
    int maxmult = 0;
    if (leq(root, rem)) {
      maxmult = 1 << 30;
      for (Eigen::Index i = 0; i < rem.size(); ++i)
        if (root[i] > 0)
          maxmult = std::min<int>(maxmult, static_cast<int>(rem[i] / root[i]));
    }
    bool compatible = true;
    for (int c : chosen) {
      if (t.ext(idx, c) != 0 || t.ext(c, idx) != 0) {
        compatible = false;
        break;
      }
    }
    if (!compatible || maxmult == 0) return dfs(idx - 1);
    for (int mult = maxmult; mult >= 0; --mult) {
      for (int i = 0; i < mult; ++i) chosen.push_back(idx);
      rem -= mult * root;
      if (dfs(idx - 1)) return true;
      rem += mult * root;
      chosen.resize(chosen.size() - mult);
    }
    return false;
  };
  if (!dfs(r - 1))
    throw InternalError("generic_decomposition: no rigid decomposition of " +
                        format_vector(d));

  ModuleExpr out;
  for (int v : result) out.add(v);
  // Post-hoc rigidity certificate.
  if (t.ext(out, out) != 0)
    throw InternalError("generic_decomposition: result is not rigid");
  if (!eq(out.dim(ar), d))
    throw InternalError("generic_decomposition: wrong total dimension");
  return out;
}

bool grassmannian_nonempty(const HomTable& t, const DimVector& e,
                           const DimVector& d) {
  if (!nonneg(e) || !leq(e, d))
    throw DomainError("grassmannian_nonempty requires 0 <= e <= d");
  const ModuleExpr sub = generic_decomposition(t, e);
  const ModuleExpr quot = generic_decomposition(t, DimVector(d - e));
  return t.ext(sub, quot) == 0;
}

std::optional<Int> generic_min_dimension(const HomTable& t, const DimVector& e,
                                         const DimVector& d) {
  if (!grassmannian_nonempty(t, e, d)) return std::nullopt;
  return euler_form(t.ar().quiver(), e, DimVector(d - e));
}

Int stratum_dimension(const HomTable& t, const ModuleExpr& n,
                      const ModuleExpr& m) {
  const ARQuiver& ar = t.ar();
  if (!leq(n.dim(ar), m.dim(ar)))
    throw DomainError("stratum_dimension requires dim N <= dim M");
  return t.hom(n, m) - t.hom(n, n);
}

}  // namespace dynq
