#pragma once

// F-polynomials, Euler characteristics and Poincare polynomials of
// quiver Grassmannians, computed by the almost-split-sequence
// recursions over the knitted AR quiver:
//
//   F_M * F_{tau M} = F_E + y^{dim M}            (meshes, exact division)
//   P_{Gr_e(N1 + N2)}(q)
//     = sum_{f+g=e} q^{2<f, dim N2 - g>} P_{Gr_f(N1)} P_{Gr_g(N2)}
//
// the latter solved for P_{Gr_e(M)} along each mesh.

#include <map>
#include <mutex>

#include "dynq/hom.hpp"
#include "dynq/polynomial.hpp"

namespace dynq {

/// F-polynomial of a projective vertex: the support of a thin projective
/// carries one subrepresentation per successor-closed subset.
MultiPoly f_poly_projective(const ARQuiver& ar, int vertex);

/// F-polynomials of every indecomposable, computed in AR order; every
/// division is exact or the construction aborts.
class FTable {
 public:
  explicit FTable(const ARQuiver& ar);

  const ARQuiver& ar() const { return *ar_; }
  const MultiPoly& of_vertex(int id) const { return table_[id]; }
  /// Product over summands (F is multiplicative in direct sums).
  MultiPoly of_module(const ModuleExpr& m) const;

 private:
  const ARQuiver* ar_;
  std::vector<MultiPoly> table_;
};

/// chi(Gr_e(m)): coefficient of y^e in the F-polynomial of m; aborts on
/// a negative value (positivity is a theorem here).
BigInt euler_char(const FTable& ft, const ModuleExpr& m, const DimVector& e);

/// Poincare polynomials of quiver Grassmannians of indecomposables and
/// of direct sums of them.  Per-indecomposable values are memoized; the
/// zero polynomial encodes an empty Grassmannian.  Intermediate values
/// are Laurent; finished entries are checked to be honest polynomials in
/// q^2 with non-negative coefficients.
class PoincareTable {
 public:
  PoincareTable(const ARQuiver& ar, const FTable& ft);

  const ARQuiver& ar() const { return *ar_; }

  /// P_{Gr_e(M)} for the indecomposable at `vertex`; zero when empty or
  /// e is out of range.
  const QPoly& of_vertex(int vertex, const DimVector& e) const;

  /// P_{Gr_e(m)} for a direct sum, via the two-summand product formula.
  /// The pair {M, tau M} at e = dim M is the point Grassmannian and is
  /// special-cased before the product formula.  Requires 0 <= e <= dim m.
  QPoly of_module(const ModuleExpr& m, const DimVector& e) const;

 private:
  using Memo = std::map<DimVector, QPoly, DimLexLess>;
  QPoly sum_poincare(const std::vector<int>& parts, std::size_t from,
                     const DimVector& e, std::vector<Memo>* suffix_memo) const;
  void validate(const QPoly& p, const std::string& what) const;

  const ARQuiver* ar_;
  const FTable* ft_;
  mutable std::recursive_mutex mu_;  // memoization guard for concurrent reads
  mutable std::vector<Memo> memo_;                    // per vertex
  mutable std::vector<std::vector<Memo>> mesh_memo_;  // per head, per suffix
};

/// chi(Gr_e(M)) = chi(Gr_{d-e}(DM)) under the duality onto the opposite
/// quiver; DM is the module over ft_op's quiver with the same summand
/// dimension vectors.
bool check_duality(const FTable& ft, const FTable& ft_op, const ModuleExpr& m,
                   const DimVector& e);

}  // namespace dynq
