#pragma once

// Exact Hom/Ext dimension tables over the AR quiver, the degeneration
// order, generic (rigid) decompositions, and the quiver-Grassmannian
// non-emptiness and minimal-dimension predicates.

#include <optional>
#include <vector>

#include "dynq/ar_quiver.hpp"

namespace dynq {

/// Finite direct sum of indecomposables: (vertex id, multiplicity >= 1)
/// pairs, kept sorted by id with multiplicities merged.
class ModuleExpr {
 public:
  ModuleExpr() = default;
  static ModuleExpr indecomposable(int vertex, int mult = 1);
  static ModuleExpr zero() { return ModuleExpr(); }

  ModuleExpr& add(int vertex, int mult = 1);
  const std::vector<std::pair<int, int>>& summands() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  int summand_count() const;  // with multiplicity

  DimVector dim(const ARQuiver& ar) const;
  /// Summands as a flat list, multiplicities expanded.
  std::vector<int> flattened() const;

 private:
  std::vector<std::pair<int, int>> parts_;
};

/// Hom/Ext dimension table over all indecomposable pairs, knitted
/// forward along the AR order from [P_j, X] = (dim X)_j and computed
/// eagerly at construction; lookups are pure.
class HomTable {
 public:
  explicit HomTable(const ARQuiver& ar);

  const ARQuiver& ar() const { return *ar_; }

  Int hom(int x, int y) const { return hom_(x, y); }
  Int ext(int x, int y) const { return ext_(x, y); }
  Int hom(const ModuleExpr& x, const ModuleExpr& y) const;
  Int ext(const ModuleExpr& x, const ModuleExpr& y) const;

 private:
  const ARQuiver* ar_;
  IntMatrix hom_, ext_;
};

/// [X,m] <= [X,n] for every indecomposable X; requires dim m = dim n.
bool degeneration_leq(const HomTable& t, const ModuleExpr& m,
                      const ModuleExpr& n);
/// The dual test [m,X] <= [n,X]; equivalent, used as a cross-check.
bool degeneration_leq_dual(const HomTable& t, const ModuleExpr& m,
                           const ModuleExpr& n);

/// The unique multiset of positive roots summing to d whose summands
/// have pairwise vanishing Ext^1 (the summand structure of the generic
/// module of dimension vector d).  Certified rigid before returning.
ModuleExpr generic_decomposition(const HomTable& t, const DimVector& d);

/// Non-emptiness of Gr_e(generic module of dim d):
/// Ext^1(M~_e, M~_{d-e}) = 0.  Requires 0 <= e <= d.
bool grassmannian_nonempty(const HomTable& t, const DimVector& e,
                           const DimVector& d);

/// <e, d-e> when the generic quiver Grassmannian is non-empty.
std::optional<Int> generic_min_dimension(const HomTable& t, const DimVector& e,
                                         const DimVector& d);

/// dim of the subrepresentation-type stratum: [N,M] - [N,N].
/// Meaningful when N embeds into M; exposed as a diagnostic.
Int stratum_dimension(const HomTable& t, const ModuleExpr& n,
                      const ModuleExpr& m);

}  // namespace dynq
