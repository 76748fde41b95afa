#pragma once

// g-vectors, coindices, the Caldero-Chapoton map into Laurent
// polynomials, cluster-variable enumeration, and machine verification
// of the primitive exchange relations.

#include <set>
#include <string>
#include <vector>

#include "dynq/grassmann.hpp"

namespace dynq {

/// g_M = -H dim M (coordinates of -[M] in the injective basis);
/// additive over direct sums.
DimVector g_vector(const QuiverMatrices& m, const DimVector& dim);

/// Coindex g^M = -H^T dim M; g_{tau M} = -g^M for non-projectives.
DimVector coindex(const QuiverMatrices& m, const DimVector& dim);

/// CC(M) = F_M(x^{B^1},...,x^{B^n}) x^{g_M}, a Laurent polynomial in
/// the initial cluster variables; multiplicative over direct sums.
MultiPoly cc(const FTable& ft, const QuiverMatrices& m, const ModuleExpr& expr);

/// {CC(M) : M indecomposable} together with the initial variables x_i;
/// cardinality (#positive roots) + n, duplicates abort.
std::vector<MultiPoly> cluster_variables(const FTable& ft,
                                         const QuiverMatrices& m);

struct ExchangeCheck {
  std::string kind;   // "mesh" | "injective" | "g-identity"
  std::string label;  // which mesh / vertex / module
  bool pass;
};

struct ExchangeReport {
  std::vector<ExchangeCheck> checks;
  std::vector<std::string> notes;  // e.g. rank-1 component flags
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Exact verification of CC(tau M) CC(M) = CC(E) + 1 for every mesh, of
/// CC(I_k) x_k = (prod_{k->i} x_i)(prod_{j->k} CC(I_j)) + 1 for every
/// vertex, and of g_M + g_{tau M} + B dim M = 0 for every non-projective
/// indecomposable.
ExchangeReport verify_exchange(const FTable& ft, const QuiverMatrices& m);

}  // namespace dynq
