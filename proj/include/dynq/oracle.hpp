#pragma once

// Independent brute-force validation layer: explicit matrix
// representations, Hom-space dimensions as kernels of Phi^M_N, and
// finite-field subrepresentation counting with exact interpolation.
// Everything here is deliberately direct; nothing reuses the AR-quiver
// recursions it is meant to check.

#include <optional>
#include <string>
#include <vector>

#include "dynq/hom.hpp"
#include "dynq/polynomial.hpp"
#include "dynq/quiver.hpp"

namespace dynq {

/// A concrete representation: one integer matrix per arrow, of shape
/// d_{t(a)} x d_{s(a)}.  `prime` = 0 means exact rational arithmetic;
/// otherwise entries are read modulo the prime.
struct ExplicitRep {
  Quiver quiver;
  Int prime = 0;
  DimVector dims;
  std::vector<IntMatrix> maps;  // aligned with quiver.arrows()

  void validate() const;
};

/// Indecomposable of a type-A quiver supported on the canonical diagram
/// interval [a, b] (1-based), with identity maps inside the support.
ExplicitRep interval_module(const Quiver& q, int a, int b, Int prime = 0);

ExplicitRep direct_sum(const ExplicitRep& r1, const ExplicitRep& r2);

/// Explicit model of the generic module of dimension vector d over a
/// type-A quiver: the direct sum of the interval modules named by the
/// generic decomposition.
ExplicitRep generic_rep_type_a(const HomTable& t, const DimVector& d,
                               Int prime = 0);

/// dim Hom_Q(N, M) as the nullity of
///   Phi^M_N : (f_i) -> (M_a f_{s(a)} - f_{t(a)} N_a),
/// computed by exact elimination (mod p, or fraction-free over Z).
Int hom_space_dim(const ExplicitRep& n, const ExplicitRep& m);

/// dim Ext^1_Q(N, M) as the corank of the same map.
Int ext_space_dim(const ExplicitRep& n, const ExplicitRep& m);

/// Counting refused because the search space exceeds the budget.
class BudgetExceeded : public DomainError {
 public:
  explicit BudgetExceeded(const std::string& what) : DomainError(what) {}
};

/// Number of subrepresentations of dimension vector e of m over F_p:
/// tuples of subspaces closed under all arrow maps, enumerated via
/// reduced-echelon pivot patterns per vertex with early pruning.
BigInt count_subreps(const ExplicitRep& m, const DimVector& e, Int p,
                     BigInt budget = BigInt(20'000'000));

struct CountInterpolation {
  bool polynomial = false;  // counts fit a polynomial within the bound
  QPoly poly;               // meaningful only when polynomial
  std::string note;         // diagnostic otherwise
};

/// Unique interpolating polynomial of degree <= degree_bound through the
/// (prime, count) points; needs degree_bound + 1 points, further points
/// are verification.  Non-integer coefficients or a mismatch are
/// reported as a diagnostic, never as a crash.
CountInterpolation interpolate_count(
    const std::vector<std::pair<Int, BigInt>>& counts, int degree_bound);

/// Fixture I/O: JSON {quiver, prime, dims, maps} with row-major arrays.
ExplicitRep load_rep_file(const std::string& path);
ExplicitRep parse_rep_json(const std::string& text);
std::string to_rep_json(const ExplicitRep& rep);

}  // namespace dynq
