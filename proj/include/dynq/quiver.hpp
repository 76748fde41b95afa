#pragma once

// Dynkin quivers: validated orientations of simply-laced Dynkin diagrams
// (disjoint unions allowed), their dimension-vector lattice and the
// derived integer matrices H (Euler), C (Cartan), B (exchange) and
// Phi (Coxeter).
//
// Vertices are the user's labels, sorted ascending; all vectors and
// matrices are indexed in that order.  The isomorphism onto the
// canonical diagram numbering is computed at build time and exposed for
// serialization and for type-A interval coordinates.

#include <string>
#include <utility>
#include <vector>

#include "dynq/types.hpp"

namespace dynq {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family;
  int rank;

  std::string label() const;
  /// Number of positive roots of the root system.
  Int positive_root_count() const;
  /// Undirected edges of the diagram in canonical numbering (1-based).
  std::vector<std::pair<int, int>> diagram_edges() const;
};

DynkinType parse_dynkin_label(const std::string& label);

struct Arrow {
  int source;  // 0-based vertex index
  int target;
};

class Quiver {
 public:
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<DynkinType>& components() const { return components_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  Int label(int v) const { return labels_[v]; }
  const std::vector<Int>& labels() const { return labels_; }
  int index_of_label(Int label) const;

  int component_of(int v) const { return component_of_[v]; }
  /// Canonical diagram number of v inside its component (1-based).
  int canonical_number(int v) const { return canonical_number_[v]; }
  /// Vertex with the given canonical number in the given component.
  int vertex_at(int component, int canonical_number) const;

  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const std::vector<int>& neighbors(int v) const { return und_[v]; }

  bool is_sink(int v) const { return out_[v].empty(); }
  bool is_source(int v) const { return in_[v].empty(); }

  Quiver opposite() const;
  std::string type_string() const;
  Int positive_root_count() const;

  /// Vertex order: all sinks of Q first, i.e. a topological order of the
  /// opposite quiver.  Deterministic (ties by vertex index).
  std::vector<int> opposite_topological_order() const;

  friend Quiver build_quiver(const std::vector<DynkinType>& types,
                             const std::vector<std::pair<Int, Int>>& arrows,
                             const std::vector<Int>& declared_vertices);

 private:
  std::vector<DynkinType> components_;
  std::vector<Int> labels_;  // sorted ascending
  std::vector<Arrow> arrows_;
  std::vector<int> component_of_;
  std::vector<int> canonical_number_;
  std::vector<std::vector<int>> out_, in_, und_;
};

/// Validates the arrow list against the declared diagram types (up to
/// relabeling) and returns the quiver; rejects with the offending edge
/// or vertex named.  `declared_vertices` is only needed when isolated
/// vertices (rank-1 components) carry no arrows.
Quiver build_quiver(const std::vector<DynkinType>& types,
                    const std::vector<std::pair<Int, Int>>& arrows,
                    const std::vector<Int>& declared_vertices = {});

/// Parses the line-oriented quiver description:
///   type: D4
///   arrows: 1->4, 2->4, 3->4
/// Whitespace-insensitive; '#' starts a comment; an optional
/// `vertices:` line lists labels (required for isolated vertices);
/// disjoint unions are written `type: A2 + A3`.
Quiver parse_quiver(const std::string& text);
Quiver load_quiver_file(const std::string& path);
std::string to_quiver_text(const Quiver& q);

struct QuiverMatrices {
  IntMatrix H;    // Euler matrix: <e,d> = e^T H d
  IntMatrix C;    // Cartan matrix: column j = dim P_j, row k = dim I_k
  IntMatrix B;    // exchange matrix H - H^T
  IntMatrix Phi;  // Coxeter matrix -H^{-1} H^T
  IntMatrix PhiInv;
};

/// All derived matrices; the identities C^T H = 1, B = H - H^T and
/// Phi = -C^T H^T are verified at construction.
QuiverMatrices matrices(const Quiver& q);

Int euler_form(const Quiver& q, const DimVector& e, const DimVector& d);

/// Simple reflection at vertex i: negate the i-th coordinate and add the
/// neighbor sum.  Involutive.
DimVector reflect(const Quiver& q, int vertex, const DimVector& d);

/// Phi * d; equals dim(tau M) when d = dim M for M indecomposable
/// non-projective.
DimVector coxeter_apply(const Quiver& q, const DimVector& d);
DimVector coxeter_apply(const QuiverMatrices& m, const DimVector& d);

}  // namespace dynq
