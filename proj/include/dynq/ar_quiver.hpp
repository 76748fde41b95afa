#pragma once

// Knitting of the Auslander-Reiten quiver of a Dynkin quiver: the full
// set of indecomposables M(i;k), the translation tau, the almost split
// sequences (meshes), and the inductive total order every downstream
// recursion iterates in.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynq/quiver.hpp"

namespace dynq {

struct ARVertex {
  int orbit;       // Q-vertex index i of the tau-orbit of P_i
  int slice;       // k: this module is tau^{-k} P_orbit
  DimVector dim;   // a positive root
  bool projective; // slice == 0
  bool injective;  // last slice of its orbit
};

/// Almost split sequence 0 -> tail -> (+) middle -> head -> 0, stored by
/// vertex ids; dim(tail) + dim(head) = sum of middle dims.
struct Mesh {
  int tail;
  std::vector<int> middle;
  int head;
};

class ARQuiver {
 public:
  explicit ARQuiver(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  const QuiverMatrices& mats() const { return mats_; }

  int size() const { return static_cast<int>(verts_.size()); }
  /// Vertices in the inductive total order (slice-major; within a slice
  /// a topological order of Q^op).  Tail and middle of every mesh
  /// precede its head.
  const ARVertex& vertex(int id) const { return verts_[id]; }
  const std::vector<ARVertex>& vertices() const { return verts_; }

  const std::vector<Mesh>& meshes() const { return meshes_; }
  /// The unique mesh ending at `head`; error if head is projective.
  const Mesh& mesh_of(int head) const;

  /// Vertex with the given dimension vector; error if not a positive root.
  int vertex_by_dim(const DimVector& d) const;
  bool is_root(const DimVector& d) const;

  std::optional<int> tau(int id) const;
  std::optional<int> tau_inverse(int id) const;

  /// Id of the projective P_i / injective I_i given the Q-vertex i.
  int projective_vertex(int q_vertex) const { return proj_of_orbit_[q_vertex]; }
  int injective_vertex(int q_vertex) const;

  std::string label(int id) const;  // "(i;k)" with the user vertex label

  Int euler(const DimVector& e, const DimVector& d) const {
    return euler_form(q_, e, d);
  }

 private:
  void knit();

  Quiver q_;
  QuiverMatrices mats_;
  std::vector<ARVertex> verts_;
  std::vector<Mesh> meshes_;
  std::vector<int> mesh_of_head_;  // vertex id -> mesh index or -1
  std::vector<int> tau_, tau_inv_; // vertex id -> vertex id or -1
  std::vector<int> proj_of_orbit_, inj_end_of_orbit_;
  std::map<DimVector, int, DimLexLess> by_dim_;
};

/// GraphViz rendering with deterministic node order; vertices labeled
/// "M(i;k) dim=(...)", arrows of the translation quiver.
std::string to_dot(const ARQuiver& ar);

}  // namespace dynq
