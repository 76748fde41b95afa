#include "dynq/ar_quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dynq {

ARQuiver::ARQuiver(const Quiver& q) : q_(q), mats_(matrices(q)) { knit(); }

void ARQuiver::knit() {
  const int n = q_.size();
  const std::vector<int> topo = q_.opposite_topological_order();

  std::vector<int> last(n, -1);  // newest vertex id of the orbit of P_i
  std::vector<bool> ended(n, false);
  proj_of_orbit_.assign(n, -1);
  inj_end_of_orbit_.assign(n, -1);

  auto push_vertex = [&](int orbit, int slice, const DimVector& dim) {
    if (!nonneg(dim) || dim.sum() <= 0 || euler_form(q_, dim, dim) != 1)
      throw InternalError("knit: computed dimension vector " +
                          format_vector(dim) + " is not a positive root");
    if (by_dim_.count(dim))
      throw InternalError("knit: duplicate dimension vector " +
                          format_vector(dim));
    verts_.push_back({orbit, slice, dim, slice == 0, false});
    const int id = static_cast<int>(verts_.size()) - 1;
    by_dim_[dim] = id;
    tau_.push_back(slice == 0 ? -1 : last[orbit]);
    tau_inv_.push_back(-1);
    if (slice > 0) tau_inv_[last[orbit]] = id;
    mesh_of_head_.push_back(-1);
    last[orbit] = id;
    return id;
  };

  for (int i : topo) proj_of_orbit_[i] = push_vertex(i, 0, mats_.C.col(i));

  auto finish_orbit = [&](int i) {
    const DimVector& d = verts_[last[i]].dim;
    bool is_inj = false;
    for (int k = 0; k < n; ++k) {
      if (eq(DimVector(mats_.C.row(k).transpose()), d)) {
        is_inj = true;
        break;
      }
    }
    if (!is_inj)
      throw InternalError("knit: orbit of P_" + std::to_string(q_.label(i)) +
                          " ended at " + format_vector(d) +
                          " which is not an injective");
    verts_[last[i]].injective = true;
    inj_end_of_orbit_[i] = last[i];
    ended[i] = true;
  };

  int alive = n;
  for (int slice = 1; alive > 0; ++slice) {
    // A strictly negative entry of Phi^{-1} d flags the orbit end (the
    // translate of an injective is minus a projective); otherwise the
    // orbit continues and Phi^{-1} d is the next root.
    std::vector<int> continuing;
    for (int i : topo) {
      if (ended[i]) continue;
      DimVector cand = mats_.PhiInv * verts_[last[i]].dim;
      if ((cand.array() < 0).any()) {
        finish_orbit(i);
        --alive;
      } else {
        continuing.push_back(i);
      }
    }
    // Extension in the topological order of Q^op: the same-slice mesh
    // summands (j;slice) for arrows i->j are knitted before (i;slice).
    for (int i : continuing) {
      const int tail = last[i];
      DimVector cand = mats_.PhiInv * verts_[tail].dim;
      Mesh mesh;
      mesh.tail = tail;
      DimVector middle_sum = zero_vector(n);
      auto missing = [&](int j, int s) {
        return InternalError("knit: missing mesh summand (" +
                             std::to_string(q_.label(j)) + ";" +
                             std::to_string(s) + ")");
      };
      for (int j : q_.in_neighbors(i)) {  // (j; slice-1)
        int vid = last[j];
        if (verts_[vid].slice == slice) vid = tau_[vid];
        if (vid < 0 || verts_[vid].slice != slice - 1) throw missing(j, slice - 1);
        mesh.middle.push_back(vid);
        middle_sum += verts_[vid].dim;
      }
      for (int j : q_.out_neighbors(i)) {  // (j; slice)
        const int vid = last[j];
        if (ended[j] || verts_[vid].slice != slice) throw missing(j, slice);
        mesh.middle.push_back(vid);
        middle_sum += verts_[vid].dim;
      }
      if (!eq(DimVector(middle_sum - verts_[tail].dim), cand))
        throw InternalError(
            "knit: mesh formula disagrees with the Coxeter translate at "
            "orbit " +
            std::to_string(q_.label(i)));
      mesh.head = push_vertex(i, slice, cand);
      mesh_of_head_[mesh.head] = static_cast<int>(meshes_.size());
      meshes_.push_back(std::move(mesh));
    }
  }

  if (static_cast<Int>(verts_.size()) != q_.positive_root_count())
    throw InternalError("knit: vertex count " + std::to_string(verts_.size()) +
                        " does not match the positive-root count " +
                        std::to_string(q_.positive_root_count()));
  // Orbit ends exhaust the injectives (Nakayama permutation).
  std::set<int> ends(inj_end_of_orbit_.begin(), inj_end_of_orbit_.end());
  if (static_cast<int>(ends.size()) != n || ends.count(-1))
    throw InternalError("knit: orbit ends do not exhaust the injectives");
}

const Mesh& ARQuiver::mesh_of(int head) const {
  if (head < 0 || head >= size()) throw DomainError("mesh_of: bad vertex id");
  if (verts_[head].projective)
    throw DomainError("mesh_of: " + label(head) +
                      " is projective and heads no mesh");
  return meshes_[mesh_of_head_[head]];
}

int ARQuiver::vertex_by_dim(const DimVector& d) const {
  auto it = by_dim_.find(d);
  if (it == by_dim_.end())
    throw DomainError(format_vector(d) + " is not a positive root of " +
                      q_.type_string());
  return it->second;
}

bool ARQuiver::is_root(const DimVector& d) const { return by_dim_.count(d); }

std::optional<int> ARQuiver::tau(int id) const {
  if (id < 0 || id >= size()) throw DomainError("tau: bad vertex id");
  return tau_[id] < 0 ? std::nullopt : std::optional<int>(tau_[id]);
}

std::optional<int> ARQuiver::tau_inverse(int id) const {
  if (id < 0 || id >= size()) throw DomainError("tau_inverse: bad vertex id");
  return tau_inv_[id] < 0 ? std::nullopt : std::optional<int>(tau_inv_[id]);
}

int ARQuiver::injective_vertex(int q_vertex) const {
  // The injective with socle S_k has dim = row k of C.
  return vertex_by_dim(mats_.C.row(q_vertex).transpose());
}

std::string ARQuiver::label(int id) const {
  const ARVertex& v = verts_[id];
  return "(" + std::to_string(q_.label(v.orbit)) + ";" +
         std::to_string(v.slice) + ")";
}

std::string to_dot(const ARQuiver& ar) {
  std::ostringstream os;
  os << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
  for (int id = 0; id < ar.size(); ++id) {
    const ARVertex& v = ar.vertex(id);
    os << "  \"M" << ar.label(id) << "\" [label=\"M" << ar.label(id)
       << " dim=" << format_vector(v.dim) << "\"];\n";
  }
  for (const Mesh& m : ar.meshes()) {
    for (int mid : m.middle) {
      os << "  \"M" << ar.label(m.tail) << "\" -> \"M" << ar.label(mid)
         << "\";\n";
      os << "  \"M" << ar.label(mid) << "\" -> \"M" << ar.label(m.head)
         << "\";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace dynq
