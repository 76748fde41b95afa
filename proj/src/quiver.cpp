#include "dynq/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace dynq {

namespace {

std::string edge_name(Int a, Int b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

// Searches for a graph isomorphism from the user component onto the
// canonical diagram.  `adj` is by local index, `diagram` by canonical
// 1-based number.  Returns the map local index -> canonical number, or
// empty if none exists.  Tries the identity-in-sorted-order assignment
// first so that already-canonical inputs keep their numbering.
std::vector<int> find_diagram_isomorphism(
    int rank, const std::vector<std::set<int>>& adj,
    const std::vector<std::pair<int, int>>& diagram) {
  std::vector<std::set<int>> canon(rank + 1);
  for (auto [a, b] : diagram) {
    canon[a].insert(b);
    canon[b].insert(a);
  }
  auto is_full_iso = [&](const std::vector<int>& map) {
    for (int v = 0; v < rank; ++v) {
      for (int w : adj[v]) {
        if (!canon[map[v]].count(map[w])) return false;
      }
      if (adj[v].size() != canon[map[v]].size()) return false;
    }
    return true;
  };

  std::vector<int> identity(rank);
  for (int v = 0; v < rank; ++v) identity[v] = v + 1;
  if (is_full_iso(identity)) return identity;

  std::vector<int> map(rank, 0);
  std::vector<bool> used(rank + 1, false);
  // Backtracking over vertices in local order; candidates ascending, so
  // the first solution is deterministic.
  auto consistent = [&](int v, int cand) {
    for (int w : adj[v]) {
      if (map[w] != 0 && !canon[cand].count(map[w])) return false;
    }
    return adj[v].size() == canon[cand].size();
  };
  std::vector<int> order(rank);
  for (int i = 0; i < rank; ++i) order[i] = i;

  std::function<bool(int)> dfs = [&](int pos) -> bool {
    if (pos == rank) return true;
    const int v = order[pos];
    for (int cand = 1; cand <= rank; ++cand) {
      if (used[cand] || !consistent(v, cand)) continue;
      map[v] = cand;
      used[cand] = true;
      if (dfs(pos + 1)) return true;
      used[cand] = false;
      map[v] = 0;
    }
    return false;
  };
  if (dfs(0)) return map;
  return {};
}

}  // namespace

std::string DynkinType::label() const {
  const char* fam = family == DynkinFamily::A   ? "A"
                    : family == DynkinFamily::D ? "D"
                                                : "E";
  return fam + std::to_string(rank);
}

Int DynkinType::positive_root_count() const {
  switch (family) {
    case DynkinFamily::A:
      return static_cast<Int>(rank) * (rank + 1) / 2;
    case DynkinFamily::D:
      return static_cast<Int>(rank) * (rank - 1);
    case DynkinFamily::E:
      return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  }
  throw InternalError("unreachable");
}

std::vector<std::pair<int, int>> DynkinType::diagram_edges() const {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case DynkinFamily::A:
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case DynkinFamily::D:
      for (int i = 1; i <= rank - 3; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank - 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case DynkinFamily::E:
      edges = {{1, 2}, {2, 4}, {3, 4}, {4, 5}, {5, 6}};
      for (int i = 6; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  return edges;
}

DynkinType parse_dynkin_label(const std::string& label) {
  if (label.empty()) throw DomainError("empty Dynkin label");
  char fam = std::toupper(static_cast<unsigned char>(label[0]));
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw DomainError("bad Dynkin label '" + label + "'");
  }
  switch (fam) {
    case 'A':
      if (rank < 1) throw DomainError("A_n requires n >= 1, got '" + label + "'");
      return {DynkinFamily::A, rank};
    case 'D':
      if (rank < 4) throw DomainError("D_n requires n >= 4, got '" + label + "'");
      return {DynkinFamily::D, rank};
    case 'E':
      if (rank < 6 || rank > 8)
        throw DomainError("E_n requires n in {6,7,8}, got '" + label + "'");
      return {DynkinFamily::E, rank};
    default:
      throw DomainError("unknown Dynkin family in '" + label + "'");
  }
}

int Quiver::index_of_label(Int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label)
    throw DomainError("unknown vertex label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

int Quiver::vertex_at(int component, int canonical_number) const {
  for (int v = 0; v < size(); ++v)
    if (component_of_[v] == component && canonical_number_[v] == canonical_number)
      return v;
  throw InternalError("canonical vertex lookup failed");
}

Quiver Quiver::opposite() const {
  std::vector<std::pair<Int, Int>> rev;
  rev.reserve(arrows_.size());
  for (const Arrow& a : arrows_)
    rev.emplace_back(labels_[a.target], labels_[a.source]);
  return build_quiver(components_, rev, labels_);
}

std::string Quiver::type_string() const {
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " + ";
    s += components_[i].label();
  }
  return s;
}

Int Quiver::positive_root_count() const {
  Int total = 0;
  for (const auto& t : components_) total += t.positive_root_count();
  return total;
}

std::vector<int> Quiver::opposite_topological_order() const {
  // Kahn on Q^op: start from its sources, i.e. the sinks of Q.
  std::vector<int> outdeg(size());
  for (int v = 0; v < size(); ++v) outdeg[v] = static_cast<int>(out_[v].size());
  std::set<int> ready;
  for (int v = 0; v < size(); ++v)
    if (outdeg[v] == 0) ready.insert(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : in_[v]) {
      if (--outdeg[w] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) != size())
    throw InternalError("cycle in Dynkin quiver");
  return order;
}

Quiver build_quiver(const std::vector<DynkinType>& types,
                    const std::vector<std::pair<Int, Int>>& arrows,
                    const std::vector<Int>& declared_vertices) {
  if (types.empty()) throw DomainError("no Dynkin type declared");

  std::set<Int> label_set(declared_vertices.begin(), declared_vertices.end());
  for (auto [s, t] : arrows) {
    label_set.insert(s);
    label_set.insert(t);
  }
  Int expected = 0;
  for (const auto& t : types) expected += t.rank;
  if (static_cast<Int>(label_set.size()) != expected)
    throw DomainError("wrong rank: type " + [&] {
      std::string s;
      for (std::size_t i = 0; i < types.size(); ++i)
        s += (i ? "+" : "") + types[i].label();
      return s;
    }() + " needs " + std::to_string(expected) + " vertices, got " +
                      std::to_string(label_set.size()));

  Quiver q;
  q.components_ = types;
  q.labels_.assign(label_set.begin(), label_set.end());
  const int n = q.size();
  q.out_.assign(n, {});
  q.in_.assign(n, {});
  q.und_.assign(n, {});

  std::set<std::pair<int, int>> seen_edges;
  for (auto [ls, lt] : arrows) {
    int s = q.index_of_label(ls), t = q.index_of_label(lt);
    if (s == t) throw DomainError("loop rejected: " + edge_name(ls, lt));
    auto key = std::minmax(s, t);
    if (!seen_edges.insert({key.first, key.second}).second)
      throw DomainError("multiple edge rejected: " + edge_name(ls, lt));
    q.arrows_.push_back({s, t});
    q.out_[s].push_back(t);
    q.in_[t].push_back(s);
    q.und_[s].push_back(t);
    q.und_[t].push_back(s);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(q.out_[v].begin(), q.out_[v].end());
    std::sort(q.in_[v].begin(), q.in_[v].end());
    std::sort(q.und_[v].begin(), q.und_[v].end());
  }

  // Connected components of the user graph.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : q.und_[x])
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  if (ncomp != static_cast<int>(types.size())) {
    std::string detail;
    if (ncomp > static_cast<int>(types.size())) {
      for (int v = 0; v < n; ++v)
        if (comp[v] == static_cast<int>(types.size())) {
          detail = "; vertex " + std::to_string(q.labels_[v]) +
                   " is disconnected (missing edge)";
          break;
        }
    }
    throw DomainError(
        "diagram mismatch: expected " + std::to_string(types.size()) +
        " connected component(s), found " + std::to_string(ncomp) + detail);
  }

  // Match user components to declared types (multiset match with
  // backtracking; components ordered by smallest label).
  std::vector<std::vector<int>> comp_vertices(ncomp);
  for (int v = 0; v < n; ++v) comp_vertices[comp[v]].push_back(v);
  std::sort(comp_vertices.begin(), comp_vertices.end(),
            [&](const auto& a, const auto& b) {
              return q.labels_[a.front()] < q.labels_[b.front()];
            });

  std::vector<std::vector<int>> iso_of_comp(ncomp);
  std::vector<int> type_of_comp(ncomp, -1);
  std::vector<bool> type_used(types.size(), false);

  auto component_iso = [&](const std::vector<int>& verts,
                           const DynkinType& type) -> std::vector<int> {
    if (static_cast<int>(verts.size()) != type.rank) return {};
    std::map<int, int> local;
    for (std::size_t i = 0; i < verts.size(); ++i)
      local[verts[i]] = static_cast<int>(i);
    std::vector<std::set<int>> adj(verts.size());
    for (const Arrow& a : q.arrows_) {
      auto is = local.find(a.source);
      if (is == local.end()) continue;
      auto it = local.find(a.target);
      if (it == local.end()) continue;
      adj[is->second].insert(it->second);
      adj[it->second].insert(is->second);
    }
    return find_diagram_isomorphism(type.rank, adj, type.diagram_edges());
  };

  std::function<bool(int)> assign = [&](int c) -> bool {
    if (c == ncomp) return true;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (type_used[t]) continue;
      auto iso = component_iso(comp_vertices[c], types[t]);
      if (iso.empty()) continue;
      type_used[t] = true;
      iso_of_comp[c] = iso;
      type_of_comp[c] = static_cast<int>(t);
      if (assign(c + 1)) return true;
      type_used[t] = false;
    }
    return false;
  };
  if (!assign(0)) {
    // Name something concrete: an edge at a vertex whose degree is
    // impossible for every declared diagram, else the first edge.
    for (int v = 0; v < n; ++v) {
      if (q.und_[v].size() > 3)
        throw DomainError("diagram mismatch: vertex " +
                          std::to_string(q.labels_[v]) + " has degree " +
                          std::to_string(q.und_[v].size()) +
                          ", offending edge " +
                          edge_name(q.labels_[v], q.labels_[q.und_[v].back()]));
    }
    std::string detail = q.arrows_.empty()
                             ? "missing edges"
                             : "offending edge " +
                                   edge_name(q.labels_[q.arrows_[0].source],
                                             q.labels_[q.arrows_[0].target]);
    throw DomainError("diagram mismatch: arrow list is not an orientation of " +
                      [&] {
                        std::string s;
                        for (std::size_t i = 0; i < types.size(); ++i)
                          s += (i ? "+" : "") + types[i].label();
                        return s;
                      }() + " (" + detail + ")");
  }

  q.component_of_.assign(n, -1);
  q.canonical_number_.assign(n, 0);
  for (int c = 0; c < ncomp; ++c) {
    for (std::size_t i = 0; i < comp_vertices[c].size(); ++i) {
      const int v = comp_vertices[c][i];
      q.component_of_[v] = type_of_comp[c];
      q.canonical_number_[v] = iso_of_comp[c][i];
    }
  }

  // Per-component declared order: components_ keeps the declared type
  // list; component_of_ refers to indices in it.
  return q;
}

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::vector<DynkinType> types;
  std::vector<std::pair<Int, Int>> arrows;
  std::vector<Int> vertices;
  bool saw_type = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string s = strip(line);
    if (s.empty()) continue;
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw DomainError("quiver file line " + std::to_string(lineno) +
                        ": expected 'key: value'");
    std::string key = s.substr(0, colon);
    std::string value = s.substr(colon + 1);
    std::transform(key.begin(), key.end(), key.begin(), ::tolower);
    if (key == "type") {
      saw_type = true;
      std::string piece;
      for (char c : value + "+") {
        if (c == '+') {
          if (!piece.empty()) types.push_back(parse_dynkin_label(piece));
          piece.clear();
        } else {
          piece += c;
        }
      }
    } else if (key == "arrows") {
      if (value.empty()) continue;
      std::string piece;
      for (char c : value + ",") {
        if (c == ',') {
          auto pos = piece.find("->");
          if (pos == std::string::npos)
            throw DomainError("quiver file line " + std::to_string(lineno) +
                              ": bad arrow '" + piece + "'");
          try {
            arrows.emplace_back(std::stoll(piece.substr(0, pos)),
                                std::stoll(piece.substr(pos + 2)));
          } catch (const std::exception&) {
            throw DomainError("quiver file line " + std::to_string(lineno) +
                              ": bad arrow '" + piece + "'");
          }
          piece.clear();
        } else {
          piece += c;
        }
      }
    } else if (key == "vertices") {
      if (value.empty()) continue;
      std::string piece;
      for (char c : value + ",") {
        if (c == ',') {
          if (!piece.empty()) vertices.push_back(std::stoll(piece));
          piece.clear();
        } else {
          piece += c;
        }
      }
    } else {
      throw DomainError("quiver file line " + std::to_string(lineno) +
                        ": unknown key '" + key + "'");
    }
  }
  if (!saw_type) throw DomainError("quiver file has no 'type:' line");
  return build_quiver(types, arrows, vertices);
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open quiver file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_quiver(ss.str());
}

std::string to_quiver_text(const Quiver& q) {
  std::ostringstream os;
  os << "type: " << q.type_string() << "\n";
  os << "vertices: ";
  for (int v = 0; v < q.size(); ++v) os << (v ? ", " : "") << q.label(v);
  os << "\n";
  os << "arrows: ";
  for (std::size_t i = 0; i < q.arrows().size(); ++i) {
    const Arrow& a = q.arrows()[i];
    os << (i ? ", " : "") << q.label(a.source) << "->" << q.label(a.target);
  }
  os << "\n";
  return os.str();
}

QuiverMatrices matrices(const Quiver& q) {
  const int n = q.size();
  QuiverMatrices m;
  m.H = IntMatrix::Identity(n, n);
  for (const Arrow& a : q.arrows()) m.H(a.source, a.target) -= 1;

  // Cartan matrix from path counts: column j holds dim P_j.  In a tree
  // there is at most one path between two vertices.
  m.C = IntMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> stack{j};
    m.C(j, j) = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : q.out_neighbors(v)) {
        if (m.C(w, j) == 0) {
          m.C(w, j) = 1;
          stack.push_back(w);
        }
      }
    }
  }

  if (!eq(IntMatrix(m.C.transpose() * m.H), IntMatrix(IntMatrix::Identity(n, n))))
    throw InternalError("C^T H != identity");

  m.B = m.H - IntMatrix(m.H.transpose());
  // H^{-1} = C^T, so Phi = -H^{-1} H^T = -C^T H^T and
  // Phi^{-1} = -(H^T)^{-1} H = -C H.
  m.Phi = -(m.C.transpose() * m.H.transpose());
  m.PhiInv = -(m.C * m.H);
  if (!eq(IntMatrix(m.Phi * m.PhiInv), IntMatrix(IntMatrix::Identity(n, n))))
    throw InternalError("Coxeter matrix inverse check failed");
  return m;
}

Int euler_form(const Quiver& q, const DimVector& e, const DimVector& d) {
  if (e.size() != q.size() || d.size() != q.size())
    throw DomainError("euler_form: vector size mismatch");
  Int s = e.dot(d);
  for (const Arrow& a : q.arrows()) s -= e[a.source] * d[a.target];
  return s;
}

DimVector reflect(const Quiver& q, int vertex, const DimVector& d) {
  if (vertex < 0 || vertex >= q.size())
    throw DomainError("reflect: bad vertex index");
  if (d.size() != q.size()) throw DomainError("reflect: vector size mismatch");
  DimVector out = d;
  Int s = 0;
  for (int w : q.neighbors(vertex)) s += d[w];
  out[vertex] = -d[vertex] + s;
  return out;
}

DimVector coxeter_apply(const QuiverMatrices& m, const DimVector& d) {
  if (d.size() != m.Phi.rows())
    throw DomainError("coxeter_apply: vector size mismatch");
  return m.Phi * d;
}

DimVector coxeter_apply(const Quiver& q, const DimVector& d) {
  return coxeter_apply(matrices(q), d);
}

}  // namespace dynq
