#include "dynq/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dynq {

namespace {

Int mod(Int a, Int p) {
  Int r = a % p;
  return r < 0 ? r + p : r;
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Int inv_mod(Int a, Int p) {
  // Extended Euclid; p prime, a != 0 mod p.
  Int t = 0, newt = 1, r = p, newr = mod(a, p);
  while (newr != 0) {
    Int q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw DomainError("inv_mod: not invertible (p not prime?)");
  return mod(t, p);
}

Int rank_mod_p(std::vector<std::vector<Int>> a, Int p) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(a[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (mod(a[r][c], p) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const Int inv = inv_mod(a[rank][c], p);
    for (int j = c; j < cols; ++j) a[rank][j] = mod(a[rank][j] * inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Int f = mod(a[r][c], p);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        a[r][j] = mod(a[r][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination: exact rank over the rationals.
Int rank_exact(const std::vector<std::vector<Int>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m[r][c];
  BigInt prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j)
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// Phi^M_N as a dense matrix: unknowns are the entries of the vertex
// maps f_i (d_i x e_i), equations come per arrow.
std::vector<std::vector<Int>> phi_matrix(const ExplicitRep& n,
                                         const ExplicitRep& m) {
  const Quiver& q = m.quiver;
  const int nv = q.size();
  std::vector<Int> col_offset(nv + 1, 0);
  for (int i = 0; i < nv; ++i)
    col_offset[i + 1] = col_offset[i] + m.dims[i] * n.dims[i];
  const Int ncols = col_offset[nv];

  Int nrows = 0;
  for (const Arrow& a : q.arrows()) nrows += m.dims[a.target] * n.dims[a.source];

  std::vector<std::vector<Int>> out(nrows, std::vector<Int>(ncols, 0));
  Int row0 = 0;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    const IntMatrix& ma = m.maps[ai];
    const IntMatrix& na = n.maps[ai];
    const Int dt = m.dims[a.target], ds = m.dims[a.source];
    const Int es = n.dims[a.source], et = n.dims[a.target];
    // Block row (r, c) with r < dt, c < es:
    //   sum_k M_a[r,k] f_s[k,c]  -  sum_k f_t[r,k] N_a[k,c].
    for (Int r = 0; r < dt; ++r) {
      for (Int c = 0; c < es; ++c) {
        std::vector<Int>& row = out[row0 + r * es + c];
        for (Int k = 0; k < ds; ++k)
          row[col_offset[a.source] + k * n.dims[a.source] + c] += ma(r, k);
        for (Int k = 0; k < et; ++k)
          row[col_offset[a.target] + r * n.dims[a.target] + k] -= na(k, c);
      }
    }
    row0 += dt * es;
  }
  return out;
}

}  // namespace

void ExplicitRep::validate() const {
  if (dims.size() != quiver.size())
    throw DomainError("rep: dims length does not match the quiver");
  if (!nonneg(dims)) throw DomainError("rep: negative dimension");
  if (maps.size() != quiver.arrows().size())
    throw DomainError("rep: one matrix per arrow required");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const Arrow& a = quiver.arrows()[i];
    if (maps[i].rows() != dims[a.target] || maps[i].cols() != dims[a.source])
      throw DomainError("rep: matrix for arrow " +
                        std::to_string(quiver.label(a.source)) + "->" +
                        std::to_string(quiver.label(a.target)) +
                        " has the wrong shape");
  }
  if (prime < 0) throw DomainError("rep: negative prime");
}

ExplicitRep interval_module(const Quiver& q, int a, int b, Int prime) {
  if (q.components().size() != 1 ||
      q.components()[0].family != DynkinFamily::A)
    throw DomainError("interval_module: quiver is not connected of type A");
  const int n = q.size();
  if (a < 1 || b > n || a > b)
    throw DomainError("interval_module: invalid interval [" +
                      std::to_string(a) + "," + std::to_string(b) + "]");
  ExplicitRep rep;
  rep.quiver = q;
  rep.prime = prime;
  rep.dims = zero_vector(n);
  for (int v = 0; v < n; ++v) {
    const int pos = q.canonical_number(v);
    if (a <= pos && pos <= b) rep.dims[v] = 1;
  }
  for (const Arrow& ar : q.arrows()) {
    const bool inside = rep.dims[ar.source] == 1 && rep.dims[ar.target] == 1;
    IntMatrix mat = IntMatrix::Zero(rep.dims[ar.target], rep.dims[ar.source]);
    if (inside) mat(0, 0) = 1;
    rep.maps.push_back(mat);
  }
  rep.validate();
  return rep;
}

ExplicitRep direct_sum(const ExplicitRep& r1, const ExplicitRep& r2) {
  if (r1.quiver.size() != r2.quiver.size() || r1.prime != r2.prime)
    throw DomainError("direct_sum: incompatible representations");
  ExplicitRep out;
  out.quiver = r1.quiver;
  out.prime = r1.prime;
  out.dims = r1.dims + r2.dims;
  for (std::size_t i = 0; i < r1.maps.size(); ++i) {
    const Arrow& a = r1.quiver.arrows()[i];
    IntMatrix m = IntMatrix::Zero(out.dims[a.target], out.dims[a.source]);
    m.topLeftCorner(r1.dims[a.target], r1.dims[a.source]) = r1.maps[i];
    m.bottomRightCorner(r2.dims[a.target], r2.dims[a.source]) = r2.maps[i];
    out.maps.push_back(m);
  }
  out.validate();
  return out;
}

ExplicitRep generic_rep_type_a(const HomTable& t, const DimVector& d,
                               Int prime) {
  const ARQuiver& ar = t.ar();
  const Quiver& q = ar.quiver();
  if (q.components().size() != 1 ||
      q.components()[0].family != DynkinFamily::A)
    throw DomainError("generic_rep_type_a: quiver is not connected type A");
  const ModuleExpr decomp = generic_decomposition(t, d);
  ExplicitRep out;
  bool first = true;
  for (int v : decomp.flattened()) {
    // A type-A root is supported on a canonical-diagram interval.
    const DimVector& dim = ar.vertex(v).dim;
    int lo = q.size() + 1, hi = 0;
    for (int i = 0; i < q.size(); ++i)
      if (dim[i] == 1) {
        lo = std::min(lo, q.canonical_number(i));
        hi = std::max(hi, q.canonical_number(i));
      }
    ExplicitRep part = interval_module(q, lo, hi, prime);
    out = first ? part : direct_sum(out, part);
    first = false;
  }
  if (first) {
    out.quiver = q;
    out.prime = prime;
    out.dims = zero_vector(q.size());
    for (std::size_t i = 0; i < q.arrows().size(); ++i)
      out.maps.push_back(IntMatrix::Zero(0, 0));
  }
  out.validate();
  return out;
}

Int hom_space_dim(const ExplicitRep& n, const ExplicitRep& m) {
  n.validate();
  m.validate();
  if (n.quiver.size() != m.quiver.size() ||
      n.quiver.arrows().size() != m.quiver.arrows().size() ||
      n.prime != m.prime)
    throw DomainError("hom_space_dim: quiver or field mismatch");
  const auto phi = phi_matrix(n, m);
  Int cols = 0;
  for (int i = 0; i < m.quiver.size(); ++i) cols += m.dims[i] * n.dims[i];
  const Int rank = m.prime > 0 ? rank_mod_p(phi, m.prime) : rank_exact(phi);
  return cols - rank;
}

Int ext_space_dim(const ExplicitRep& n, const ExplicitRep& m) {
  n.validate();
  m.validate();
  if (n.quiver.size() != m.quiver.size() || n.prime != m.prime)
    throw DomainError("ext_space_dim: quiver or field mismatch");
  const auto phi = phi_matrix(n, m);
  Int rows = 0;
  for (std::size_t ai = 0; ai < m.quiver.arrows().size(); ++ai) {
    const Arrow& a = m.quiver.arrows()[ai];
    rows += m.dims[a.target] * n.dims[a.source];
  }
  const Int rank = m.prime > 0 ? rank_mod_p(phi, m.prime) : rank_exact(phi);
  return rows - rank;
}

namespace {

// All e-dimensional subspaces of F_p^d in reduced column echelon form,
// together with a row-reduced membership tester.
struct Subspace {
  IntMatrix basis;           // d x e, mod p
  std::vector<int> pivots;   // pivot row per basis column
};

void enumerate_subspaces(Int d, Int e, Int p, std::vector<Subspace>& out) {
  out.clear();
  if (e == 0) {
    out.push_back({IntMatrix::Zero(d, 0), {}});
    return;
  }
  std::vector<int> pivots(e);
  // Choose pivot rows 0 <= r_1 < ... < r_e < d; free entries sit at
  // non-pivot rows below each pivot.
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == e) {
      std::vector<std::pair<int, int>> free_pos;
      for (int j = 0; j < e; ++j)
        for (int r = pivots[j] + 1; r < d; ++r) {
          if (std::find(pivots.begin(), pivots.end(), r) == pivots.end())
            free_pos.emplace_back(r, j);
        }
      IntMatrix basis = IntMatrix::Zero(d, e);
      for (int j = 0; j < e; ++j) basis(pivots[j], j) = 1;
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == free_pos.size()) {
          out.push_back({basis, pivots});
          return;
        }
        for (Int v = 0; v < p; ++v) {
          basis(free_pos[k].first, free_pos[k].second) = v;
          fill(k + 1);
        }
        basis(free_pos[k].first, free_pos[k].second) = 0;
      };
      fill(0);
      return;
    }
    for (int r = start; r < d; ++r) {
      pivots[idx] = r;
      choose(idx + 1, r + 1);
    }
  };
  choose(0, 0);
}

// v in the column span of s?  Eliminate with the pivot structure.
bool contains(const Subspace& s, DimVector v, Int p) {
  for (std::size_t j = 0; j < s.pivots.size(); ++j) {
    const Int c = mod(v[s.pivots[j]], p);
    if (c != 0) v = (v - c * s.basis.col(j)).eval();
  }
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (mod(v[i], p) != 0) return false;
  return true;
}

}  // namespace

BigInt count_subreps(const ExplicitRep& m, const DimVector& e, Int p,
                     BigInt budget) {
  m.validate();
  if (!is_prime(p)) throw DomainError("count_subreps: prime required");
  if (m.prime != 0 && m.prime != p)
    throw DomainError("count_subreps: representation is over a different prime");
  if (e.size() != m.dims.size() || !nonneg(e) || !leq(e, m.dims))
    throw DomainError("count_subreps requires 0 <= e <= dim m");

  const Quiver& q = m.quiver;
  const int nv = q.size();
  std::vector<std::vector<Subspace>> spaces(nv);
  BigInt product = 1;
  for (int i = 0; i < nv; ++i) {
    enumerate_subspaces(m.dims[i], e[i], p, spaces[i]);
    product *= BigInt(spaces[i].size());
    if (product > budget)
      throw BudgetExceeded(
          "count_subreps: search space of size >= " + product.str() +
          " exceeds the budget " + budget.str());
  }

  // Arrows checkable once both endpoints are assigned, keyed by the
  // later endpoint in the assignment order (vertex index order).
  std::vector<std::vector<std::size_t>> ready(nv);
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const Arrow& a = q.arrows()[ai];
    ready[std::max(a.source, a.target)].push_back(ai);
  }

  std::vector<const Subspace*> chosen(nv, nullptr);
  BigInt count = 0;
  std::function<void(int)> dfs = [&](int v) {
    if (v == nv) {
      count += 1;
      return;
    }
    for (const Subspace& s : spaces[v]) {
      chosen[v] = &s;
      bool ok = true;
      for (std::size_t ai : ready[v]) {
        const Arrow& a = q.arrows()[ai];
        const Subspace& src = *chosen[a.source];
        const Subspace& dst = *chosen[a.target];
        for (Eigen::Index j = 0; j < src.basis.cols() && ok; ++j) {
          DimVector img = m.maps[ai] * src.basis.col(j);
          if (!contains(dst, img, p)) ok = false;
        }
        if (!ok) break;
      }
      if (ok) dfs(v + 1);
    }
    chosen[v] = nullptr;
  };
  dfs(0);
  return count;
}

CountInterpolation interpolate_count(
    const std::vector<std::pair<Int, BigInt>>& counts, int degree_bound) {
  if (degree_bound < 0) throw DomainError("interpolate_count: negative bound");
  if (static_cast<int>(counts.size()) < degree_bound + 1)
    throw DomainError("interpolate_count needs degree_bound + 1 points");
  for (std::size_t i = 0; i < counts.size(); ++i)
    for (std::size_t j = i + 1; j < counts.size(); ++j)
      if (counts[i].first == counts[j].first)
        throw DomainError("interpolate_count: duplicate evaluation points");

  // Lagrange interpolation through the first bound+1 points, exact
  // rational arithmetic.
  const int k = degree_bound + 1;
  std::vector<BigRational> coeffs(k, BigRational(0));
  for (int i = 0; i < k; ++i) {
    // Basis polynomial prod_{j != i} (t - p_j) / (p_i - p_j).
    std::vector<BigRational> basis{BigRational(1)};
    BigRational denom(1);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      basis.push_back(BigRational(0));
      for (int u = static_cast<int>(basis.size()) - 1; u > 0; --u)
        basis[u] = basis[u - 1] - BigRational(counts[j].first) * basis[u];
      basis[0] = -BigRational(counts[j].first) * basis[0];
      denom *= BigRational(counts[i].first - counts[j].first);
    }
    const BigRational scale = BigRational(counts[i].second) / denom;
    for (int u = 0; u < static_cast<int>(basis.size()); ++u)
      coeffs[u] += basis[u] * scale;
  }

  CountInterpolation out;
  QPoly poly;
  for (int u = 0; u < k; ++u) {
    if (coeffs[u] == 0) continue;
    if (boost::multiprecision::denominator(coeffs[u]) != 1) {
      out.note = "count not polynomial within bound: coefficient of t^" +
                 std::to_string(u) + " is not an integer";
      return out;
    }
    poly.add_term(u, BigInt(boost::multiprecision::numerator(coeffs[u])));
  }
  // Remaining points verify the fit.
  for (std::size_t i = k; i < counts.size(); ++i) {
    BigInt value = 0, power = 1;
    for (int u = 0; u < k; ++u) {
      value += poly.coeff(u) * power;
      power *= counts[i].first;
    }
    if (value != counts[i].second) {
      out.note = "count not polynomial within bound: value at t=" +
                 std::to_string(counts[i].first) + " mismatches";
      return out;
    }
  }
  out.polynomial = true;
  out.poly = std::move(poly);
  return out;
}

ExplicitRep parse_rep_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw DomainError(std::string("rep fixture: bad JSON: ") + e.what());
  }
  try {
    ExplicitRep rep;
    const auto& qj = j.at("quiver");
    std::vector<DynkinType> types;
    {
      std::string piece, label = qj.at("type").get<std::string>();
      for (char c : label + "+") {
        if (c == '+') {
          std::string t;
          for (char x : piece)
            if (!std::isspace(static_cast<unsigned char>(x))) t += x;
          if (!t.empty()) types.push_back(parse_dynkin_label(t));
          piece.clear();
        } else {
          piece += c;
        }
      }
    }
    std::vector<std::pair<Int, Int>> arrows;
    for (const auto& a : qj.at("arrows"))
      arrows.emplace_back(a.at(0).get<Int>(), a.at(1).get<Int>());
    std::vector<Int> vertices;
    if (qj.contains("vertices"))
      for (const auto& v : qj.at("vertices")) vertices.push_back(v.get<Int>());
    rep.quiver = build_quiver(types, arrows, vertices);
    rep.prime = j.value("prime", Int{0});
    const auto& dims = j.at("dims");
    rep.dims = zero_vector(rep.quiver.size());
    if (static_cast<int>(dims.size()) != rep.quiver.size())
      throw DomainError("rep fixture: dims length mismatch");
    for (int i = 0; i < rep.quiver.size(); ++i) rep.dims[i] = dims[i].get<Int>();
    rep.maps.assign(rep.quiver.arrows().size(), IntMatrix());
    for (std::size_t ai = 0; ai < rep.quiver.arrows().size(); ++ai) {
      const Arrow& a = rep.quiver.arrows()[ai];
      const std::string key = std::to_string(rep.quiver.label(a.source)) +
                              "->" + std::to_string(rep.quiver.label(a.target));
      const auto& rows = j.at("maps").at(key);
      IntMatrix mat(rep.dims[a.target], rep.dims[a.source]);
      if (static_cast<Int>(rows.size()) != rep.dims[a.target])
        throw DomainError("rep fixture: matrix " + key + " has wrong rows");
      for (Int r = 0; r < rep.dims[a.target]; ++r) {
        if (static_cast<Int>(rows[r].size()) != rep.dims[a.source])
          throw DomainError("rep fixture: matrix " + key + " has wrong cols");
        for (Int c = 0; c < rep.dims[a.source]; ++c)
          mat(r, c) = rows[r][c].get<Int>();
      }
      rep.maps[ai] = mat;
    }
    rep.validate();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("rep fixture: ") + e.what());
  }
}

ExplicitRep load_rep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open rep fixture '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rep_json(ss.str());
}

std::string to_rep_json(const ExplicitRep& rep) {
  nlohmann::ordered_json j;
  j["quiver"]["type"] = rep.quiver.type_string();
  j["quiver"]["vertices"] = rep.quiver.labels();
  auto arrows = nlohmann::ordered_json::array();
  for (const Arrow& a : rep.quiver.arrows())
    arrows.push_back({rep.quiver.label(a.source), rep.quiver.label(a.target)});
  j["quiver"]["arrows"] = arrows;
  j["prime"] = rep.prime;
  std::vector<Int> dims(rep.dims.data(), rep.dims.data() + rep.dims.size());
  j["dims"] = dims;
  auto maps = nlohmann::ordered_json::object();
  for (std::size_t ai = 0; ai < rep.quiver.arrows().size(); ++ai) {
    const Arrow& a = rep.quiver.arrows()[ai];
    const std::string key = std::to_string(rep.quiver.label(a.source)) + "->" +
                            std::to_string(rep.quiver.label(a.target));
    auto rows = nlohmann::ordered_json::array();
    for (Int r = 0; r < rep.maps[ai].rows(); ++r) {
      auto row = nlohmann::ordered_json::array();
      for (Int c = 0; c < rep.maps[ai].cols(); ++c)
        row.push_back(rep.maps[ai](r, c));
      rows.push_back(row);
    }
    maps[key] = rows;
  }
  j["maps"] = maps;
  return j.dump(2) + "\n";
}

}  // namespace dynq
