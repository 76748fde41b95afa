#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dynq/grassmann.hpp"
#include "dynq/oracle.hpp"

using namespace dynq;

namespace {

DimVector vec(std::initializer_list<Int> xs) {
  DimVector v(xs.size());
  Eigen::Index i = 0;
  for (Int x : xs) v[i++] = x;
  return v;
}

Quiver a_line(int n, bool equioriented = true) {
  std::vector<std::pair<Int, Int>> arrows;
  for (int i = 1; i < n; ++i) {
    if (equioriented || i % 2 == 1)
      arrows.emplace_back(i, i + 1);
    else
      arrows.emplace_back(i + 1, i);
  }
  return build_quiver({parse_dynkin_label("A" + std::to_string(n))}, arrows,
                      n == 1 ? std::vector<Int>{1} : std::vector<Int>{});
}

// Gauss-Jordan inverse mod p; false if singular.
bool invert_mod_p(const IntMatrix& a, Int p, IntMatrix& inv) {
  const Int d = a.rows();
  IntMatrix aug(d, 2 * d);
  aug << a, IntMatrix::Identity(d, d);
  Int rank = 0;
  for (Int c = 0; c < d; ++c) {
    Int piv = -1;
    for (Int r = rank; r < d; ++r)
      if (aug(r, c) % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    aug.row(rank).swap(aug.row(piv));
    Int scale = 1;
    while ((aug(rank, c) * scale) % p != 1) ++scale;
    for (Int j = 0; j < 2 * d; ++j)
      aug(rank, j) = ((aug(rank, j) * scale) % p + p) % p;
    for (Int r = 0; r < d; ++r) {
      if (r == rank) continue;
      const Int f = ((aug(r, c) % p) + p) % p;
      if (f == 0) continue;
      for (Int j = 0; j < 2 * d; ++j)
        aug(r, j) = ((aug(r, j) - f * aug(rank, j)) % p + p) % p;
    }
    ++rank;
  }
  inv = aug.rightCols(d).eval();
  return true;
}

// Random change of basis at every vertex, mod p.
ExplicitRep conjugated(const ExplicitRep& rep, Int p, std::mt19937& rng) {
  std::uniform_int_distribution<Int> entry(0, p - 1);
  const int n = rep.quiver.size();
  std::vector<IntMatrix> g(n), ginv(n);
  for (int i = 0; i < n; ++i) {
    const Int d = rep.dims[i];
    while (true) {
      IntMatrix a(d, d);
      for (Int r = 0; r < d; ++r)
        for (Int c = 0; c < d; ++c) a(r, c) = entry(rng);
      IntMatrix inv;
      if (invert_mod_p(a, p, inv)) {
        g[i] = a;
        ginv[i] = inv;
        break;
      }
    }
  }
  ExplicitRep out = rep;
  out.prime = p;
  for (std::size_t ai = 0; ai < rep.maps.size(); ++ai) {
    const Arrow& a = rep.quiver.arrows()[ai];
    IntMatrix mat = g[a.target] * rep.maps[ai] * ginv[a.source];
    for (Int r = 0; r < mat.rows(); ++r)
      for (Int c = 0; c < mat.cols(); ++c) mat(r, c) = ((mat(r, c) % p) + p) % p;
    out.maps[ai] = mat;
  }
  return out;
}

}  // namespace

TEST_CASE("interval modules") {
  const Quiver a2 = a_line(2);
  const ExplicitRep s1 = interval_module(a2, 1, 1);
  CHECK(eq(s1.dims, vec({1, 0})));
  const ExplicitRep p1 = interval_module(a2, 1, 2);
  CHECK(eq(p1.dims, vec({1, 1})));
  CHECK(p1.maps[0](0, 0) == 1);
  const Quiver a3 = a_line(3);
  CHECK(eq(interval_module(a3, 2, 3).dims, vec({0, 1, 1})));
  CHECK_THROWS_AS(interval_module(a3, 3, 2), DomainError);
  CHECK_THROWS_AS(interval_module(a3, 0, 2), DomainError);
}

TEST_CASE("hom_space_dim kernel computations on A2") {
  const Quiver a2 = a_line(2);
  const ExplicitRep s1 = interval_module(a2, 1, 1);
  const ExplicitRep s2 = interval_module(a2, 2, 2);
  const ExplicitRep p1 = interval_module(a2, 1, 2);
  CHECK(hom_space_dim(s1, s1) == 1);
  CHECK(hom_space_dim(p1, s2) == 0);
  CHECK(hom_space_dim(s2, p1) == 1);
  CHECK(hom_space_dim(s1, s2) == 0);
  CHECK(hom_space_dim(s2, s1) == 0);
  CHECK(hom_space_dim(p1, p1) == 1);
}

TEST_CASE("oracle hom equals the AR-table hom on interval pairs") {
  for (int n = 2; n <= 4; ++n) {
    for (bool equi : {true, false}) {
      const Quiver q = a_line(n, equi);
      const ARQuiver ar(q);
      const HomTable t(ar);
      std::vector<std::pair<int, int>> intervals;
      for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) intervals.emplace_back(a, b);
      for (auto [a1, b1] : intervals) {
        const ExplicitRep r1 = interval_module(q, a1, b1);
        const int v1 = ar.vertex_by_dim(r1.dims);
        for (auto [a2, b2] : intervals) {
          const ExplicitRep r2 = interval_module(q, a2, b2);
          const int v2 = ar.vertex_by_dim(r2.dims);
          CHECK(hom_space_dim(r1, r2) == t.hom(v1, v2));
          CHECK(ext_space_dim(r1, r2) == t.ext(v1, v2));
          // Rank-nullity packaged as the Euler form.
          CHECK(hom_space_dim(r1, r2) - ext_space_dim(r1, r2) ==
                euler_form(q, r1.dims, r2.dims));
        }
      }
    }
  }
}

TEST_CASE("count_subreps basics") {
  const Quiver a1 = build_quiver({parse_dynkin_label("A1")}, {}, {1});
  ExplicitRep s = interval_module(a1, 1, 1);
  const ExplicitRep ss = direct_sum(s, s);
  CHECK(count_subreps(ss, vec({1}), 2) == 3);  // P^1(F_2)
  CHECK(count_subreps(ss, vec({1}), 5) == 6);
  CHECK(count_subreps(ss, vec({0}), 3) == 1);
  CHECK(count_subreps(ss, vec({2}), 3) == 1);

  const Quiver a2 = a_line(2);
  const ExplicitRep p1 = interval_module(a2, 1, 2);
  CHECK(count_subreps(p1, vec({1, 0}), 3) == 0);
  CHECK(count_subreps(p1, vec({0, 1}), 3) == 1);
  CHECK(count_subreps(p1, vec({1, 1}), 7) == 1);

  CHECK_THROWS_AS(count_subreps(p1, vec({1, 0}), 4), DomainError);
  CHECK_THROWS_AS(count_subreps(p1, vec({2, 0}), 3), DomainError);
  CHECK_THROWS_AS(count_subreps(ss, vec({1}), 101, BigInt(4)), BudgetExceeded);
}

TEST_CASE("interpolation") {
  CountInterpolation lin = interpolate_count({{2, 3}, {3, 4}, {5, 6}}, 1);
  REQUIRE(lin.polynomial);
  CHECK(lin.poly == (QPoly::constant(1) + QPoly::monomial(1, 1)));

  CountInterpolation cst = interpolate_count({{2, 1}, {3, 1}}, 0);
  REQUIRE(cst.polynomial);
  CHECK(cst.poly == QPoly::constant(1));

  // Points of P^1 but one corrupted: diagnostic, not a crash.
  CountInterpolation bad = interpolate_count({{2, 3}, {3, 4}, {5, 7}}, 1);
  CHECK_FALSE(bad.polynomial);
  CHECK(bad.note.find("not polynomial") != std::string::npos);

  // Genuinely non-integer fit: the line through (2,1), (4,2) is t/2.
  CountInterpolation frac = interpolate_count({{2, 1}, {4, 2}}, 1);
  CHECK_FALSE(frac.polynomial);

  CHECK_THROWS_AS(interpolate_count({{2, 3}}, 1), DomainError);
  CHECK_THROWS_AS(interpolate_count({{2, 3}, {2, 3}}, 1), DomainError);
}

TEST_CASE("D4 fixtures: counts interpolate to t^2 + 4t + 1") {
  for (const std::string name : {"d4_E.rep.json", "d4_F.rep.json"}) {
    const ExplicitRep rep =
        load_rep_file(std::string(DYNQ_FIXTURES) + "/" + name);
    CHECK(eq(rep.dims, vec({2, 2, 2, 3})));
    std::vector<std::pair<Int, BigInt>> counts;
    for (Int p : {2, 3, 5})
      counts.emplace_back(p, count_subreps(rep, vec({1, 1, 1, 2}), p));
    const CountInterpolation ip = interpolate_count(counts, 2);
    REQUIRE(ip.polynomial);
    const QPoly expect = QPoly::constant(1) + QPoly::monomial(1, 4) +
                         QPoly::monomial(2, 1);
    CHECK(ip.poly == expect);
  }
}

TEST_CASE("chi-sum of the D4 indecomposable (1,1,1,2) via point counts") {
  // Explicit model: three distinct lines in K^2.
  const Quiver q =
      build_quiver({parse_dynkin_label("D4")}, {{1, 4}, {2, 4}, {3, 4}});
  ExplicitRep rep;
  rep.quiver = q;
  rep.prime = 0;
  rep.dims = vec({1, 1, 1, 2});
  IntMatrix l1(2, 1), l2(2, 1), l3(2, 1);
  l1 << 1, 0;
  l2 << 0, 1;
  l3 << 1, 1;
  rep.maps = {l1, l2, l3};
  rep.validate();

  const ARQuiver ar(q);
  const FTable ft(ar);
  const int v = ar.vertex_by_dim(rep.dims);
  BigInt chi_sum = 0;
  for_each_subvector(rep.dims, [&](const DimVector& e) {
    std::vector<std::pair<Int, BigInt>> counts;
    for (Int p : {2, 3, 5, 7})
      counts.emplace_back(p, count_subreps(rep, e, p));
    BigInt chi = 0;
    if (counts[0].second != 0) {
      const Int bound =
          std::max<Int>(euler_form(q, e, DimVector(rep.dims - e)), 0);
      const CountInterpolation ip =
          interpolate_count(counts, static_cast<int>(bound));
      REQUIRE(ip.polynomial);
      chi = ip.poly.eval_one();
    }
    CHECK(chi == ft.of_vertex(v).coeff(e));
    chi_sum += chi;
  });
  CHECK(chi_sum == 14);
}

TEST_CASE("counts are isomorphism-invariant") {
  std::mt19937 rng(4242);
  const Quiver a3 = a_line(3);
  const ARQuiver ar(a3);
  const HomTable t(ar);
  const ExplicitRep rep = generic_rep_type_a(t, vec({2, 2, 1}));
  for (Int p : {2, 3}) {
    for (int trial = 0; trial < 3; ++trial) {
      const ExplicitRep twisted = conjugated(rep, p, rng);
      for_each_subvector(rep.dims, [&](const DimVector& e) {
        CHECK(count_subreps(rep, e, p) == count_subreps(twisted, e, p));
      });
    }
  }
}

TEST_CASE("interpolated counts match euler_char on type-A generic modules") {
  const Quiver q = a_line(3);
  const ARQuiver ar(q);
  const HomTable t(ar);
  const FTable ft(ar);
  for_each_subvector(vec({2, 2, 2}), [&](const DimVector& d) {
    const ExplicitRep rep = generic_rep_type_a(t, d);
    const ModuleExpr m = generic_decomposition(t, d);
    for_each_subvector(d, [&](const DimVector& e) {
      std::vector<std::pair<Int, BigInt>> counts;
      for (Int p : {2, 3, 5, 7}) counts.emplace_back(p, count_subreps(rep, e, p));
      const BigInt chi = euler_char(ft, m, e);
      if (counts[0].second == 0) {
        for (const auto& [p, c] : counts) CHECK(c == 0);
        CHECK(chi == 0);
        return;
      }
      const Int bound = std::max<Int>(euler_form(q, e, DimVector(d - e)), 0);
      const CountInterpolation ip =
          interpolate_count(counts, static_cast<int>(bound));
      REQUIRE(ip.polynomial);
      CHECK(ip.poly.eval_one() == chi);
    });
  });
}

TEST_CASE("fixture JSON round-trip") {
  const ExplicitRep rep =
      load_rep_file(std::string(DYNQ_FIXTURES) + "/d4_E.rep.json");
  const ExplicitRep again = parse_rep_json(to_rep_json(rep));
  CHECK(eq(again.dims, rep.dims));
  for (std::size_t i = 0; i < rep.maps.size(); ++i)
    CHECK(eq(IntMatrix(again.maps[i]), IntMatrix(rep.maps[i])));
  CHECK_THROWS_AS(parse_rep_json("{"), DomainError);
  CHECK_THROWS_AS(parse_rep_json("{}"), DomainError);
}
