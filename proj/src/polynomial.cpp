#include "dynq/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dynq {

namespace {

Int total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), Int{0});
}

// Total degree first, then lexicographic: the elimination order used by
// exact division (divisors with constant term 1 make it terminating).
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const Int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return ExpLexLess{}(a, b);
  }
};

Exponent to_exponent(const DimVector& v) {
  Exponent e(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) e[i] = v[i];
  return e;
}

std::string monomial_string(const Exponent& e, const BigInt& c,
                            const std::string& var) {
  std::ostringstream os;
  bool printed = false;
  if (c != 1) {
    os << c.str();
    printed = true;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << var << (e.size() > 1 ? std::to_string(i + 1) : "");
    if (e[i] != 1) os << "^" << e[i];
    printed = true;
  }
  if (!printed) os << "1";
  return os.str();
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, BigInt c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(Exponent e, BigInt c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(std::move(e), c);
  return p;
}

MultiPoly MultiPoly::monomial(const DimVector& e, BigInt c) {
  return monomial(to_exponent(e), std::move(c));
}

BigInt MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::coeff(const DimVector& e) const {
  return coeff(to_exponent(e));
}

void MultiPoly::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw DomainError("polynomial term arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (Int x : e)
      if (x < 0) return true;
  return false;
}

Int MultiPoly::max_total_degree() const {
  Int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
  return best;
}

BigInt MultiPoly::eval_ones() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw DomainError("polynomial arity mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (ExpLexLess{}(it->first, jt->first)) return true;
    if (ExpLexLess{}(jt->first, it->first)) return false;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return it == terms_.end() && jt != o.terms_.end();
}

std::string MultiPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    os << monomial_string(e, c > 0 ? c : BigInt(-c), var);
    first = false;
  }
  return os.str();
}

MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (num.nvars() != den.nvars())
    throw DomainError("exact_divide arity mismatch");
  const int n = num.nvars();
  const Exponent zero(n, 0);
  if (den.coeff(zero) != 1)
    throw DomainError("exact_divide requires a divisor with constant term 1");
  if (num.has_negative_exponent() || den.has_negative_exponent())
    throw DomainError("exact_divide requires genuine polynomials");

  const Int degree_bound = num.max_total_degree();
  std::map<Exponent, BigInt, GradedLexLess> rem(num.terms().begin(),
                                                num.terms().end());
  MultiPoly quot(n);
  Exponent prod(n);
  while (!rem.empty()) {
    const auto [m, c] = *rem.begin();
    if (total_degree(m) > degree_bound)
      throw ExactDivisionError(
          "exact_divide: nonzero remainder, first surviving term has exponent " +
              format_vector(Eigen::Map<const DimVector>(m.data(), m.size())),
          m);
    quot.add_term(m, c);
    for (const auto& [e, dc] : den.terms()) {
      for (int i = 0; i < n; ++i) prod[i] = m[i] + e[i];
      auto [it, inserted] = rem.emplace(prod, -c * dc);
      if (!inserted) {
        it->second -= c * dc;
        if (it->second == 0) rem.erase(it);
      } else if (it->second == 0) {
        rem.erase(it);
      }
    }
  }
  return quot;
}

MultiPoly substitute_monomials(const MultiPoly& f,
                               const std::vector<DimVector>& columns,
                               const DimVector& shift) {
  if (static_cast<int>(columns.size()) != f.nvars())
    throw DomainError("substitute_monomials: one monomial per variable required");
  const int m = static_cast<int>(shift.size());
  for (const auto& col : columns)
    if (col.size() != m)
      throw DomainError("substitute_monomials: exponent length mismatch");
  MultiPoly out(m);
  Exponent e(m);
  for (const auto& [exp, c] : f.terms()) {
    DimVector acc = shift;
    for (int i = 0; i < f.nvars(); ++i) acc += exp[i] * columns[i];
    for (int i = 0; i < m; ++i) e[i] = acc[i];
    out.add_term(e, c);
  }
  return out;
}

QPoly QPoly::constant(BigInt c) {
  QPoly p;
  p.add_term(0, c);
  return p;
}

QPoly QPoly::monomial(Int e, BigInt c) {
  QPoly p;
  p.add_term(e, c);
  return p;
}

BigInt QPoly::coeff(Int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QPoly::add_term(Int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int QPoly::min_exponent() const {
  if (terms_.empty()) throw InternalError("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

Int QPoly::max_exponent() const {
  if (terms_.empty()) throw InternalError("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

bool QPoly::even_exponents_only() const {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return false;
  return true;
}

bool QPoly::nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

BigInt QPoly::eval_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QPoly QPoly::reciprocal(Int degree) const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(degree - e, c);
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

QPoly QPoly::shifted(Int k) const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e + k, c);
  return out;
}

std::string QPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const BigInt a = c > 0 ? c : BigInt(-c);
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

DimVector parse_vector(const std::string& text) {
  std::vector<Int> entries;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      std::string t;
      for (char c : cur)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      if (t.empty()) throw DomainError("empty entry in vector '" + text + "'");
      try {
        entries.push_back(std::stoll(t));
      } catch (const std::exception&) {
        throw DomainError("bad integer '" + t + "' in vector '" + text + "'");
      }
      cur.clear();
    } else {
      cur += ch;
    }
  }
  DimVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
  return v;
}

}  // namespace dynq
