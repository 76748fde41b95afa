#pragma once

// Sparse exact polynomial arithmetic over the integers: n commuting
// variables with signed exponents (Laurent) or non-negative exponents,
// plus one-variable Laurent polynomials in q.  Coefficients are
// unbounded integers; zero coefficients are never stored.

#include <map>
#include <string>
#include <vector>

#include "dynq/types.hpp"

namespace dynq {

using Exponent = std::vector<Int>;

struct ExpLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Exact division failed: the dividend is not a multiple of the divisor.
class ExactDivisionError : public InternalError {
 public:
  ExactDivisionError(const std::string& what, Exponent term)
      : InternalError(what), surviving_term(std::move(term)) {}
  Exponent surviving_term;
};

/// Sparse polynomial in a fixed number of commuting variables.
/// Exponents may be negative (Laurent monomials); operations that
/// require genuine polynomials state so in their contracts.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, BigInt, ExpLexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, BigInt c);
  static MultiPoly monomial(Exponent e, BigInt c = 1);
  static MultiPoly monomial(const DimVector& e, BigInt c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Terms in canonical (lexicographic) order.
  const TermMap& terms() const { return terms_; }

  BigInt coeff(const Exponent& e) const;
  BigInt coeff(const DimVector& e) const;
  void add_term(const Exponent& e, const BigInt& c);

  bool has_negative_exponent() const;
  Int max_total_degree() const;

  BigInt eval_ones() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  /// Total order (nvars, then term sequence); used for canonical sets.
  bool operator<(const MultiPoly& o) const;

  /// Renders e.g. "1 + y1*y2 + 2*y2^3" with the given variable stem.
  std::string to_string(const std::string& var = "y") const;

 private:
  void check_arity(const MultiPoly& o) const;
  int nvars_;
  TermMap terms_;
};

/// Exact quotient num/den for a divisor with constant term 1; eliminates
/// terms in increasing total degree and throws ExactDivisionError (with
/// the first surviving term) if any remainder survives.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

/// Substitutes variable i by the Laurent monomial x^{columns[i]} and
/// multiplies by x^{shift}; exponents that collide are accumulated.
MultiPoly substitute_monomials(const MultiPoly& f,
                               const std::vector<DimVector>& columns,
                               const DimVector& shift);

/// One-variable Laurent polynomial in q.
class QPoly {
 public:
  using TermMap = std::map<Int, BigInt>;

  QPoly() = default;
  static QPoly constant(BigInt c);
  static QPoly monomial(Int e, BigInt c = 1);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  BigInt coeff(Int e) const;
  void add_term(Int e, const BigInt& c);

  Int min_exponent() const;  // throws on zero polynomial
  Int max_exponent() const;

  bool is_polynomial() const { return terms_.empty() || min_exponent() >= 0; }
  bool even_exponents_only() const;
  bool nonnegative_coefficients() const;

  BigInt eval_one() const;

  /// q^degree * P(1/q); palindrome test partner for Poincare duality.
  QPoly reciprocal(Int degree) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  /// Multiplication by q^k.
  QPoly shifted(Int k) const;

  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "q") const;

 private:
  TermMap terms_;
};

}  // namespace dynq
