#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace qtk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Term {
  Monomial mono;
  Integer coeff;
};

// Sparse multivariate polynomial with integer coefficients over the fixed
// indeterminate universe. Terms are kept strictly decreasing in the monomial
// order and no stored coefficient is zero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  IntPoly(long c) : IntPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  IntPoly(int c) : IntPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)
  IntPoly(Monomial m, const Integer& c = 1);

  static IntPoly var(Var v, unsigned e = 1) { return IntPoly(Monomial::of(v, e)); }
  // Accepts terms in any order; merges duplicates and drops zeros.
  static IntPoly from_terms(std::vector<Term> terms);
  static IntPoly parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term value; only meaningful when is_constant().
  Integer constant_value() const;
  Integer constant_term() const;

  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  unsigned degree(Var v) const;
  unsigned min_degree(Var v) const;
  unsigned total_degree() const;
  bool uses(Var v) const { return degree(v) > 0; }
  Monomial monomial_content() const;  // largest monomial dividing every term
  Integer content() const;            // positive gcd of the coefficients

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly mul_term(Monomial m, const Integer& c) const;
  IntPoly mul_scalar(const Integer& c) const;
  // Exact division by a nonzero integer; precondition: it divides every coefficient.
  IntPoly div_scalar(const Integer& c) const;
  // Precondition: m divides every term.
  IntPoly div_monomial(Monomial m) const;
  IntPoly pow(unsigned k) const;

  // Quotient when divisor divides *this exactly, nullopt otherwise.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;

  // Coefficients of powers of v (index = exponent); each entry is free of v.
  std::vector<IntPoly> coefficients_in(Var v) const;
  static IntPoly from_coefficients(Var v, const std::vector<IntPoly>& coeffs);

  // Every indeterminate v replaced by v^k (the power-sum action p_k on a
  // polynomial with integer coefficients).
  IntPoly adams(unsigned k) const;
  IntPoly swap_vars(Var a, Var b) const;
  IntPoly substitute(Var v, const IntPoly& value) const;

  friend bool operator==(const IntPoly& a, const IntPoly& b);
  std::size_t hash() const;

  // Canonical rendering in pure lex order, e.g. "q^3 + q^2*t + q*t + t^3".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);

// s_{ab}(q,t) = q^a t^b + q^{a-1} t^{b+1} + ... + q^b t^a for a >= b.
IntPoly schur_qt(unsigned a, unsigned b);

std::string integer_to_string(const Integer& c);

}  // namespace qtk
