#pragma once

#include <map>
#include <string>
#include <string_view>

#include "intpoly.hpp"

namespace qtk {

// Element of Q(q,t,A,u,y,z) kept in canonical form: num/den coprime, integer
// content removed, den with positive leading coefficient, zero as 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const IntPoly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const Integer& c) : num_(c), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFunc(int c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  RatFunc(const IntPoly& num, const IntPoly& den);

  static RatFunc var(Var v) { return RatFunc(IntPoly::var(v)); }
  static RatFunc parse(std::string_view text);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc adams(unsigned k) const;
  RatFunc swap_vars(Var a, Var b) const;
  // Simultaneous substitution of the bound indeterminates.
  RatFunc specialize(const std::map<Var, RatFunc>& bindings) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::size_t hash() const { return num_.hash() * 31u ^ den_.hash(); }

  // "num" when den = 1, otherwise "(num)/(den)" with parentheses dropped
  // around single-term factors.
  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(IntPoly num, IntPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

enum class FieldOp { add, sub, mul, div };
RatFunc field_op(FieldOp kind, const RatFunc& x, const RatFunc& y);

}  // namespace qtk
