#include "ratfunc.hpp"

#include <vector>

#include "errors.hpp"
#include "expr_parser.hpp"

namespace qtk {

namespace {

IntPoly exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("rational function: inexact cofactor division");
  return std::move(*q);
}

}  // namespace

RatFunc::RatFunc(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  if (den_.is_one()) return;
  Integer c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (den_.leading().coeff < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_scalar(c);
    den_ = den_.div_scalar(c);
  }
  Monomial m = min(num_.monomial_content(), den_.monomial_content());
  if (!m.is_one()) {
    num_ = num_.div_monomial(m);
    den_ = den_.div_monomial(m);
  }
  // Monomial or single-term factors are fully handled above.
  if (num_.is_monomial() || den_.is_monomial()) return;
  IntPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact(num_, g);
    den_ = exact(den_, g);
    if (den_.leading().coeff < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // Henrici: with g = gcd(b,d), a/b + c/d = (a d' + c b') / (b' d' g).
  IntPoly g = gcd(den_, o.den_);
  IntPoly b1 = exact(den_, g), d1 = exact(o.den_, g);
  IntPoly n = num_ * d1 + o.num_ * b1;
  if (n.is_zero()) return *this = RatFunc();
  IntPoly d = b1 * d1;
  if (!g.is_one()) {
    IntPoly h = gcd(n, g);
    n = exact(n, h);
    d = d * exact(g, h);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  IntPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  num_ = exact(num_, g1) * exact(o.num_, g2);
  den_ = exact(den_, g2) * exact(o.den_, g1);
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  return *this *= o.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  RatFunc r(den_, num_, Raw{});
  if (r.den_.leading().coeff < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)), Raw{});
}

RatFunc RatFunc::adams(unsigned k) const {
  RatFunc r(num_.adams(k), den_.adams(k), Raw{});
  return r;
}

RatFunc RatFunc::swap_vars(Var a, Var b) const {
  return RatFunc(num_.swap_vars(a, b), den_.swap_vars(a, b));
}

namespace {

// Returns P and D with p(bindings) = P / D.
std::pair<IntPoly, IntPoly> substitute_poly(const IntPoly& p,
                                            const std::map<Var, RatFunc>& bindings) {
  struct Bound {
    Var v;
    const RatFunc* value;
    unsigned deg;
    std::vector<IntPoly> num_pow, den_pow;
  };
  std::vector<Bound> bound;
  IntPoly total_den(1);
  for (const auto& [v, value] : bindings) {
    unsigned d = p.degree(v);
    if (d == 0) continue;
    Bound b{v, &value, d, {IntPoly(1)}, {IntPoly(1)}};
    for (unsigned e = 1; e <= d; ++e) {
      b.num_pow.push_back(b.num_pow.back() * value.num());
      b.den_pow.push_back(b.den_pow.back() * value.den());
    }
    total_den *= b.den_pow[d];
    bound.push_back(std::move(b));
  }
  if (bound.empty()) return {p, IntPoly(1)};
  IntPoly acc;
  for (const Term& term : p.terms()) {
    auto exps = term.mono.exponents();
    IntPoly piece(Monomial{}, term.coeff);
    for (const auto& b : bound) {
      unsigned e = exps[static_cast<int>(b.v)];
      exps[static_cast<int>(b.v)] = 0;
      piece = piece * b.num_pow[e];
      if (e < b.deg) piece = piece * b.den_pow[b.deg - e];
    }
    acc += piece.mul_term(Monomial::from_exponents(exps), 1);
  }
  return {acc, total_den};
}

}  // namespace

RatFunc RatFunc::specialize(const std::map<Var, RatFunc>& bindings) const {
  auto [nn, nd] = substitute_poly(num_, bindings);
  auto [dn, dd] = substitute_poly(den_, bindings);
  if (dn.is_zero()) throw DivisionByZero("specialization makes the denominator vanish");
  return RatFunc(nn, nd) / RatFunc(dn, dd);
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const IntPoly& p) {
    std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

namespace {

struct RatSemantics {
  using Value = RatFunc;
  Value integer(const Integer& c) { return RatFunc(c); }
  Value name(const std::string& n, const std::optional<std::vector<int>>& idx) {
    Var v;
    if (idx || !parse_var(n, v)) throw std::invalid_argument("unknown indeterminate '" + n + "'");
    return RatFunc::var(v);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return a / b;
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, unsigned e) { return a.pow(static_cast<int>(e)); }
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) {
  RatSemantics sem;
  return ExprParser<RatSemantics>(text, sem).parse();
}

RatFunc field_op(FieldOp kind, const RatFunc& x, const RatFunc& y) {
  switch (kind) {
    case FieldOp::add: return x + y;
    case FieldOp::sub: return x - y;
    case FieldOp::mul: return x * y;
    case FieldOp::div: return x / y;
  }
  throw InternalError("unknown field operation");
}

}  // namespace qtk
