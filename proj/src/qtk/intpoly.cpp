#include "intpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "errors.hpp"
#include "expr_parser.hpp"

namespace qtk {

bool parse_var(std::string_view name, Var& out) {
  for (int i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) {
      out = kAllVars[i];
      return true;
    }
  }
  return false;
}

std::string Monomial::to_string() const {
  std::string s;
  for (Var v : kAllVars) {
    unsigned e = exponent(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string integer_to_string(const Integer& c) { return c.str(); }

namespace {

bool mono_greater(const Term& a, const Term& b) { return a.mono > b.mono; }

// Merge two descending term lists, combining a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].mono > b[j].mono) {
      out.push_back(a[i++]);
    } else if (b[j].mono > a[i].mono) {
      out.push_back({b[j].mono, negate_b ? Integer(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].mono, negate_b ? Integer(-b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

IntPoly::IntPoly(Monomial m, const Integer& c) {
  if (c != 0) terms_.push_back({m, c});
}

IntPoly IntPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), mono_greater);
  IntPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Integer IntPoly::constant_value() const {
  return terms_.empty() ? Integer(0) : terms_[0].coeff;
}

Integer IntPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

unsigned IntPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned IntPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = terms_[0].mono.exponent(v);
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

unsigned IntPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Monomial IntPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) {
    m = min(m, t.mono);
    if (m.is_one()) break;
  }
  return m;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    g = boost::multiprecision::gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g < 0 ? Integer(-g) : g;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return IntPoly::from_terms(std::move(prod));
}

IntPoly IntPoly::mul_term(Monomial m, const Integer& c) const {
  if (c == 0) return {};
  IntPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

IntPoly IntPoly::mul_scalar(const Integer& c) const { return mul_term(Monomial{}, c); }

IntPoly IntPoly::div_scalar(const Integer& c) const {
  if (c == 1) return *this;
  IntPoly r = *this;
  for (auto& t : r.terms_) t.coeff /= c;
  return r;
}

IntPoly IntPoly::div_monomial(Monomial m) const {
  if (m.is_one()) return *this;
  IntPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono / m;
  return r;
}

IntPoly IntPoly::pow(unsigned k) const {
  IntPoly result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return IntPoly{};
  if (divisor.terms_.size() == 1) {
    const Term& d = divisor.terms_[0];
    IntPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono)) return std::nullopt;
      if (t.coeff % d.coeff != 0) return std::nullopt;
      r.terms_.push_back({t.mono / d.mono, t.coeff / d.coeff});
    }
    return r;
  }
  if (divisor.total_degree() > total_degree()) return std::nullopt;
  for (Var v : kAllVars)
    if (divisor.degree(v) > degree(v)) return std::nullopt;

  const Term& lt = divisor.terms_[0];
  std::vector<Term> quot;
  IntPoly rem = *this;
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_[0];
    if (!lt.mono.divides(lr.mono)) return std::nullopt;
    if (lr.coeff % lt.coeff != 0) return std::nullopt;
    Term qt{lr.mono / lt.mono, lr.coeff / lt.coeff};
    IntPoly sub = divisor.mul_term(qt.mono, qt.coeff);
    quot.push_back(std::move(qt));
    rem -= sub;
  }
  IntPoly q;
  q.terms_ = std::move(quot);
  return q;
}

std::vector<IntPoly> IntPoly::coefficients_in(Var v) const {
  std::vector<IntPoly> out(degree(v) + 1);
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    out[e].terms_.push_back({t.mono / Monomial::of(v, e), t.coeff});
  }
  return out;
}

IntPoly IntPoly::from_coefficients(Var v, const std::vector<IntPoly>& coeffs) {
  std::vector<Term> all;
  for (unsigned e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms_) all.push_back({t.mono * Monomial::of(v, e), t.coeff});
  return from_terms(std::move(all));
}

IntPoly IntPoly::adams(unsigned k) const {
  if (k == 1) return *this;
  IntPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono.pow(k);
  return r;
}

IntPoly IntPoly::swap_vars(Var a, Var b) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto e = t.mono.exponents();
    std::swap(e[static_cast<int>(a)], e[static_cast<int>(b)]);
    out.push_back({Monomial::from_exponents(e), t.coeff});
  }
  return from_terms(std::move(out));
}

IntPoly IntPoly::substitute(Var v, const IntPoly& value) const {
  auto coeffs = coefficients_in(v);
  IntPoly acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + *it;
  return acc;
}

bool operator==(const IntPoly& a, const IntPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::size_t IntPoly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.mono.hash();
    h = h * 1000003u ^ std::hash<std::string>{}(t.coeff.str());
  }
  return h;
}

std::string IntPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Printed in pure lexicographic order (q > t > A > u > y > z).
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return a->mono.lex_key() > b->mono.lex_key();
  });
  std::string s;
  bool first = true;
  for (const Term* tp : order) {
    const Term& t = *tp;
    bool neg = t.coeff < 0;
    Integer mag = neg ? Integer(-t.coeff) : t.coeff;
    std::string body;
    if (t.mono.is_one()) body = mag.str();
    else if (mag == 1) body = t.mono.to_string();
    else body = mag.str() + "*" + t.mono.to_string();
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

namespace {

struct PolySemantics {
  using Value = IntPoly;
  Value integer(const Integer& c) { return IntPoly(c); }
  Value name(const std::string& n, const std::optional<std::vector<int>>& idx) {
    Var v;
    if (idx || !parse_var(n, v)) throw std::invalid_argument("unknown indeterminate '" + n + "'");
    return IntPoly::var(v);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::invalid_argument("non-exact polynomial division");
    return *q;
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, unsigned e) { return a.pow(e); }
};

// ---- gcd -----------------------------------------------------------------

using UniPoly = std::vector<IntPoly>;  // coefficients in a main variable

void trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

IntPoly normalize_sign(IntPoly p) {
  if (!p.is_zero() && p.leading().coeff < 0) return -p;
  return p;
}

IntPoly content_of(const UniPoly& p) {
  std::vector<const IntPoly*> order;
  for (const auto& c : p)
    if (!c.is_zero()) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [](const IntPoly* a, const IntPoly* b) { return a->size() < b->size(); });
  IntPoly g;
  for (const IntPoly* c : order) {
    g = gcd(g, *c);
    if (g.is_one()) break;
  }
  return g;
}

UniPoly divide_each(const UniPoly& p, const IntPoly& c) {
  if (c.is_one()) return p;
  UniPoly out;
  out.reserve(p.size());
  for (const auto& x : p) {
    auto q = x.divide_exact(c);
    if (!q) throw InternalError("gcd: content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

UniPoly pseudo_remainder(UniPoly r, const UniPoly& b) {
  const std::size_t db = b.size() - 1;
  const IntPoly& lcb = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - 1 - db;
    IntPoly lcr = r.back();
    if (!lcb.is_one())
      for (auto& c : r) c = c * lcb;
    for (std::size_t j = 0; j <= db; ++j) r[j + shift] -= lcr * b[j];
    trim(r);
  }
  return r;
}

// Heuristic gcd: evaluate the main variable at a large integer, take the gcd
// of the images and lift it back through the balanced xi-adic expansion.
// Inputs must be primitive over Z. Returns nullopt if no attempt verifies.
Integer max_norm(const IntPoly& p) {
  Integer m = 0;
  for (const auto& t : p.terms()) m = std::max(m, Integer(abs(t.coeff)));
  return m;
}

IntPoly eval_at(const IntPoly& p, Var v, const Integer& xi) {
  std::vector<Integer> powers{1};
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    unsigned e = t.mono.exponent(v);
    while (powers.size() <= e) powers.push_back(powers.back() * xi);
    out.push_back({t.mono / Monomial::of(v, e), t.coeff * powers[e]});
  }
  return IntPoly::from_terms(std::move(out));
}

std::optional<IntPoly> lift_xi_adic(IntPoly g, Var v, const Integer& xi, unsigned max_deg) {
  const Integer half = xi / 2;
  std::vector<Term> out;
  for (unsigned i = 0; !g.is_zero(); ++i) {
    if (i > max_deg) return std::nullopt;
    std::vector<Term> digit;
    for (const auto& t : g.terms()) {
      Integer r = t.coeff % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) digit.push_back({t.mono, r});
    }
    IntPoly d = IntPoly::from_terms(digit);
    for (const auto& t : digit) out.push_back({t.mono * Monomial::of(v, i), t.coeff});
    g = (g - d).div_scalar(xi);
  }
  return IntPoly::from_terms(std::move(out));
}

std::optional<IntPoly> heuristic_gcd(const IntPoly& a, const IntPoly& b) {
  Var v = Var::q;
  bool found = false;
  for (Var w : kAllVars)
    if (a.uses(w) || b.uses(w)) {
      v = w;
      found = true;
      break;
    }
  if (!found) return std::nullopt;
  const unsigned max_deg = std::min(a.degree(v), b.degree(v));
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    IntPoly g = gcd(eval_at(a, v, xi), eval_at(b, v, xi));
    if (auto lifted = lift_xi_adic(g, v, xi, max_deg); lifted && !lifted->is_zero()) {
      IntPoly G = normalize_sign(lifted->div_scalar(lifted->content()));
      if (G.is_one()) return G;
      if (a.divide_exact(G) && b.divide_exact(G)) return G;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

IntPoly gcd_core(const IntPoly& a, const IntPoly& b) {
  if (a.is_constant() || b.is_constant())
    return IntPoly(boost::multiprecision::gcd(a.content(), b.content()));

  // Cheap exact-divisibility shortcut.
  const IntPoly& big = a.size() >= b.size() ? a : b;
  const IntPoly& small = a.size() >= b.size() ? b : a;
  if (auto q = big.divide_exact(small)) return normalize_sign(small);

  {
    Integer ca = a.content(), cb = b.content();
    if (auto g = heuristic_gcd(a.div_scalar(ca), b.div_scalar(cb)))
      return normalize_sign(g->mul_scalar(boost::multiprecision::gcd(ca, cb)));
  }

  Var v = Var::q;
  for (Var w : kAllVars) {
    if (a.uses(w) || b.uses(w)) {
      v = w;
      break;
    }
  }
  UniPoly A = a.coefficients_in(v), B = b.coefficients_in(v);
  IntPoly ca = content_of(A), cb = content_of(B);
  IntPoly c = gcd(ca, cb);
  if (A.size() == 1 || B.size() == 1) return c;

  UniPoly pa = divide_each(A, ca), pb = divide_each(B, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  UniPoly g;
  for (;;) {
    UniPoly r = pseudo_remainder(pa, pb);
    if (r.empty()) {
      g = std::move(pb);
      break;
    }
    if (r.size() == 1) {
      g = {IntPoly(1)};
      break;
    }
    pa = std::move(pb);
    pb = divide_each(r, content_of(r));
  }
  IntPoly gp = IntPoly::from_coefficients(v, g);
  return normalize_sign(c * gp);
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  PolySemantics sem;
  return ExprParser<PolySemantics>(text, sem).parse();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant())
    return IntPoly(boost::multiprecision::gcd(a.content(), b.content()));
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial mg = min(ma, mb);
  IntPoly g = gcd_core(a.div_monomial(ma), b.div_monomial(mb));
  return normalize_sign(g.mul_term(mg, 1));
}

IntPoly schur_qt(unsigned a, unsigned b) {
  if (a < b) throw std::invalid_argument("schur_qt requires a >= b");
  std::vector<Term> terms;
  for (unsigned i = b; i <= a; ++i)
    terms.push_back({Monomial::of(Var::q, i) * Monomial::of(Var::t, a + b - i), 1});
  return IntPoly::from_terms(std::move(terms));
}

}  // namespace qtk
