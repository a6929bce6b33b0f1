#include "knots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "errors.hpp"
#include "hall.hpp"
#include "limits.hpp"
#include "plethysm.hpp"

namespace qtk::knots {

namespace {

IntPoly to_intpoly(const RatFunc& r, const char* what) {
  if (!r.is_polynomial()) throw InternalError(std::string(what) + ": expected a polynomial, got " + r.to_string());
  return r.num();
}

Integer to_integer(const RatFunc& r) {
  if (!r.is_constant()) throw InvalidInput("candidate coefficients must be integers, got " + r.to_string());
  IntPoly num = r.num(), den = r.den();
  auto q = num.divide_exact(den);
  if (!q) throw InvalidInput("candidate coefficients must be integers, got " + r.to_string());
  return q->constant_value();
}

const IntPoly kA = IntPoly::var(Var::A);

}  // namespace

IntPoly SuperPoly::as_poly() const {
  IntPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * kA.pow(static_cast<unsigned>(i));
  return out;
}

std::string SuperPoly::to_string(Format f) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += " ; ";
    out += "A^" + std::to_string(i) + ": ";
    if (f == Format::schur && schur_form && i < schur_form->size()) {
      out += (*schur_form)[i].to_string();
    } else if (auto x = f == Format::schur ? schur_qt_try_expand(coeffs[i]) : std::nullopt) {
      out += x->to_string();
    } else {
      out += coeffs[i].to_string();  // monomial, also the fallback for non-symmetric coefficients
    }
  }
  return out;
}

SuperPoly SuperPoly::parse(std::string_view text) {
  SuperPoly p;
  std::vector<SchurQT> forms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t colon = item.find(':');
    std::string head(item.substr(0, colon));
    head.erase(std::remove(head.begin(), head.end(), ' '), head.end());
    if (colon == std::string_view::npos || head != "A^" + std::to_string(p.coeffs.size()))
      throw InvalidInput("superpolynomial text: expected A^" + std::to_string(p.coeffs.size()));
    std::string_view body = item.substr(colon + 1);
    IntPoly c = body.find('s') != std::string_view::npos ? schur_qt_parse(body) : IntPoly::parse(body);
    for (Var v : kAllVars)
      if (v != Var::q && v != Var::t && c.uses(v)) throw InvalidInput("superpolynomial text: coefficients are in q, t");
    if (auto x = schur_qt_try_expand(c)) forms.push_back(std::move(*x));
    p.coeffs.push_back(std::move(c));
    pos = end + 1;
  }
  if (forms.size() == p.coeffs.size()) p.schur_form = std::move(forms);
  return p;
}

namespace {

struct EknMemo {
  std::mutex mu;
  std::map<std::pair<int, int>, SymFunc> values;
};

EknMemo& ekn_memo() {
  static EknMemo m;
  return m;
}

}  // namespace

SymFunc e_kn(int k, int n) {
  if (k < 1 || n < 1) throw InvalidInput("e_kn: requires k, n >= 1");
  check_degree(n, "e_kn");
  if (auto v = memoized_e_kn(k, n)) return *v;
  const int d = std::gcd(k, n);
  SymFunc v = hall::create(e_n(d), k / d, n / d);
  install_e_kn(k, n, v);
  return v;
}

std::optional<SymFunc> memoized_e_kn(int k, int n) {
  auto& m = ekn_memo();
  std::lock_guard lock(m.mu);
  auto it = m.values.find({k, n});
  if (it == m.values.end()) return std::nullopt;
  return it->second;
}

void install_e_kn(int k, int n, const SymFunc& f) {
  auto& m = ekn_memo();
  std::lock_guard lock(m.mu);
  m.values.emplace(std::make_pair(k, n), f);
}

bool plausible_e_kn(int k, int n, const SymFunc& f) {
  if (k < 1 || n < 1 || f.is_zero() || !f.is_homogeneous() || f.max_degree() != n) return false;
  for (const auto& [lam, c] : f.terms())
    if (!c.is_polynomial()) return false;
  if (k < n) return true;
  try {
    static const pleth::Alphabet one_u = pleth::Alphabet::parse("1-u");
    RatFunc lhs = pleth::plethysm_scalar(f.specialize({{Var::t, RatFunc(0)}}), one_u);
    const IntPoly q = IntPoly::var(Var::q), u = IntPoly::var(Var::u);
    IntPoly rhs = q.pow(static_cast<unsigned>(delta_t0(k, n)));
    for (int i = 0; i < n; ++i) rhs *= IntPoly(1) - q.pow(static_cast<unsigned>(i)) * u;
    return lhs == RatFunc(rhs);
  } catch (const std::exception&) {
    return false;
  }
}

IntPoly eval_qt(const SymFunc& f) {
  static const pleth::Alphabet qt = pleth::Alphabet::parse("q+t");
  return to_intpoly(pleth::plethysm_scalar(f, qt), "eval_qt");
}

SymFunc schur_qt_to_symfunc(const SchurQT& x) {
  SymFunc f;
  for (const auto& t : x.terms)
    f.add_term(Partition({static_cast<int>(t.a), static_cast<int>(t.b)}), RatFunc(t.mult));
  return f;
}

IntPoly superpoly_plethystic(int k, int n) {
  static const pleth::Alphabet alpha = pleth::Alphabet::parse("1-eps*A");
  RatFunc v = pleth::plethysm_scalar(omega(e_kn(k, n)), alpha) / RatFunc(IntPoly(1) + kA);
  return to_intpoly(v, "superpoly_plethystic");
}

SuperPoly superpoly(int k, int n) {
  SymFunc f = e_kn(k, n);
  SuperPoly p;
  std::vector<SchurQT> forms;
  for (int i = 0; i < n; ++i) {
    p.coeffs.push_back(to_intpoly(f.coeff(Partition::hook(i, n - 1 - i)), "superpoly"));
    forms.push_back(schur_qt_expand(p.coeffs.back()));
  }
  p.schur_form = std::move(forms);
  if (superpoly_plethystic(k, n) != p.as_poly())
    throw InternalError("superpoly: hook and plethystic routes disagree");
  return p;
}

int delta_t0(int k, int n) {
  int d = 0;
  for (int j = 1; j < n; ++j) d += (k * j) / n - j;
  return d;
}

EvalT0Report eval_t0_check(int k, int n) {
  if (k < n) throw InvalidInput("eval_t0_check: requires k >= n");
  static const pleth::Alphabet one_u = pleth::Alphabet::parse("1-u");
  EvalT0Report r;
  r.delta = delta_t0(k, n);
  SymFunc f = e_kn(k, n).specialize({{Var::t, RatFunc(0)}});
  r.lhs = to_intpoly(pleth::plethysm_scalar(f, one_u), "eval_t0_check");
  const IntPoly q = IntPoly::var(Var::q), u = IntPoly::var(Var::u);
  r.rhs = q.pow(static_cast<unsigned>(std::max(r.delta, 0)));
  for (int i = 0; i < n; ++i) r.rhs *= IntPoly(1) - q.pow(static_cast<unsigned>(i)) * u;
  r.pass = r.delta >= 0 && r.lhs == r.rhs;
  return r;
}

CandidateReport check_A_candidate(const SymFunc& cand, int k, int n) {
  for (const auto& [lam, c] : cand.terms()) to_integer(c);
  SuperPoly p = superpoly(k, n);
  CandidateReport r;
  for (int i = 0; i < n; ++i) {
    IntPoly got = eval_qt(perp_e(i, cand));
    if (got != p.coeffs[i]) {
      r.pass = false;
      r.first_mismatch = i;
      r.expected = p.coeffs[i];
      r.got = got;
      break;
    }
  }
  return r;
}

IntPoly hook_poly(const SymFunc& cand) {
  const IntPoly y = IntPoly::var(Var::y), mz = -IntPoly::var(Var::z);
  IntPoly out;
  for (const auto& [lam, c] : cand.terms()) {
    Integer m = to_integer(c);
    if (lam.empty()) throw InvalidInput("hook_poly: candidate has a constant term");
    if (!lam.is_hook()) continue;
    const int a = lam.hook_arm(), l = lam.hook_leg();
    out += (y.pow(a + l) * mz.pow(l)).mul_scalar(m);
  }
  return out;
}

HookPolyReport hook_poly_check(const SymFunc& cand, int n) {
  HookPolyReport r;
  r.computed = hook_poly(cand);
  if (r.computed.is_zero()) return r;
  r.delta = static_cast<int>(r.computed.min_degree(Var::y));
  const IntPoly y = IntPoly::var(Var::y), z = IntPoly::var(Var::z);
  r.reference = y.pow(r.delta);
  for (int i = 1; i <= n - 2; ++i) r.reference *= y.pow(i) - z;
  r.pass = r.computed == r.reference;
  return r;
}

IntPoly rho(int r, int k) {
  std::vector<SchurQTTerm> terms;
  for (int j = 0; j <= k; ++j) terms.push_back({static_cast<unsigned>(r + 2 * j), static_cast<unsigned>(k - j), 1});
  return schur_qt_reconstruct(terms);
}

std::vector<IntPoly> family_n2(int r) {
  if (r < 1) throw InvalidInput("family_n2: r >= 1");
  auto s = [](int a) { return schur_qt_reconstruct({{static_cast<unsigned>(a), 0, 1}}); };
  return {s(r), s(r - 1)};
}

std::vector<IntPoly> family_n3(int r) {
  if (r < 1) throw InvalidInput("family_n3: r >= 1");
  return {rho(r, r), rho(r, r - 1) + rho(r + 1, r - 1), rho(r - 1, r - 1)};
}

bool hook_agreement(int k, int n) {
  // Hooks are matched by arm: (i | n-1-i) in degree n against (i | k-1-i) in degree k.
  SymFunc a = e_kn(k, n), b = e_kn(n, k);
  for (int i = 0; i < std::max(k, n); ++i) {
    RatFunc ca = i < n ? a.coeff(Partition::hook(i, n - 1 - i)) : RatFunc();
    RatFunc cb = i < k ? b.coeff(Partition::hook(i, k - 1 - i)) : RatFunc();
    if (ca != cb) return false;
  }
  return true;
}

bool schur_positive(const SuperPoly& p) {
  for (const auto& c : p.coeffs)
    if (!schur_qt_expand(c).positive()) return false;
  return true;
}

bool skew_positive(const SuperPoly& p) {
  SymFunc base = schur_qt_to_symfunc(schur_qt_expand(p.coeffs.at(0)));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    IntPoly diff = p.coeffs[i] - eval_qt(perp_e(static_cast<int>(i), base));
    if (!schur_qt_expand(diff).positive()) return false;
  }
  return true;
}

}  // namespace qtk::knots
