#include "symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "errors.hpp"
#include "expr_parser.hpp"

namespace qtk {

RatFunc to_ratfunc(const Rational& r) {
  if (denominator(r) == 1) return RatFunc(numerator(r));
  return RatFunc(IntPoly(numerator(r)), IntPoly(denominator(r)));
}

// ---- SymFunc basics --------------------------------------------------------

SymFunc::SymFunc(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(Partition(), c);
}

SymFunc SymFunc::schur(const Partition& lambda, const RatFunc& c) {
  SymFunc f;
  f.add_term(lambda, c);
  return f;
}

SymFunc SymFunc::basis(Basis b, const Partition& lambda) {
  const DegreeTables& t = degree_tables(lambda.size());
  const auto& row = t.to_schur[static_cast<int>(b)][t.at(lambda)];
  SymFunc f;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) f.add_term(t.parts[j], to_ratfunc(row[j]));
  return f;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? RatFunc() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }
int SymFunc::min_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

SymFunc SymFunc::homogeneous_part(int n) const {
  SymFunc out;
  for (const auto& [lam, c] : terms_)
    if (lam.size() == n) out.terms_.emplace(lam, c);
  return out;
}

std::optional<RatFunc> SymFunc::scalar_value() const {
  if (terms_.empty()) return RatFunc();
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& [lam, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [lam, c] : o.terms_) add_term(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

SymFunc SymFunc::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
  SymFunc out;
  for (const auto& [lam, c] : terms_) out.add_term(lam, fn(c));
  return out;
}

SymFunc SymFunc::specialize(const std::map<Var, RatFunc>& bindings) const {
  return map_coeffs([&](const RatFunc& c) { return c.specialize(bindings); });
}

namespace {

bool simple_coeff(const RatFunc& c) { return c.num().is_monomial() && c.den().is_monomial(); }

}  // namespace

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [lam, c] : terms_) {
    std::string base = "s[" + lam.to_string() + "]";
    bool neg = false;
    std::string body;
    if (simple_coeff(c)) {
      neg = c.num().leading().coeff < 0;
      RatFunc mag = neg ? -c : c;
      if (lam.empty()) body = mag.to_string();
      else body = mag.is_one() ? base : mag.to_string() + "*" + base;
    } else {
      body = "(" + c.to_string() + ")";
      if (!lam.empty()) body += "*" + base;
    }
    if (first) s += neg ? "-" + body : body;
    else s += (neg ? " - " : " + ") + body;
    first = false;
  }
  return s;
}

namespace {

struct SymSemantics {
  using Value = SymFunc;
  Value integer(const Integer& c) { return SymFunc(RatFunc(c)); }
  Value name(const std::string& n, const std::optional<std::vector<int>>& idx) {
    if (!idx) {
      Var v;
      if (!parse_var(n, v)) throw std::invalid_argument("unknown name '" + n + "'");
      return SymFunc(RatFunc::var(v));
    }
    Basis b;
    if (n.size() != 1 || !parse_basis(n[0], b))
      throw std::invalid_argument("unknown basis '" + n + "'");
    std::vector<int> parts = *idx;
    if (b == Basis::h || b == Basis::e || b == Basis::p)
      std::sort(parts.begin(), parts.end(), std::greater<>());
    return SymFunc::basis(b, Partition(parts));
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return multiply(a, b); }
  Value div(const Value& a, const Value& b) {
    auto s = b.scalar_value();
    if (!s) throw std::invalid_argument("division by a non-scalar symmetric function");
    if (s->is_zero()) throw std::invalid_argument("division by zero");
    return a * s->inverse();
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, unsigned e) {
    SymFunc r(RatFunc(1));
    for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }
};

}  // namespace

SymFunc SymFunc::parse(std::string_view text) {
  SymSemantics sem;
  return ExprParser<SymSemantics>(text, sem).parse();
}

// ---- bases -----------------------------------------------------------------

BasisExpansion convert(const SymFunc& f, Basis b) {
  BasisExpansion out;
  out.basis = b;
  for (const auto& [lam, c] : f.terms()) {
    const DegreeTables& t = degree_tables(lam.size());
    const auto& row = t.from_schur[static_cast<int>(b)][t.at(lam)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      RatFunc v = c * to_ratfunc(row[j]);
      auto [it, inserted] = out.coeffs.emplace(t.parts[j], v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) out.coeffs.erase(it);
      }
    }
  }
  return out;
}

SymFunc from_basis(const BasisExpansion& x) {
  SymFunc out;
  for (const auto& [mu, c] : x.coeffs) {
    const DegreeTables& t = degree_tables(mu.size());
    const auto& row = t.to_schur[static_cast<int>(x.basis)][t.at(mu)];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add_term(t.parts[j], c * to_ratfunc(row[j]));
  }
  return out;
}

SymFunc h_n(int n) { return n < 0 ? SymFunc() : SymFunc::schur(Partition::row(n)); }
SymFunc e_n(int n) { return n < 0 ? SymFunc() : SymFunc::schur(Partition::column(n)); }
SymFunc p_n(int n) { return SymFunc::basis(Basis::p, Partition::row(n)); }

// ---- products ----------------------------------------------------------------

namespace {

// Accumulates integer-weighted Schur terms per coefficient, then folds.
void add_weighted(SymFunc& out, const SchurInt& terms, const RatFunc& c) {
  for (const auto& [nu, m] : terms) out.add_term(nu, c * RatFunc(m));
}

std::vector<Partition> add_horizontal(const Partition& lambda, int k) {
  std::vector<Partition> out;
  const int l = lambda.length();
  std::vector<int> nu(l + 1, 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j > l) {
      if (left == 0) out.emplace_back(nu);
      return;
    }
    int lo = lambda[j];
    int hi = j == 0 ? lambda[0] + left : std::min(lambda[j - 1], lambda[j] + left);
    for (int v = lo; v <= hi; ++v) {
      nu[j] = v;
      self(self, j + 1, left - (v - lo));
    }
  };
  rec(rec, 0, k);
  return out;
}

std::optional<std::pair<int, bool>> single_row_or_column(const SymFunc& f, RatFunc& c) {
  if (f.size() != 1) return std::nullopt;
  const auto& [lam, coeff] = *f.terms().begin();
  if (lam.empty()) return std::nullopt;
  c = coeff;
  if (lam.length() == 1) return std::make_pair(lam.size(), true);
  if (lam[0] == 1) return std::make_pair(lam.size(), false);
  return std::nullopt;
}

}  // namespace

SymFunc mul_h(int k, const SymFunc& f) {
  if (k < 0) return {};
  SymFunc out;
  for (const auto& [lam, c] : f.terms())
    for (const auto& nu : add_horizontal(lam, k)) out.add_term(nu, c);
  return out;
}

SymFunc mul_e(int k, const SymFunc& f) {
  if (k < 0) return {};
  SymFunc out;
  for (const auto& [lam, c] : f.terms())
    for (const auto& nu : add_horizontal(lam.conjugate(), k)) out.add_term(nu.conjugate(), c);
  return out;
}

SymFunc multiply_generic(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) add_weighted(out, lr_product(la, lb), ca * cb);
  return out;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (auto s = a.scalar_value()) return b * *s;
  if (auto s = b.scalar_value()) return a * *s;
  RatFunc c;
  if (auto rc = single_row_or_column(b, c))
    return (rc->second ? mul_h(rc->first, a) : mul_e(rc->first, a)) * c;
  if (auto rc = single_row_or_column(a, c))
    return (rc->second ? mul_h(rc->first, b) : mul_e(rc->first, b)) * c;
  return multiply_generic(a, b);
}

// ---- adjoints ----------------------------------------------------------------

namespace {

struct Key {
  Partition nu, mu;
  friend bool operator==(const Key&, const Key&) = default;
};
struct KeyHash {
  std::size_t operator()(const Key& k) const { return k.nu.hash() * 31u ^ k.mu.hash(); }
};

// s_{nu/mu} in the Schur basis.
const SchurInt& skew_schur(const Partition& nu, const Partition& mu) {
  static std::shared_mutex mutex;
  static std::unordered_map<Key, std::unique_ptr<SchurInt>, KeyHash> cache;
  Key key{nu, mu};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<SchurInt>();
  if (nu.contains(mu)) {
    for (const auto& lam : partitions_of(nu.size() - mu.size())) {
      for (const auto& [p, m] : lr_product(mu, lam)) {
        if (p == nu) {
          value->emplace_back(lam, m);
          break;
        }
      }
    }
  }
  std::unique_lock lock(mutex);
  return *cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

SymFunc skew(const Partition& mu, const SymFunc& f) {
  SymFunc out;
  for (const auto& [nu, c] : f.terms()) add_weighted(out, skew_schur(nu, mu), c);
  return out;
}

SymFunc perp_h(int k, const SymFunc& f) {
  if (k < 0) return {};
  SymFunc out;
  for (const auto& [lam, c] : f.terms())
    for (const auto& mu : horizontal_strips(lam, k)) out.add_term(mu, c);
  return out;
}

SymFunc perp_e(int k, const SymFunc& f) {
  if (k < 0) return {};
  SymFunc out;
  for (const auto& [lam, c] : f.terms())
    for (const auto& mu : vertical_strips(lam, k)) out.add_term(mu, c);
  return out;
}

SymFunc perp_generic(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [mu, c] : f.terms()) out += skew(mu, g) * c;
  return out;
}

SymFunc perp(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return {};
  if (auto s = f.scalar_value()) return g * *s;
  RatFunc c;
  if (auto rc = single_row_or_column(f, c))
    return (rc->second ? perp_h(rc->first, g) : perp_e(rc->first, g)) * c;
  return perp_generic(f, g);
}

// ---- scalar products -----------------------------------------------------------

RatFunc hall_inner(const SymFunc& a, const SymFunc& b) {
  RatFunc acc;
  for (const auto& [lam, c] : a.terms()) {
    auto it = b.terms().find(lam);
    if (it != b.terms().end()) acc += c * it->second;
  }
  return acc;
}

RatFunc star_inner(const SymFunc& a, const SymFunc& b) {
  BasisExpansion pa = convert(a, Basis::p), pb = convert(b, Basis::p);
  RatFunc acc;
  for (const auto& [rho, c] : pa.coeffs) {
    auto it = pb.coeffs.find(rho);
    if (it == pb.coeffs.end()) continue;
    IntPoly z(z_lambda(rho));
    if ((rho.size() - rho.length()) % 2) z = -z;
    for (int part : rho.parts())
      z *= (IntPoly(1) - IntPoly::var(Var::q, part)) * (IntPoly(1) - IntPoly::var(Var::t, part));
    acc += c * it->second * RatFunc(z);
  }
  return acc;
}

// ---- involutions -------------------------------------------------------------

SymFunc omega(const SymFunc& f) {
  SymFunc out;
  for (const auto& [lam, c] : f.terms()) out.add_term(lam.conjugate(), c);
  return out;
}

SymFunc down(const SymFunc& f) {
  std::map<Var, RatFunc> inv{{Var::q, RatFunc::var(Var::q).inverse()},
                             {Var::t, RatFunc::var(Var::t).inverse()}};
  return omega(f.specialize(inv));
}

// ---- straightening and Jacobi-Trudi ---------------------------------------------

SignedPartition straighten_schur(const std::vector<int>& alpha) {
  std::vector<int> a = alpha;
  int sign = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] >= a[i + 1]) continue;
      if (a[i + 1] == a[i] + 1) return {0, {}};
      int x = a[i], y = a[i + 1];
      a[i] = y - 1;
      a[i + 1] = x + 1;
      sign = -sign;
      changed = true;
    }
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (!a.empty() && a.back() < 0) return {0, {}};
  return {sign, Partition(a)};
}

namespace {

SymFunc jacobi_trudi(const std::vector<int>& alpha, Basis b) {
  const int l = static_cast<int>(alpha.size());
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  BasisExpansion acc;
  acc.basis = b;
  do {
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<int> idx;
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      int k = alpha[i] - i + perm[i];
      if (k < 0) zero = true;
      else if (k > 0) idx.push_back(k);
    }
    if (zero) continue;
    std::sort(idx.begin(), idx.end(), std::greater<>());
    Partition key(idx);
    RatFunc c(inversions % 2 ? -1 : 1);
    auto [it, inserted] = acc.coeffs.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) acc.coeffs.erase(it);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_basis(acc);
}

}  // namespace

SymFunc jacobi_trudi_h(const std::vector<int>& alpha) { return jacobi_trudi(alpha, Basis::h); }
SymFunc jacobi_trudi_e(const std::vector<int>& alpha) { return jacobi_trudi(alpha, Basis::e); }

// ---- principal specializations ---------------------------------------------------

RatFunc principal_spec(const SymFunc& f, int k, SpecMode mode) {
  RatFunc acc;
  for (const auto& [lam, c] : f.terms()) {
    if (lam.length() > k) continue;
    RatFunc v(1);
    for (const auto& cs : cell_stats(lam).cells) {
      int content = cs.cell.i - cs.cell.j;
      if (mode == SpecMode::ones) {
        v *= RatFunc(IntPoly(k + content), IntPoly(cs.hook));
      } else {
        v *= RatFunc(IntPoly(1) - IntPoly::var(Var::q, k + content),
                     IntPoly(1) - IntPoly::var(Var::q, cs.hook));
      }
    }
    if (mode == SpecMode::qpowers) v *= RatFunc(IntPoly::var(Var::q, lam.eta()));
    acc += c * v;
  }
  return acc;
}

RatFunc principal_spec_monomial(const SymFunc& f, int k, SpecMode mode) {
  RatFunc acc;
  for (const auto& [mu, c] : convert(f, Basis::m).coeffs) {
    if (mu.length() > k) continue;
    std::vector<int> e = mu.parts();
    e.resize(k, 0);
    std::sort(e.begin(), e.end());
    IntPoly sum;
    do {
      if (mode == SpecMode::ones) {
        sum += IntPoly(1);
      } else {
        unsigned d = 0;
        for (int i = 0; i < k; ++i) d += static_cast<unsigned>(i * e[i]);
        sum += IntPoly::var(Var::q, d);
      }
    } while (std::next_permutation(e.begin(), e.end()));
    acc += c * RatFunc(sum);
  }
  return acc;
}

}  // namespace qtk
