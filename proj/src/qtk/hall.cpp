#include "hall.hpp"

#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "errors.hpp"
#include "limits.hpp"
#include "plethysm.hpp"

namespace qtk::hall {

namespace {

RatFunc M() {
  return RatFunc((IntPoly(1) - IntPoly::var(Var::q)) * (IntPoly(1) - IntPoly::var(Var::t)));
}

RatFunc qt() { return RatFunc(IntPoly::var(Var::q) * IntPoly::var(Var::t)); }

// s_rho[M], cached.
RatFunc schur_at_M(const Partition& rho) {
  static std::mutex mu;
  static std::unordered_map<Partition, RatFunc, PartitionHash> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(rho);
    if (it != cache.end()) return it->second;
  }
  RatFunc v = pleth::plethysm_scalar(SymFunc::schur(rho), pleth::Alphabet::scalar(M()));
  std::lock_guard lock(mu);
  return cache.emplace(rho, v).first->second;
}

}  // namespace

// ---- operator trees ------------------------------------------------------------

struct OperatorExpr::Node {
  enum Kind { kMul, kPerp, kD, kScalar, kBracket, kCompose };
  Kind kind;
  SymFunc f;
  RatFunc c;
  int k = 0;
  std::shared_ptr<Node> a, b;

  std::shared_mutex mu;
  std::unordered_map<Partition, SymFunc, PartitionHash> memo;

  Node(Kind kd) : kind(kd) {}

  SymFunc apply(const SymFunc& g) {
    if (kind == kScalar) return g * c;
    SymFunc out;
    for (const auto& [lam, coeff] : g.terms()) out += on_basis(lam) * coeff;
    return out;
  }

  SymFunc on_basis(const Partition& lam) {
    {
      std::shared_lock lock(mu);
      auto it = memo.find(lam);
      if (it != memo.end()) return it->second;
    }
    SymFunc s = SymFunc::schur(lam), r;
    switch (kind) {
      case kMul: r = multiply(f, s); break;
      case kPerp: r = qtk::perp(f, s); break;
      case kD: r = d_series(k, s); break;
      case kScalar: r = s * c; break;
      case kBracket: r = a->apply(b->apply(s)) - b->apply(a->apply(s)); break;
      case kCompose: r = a->apply(b->apply(s)); break;
    }
    std::unique_lock lock(mu);
    return memo.emplace(lam, std::move(r)).first->second;
  }

  std::string str() const {
    switch (kind) {
      case kMul: return "(" + f.to_string() + ")^.";
      case kPerp: return "(" + f.to_string() + ")^perp";
      case kD: return "D" + std::to_string(k);
      case kScalar: return "(" + c.to_string() + ")";
      case kBracket: return "[" + a->str() + ", " + b->str() + "]";
      case kCompose: return a->str() + " o " + b->str();
    }
    return "?";
  }
};

OperatorExpr OperatorExpr::mul_by(const SymFunc& f) {
  auto n = std::make_shared<Node>(Node::kMul);
  n->f = f;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::perp(const SymFunc& f) {
  auto n = std::make_shared<Node>(Node::kPerp);
  n->f = f;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::d(int k) {
  auto n = std::make_shared<Node>(Node::kD);
  n->k = k;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::scalar(const RatFunc& c) {
  auto n = std::make_shared<Node>(Node::kScalar);
  n->c = c;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::bracket(const OperatorExpr& a, const OperatorExpr& b) {
  auto n = std::make_shared<Node>(Node::kBracket);
  n->a = a.node_;
  n->b = b.node_;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::compose(const OperatorExpr& a, const OperatorExpr& b) {
  auto n = std::make_shared<Node>(Node::kCompose);
  n->a = a.node_;
  n->b = b.node_;
  return OperatorExpr(n);
}

SymFunc OperatorExpr::apply(const SymFunc& f) const { return node_->apply(f); }
std::string OperatorExpr::to_string() const { return node_->str(); }

// ---- splitting and D_k ----------------------------------------------------------

Split split(int a, int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw InvalidInput("split: requires coprime a, b >= 1");
  for (int r = 1; r <= a; ++r) {
    long num = static_cast<long>(b) * r - 1;
    if (num % a) continue;
    int s = static_cast<int>(num / a);
    if (s >= 0 && s < b) return {{r, s}, {a - r, b - s}};
  }
  throw InternalError("split: no lattice splitting found");
}

SymFunc d_series(int k, const SymFunc& f) {
  if (f.is_zero()) return f;
  check_degree(f.max_degree() + std::max(k, 0), "d_series");
  SymFunc out;
  for (int j = 0; j <= f.max_degree(); ++j) {
    int i = k + j;
    if (i < 0) continue;
    SymFunc g;
    for (const auto& rho : partitions_of(j)) {
      SymFunc sk = skew(rho, f);
      if (!sk.is_zero()) g += sk * schur_at_M(rho);
    }
    if (g.is_zero()) continue;
    SymFunc term = mul_e(i, g);
    out += (i % 2) ? -term : term;
  }
  return out;
}

// ---- X^(k,n) --------------------------------------------------------------------

OperatorExpr xkn(int k, int n) {
  if (k < 0 || n < 0 || (k == 0 && n == 0)) throw InvalidInput("xkn: requires (k,n) != (0,0) with k,n >= 0");
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, OperatorExpr> interned;
  std::lock_guard lock(mu);
  auto it = interned.find({k, n});
  if (it != interned.end()) return it->second;

  const int d = std::gcd(k, n), a = k / d, b = n / d;
  OperatorExpr op = [&] {
    if (b == 0) {
      if (d != 1) throw InvalidInput("xkn: only X^(1,0) is available on the horizontal ray");
      return OperatorExpr::d(0);
    }
    if (a == 0) return OperatorExpr::mul_by(pi_n(d));
    auto [r, s] = split(a, b).rs;
    return OperatorExpr::compose(OperatorExpr::scalar(M().inverse()),
                                 OperatorExpr::bracket(xkn(k - r, n - s), xkn(r, s)));
  }();
  return interned.emplace(std::make_pair(k, n), op).first->second;
}

SymFunc xkn_apply(int k, int n, const SymFunc& f) {
  if (!f.is_zero()) check_degree(f.max_degree() + n, "xkn_apply");
  return xkn(k, n).apply(f);
}

SymFunc xkn_compact_d1(int k, const SymFunc& f) {
  if (k < 0) throw InvalidInput("xkn_compact_d1: k must be >= 0");
  OperatorExpr d1 = xkn(1, 1), cur = xkn(1, 0);
  for (int i = 0; i < k; ++i) cur = OperatorExpr::bracket(d1, cur);
  return cur.apply(f) * M().pow(-k);
}

// ---- pi basis -----------------------------------------------------------------

namespace {

// e_n[1 - qt] = (-qt)^{n-1} (1 - qt)
RatFunc e_at_one_minus_qt(int n) {
  if (n == 0) return RatFunc(1);
  RatFunc v = RatFunc(1) - qt();
  v *= qt().pow(n - 1);
  return (n - 1) % 2 ? -v : v;
}

}  // namespace

SymFunc pi_n(int n) {
  if (n < 0) throw InvalidInput("pi_n: negative degree");
  static std::mutex mu;
  static std::map<int, SymFunc> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  SymFunc v = pleth::plethysm(h_n(n), pleth::times_scalar(RatFunc(1) - qt())) * e_at_one_minus_qt(n).inverse();
  std::lock_guard lock(mu);
  return cache.emplace(n, v).first->second;
}

SymFunc pi_basis(const Partition& mu) {
  SymFunc out(RatFunc(1));
  for (int part : mu.parts()) out = multiply(out, pi_n(part));
  return out;
}

std::map<Partition, RatFunc, DisplayOrder> pi_expand(const SymFunc& f) {
  if (!f.is_homogeneous()) throw InvalidInput("pi_expand: input must be homogeneous");
  std::map<Partition, RatFunc, DisplayOrder> out;
  if (f.is_zero()) return out;
  SymFunc g = pleth::plethysm(f, pleth::times_scalar((RatFunc(1) - qt()).inverse()));
  for (const auto& [mu, a] : convert(g, Basis::h).coeffs) {
    RatFunc c = a;
    for (int part : mu.parts()) c *= e_at_one_minus_qt(part);
    out.emplace(mu, c);
  }
  return out;
}

// ---- seeds and creation ---------------------------------------------------------

Seed Seed::parse(std::string_view text) {
  auto starts = [&](std::string_view p) { return text.substr(0, p.size()) == p; };
  auto tail_int = [&](std::size_t from) {
    std::string_view rest = text.substr(from);
    if (rest.empty()) throw InvalidInput("seed: missing degree in \"" + std::string(text) + "\"");
    int v = 0;
    for (char ch : rest) {
      if (ch < '0' || ch > '9') throw InvalidInput("seed: bad degree in \"" + std::string(text) + "\"");
      v = v * 10 + (ch - '0');
    }
    if (v < 1) throw InvalidInput("seed: degree must be positive");
    return v;
  };
  if (starts("shat")) {
    std::string_view rest = text.substr(4);
    if (!rest.empty() && rest.front() == '[' && rest.back() == ']') rest = rest.substr(1, rest.size() - 2);
    Partition mu = Partition::parse(rest);
    if (mu.empty()) throw InvalidInput("seed: shat needs a nonempty partition");
    return shat(mu);
  }
  if (starts("phat")) return phat_d(tail_int(4));
  if (starts("hhat")) return hhat_d(tail_int(4));
  if (starts("pi")) return pi_d(tail_int(2));
  if (starts("e")) return e_d(tail_int(1));
  throw InvalidInput("seed: unknown family in \"" + std::string(text) + "\"");
}

SymFunc Seed::value() const {
  switch (kind) {
    case Kind::pi: return pi_n(d);
    case Kind::phat: return (d - 1) % 2 ? -p_n(d) : p_n(d);
    case Kind::e: return e_n(d);
    case Kind::hhat: {
      RatFunc c = qt().pow(1 - d);
      return h_n(d) * ((d - 1) % 2 ? -c : c);
    }
    case Kind::shat: {
      RatFunc c = qt().pow(-(mu.size() - mu.length()));
      return SymFunc::schur(mu, mu.iota() % 2 ? -c : c);
    }
  }
  throw InternalError("seed: unknown kind");
}

std::string Seed::to_string() const {
  switch (kind) {
    case Kind::pi: return "pi" + std::to_string(d);
    case Kind::phat: return "phat" + std::to_string(d);
    case Kind::e: return "e" + std::to_string(d);
    case Kind::hhat: return "hhat" + std::to_string(d);
    case Kind::shat: return "shat[" + mu.to_string() + "]";
  }
  return "?";
}

SymFunc create(const SymFunc& seed, int a, int b) {
  if (a < 0 || b < 0 || std::gcd(a, b) != 1) throw InvalidInput("create: requires coprime a, b >= 0");
  if (!seed.is_homogeneous()) throw InvalidInput("create: seed must be homogeneous");
  if (!seed.is_zero()) check_degree(b * seed.max_degree(), "create");
  SymFunc out;
  for (const auto& [mu, c] : pi_expand(seed)) {
    SymFunc g(RatFunc(1));
    for (int part : mu.parts()) g = xkn_apply(a * part, b * part, g);
    out += g * c;
  }
  return out;
}

SymFunc create(const Seed& seed, int a, int b) { return create(seed.value(), a, b); }

}  // namespace qtk::hall
