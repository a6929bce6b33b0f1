#include "plethysm.hpp"

#include <algorithm>

#include "errors.hpp"
#include "expr_parser.hpp"

namespace qtk::pleth {

// ---- PSum ----------------------------------------------------------------------

namespace {

Partition merge(const Partition& a, const Partition& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(v);
}

}  // namespace

PSum::PSum(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(Key{}, c);
}

PSum PSum::px(int k) {
  PSum s;
  s.terms_.emplace(Key{Partition::row(k), Partition()}, RatFunc(1));
  return s;
}

PSum PSum::py(int k) {
  PSum s;
  s.terms_.emplace(Key{Partition(), Partition::row(k)}, RatFunc(1));
  return s;
}

bool PSum::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{});
}

RatFunc PSum::scalar() const { return terms_.empty() ? RatFunc() : terms_.begin()->second; }

void PSum::add(const Key& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PSum& PSum::operator+=(const PSum& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PSum operator-(const PSum& a, const PSum& b) {
  PSum r = a;
  for (const auto& [k, c] : b.terms_) r.add(k, -c);
  return r;
}

PSum operator*(const PSum& a, const PSum& b) {
  PSum r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add({merge(ka.first, kb.first), merge(ka.second, kb.second)}, ca * cb);
  return r;
}

// ---- BiSymFunc -----------------------------------------------------------------

void BiSymFunc::add_term(const Partition& a, const Partition& b, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

SymFunc BiSymFunc::x_only() const {
  SymFunc out;
  for (const auto& [k, c] : terms_)
    if (k.second.empty()) out.add_term(k.first, c);
  return out;
}

std::string BiSymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*s[" + k.first.to_string() + "](X)*s[" + k.second.to_string() + "](Y)";
  }
  return s;
}

BiSymFunc tensor(const SymFunc& fx, const SymFunc& gy) {
  BiSymFunc out;
  for (const auto& [a, ca] : fx.terms())
    for (const auto& [b, cb] : gy.terms()) out.add_term(a, b, ca * cb);
  return out;
}

// ---- Alphabet ------------------------------------------------------------------

struct Alphabet::Node {
  enum Kind { kX, kY, kEps, kScalar, kAdd, kSub, kMul, kDiv, kNeg } kind;
  RatFunc value;
  std::shared_ptr<const Node> left, right;
};

Alphabet Alphabet::X() { return Alphabet(std::make_shared<Node>(Node{Node::kX, {}, {}, {}})); }
Alphabet Alphabet::Y() { return Alphabet(std::make_shared<Node>(Node{Node::kY, {}, {}, {}})); }
Alphabet Alphabet::eps() { return Alphabet(std::make_shared<Node>(Node{Node::kEps, {}, {}, {}})); }
Alphabet Alphabet::scalar(const RatFunc& c) {
  return Alphabet(std::make_shared<Node>(Node{Node::kScalar, c, {}, {}}));
}

namespace {

using NodePtr = std::shared_ptr<const Alphabet::Node>;

bool is_scalar_node(const NodePtr& n) { return n->kind == Alphabet::Node::kScalar; }

}  // namespace

Alphabet operator+(const Alphabet& a, const Alphabet& b) {
  if (is_scalar_node(a.node_) && is_scalar_node(b.node_))
    return Alphabet::scalar(a.node_->value + b.node_->value);
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Alphabet::Node::kAdd, {}, a.node_, b.node_}));
}

Alphabet operator-(const Alphabet& a, const Alphabet& b) {
  if (is_scalar_node(a.node_) && is_scalar_node(b.node_))
    return Alphabet::scalar(a.node_->value - b.node_->value);
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Alphabet::Node::kSub, {}, a.node_, b.node_}));
}

Alphabet operator*(const Alphabet& a, const Alphabet& b) {
  if (is_scalar_node(a.node_) && is_scalar_node(b.node_))
    return Alphabet::scalar(a.node_->value * b.node_->value);
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Alphabet::Node::kMul, {}, a.node_, b.node_}));
}

Alphabet operator/(const Alphabet& a, const Alphabet& b) {
  if (b.involves_x() || b.involves_y())
    throw InvalidInput("alphabet denominators must not involve X or Y");
  if (is_scalar_node(b.node_) && b.node_->value.is_zero())
    throw DivisionByZero("alphabet division by zero");
  if (is_scalar_node(a.node_) && is_scalar_node(b.node_))
    return Alphabet::scalar(a.node_->value / b.node_->value);
  return Alphabet(std::make_shared<Alphabet::Node>(
      Alphabet::Node{Alphabet::Node::kDiv, {}, a.node_, b.node_}));
}

Alphabet Alphabet::operator-() const {
  if (is_scalar_node(node_)) return scalar(-node_->value);
  return Alphabet(std::make_shared<Node>(Node{Node::kNeg, {}, node_, {}}));
}

namespace {

PSum eval_node(const NodePtr& n, int k) {
  using N = Alphabet::Node;
  switch (n->kind) {
    case N::kX: return PSum::px(k);
    case N::kY: return PSum::py(k);
    case N::kEps: return PSum(RatFunc(k % 2 ? -1 : 1));
    case N::kScalar: return PSum(n->value.adams(static_cast<unsigned>(k)));
    case N::kAdd: return eval_node(n->left, k) + eval_node(n->right, k);
    case N::kSub: return eval_node(n->left, k) - eval_node(n->right, k);
    case N::kNeg: return PSum() - eval_node(n->left, k);
    case N::kMul: return eval_node(n->left, k) * eval_node(n->right, k);
    case N::kDiv: {
      PSum d = eval_node(n->right, k);
      if (!d.is_scalar()) throw InternalError("non-scalar alphabet denominator");
      if (d.scalar().is_zero()) throw DivisionByZero("plethystic denominator vanishes");
      return eval_node(n->left, k) * PSum(d.scalar().inverse());
    }
  }
  throw InternalError("bad alphabet node");
}

bool involves(const NodePtr& n, Alphabet::Node::Kind kind) {
  if (!n) return false;
  if (n->kind == kind) return true;
  return involves(n->left, kind) || involves(n->right, kind);
}

std::string node_string(const NodePtr& n) {
  using N = Alphabet::Node;
  switch (n->kind) {
    case N::kX: return "X";
    case N::kY: return "Y";
    case N::kEps: return "eps";
    case N::kScalar: return "(" + n->value.to_string() + ")";
    case N::kAdd: return "(" + node_string(n->left) + " + " + node_string(n->right) + ")";
    case N::kSub: return "(" + node_string(n->left) + " - " + node_string(n->right) + ")";
    case N::kNeg: return "-" + node_string(n->left);
    case N::kMul: return node_string(n->left) + "*" + node_string(n->right);
    case N::kDiv: return node_string(n->left) + "/" + node_string(n->right);
  }
  return "?";
}

}  // namespace

PSum Alphabet::pk_eval(int k) const {
  if (k < 1) throw InvalidInput("p_k needs k >= 1");
  return eval_node(node_, k);
}

bool Alphabet::involves_x() const { return involves(node_, Node::kX); }
bool Alphabet::involves_y() const { return involves(node_, Node::kY); }
std::string Alphabet::to_string() const { return node_string(node_); }

namespace {

struct AlphaSemantics {
  using Value = Alphabet;
  Value integer(const Integer& c) { return Alphabet::scalar(RatFunc(c)); }
  Value name(const std::string& n, const std::optional<std::vector<int>>& idx) {
    if (idx) throw std::invalid_argument("indexed names are not alphabets");
    if (n == "X") return Alphabet::X();
    if (n == "Y") return Alphabet::Y();
    if (n == "eps") return Alphabet::eps();
    Var v;
    if (!parse_var(n, v)) throw std::invalid_argument("unknown alphabet atom '" + n + "'");
    return Alphabet::var(v);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) {
    if (b.involves_x() || b.involves_y())
      throw std::invalid_argument("alphabet denominators must not involve X or Y");
    return a / b;
  }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, unsigned e) {
    Alphabet r = Alphabet::scalar(RatFunc(1));
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
  }
};

}  // namespace

Alphabet Alphabet::parse(std::string_view text) {
  AlphaSemantics sem;
  return ExprParser<AlphaSemantics>(text, sem).parse();
}

Alphabet times_scalar(const RatFunc& c) { return Alphabet::X() * Alphabet::scalar(c); }

// ---- plethysm ------------------------------------------------------------------

namespace {

PSum substitute(const SymFunc& f, const Alphabet& A) {
  BasisExpansion pf = convert(f, Basis::p);
  std::map<int, PSum> pk;
  PSum acc;
  for (const auto& [rho, c] : pf.coeffs) {
    PSum term(c);
    for (int part : rho.parts()) {
      auto it = pk.find(part);
      if (it == pk.end()) it = pk.emplace(part, A.pk_eval(part)).first;
      term = term * it->second;
    }
    acc += term;
  }
  return acc;
}

const std::vector<Rational>& schur_row_of_p(const Partition& rho, std::size_t& width,
                                           const DegreeTables*& t) {
  t = &degree_tables(rho.size());
  width = t->parts.size();
  return t->to_schur[static_cast<int>(Basis::p)][t->at(rho)];
}

}  // namespace

BiSymFunc plethysm2(const SymFunc& f, const Alphabet& A) {
  PSum s = substitute(f, A);
  BiSymFunc out;
  for (const auto& [key, c] : s.terms()) {
    std::size_t wa, wb;
    const DegreeTables *ta, *tb;
    const auto& ra = schur_row_of_p(key.first, wa, ta);
    const auto& rb = schur_row_of_p(key.second, wb, tb);
    for (std::size_t i = 0; i < wa; ++i) {
      if (ra[i] == 0) continue;
      for (std::size_t j = 0; j < wb; ++j)
        if (rb[j] != 0) out.add_term(ta->parts[i], tb->parts[j], c * to_ratfunc(ra[i] * rb[j]));
    }
  }
  return out;
}

SymFunc plethysm(const SymFunc& f, const Alphabet& A) {
  if (A.involves_y()) throw InvalidInput("plethysm: alphabet involves Y; use plethysm2");
  PSum s = substitute(f, A);
  BasisExpansion px;
  px.basis = Basis::p;
  for (const auto& [key, c] : s.terms()) px.coeffs.emplace(key.first, c);
  return from_basis(px);
}

RatFunc plethysm_scalar(const SymFunc& f, const Alphabet& A) {
  if (A.involves_x() || A.involves_y()) throw InvalidInput("plethysm_scalar: alphabet involves X or Y");
  return substitute(f, A).scalar();
}

RatFunc hook_eval_1mq(const Partition& mu) {
  if (mu.empty()) return RatFunc(1);
  if (!mu.is_hook()) return RatFunc();
  int l = mu.hook_leg();
  IntPoly v = IntPoly(1) - IntPoly::var(Var::q);
  v *= IntPoly::var(Var::q, l).mul_scalar(l % 2 ? -1 : 1);
  return RatFunc(v);
}

BiSymFunc series_eval(Series kind, const Alphabet& A, int n) {
  if (n < 0) return {};
  return plethysm2(kind == Series::H ? h_n(n) : e_n(n), A);
}

}  // namespace qtk::pleth
