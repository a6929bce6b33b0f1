#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "symfunc.hpp"

namespace qtk::hall {

// Linear operator on symmetric functions, built from primitives and
// evaluated lazily. Nodes cache their action on Schur basis elements, so
// sharing a node between trees shares the work.
class OperatorExpr {
 public:
  static OperatorExpr mul_by(const SymFunc& f);
  static OperatorExpr perp(const SymFunc& f);
  static OperatorExpr d(int k);  // d_series(k, .)
  static OperatorExpr scalar(const RatFunc& c);
  static OperatorExpr bracket(const OperatorExpr& a, const OperatorExpr& b);
  static OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b);  // a after b

  SymFunc apply(const SymFunc& f) const;
  std::string to_string() const;

  struct Node;

 private:
  explicit OperatorExpr(std::shared_ptr<Node> n) : node_(std::move(n)) {}
  std::shared_ptr<Node> node_;
};

struct Split {
  std::pair<int, int> rs, uv;  // (a,b) = rs + uv, det [rs; uv] = 1
};
// Requires a, b >= 1 and gcd(a, b) = 1.
Split split(int a, int b);

// z^k coefficient of H[-zX]^. f[X + M/z], M = (1-q)(1-t).
SymFunc d_series(int k, const SymFunc& f);

// The operator X^(k,n) (the image of pi_d on the ray through (k,n)).
// X^(1,0) = D_0, X^(0,d) = multiplication by pi_d, the rest by brackets.
OperatorExpr xkn(int k, int n);
SymFunc xkn_apply(int k, int n, const SymFunc& f);
// X^(k+1,k) = M^{-k} [D_1, [D_1, ... [D_1, D_0]]] with D_1 = X^(1,1).
SymFunc xkn_compact_d1(int k, const SymFunc& f);

// pi_n = h_n[(1-qt)X] / e_n[1-qt]
SymFunc pi_n(int n);
SymFunc pi_basis(const Partition& mu);
// f = sum_mu c_mu pi_mu for f homogeneous.
std::map<Partition, RatFunc, DisplayOrder> pi_expand(const SymFunc& f);

struct Seed {
  enum class Kind { pi, phat, e, hhat, shat };
  Kind kind = Kind::e;
  int d = 1;
  Partition mu;  // shat only

  static Seed pi_d(int d) { return {Kind::pi, d, {}}; }
  static Seed phat_d(int d) { return {Kind::phat, d, {}}; }
  static Seed e_d(int d) { return {Kind::e, d, {}}; }
  static Seed hhat_d(int d) { return {Kind::hhat, d, {}}; }
  static Seed shat(const Partition& mu) { return {Kind::shat, mu.size(), mu}; }
  // "e3", "pi2", "phat2", "hhat2", "shat2,1"
  static Seed parse(std::string_view text);

  SymFunc value() const;
  std::string to_string() const;
};

// f_(ad,bd) = sum_mu c_mu prod_i X^(a mu_i, b mu_i) . 1 with gcd(a,b) = 1.
SymFunc create(const SymFunc& seed, int a, int b);
SymFunc create(const Seed& seed, int a, int b);

}  // namespace qtk::hall
