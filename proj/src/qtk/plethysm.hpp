#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "symfunc.hpp"

namespace qtk::pleth {

// Polynomial in the power sums p_i(X), p_j(Y) with scalar coefficients.
// Keys are (lambda, mu) standing for p_lambda(X) p_mu(Y).
class PSum {
 public:
  using Key = std::pair<Partition, Partition>;

  PSum() = default;
  PSum(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  static PSum px(int k);
  static PSum py(int k);

  const std::map<Key, RatFunc>& terms() const { return terms_; }
  bool is_scalar() const;
  RatFunc scalar() const;  // precondition: is_scalar()

  PSum& operator+=(const PSum& o);
  friend PSum operator+(PSum a, const PSum& b) { return a += b; }
  friend PSum operator-(const PSum& a, const PSum& b);
  friend PSum operator*(const PSum& a, const PSum& b);
  friend bool operator==(const PSum&, const PSum&) = default;

 private:
  void add(const Key& k, const RatFunc& c);
  std::map<Key, RatFunc> terms_;
};

// Element of Lambda_X (x) Lambda_Y in the Schur (x) Schur basis.
class BiSymFunc {
 public:
  using Key = std::pair<Partition, Partition>;
  const std::map<Key, RatFunc>& terms() const { return terms_; }
  void add_term(const Partition& a, const Partition& b, const RatFunc& c);
  bool is_zero() const { return terms_.empty(); }
  BiSymFunc& operator+=(const BiSymFunc& o);
  friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }
  friend bool operator==(const BiSymFunc&, const BiSymFunc&) = default;
  // Part that does not involve Y, as a SymFunc in X.
  SymFunc x_only() const;
  std::string to_string() const;  // "s[2](X)*s[1](Y) + ..."

 private:
  std::map<Key, RatFunc> terms_;
};

BiSymFunc tensor(const SymFunc& fx, const SymFunc& gy);

// Expression tree over X, Y, eps, scalars and + - * /.
class Alphabet {
 public:
  static Alphabet X();
  static Alphabet Y();
  static Alphabet eps();
  static Alphabet scalar(const RatFunc& c);
  static Alphabet var(Var v) { return scalar(RatFunc::var(v)); }
  // "X", "eps", "1-eps*A", "X/(1-q*t)", "1-q", "X+Y".
  static Alphabet parse(std::string_view text);

  friend Alphabet operator+(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator-(const Alphabet& a, const Alphabet& b);
  friend Alphabet operator*(const Alphabet& a, const Alphabet& b);
  // The denominator must not involve X or Y.
  friend Alphabet operator/(const Alphabet& a, const Alphabet& b);
  Alphabet operator-() const;

  // p_k[A].
  PSum pk_eval(int k) const;
  bool involves_x() const;
  bool involves_y() const;
  std::string to_string() const;

  struct Node;

 private:
  explicit Alphabet(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// f[A] in both alphabets.
BiSymFunc plethysm2(const SymFunc& f, const Alphabet& A);
// f[A] for A not involving Y.
SymFunc plethysm(const SymFunc& f, const Alphabet& A);
// f[A] for A free of X and Y.
RatFunc plethysm_scalar(const SymFunc& f, const Alphabet& A);

// s_mu[1-q]
RatFunc hook_eval_1mq(const Partition& mu);

enum class Series { H, E };
BiSymFunc series_eval(Series kind, const Alphabet& A, int n);

// Convenience alphabets.
Alphabet times_scalar(const RatFunc& c);  // X * c

}  // namespace qtk::pleth
