#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "partition.hpp"
#include "ratfunc.hpp"
#include "sym_tables.hpp"

namespace qtk {

// Symmetric function over Q(q,t,...) stored in the Schur basis. Values may be
// inhomogeneous; zero coefficients are never stored.
class SymFunc {
 public:
  using Map = std::map<Partition, RatFunc, DisplayOrder>;

  SymFunc() = default;
  SymFunc(const RatFunc& c);  // NOLINT(google-explicit-constructor): scalar
  static SymFunc schur(const Partition& lambda, const RatFunc& c = RatFunc(1));
  static SymFunc basis(Basis b, const Partition& lambda);
  // "s[3,1] + (q + t)*s[2,2]"; also m, e, h, p, f basis elements and
  // products of terms.
  static SymFunc parse(std::string_view text);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const RatFunc& c);

  int max_degree() const;  // -1 for zero
  int min_degree() const;
  bool is_homogeneous() const { return is_zero() || max_degree() == min_degree(); }
  SymFunc homogeneous_part(int n) const;
  // Scalar value when the function has degree 0 (or is zero).
  std::optional<RatFunc> scalar_value() const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const RatFunc& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const RatFunc& c) { return a *= c; }
  friend SymFunc operator*(const RatFunc& c, SymFunc a) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

  SymFunc map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;
  SymFunc specialize(const std::map<Var, RatFunc>& bindings) const;

  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  Map terms_;
};

struct BasisExpansion {
  Basis basis = Basis::s;
  std::map<Partition, RatFunc, DisplayOrder> coeffs;
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

BasisExpansion convert(const SymFunc& f, Basis b);
SymFunc from_basis(const BasisExpansion& x);

SymFunc multiply(const SymFunc& a, const SymFunc& b);
SymFunc multiply_generic(const SymFunc& a, const SymFunc& b);  // no fast paths
RatFunc hall_inner(const SymFunc& a, const SymFunc& b);
RatFunc star_inner(const SymFunc& a, const SymFunc& b);
// Adjoint of multiplication by f, applied to g.
SymFunc perp(const SymFunc& f, const SymFunc& g);
SymFunc perp_generic(const SymFunc& f, const SymFunc& g);

// Pieri rules.
SymFunc mul_h(int k, const SymFunc& f);
SymFunc mul_e(int k, const SymFunc& f);
SymFunc perp_h(int k, const SymFunc& f);
SymFunc perp_e(int k, const SymFunc& f);
// s_mu^perp f, i.e. the skew expansion.
SymFunc skew(const Partition& mu, const SymFunc& f);

SymFunc omega(const SymFunc& f);
// down f (q,t;x) = omega f(1/q, 1/t; x)
SymFunc down(const SymFunc& f);

SymFunc h_n(int n);
SymFunc e_n(int n);
SymFunc p_n(int n);

struct SignedPartition {
  int sign = 0;  // 0 means the composition straightens to zero
  Partition lambda;
};
SignedPartition straighten_schur(const std::vector<int>& alpha);
// det(h_{alpha_i - i + j}) and det(e_{alpha_i - i + j}) for a composition.
SymFunc jacobi_trudi_h(const std::vector<int>& alpha);
SymFunc jacobi_trudi_e(const std::vector<int>& alpha);

enum class SpecMode { ones, qpowers };
RatFunc principal_spec(const SymFunc& f, int k, SpecMode mode);
RatFunc principal_spec_monomial(const SymFunc& f, int k, SpecMode mode);

RatFunc to_ratfunc(const Rational& r);

}  // namespace qtk
