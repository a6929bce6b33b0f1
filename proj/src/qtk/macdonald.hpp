#pragma once

#include <map>
#include <vector>

#include "symfunc.hpp"

namespace qtk::mac {

// Modified Macdonald polynomial H~_mu in the Schur basis (memoized).
SymFunc macH(const Partition& mu);

// Row lambda, column mu, both indexed by partitions_of(n).
// modified: coefficient of s_mu in H~_lambda.
// classical: t^{n(lambda)} times the modified entry at t -> 1/t.
enum class KostkaForm { modified, classical };
std::vector<std::vector<RatFunc>> kostka_matrix(int n, KostkaForm form = KostkaForm::modified);

struct MacExpansion {
  int degree = 0;
  std::map<Partition, RatFunc, DisplayOrder> coeffs;
  friend bool operator==(const MacExpansion&, const MacExpansion&) = default;
};

// f = sum_mu c_mu H~_mu; f must be homogeneous of degree n.
MacExpansion to_mac_basis(const SymFunc& f, int n);
SymFunc from_mac_basis(const MacExpansion& x);

struct EigenSpec {
  enum class Kind { delta, delta_bar, M, M_bar, nabla };
  Kind kind = Kind::nabla;
  SymFunc f;      // delta, delta_bar
  int power = 1;  // nabla: +1 or -1

  static EigenSpec delta(SymFunc g) { return {Kind::delta, std::move(g), 1}; }
  static EigenSpec delta_bar(SymFunc g) { return {Kind::delta_bar, std::move(g), 1}; }
  static EigenSpec m() { return {Kind::M, {}, 1}; }
  static EigenSpec m_bar() { return {Kind::M_bar, {}, 1}; }
  static EigenSpec nabla(int power = 1) { return {Kind::nabla, {}, power}; }

  RatFunc eigenvalue(const Partition& mu) const;
};

// Applied degree by degree.
SymFunc eigen_apply(const EigenSpec& spec, const SymFunc& f);
// nabla^power with power in {+1, -1}; uses a per-degree operator matrix.
SymFunc nabla(const SymFunc& f, int power = 1);

// Cache plumbing: condition (1) plus one triangularity equation.
bool plausible_macH(const Partition& mu, const SymFunc& h);
// Installs an externally supplied value (no-op if already present).
void install_macH(const Partition& mu, const SymFunc& h);
// Every memoized H~_mu of degree n, in partitions_of(n) order; empty unless
// all of them are present.
std::vector<SymFunc> memoized_degree(int n);

}  // namespace qtk::mac
