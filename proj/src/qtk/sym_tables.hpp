#pragma once

#include <array>
#include <unordered_map>
#include <utility>
#include <vector>

#include "intpoly.hpp"
#include "partition.hpp"

namespace qtk {

enum class Basis { m = 0, e, h, p, s, f };
inline constexpr std::array<Basis, 6> kAllBases{Basis::m, Basis::e, Basis::h,
                                                Basis::p, Basis::s, Basis::f};
char basis_letter(Basis b);
bool parse_basis(char c, Basis& out);

using RMatrix = std::vector<std::vector<Rational>>;

// Change-of-basis data for one degree. Rows and columns follow
// partitions_of(n). to_schur[b][i][j] is the coefficient of s_{parts[j]} in
// b_{parts[i]}; from_schur[b] is its inverse.
struct DegreeTables {
  int n = 0;
  std::vector<Partition> parts;
  std::unordered_map<Partition, int, PartitionHash> index;
  std::vector<std::vector<Integer>> chi;  // chi[lambda][rho]
  std::array<RMatrix, 6> to_schur;
  std::array<RMatrix, 6> from_schur;

  int at(const Partition& p) const { return index.at(p); }
};

// Built once per degree and then shared read-only.
const DegreeTables& degree_tables(int n);

// Sparse Schur expansion with integer coefficients.
using SchurInt = std::vector<std::pair<Partition, Integer>>;

// Littlewood-Richardson product s_lambda * s_mu, through power sums.
const SchurInt& lr_product(const Partition& lambda, const Partition& mu);

RMatrix invert(const RMatrix& m);

}  // namespace qtk
