#pragma once

#include <optional>
#include <vector>

#include "knots.hpp"
#include "partition.hpp"

namespace qtk::tri {

// Open interval (lo, hi) of slopes t.
struct SlopeInterval {
  Rational lo, hi;
  friend bool operator==(const SlopeInterval&, const SlopeInterval&) = default;
};

// Hook slopes of a cell: t' = l/(a+l+1), t'' = (l+1)/(a+l+1).
Rational t_low(int arm, int leg);
Rational t_high(int arm, int leg);

// max t' and min t'' over the cells; nullopt when lo >= hi. The empty
// partition gets (0, 1).
std::optional<SlopeInterval> slope_interval(const Partition& mu);
bool is_triangular(const Partition& mu);
// result[n] lists the triangular partitions of n in partitions_of(n) order.
std::vector<std::vector<Partition>> enumerate_triangular(int max_size);

// Cells below the line through (0,s) and (r,0): tau_j = floor(r - j r / s).
Partition from_line(const Rational& r, const Rational& s);
// (n, n-1, ..., 1)
Partition staircase(int n);

struct TriangularPartition {
  Partition tau;
  SlopeInterval interval;
  Rational tbar;  // midpoint of the interval
  // Throws InvalidInput unless tau is triangular.
  static TriangularPartition of(const Partition& tau);
};

// Cells c of mu with t'(c,mu) < tbar <= t''(c,mu). mu must fit inside tau.
int sim(const TriangularPartition& tau, const Partition& mu);

// sum over mu inside tau of q^{|tau|-|mu|} t^{sim}
IntPoly d_tau(const TriangularPartition& tau);

// Delta-conjecture side: sum over mu inside tau and des(mu) <= J <= [n] of
// t^sim q^{sum_{j in J} (tau_j - mu_j)} A^{n-|J|}, n = length of tau.
knots::SuperPoly delta_comb(const TriangularPartition& tau);

// Descents i >= 1 with mu_i > mu_{i+1}, zero padded (so the last row counts).
std::vector<int> descents(const Partition& mu);

}  // namespace qtk::tri
