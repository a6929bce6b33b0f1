#include "triangular.hpp"

#include "errors.hpp"

namespace qtk::tri {

namespace {

Integer floor_rat(const Rational& x) {
  Integer n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
  Integer f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

struct HookData {
  int arm, leg;
};

std::vector<HookData> hooks(const Partition& mu) {
  std::vector<HookData> out;
  for (const auto& c : cell_stats(mu).cells) out.push_back({c.arm, c.leg});
  return out;
}

}  // namespace

Rational t_low(int arm, int leg) { return Rational(leg, arm + leg + 1); }
Rational t_high(int arm, int leg) { return Rational(leg + 1, arm + leg + 1); }

std::optional<SlopeInterval> slope_interval(const Partition& mu) {
  SlopeInterval s{Rational(0), Rational(1)};
  for (const auto& h : hooks(mu)) {
    s.lo = std::max(s.lo, t_low(h.arm, h.leg));
    s.hi = std::min(s.hi, t_high(h.arm, h.leg));
  }
  if (s.lo >= s.hi) return std::nullopt;
  return s;
}

bool is_triangular(const Partition& mu) { return slope_interval(mu).has_value(); }

std::vector<std::vector<Partition>> enumerate_triangular(int max_size) {
  if (max_size < 0) throw InvalidInput("enumerate_triangular: negative size");
  std::vector<std::vector<Partition>> out(max_size + 1);
  for (int n = 0; n <= max_size; ++n)
    for (const auto& mu : partitions_of(n))
      if (is_triangular(mu)) out[n].push_back(mu);
  return out;
}

Partition from_line(const Rational& r, const Rational& s) {
  if (r <= 0 || s <= 0) throw InvalidInput("from_line: r and s must be positive");
  std::vector<int> parts;
  for (int j = 1; Rational(j) <= s; ++j) {
    Integer v = floor_rat(r - Rational(j) * r / s);
    if (v <= 0) break;
    parts.push_back(static_cast<int>(v));
  }
  return Partition(parts);
}

Partition staircase(int n) {
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(i);
  return Partition(parts);
}

TriangularPartition TriangularPartition::of(const Partition& tau) {
  auto s = slope_interval(tau);
  if (!s) throw InvalidInput("partition " + tau.to_string() + " is not triangular");
  return {tau, *s, (s->lo + s->hi) / 2};
}

int sim(const TriangularPartition& tau, const Partition& mu) {
  if (!tau.tau.contains(mu))
    throw InvalidInput("sim: " + mu.to_string() + " is not contained in " + tau.tau.to_string());
  int count = 0;
  for (const auto& h : hooks(mu))
    if (t_low(h.arm, h.leg) < tau.tbar && tau.tbar <= t_high(h.arm, h.leg)) ++count;
  return count;
}

IntPoly d_tau(const TriangularPartition& tau) {
  IntPoly out;
  for (const auto& mu : subpartitions(tau.tau)) {
    Monomial m = Monomial::of(Var::q, static_cast<unsigned>(tau.tau.size() - mu.size())) *
                 Monomial::of(Var::t, static_cast<unsigned>(sim(tau, mu)));
    out += IntPoly(m);
  }
  return out;
}

std::vector<int> descents(const Partition& mu) {
  std::vector<int> out;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > mu[i + 1]) out.push_back(i + 1);
  return out;
}

knots::SuperPoly delta_comb(const TriangularPartition& tau) {
  const int n = tau.tau.length();
  const IntPoly q = IntPoly::var(Var::q), A = IntPoly::var(Var::A);
  IntPoly total;
  for (const auto& mu : subpartitions(tau.tau)) {
    std::vector<bool> forced(n + 1, false);
    for (int i : descents(mu)) forced[i] = true;
    // J contains every descent; each other row j is either in J (q^{area of row j})
    // or contributes one power of A.
    IntPoly term = IntPoly::var(Var::t, static_cast<unsigned>(sim(tau, mu)));
    for (int j = 1; j <= n; ++j) {
      IntPoly row = q.pow(static_cast<unsigned>(tau.tau[j - 1] - mu[j - 1]));
      term *= forced[j] ? row : row + A;
    }
    total += term;
  }
  knots::SuperPoly p;
  p.coeffs = total.coefficients_in(Var::A);
  p.coeffs.resize(n + 1);
  return p;
}

}  // namespace qtk::tri
