#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "hall.hpp"
#include "limits.hpp"
#include "macdonald.hpp"
#include "plethysm.hpp"
#include "schur_qt.hpp"

using namespace qtk;
using namespace qtk::hall;

namespace {

SymFunc S(const char* s) { return SymFunc::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }
const SymFunc kOne = SymFunc(RatFunc(1));

SymFunc tensor_sum(std::initializer_list<std::pair<const char*, Partition>> terms) {
  SymFunc f;
  for (const auto& [c, mu] : terms) f.add_term(mu, RatFunc(schur_qt_parse(c)));
  return f;
}

SymFunc random_upto(std::mt19937& rng, int max_deg) {
  static const char* coeffs[] = {"1", "-1", "q", "t", "2", "q - t"};
  SymFunc f;
  for (int n = 0; n <= max_deg; ++n)
    for (const auto& lam : partitions_of(n))
      if (rng() % 3 == 0) f.add_term(lam, R(coeffs[rng() % 6]));
  return f;
}

const RatFunc kM = RatFunc::parse("(1-q)*(1-t)");

}  // namespace

TEST_CASE("lattice splitting") {
  auto check = [](int a, int b, std::pair<int, int> rs, std::pair<int, int> uv) {
    Split s = split(a, b);
    CHECK(s.rs == rs);
    CHECK(s.uv == uv);
  };
  check(3, 2, {2, 1}, {1, 1});
  check(1, 1, {1, 0}, {0, 1});
  for (int k = 1; k <= 6; ++k) check(1, k, {1, k - 1}, {0, 1});
  for (int a = 1; a <= 9; ++a)
    for (int b = 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      Split s = split(a, b);
      CHECK(s.rs.first + s.uv.first == a);
      CHECK(s.rs.second + s.uv.second == b);
      CHECK(s.rs.first * s.uv.second - s.rs.second * s.uv.first == 1);
    }
  CHECK_THROWS_AS(split(2, 2), InvalidInput);
  CHECK_THROWS_AS(split(0, 1), InvalidInput);
}

TEST_CASE("D_k series") {
  CHECK(d_series(0, kOne) == kOne);
  for (int k = 0; k <= 4; ++k) CHECK(d_series(k, kOne) == (k % 2 ? -e_n(k) : e_n(k)));
  CHECK(d_series(-1, kOne).is_zero());
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      SymFunc h = mac::macH(mu);
      CHECK(d_series(0, h) == h * (RatFunc(1) - kM * RatFunc(cell_enumerator(mu))));
    }
}

TEST_CASE("D_k commutator reductions") {
  std::mt19937 rng(23);
  for (int iter = 0; iter < 4; ++iter) {
    SymFunc f = random_upto(rng, 4);
    for (int k = 0; k <= 1; ++k)
      for (int j = 1; j <= 3; ++j) {
        // p_j[X/M] = p_j / ((1-q^j)(1-t^j))
        SymFunc pj = p_n(j) * kM.adams(j).inverse();
        OperatorExpr dk = OperatorExpr::d(k);
        OperatorExpr raise = OperatorExpr::bracket(dk, OperatorExpr::mul_by(pj));
        CHECK(d_series(k + j, f) == raise.apply(f));
        OperatorExpr lower = OperatorExpr::bracket(OperatorExpr::perp(p_n(j)), dk);
        // p_i[-zX] = -z^i p_i, so the commutator picks up -z^j for every j.
        SymFunc low = lower.apply(f);
        CHECK(d_series(k - j, f) == -low);
      }
  }
}

TEST_CASE("X^(k,n) base cases and small values") {
  CHECK(xkn_apply(1, 1, kOne) == S("s[1]"));
  SymFunc g = S("s[2,1] + q*s[1]");
  CHECK(xkn_apply(1, 0, g) == d_series(0, g));
  CHECK(xkn_apply(0, 1, g) == multiply(S("p[1]"), g));
  CHECK_THROWS_AS(xkn(0, 0), InvalidInput);
  CHECK_THROWS_AS(xkn(2, 0), InvalidInput);
  CHECK(create(e_n(2), 1, 1) == S("s[2] + (q+t)*s[1,1]"));
  CHECK(create(e_n(1), 1, 1) == S("s[1]"));
  CHECK(create(Seed::e_d(1), 1, 1) == S("s[1]"));
}

TEST_CASE("compact D_1 bracketing") {
  std::mt19937 rng(29);
  for (int k = 0; k <= 3; ++k) {
    SymFunc f = random_upto(rng, 4 - k);
    CHECK(xkn_compact_d1(k, f) == xkn_apply(k + 1, k, f));
  }
}

TEST_CASE("pi basis") {
  CHECK(pi_n(1) == S("s[1]"));
  CHECK(pi_n(2) == S("s[1,1] - s[2]/(q*t)"));
  auto c = pi_expand(pi_n(2));
  CHECK(c.size() == 1);
  CHECK(c.at(Partition{2}) == RatFunc(1));

  const pleth::Alphabet one_qt = pleth::Alphabet::parse("1/(1-q*t)");
  const pleth::Alphabet e_alpha = pleth::Alphabet::parse("1-q*t");
  for (int d = 1; d <= 5; ++d) {
    auto ce = pi_expand(e_n(d)), ch = pi_expand(h_n(d));
    for (const auto& mu : partitions_of(d)) {
      RatFunc emu = pleth::plethysm_scalar(SymFunc::basis(Basis::e, mu), e_alpha);
      RatFunc fe = emu * pleth::plethysm_scalar(SymFunc::basis(Basis::f, mu), one_qt);
      RatFunc fh = emu * pleth::plethysm_scalar(SymFunc::basis(Basis::m, mu), one_qt);
      CHECK((ce.count(mu) ? ce.at(mu) : RatFunc()) == fe);
      CHECK((ch.count(mu) ? ch.at(mu) : RatFunc()) == fh);
    }
    // Round trip through the basis.
    SymFunc back;
    for (const auto& [mu, cm] : ce) back += pi_basis(mu) * cm;
    CHECK(back == e_n(d));
  }

  for (int d = 1; d <= 6; ++d) {
    // pi_mu expressed in h is invertible: pi_expand reproduces every h_mu.
    for (const auto& mu : partitions_of(d)) {
      SymFunc hmu = SymFunc::basis(Basis::h, mu), back;
      for (const auto& [nu, cn] : pi_expand(hmu)) back += pi_basis(nu) * cn;
      CHECK(back == hmu);
    }
    SymFunc at = pi_n(d).specialize({{Var::t, R("1/q")}});
    CHECK(at == ((d - 1) % 2 ? -p_n(d) : p_n(d)));
  }
}

TEST_CASE("hook expansions of seeds") {
  for (int d = 1; d <= 5; ++d) {
    SymFunc pi_sum, p_sum;
    for (int k = 1; k <= d; ++k) {
      Partition hook = Partition::hook(k - 1, d - k);
      SymFunc sh = Seed::shat(hook).value();
      pi_sum += sh;
      p_sum += sh * RatFunc(IntPoly::var(Var::q, hook.iota()) * IntPoly::var(Var::t, hook.iota()));
    }
    CHECK(pi_sum == pi_n(d));
    CHECK(p_sum == Seed::phat_d(d).value());
  }
}

TEST_CASE("nabla of renormalized Schur functions") {
  auto nab = [](Partition mu) { return create(Seed::shat(mu), 1, 1); };
  CHECK(nab({1}) == tensor_sum({{"1", {1}}}));
  CHECK(nab({2}) == tensor_sum({{"1", {1, 1}}}));
  CHECK(nab({1, 1}) == tensor_sum({{"s1", {1, 1}}, {"1", {2}}}));
  CHECK(nab({3}) == tensor_sum({{"s1", {1, 1, 1}}, {"1", {2, 1}}}));
  CHECK(nab({2, 1}) == tensor_sum({{"s2", {1, 1, 1}}, {"s1", {2, 1}}}));
  CHECK(nab({1, 1, 1}) == tensor_sum({{"s11+s3", {1, 1, 1}}, {"s1+s2", {2, 1}}, {"1", {3}}}));
  CHECK(nab({4}) == tensor_sum({{"s11+s3", {1, 1, 1, 1}}, {"s1+s2", {2, 1, 1}}, {"s1", {2, 2}}, {"1", {3, 1}}}));
  CHECK(nab({3, 1}) ==
        tensor_sum({{"s21+s4", {1, 1, 1, 1}}, {"s11+s2+s3", {2, 1, 1}}, {"s2", {2, 2}}, {"s1", {3, 1}}}));
  CHECK(nab({2, 2}) == tensor_sum({{"s11", {1, 1, 1, 1}}, {"s1", {2, 1, 1}}, {"1", {3, 1}}}));
  CHECK(nab({2, 1, 1}) ==
        tensor_sum({{"s31+s5", {1, 1, 1, 1}}, {"s21+s3+s4", {2, 1, 1}}, {"s11+s3", {2, 2}}, {"s2", {3, 1}}}));
  CHECK(nab({1, 1, 1, 1}) == tensor_sum({{"s31+s41+s6", {1, 1, 1, 1}},
                                         {"s11+s21+s3+s31+s4+s5", {2, 1, 1}},
                                         {"s2+s21+s4", {2, 2}},
                                         {"s1+s2+s3", {3, 1}},
                                         {"1", {4}}}));
  for (int n = 1; n <= 4; ++n)
    for (const auto& mu : partitions_of(n)) CHECK(nab(mu) == mac::nabla(Seed::shat(mu).value()));
}

TEST_CASE("nabla conjugation") {
  std::vector<Seed> seeds;
  for (int d = 1; d <= 3; ++d) {
    seeds.push_back(Seed::pi_d(d));
    seeds.push_back(Seed::phat_d(d));
    seeds.push_back(Seed::e_d(d));
    seeds.push_back(Seed::hhat_d(d));
    for (const auto& mu : partitions_of(d)) seeds.push_back(Seed::shat(mu));
  }
  const std::pair<int, int> rays[] = {{0, 1}, {1, 1}, {1, 2}, {2, 1}};
  for (const Seed& seed : seeds)
    for (auto [a, b] : rays) CHECK(mac::nabla(create(seed, a, b)) == create(seed, a + b, b));

  std::mt19937 rng(31);
  for (int iter = 0; iter < 4; ++iter) {
    SymFunc f = random_upto(rng, 3);
    SymFunc lhs = mac::nabla(multiply(S("p[1]"), mac::nabla(f, -1)));
    CHECK(lhs == xkn_apply(1, 1, f));
  }
}

TEST_CASE("commutativity on a ray") {
  std::mt19937 rng(37);
  const std::pair<int, int> rays[] = {{1, 1}, {2, 1}, {1, 2}};
  for (auto [a, b] : rays) {
    SymFunc f = random_upto(rng, b == 1 ? 4 : 2);
    CHECK(xkn_apply(a, b, xkn_apply(2 * a, 2 * b, f)) == xkn_apply(2 * a, 2 * b, xkn_apply(a, b, f)));
  }
}

TEST_CASE("seeds and degree guard") {
  CHECK(Seed::parse("e3").value() == e_n(3));
  CHECK(Seed::parse("shat2,1").value() == S("-s[2,1]/(q*t)"));
  CHECK(Seed::parse("shat[2,1]").to_string() == "shat[2,1]");
  CHECK(Seed::parse("hhat2").value() == S("-s[2]/(q*t)"));
  CHECK(Seed::parse("phat2").value() == S("-p[2]"));
  CHECK_THROWS_AS(Seed::parse("x2"), InvalidInput);
  CHECK_THROWS_AS(Seed::parse("e"), InvalidInput);
  CHECK_THROWS_AS(create(e_n(1), 2, 2), InvalidInput);

  int saved = degree_limit();
  set_degree_limit(3);
  CHECK_THROWS_AS(create(e_n(1), 5, 4), DegreeLimitExceeded);
  set_degree_limit(saved);
}
