#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "plethysm.hpp"

using namespace qtk;
using namespace qtk::pleth;

namespace {

SymFunc S(const char* s) { return SymFunc::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }
Alphabet Al(const char* s) { return Alphabet::parse(s); }

Alphabet random_alphabet(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 3);
  switch (pick(rng)) {
    case 0: return Alphabet::X();
    case 1: return Alphabet::eps();
    case 2: return Alphabet::var(Var::q);
    case 3: return Alphabet::scalar(R("1 - t"));
    case 4: return random_alphabet(rng, depth - 1) + random_alphabet(rng, depth - 1);
    case 5: return random_alphabet(rng, depth - 1) * random_alphabet(rng, depth - 1);
    default: return random_alphabet(rng, depth - 1) - random_alphabet(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("power-sum rules") {
  CHECK(Al("eps").pk_eval(3) == PSum(RatFunc(-1)));
  CHECK(Al("eps").pk_eval(2) == PSum(RatFunc(1)));
  CHECK(Al("-1").pk_eval(2) == PSum(RatFunc(-1)));
  CHECK(Al("5").pk_eval(3) == PSum(RatFunc(5)));
  CHECK(Al("q*t").pk_eval(3) == PSum(R("q^3*t^3")));
  CHECK(Al("X").pk_eval(2) == PSum::px(2));
  CHECK(Al("X/(1-q)").pk_eval(2) == PSum::px(2) * PSum(R("1/(1-q^2)")));
  CHECK_THROWS_AS(Al("1/X"), InvalidInput);

  std::mt19937 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    Alphabet a = random_alphabet(rng, 2), b = random_alphabet(rng, 2);
    for (int k = 1; k <= 3; ++k) {
      CHECK((a + b).pk_eval(k) == a.pk_eval(k) + b.pk_eval(k));
      CHECK((a * b).pk_eval(k) == a.pk_eval(k) * b.pk_eval(k));
    }
  }
}

TEST_CASE("plethysm examples") {
  CHECK(plethysm(S("e[2]"), Al("-X")) == S("h[2]"));
  CHECK(plethysm(S("e[3]"), Al("-X")) == S("-h[3]"));
  BiSymFunc xy = plethysm2(S("s[2]"), Al("X*Y"));
  CHECK(xy == tensor(S("s[2]"), S("s[2]")) + tensor(S("s[1,1]"), S("s[1,1]")));
  CHECK(plethysm_scalar(S("s[1,1]"), Al("1-eps*q")) == R("q*(1+q)"));
}

TEST_CASE("hook evaluation at 1-q") {
  CHECK(hook_eval_1mq(Partition{2}) == R("1-q"));
  CHECK(hook_eval_1mq(Partition{2, 2}).is_zero());
  CHECK(hook_eval_1mq(Partition{1, 1}) == R("-q*(1-q)"));
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      CHECK(hook_eval_1mq(mu) == plethysm_scalar(SymFunc::schur(mu), Al("1-q")));
  for (int a = 0; a <= 6; ++a)
    for (int l = 0; a + l <= 6; ++l) {
      RatFunc v = plethysm_scalar(SymFunc::schur(Partition::hook(a, l)), Al("1-eps*q"));
      CHECK(v / R("1+q") == RatFunc::var(Var::q).pow(l));
    }
}

TEST_CASE("series") {
  Alphabet a = Al("(1-q)*z");
  CHECK(series_eval(Series::H, a, 0).x_only() == S("1"));
  for (int n = 1; n <= 4; ++n)
    CHECK(series_eval(Series::H, a, n).x_only() == SymFunc(R("1-q") * RatFunc::var(Var::z).pow(n)));
  CHECK(series_eval(Series::E, Al("X+Y"), 2) ==
        tensor(S("e[2]"), S("1")) + tensor(S("e[1]"), S("e[1]")) + tensor(S("1"), S("e[2]")));
  CHECK(series_eval(Series::H, Al("X"), 3).x_only() == S("h[3]"));
}

TEST_CASE("identity alphabet") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      SymFunc f = SymFunc::schur(mu, R("q-t"));
      CHECK(plethysm(f, Al("X")) == f);
    }
}

TEST_CASE("coproduct and Cauchy") {
  for (int n = 0; n <= 6; ++n) {
    BiSymFunc expected;
    for (int k = 0; k <= n; ++k) expected += tensor(h_n(k), h_n(n - k));
    CHECK(series_eval(Series::H, Al("X+Y"), n) == expected);
  }
  for (int n = 0; n <= 5; ++n) {
    BiSymFunc expected;
    for (const auto& lam : partitions_of(n)) expected.add_term(lam, lam, RatFunc(1));
    CHECK(series_eval(Series::H, Al("X*Y"), n) == expected);
  }
}

TEST_CASE("skewing identity") {
  // f[X - eps A] = sum_k A^k e_k^perp f
  Alphabet alpha = Al("X - eps*A");
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      SymFunc f = SymFunc::schur(mu);
      SymFunc expected;
      for (int k = 0; k <= n; ++k) expected += perp_e(k, f) * RatFunc::var(Var::A).pow(k);
      CHECK(plethysm(f, alpha) == expected);
    }
}

TEST_CASE("Hall product against star product") {
  // <f, g> = <f, omega g[X/M]>_*
  Alphabet xm = Al("X/((1-q)*(1-t))");
  for (int n = 0; n <= 5; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        SymFunc f = SymFunc::schur(a), g = SymFunc::schur(b);
        CHECK(hall_inner(f, g) == star_inner(f, omega(plethysm(g, xm))));
      }
}
