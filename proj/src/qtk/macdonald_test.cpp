#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "macdonald.hpp"
#include "plethysm.hpp"
#include "schur_qt.hpp"

using namespace qtk;
using namespace qtk::mac;

namespace {

SymFunc S(const char* s) { return SymFunc::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }
pleth::Alphabet Al(const char* s) { return pleth::Alphabet::parse(s); }

// sum of s_lambda(q,t) (x) s_mu(x)
SymFunc tensor_sum(std::initializer_list<std::pair<const char*, Partition>> terms) {
  SymFunc f;
  for (const auto& [c, mu] : terms) f.add_term(mu, RatFunc(schur_qt_parse(c)));
  return f;
}

RatFunc M() { return R("(1-q)*(1-t)"); }

SymFunc random_homogeneous(std::mt19937& rng, int n) {
  static const char* coeffs[] = {"1", "-2", "q", "t - q", "3*q*t", "1 + t^2"};
  std::uniform_int_distribution<int> ci(0, 5);
  SymFunc f;
  for (const auto& lam : partitions_of(n))
    if (rng() % 2) f.add_term(lam, R(coeffs[ci(rng)]));
  return f;
}

}  // namespace

TEST_CASE("small modified Macdonald polynomials") {
  CHECK(macH(Partition{}) == S("1"));
  CHECK(macH(Partition{1}) == S("s[1]"));
  CHECK(macH(Partition{2}) == S("s[2] + q*s[1,1]"));
  CHECK(macH(Partition{1, 1}) == S("s[2] + t*s[1,1]"));
  CHECK(macH(Partition{3}) == S("s[3] + (q^2+q)*s[2,1] + q^3*s[1,1,1]"));
  CHECK(macH(Partition{2, 1}) == S("s[3] + (q+t)*s[2,1] + q*t*s[1,1,1]"));
  CHECK(macH(Partition{1, 1, 1}) == S("s[3] + (t^2+t)*s[2,1] + t^3*s[1,1,1]"));
}

TEST_CASE("Kostka matrix") {
  auto k2 = kostka_matrix(2);
  CHECK(k2 == std::vector<std::vector<RatFunc>>{{R("1"), R("q")}, {R("1"), R("t")}});

  const char* expected[5][5] = {
      {"1", "q^3 + q^2 + q", "q^4 + q^2", "q^5 + q^4 + q^3", "q^6"},
      {"t", "q^2*t + q*t + 1", "q^2*t + q", "q^3*t + q^2 + q", "q^3"},
      {"t^2", "q*t^2 + q*t + t", "q^2*t^2 + 1", "q^2*t + q*t + q", "q^2"},
      {"t^3", "q*t^3 + t^2 + t", "q*t^2 + t", "q*t^2 + q*t + 1", "q"},
      {"t^6", "t^5 + t^4 + t^3", "t^4 + t^2", "t^3 + t^2 + t", "1"},
  };
  auto k4 = kostka_matrix(4, KostkaForm::classical);
  REQUIRE(k4.size() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(k4[i][j] == R(expected[i][j]));
  // The modified form is normalized on s[n]; the classical one is not.
  auto m4 = kostka_matrix(4);
  for (int i = 0; i < 5; ++i) CHECK(m4[i][0] == RatFunc(1));
  CHECK(m4[4][0] != k4[4][0]);

  std::map<Var, RatFunc> ones{{Var::q, RatFunc(1)}, {Var::t, RatFunc(1)}};
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n))
      CHECK(macH(mu).specialize(ones) == SymFunc::basis(Basis::h, Partition::column(n)));
}

TEST_CASE("Macdonald basis expansion") {
  MacExpansion x = to_mac_basis(S("e[2]"), 2);
  CHECK(x.coeffs.at(Partition{2}) == R("1/(q-t)"));
  CHECK(x.coeffs.at(Partition{1, 1}) == R("-1/(q-t)"));
  CHECK(from_mac_basis(x) == S("e[2]"));

  MacExpansion y = to_mac_basis(macH(Partition{2, 1}), 3);
  CHECK(y.coeffs.size() == 1);
  CHECK(y.coeffs.at(Partition{2, 1}) == RatFunc(1));

  CHECK_THROWS_AS(to_mac_basis(S("s[2] + s[1]"), 2), InvalidInput);

  for (int n = 1; n <= 5; ++n) {
    MacExpansion e = to_mac_basis(e_n(n), n);
    SymFunc via_hat, via_qt;
    for (const auto& mu : partitions_of(n)) {
      RatFunc w(w_product(mu));
      RatFunc c = M() * RatFunc(cell_enumerator(mu)) * RatFunc(pi_product(mu)) / w;
      CHECK(e.coeffs.at(mu) == c);
      SymFunc hhat = macH(mu) * w.inverse();
      via_hat += macH(mu) * pleth::plethysm_scalar(hhat, pleth::Alphabet::scalar(M()));
      via_qt += macH(mu) * c;
    }
    CHECK(via_hat == e_n(n));
    CHECK(via_qt == e_n(n));
  }
}

TEST_CASE("eigenoperators") {
  CHECK(nabla(S("e[2]")) == S("s[2] + (q+t)*s[1,1]"));
  SymFunc h32 = macH(Partition{3, 2});
  CHECK(eigen_apply(EigenSpec::nabla(), h32) == h32 * R("q^4*t^2"));
  SymFunc h2 = macH(Partition{2});
  CHECK(eigen_apply(EigenSpec::delta(S("e[1]")), h2) == h2 * R("1+q"));
  CHECK(eigen_apply(EigenSpec::delta_bar(S("e[1]")), h2) == h2 * R("1+1/q"));
  CHECK(eigen_apply(EigenSpec::m(), h2) == h2 * M());
  CHECK(eigen_apply(EigenSpec::m_bar(), h2) == h2 * R("(1-1/q)*(1-1/t)"));
  CHECK(nabla(nabla(S("s[2,1] + q*s[3]")), -1) == S("s[2,1] + q*s[3]"));
  CHECK_THROWS_AS(nabla(S("s[1]"), 2), InvalidInput);
}

TEST_CASE("nabla of e_n") {
  CHECK(nabla(e_n(1)) == tensor_sum({{"1", Partition{1}}}));
  CHECK(nabla(e_n(2)) == tensor_sum({{"1", Partition{2}}, {"s1", Partition{1, 1}}}));
  // The s[2,1] coefficient s1 + s2 confirms the misprinted index.
  SymFunc n3 = tensor_sum({{"1", Partition{3}}, {"s1+s2", Partition{2, 1}}, {"s11+s3", Partition{1, 1, 1}}});
  CHECK(nabla(e_n(3)) == n3);
  CHECK(eigen_apply(EigenSpec::delta(e_n(3)), e_n(3)) == n3);
  CHECK(nabla(e_n(4)) == tensor_sum({{"1", Partition{4}},
                                     {"s1+s2+s3", Partition{3, 1}},
                                     {"s2+s21+s4", Partition{2, 2}},
                                     {"s11+s21+s31+s3+s4+s5", Partition{2, 1, 1}},
                                     {"s31+s41+s6", Partition{1, 1, 1, 1}}}));
}

TEST_CASE("symmetries") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      SymFunc h = macH(mu);
      CHECK(macH(mu.conjugate()) == h.map_coeffs([](const RatFunc& c) { return c.swap_vars(Var::q, Var::t); }));
      CHECK(down(h) * RatFunc(cell_weight(mu)) == h);
      CHECK(cell_weight(mu) == IntPoly(Monomial::of(Var::q, mu.eta_conj()) * Monomial::of(Var::t, mu.eta())));
    }
}

TEST_CASE("specializations at t = 1 and t = 1/q") {
  const pleth::Alphabet xq = Al("X/(1-q)"), oneq = Al("1/(1-q)");
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions_of(n)) {
      SymFunc h = macH(mu);
      SymFunc hmu = SymFunc::basis(Basis::h, mu);
      CHECK(h.specialize({{Var::t, RatFunc(1)}}) ==
            pleth::plethysm(hmu, xq) * pleth::plethysm_scalar(hmu, oneq).inverse());
      SymFunc smu = SymFunc::schur(mu);
      CHECK(h.specialize({{Var::t, R("1/q")}}) ==
            pleth::plethysm(smu, xq) * pleth::plethysm_scalar(smu, oneq).inverse());
    }
}

TEST_CASE("star orthogonality and the Cauchy kernel") {
  for (int n = 0; n <= 5; ++n) {
    const auto& parts = partitions_of(n);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        RatFunc v = star_inner(macH(lam), macH(mu)) / RatFunc(w_product(mu));
        CHECK(v == RatFunc(lam == mu ? 1 : 0));
      }
  }
  for (int n = 0; n <= 4; ++n) {
    pleth::BiSymFunc kernel = pleth::plethysm2(e_n(n), Al("X*Y/((1-q)*(1-t))"));
    pleth::BiSymFunc sum;
    for (const auto& mu : partitions_of(n))
      sum += pleth::tensor(macH(mu), macH(mu) * RatFunc(w_product(mu)).inverse());
    CHECK(kernel == sum);
  }
}

TEST_CASE("nabla identities") {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 8; ++iter) {
    int n = 1 + iter % 5;
    SymFunc f = random_homogeneous(rng, n);
    CHECK(nabla(f, -1) == down(nabla(down(f))));
    if (n <= 4) CHECK(nabla(f) == eigen_apply(EigenSpec::delta(e_n(n)), f));
  }
  const pleth::Alphabet xq = Al("X/(1-q)");
  for (int n = 1; n <= 5; ++n) {
    SymFunc g = pleth::plethysm(h_n(n), xq);
    RatFunc qn = RatFunc::var(Var::q).pow(n * (n - 1) / 2);
    CHECK(nabla(g).specialize({{Var::t, RatFunc(1)}}) == g * qn);
  }
}

TEST_CASE("cache plausibility check") {
  CHECK(plausible_macH(Partition{2, 1}, macH(Partition{2, 1})));
  CHECK_FALSE(plausible_macH(Partition{2, 1}, S("s[3] + (q+t)*s[2,1] + q*s[1,1,1]")));
  CHECK_FALSE(plausible_macH(Partition{2, 1}, S("2*s[3] + (q+t)*s[2,1] + q*t*s[1,1,1]")));
  CHECK_FALSE(plausible_macH(Partition{2}, S("s[2] + t*s[1,1]")));
  CHECK(memoized_degree(3).size() == 3);
}
