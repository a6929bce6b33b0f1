#include <doctest.h>

#include "errors.hpp"
#include "knots.hpp"

using namespace qtk;
using namespace qtk::knots;

namespace {

SymFunc S(const char* s) { return SymFunc::parse(s); }
IntPoly QT(const char* s) { return schur_qt_parse(s); }
IntPoly P(const char* s) { return IntPoly::parse(s); }

std::vector<IntPoly> QTs(std::initializer_list<const char*> xs) {
  std::vector<IntPoly> out;
  for (const char* x : xs) out.push_back(QT(x));
  return out;
}

const char* kA54 = "s[1,1,1] + s[3,1] + s[4,1] + s[6]";
const char* kA65 =
    "s[1,1,1,1] + s[3,1,1] + s[4,1,1] + s[5,1,1] + s[4,2] + s[4,3] + s[6,1] + s[6,2] + s[7,1] + s[8,1] + s[10]";

}  // namespace

TEST_CASE("small superpolynomials") {
  SuperPoly p32 = superpoly(3, 2);
  CHECK(p32.to_string() == "A^0: q + t ; A^1: 1");
  CHECK(p32.as_poly() == P("q + t + A"));
  CHECK(superpoly(2, 2).as_poly() == P("q + t + A"));

  SuperPoly p43 = superpoly(4, 3);
  CHECK(p43.coeffs == QTs({"s3+s11", "s1+s2", "1"}));
  CHECK(p43.coeffs[0] == P("q^3+q^2*t+q*t^2+t^3+q*t"));
  CHECK(p43.to_string(SuperPoly::Format::schur) == "A^0: s[3] + s[1,1] ; A^1: s[2] + s[1] ; A^2: 1");

  CHECK(superpoly(5, 4).coeffs == QTs({"s31+s41+s6", "s11+s21+s31+s3+s4+s5", "s1+s2+s3", "1"}));
}

TEST_CASE("superpolynomial of the (6,5) torus knot") {
  SuperPoly p = superpoly(6, 5);
  CHECK(p.coeffs == QTs({"s43+s42+s62+s61+s71+s81+s[10]",
                         "s33+s32+s42+s52+s31+2*s41+2*s51+2*s61+s71+s6+s7+s8+s9",
                         "s32+s11+s21+2*s31+s41+s51+s3+s4+2*s5+s6+s7", "s1+s2+s3+s4", "1"}));
  CHECK(schur_positive(p));
  // 197 terms counted with multiplicity, 122 distinct monomials.
  IntPoly at_one = p.as_poly().substitute(Var::q, 1).substitute(Var::t, 1).substitute(Var::A, 1);
  CHECK(at_one == IntPoly(197));
  CHECK(p.as_poly().size() == 122);
}

TEST_CASE("properties of computed superpolynomials") {
  const std::pair<int, int> cases[] = {{2, 2}, {3, 2}, {5, 2}, {4, 3}, {5, 3}, {5, 4}, {2, 3}, {3, 4}};
  for (auto [k, n] : cases) {
    SuperPoly p = superpoly(k, n);
    for (const auto& c : p.coeffs) CHECK(c.swap_vars(Var::q, Var::t) == c);
    CHECK(schur_positive(p));
    CHECK(skew_positive(p));
  }
  // The top coefficient is 1 on the (n,n) and (n+1,n) rays only.
  for (int n = 2; n <= 5; ++n) {
    CHECK(superpoly(n, n).coeffs.back() == IntPoly(1));
    CHECK(superpoly(n + 1, n).coeffs.back() == IntPoly(1));
  }
  CHECK(superpoly(5, 2).coeffs.back() == QT("s1"));
  CHECK(superpoly(5, 3).coeffs.back() == QT("s1"));
  CHECK(superpoly(7, 5).coeffs.back() == QT("s2"));
  for (auto [k, n] : {std::pair{3, 2}, {4, 3}, {5, 4}}) {
    CHECK(hook_agreement(k, n));
    CHECK(hook_agreement(n, k));
    CHECK(superpoly(k, n) == superpoly(n, k));
  }
}

TEST_CASE("families n = 2 and n = 3") {
  for (int r = 1; r <= 4; ++r) CHECK(superpoly(2 * r + 1, 2).coeffs == family_n2(r));
  CHECK(family_n3(1) == QTs({"s3+s11", "s1+s2", "1"}));
  for (int r = 1; r <= 3; ++r) CHECK(superpoly(3 * r + 1, 3).coeffs == family_n3(r));
  CHECK(rho(1, 1) == QT("s3+s11"));
  CHECK(rho(2, 2) == QT("s22+s41+s6"));
}

TEST_CASE("evaluation at t = 0") {
  const int expected[][3] = {{3, 2, 0}, {5, 2, 1}, {7, 2, 2}, {4, 3, 0}, {5, 4, 0}};
  for (const auto& e : expected) {
    EvalT0Report r = eval_t0_check(e[0], e[1]);
    CHECK(r.delta == e[2]);
    CHECK(r.pass);
  }
  CHECK(eval_t0_check(3, 2).lhs == P("(1-u)*(1-q*u)"));
  CHECK_THROWS_AS(eval_t0_check(2, 3), InvalidInput);
}

TEST_CASE("A-candidate checker") {
  CHECK(check_A_candidate(S("s[1]"), 3, 2).pass);
  CandidateReport bad = check_A_candidate(S("s[2]"), 3, 2);
  CHECK_FALSE(bad.pass);
  CHECK(bad.first_mismatch == 0);
  CHECK(bad.got == P("q^2 + q*t + t^2"));
  CHECK(bad.expected == P("q + t"));

  for (int r = 1; r <= 4; ++r) CHECK(check_A_candidate(SymFunc::schur(Partition{r}), 2 * r + 1, 2).pass);
  CHECK(check_A_candidate(S("s[1,1] + s[3]"), 4, 3).pass);
  CHECK(check_A_candidate(S(kA54), 5, 4).pass);
  CHECK(check_A_candidate(S(kA65), 6, 5).pass);
  // Without s[1,1,1,1], e_2^perp already misses s[1,1](q,t) = qt.
  CandidateReport short65 = check_A_candidate(S(kA65) - S("s[1,1,1,1]"), 6, 5);
  CHECK_FALSE(short65.pass);
  CHECK(short65.first_mismatch == 2);
  CHECK_THROWS_AS(check_A_candidate(S("q*s[1]"), 3, 2), InvalidInput);
}

TEST_CASE("hook terms of candidates") {
  CHECK(hook_poly(S("s[1]")) == IntPoly(1));
  CHECK(hook_poly(S(kA54)) == P("y^5 - y^4*z - y^3*z + y^2*z^2"));
  HookPolyReport r54 = hook_poly_check(S(kA54), 4);
  CHECK(r54.pass);
  CHECK(r54.delta == 2);
  CHECK(r54.computed == P("y^2*(y-z)*(y^2-z)"));
  HookPolyReport r65 = hook_poly_check(S(kA65), 5);
  CHECK(r65.pass);
  CHECK(r65.delta == 3);
  CHECK(r65.computed == P("y^3*(y-z)*(y^2-z)*(y^3-z)"));
  CHECK(r65.computed.size() == 8);
  CHECK_FALSE(hook_poly_check(S("s[2] + s[1,1]"), 3).pass);
}

TEST_CASE("text round trip") {
  for (auto [k, n] : {std::pair{3, 2}, {4, 3}, {5, 4}}) {
    SuperPoly p = superpoly(k, n);
    CHECK(SuperPoly::parse(p.to_string(SuperPoly::Format::monomial)) == p);
    CHECK(SuperPoly::parse(p.to_string(SuperPoly::Format::schur)) == p);
  }
  CHECK(SuperPoly::parse("A^0: 0").coeffs.size() == 1);
  CHECK_THROWS_AS(SuperPoly::parse("A^1: q"), InvalidInput);
  CHECK_THROWS_AS(SuperPoly::parse("A^0: q ; A^2: 1"), InvalidInput);
  CHECK_THROWS_AS(SuperPoly::parse("A^0: A"), InvalidInput);
  CHECK_THROWS_AS(SuperPoly::parse("A^0 q"), InvalidInput);
}
