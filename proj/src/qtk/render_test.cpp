#include <doctest.h>

#include "errors.hpp"
#include "knots.hpp"
#include "render.hpp"
#include "schur_qt.hpp"

using namespace qtk;
using namespace qtk::io;

TEST_CASE("polynomial round trip") {
  for (const char* s : {"0", "1", "-3*q^2*t + t^5", "q + t + A", "2*A^3*q - 7*y*z^2 + u"}) {
    IntPoly p = IntPoly::parse(s);
    json j = to_json(p);
    CHECK(intpoly_from_json(j) == p);
    CHECK(intpoly_from_json(json::parse(j.dump())).to_string() == p.to_string());
  }
  json j = to_json(IntPoly::parse("123456789012345678901234567890*q"));
  CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
  CHECK(j["vars"] == json::array({"q"}));
}

TEST_CASE("rational functions and symmetric functions") {
  RatFunc r = RatFunc::parse("(1+q)/(1-t)");
  CHECK(ratfunc_from_json(to_json(r)) == r);
  CHECK(to_json(RatFunc::parse("q^2")).contains("terms"));

  SymFunc f = SymFunc::parse("s[2,1] + (q+t)/(1-q)*s[3] - 4*s[1,1,1]");
  json jf = to_json(f);
  CHECK(symfunc_from_json(jf) == f);
  CHECK(symfunc_from_json(json::parse(jf.dump())).to_string() == f.to_string());
}

TEST_CASE("superpolynomial round trip") {
  knots::SuperPoly p = knots::superpoly(3, 2);
  json j = to_json(p);
  CHECK(j["schur_qt"].size() == 2);
  CHECK(j["schur_qt"][0] == json::array({{{"a", 1}, {"b", 0}, {"mult", 1}}}));
  knots::SuperPoly back = superpoly_from_json(j);
  CHECK(back == p);
  CHECK(back.to_string(knots::SuperPoly::Format::monomial) == p.to_string(knots::SuperPoly::Format::monomial));
  CHECK(back.to_string(knots::SuperPoly::Format::schur) == p.to_string(knots::SuperPoly::Format::schur));
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(intpoly_from_json(json::parse(R"({"vars":["w"],"terms":[]})")), InvalidInput);
  CHECK_THROWS_AS(intpoly_from_json(json::parse(R"({"vars":["q"],"terms":[{"coeff":"1","powers":[1,2]}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(intpoly_from_json(json::parse(R"({"terms":[]})")), InvalidInput);
  CHECK_THROWS_AS(symfunc_from_json(json::parse(R"({"schur_x":[{"lambda":"x"}]})")), InvalidInput);
}
