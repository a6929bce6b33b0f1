#include "render.hpp"

#include "errors.hpp"

namespace qtk::io {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json to_json(const IntPoly& p) {
  std::vector<Var> vars;
  for (Var v : kAllVars)
    if (p.uses(v)) vars.push_back(v);
  json j;
  j["vars"] = json::array();
  for (Var v : vars) j["vars"].push_back(std::string(var_name(v)));
  j["terms"] = json::array();
  for (const auto& t : p.terms()) {
    json powers = json::array();
    for (Var v : vars) powers.push_back(t.mono.exponent(v));
    j["terms"].push_back({{"coeff", t.coeff.str()}, {"powers", powers}});
  }
  return j;
}

IntPoly intpoly_from_json(const json& j) {
  return guarded("JsonPoly", [&] {
    std::vector<Var> vars;
    for (const auto& name : j.at("vars")) {
      Var v;
      if (!parse_var(name.get<std::string>(), v)) throw InvalidInput("JsonPoly: unknown variable");
      vars.push_back(v);
    }
    IntPoly out;
    for (const auto& t : j.at("terms")) {
      const auto& powers = t.at("powers");
      if (powers.size() != vars.size()) throw InvalidInput("JsonPoly: powers do not match vars");
      std::array<unsigned, kVarCount> e{};
      for (std::size_t i = 0; i < vars.size(); ++i) e[static_cast<int>(vars[i])] += powers[i].get<unsigned>();
      out += IntPoly(Monomial::from_exponents(e), Integer(t.at("coeff").get<std::string>()));
    }
    return out;
  });
}

json to_json(const RatFunc& r) {
  if (r.is_polynomial()) return to_json(r.num());
  return {{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RatFunc ratfunc_from_json(const json& j) {
  if (j.contains("num")) return RatFunc(intpoly_from_json(j.at("num")), intpoly_from_json(j.at("den")));
  return RatFunc(intpoly_from_json(j));
}

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& [lam, c] : f.terms()) terms.push_back({{"lambda", lam.parts()}, {"coeff", to_json(c)}});
  return {{"schur_x", terms}};
}

SymFunc symfunc_from_json(const json& j) {
  return guarded("SymFunc JSON", [&] {
    SymFunc f;
    for (const auto& t : j.at("schur_x"))
      f.add_term(Partition(t.at("lambda").get<std::vector<int>>()), ratfunc_from_json(t.at("coeff")));
    return f;
  });
}

json to_json(const SchurQT& x) {
  json out = json::array();
  for (const auto& t : x.terms) out.push_back({{"a", t.a}, {"b", t.b}, {"mult", t.mult.convert_to<long long>()}});
  return out;
}

json to_json(const knots::SuperPoly& p) {
  json j = to_json(p.as_poly());
  json forms = json::array();
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.schur_form) forms.push_back(to_json((*p.schur_form)[i]));
    else if (auto x = schur_qt_try_expand(p.coeffs[i])) forms.push_back(to_json(*x));
    else forms.push_back(nullptr);  // not q,t-symmetric
  }
  j["schur_qt"] = forms;
  return j;
}

knots::SuperPoly superpoly_from_json(const json& j) {
  return guarded("SuperPoly JSON", [&] {
    knots::SuperPoly p;
    p.coeffs = intpoly_from_json(j).coefficients_in(Var::A);
    p.coeffs.resize(j.at("schur_qt").size());
    std::vector<SchurQT> forms;
    for (const auto& c : p.coeffs)
      if (auto x = schur_qt_try_expand(c)) forms.push_back(std::move(*x));
    if (forms.size() == p.coeffs.size()) p.schur_form = std::move(forms);
    return p;
  });
}

}  // namespace qtk::io
