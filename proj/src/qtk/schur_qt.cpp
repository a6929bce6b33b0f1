#include "schur_qt.hpp"

#include <cctype>

#include "errors.hpp"

namespace qtk {

SchurQT schur_qt_expand(const IntPoly& p) {
  for (Var v : {Var::A, Var::u, Var::y, Var::z})
    if (p.uses(v)) throw InvalidInput("schur_qt_expand: polynomial must involve only q and t");
  if (p != p.swap_vars(Var::q, Var::t))
    throw InvalidInput("schur_qt_expand: polynomial is not symmetric in q and t");

  SchurQT out;
  IntPoly rest = p;
  while (!rest.is_zero()) {
    const Term& lead = rest.leading();
    unsigned a = lead.mono.exponent(Var::q), b = lead.mono.exponent(Var::t);
    if (a < b) throw InternalError("schur_qt_expand: leading term below the diagonal");
    SchurQTTerm term{a, b, lead.coeff};
    rest -= schur_qt(a, b).mul_scalar(term.mult);
    out.terms.push_back(term);
  }
  IntPoly positive;
  for (const auto& t : out.terms) {
    if (t.mult > 0) {
      out.pairs.push_back(t);
      positive += schur_qt(t.a, t.b).mul_scalar(t.mult);
    }
  }
  out.remainder = p - positive;
  return out;
}

IntPoly schur_qt_reconstruct(const std::vector<SchurQTTerm>& terms) {
  IntPoly acc;
  for (const auto& t : terms) acc += schur_qt(t.a, t.b).mul_scalar(t.mult);
  return acc;
}

IntPoly schur_qt_parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const char* what) -> IntPoly {
    throw InvalidInput(std::string("schur_qt_parse: ") + what + " in \"" + std::string(text) + "\"");
  };
  auto number = [&] {
    unsigned v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<unsigned>(text[pos++] - '0');
    return v;
  };
  IntPoly acc;
  bool first = true;
  for (;;) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Integer mult = 1;
    bool have_mult = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mult = number();
      have_mult = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      } else {
        acc += IntPoly(mult * sign);
        continue;
      }
    }
    if (pos >= text.size() || text[pos] != 's') fail(have_mult ? "expected 's' after '*'" : "expected a term");
    ++pos;
    std::vector<unsigned> parts;
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      while (pos < text.size() && text[pos] != ']') {
        skip();
        parts.push_back(number());
        skip();
        if (pos < text.size() && text[pos] == ',') ++pos;
      }
      if (pos == text.size()) fail("unterminated '['");
      ++pos;
    } else {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        parts.push_back(static_cast<unsigned>(text[pos++] - '0'));
    }
    if (parts.empty() || parts.size() > 2) fail("index must have one or two parts");
    unsigned a = parts[0], b = parts.size() == 2 ? parts[1] : 0;
    if (a < b) fail("index is not a partition");
    acc += schur_qt(a, b).mul_scalar(mult * sign);
  }
  if (first) fail("empty input");
  return acc;
}

std::optional<SchurQT> schur_qt_try_expand(const IntPoly& p) {
  for (Var v : kAllVars)
    if (v != Var::q && v != Var::t && p.uses(v)) return std::nullopt;
  if (p.swap_vars(Var::q, Var::t) != p) return std::nullopt;
  return schur_qt_expand(p);
}

std::string SchurQT::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::string base = t.a == 0 ? "1"
                       : t.b == 0 ? "s[" + std::to_string(t.a) + "]"
                                  : "s[" + std::to_string(t.a) + "," + std::to_string(t.b) + "]";
    Integer mag = t.mult < 0 ? Integer(-t.mult) : t.mult;
    std::string body = mag == 1 ? base : (base == "1" ? mag.str() : mag.str() + "*" + base);
    if (i == 0) s += t.mult < 0 ? "-" + body : body;
    else s += (t.mult < 0 ? " - " : " + ") + body;
  }
  return s;
}

}  // namespace qtk
