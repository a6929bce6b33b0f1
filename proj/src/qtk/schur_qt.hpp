#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "intpoly.hpp"

namespace qtk {

struct SchurQTTerm {
  unsigned a = 0, b = 0;  // a >= b
  Integer mult;
  friend bool operator==(const SchurQTTerm&, const SchurQTTerm&) = default;
};

// Expansion of a q<->t symmetric polynomial in s_{ab}(q,t).
struct SchurQT {
  std::vector<SchurQTTerm> terms;  // full greedy expansion, possibly signed
  std::vector<SchurQTTerm> pairs;  // positive part of `terms`
  IntPoly remainder;               // input minus the positive part

  bool positive() const { return remainder.is_zero(); }
  // "s[3] + s[1,1]"; s[0,0] renders as "1". Uses all signed terms.
  std::string to_string() const;
};

// Throws InvalidInput when p involves other indeterminates or is not symmetric.
SchurQT schur_qt_expand(const IntPoly& p);
// nullopt instead of throwing.
std::optional<SchurQT> schur_qt_try_expand(const IntPoly& p);
IntPoly schur_qt_reconstruct(const std::vector<SchurQTTerm>& terms);

// Sum of two-variable Schur polynomials written as in to_string(), e.g.
// "s[3] + s[1,1]", "2*s[2] - 1", or with compact digit indices "s31 + s5".
IntPoly schur_qt_parse(std::string_view text);

}  // namespace qtk
