#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schur_qt.hpp"
#include "symfunc.hpp"

namespace qtk::knots {

struct SuperPoly {
  std::vector<IntPoly> coeffs;                   // coeffs[i] multiplies A^i
  std::optional<std::vector<SchurQT>> schur_form;  // one per A-power

  IntPoly as_poly() const;  // sum_i coeffs[i] A^i
  enum class Format { monomial, schur };
  // "A^0: q + t ; A^1: 1"
  std::string to_string(Format f = Format::monomial) const;
  // Reads either text format back; A-powers must appear in order from 0.
  static SuperPoly parse(std::string_view text);
  // Trailing zero coefficients do not matter.
  friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.as_poly() == b.as_poly(); }
};

// e_kn = create(e_d, k/d, n/d) with d = gcd(k, n); memoized.
SymFunc e_kn(int k, int n);
std::optional<SymFunc> memoized_e_kn(int k, int n);
void install_e_kn(int k, int n, const SymFunc& f);
// Cheap sanity check for externally stored values: degree, polynomial
// coefficients, and the t = 0 evaluation when k >= n.
bool plausible_e_kn(int k, int n, const SymFunc& f);

// A^i coefficient <e_kn, s_(i|n-1-i)>, for i = 0..n-1, with its Schur form.
// Throws InternalError if the plethystic route disagrees.
SuperPoly superpoly(int k, int n);
// (omega e_kn)[1 - eps A] / (1 + A), as a polynomial in q, t, A.
IntPoly superpoly_plethystic(int k, int n);

// f(q,t) for f a symmetric function evaluated at the alphabet q + t.
IntPoly eval_qt(const SymFunc& f);
// sum c_ab s_(a,b) as a symmetric function.
SymFunc schur_qt_to_symfunc(const SchurQT& x);

struct EvalT0Report {
  int delta = 0;
  IntPoly lhs, rhs;  // e_kn(q,0)[1-u] and q^delta prod_{i<n} (1 - q^i u)
  bool pass = false;
};
int delta_t0(int k, int n);  // sum_{j=1}^{n-1} (floor(kj/n) - j)
EvalT0Report eval_t0_check(int k, int n);

struct CandidateReport {
  bool pass = true;
  int first_mismatch = -1;
  IntPoly expected, got;  // at the first mismatch
};
// Integer coefficients are required (InvalidInput otherwise).
CandidateReport check_A_candidate(const SymFunc& cand, int k, int n);

// sum over hook components (a|l) of the candidate of mult y^{a+l} (-z)^l.
IntPoly hook_poly(const SymFunc& cand);
struct HookPolyReport {
  int delta = 0;  // lowest power of y
  IntPoly computed, reference;
  bool pass = false;
};
// Compares against y^delta prod_{i=1}^{n-2} (y^i - z).
HookPolyReport hook_poly_check(const SymFunc& cand, int n);

// rho_r^k = sum_{j=0}^k s_(r+2j, k-j)(q,t)
IntPoly rho(int r, int k);
// Closed forms for P_{2r+1,2} and P_{3r+1,3}.
std::vector<IntPoly> family_n2(int r);
std::vector<IntPoly> family_n3(int r);

// Conjecture scans; each returns true when the property holds.
bool hook_agreement(int k, int n);
bool schur_positive(const SuperPoly& p);
// P|_{A^i} - e_i^perp(P|_{A^0}) is Schur-(q,t) positive for every i.
bool skew_positive(const SuperPoly& p);

}  // namespace qtk::knots
