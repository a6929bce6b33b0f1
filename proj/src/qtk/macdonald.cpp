#include "macdonald.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "errors.hpp"
#include "limits.hpp"
#include "plethysm.hpp"

namespace qtk::mac {

namespace {

using Matrix = std::vector<std::vector<IntPoly>>;

// P[nu][lambda] = <s_nu[X(1-v)], s_lambda>, indexed by partitions_of(n).
const Matrix& plethysm_matrix(int n, Var v) {
  static std::mutex mu;
  static std::map<std::pair<int, Var>, std::unique_ptr<Matrix>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, v});
    if (it != cache.end()) return *it->second;
  }
  const auto& parts = partitions_of(n);
  auto m = std::make_unique<Matrix>(parts.size(), std::vector<IntPoly>(parts.size()));
  pleth::Alphabet alpha = pleth::times_scalar(RatFunc(IntPoly(1) - IntPoly::var(v)));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    SymFunc img = pleth::plethysm(SymFunc::schur(parts[i]), alpha);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      RatFunc c = img.coeff(parts[j]);
      if (!c.is_polynomial()) throw InternalError("macH: non-polynomial plethysm coefficient");
      (*m)[i][j] = c.num();
    }
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(n, v), std::move(m));
  return *it->second;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("Bareiss: inexact division");
  return std::move(*q);
}

// Solves the overdetermined system [A | rhs] of full column rank by
// fraction-free elimination followed by back-substitution in Q(q,t).
std::vector<RatFunc> solve_bareiss(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size() - 1;
  IntPoly prev(1);
  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t piv = rows;
    for (std::size_t r = k; r < rows; ++r)
      if (!a[r][k].is_zero() && (piv == rows || a[r][k].size() < a[piv][k].size())) piv = r;
    if (piv == rows) throw InternalError("macH: characterization system is singular");
    std::swap(a[k], a[piv]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j <= cols; ++j)
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = IntPoly();
    }
    prev = a[k][k];
  }
  for (std::size_t r = cols; r < rows; ++r)
    if (!a[r][cols].is_zero()) throw InternalError("macH: characterization system is inconsistent");

  std::vector<RatFunc> x(cols);
  for (std::size_t k = cols; k-- > 0;) {
    RatFunc acc(a[k][cols]);
    for (std::size_t j = k + 1; j < cols; ++j)
      if (!a[k][j].is_zero()) acc -= RatFunc(a[k][j]) * x[j];
    x[k] = acc / RatFunc(a[k][k]);
  }
  return x;
}

SymFunc compute_macH(const Partition& mu) {
  const int n = mu.size();
  if (n == 0) return SymFunc(RatFunc(1));
  const auto& parts = partitions_of(n);
  const std::size_t N = parts.size();
  const Partition muc = mu.conjugate();

  struct Row {
    const Matrix* m;
    std::size_t lambda;
  };
  std::vector<Row> conds;
  for (std::size_t l = 0; l < N; ++l) {
    if (!dominance_leq(mu, parts[l])) conds.push_back({&plethysm_matrix(n, Var::q), l});
    if (!dominance_leq(muc, parts[l])) conds.push_back({&plethysm_matrix(n, Var::t), l});
  }

  Matrix sys;
  std::vector<IntPoly> norm(N + 1);
  norm[0] = IntPoly(1);  // parts[0] is (n)
  norm[N] = IntPoly(1);
  sys.push_back(norm);
  for (const Row& r : conds) {
    std::vector<IntPoly> row(N + 1);
    for (std::size_t j = 0; j < N; ++j) row[j] = (*r.m)[j][r.lambda];
    sys.push_back(std::move(row));
  }
  std::vector<RatFunc> c = solve_bareiss(sys);

  // Every equation must hold exactly.
  for (const Row& r : conds) {
    RatFunc acc;
    for (std::size_t j = 0; j < N; ++j) acc += c[j] * RatFunc((*r.m)[j][r.lambda]);
    if (!acc.is_zero()) throw InternalError("macH: solution violates a triangularity condition");
  }
  if (!c[0].is_one()) throw InternalError("macH: normalization violated");

  SymFunc h;
  for (std::size_t j = 0; j < N; ++j) h.add_term(parts[j], c[j]);
  return h;
}

std::shared_mutex memo_mu;
std::unordered_map<Partition, SymFunc, PartitionHash> memo;

// Per-degree inverse table: S[lambda][mu] = <s_lambda, H~_mu>_* / w_mu.
struct InverseTable {
  std::vector<std::vector<RatFunc>> s;
};

const InverseTable& inverse_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<InverseTable>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  const auto& parts = partitions_of(n);
  auto t = std::make_unique<InverseTable>();
  t->s.assign(parts.size(), std::vector<RatFunc>(parts.size()));
  std::vector<BasisExpansion> hp;
  std::vector<RatFunc> w;
  for (const auto& m : parts) {
    hp.push_back(convert(macH(m), Basis::p));
    w.push_back(RatFunc(w_product(m)));
  }
  for (std::size_t l = 0; l < parts.size(); ++l) {
    SymFunc sl = SymFunc::schur(parts[l]);
    for (std::size_t m = 0; m < parts.size(); ++m)
      t->s[l][m] = star_inner(sl, from_basis(hp[m])) / w[m];
  }
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(n, std::move(t));
  return *it->second;
}

}  // namespace

SymFunc macH(const Partition& mu) {
  {
    std::shared_lock lock(memo_mu);
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
  }
  check_degree(mu.size(), "macH");
  SymFunc h = compute_macH(mu);
  std::unique_lock lock(memo_mu);
  return memo.emplace(mu, std::move(h)).first->second;
}

bool plausible_macH(const Partition& mu, const SymFunc& h) {
  const int n = mu.size();
  if (!h.is_homogeneous() || (h.is_zero() ? 0 : h.max_degree()) != n) return false;
  if (!h.coeff(Partition::row(n)).is_one()) return false;
  if (n == 0) return true;
  const auto& parts = partitions_of(n);
  for (std::size_t l = 0; l < parts.size(); ++l) {
    if (dominance_leq(mu, parts[l])) continue;
    const Matrix& m = plethysm_matrix(n, Var::q);
    RatFunc acc;
    for (std::size_t j = 0; j < parts.size(); ++j) acc += h.coeff(parts[j]) * RatFunc(m[j][l]);
    return acc.is_zero();
  }
  return true;
}

void install_macH(const Partition& mu, const SymFunc& h) {
  std::unique_lock lock(memo_mu);
  memo.emplace(mu, h);
}

std::vector<SymFunc> memoized_degree(int n) {
  std::shared_lock lock(memo_mu);
  std::vector<SymFunc> out;
  for (const auto& m : partitions_of(n)) {
    auto it = memo.find(m);
    if (it == memo.end()) return {};
    out.push_back(it->second);
  }
  return out;
}

std::vector<std::vector<RatFunc>> kostka_matrix(int n, KostkaForm form) {
  const auto& parts = partitions_of(n);
  const RatFunc t = RatFunc::var(Var::t);
  std::vector<std::vector<RatFunc>> k;
  for (const auto& lam : parts) {
    SymFunc h = macH(lam);
    std::vector<RatFunc> row;
    for (const auto& m : parts) {
      RatFunc c = h.coeff(m);
      if (form == KostkaForm::classical)
        c = c.specialize({{Var::t, t.inverse()}}) * t.pow(lam.eta());
      row.push_back(c);
    }
    k.push_back(std::move(row));
  }
  return k;
}

MacExpansion to_mac_basis(const SymFunc& f, int n) {
  if (!f.is_zero() && (!f.is_homogeneous() || f.max_degree() != n))
    throw InvalidInput("to_mac_basis: input is not homogeneous of the given degree");
  const auto& parts = partitions_of(n);
  const InverseTable& t = inverse_table(n);
  MacExpansion out;
  out.degree = n;
  for (std::size_t m = 0; m < parts.size(); ++m) {
    RatFunc c;
    for (std::size_t l = 0; l < parts.size(); ++l) {
      RatFunc fl = f.coeff(parts[l]);
      if (!fl.is_zero() && !t.s[l][m].is_zero()) c += fl * t.s[l][m];
    }
    if (!c.is_zero()) out.coeffs.emplace(parts[m], c);
  }
  return out;
}

SymFunc from_mac_basis(const MacExpansion& x) {
  SymFunc out;
  for (const auto& [mu, c] : x.coeffs) out += macH(mu) * c;
  return out;
}

RatFunc EigenSpec::eigenvalue(const Partition& mu) const {
  const RatFunc q = RatFunc::var(Var::q), t = RatFunc::var(Var::t);
  switch (kind) {
    case Kind::delta:
      return pleth::plethysm_scalar(f, pleth::Alphabet::scalar(RatFunc(cell_enumerator(mu))));
    case Kind::delta_bar: {
      RatFunc b = RatFunc(cell_enumerator(mu)).specialize({{Var::q, q.inverse()}, {Var::t, t.inverse()}});
      return pleth::plethysm_scalar(f, pleth::Alphabet::scalar(b));
    }
    case Kind::M:
      return (RatFunc(1) - q) * (RatFunc(1) - t);
    case Kind::M_bar:
      return (RatFunc(1) - q.inverse()) * (RatFunc(1) - t.inverse());
    case Kind::nabla:
      return RatFunc(cell_weight(mu)).pow(power);
  }
  throw InternalError("eigenvalue: unknown operator kind");
}

SymFunc eigen_apply(const EigenSpec& spec, const SymFunc& f) {
  if (f.is_zero()) return f;
  SymFunc out;
  for (int n = f.min_degree(); n <= f.max_degree(); ++n) {
    SymFunc part = f.homogeneous_part(n);
    if (part.is_zero()) continue;
    MacExpansion x = to_mac_basis(part, n);
    for (auto& [mu, c] : x.coeffs) c *= spec.eigenvalue(mu);
    out += from_mac_basis(x);
  }
  return out;
}

namespace {

// nabla^power applied to each s_lambda of degree n.
const std::vector<SymFunc>& nabla_rows(int n, int power) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<SymFunc>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({n, power});
    if (it != cache.end()) return *it->second;
  }
  auto rows = std::make_unique<std::vector<SymFunc>>();
  EigenSpec spec = EigenSpec::nabla(power);
  for (const auto& lam : partitions_of(n)) rows->push_back(eigen_apply(spec, SymFunc::schur(lam)));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(n, power), std::move(rows));
  return *it->second;
}

}  // namespace

SymFunc nabla(const SymFunc& f, int power) {
  if (power != 1 && power != -1) throw InvalidInput("nabla: power must be 1 or -1");
  SymFunc out;
  for (const auto& [lam, c] : f.terms()) {
    const auto& parts = partitions_of(lam.size());
    const auto& rows = nabla_rows(lam.size(), power);
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] == lam) {
        out += rows[i] * c;
        break;
      }
  }
  return out;
}

}  // namespace qtk::mac
