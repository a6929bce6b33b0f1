#include "sym_tables.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "errors.hpp"

namespace qtk {

char basis_letter(Basis b) { return "mehpsf"[static_cast<int>(b)]; }

bool parse_basis(char c, Basis& out) {
  for (Basis b : kAllBases) {
    if (basis_letter(b) == c) {
      out = b;
      return true;
    }
  }
  return false;
}

RMatrix invert(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix a = m, inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw InternalError("singular change-of-basis matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (a[c][j] != 0) a[r][j] -= f * a[c][j];
        if (inv[c][j] != 0) inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

namespace {

using PExp = std::map<Partition, Rational>;  // power-sum expansion

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(v);
}

PExp pexp_mul(const PExp& a, const PExp& b) {
  PExp out;
  for (const auto& [ra, ca] : a)
    for (const auto& [rb, cb] : b) out[merge_parts(ra, rb)] += ca * cb;
  return out;
}

// h_n (sign = false) or e_n (sign = true) in power sums.
PExp hn_or_en(int n, bool sign) {
  PExp out;
  for (const auto& rho : partitions_of(n)) {
    Rational c(Integer(1), z_lambda(rho));
    if (sign && (n - rho.length()) % 2) c = -c;
    out[rho] = c;
  }
  return out;
}

// Removes a rim hook of length r from lambda in every possible way, using
// beta-numbers. Returns (sign, remaining partition) pairs.
std::vector<std::pair<int, Partition>> remove_rim_hooks(const Partition& lambda, int r) {
  const int l = lambda.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  std::vector<std::pair<int, Partition>> out;
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] - r;
    if (nb < 0) continue;
    bool occupied = false;
    int between = 0;
    for (int k = 0; k < l; ++k) {
      if (beta[k] == nb) occupied = true;
      if (beta[k] > nb && beta[k] < beta[i]) ++between;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<>());
    std::vector<int> parts(l);
    for (int k = 0; k < l; ++k) parts[k] = nbeta[k] - (l - 1 - k);
    out.emplace_back(between % 2 ? -1 : 1, Partition(parts));
  }
  return out;
}

std::recursive_mutex& tables_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::unique_ptr<DegreeTables> build_tables(int n) {
  auto t = std::make_unique<DegreeTables>();
  t->n = n;
  t->parts = partitions_of(n);
  const std::size_t N = t->parts.size();
  for (std::size_t i = 0; i < N; ++i) t->index.emplace(t->parts[i], static_cast<int>(i));

  // Murnaghan-Nakayama, peeling the first part of rho.
  t->chi.assign(N, std::vector<Integer>(N, 0));
  for (std::size_t li = 0; li < N; ++li) {
    for (std::size_t ri = 0; ri < N; ++ri) {
      const Partition& rho = t->parts[ri];
      if (n == 0) {
        t->chi[li][ri] = 1;
        continue;
      }
      int r = rho[0];
      Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
      const DegreeTables& lower = degree_tables(n - r);
      Integer acc = 0;
      for (const auto& [sign, mu] : remove_rim_hooks(t->parts[li], r))
        acc += sign * lower.chi[lower.at(mu)][lower.at(rest)];
      t->chi[li][ri] = acc;
    }
  }

  auto idx = [](Basis b) { return static_cast<int>(b); };
  RMatrix ident(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i < N; ++i) ident[i][i] = 1;
  t->to_schur[idx(Basis::s)] = ident;
  t->from_schur[idx(Basis::s)] = ident;

  RMatrix p_to(N, std::vector<Rational>(N, 0)), p_from(N, std::vector<Rational>(N, 0));
  for (std::size_t ri = 0; ri < N; ++ri) {
    Integer z = z_lambda(t->parts[ri]);
    for (std::size_t li = 0; li < N; ++li) {
      p_to[ri][li] = t->chi[li][ri];
      p_from[li][ri] = Rational(t->chi[li][ri], z);
    }
  }
  t->to_schur[idx(Basis::p)] = p_to;
  t->from_schur[idx(Basis::p)] = p_from;

  auto via_p = [&](bool sign) {
    RMatrix m(N, std::vector<Rational>(N, 0));
    for (std::size_t mi = 0; mi < N; ++mi) {
      PExp acc{{Partition(), Rational(1)}};
      for (int part : t->parts[mi].parts()) acc = pexp_mul(acc, hn_or_en(part, sign));
      for (const auto& [rho, c] : acc) {
        int ri = t->at(rho);
        for (std::size_t li = 0; li < N; ++li)
          if (t->chi[li][ri] != 0) m[mi][li] += c * Rational(t->chi[li][ri]);
      }
    }
    return m;
  };
  t->to_schur[idx(Basis::h)] = via_p(false);
  t->to_schur[idx(Basis::e)] = via_p(true);
  t->from_schur[idx(Basis::h)] = invert(t->to_schur[idx(Basis::h)]);
  t->from_schur[idx(Basis::e)] = invert(t->to_schur[idx(Basis::e)]);

  // m is Hall-dual to h: to_schur[m] = transpose(from_schur[h]).
  RMatrix m_to(N, std::vector<Rational>(N, 0)), f_to(N, std::vector<Rational>(N, 0));
  const RMatrix& hf = t->from_schur[idx(Basis::h)];
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m_to[i][j] = hf[j][i];
  // f_mu = omega(m_mu): move coefficient of s_lambda to s_lambda'.
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) f_to[i][t->at(t->parts[j].conjugate())] = m_to[i][j];
  t->to_schur[idx(Basis::m)] = m_to;
  t->to_schur[idx(Basis::f)] = f_to;
  t->from_schur[idx(Basis::m)] = invert(m_to);
  t->from_schur[idx(Basis::f)] = invert(f_to);
  return t;
}

}  // namespace

const DegreeTables& degree_tables(int n) {
  if (n < 0) throw InvalidInput("negative degree");
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard lock(tables_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto built = build_tables(n);
  return *cache.emplace(n, std::move(built)).first->second;
}

namespace {

struct PairKey {
  Partition a, b;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairHash {
  std::size_t operator()(const PairKey& k) const { return k.a.hash() * 0x9E3779B97F4A7C15ull ^ k.b.hash(); }
};

SchurInt compute_lr(const Partition& lambda, const Partition& mu) {
  const DegreeTables& ta = degree_tables(lambda.size());
  const DegreeTables& tb = degree_tables(mu.size());
  const DegreeTables& tc = degree_tables(lambda.size() + mu.size());
  const auto& pa = ta.from_schur[static_cast<int>(Basis::p)][ta.at(lambda)];
  const auto& pb = tb.from_schur[static_cast<int>(Basis::p)][tb.at(mu)];
  std::vector<Rational> acc(tc.parts.size(), 0);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] == 0) continue;
    for (std::size_t j = 0; j < pb.size(); ++j) {
      if (pb[j] == 0) continue;
      int r = tc.at(merge_parts(ta.parts[i], tb.parts[j]));
      Rational c = pa[i] * pb[j];
      for (std::size_t l = 0; l < acc.size(); ++l)
        if (tc.chi[l][r] != 0) acc[l] += c * Rational(tc.chi[l][r]);
    }
  }
  SchurInt out;
  for (std::size_t l = 0; l < acc.size(); ++l) {
    if (acc[l] == 0) continue;
    if (denominator(acc[l]) != 1) throw InternalError("non-integral Littlewood-Richardson coefficient");
    out.emplace_back(tc.parts[l], numerator(acc[l]));
  }
  return out;
}

}  // namespace

const SchurInt& lr_product(const Partition& lambda, const Partition& mu) {
  static std::shared_mutex mutex;
  static std::unordered_map<PairKey, std::unique_ptr<SchurInt>, PairHash> cache;
  const PairKey key = lambda < mu ? PairKey{mu, lambda} : PairKey{lambda, mu};
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<SchurInt>(compute_lr(key.a, key.b));
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(value));
  return *it->second;
}

}  // namespace qtk
