#include "partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace qtk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw InvalidInput("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw InvalidInput("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < 0 || v > 100000)
    throw InvalidInput("bad integer '" + std::string(s) + "' in partition");
  return v;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::string s(text);
  bool multiplicity = s.find('^') != std::string::npos;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    if (multiplicity) {
      auto caret = tok.find('^');
      int part = parse_int(std::string_view(tok).substr(0, caret));
      int mult = caret == std::string::npos ? 1 : parse_int(std::string_view(tok).substr(caret + 1));
      parts.insert(parts.end(), mult, part);
    } else {
      parts.push_back(parse_int(tok));
    }
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  if (!multiplicity) {
    // Comma form must already be decreasing; re-validate against the input.
    std::vector<int> given;
    std::istringstream again(s);
    while (again >> tok) given.push_back(parse_int(tok));
    if (given != parts) throw InvalidInput("partition parts must be weakly decreasing");
  }
  return Partition(parts);
}

Partition Partition::hook(int arm, int leg) {
  std::vector<int> p(1 + leg, 1);
  p[0] = arm + 1;
  return Partition(p);
}

Partition Partition::conjugate() const {
  std::vector<int> c(empty() ? 0 : parts_[0], 0);
  for (int part : parts_)
    for (int i = 0; i < part; ++i) ++c[i];
  return Partition(c);
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int j = 0; j < mu.length(); ++j)
    if (mu.parts_[j] > parts_[j]) return false;
  return true;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int j = 0; j < length(); ++j)
    for (int i = 0; i < parts_[j]; ++i) out.push_back({i, j});
  return out;
}

int Partition::leg(Cell c) const {
  int l = 0;
  for (int j = c.j + 1; j < length() && parts_[j] > c.i; ++j) ++l;
  return l;
}

int Partition::eta() const {
  int e = 0;
  for (int j = 1; j <= length(); ++j) e += (j - 1) * parts_[j - 1];
  return e;
}

int Partition::eta_conj() const { return conjugate().eta(); }

int Partition::iota() const {
  int n = 0;
  for (Cell c : cells())
    if (c.i > c.j) ++n;
  return n;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(parts_[k]);
  }
  return s;
}

std::size_t Partition::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int p : parts_) h = (h ^ static_cast<std::size_t>(p)) * 1099511628211ull;
  return h;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InvalidInput("dominance order needs equal sizes");
  int a = 0, b = 0;
  for (int j = 0; j < std::max(lambda.length(), mu.length()); ++j) {
    a += lambda[j];
    b += mu[j];
    if (a > b) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw InvalidInput("negative partition size");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto v = std::make_unique<std::vector<Partition>>();
    std::vector<int> cur;
    gen_partitions(n, n, cur, *v);
    slot = std::move(v);
  }
  return *slot;
}

namespace {

// Removes r_j cells from row j subject to per-row bounds, enumerating all
// choices with total k. `bound(j, parts)` gives the largest removable count
// for row j given the rows above have already been decided.
template <class Bound>
void strip_rec(const Partition& lambda, int j, int k, std::vector<int>& parts, Bound bound,
               std::vector<Partition>& out) {
  if (j < 0) {
    if (k == 0) out.emplace_back(parts);
    return;
  }
  int hi = std::min(k, bound(j, parts));
  for (int r = 0; r <= hi; ++r) {
    parts[j] = lambda[j] - r;
    strip_rec(lambda, j - 1, k - r, parts, bound, out);
  }
  parts[j] = lambda[j];
}

}  // namespace

std::vector<Partition> vertical_strips(const Partition& lambda, int k) {
  std::vector<Partition> out;
  if (k < 0 || k > lambda.size()) return out;
  std::vector<int> parts = lambda.parts();
  // Rows processed bottom-up; row j may lose one cell if the result stays
  // weakly decreasing with respect to the (already decided) row below.
  auto bound = [&](int j, const std::vector<int>& cur) {
    int below = j + 1 < lambda.length() ? cur[j + 1] : 0;
    return lambda[j] - 1 >= below ? 1 : 0;
  };
  strip_rec(lambda, lambda.length() - 1, k, parts, bound, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& lambda, int k) {
  std::vector<Partition> out;
  if (k < 0 || k > lambda.size()) return out;
  std::vector<int> parts = lambda.parts();
  // mu_j >= lambda_{j+1} (interlacing) and mu_j >= mu_{j+1}.
  auto bound = [&](int j, const std::vector<int>& cur) {
    int below = j + 1 < lambda.length() ? std::max(lambda[j + 1], cur[j + 1]) : 0;
    return lambda[j] - below;
  };
  strip_rec(lambda, lambda.length() - 1, k, parts, bound, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Partition> subpartitions(const Partition& tau) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int j, int cap) -> void {
    out.emplace_back(cur);
    if (j >= tau.length()) return;
    for (int p = 1; p <= std::min(cap, tau[j]); ++p) {
      cur.push_back(p);
      self(self, j + 1, p);
      cur.pop_back();
    }
  };
  rec(rec, 0, tau.empty() ? 0 : tau[0]);
  return out;
}

CellStats cell_stats(const Partition& mu) {
  CellStats s{{}, mu.eta(), mu.eta_conj(), mu.iota()};
  Partition conj = mu.conjugate();
  for (Cell c : mu.cells()) {
    int a = mu.arm(c);
    int l = conj[c.i] - c.j - 1;
    s.cells.push_back({c, a, l, 1 + a + l});
  }
  return s;
}

namespace {

IntPoly qt_mono(int i, int j) {
  return IntPoly(Monomial::of(Var::q, i) * Monomial::of(Var::t, j));
}

}  // namespace

IntPoly cell_enumerator(const Partition& mu) {
  std::vector<Term> terms;
  for (Cell c : mu.cells())
    terms.push_back({Monomial::of(Var::q, c.i) * Monomial::of(Var::t, c.j), 1});
  return IntPoly::from_terms(terms);
}

IntPoly cell_weight(const Partition& mu) { return qt_mono(mu.eta_conj(), mu.eta()); }

IntPoly pi_product(const Partition& mu) {
  IntPoly p(1);
  for (Cell c : mu.cells())
    if (c.i != 0 || c.j != 0) p *= IntPoly(1) - qt_mono(c.i, c.j);
  return p;
}

IntPoly w_product(const Partition& mu) {
  IntPoly p(1);
  for (const auto& s : cell_stats(mu).cells)
    p *= (qt_mono(s.arm, 0) - qt_mono(0, s.leg + 1)) * (qt_mono(0, s.leg) - qt_mono(s.arm + 1, 0));
  return p;
}

QtInvariants qt_invariants(const Partition& mu) {
  return {cell_enumerator(mu), cell_weight(mu), pi_product(mu), w_product(mu)};
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  for (auto [part, m] : mult)
    for (int k = 1; k <= m; ++k) z *= Integer(part) * k;
  return z;
}

}  // namespace qtk
