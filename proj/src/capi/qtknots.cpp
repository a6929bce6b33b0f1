#include "qtknots/qtknots.h"

#include <cstring>
#include <mutex>
#include <new>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "qtk/cache.hpp"
#include "qtk/errors.hpp"
#include "qtk/hall.hpp"
#include "qtk/knots.hpp"
#include "qtk/limits.hpp"
#include "qtk/macdonald.hpp"
#include "qtk/render.hpp"
#include "qtk/triangular.hpp"
#include "qtk/verify.hpp"

struct qtk_symfunc {
  qtk::SymFunc value;
};
struct qtk_superpoly {
  qtk::knots::SuperPoly value;
};
struct qtk_report {
  std::vector<qtk::verify::Check> checks;
};

namespace {

using qtk::io::json;

thread_local std::string g_last_error;

// Cache configuration: nullopt means the default root, "" means disabled.
std::mutex g_cache_mu;
std::optional<std::string> g_cache_dir;
std::set<int> g_macH_on_disk;
std::set<std::pair<int, int>> g_family_on_disk;

std::optional<qtk::cache::DiskCache> disk_cache() {
  std::lock_guard lock(g_cache_mu);
  if (g_cache_dir && g_cache_dir->empty()) return std::nullopt;
  return qtk::cache::DiskCache(g_cache_dir ? std::filesystem::path(*g_cache_dir) : qtk::cache::default_root());
}

// Loads H~ of degrees 1..n from disk where the memo is empty.
void warm_macH(int n) {
  auto c = disk_cache();
  if (!c) return;
  n = std::min(n, qtk::degree_limit());
  for (int d = 1; d <= n; ++d)
    if (qtk::mac::memoized_degree(d).empty() && c->load_macH(d)) {
      std::lock_guard lock(g_cache_mu);
      g_macH_on_disk.insert(d);
    }
}

// Writes every complete degree not yet on disk. Write failures are ignored:
// the cache only ever affects speed.
void persist_macH(int n) {
  auto c = disk_cache();
  if (!c) return;
  for (int d = 1; d <= n; ++d) {
    {
      std::lock_guard lock(g_cache_mu);
      if (g_macH_on_disk.count(d)) continue;
    }
    if (c->store_macH(d)) {
      std::lock_guard lock(g_cache_mu);
      g_macH_on_disk.insert(d);
    }
  }
}

void warm_family(int k, int n) {
  auto c = disk_cache();
  if (!c || qtk::knots::memoized_e_kn(k, n)) return;
  if (c->load_family(k, n)) {
    std::lock_guard lock(g_cache_mu);
    g_family_on_disk.insert({k, n});
  }
}

void persist_family(int k, int n) {
  auto c = disk_cache();
  if (!c) return;
  {
    std::lock_guard lock(g_cache_mu);
    if (g_family_on_disk.count({k, n})) return;
  }
  if (c->store_family(k, n)) {
    std::lock_guard lock(g_cache_mu);
    g_family_on_disk.insert({k, n});
  }
}

template <class F>
qtk_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const qtk::InvalidInput& e) {
    g_last_error = e.what();
    return QTK_EINVAL;
  } catch (const qtk::DivisionByZero& e) {
    g_last_error = std::string("division by zero: ") + e.what();
    return QTK_EDIVZERO;
  } catch (const qtk::DegreeLimitExceeded& e) {
    g_last_error = e.what();
    return QTK_ELIMIT;
  } catch (const qtk::InternalError& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return QTK_EINTERNAL;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QTK_ENOMEM;
  } catch (const std::exception& e) {
    g_last_error = std::string("internal error: ") + e.what();
    return QTK_EINTERNAL;
  }
}

qtk_status fail(qtk_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

#define QTK_REQUIRE(cond, what) \
  if (!(cond)) return fail(QTK_EINVAL, what)

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

qtk_status emit(char** out, const std::string& s) {
  *out = dup(s);
  return QTK_OK;
}

std::string render_symfunc(const qtk::SymFunc& f, qtk_format format) {
  if (format == QTK_FORMAT_JSON) return qtk::io::to_json(f).dump();
  return f.to_string();
}

std::string render_superpoly(const qtk::knots::SuperPoly& p, qtk_format format) {
  switch (format) {
    case QTK_FORMAT_JSON: return qtk::io::to_json(p).dump();
    case QTK_FORMAT_SCHUR: return p.to_string(qtk::knots::SuperPoly::Format::schur);
    default: return p.to_string(qtk::knots::SuperPoly::Format::monomial);
  }
}

std::string bracketed(const qtk::Partition& p) { return "[" + p.to_string() + "]"; }

}  // namespace

extern "C" {

const char* qtk_version(void) { return "1.0.0"; }
const char* qtk_last_error(void) { return g_last_error.c_str(); }
void qtk_string_free(char* s) { std::free(s); }

void qtk_set_max_degree(int degree) { qtk::set_degree_limit(degree); }
int qtk_max_degree(void) { return qtk::degree_limit(); }

qtk_status qtk_set_cache_dir(const char* path) {
  std::lock_guard lock(g_cache_mu);
  if (path) g_cache_dir = std::string(path);
  else g_cache_dir.reset();
  g_macH_on_disk.clear();
  g_family_on_disk.clear();
  return QTK_OK;
}

qtk_status qtk_cache_dir(char** out) {
  QTK_REQUIRE(out, "null output");
  return guarded([&] {
    auto c = disk_cache();
    return emit(out, c ? c->root().string() : "");
  });
}

qtk_status qtk_symfunc_parse(const char* text, qtk_symfunc** out) {
  QTK_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new qtk_symfunc{qtk::SymFunc::parse(text)};
    return QTK_OK;
  });
}

qtk_status qtk_symfunc_from_json(const char* text, qtk_symfunc** out) {
  QTK_REQUIRE(text && out, "null argument");
  return guarded([&] {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw qtk::InvalidInput("malformed JSON");
    *out = new qtk_symfunc{qtk::io::symfunc_from_json(j)};
    return QTK_OK;
  });
}

qtk_status qtk_symfunc_render(const qtk_symfunc* f, qtk_format format, char** out) {
  QTK_REQUIRE(f && out, "null argument");
  return guarded([&] { return emit(out, render_symfunc(f->value, format)); });
}

int qtk_symfunc_equal(const qtk_symfunc* a, const qtk_symfunc* b) { return a && b && a->value == b->value; }
void qtk_symfunc_free(qtk_symfunc* f) { delete f; }

qtk_status qtk_macdonald(const char* mu, qtk_symfunc** out) {
  QTK_REQUIRE(mu && out, "null argument");
  return guarded([&] {
    qtk::Partition p = qtk::Partition::parse(mu);
    warm_macH(p.size());
    // Whole degrees are memoized and persisted together.
    for (const auto& m : qtk::partitions_of(p.size())) qtk::mac::macH(m);
    *out = new qtk_symfunc{qtk::mac::macH(p)};
    persist_macH(p.size());
    return QTK_OK;
  });
}

qtk_status qtk_kostka(int n, int classical, qtk_format format, char** out) {
  QTK_REQUIRE(out, "null output");
  QTK_REQUIRE(n >= 1, "kostka: n must be positive");
  return guarded([&] {
    qtk::check_degree(n, "kostka");
    warm_macH(n);
    auto form = classical ? qtk::mac::KostkaForm::classical : qtk::mac::KostkaForm::modified;
    auto m = qtk::mac::kostka_matrix(n, form);
    persist_macH(n);
    const auto& parts = qtk::partitions_of(n);
    if (format == QTK_FORMAT_JSON) {
      json j{{"n", n}, {"form", classical ? "classical" : "modified"}};
      j["partitions"] = json::array();
      for (const auto& p : parts) j["partitions"].push_back(p.parts());
      j["entries"] = json::array();
      for (const auto& row : m) {
        json r = json::array();
        for (const auto& c : row) r.push_back(qtk::io::to_json(c));
        j["entries"].push_back(r);
      }
      return emit(out, j.dump());
    }
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
      s += bracketed(parts[i]) + ":";
      for (std::size_t k = 0; k < m[i].size(); ++k) s += (k ? " ; " : " ") + m[i][k].to_string();
      s += "\n";
    }
    s.pop_back();
    return emit(out, s);
  });
}

qtk_status qtk_nabla(const qtk_symfunc* f, int power, qtk_symfunc** out) {
  QTK_REQUIRE(f && out, "null argument");
  QTK_REQUIRE(power == 1 || power == -1, "nabla: power must be 1 or -1");
  return guarded([&] {
    int deg = std::max(f->value.max_degree(), 0);
    qtk::check_degree(deg, "nabla");
    warm_macH(deg);
    *out = new qtk_symfunc{qtk::mac::nabla(f->value, power)};
    persist_macH(deg);
    return QTK_OK;
  });
}

qtk_status qtk_hall_apply(int k, int n, const qtk_symfunc* f, qtk_symfunc** out) {
  QTK_REQUIRE(f && out, "null argument");
  return guarded([&] {
    *out = new qtk_symfunc{qtk::hall::xkn_apply(k, n, f->value)};
    return QTK_OK;
  });
}

qtk_status qtk_hall_create(const char* seed, int k, int n, qtk_symfunc** out) {
  QTK_REQUIRE(seed && out, "null argument");
  return guarded([&] {
    qtk::hall::Seed s = qtk::hall::Seed::parse(seed);
    if (k < 0 || n < 1 || k % s.d || n % s.d || std::gcd(k / s.d, n / s.d) != 1)
      throw qtk::InvalidInput("hall create: (k,n) must be (a d, b d) with d the seed degree and gcd(a,b) = 1");
    *out = new qtk_symfunc{qtk::hall::create(s, k / s.d, n / s.d)};
    return QTK_OK;
  });
}

qtk_status qtk_superpoly_compute(int k, int n, qtk_superpoly** out) {
  QTK_REQUIRE(out, "null output");
  QTK_REQUIRE(k >= 1 && n >= 1, "superpoly: k and n must be positive");
  return guarded([&] {
    qtk::check_degree(n, "superpoly");
    warm_family(k, n);
    *out = new qtk_superpoly{qtk::knots::superpoly(k, n)};
    persist_family(k, n);
    return QTK_OK;
  });
}

qtk_status qtk_superpoly_parse(const char* text, qtk_superpoly** out) {
  QTK_REQUIRE(text && out, "null argument");
  return guarded([&] {
    std::string_view s(text);
    auto first = s.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && s[first] == '{') {
      json j = json::parse(s, nullptr, false);
      if (j.is_discarded()) throw qtk::InvalidInput("malformed JSON");
      *out = new qtk_superpoly{qtk::io::superpoly_from_json(j)};
    } else {
      *out = new qtk_superpoly{qtk::knots::SuperPoly::parse(s)};
    }
    return QTK_OK;
  });
}

qtk_status qtk_superpoly_render(const qtk_superpoly* p, qtk_format format, char** out) {
  QTK_REQUIRE(p && out, "null argument");
  return guarded([&] { return emit(out, render_superpoly(p->value, format)); });
}

int qtk_superpoly_equal(const qtk_superpoly* a, const qtk_superpoly* b) { return a && b && a->value == b->value; }
size_t qtk_superpoly_length(const qtk_superpoly* p) { return p ? p->value.coeffs.size() : 0; }
void qtk_superpoly_free(qtk_superpoly* p) { delete p; }

qtk_status qtk_triangular_count(int max, qtk_format format, char** out) {
  QTK_REQUIRE(out, "null output");
  QTK_REQUIRE(max >= 0 && max <= 40, "triangular: max must be in 0..40");
  return guarded([&] {
    json counts = json::array();
    std::string s;
    for (const auto& row : qtk::tri::enumerate_triangular(max)) {
      counts.push_back(row.size());
      s += (s.empty() ? "" : " ") + std::to_string(row.size());
    }
    return emit(out, format == QTK_FORMAT_JSON ? json{{"counts", counts}}.dump() : s);
  });
}

qtk_status qtk_triangular_list(int max, qtk_format format, char** out) {
  QTK_REQUIRE(out, "null output");
  QTK_REQUIRE(max >= 0 && max <= 40, "triangular: max must be in 0..40");
  return guarded([&] {
    auto all = qtk::tri::enumerate_triangular(max);
    if (format == QTK_FORMAT_JSON) {
      json j = json::array();
      for (const auto& row : all) {
        json r = json::array();
        for (const auto& p : row) r.push_back(p.parts());
        j.push_back(r);
      }
      return emit(out, json{{"by_size", j}}.dump());
    }
    std::string s;
    for (std::size_t n = 0; n < all.size(); ++n) {
      s += std::to_string(n) + ":";
      for (const auto& p : all[n]) s += " " + bracketed(p);
      s += "\n";
    }
    s.pop_back();
    return emit(out, s);
  });
}

qtk_status qtk_dtau(const char* tau, qtk_format format, char** out) {
  QTK_REQUIRE(tau && out, "null argument");
  return guarded([&] {
    auto t = qtk::tri::TriangularPartition::of(qtk::Partition::parse(tau));
    qtk::IntPoly d = qtk::tri::d_tau(t);
    switch (format) {
      case QTK_FORMAT_JSON: {
        json j = qtk::io::to_json(d);
        j["schur_qt"] = json::array({qtk::io::to_json(qtk::schur_qt_expand(d))});
        return emit(out, j.dump());
      }
      case QTK_FORMAT_SCHUR: return emit(out, qtk::schur_qt_expand(d).to_string());
      default: return emit(out, d.to_string());
    }
  });
}

qtk_status qtk_delta_comb(const char* tau, qtk_superpoly** out) {
  QTK_REQUIRE(tau && out, "null argument");
  return guarded([&] {
    auto t = qtk::tri::TriangularPartition::of(qtk::Partition::parse(tau));
    *out = new qtk_superpoly{qtk::tri::delta_comb(t)};
    return QTK_OK;
  });
}

qtk_status qtk_check_a(const char* candidate, int k, int n, int hook_n, qtk_format format, int* pass, char** out) {
  QTK_REQUIRE(candidate && pass && out, "null argument");
  QTK_REQUIRE(k >= 1 && n >= 1, "check-a: k and n must be positive");
  return guarded([&] {
    qtk::SymFunc cand = qtk::SymFunc::parse(candidate);
    warm_family(k, n);
    auto r = qtk::knots::check_A_candidate(cand, k, n);
    persist_family(k, n);
    std::optional<qtk::knots::HookPolyReport> h;
    if (hook_n > 0) h = qtk::knots::hook_poly_check(cand, hook_n);
    *pass = r.pass && (!h || h->pass);
    if (format == QTK_FORMAT_JSON) {
      json j{{"pass", static_cast<bool>(*pass)}, {"candidate_pass", r.pass}};
      if (!r.pass)
        j["mismatch"] = {{"a_power", r.first_mismatch},
                         {"expected", qtk::io::to_json(r.expected)},
                         {"got", qtk::io::to_json(r.got)}};
      if (h)
        j["hook_poly"] = {{"pass", h->pass},
                          {"delta", h->delta},
                          {"computed", qtk::io::to_json(h->computed)},
                          {"reference", qtk::io::to_json(h->reference)}};
      return emit(out, j.dump());
    }
    std::string s = r.pass ? "candidate: PASS"
                           : "candidate: FAIL at A^" + std::to_string(r.first_mismatch) + ": expected " +
                                 r.expected.to_string() + ", got " + r.got.to_string();
    if (h)
      s += std::string("\nhook_poly: ") + (h->pass ? "PASS" : "FAIL") + " delta=" + std::to_string(h->delta) +
           " computed " + h->computed.to_string() + " ; reference " + h->reference.to_string();
    return emit(out, s);
  });
}

qtk_status qtk_verify_suites(qtk_format format, char** out) {
  QTK_REQUIRE(out, "null output");
  return guarded([&] {
    json j = json::array();
    std::string s;
    for (const auto& info : qtk::verify::suites()) {
      j.push_back({{"name", info.name}, {"description", info.description}, {"gating", info.gating}});
      s += info.name + (info.gating ? "" : " (report)") + " - " + info.description + "\n";
    }
    if (!s.empty()) s.pop_back();
    return emit(out, format == QTK_FORMAT_JSON ? j.dump() : s);
  });
}

qtk_status qtk_verify_run(const char* suite, int jobs, qtk_report** out) {
  QTK_REQUIRE(suite && out, "null argument");
  return guarded([&] {
    // Warm the H~ memo from disk for the degrees the suites touch.
    warm_macH(6);
    *out = new qtk_report{qtk::verify::run_suite(suite, jobs)};
    persist_macH(6);
    return QTK_OK;
  });
}

size_t qtk_report_size(const qtk_report* r) { return r ? r->checks.size() : 0; }
const char* qtk_report_name(const qtk_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].name.c_str() : nullptr;
}
const char* qtk_report_detail(const qtk_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].detail.c_str() : nullptr;
}
int qtk_report_pass(const qtk_report* r, size_t i) { return r && i < r->checks.size() && r->checks[i].pass; }
int qtk_report_gating(const qtk_report* r, size_t i) { return r && i < r->checks.size() && r->checks[i].gating; }
double qtk_report_seconds(const qtk_report* r, size_t i) {
  return r && i < r->checks.size() ? r->checks[i].seconds : 0.0;
}
int qtk_report_ok(const qtk_report* r) { return r && qtk::verify::all_passed(r->checks); }

qtk_status qtk_report_render(const qtk_report* r, qtk_format format, char** out) {
  QTK_REQUIRE(r && out, "null argument");
  return guarded([&] {
    if (format == QTK_FORMAT_JSON) {
      json j = json::array();
      for (const auto& c : r->checks)
        j.push_back({{"name", c.name}, {"pass", c.pass}, {"gating", c.gating}, {"seconds", c.seconds},
                     {"detail", c.detail}});
      return emit(out, j.dump());
    }
    std::string s;
    for (const auto& c : r->checks) s += qtk::verify::format_line(c) + "\n";
    if (!s.empty()) s.pop_back();
    return emit(out, s);
  });
}

void qtk_report_free(qtk_report* r) { delete r; }

qtk_status qtk_cache_list(qtk_format format, char** out) {
  QTK_REQUIRE(out, "null output");
  return guarded([&] {
    auto c = disk_cache();
    if (!c) return emit(out, format == QTK_FORMAT_JSON ? "{\"root\":null,\"entries\":[]}" : "cache disabled");
    json entries = json::array();
    std::string s = "root " + c->root().string();
    for (const auto& e : c->list()) {
      entries.push_back({{"name", e.name}, {"bytes", e.bytes}, {"valid", e.valid}});
      s += "\n" + e.name + " " + std::to_string(e.bytes) + " " + (e.valid ? "valid" : "invalid");
    }
    return emit(out, format == QTK_FORMAT_JSON ? json{{"root", c->root().string()}, {"entries", entries}}.dump() : s);
  });
}

qtk_status qtk_cache_clear(size_t* removed) {
  QTK_REQUIRE(removed, "null output");
  return guarded([&] {
    auto c = disk_cache();
    *removed = c ? c->clear() : 0;
    std::lock_guard lock(g_cache_mu);
    g_macH_on_disk.clear();
    g_family_on_disk.clear();
    return QTK_OK;
  });
}

}  // extern "C"
