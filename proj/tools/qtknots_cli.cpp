// Command-line front end. Talks to the library only through the C API.
#include <qtknots/qtknots.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kInvalid = 2, kVerify = 3, kInternal = 4 };

int exit_code(qtk_status s) {
  switch (s) {
    case QTK_OK: return kOk;
    case QTK_EINVAL:
    case QTK_EDIVZERO:
    case QTK_ELIMIT: return kInvalid;
    case QTK_EVERIFY: return kVerify;
    default: return kInternal;
  }
}

// Owns a string handed out by the library.
struct Text {
  char* p = nullptr;
  ~Text() { qtk_string_free(p); }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using SymFuncH = Handle<qtk_symfunc, qtk_symfunc_free>;
using SuperPolyH = Handle<qtk_superpoly, qtk_superpoly_free>;
using ReportH = Handle<qtk_report, qtk_report_free>;

struct Failure {
  qtk_status status;
};

void ok(qtk_status s) {
  if (s != QTK_OK) throw Failure{s};
}

void print(const Text& t) { std::cout << t.p << '\n'; }

struct Global {
  bool json = false;
  bool text = false;
  int max_degree = 12;
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
  qtk_format fmt() const { return json ? QTK_FORMAT_JSON : QTK_FORMAT_TEXT; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q,t-symmetric functions, torus-knot superpolynomials and triangular partitions", "qtknots"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  auto* text_flag = app.add_flag("--text", g.text, "text output (default)");
  json_flag->excludes(text_flag);
  app.add_option("--max-degree", g.max_degree, "abort computations whose degree would exceed this")
      ->check(CLI::Range(1, 40));
  app.add_option("--cache-dir", g.cache_dir, "persistent cache root (default $QTKNOTS_CACHE or ~/.cache/qtknots)");
  app.add_flag("--no-cache", g.no_cache, "do not read or write the disk cache");
  app.add_option("--jobs", g.jobs, "threads for verify suites")->check(CLI::Range(1, 256));

  // macdonald
  auto* mac = app.add_subcommand("macdonald", "print H~_mu or a Kostka matrix");
  std::string mu;
  int kostka_n = 0;
  bool classical = false;
  auto* mu_opt = mac->add_option("--mu", mu, "partition, e.g. 3,1");
  auto* k_opt = mac->add_option("--kostka", kostka_n, "Kostka matrix of this size");
  mac->add_flag("--classical", classical, "classical normalization t^{n(lambda)} K~(q,1/t)")->needs(k_opt);
  mu_opt->excludes(k_opt);

  // nabla
  auto* nab = app.add_subcommand("nabla", "apply nabla or its inverse");
  std::string f_text;
  bool inverse = false;
  nab->add_option("--f", f_text, "symmetric function, e.g. e[3] or s[2,1]+q*s[3]")->required();
  nab->add_flag("--inverse", inverse, "apply nabla^-1");

  // hall
  auto* hall = app.add_subcommand("hall", "apply X^(k,n) to f, or create f_(k,n) from a seed");
  int hk = 0, hn = 0;
  std::string seed, hf;
  hall->add_option("-k", hk, "first lattice coordinate")->required();
  hall->add_option("-n", hn, "second lattice coordinate")->required();
  auto* seed_opt = hall->add_option("--seed", seed, "create from a seed: e3, pi2, phat2, hhat2, shat2,1");
  auto* hf_opt = hall->add_option("--f", hf, "apply X^(k,n) to this symmetric function");
  seed_opt->excludes(hf_opt);

  // superpoly
  auto* sp = app.add_subcommand("superpoly", "superpolynomial of the (k,n) torus link");
  int sk = 0, sn = 0;
  std::string sp_format = "schur";
  sp->add_option("-k", sk)->required();
  sp->add_option("-n", sn)->required();
  sp->add_option("--format", sp_format, "monomial or schur")->check(CLI::IsMember({"monomial", "schur"}));

  // triangular
  auto* tri = app.add_subcommand("triangular", "count or list triangular partitions");
  int tmax = 6;
  bool count = false, list = false;
  tri->add_option("--max", tmax, "largest size")->check(CLI::Range(0, 40));
  auto* count_flag = tri->add_flag("--count", count, "counts by size");
  auto* list_flag = tri->add_flag("--list", list, "shapes by size");
  count_flag->excludes(list_flag);

  // dtau
  auto* dt = app.add_subcommand("dtau", "D_tau and the A-graded DD_tau");
  std::string tau;
  bool schur = false, delta = false;
  dt->add_option("--tau", tau, "triangular partition, e.g. 2,1")->required();
  dt->add_flag("--schur", schur, "Schur-(q,t) form");
  dt->add_flag("--delta", delta, "print DD_tau instead of D_tau");

  // check-a
  auto* ca = app.add_subcommand("check-a", "check a candidate A_kn");
  std::string cand;
  int ck = 0, cn = 0, hook_n = 0;
  ca->add_option("--cand", cand, "candidate symmetric function")->required();
  ca->add_option("-k", ck)->required();
  ca->add_option("-n", cn)->required();
  ca->add_option("--hook-poly", hook_n, "also check the hook-term factorization for this n");

  // verify
  auto* ver = app.add_subcommand("verify", "run named verification suites");
  std::vector<std::string> suite_names;
  bool list_suites = false;
  ver->add_option("suites", suite_names, "suite names (see --list)");
  ver->add_flag("--list", list_suites, "list the available suites");

  // cache
  auto* cache = app.add_subcommand("cache", "inspect or clear the disk cache");
  bool cache_clear = false;
  cache->add_flag("--clear", cache_clear, "remove every cache file");
  cache->add_flag("--list", "list cache files (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  qtk_set_max_degree(g.max_degree);
  if (g.no_cache) qtk_set_cache_dir("");
  else if (!g.cache_dir.empty()) qtk_set_cache_dir(g.cache_dir.c_str());
  const qtk_format fmt = g.fmt();

  try {
    if (*mac) {
      Text t;
      if (k_opt->count()) {
        ok(qtk_kostka(kostka_n, classical, fmt, &t.p));
      } else {
        if (!mu_opt->count()) {
          std::cerr << "macdonald: one of --mu or --kostka is required\n";
          return kInvalid;
        }
        SymFuncH h;
        ok(qtk_macdonald(mu.c_str(), &h.p));
        ok(qtk_symfunc_render(h.p, fmt, &t.p));
      }
      print(t);
    } else if (*nab) {
      SymFuncH f, r;
      Text t;
      ok(qtk_symfunc_parse(f_text.c_str(), &f.p));
      ok(qtk_nabla(f.p, inverse ? -1 : 1, &r.p));
      ok(qtk_symfunc_render(r.p, fmt, &t.p));
      print(t);
    } else if (*hall) {
      SymFuncH f, r;
      Text t;
      if (seed_opt->count()) {
        ok(qtk_hall_create(seed.c_str(), hk, hn, &r.p));
      } else {
        ok(qtk_symfunc_parse(hf_opt->count() ? hf.c_str() : "1", &f.p));
        ok(qtk_hall_apply(hk, hn, f.p, &r.p));
      }
      ok(qtk_symfunc_render(r.p, fmt, &t.p));
      print(t);
    } else if (*sp) {
      SuperPolyH p;
      Text t;
      ok(qtk_superpoly_compute(sk, sn, &p.p));
      qtk_format f = g.json ? QTK_FORMAT_JSON : sp_format == "schur" ? QTK_FORMAT_SCHUR : QTK_FORMAT_TEXT;
      ok(qtk_superpoly_render(p.p, f, &t.p));
      print(t);
    } else if (*tri) {
      Text t;
      if (list) ok(qtk_triangular_list(tmax, fmt, &t.p));
      else ok(qtk_triangular_count(tmax, fmt, &t.p));
      print(t);
    } else if (*dt) {
      Text t;
      if (delta) {
        SuperPolyH p;
        ok(qtk_delta_comb(tau.c_str(), &p.p));
        ok(qtk_superpoly_render(p.p, g.json ? QTK_FORMAT_JSON : schur ? QTK_FORMAT_SCHUR : QTK_FORMAT_TEXT, &t.p));
      } else {
        ok(qtk_dtau(tau.c_str(), g.json ? QTK_FORMAT_JSON : schur ? QTK_FORMAT_SCHUR : QTK_FORMAT_TEXT, &t.p));
      }
      print(t);
    } else if (*ca) {
      Text t;
      int pass = 0;
      ok(qtk_check_a(cand.c_str(), ck, cn, hook_n, fmt, &pass, &t.p));
      print(t);
      return pass ? kOk : kVerify;
    } else if (*ver) {
      if (list_suites || suite_names.empty()) {
        Text t;
        ok(qtk_verify_suites(fmt, &t.p));
        print(t);
        return list_suites ? kOk : kInvalid;
      }
      bool all_ok = true;
      std::size_t passed = 0, failed = 0, reported = 0;
      for (const auto& name : suite_names) {
        ReportH r;
        Text t;
        ok(qtk_verify_run(name.c_str(), g.jobs, &r.p));
        ok(qtk_report_render(r.p, fmt, &t.p));
        print(t);
        for (std::size_t i = 0; i < qtk_report_size(r.p); ++i) {
          if (!qtk_report_gating(r.p, i)) ++reported;
          else if (qtk_report_pass(r.p, i)) ++passed;
          else ++failed;
        }
        all_ok = all_ok && qtk_report_ok(r.p);
      }
      if (!g.json)
        std::cout << "SUMMARY passed=" << passed << " failed=" << failed << " reported=" << reported << '\n';
      return all_ok ? kOk : kVerify;
    } else if (*cache) {
      Text t;
      if (cache_clear) {
        std::size_t removed = 0;
        ok(qtk_cache_clear(&removed));
        std::cout << (g.json ? "{\"removed\":" + std::to_string(removed) + "}" : "removed " + std::to_string(removed))
                  << '\n';
      } else {
        ok(qtk_cache_list(fmt, &t.p));
        print(t);
      }
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << qtk_last_error() << '\n';
    return exit_code(f.status);
  }
  return kOk;
}
