#include <doctest.h>
#include <qtknots/qtknots.h>

#include <cstring>
#include <filesystem>
#include <random>
#include <string>

namespace {

std::string take(char* p) {
  std::string s = p ? p : "";
  qtk_string_free(p);
  return s;
}

qtk_symfunc* sf(const char* text) {
  qtk_symfunc* f = nullptr;
  REQUIRE(qtk_symfunc_parse(text, &f) == QTK_OK);
  return f;
}

std::string render(const qtk_symfunc* f, qtk_format fmt = QTK_FORMAT_TEXT) {
  char* out = nullptr;
  REQUIRE(qtk_symfunc_render(f, fmt, &out) == QTK_OK);
  return take(out);
}

struct NoCache {
  NoCache() { qtk_set_cache_dir(""); }
};
NoCache no_cache;

}  // namespace

TEST_CASE("errors carry status and message") {
  qtk_symfunc* f = nullptr;
  CHECK(qtk_symfunc_parse("s[2,", &f) == QTK_EINVAL);
  CHECK(f == nullptr);
  CHECK(std::strlen(qtk_last_error()) > 0);
  CHECK(qtk_macdonald("1,2", &f) == QTK_EINVAL);
  CHECK(qtk_symfunc_parse(nullptr, &f) == QTK_EINVAL);
  char* out = nullptr;
  CHECK(qtk_dtau("2,2", QTK_FORMAT_TEXT, &out) == QTK_EINVAL);
  CHECK(std::string(qtk_last_error()).find("triangular") != std::string::npos);

  int saved = qtk_max_degree();
  qtk_set_max_degree(3);
  qtk_superpoly* p = nullptr;
  CHECK(qtk_superpoly_compute(5, 4, &p) == QTK_ELIMIT);
  CHECK(qtk_kostka(4, 0, QTK_FORMAT_TEXT, &out) == QTK_ELIMIT);
  qtk_set_max_degree(saved);

  qtk_report* r = nullptr;
  CHECK(qtk_verify_run("nonsense", 1, &r) == QTK_EINVAL);
  qtk_symfunc_free(nullptr);
  qtk_superpoly_free(nullptr);
  qtk_report_free(nullptr);
}

TEST_CASE("symmetric functions") {
  qtk_symfunc* e3 = sf("e[3]");
  qtk_symfunc* n = nullptr;
  REQUIRE(qtk_nabla(e3, 1, &n) == QTK_OK);
  qtk_symfunc* back = nullptr;
  REQUIRE(qtk_nabla(n, -1, &back) == QTK_OK);
  CHECK(qtk_symfunc_equal(back, e3));
  qtk_symfunc* h = nullptr;
  REQUIRE(qtk_macdonald("2,1", &h) == QTK_OK);
  CHECK(render(h) == "s[3] + (q + t)*s[2,1] + q*t*s[1,1,1]");
  qtk_symfunc* c = nullptr;
  REQUIRE(qtk_hall_create("e2", 2, 2, &c) == QTK_OK);
  CHECK(render(c) == "s[2] + (q + t)*s[1,1]");
  CHECK(qtk_hall_create("e2", 3, 2, &c) == QTK_EINVAL);
  qtk_symfunc* one = sf("1");
  qtk_symfunc* x = nullptr;
  REQUIRE(qtk_hall_apply(1, 1, one, &x) == QTK_OK);
  CHECK(render(x) == "s[1]");
  for (auto* p : {e3, n, back, h, c, one, x}) qtk_symfunc_free(p);
}

TEST_CASE("text and JSON carry the same content") {
  for (const char* text : {"s[2,1] + q*s[3]", "p[2]+q*s[1,1]", "h[2,2] - (1+t)/(1-q)*e[4]", "0"}) {
    qtk_symfunc* f = sf(text);
    qtk_symfunc* from_text = sf(render(f).c_str());
    qtk_symfunc* from_json = nullptr;
    REQUIRE(qtk_symfunc_from_json(render(f, QTK_FORMAT_JSON).c_str(), &from_json) == QTK_OK);
    CHECK(qtk_symfunc_equal(f, from_text));
    CHECK(qtk_symfunc_equal(f, from_json));
    for (auto* p : {f, from_text, from_json}) qtk_symfunc_free(p);
  }
  for (auto [k, n] : {std::pair{3, 2}, {4, 3}, {5, 4}, {5, 2}}) {
    qtk_superpoly* p = nullptr;
    REQUIRE(qtk_superpoly_compute(k, n, &p) == QTK_OK);
    for (qtk_format fmt : {QTK_FORMAT_TEXT, QTK_FORMAT_SCHUR, QTK_FORMAT_JSON}) {
      char* out = nullptr;
      REQUIRE(qtk_superpoly_render(p, fmt, &out) == QTK_OK);
      qtk_superpoly* q = nullptr;
      REQUIRE(qtk_superpoly_parse(take(out).c_str(), &q) == QTK_OK);
      CHECK(qtk_superpoly_equal(p, q));
      CHECK(qtk_superpoly_length(q) == static_cast<size_t>(n));
      qtk_superpoly_free(q);
    }
    qtk_superpoly_free(p);
  }
}

TEST_CASE("non-symmetric coefficients fall back to monomials") {
  qtk_superpoly* d = nullptr;
  REQUIRE(qtk_delta_comb("3,1", &d) == QTK_OK);
  for (qtk_format fmt : {QTK_FORMAT_TEXT, QTK_FORMAT_SCHUR, QTK_FORMAT_JSON}) {
    char* out = nullptr;
    REQUIRE(qtk_superpoly_render(d, fmt, &out) == QTK_OK);
    std::string s = take(out);
    if (fmt == QTK_FORMAT_JSON) CHECK(s.find("null") != std::string::npos);
    qtk_superpoly* back = nullptr;
    REQUIRE(qtk_superpoly_parse(s.c_str(), &back) == QTK_OK);
    CHECK(qtk_superpoly_equal(d, back));
    qtk_superpoly_free(back);
  }
  qtk_superpoly_free(d);
}

TEST_CASE("triangular partitions and candidates") {
  char* out = nullptr;
  REQUIRE(qtk_triangular_count(6, QTK_FORMAT_TEXT, &out) == QTK_OK);
  CHECK(take(out) == "1 1 2 3 4 6 7");
  REQUIRE(qtk_triangular_count(3, QTK_FORMAT_JSON, &out) == QTK_OK);
  CHECK(take(out) == R"({"counts":[1,1,2,3]})");
  REQUIRE(qtk_dtau("2,1", QTK_FORMAT_SCHUR, &out) == QTK_OK);
  CHECK(take(out) == "s[3] + s[1,1]");
  qtk_superpoly* d = nullptr;
  qtk_superpoly* p = nullptr;
  REQUIRE(qtk_delta_comb("3,2,1", &d) == QTK_OK);
  REQUIRE(qtk_superpoly_compute(5, 4, &p) == QTK_OK);
  CHECK(qtk_superpoly_equal(d, p));
  qtk_superpoly_free(d);
  qtk_superpoly_free(p);

  int pass = -1;
  REQUIRE(qtk_check_a("s[1,1] + s[3]", 4, 3, 0, QTK_FORMAT_TEXT, &pass, &out) == QTK_OK);
  CHECK(pass == 1);
  CHECK(take(out) == "candidate: PASS");
  REQUIRE(qtk_check_a("s[2]", 3, 2, 0, QTK_FORMAT_JSON, &pass, &out) == QTK_OK);
  CHECK(pass == 0);
  CHECK(take(out).find("\"a_power\":0") != std::string::npos);
}

TEST_CASE("verify reports") {
  qtk_report* r = nullptr;
  REQUIRE(qtk_verify_run("table1", 2, &r) == QTK_OK);
  REQUIRE(qtk_report_size(r) == 2);
  CHECK(std::string(qtk_report_name(r, 0)) == "table1.counts");
  CHECK(qtk_report_pass(r, 0));
  CHECK(qtk_report_gating(r, 0));
  CHECK(qtk_report_seconds(r, 0) >= 0);
  CHECK(qtk_report_ok(r));
  CHECK(qtk_report_name(r, 99) == nullptr);
  char* out = nullptr;
  REQUIRE(qtk_report_render(r, QTK_FORMAT_TEXT, &out) == QTK_OK);
  CHECK(take(out).rfind("PASS table1.counts ", 0) == 0);
  qtk_report_free(r);
  REQUIRE(qtk_verify_suites(QTK_FORMAT_JSON, &out) == QTK_OK);
  CHECK(take(out).find("\"crosscheck-n5\"") != std::string::npos);
}

TEST_CASE("disk cache through the API") {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() / ("qtk-capi-" + std::to_string(rd()));
  REQUIRE(qtk_set_cache_dir(dir.c_str()) == QTK_OK);
  char* out = nullptr;
  REQUIRE(qtk_cache_dir(&out) == QTK_OK);
  CHECK(take(out) == dir.string());
  qtk_symfunc* h = nullptr;
  REQUIRE(qtk_macdonald("3,1", &h) == QTK_OK);
  qtk_symfunc_free(h);
  qtk_superpoly* p = nullptr;
  REQUIRE(qtk_superpoly_compute(4, 3, &p) == QTK_OK);
  qtk_superpoly_free(p);
  CHECK(std::filesystem::exists(dir / "macH" / "n=4"));
  CHECK(std::filesystem::exists(dir / "family" / "e_4_3"));
  REQUIRE(qtk_cache_list(QTK_FORMAT_TEXT, &out) == QTK_OK);
  CHECK(take(out).find("macH/n=4") != std::string::npos);
  size_t removed = 0;
  REQUIRE(qtk_cache_clear(&removed) == QTK_OK);
  CHECK(removed >= 2);
  qtk_set_cache_dir("");
  std::filesystem::remove_all(dir);
}
