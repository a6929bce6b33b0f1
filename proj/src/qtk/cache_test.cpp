#include <doctest.h>

#include <fstream>
#include <random>

#include "cache.hpp"
#include "knots.hpp"
#include "macdonald.hpp"

using namespace qtk;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("qtk-cache-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_CASE("store and reload") {
  TempDir dir;
  cache::DiskCache c(dir.path);
  CHECK_FALSE(c.load_macH(3));
  for (const auto& mu : partitions_of(3)) mac::macH(mu);
  REQUIRE(c.store_macH(3));
  CHECK(fs::exists(dir.path / "macH" / "n=3"));
  CHECK(slurp(c.macH_path(3)).rfind(cache::kHeader, 0) == 0);
  CHECK(c.load_macH(3));

  knots::e_kn(3, 2);
  REQUIRE(c.store_family(3, 2));
  CHECK(fs::exists(dir.path / "family" / "e_3_2"));
  CHECK(c.load_family(3, 2));
  CHECK_FALSE(c.load_family(5, 2));

  auto entries = c.list();
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "family/e_3_2");
  CHECK(entries[1].name == "macH/n=3");
  CHECK(entries[0].valid);
  CHECK(entries[1].valid);
  CHECK(c.clear() == 2);
  CHECK(c.list().empty());
}

TEST_CASE("corrupt and mismatched files are ignored") {
  TempDir dir;
  cache::DiskCache c(dir.path);
  for (const auto& mu : partitions_of(2)) mac::macH(mu);
  REQUIRE(c.store_macH(2));
  std::string good = slurp(c.macH_path(2));

  std::string bad_version = good;
  bad_version.replace(0, std::string(cache::kHeader).size(), "QTKNOTS-CACHE v0");
  spit(c.macH_path(2), bad_version);
  CHECK_FALSE(c.load_macH(2));

  std::string tampered = good;
  auto pos = tampered.find("|1,1|q");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 6, "|1,1|t");
  spit(c.macH_path(2), tampered);
  CHECK_FALSE(c.load_macH(2));

  spit(c.macH_path(2), good.substr(0, good.size() / 2));
  CHECK_FALSE(c.load_macH(2));
  spit(c.macH_path(2), "garbage");
  CHECK_FALSE(c.load_macH(2));
  CHECK_FALSE(c.list().front().valid);

  // A file stored under the wrong degree is rejected by its meta line.
  spit(c.macH_path(3), good);
  CHECK_FALSE(c.load_macH(3));

  spit(c.macH_path(2), good);
  CHECK(c.load_macH(2));
}
