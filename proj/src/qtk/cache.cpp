#include "cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <random>

#include "knots.hpp"
#include "macdonald.hpp"

namespace fs = std::filesystem;

namespace qtk::cache {

namespace {

// Body lines "key|lambda|coeff", grouped by key. The header block is
// "QTKNOTS-CACHE v1", then "kind <kind>", then the expected meta lines.
std::optional<std::map<std::string, SymFunc>> read_file(const fs::path& p, const std::vector<std::string>& meta) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kHeader) return std::nullopt;
  for (const auto& m : meta)
    if (!std::getline(in, line) || line != m) return std::nullopt;
  std::map<std::string, SymFunc> out;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto a = line.find('|');
      auto b = a == std::string::npos ? a : line.find('|', a + 1);
      if (b == std::string::npos) return std::nullopt;
      std::string key = line.substr(0, a);
      Partition lam = Partition::parse(std::string_view(line).substr(a + 1, b - a - 1));
      out[key].add_term(lam, RatFunc::parse(std::string_view(line).substr(b + 1)));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return out;
}

bool write_file(const fs::path& p, const std::vector<std::string>& meta,
                const std::vector<std::pair<std::string, SymFunc>>& rows) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  if (ec) return false;
  std::random_device rd;
  fs::path tmp = p;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) return false;
    out << kHeader << '\n';
    for (const auto& m : meta) out << m << '\n';
    for (const auto& [key, f] : rows)
      for (const auto& [lam, c] : f.terms()) out << key << '|' << lam.to_string() << '|' << c.to_string() << '\n';
    if (!out) {
      fs::remove(tmp, ec);
      return false;
    }
  }
  fs::rename(tmp, p, ec);
  if (ec) fs::remove(tmp, ec);
  return !ec;
}

std::vector<std::string> macH_meta(int n) { return {"kind macH", "n " + std::to_string(n)}; }
std::vector<std::string> family_meta(int k, int n) {
  return {"kind family", "k " + std::to_string(k), "n " + std::to_string(n)};
}

std::optional<std::vector<std::pair<Partition, SymFunc>>> read_macH(const fs::path& p, int n) {
  auto rows = read_file(p, macH_meta(n));
  if (!rows) return std::nullopt;
  std::vector<std::pair<Partition, SymFunc>> out;
  for (const auto& mu : partitions_of(n)) {
    auto it = rows->find(mu.to_string());
    if (it == rows->end() || !mac::plausible_macH(mu, it->second)) return std::nullopt;
    out.emplace_back(mu, it->second);
  }
  if (out.size() != rows->size()) return std::nullopt;
  return out;
}

std::optional<SymFunc> read_family(const fs::path& p, int k, int n) {
  auto rows = read_file(p, family_meta(k, n));
  if (!rows || rows->size() != 1 || !rows->count("e")) return std::nullopt;
  const SymFunc& f = rows->at("e");
  if (!knots::plausible_e_kn(k, n, f)) return std::nullopt;
  return f;
}

bool parse_int_after(const std::string& s, const std::string& prefix, int& v) {
  if (s.rfind(prefix, 0) != 0) return false;
  try {
    std::size_t used = 0;
    v = std::stoi(s.substr(prefix.size()), &used);
    return used == s.size() - prefix.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

fs::path default_root() {
  if (const char* e = std::getenv("QTKNOTS_CACHE"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "qtknots";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "qtknots";
  return ".qtknots-cache";
}

fs::path DiskCache::macH_path(int n) const { return root_ / "macH" / ("n=" + std::to_string(n)); }

fs::path DiskCache::family_path(int k, int n) const {
  return root_ / "family" / ("e_" + std::to_string(k) + "_" + std::to_string(n));
}

bool DiskCache::load_macH(int n) const {
  if (n < 1) return false;
  auto rows = read_macH(macH_path(n), n);
  if (!rows) return false;
  for (const auto& [mu, h] : *rows) mac::install_macH(mu, h);
  return true;
}

bool DiskCache::load_family(int k, int n) const {
  auto f = read_family(family_path(k, n), k, n);
  if (!f) return false;
  knots::install_e_kn(k, n, *f);
  return true;
}

bool DiskCache::store_macH(int n) const {
  if (n < 1) return false;
  auto hs = mac::memoized_degree(n);
  if (hs.empty()) return false;
  std::vector<std::pair<std::string, SymFunc>> rows;
  const auto& parts = partitions_of(n);
  for (std::size_t i = 0; i < parts.size(); ++i) rows.emplace_back(parts[i].to_string(), hs[i]);
  return write_file(macH_path(n), macH_meta(n), rows);
}

bool DiskCache::store_family(int k, int n) const {
  auto f = knots::memoized_e_kn(k, n);
  if (!f) return false;
  return write_file(family_path(k, n), family_meta(k, n), {{"e", *f}});
}

std::vector<DiskCache::Entry> DiskCache::list() const {
  std::vector<Entry> out;
  std::error_code ec;
  for (const char* sub : {"macH", "family"}) {
    fs::path dir = root_ / sub;
    if (!fs::is_directory(dir, ec)) continue;
    for (const auto& de : fs::directory_iterator(dir, ec)) {
      if (!de.is_regular_file(ec)) continue;
      Entry e;
      std::string name = de.path().filename().string();
      e.name = std::string(sub) + "/" + name;
      e.bytes = de.file_size(ec);
      int n = 0, k = 0;
      if (std::string(sub) == "macH" && parse_int_after(name, "n=", n)) {
        e.valid = n >= 1 && read_macH(de.path(), n).has_value();
      } else if (std::string(sub) == "family" && name.rfind("e_", 0) == 0) {
        auto us = name.find('_', 2);
        if (us != std::string::npos && parse_int_after(name.substr(0, us), "e_", k) &&
            parse_int_after(name.substr(us), "_", n))
          e.valid = read_family(de.path(), k, n).has_value();
      }
      out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
  return out;
}

std::size_t DiskCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  for (const char* sub : {"macH", "family"}) {
    fs::path dir = root_ / sub;
    if (!fs::is_directory(dir, ec)) continue;
    std::vector<fs::path> victims;
    for (const auto& de : fs::directory_iterator(dir, ec))
      if (de.is_regular_file(ec)) victims.push_back(de.path());
    for (const auto& p : victims)
      if (fs::remove(p, ec)) ++removed;
  }
  return removed;
}

}  // namespace qtk::cache
