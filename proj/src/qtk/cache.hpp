#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qtk::cache {

inline constexpr const char* kHeader = "QTKNOTS-CACHE v1";

// $QTKNOTS_CACHE, else $XDG_CACHE_HOME/qtknots, else $HOME/.cache/qtknots,
// else ./.qtknots-cache.
std::filesystem::path default_root();

// Persistent store for H~_mu (one file per degree) and e_kn values. Files are
// published by rename; anything unreadable or implausible is ignored.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path root) : root_(std::move(root)) {}
  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path macH_path(int n) const;
  std::filesystem::path family_path(int k, int n) const;

  // Installs the stored values into the in-memory memo tables.
  bool load_macH(int n) const;
  bool load_family(int k, int n) const;
  // Writes what is memoized; false when there is nothing complete to write.
  bool store_macH(int n) const;
  bool store_family(int k, int n) const;

  struct Entry {
    std::string name;  // relative to the root, e.g. "macH/n=4"
    std::uintmax_t bytes = 0;
    bool valid = false;
  };
  std::vector<Entry> list() const;
  // Removes every cache file; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path root_;
};

}  // namespace qtk::cache
