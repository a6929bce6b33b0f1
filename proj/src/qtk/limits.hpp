#pragma once

#include <atomic>
#include <string>

#include "errors.hpp"

namespace qtk {

// Process-wide guard on the symmetric-function degree of intermediate results.
inline std::atomic<int>& degree_limit_storage() {
  static std::atomic<int> limit{12};
  return limit;
}
inline int degree_limit() { return degree_limit_storage().load(std::memory_order_relaxed); }
inline void set_degree_limit(int d) { degree_limit_storage().store(d, std::memory_order_relaxed); }

inline void check_degree(int degree, const char* what) {
  if (degree > degree_limit())
    throw DegreeLimitExceeded(std::string(what) + ": degree " + std::to_string(degree) +
                              " exceeds the limit " + std::to_string(degree_limit()));
}

}  // namespace qtk
