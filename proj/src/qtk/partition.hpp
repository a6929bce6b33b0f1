#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "intpoly.hpp"

namespace qtk {

// Cell (i, j): column i, row j, both 0-based, rows of length parts[j].
struct Cell {
  int i = 0, j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; anything else not weakly decreasing and
  // positive is rejected with InvalidInput.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,2", "3 2", "1^2 3^1", "" or "0" for the empty partition.
  static Partition parse(std::string_view text);
  static Partition hook(int arm, int leg);  // (arm+1, 1^leg)
  static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(n, 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based row access, zero past the end.
  int operator[](int j) const { return j < length() ? parts_[j] : 0; }

  Partition conjugate() const;
  bool contains(Cell c) const { return c.j >= 0 && c.j < length() && c.i >= 0 && c.i < parts_[c.j]; }
  bool contains(const Partition& mu) const;  // diagram inclusion
  std::vector<Cell> cells() const;

  int arm(Cell c) const { return parts_[c.j] - c.i - 1; }
  int leg(Cell c) const;
  int hook_length(Cell c) const { return 1 + arm(c) + leg(c); }

  bool is_hook() const { return empty() || length() == 1 || parts_[1] == 1; }
  int hook_arm() const { return parts_[0] - 1; }
  int hook_leg() const { return length() - 1; }

  int eta() const;       // sum (j-1) mu_j over 1-based rows
  int eta_conj() const;  // eta of the conjugate
  int iota() const;      // cells with i > j

  std::string to_string() const;  // "3,2"; empty renders as ""

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  std::size_t hash() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

// Size descending, then lexicographically descending: the display order.
struct DisplayOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  }
};

// Requires |lambda| = |mu|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

// All partitions of n in lexicographically decreasing order: (n), (n-1,1), ...
const std::vector<Partition>& partitions_of(int n);

// All mu inside lambda with |lambda/mu| = k and at most one cell per row
// (vertical) or per column (horizontal).
std::vector<Partition> vertical_strips(const Partition& lambda, int k);
std::vector<Partition> horizontal_strips(const Partition& lambda, int k);

// All partitions contained in tau (including the empty one and tau itself).
std::vector<Partition> subpartitions(const Partition& tau);

struct CellStat {
  Cell cell;
  int arm, leg, hook;
};
struct CellStats {
  std::vector<CellStat> cells;
  int eta, eta_conj, iota;
};
CellStats cell_stats(const Partition& mu);

struct QtInvariants {
  IntPoly B, T, Pi, w;
};
QtInvariants qt_invariants(const Partition& mu);
IntPoly cell_enumerator(const Partition& mu);  // B_mu
IntPoly cell_weight(const Partition& mu);      // T_mu
IntPoly pi_product(const Partition& mu);       // Pi_mu
IntPoly w_product(const Partition& mu);        // w_mu

// z_lambda = prod_i i^{m_i} m_i!
Integer z_lambda(const Partition& lambda);

}  // namespace qtk
