#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtk {

// Fixed indeterminate universe. Declaration order is the priority order used
// by the monomial ordering (q > t > A > u > y > z).
enum class Var : std::uint8_t { q = 0, t, A, u, y, z };

inline constexpr int kVarCount = 6;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::q, Var::t, Var::A,
                                                     Var::u, Var::y, Var::z};
inline constexpr std::array<std::string_view, kVarCount> kVarNames{
    "q", "t", "A", "u", "y", "z"};

inline std::string_view var_name(Var v) {
  return kVarNames[static_cast<int>(v)];
}

bool parse_var(std::string_view name, Var& out);

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A monomial q^a t^b A^c u^d y^e z^f packed into one 128-bit key. The key
// holds the total degree in the highest field followed by the exponents in
// priority order, so comparing keys is graded lexicographic comparison.
// Every 16-bit field keeps its top bit clear as an overflow guard.
class Monomial {
 public:
  using Key = unsigned __int128;

  static constexpr int kFieldBits = 16;
  static constexpr unsigned kMaxExponent = (1u << (kFieldBits - 1)) - 1;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  static Monomial from_exponents(const std::array<unsigned, kVarCount>& e) {
    Monomial m;
    for (int i = 0; i < kVarCount; ++i) m.set(kAllVars[i], e[i]);
    return m;
  }

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & kFieldMask);
  }
  unsigned degree() const {
    return static_cast<unsigned>((key_ >> kDegreeShift) & kFieldMask);
  }
  std::array<unsigned, kVarCount> exponents() const {
    std::array<unsigned, kVarCount> e{};
    for (int i = 0; i < kVarCount; ++i) e[i] = exponent(kAllVars[i]);
    return e;
  }
  bool is_one() const { return key_ == 0; }
  Key key() const { return key_; }
  // Key with the degree field cleared: pure lexicographic comparison.
  Key lex_key() const { return key_ & ~(kFieldMask << kDegreeShift); }

  Monomial operator*(Monomial o) const {
    Monomial r;
    r.key_ = key_ + o.key_;
    if (r.key_ & guard_mask()) throw ExponentOverflow("monomial exponent overflow");
    return r;
  }

  // True when this monomial divides o.
  bool divides(Monomial o) const {
    return (((o.key_ | guard_mask()) - key_) & guard_mask()) == guard_mask();
  }

  // Precondition: o divides *this.
  Monomial operator/(Monomial o) const {
    Monomial r;
    r.key_ = key_ - o.key_;
    return r;
  }

  Monomial pow(unsigned k) const {
    Monomial r;
    for (Var v : kAllVars) r.set(v, exponent(v) * k);
    return r;
  }

  // Component-wise minimum (the monomial gcd).
  friend Monomial min(Monomial a, Monomial b) {
    Monomial r;
    for (Var v : kAllVars) {
      unsigned ea = a.exponent(v), eb = b.exponent(v);
      r.set(v, ea < eb ? ea : eb);
    }
    return r;
  }

  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
    if (a.key_ < b.key_) return std::strong_ordering::less;
    if (a.key_ > b.key_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    auto lo = static_cast<std::uint64_t>(key_);
    auto hi = static_cast<std::uint64_t>(key_ >> 64);
    return static_cast<std::size_t>(lo * 0x9E3779B97F4A7C15ull ^ (hi + (lo << 6)));
  }

  std::string to_string() const;

 private:
  static constexpr Key kFieldMask = (Key{1} << kFieldBits) - 1;
  static constexpr int kDegreeShift = kFieldBits * kVarCount;

  static constexpr int shift(Var v) {
    return kFieldBits * (kVarCount - 1 - static_cast<int>(v));
  }
  static constexpr Key guard_mask() {
    Key g = 0;
    for (int i = 0; i <= kVarCount; ++i) g |= Key{1} << (kFieldBits * i + kFieldBits - 1);
    return g;
  }

  void set(Var v, unsigned e) {
    if (e > kMaxExponent) throw ExponentOverflow("monomial exponent overflow");
    unsigned old = exponent(v);
    unsigned deg = degree() - old + e;
    if (deg > kMaxExponent) throw ExponentOverflow("monomial degree overflow");
    key_ &= ~(kFieldMask << shift(v));
    key_ |= Key{e} << shift(v);
    key_ &= ~(kFieldMask << kDegreeShift);
    key_ |= Key{deg} << kDegreeShift;
  }

  Key key_ = 0;
};

}  // namespace qtk
