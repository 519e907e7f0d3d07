#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <vector>

namespace symgor {

/// Upper bound on the number of variables a Monomial can carry. The
/// symmetric n x n matrix has n(n+1)/2 entries, so this covers n <= 10.
inline constexpr std::size_t kMaxVariables = 64;

/// Exponent vector over variable slots 0..kMaxVariables-1.
///
/// Slots are abstract indices; in a polynomial ring they are the priority
/// ranks of a TermOrder (slot 0 is the highest-priority variable), and in a
/// Stanley-Reisner context they are vertex ids. Storage is dense so that
/// multiplication, divisibility and revlex comparison are branch-light loops.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t slot, unsigned exponent = 1);
  static Monomial from_support(std::uint64_t mask);

  unsigned exponent(std::size_t slot) const { return exps_[slot]; }
  void set_exponent(std::size_t slot, unsigned e);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_square_free() const;
  /// Bitmask of slots with positive exponent.
  std::uint64_t support_mask() const;
  std::vector<std::size_t> support() const;

  Monomial lcm(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }

  /// Graded reverse lexicographic comparison where slot 0 has the highest
  /// priority: higher degree wins; on a tie, the monomial with the smaller
  /// exponent in the last differing slot is larger.
  friend std::strong_ordering revlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    std::uint64_t wa[kMaxVariables / 8];
    std::uint64_t wb[kMaxVariables / 8];
    std::memcpy(wa, a.exps_.data(), kMaxVariables);
    std::memcpy(wb, b.exps_.data(), kMaxVariables);
    // Little-endian words: the highest slot in a word is its most significant
    // byte, so the last differing word decides, and a smaller word is larger.
    for (std::size_t w = kMaxVariables / 8; w-- > 0;) {
      if (wa[w] != wb[w]) return wb[w] <=> wa[w];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Strict weak ordering "a is greater than b" for sorting terms descending.
struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_compare(a, b) == std::strong_ordering::greater;
  }
};

}  // namespace symgor
