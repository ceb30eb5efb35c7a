#pragma once

#include <string>
#include <vector>

namespace treepack {

// Exact rational arithmetic, no floating point anywhere. Stored in lowest
// terms with a positive denominator. Numerator and denominator live in
// 64 bits; intermediates are computed in 128 bits and any result that
// would not narrow back throws std::overflow_error, so values are either
// exact or loudly rejected. Every quantity this module produces for
// k up to ~10^8 fits comfortably.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b);
  friend bool operator>=(const Rational& a, const Rational& b);

  std::string str() const;  // "p/q", or "p" when integral

 private:
  long long num_ = 0;
  long long den_ = 1;
};

// Two-essential edge-connectivity threshold that guarantees k
// edge-disjoint spanning trees in m-edge-connected graphs:
//   2m + k - 4 + k(2k-1)/(2m-2k-1)   when m <  k + (1+sqrt(8k+1))/4,
//   m + 3k - 4 + k^2/(m-k)           otherwise.
// The branch test is done in integers: m is below the split point iff
// (4(m-k)-1)^2 < 8k+1 (valid since 4(m-k)-1 >= 3). At equality both
// branches coincide, so the boundary assignment is value-neutral.
// Requires k >= 2 and k+1 <= m <= 2k-1.
Rational f_threshold(int m, int k);

// Essential edge-connectivity threshold m^2/(m-k) - 2 from the earlier
// single-threshold bound. Requires k+1 <= m <= 2k-1.
Rational laili_threshold(int m, int k);

struct BoundsRow {
  int m = 0;
  Rational f;
  Rational laili;
  Rational floor_6k4;   // 6k - 4
  Rational branch_low;  // 2m + k - 4 + k(2k-1)/(2m-2k-1)
  Rational branch_high; // m + 3k - 4 + k^2/(m-k)
  bool dominates = false;    // f >= max of the three components
  bool below_twice = false;  // f < 2 * laili
};

// One row per m in [k+1, 2k-1]. Requires k >= 2.
std::vector<BoundsRow> bounds_report(int k);

}  // namespace treepack
