#include "treepack/thresholds.hpp"

#include <limits>
#include <stdexcept>

#include "treepack/errors.hpp"

namespace treepack {

namespace {

using Wide = __int128;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(Wide x) {
  if (x >= std::numeric_limits<long long>::max() ||
      x <= std::numeric_limits<long long>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<long long>(x);
}

Rational from_wide(Wide num, Wide den) {
  if (den == 0) throw input_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(long long value) : num_(value), den_(1) {}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Wide n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = wide_gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                   Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                   Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw input_error("rational division by zero");
  return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}
bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}
bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
bool operator>(const Rational& a, const Rational& b) { return b < a; }
bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

void check_range(int m, int k, const char* who) {
  if (k < 2) throw input_error(std::string(who) + ": k must be >= 2");
  if (m < k + 1 || m > 2 * k - 1)
    throw input_error(std::string(who) + ": m must satisfy k+1 <= m <= 2k-1");
}

Rational branch_low_expr(int m, int k) {
  long long kk = k;
  return Rational(2LL * m + k - 4) +
         Rational(kk * (2 * kk - 1), 2LL * m - 2 * kk - 1);
}

Rational branch_high_expr(int m, int k) {
  long long kk = k;
  return Rational(1LL * m + 3 * kk - 4) + Rational(kk * kk, 1LL * m - kk);
}

}  // namespace

Rational f_threshold(int m, int k) {
  check_range(m, k, "f_threshold");
  long long lhs = 4LL * (m - k) - 1;
  bool low_branch = lhs * lhs < 8LL * k + 1;
  return low_branch ? branch_low_expr(m, k) : branch_high_expr(m, k);
}

Rational laili_threshold(int m, int k) {
  check_range(m, k, "laili_threshold");
  return Rational(1LL * m * m, 1LL * m - k) - Rational(2);
}

std::vector<BoundsRow> bounds_report(int k) {
  if (k < 2) throw input_error("bounds_report: k must be >= 2");
  std::vector<BoundsRow> rows;
  for (int m = k + 1; m <= 2 * k - 1; ++m) {
    BoundsRow row;
    row.m = m;
    row.f = f_threshold(m, k);
    row.laili = laili_threshold(m, k);
    row.floor_6k4 = Rational(6LL * k - 4);
    row.branch_low = branch_low_expr(m, k);
    row.branch_high = branch_high_expr(m, k);
    row.dominates = row.f >= row.floor_6k4 && row.f >= row.branch_low &&
                    row.f >= row.branch_high;
    row.below_twice = row.f < Rational(2) * row.laili;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace treepack
