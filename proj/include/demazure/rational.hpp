#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace demazure {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

/// Exact rational number on 64-bit components. All coweight coordinates,
/// pairings and polytope thresholds go through this type; there is no
/// floating point anywhere in the core. Values stay tiny at the scales this
/// library targets, but intermediates are widened to 128 bits anyway.
class Rat {
 public:
  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(Int n) : num_(n), den_(1) {}
  Rat(Int n, Int d) { assign(n, d); }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  /// Exact integer value; throws if not integral.
  Int as_integer() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  std::string str() const {
    return is_integer() ? std::to_string(num_)
                        : std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// Parses "3", "-3", "3/2". Throws std::invalid_argument on junk.
  static Rat parse(const std::string& s);

 private:
  using i128 = __int128;

  void assign(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const Int g = std::gcd(n < 0 ? -n : n, d);
    num_ = g ? n / g : 0;
    den_ = g ? d / g : 1;
  }

  static Rat make(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 an = n < 0 ? -n : n;
    i128 g = gcd128(an, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rat: 64-bit overflow");
    Rat r;
    r.num_ = static_cast<Int>(n);
    r.den_ = static_cast<Int>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a ? a : 1;
  }

  Int num_, den_;
};

using RatVec = std::vector<Rat>;

inline Rat Rat::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  }
}

}  // namespace demazure
