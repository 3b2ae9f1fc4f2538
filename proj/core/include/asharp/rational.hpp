#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace asharp {

// Exact rational over int64 with __int128 intermediates. Throws
// std::overflow_error if a reduced numerator/denominator leaves int64 range;
// the quantities here (exponents, branch values, crossovers) stay tiny.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;  // "3/8", "-1/2", "2"

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws DomainError on /0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Accepts "a/b", "a", and plain decimals like "1.25" (at most 9 fraction
  // digits). Returns nullopt on anything else.
  static std::optional<Rational> parse(const std::string& s);

private:
  std::int64_t num_;
  std::int64_t den_;  // > 0, gcd(|num|, den) == 1
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);
Rational rat_abs(const Rational& a);

// A vanishing order: a finite integer >= 1, or flat (vanishes to every order
// probed). Flat enters exponent formulas only through its reciprocal, which
// is exactly 0; we never touch floating-point infinity.
class Order {
public:
  static constexpr Order finite(std::int64_t k) { return Order(k, false); }
  static constexpr Order flat() { return Order(0, true); }

  bool is_flat() const { return flat_; }
  bool is_finite() const { return !flat_; }
  std::int64_t value() const;  // throws DomainError if flat

  // 1/n with 1/flat == 0.
  Rational reciprocal() const { return flat_ ? Rational(0) : Rational(1, k_); }

  std::string str() const;  // "3" or "flat"

  friend bool operator==(const Order& a, const Order& b) {
    return a.flat_ == b.flat_ && (a.flat_ || a.k_ == b.k_);
  }
  friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }
  // flat compares greater than every finite order
  friend bool operator<(const Order& a, const Order& b) {
    if (a.flat_) return false;
    if (b.flat_) return true;
    return a.k_ < b.k_;
  }
  friend bool operator>(const Order& a, const Order& b) { return b < a; }
  friend bool operator<=(const Order& a, const Order& b) { return !(b < a); }
  friend bool operator>=(const Order& a, const Order& b) { return !(a < b); }

private:
  constexpr Order(std::int64_t k, bool flat) : k_(k), flat_(flat) {}
  std::int64_t k_;
  bool flat_;
};

std::ostream& operator<<(std::ostream& os, const Order& o);

}  // namespace asharp
