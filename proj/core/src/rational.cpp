#include "asharp/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "asharp/errors.hpp"

namespace asharp {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* ctx) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(std::string("rational overflow in ") + ctx);
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_narrow(n, "ctor");
  den_ = checked_narrow(d, "ctor");
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_narrow(-i128(num_), "negate");
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_narrow(n, "add");
  den_ = checked_narrow(d, "add");
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  i128 n = i128(num_) * o.num_;
  i128 d = i128(den_) * o.den_;
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_narrow(n, "mul");
  den_ = checked_narrow(d, "mul");
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  i128 n = i128(num_) * o.den_;
  i128 d = i128(den_) * o.num_;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = checked_narrow(n, "div");
  den_ = checked_narrow(d, "div");
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> Rational::parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string body = s;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    std::string a = body.substr(0, slash), b = body.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    errno = 0;
    std::int64_t n = std::strtoll(a.c_str(), nullptr, 10);
    std::int64_t d = std::strtoll(b.c_str(), nullptr, 10);
    if (errno != 0 || d == 0) return std::nullopt;
    return Rational(neg ? -n : n, d);
  }
  auto dot = body.find('.');
  if (dot != std::string::npos) {
    std::string a = body.substr(0, dot), b = body.substr(dot + 1);
    if (a.empty()) a = "0";
    if (!all_digits(a) || !all_digits(b) || b.size() > 9) return std::nullopt;
    errno = 0;
    std::int64_t ip = std::strtoll(a.c_str(), nullptr, 10);
    std::int64_t fp = std::strtoll(b.c_str(), nullptr, 10);
    if (errno != 0) return std::nullopt;
    std::int64_t den = 1;
    for (size_t i = 0; i < b.size(); ++i) den *= 10;
    Rational r = Rational(ip) + Rational(fp, den);
    return neg ? -r : r;
  }
  if (!all_digits(body)) return std::nullopt;
  errno = 0;
  std::int64_t n = std::strtoll(body.c_str(), nullptr, 10);
  if (errno != 0) return std::nullopt;
  return Rational(neg ? -n : n);
}

Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational rat_abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::int64_t Order::value() const {
  if (flat_) throw DomainError("flat order has no finite value");
  return k_;
}

std::string Order::str() const { return flat_ ? "flat" : std::to_string(k_); }

std::ostream& operator<<(std::ostream& os, const Order& o) { return os << o.str(); }

}  // namespace asharp
