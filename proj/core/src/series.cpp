#include "asharp/series.hpp"

#include <algorithm>

#include "asharp/errors.hpp"

namespace asharp {

namespace {
size_t usize(int k) { return static_cast<size_t>(k); }
}

bool Series::is_zero() const { return first_nonzero() < 0; }

int Series::first_nonzero() const {
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  Series r(std::min(a.trunc_deg(), b.trunc_deg()));
  for (int k = 0; k <= r.trunc_deg(); ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  Series r(std::min(a.trunc_deg(), b.trunc_deg()));
  for (int i = 0; i <= r.trunc_deg(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= r.trunc_deg() && j <= b.trunc_deg(); ++j)
      r.coeff(i + j) += a.coeff(i) * b.coeff(j);
  }
  return r;
}

Series Series::operator*(const Rational& s) const {
  Series r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Series Series::inverse() const {
  if (c_.empty() || c_[0].is_zero()) throw DomainError("series inverse needs nonzero constant term");
  Series r(trunc_deg());
  r.coeff(0) = Rational(1) / c_[0];
  for (int k = 1; k <= trunc_deg(); ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += c_[usize(j)] * r.coeff(k - j);
    r.coeff(k) = -acc / c_[0];
  }
  return r;
}

Series Series::compose(const Series& u) const {
  if (!u.coeff(0).is_zero()) throw DomainError("series compose needs u(0) == 0");
  int d = std::min(trunc_deg(), u.trunc_deg());
  Series r = Series::constant(c_.empty() ? Rational(0) : c_[0], d);
  Series upow = Series::constant(Rational(1), d);
  for (int k = 1; k <= trunc_deg(); ++k) {
    upow = upow * u;
    if (c_[usize(k)].is_zero()) continue;
    r = r + upow * c_[usize(k)];
    if (upow.first_nonzero() < 0) break;  // higher powers vanish entirely
  }
  return r;
}

Series Series::pow(int e) const {
  Series r = Series::constant(Rational(1), trunc_deg());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Series Series::derivative() const {
  Series r(trunc_deg());
  for (int k = 1; k <= trunc_deg(); ++k) r.coeff(k - 1) = c_[usize(k)] * Rational(k);
  if (trunc_deg() >= 0) r.coeff(trunc_deg()) = Rational(0);
  return r;
}

double Series::eval(double t) const {
  double acc = 0.0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k].to_double();
  return acc;
}

Rational Series::eval_exact(const Rational& t) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Series Series::constant(const Rational& v, int trunc_deg) {
  Series r(trunc_deg);
  r.coeff(0) = v;
  return r;
}

Series Series::identity(int trunc_deg) {
  Series r(trunc_deg);
  if (trunc_deg >= 1) r.coeff(1) = Rational(1);
  return r;
}

}  // namespace asharp
