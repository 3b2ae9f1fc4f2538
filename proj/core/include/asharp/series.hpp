#pragma once

#include <vector>

#include "asharp/rational.hpp"

namespace asharp {

// Truncated power series in one variable with exact rational coefficients.
// coeff[k] multiplies t^k; all series in an expression share a truncation
// degree and operations drop terms beyond it.
class Series {
public:
  Series() = default;
  explicit Series(int trunc_deg) : c_(static_cast<size_t>(trunc_deg) + 1) {}
  Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

  int trunc_deg() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  Rational& coeff(int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;

  // Index of the first nonzero coefficient, or -1 if identically zero up to
  // the truncation degree.
  int first_nonzero() const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator*(const Rational& s) const;

  // Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const;

  // Substitute u for t: this(u(t)); requires u(0) == 0.
  Series compose(const Series& u) const;

  Series pow(int e) const;
  Series derivative() const;

  double eval(double t) const;            // Horner in double
  Rational eval_exact(const Rational& t) const;

  static Series zero(int trunc_deg) { return Series(trunc_deg); }
  static Series constant(const Rational& v, int trunc_deg);
  static Series identity(int trunc_deg);  // t

private:
  std::vector<Rational> c_;
};

}  // namespace asharp
