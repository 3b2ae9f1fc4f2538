#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "asharp/rational.hpp"
#include "asharp/series.hpp"

namespace asharp {

struct Box2 {
  double x1_min = -0.5, x1_max = 0.5;
  double x2_min = -0.5, x2_max = 0.5;

  static Box2 sym(double r1, double r2) { return Box2{-r1, r1, -r2, r2}; }
  bool contains(double x1, double x2) const {
    return x1 >= x1_min && x1 <= x1_max && x2 >= x2_min && x2 <= x2_max;
  }
  double half_width1() const { return 0.5 * (x1_max - x1_min); }
  double half_width2() const { return 0.5 * (x2_max - x2_min); }
};

// Bivariate polynomial with exact rational coefficients. Keeps a dense double
// coefficient table for fast evaluation; exact operations go through the
// sparse map.
class Poly2 {
public:
  Poly2() = default;

  static Poly2 from_terms(const std::vector<std::tuple<int, int, Rational>>& terms);

  void set(int i, int j, const Rational& c);
  Rational coeff(int i, int j) const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return c_; }

  int deg1() const { return deg1_; }
  int deg2() const { return deg2_; }
  bool is_zero() const { return c_.empty(); }

  double eval(double x1, double x2) const;
  Rational eval_exact(const Rational& x1, const Rational& x2) const;

  // Exact partial derivative polynomial.
  Poly2 partial(int g1, int g2) const;

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 scaled(const Rational& c) const;

  // Coefficient of x2^k as a series in x1 (truncated at trunc_deg).
  Series coeff_in_x2(int k, int trunc_deg) const;

  // Substitute x2 -> x2 + s(x1) for a polynomial s; exact.
  Poly2 shift_x2(const Series& s) const;

  // Substitute x2 -> s(x1); exact univariate result.
  Series substitute_x2(const Series& s, int trunc_deg) const;

  // Evaluate at series arguments (x1 = u(t), x2 = v(t)); truncated exact.
  Series eval_series(const Series& u, const Series& v) const;

  std::string str() const;  // "x1^3 + x2^2" style, for logs

private:
  void rebuild_cache();
  std::map<std::pair<int, int>, Rational> c_;
  std::vector<std::vector<double>> rows_;  // rows_[j][i] multiplies x1^i x2^j
  int deg1_ = -1, deg2_ = -1;
};

// Monomial helpers for terse corpus definitions.
Poly2 mono(int i, int j, const Rational& c = Rational(1));

class PhaseOracle {
public:
  virtual ~PhaseOracle() = default;
  virtual double evaluate(double x1, double x2) const = 0;
  // Raw derivative oracle; argument validation lives in eval_partial().
  virtual double partial(int g1, int g2, double x1, double x2) const = 0;
  virtual int d_max() const { return 8; }
  virtual const Box2& domain() const = 0;
  virtual bool is_polynomial() const { return false; }
};

class PolynomialPhase : public PhaseOracle {
public:
  explicit PolynomialPhase(Poly2 poly, Box2 dom = Box2{});

  double evaluate(double x1, double x2) const override { return poly_.eval(x1, x2); }
  double partial(int g1, int g2, double x1, double x2) const override;
  const Box2& domain() const override { return dom_; }
  bool is_polynomial() const override { return true; }

  const Poly2& poly() const { return poly_; }
  // Cached low-order derivative polynomials for hot loops.
  const Poly2& d1() const { return d1_; }
  const Poly2& d2() const { return d2_; }
  const Poly2& d11() const { return d11_; }
  const Poly2& d12() const { return d12_; }
  const Poly2& d22() const { return d22_; }

private:
  Poly2 poly_, d1_, d2_, d11_, d12_, d22_;
  Box2 dom_;
};

// Black-box phase: evaluation callback plus finite-difference derivatives.
class FnPhase : public PhaseOracle {
public:
  FnPhase(std::function<double(double, double)> f, Box2 dom, int d_max = 8)
      : f_(std::move(f)), dom_(dom), d_max_(d_max) {}

  double evaluate(double x1, double x2) const override { return f_(x1, x2); }
  double partial(int g1, int g2, double x1, double x2) const override;
  int d_max() const override { return d_max_; }
  const Box2& domain() const override { return dom_; }

private:
  std::function<double(double, double)> f_;
  Box2 dom_;
  int d_max_;
};

// Checked derivative access: order cap and domain membership enforced here.
double eval_partial(const PhaseOracle& phase, int g1, int g2, double x1, double x2);

}  // namespace asharp
