#include "asharp/finite_diff.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace asharp {

namespace {

// Central stencil for the k-th derivative: nodes (i - k/2)*h, binomial
// coefficients with alternating sign, O(h^2) accurate.
struct Stencil {
  std::vector<double> offsets;  // in units of h
  std::vector<double> coeffs;   // to divide by h^k
};

Stencil central_stencil(int k) {
  Stencil s;
  double binom = 1.0;
  for (int i = 0; i <= k; ++i) {
    s.offsets.push_back(0.5 * k - i);
    s.coeffs.push_back(((i % 2) ? -1.0 : 1.0) * binom);
    binom = binom * (k - i) / (i + 1);
  }
  return s;
}

double step_for_order(int order, double scale) {
  double eps = std::numeric_limits<double>::epsilon();
  return std::pow(eps, 1.0 / (order + 2)) * scale;
}

}  // namespace

FdResult fd_partial(const std::function<double(double, double)>& f, int g1, int g2, double x,
                    double y, double scale) {
  if (g1 == 0 && g2 == 0) return {f(x, y), 0.0};
  Stencil s1 = central_stencil(g1);
  Stencil s2 = central_stencil(g2);
  int order = g1 + g2;
  auto apply = [&](double h) {
    double acc = 0.0;
    for (size_t a = 0; a < s1.offsets.size(); ++a)
      for (size_t b = 0; b < s2.offsets.size(); ++b)
        acc += s1.coeffs[a] * s2.coeffs[b] * f(x + s1.offsets[a] * h, y + s2.offsets[b] * h);
    return acc / std::pow(h, order);
  };
  double h = step_for_order(order, scale);
  double coarse = apply(h);
  double fine = apply(0.5 * h);
  double rich = (4.0 * fine - coarse) / 3.0;
  return {rich, std::abs(rich - fine)};
}

FdResult fd_derivative(const std::function<double(double)>& f, int k, double x, double scale) {
  if (k == 0) return {f(x), 0.0};
  Stencil s = central_stencil(k);
  auto apply = [&](double h) {
    double acc = 0.0;
    for (size_t a = 0; a < s.offsets.size(); ++a) acc += s.coeffs[a] * f(x + s.offsets[a] * h);
    return acc / std::pow(h, k);
  };
  double h = step_for_order(k, scale);
  double coarse = apply(h);
  double fine = apply(0.5 * h);
  double rich = (4.0 * fine - coarse) / 3.0;
  return {rich, std::abs(rich - fine)};
}

}  // namespace asharp
