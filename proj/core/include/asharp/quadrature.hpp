#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace asharp {

struct GlRule {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

// Cached Gauss-Legendre rule (Newton on Legendre polynomials).
const GlRule& gl_rule(int n);

struct OscOptions {
  double c_osc = 1.5707963267948966;  // quarter wave of phase change per panel
  int nodes_per_panel = 16;
  std::int64_t budget = std::int64_t(1) << 22;  // node evaluations per call
  int sup_grid = 33;                            // gradient sampling density
  double sup_safety = 1.25;
  bool error_estimate = true;  // add a double-width coarse pass
};

struct OscResult {
  std::complex<double> value{0.0, 0.0};
  double err_est = 0.0;
  std::int64_t nodes = 0;
  std::int64_t panels = 0;
};

// integral of exp(i*lambda*phase(x)) * amp(x) over [a,b]. Panel width
// c_osc/(1 + lambda*sup|phase'|), sup sampled on sup_grid points * safety.
OscResult osc_integral_1d(const std::function<double(double)>& phase,
                          const std::function<double(double)>& amp, double lambda, double a,
                          double b, const OscOptions& opts = {});

// Same with a caller-supplied bound on sup|phase'| (skips sampling).
OscResult osc_integral_1d_bounded(const std::function<double(double)>& phase,
                                  const std::function<double(double)>& amp, double lambda,
                                  double a, double b, double grad_sup,
                                  const OscOptions& opts = {});

// integral of exp(i*lambda*phase(x1,x2)) * amp(x1,x2) over the box
// [a1,b1]x[a2,b2]; per-axis panel widths from sampled sup|d_i phase|.
OscResult osc_integral_2d(const std::function<double(double, double)>& phase,
                          const std::function<double(double, double)>& amp, double lambda,
                          double a1, double b1, double a2, double b2,
                          const OscOptions& opts = {});

// Plain (non-oscillatory) tensor GL integral over a box.
double integrate_gl_2d(const std::function<double(double, double)>& f, double a1, double b1,
                       double a2, double b2, int n);

double integrate_gl_1d(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace asharp
