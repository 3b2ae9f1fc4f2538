#include "asharp/osc_quad.hpp"

#include <algorithm>
#include <cmath>

#include "asharp/errors.hpp"
#include "asharp/normal_form.hpp"

namespace asharp {

std::string osc_method_name(OscMethod m) {
  return m == OscMethod::direct2d ? "direct2d" : "reduced1d";
}

OscSample eval_I_direct(const PhaseOracle& phase, const AmplitudeCutoff& g, double lambda,
                        std::array<double, 2> z, const OscOptions& opts) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  const Box2& dom = phase.domain();
  double r = g.support_radius;
  double a1 = std::max(dom.x1_min, -r), b1 = std::min(dom.x1_max, r);
  double a2 = std::max(dom.x2_min, -r), b2 = std::min(dom.x2_max, r);
  auto full_phase = [&](double x1, double x2) {
    return z[0] * x1 + z[1] * x2 + phase.evaluate(x1, x2);
  };
  auto amp = [&](double x1, double x2) { return g.evaluate(x1, x2); };
  OscResult res = osc_integral_2d(full_phase, amp, lambda, a1, b1, a2, b2, opts);
  return OscSample{lambda, z, res.value, res.err_est, OscMethod::direct2d};
}

ReducedPhase::ReducedPhase(const PhaseOracle& phase, double z2, int x1_grid)
    : phase_(&phase), z2_(z2) {
  h_min_ = 1e-6 * std::abs(phase.partial(0, 2, 0.0, 0.0));
  if (h_min_ == 0.0) throw DegeneracyError("d2^2 phi(0,0) = 0; no reduction direction");
  x1_lo_ = phase.domain().x1_min;
  x1_hi_ = phase.domain().x1_max;

  NormalFormOptions nf;
  nf.grid_points = x1_grid;
  FoldTrace fold = trace_fold_curve(phase, nf);
  grid_x1_ = fold.x1;
  x1_lo_ = grid_x1_.front();
  x1_hi_ = grid_x1_.back();
  grid_x2c_.resize(grid_x1_.size());
  hess_sign_ = 0;
  for (size_t i = 0; i < grid_x1_.size(); ++i) {
    double x1 = grid_x1_[i];
    double x2 = fold.psi[i];  // z2 = 0 seed
    for (int it = 0; it < 60; ++it) {
      double gp = phase.partial(0, 1, x1, x2) + z2_;
      double h = phase.partial(0, 2, x1, x2);
      if (std::abs(h) < h_min_)
        throw DegeneracyError("hessian below floor while reducing at x1=" + std::to_string(x1));
      double step = gp / h;
      x2 -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(x2))) break;
    }
    if (std::abs(phase.partial(0, 1, x1, x2) + z2_) > 1e-12)
      throw DegeneracyError("critical point solve stalled at x1=" + std::to_string(x1));
    grid_x2c_[i] = x2;
    int s = phase.partial(0, 2, x1, x2) > 0.0 ? 1 : -1;
    if (hess_sign_ == 0) hess_sign_ = s;
    if (s != hess_sign_)
      throw DegeneracyError("hessian changes sign across the x1 grid; reduction invalid");
  }
}

ReducedPoint ReducedPhase::at(double x1) const {
  // seed from the tabulation, then polish
  double seed;
  if (x1 <= grid_x1_.front())
    seed = grid_x2c_.front();
  else if (x1 >= grid_x1_.back())
    seed = grid_x2c_.back();
  else {
    double step = (grid_x1_.back() - grid_x1_.front()) / (grid_x1_.size() - 1.0);
    size_t i = static_cast<size_t>((x1 - grid_x1_.front()) / step);
    i = std::min(i, grid_x2c_.size() - 2);
    double t = (x1 - grid_x1_[i]) / (grid_x1_[i + 1] - grid_x1_[i]);
    seed = grid_x2c_[i] + t * (grid_x2c_[i + 1] - grid_x2c_[i]);
  }
  double x2 = seed;
  for (int it = 0; it < 40; ++it) {
    double gp = phase_->partial(0, 1, x1, x2) + z2_;
    double h = phase_->partial(0, 2, x1, x2);
    if (std::abs(h) < h_min_)
      throw DegeneracyError("hessian below floor at x1=" + std::to_string(x1));
    double step = gp / h;
    x2 -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(x2))) break;
  }
  ReducedPoint p;
  p.x2c = x2;
  p.phi1 = phase_->evaluate(x1, x2) + z2_ * x2;
  p.hess22 = phase_->partial(0, 2, x1, x2);
  return p;
}

ReducedPhase reduce_in_x2(const PhaseOracle& phase, double z2, int x1_grid) {
  return ReducedPhase(phase, z2, x1_grid);
}

OscSample eval_I1(const ReducedPhase& red, const AmplitudeCutoff& g, double lambda,
                  std::array<double, 2> z, double c_rem, const OscOptions& opts) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  double r = g.support_radius;
  double lo = std::max(red.x1_min(), -r), hi = std::min(red.x1_max(), r);
  auto phase1d = [&](double x1) { return red.at(x1).phi1 + z[0] * x1; };
  auto amp = [&](double x1) {
    ReducedPoint p = red.at(x1);
    return g.evaluate(x1, p.x2c) / std::sqrt(std::abs(p.hess22));
  };
  OscResult res = osc_integral_1d(phase1d, amp, lambda, lo, hi, opts);
  double pref = std::sqrt(2.0 * M_PI / lambda);
  std::complex<double> rot =
      std::polar(1.0, red.hessian_sign() * M_PI / 4.0);
  OscSample out;
  out.lambda = lambda;
  out.z = z;
  out.value = pref * rot * res.value;
  out.abs_error_estimate = pref * res.err_est + c_rem * std::pow(lambda, -1.5);
  out.method = OscMethod::reduced1d;
  return out;
}

double calibrate_remainder_const(const PhaseOracle& phase, const AmplitudeCutoff& g,
                                 const OscOptions& opts) {
  const double lambda = 64.0;
  const double zs[4] = {-0.06, -0.02, 0.03, 0.05};
  double c = 0.0;
  for (double z2 : zs) {
    ReducedPhase red(phase, z2);
    for (double z1 : {-0.05, 0.04}) {
      std::array<double, 2> z{z1, z2};
      OscSample direct = eval_I_direct(phase, g, lambda, z, opts);
      OscSample one = eval_I1(red, g, lambda, z, 0.0, opts);
      double diff = std::abs(direct.value - one.value);
      c = std::max(c, diff * std::pow(lambda, 1.5));
    }
  }
  return c;
}

double vdc_probe_1d(const std::vector<double>& lambdas, const std::function<double(double)>& f,
                    int k, const std::function<double(double)>& amp, double a, double b,
                    const OscOptions& opts) {
  if (k < 1) throw DomainError("derivative order k must be >= 1");
  double best = 0.0;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
    OscResult res = osc_integral_1d(f, amp, lambda, a, b, opts);
    best = std::max(best, std::pow(lambda, 1.0 / k) * std::abs(res.value));
  }
  return best;
}

}  // namespace asharp
