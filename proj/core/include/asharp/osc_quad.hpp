#pragma once

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "asharp/amplitude.hpp"
#include "asharp/phase.hpp"
#include "asharp/quadrature.hpp"

namespace asharp {

enum class OscMethod { direct2d, reduced1d };
std::string osc_method_name(OscMethod m);

struct OscSample {
  double lambda = 0.0;
  std::array<double, 2> z{0.0, 0.0};
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  OscMethod method = OscMethod::direct2d;
};

// I(lambda, z) = int exp(i*lambda*(z.x + phi(x))) g(x) dx over the phase
// domain, by oscillation-resolving panel quadrature.
OscSample eval_I_direct(const PhaseOracle& phase, const AmplitudeCutoff& g, double lambda,
                        std::array<double, 2> z, const OscOptions& opts = {});

struct ReducedPoint {
  double x2c;     // critical point of x2 -> phi(x1,x2) + z2*x2
  double phi1;    // phi(x1, x2c) + z2*x2c   (z1*x1 is the caller's)
  double hess22;  // d2^2 phi at the critical point
};

// Stationary-phase reduction in x2 at fixed z2. Critical points are solved by
// Newton continued from the fold curve (the z2 = 0 solution); immutable and
// shareable across threads after construction.
class ReducedPhase {
public:
  ReducedPhase(const PhaseOracle& phase, double z2, int x1_grid = 201);

  ReducedPoint at(double x1) const;
  double z2() const { return z2_; }
  const PhaseOracle& phase() const { return *phase_; }
  int hessian_sign() const { return hess_sign_; }
  double x1_min() const { return x1_lo_; }
  double x1_max() const { return x1_hi_; }

private:
  const PhaseOracle* phase_;
  double z2_;
  double h_min_;
  double x1_lo_, x1_hi_;
  std::vector<double> grid_x1_, grid_x2c_;
  int hess_sign_;
};

ReducedPhase reduce_in_x2(const PhaseOracle& phase, double z2, int x1_grid = 201);

// I1(lambda, z): sqrt(2*pi/lambda) e^{i pi/4 sgn} int e^{i lambda Phi1(x1)}
// g(x1, x2c) |hess22|^{-1/2} dx1, with a remainder allowance
// c_rem * lambda^{-3/2} folded into the error estimate.
OscSample eval_I1(const ReducedPhase& red, const AmplitudeCutoff& g, double lambda,
                  std::array<double, 2> z, double c_rem = 0.0, const OscOptions& opts = {});

// Empirical remainder constant: max over a few low-lambda z samples of
// |I1_raw - I_direct| * lambda^{3/2}.
double calibrate_remainder_const(const PhaseOracle& phase, const AmplitudeCutoff& g,
                                 const OscOptions& opts = {});

// max over lambdas of lambda^{1/k} |int e^{i lambda f} a| on [a,b].
double vdc_probe_1d(const std::vector<double>& lambdas, const std::function<double(double)>& f,
                    int k, const std::function<double(double)>& amp, double a, double b,
                    const OscOptions& opts = {});

}  // namespace asharp
