#pragma once

#include <string>

namespace asharp {

enum class CutoffKind { bump, chi0, chi1 };

// Radial amplitude/cutoff over R^2. bump(r): exp(-1/(1-(|x|/r)^2)) inside
// |x| < r. chi0: 1 on |x|<=1, 0 on |x|>=2, smooth monotone radial joiner
// S(2-|x|) between, with S(t) = B(t)/(B(t)+B(1-t)), B(t) = exp(-1/t) for
// t>0 else 0. chi1(x) = chi0(x) - chi0(2x).
struct AmplitudeCutoff {
  CutoffKind kind = CutoffKind::bump;
  double support_radius = 1.0;

  double evaluate(double x1, double x2) const;
  std::string kind_name() const;
};

AmplitudeCutoff make_bump(double radius);
AmplitudeCutoff make_chi0();
AmplitudeCutoff make_chi1();

// Scalar building blocks (shared by the 1-D profiles and the radial cutoffs).
double bump_profile(double s);         // exp(-1/(1-s^2)) on |s|<1, else 0
double smoothstep_exp(double t);       // S(t) above
double chi0_radial(double s);
double chi1_radial(double s);

// 1-D mollifier on |t| < radius, center value e^{-1}.
struct Profile1 {
  double radius = 0.25;
  double evaluate(double t) const { return bump_profile(t / radius); }
};

// L^1 mass of the cutoff, by dense tensor quadrature (cached per call site).
double amplitude_l1(const AmplitudeCutoff& amp);

}  // namespace asharp
