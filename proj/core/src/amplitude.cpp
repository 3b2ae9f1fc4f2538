#include "asharp/amplitude.hpp"

#include <cmath>

#include "asharp/errors.hpp"
#include "asharp/quadrature.hpp"

namespace asharp {

double bump_profile(double s) {
  double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s2));
}

double smoothstep_exp(double t) {
  auto B = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
  double a = B(t), b = B(1.0 - t);
  if (a == 0.0 && b == 0.0) return t > 0.5 ? 1.0 : 0.0;  // unreachable for t in (0,1)
  return a / (a + b);
}

double chi0_radial(double s) {
  s = std::abs(s);
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  return smoothstep_exp(2.0 - s);
}

double chi1_radial(double s) { return chi0_radial(s) - chi0_radial(2.0 * s); }

double AmplitudeCutoff::evaluate(double x1, double x2) const {
  double r = std::sqrt(x1 * x1 + x2 * x2);
  switch (kind) {
    case CutoffKind::bump:
      return bump_profile(r / support_radius);
    case CutoffKind::chi0:
      return chi0_radial(r);
    case CutoffKind::chi1:
      return chi1_radial(r);
  }
  return 0.0;
}

std::string AmplitudeCutoff::kind_name() const {
  switch (kind) {
    case CutoffKind::bump:
      return "bump";
    case CutoffKind::chi0:
      return "chi0";
    case CutoffKind::chi1:
      return "chi1";
  }
  return "?";
}

AmplitudeCutoff make_bump(double radius) {
  if (!(radius > 0.0)) throw DomainError("bump radius must be positive");
  return AmplitudeCutoff{CutoffKind::bump, radius};
}

AmplitudeCutoff make_chi0() { return AmplitudeCutoff{CutoffKind::chi0, 2.0}; }
AmplitudeCutoff make_chi1() { return AmplitudeCutoff{CutoffKind::chi1, 2.0}; }

double amplitude_l1(const AmplitudeCutoff& amp) {
  double r = amp.support_radius;
  const GlRule& rule = gl_rule(64);
  // 8x8 cells, GL-64 each: plenty for these C-infinity profiles
  int cells = 8;
  double h = 2.0 * r / cells;
  double acc = 0.0;
  for (int cx = 0; cx < cells; ++cx)
    for (int cy = 0; cy < cells; ++cy) {
      double ax = -r + cx * h, ay = -r + cy * h;
      for (size_t a = 0; a < rule.x.size(); ++a)
        for (size_t b = 0; b < rule.x.size(); ++b) {
          double x = ax + 0.5 * h * (rule.x[a] + 1.0);
          double y = ay + 0.5 * h * (rule.x[b] + 1.0);
          acc += rule.w[a] * rule.w[b] * std::abs(amp.evaluate(x, y));
        }
    }
  return acc * 0.25 * h * h;
}

}  // namespace asharp
