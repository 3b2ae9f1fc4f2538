#pragma once

#include <functional>

namespace asharp {

struct FdResult {
  double value;
  double err_est;
};

// Central finite difference for the (g1,g2) mixed partial at (x,y), step
// h = eps^(1/(order+2)) * scale, one Richardson level. err_est compares the
// extrapolated value against the finer raw estimate.
FdResult fd_partial(const std::function<double(double, double)>& f, int g1, int g2, double x,
                    double y, double scale);

// 1-D k-th derivative at x of f, same stepping scheme.
FdResult fd_derivative(const std::function<double(double)>& f, int k, double x, double scale);

}  // namespace asharp
