#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asharp/phase.hpp"
#include "asharp/rational.hpp"
#include "asharp/series.hpp"

namespace asharp {

enum class SurfaceType { I, II, III };
std::string surface_type_name(SurfaceType t);

struct NormalFormOptions {
  int grid_points = 201;        // fold-trace grid on [-r, r]
  double newton_residual = 1e-12;
  double b_continuity_tol = 1e-8;
  double reconstruction_tol = 1e-8;
  int reconstruction_grid = 41;
  double tau_flat = 1e-10;
  int k_max = 12;               // FLAT certification cap
  int series_deg = 48;          // working truncation for exact series
};

struct FoldTrace {
  std::vector<double> x1, psi;
  double max_residual = 0.0;
};

// Newton continuation for d2 phi(x1, psi(x1)) = 0 through psi(0) = 0.
FoldTrace trace_fold_curve(const PhaseOracle& phase, const NormalFormOptions& opts = {});

// Solve at one abscissa (seeded Newton); used by quadrature hot paths too.
double fold_point(const PhaseOracle& phase, double x1, double seed, double residual_tol);

struct VanishingReport {
  Order order = Order::flat();
  double leading = 0.0;      // coefficient of x^order (when finite)
  bool exact = false;
  int certified_up_to = 0;   // FLAT is certified only up to this order
  std::string note;
};

VanishingReport vanishing_order_exact(const Series& s, int k_max = 12);
// Sampled path: finite differences at 0 with noise-aware thresholds,
// cross-checked against the log-log slope of |f|. AmbiguityError when the
// two disagree.
VanishingReport vanishing_order_sampled(const std::function<double(double)>& f, double scale,
                                        double tau_flat = 1e-10, int k_max = 12);

struct SurfaceProfile {
  Order m = Order::flat();
  Order n = Order::flat();
  SurfaceType type = SurfaceType::III;
  bool residual_vanishes = false;  // b0 identically zero (meaningful for type II)
  bool regime_first = false;       // 2m >= n
  double b_at_origin = 0.0;
  std::optional<double> omega0;    // leading coefficient of psi (m finite)
  std::optional<double> beta0;     // leading coefficient of b0 (n finite)
  bool exact = false;              // exact series/polynomial pipeline
  int flat_certified_up_to = 0;

  Series psi_series{0};            // exact path only
  Series b0_series{0};
  std::optional<Poly2> b_poly;     // exact b when psi is a polynomial

  std::vector<double> grid_x1, psi_samples, b0_samples, b_samples;
  double fold_max_residual = 0.0;
  double b_continuity_err = 0.0;
  double reconstruction_err = 0.0;
};

// b0/b extraction on the traced fold; checks b continuity across the fold
// and the reconstruction identity. Fills the numeric fields of the profile.
void decompose(const PhaseOracle& phase, const FoldTrace& fold, SurfaceProfile& out,
               const NormalFormOptions& opts = {});

// Full pipeline. Polynomial phases get the exact route (series Newton for
// psi, exact b0, certified orders); black-box phases go through sampling.
SurfaceProfile classify_phase(const PhaseOracle& phase, const NormalFormOptions& opts = {});

// Evaluate the profile's fold curve / residual term at a point (exact series
// when available, tabulated samples otherwise).
double profile_psi(const SurfaceProfile& p, double x1);
double profile_b0(const SurfaceProfile& p, double x1);
double profile_b(const SurfaceProfile& p, const PhaseOracle& phase, double x1, double x2);

}  // namespace asharp
