#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asharp/amplitude.hpp"
#include "asharp/normal_form.hpp"
#include "asharp/osc_quad.hpp"
#include "asharp/phase.hpp"
#include "asharp/quadrature.hpp"

namespace asharp {

struct DecayFit {
  double alpha_hat = 0.0;  // values ~ lambda^{-alpha_hat}
  double intercept = 0.0;
  double r_squared = 0.0;
  int j0 = 0, j1 = 0;
  std::optional<double> predicted_alpha;
  std::string norm_kind;        // "sup", "L4", ...
  std::vector<double> values;   // per-j norms, j = j0..j1
};

// Least squares on (j, log2 value). values[i] belongs to lambda = 2^{j0+i}.
DecayFit decay_fit(int j0, const std::vector<double>& values);

struct ZBox {
  double z1_min = -0.125, z1_max = 0.125;
  double z2_min = -0.125, z2_max = 0.125;
};

// |I1| for a batch of z1 at one shared (lambda, z2) reduction. Tabulates the
// z1-independent phase/amplitude columns once; the workhorse of the sweeps.
std::vector<double> reduced_row(const ReducedPhase& red, const AmplitudeCutoff& g,
                                double lambda, const std::vector<double>& z1s,
                                const OscOptions& opts = {});

struct SupDecayOptions {
  ZBox zbox;
  int j0 = 6, j1 = 14;
  int grid = 65;  // uniform z-grid per axis
  AmplitudeCutoff amp = make_bump(0.25);
  OscOptions quad;
  int workers = 1;
};

// Per-dyadic-lambda sup of |I| over the z-grid; predicted alpha = 1/2 + 1/n.
DecayFit sup_decay(const PhaseOracle& phase, const SurfaceProfile& profile,
                   const SupDecayOptions& opts = {});

struct LqDecayOptions {
  ZBox zbox;
  int j0 = 6, j1 = 14;
  int gl_nodes = 48;
  std::optional<Rational> q;  // default m + 1
  AmplitudeCutoff amp = make_bump(0.25);
  OscOptions quad;
  double eps_report = 0.05;
  int workers = 1;
};

// Per-lambda L^q norm of I over the z-box; predicted alpha = 1/2 + 2/(m+1)
// minus eps_report when the case_ii hypotheses hold and q = m + 1.
DecayFit lq_decay(const PhaseOracle& phase, const SurfaceProfile& profile,
                  const LqDecayOptions& opts = {});

struct RegionProbe {
  bool inner = true;           // |z2| < delta |z1|^{(n-m)/(n-1)} vs complement
  double delta = 0.1;
  double ratio_stat = 0.0;     // sup of |I1_bare| / model bound
  int samples = 0;
  int j0 = 0;
  std::vector<double> per_j;   // per-dyadic max of the same ratio
};

struct RegionProbeOptions {
  double delta = 0.1;
  int j0 = 8, j1 = 14;
  int radial_grid = 12;   // log-spaced |z1| (inner) / |z2| (outer) per j
  int cross_grid = 5;     // samples across the region in the other variable
  AmplitudeCutoff amp = make_bump(0.25);
  OscOptions quad;
  int workers = 1;
};

// Ratio statistics for the inner/outer van der Corput bounds; needs a
// case_ii profile with finite n.
std::pair<RegionProbe, RegionProbe> region_probe(const PhaseOracle& phase,
                                                 const SurfaceProfile& profile,
                                                 const RegionProbeOptions& opts = {});

}  // namespace asharp
