#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "asharp/amplitude.hpp"
#include "asharp/normal_form.hpp"
#include "asharp/phase.hpp"
#include "asharp/rational.hpp"

namespace asharp {

enum class WitnessCase { case_i, case_ii, remark_nonadapted };
std::string witness_case_name(WitnessCase c);

// One member of the lower-bound witness family: dyadic index j, exponent pair
// (p, k), and the derived frequency scalings (s1, s2) / spatial box exponents
// (sigma1, sigma2).
struct WitnessSpec {
  WitnessCase kind = WitnessCase::case_i;
  int j = 6;
  Rational p;
  Rational k;
  Order m = Order::flat();
  Order n = Order::flat();
  double c_box = 0.01;  // box half-widths c_box * 2^{-j sigma}, in (0, 1/100]

  Rational s1, s2, sigma1, sigma2;

  static WitnessSpec make(WitnessCase kind, int j, const Rational& p, const Rational& k,
                          const Order& m, const Order& n, double c_box = 0.01);
};

// Growth exponent of the norm surrogate along the witness family; positive
// exactly when k sits below the matching branch of the sharp threshold.
Rational predicted_growth(WitnessCase kind, const Rational& p, const Rational& k,
                          const Order& m, const Order& n);

struct WitnessValue {
  std::complex<double> J{0.0, 0.0};  // reduced integral at one box point
  double max_phase = 0.0;            // max |2^j lambda Phi| over the support
};

// The final-form reduced integrand of the respective lower-bound argument,
// evaluable at normalized box points. Immutable; shareable across threads.
class WitnessIntegrand {
public:
  // case_ii needs an exact profile (fold-curve series and residual pieces);
  // profile may be null for case_i / remark_nonadapted.
  WitnessIntegrand(const WitnessSpec& spec, const PhaseOracle& phase,
                   const SurfaceProfile* profile, int gl_nodes = 48);

  // xt in [-1,1]^3: x1 = xt[0] c 2^{-j s1g}, x2 = xt[1] c 2^{-j s2g},
  // x3 = 1 + xt[2] c 2^{-j}.
  WitnessValue eval(const std::array<double, 3>& xt) const;

  double fg_mass() const { return fg_mass_; }  // phase-free center value
  const WitnessSpec& spec() const { return spec_; }

private:
  WitnessSpec spec_;
  const PhaseOracle* phase_;
  const SurfaceProfile* profile_;
  int gl_;
  double fg_mass_;
  Profile1 f_{0.25}, g_{0.25};
  double psi_center_, psi_radius_;
  double b_fold0_;
};

struct GrowthRow {
  int j = 0;
  bool certified = false;
  double max_phase = 0.0;
  double min_abs_J = 0.0;
  double center_abs_J = 0.0;
  double log2_surrogate = 0.0;
};

struct GrowthReport {
  double fitted_exponent = 0.0;
  double predicted_exponent = 0.0;
  Rational predicted_exact;
  int j0 = 0, j1 = 0;
  double nonoscillation_max_phase = 0.0;  // max over certified rows
  std::vector<GrowthRow> rows;            // one per attempted j
  std::vector<int> dropped;               // js failing the certificate
};

struct GrowthOptions {
  int j0 = 6, j1 = 14;
  double c_box = 0.01;
  int gl_nodes = 48;
  int box_samples = 3;         // per axis, including the faces
  double phase_budget = 0.2;   // non-oscillation certificate
  int workers = 1;
};

// Sweep the witness family over j, certify non-oscillation, fit the surrogate
// growth. Uncertified j are dropped and reported; fewer than 4 kept points is
// an insufficient-data error.
GrowthReport growth_fit(const PhaseOracle& phase, const SurfaceProfile* profile,
                        WitnessCase kind, const Rational& p, const Rational& k, const Order& m,
                        const Order& n, const GrowthOptions& opts = {});

}  // namespace asharp
