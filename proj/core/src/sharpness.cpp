#include "asharp/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "asharp/errors.hpp"
#include "asharp/parallel.hpp"
#include "asharp/quadrature.hpp"

namespace asharp {

std::string witness_case_name(WitnessCase c) {
  switch (c) {
    case WitnessCase::case_i:
      return "case_i";
    case WitnessCase::case_ii:
      return "case_ii";
    case WitnessCase::remark_nonadapted:
      return "remark_nonadapted";
  }
  return "?";
}

WitnessSpec WitnessSpec::make(WitnessCase kind, int j, const Rational& p, const Rational& k,
                              const Order& m, const Order& n, double c_box) {
  if (!(c_box > 0.0) || c_box > 0.01)
    throw DomainError("c_box must lie in (0, 1/100]");
  if (p < Rational(1) || p > Rational(2))
    throw DomainError("p must lie in [1, 2], got " + p.str());
  if (j < 1) throw DomainError("j must be >= 1");
  WitnessSpec s;
  s.kind = kind;
  s.j = j;
  s.p = p;
  s.k = k;
  s.m = m;
  s.n = n;
  s.c_box = c_box;
  switch (kind) {
    case WitnessCase::case_i: {
      if (!n.is_finite() || n.value() < 2)
        throw DomainError("case_i witness needs finite n >= 2");
      Rational rn = n.reciprocal();
      s.s1 = rat(1, 2);
      s.s2 = rn;
      s.sigma1 = rat(1, 2);
      s.sigma2 = Rational(1) - rn;
      break;
    }
    case WitnessCase::case_ii: {
      if (!m.is_finite() || m.value() < 2) throw DomainError("case_ii witness needs finite m >= 2");
      if (!n.is_finite() || n.value() <= 2 * m.value())
        throw DomainError("case_ii witness needs finite n > 2m");
      Rational rn = n.reciprocal();
      s.s1 = rn;
      s.s2 = Rational(m.value()) * rn;
      s.sigma1 = Rational(1) - rn;
      s.sigma2 = Rational(1) - s.s2;
      break;
    }
    case WitnessCase::remark_nonadapted: {
      if (!m.is_finite() || m.value() < 2)
        throw DomainError("remark_nonadapted witness needs finite m >= 2");
      Rational r2m = rat(1, 2 * m.value());
      s.s1 = rat(1, 2);
      s.s2 = r2m;
      s.sigma1 = rat(1, 2);
      s.sigma2 = Rational(1) - r2m;
      break;
    }
  }
  return s;
}

Rational predicted_growth(WitnessCase kind, const Rational& p, const Rational& k,
                          const Order& m, const Order& n) {
  if (p < Rational(1) || p > Rational(2))
    throw DomainError("p must lie in [1, 2], got " + p.str());
  Rational t = Rational(1) / p - rat(1, 2);
  switch (kind) {
    case WitnessCase::case_i:
      return (Rational(5) - rat(2) * n.reciprocal()) * t - k;
    case WitnessCase::case_ii: {
      if (!m.is_finite()) throw DomainError("case_ii growth needs finite m");
      Rational rn = n.reciprocal();
      return (Rational(6) - rat(2) * Rational(m.value() + 1) * rn) * t - rat(1, 2) +
             Rational(m.value()) * rn - k;
    }
    case WitnessCase::remark_nonadapted:
      if (!m.is_finite()) throw DomainError("remark growth needs finite m");
      return (Rational(5) - m.reciprocal()) * t - k;
  }
  throw DomainError("unknown witness case");
}

namespace {

struct Nodes1 {
  std::vector<double> x, w;
};

Nodes1 scaled_nodes(double a, double b, int n) {
  const GlRule& gl = gl_rule(n);
  Nodes1 out;
  out.x.resize(gl.x.size());
  out.w.resize(gl.w.size());
  double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  for (size_t i = 0; i < gl.x.size(); ++i) {
    out.x[i] = mid + hw * gl.x[i];
    out.w[i] = hw * gl.w[i];
  }
  return out;
}

}  // namespace

WitnessIntegrand::WitnessIntegrand(const WitnessSpec& spec, const PhaseOracle& phase,
                                   const SurfaceProfile* profile, int gl_nodes)
    : spec_(spec), phase_(&phase), profile_(profile), gl_(gl_nodes) {
  if (spec.kind == WitnessCase::case_ii) {
    psi_center_ = 1e-4;
    psi_radius_ = 5e-5;
    if (!profile_ || !profile_->exact || !profile_->b_poly)
      throw ProfileError("case_ii witness needs an exact surface profile (psi, b0, b)");
  } else {
    psi_center_ = 1.0;
    psi_radius_ = 0.1;
  }
  auto psi = [&](double l) { return bump_profile((l - psi_center_) / psi_radius_); };
  double i_psi = integrate_gl_1d(psi, psi_center_ - psi_radius_, psi_center_ + psi_radius_, gl_);
  double i_g = integrate_gl_1d([&](double t) { return g_.evaluate(t); }, -g_.radius, g_.radius, gl_);
  if (spec.kind == WitnessCase::case_ii) {
    b_fold0_ = profile_->b_poly->eval(0.0, 0.0);
    fg_mass_ = f_.evaluate(0.0) * i_g * i_psi;
  } else {
    b_fold0_ = 0.0;
    double i_f =
        integrate_gl_1d([&](double t) { return f_.evaluate(t); }, -f_.radius, f_.radius, gl_);
    fg_mass_ = i_f * i_g * i_psi;
  }
}

WitnessValue WitnessIntegrand::eval(const std::array<double, 3>& xt) const {
  int j = spec_.j;
  double c = spec_.c_box;
  double x1 = xt[0] * c * std::exp2(-j * spec_.sigma1.to_double());
  double x2 = xt[1] * c * std::exp2(-j * spec_.sigma2.to_double());
  double x3 = 1.0 + xt[2] * c * std::exp2(-static_cast<double>(j));
  double sc1 = std::exp2(-j * spec_.s1.to_double());
  double sc2 = std::exp2(-j * spec_.s2.to_double());
  double two_j = std::exp2(static_cast<double>(j));

  Nodes1 lam = scaled_nodes(psi_center_ - psi_radius_, psi_center_ + psi_radius_, gl_);
  auto psi = [&](double l) { return bump_profile((l - psi_center_) / psi_radius_); };

  WitnessValue out;
  std::complex<double> acc{0.0, 0.0};
  double maxph = 0.0;

  if (spec_.kind == WitnessCase::case_ii) {
    Nodes1 z1n = scaled_nodes(-g_.radius, g_.radius, gl_);
    for (size_t a = 0; a < z1n.x.size(); ++a) {
      double z1 = z1n.x[a];
      double u = sc1 * z1;
      double psi_u = profile_->psi_series.eval(u);
      double b0_u = profile_->b0_series.eval(u);
      double bfold = profile_->b_poly->eval(u, psi_u);
      if (std::abs(bfold) < 1e-12) continue;  // amplitude support leaves the chart
      double z2c = -x2 / (sc2 * 2.0 * x3 * bfold);
      double amp_z = f_.evaluate(z2c) * g_.evaluate(z1);
      double phi4 = (1.0 - x3) - x1 * z1 * sc1 + x2 * psi_u + b0_u +
                    x2 * x2 * sc2 * sc2 / (4.0 * bfold);
      for (size_t l = 0; l < lam.x.size(); ++l) {
        double theta = two_j * lam.x[l] * phi4;
        maxph = std::max(maxph, std::abs(theta));
        double w = amp_z * psi(lam.x[l]) * z1n.w[a] * lam.w[l];
        if (w != 0.0) acc += std::polar(w, theta);
      }
    }
  } else {
    Nodes1 y1n = scaled_nodes(-f_.radius, f_.radius, gl_);
    Nodes1 y2n = scaled_nodes(-g_.radius, g_.radius, gl_);
    for (size_t a = 0; a < y1n.x.size(); ++a) {
      double y1 = y1n.x[a];
      double fy = f_.evaluate(y1) * y1n.w[a];
      double q2 = sc1 * y1;  // the curved slot of the phase
      for (size_t b = 0; b < y2n.x.size(); ++b) {
        double y2 = y2n.x[b];
        double gy = g_.evaluate(y2) * y2n.w[b];
        double q1 = sc2 * y2;
        double phi_v = phase_->evaluate(q1, q2);
        double base = -sc1 * y1 * x1 - sc2 * y2 * x2 + (x3 - 1.0) - x3 * phi_v;
        double fg = fy * gy;
        for (size_t l = 0; l < lam.x.size(); ++l) {
          double theta = two_j * lam.x[l] * base;
          maxph = std::max(maxph, std::abs(theta));
          double w = fg * psi(lam.x[l]) * lam.w[l];
          if (w != 0.0) acc += std::polar(w, theta);
        }
      }
    }
  }
  out.J = acc;
  out.max_phase = maxph;
  return out;
}

GrowthReport growth_fit(const PhaseOracle& phase, const SurfaceProfile* profile,
                        WitnessCase kind, const Rational& p, const Rational& k, const Order& m,
                        const Order& n, const GrowthOptions& opts) {
  if (opts.j1 - opts.j0 < 3)
    throw InsufficientDataError("growth fit needs a j-range of at least 4 points");
  if (opts.box_samples < 2 || opts.box_samples % 2 == 0)
    throw ConfigError("box_samples must be odd and >= 3 so the box center is sampled");

  GrowthReport rep;
  rep.j0 = opts.j0;
  rep.j1 = opts.j1;
  rep.predicted_exact = predicted_growth(kind, p, k, m, n);
  rep.predicted_exponent = rep.predicted_exact.to_double();

  // exact exponents of the surrogate: amplitude prefactor and box volume
  WitnessSpec probe = WitnessSpec::make(kind, opts.j0, p, k, m, n, opts.c_box);
  Rational amp_e;
  switch (kind) {
    case WitnessCase::case_i:
      amp_e = (rat(5, 2) - n.reciprocal()) / p - k;
      break;
    case WitnessCase::remark_nonadapted:
      amp_e = (rat(5, 2) - rat(1, 2 * m.value())) / p - k;
      break;
    case WitnessCase::case_ii:
      amp_e = Rational(3) / p - Rational(m.value() + 1) * n.reciprocal() / p +
              Rational(m.value()) * n.reciprocal() - rat(1, 2) - k;
      break;
  }
  Rational vol_e = probe.sigma1 + probe.sigma2 + Rational(1);
  Rational inv_pprime = Rational(1) - Rational(1) / p;

  std::vector<std::array<double, 3>> pts;
  for (int a = 0; a < opts.box_samples; ++a)
    for (int b = 0; b < opts.box_samples; ++b)
      for (int c = 0; c < opts.box_samples; ++c) {
        auto coord = [&](int i) { return -1.0 + 2.0 * i / (opts.box_samples - 1.0); };
        pts.push_back({coord(a), coord(b), coord(c)});
      }

  std::vector<double> xs, ys;
  for (int j = opts.j0; j <= opts.j1; ++j) {
    WitnessSpec spec = WitnessSpec::make(kind, j, p, k, m, n, opts.c_box);
    WitnessIntegrand wit(spec, phase, profile, opts.gl_nodes);
    std::vector<WitnessValue> vals = parallel_map<WitnessValue>(
        pts.size(), opts.workers, [&](size_t i) { return wit.eval(pts[i]); });
    GrowthRow row;
    row.j = j;
    double minj = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < vals.size(); ++i) {
      minj = std::min(minj, std::abs(vals[i].J));
      row.max_phase = std::max(row.max_phase, vals[i].max_phase);
      if (pts[i][0] == 0.0 && pts[i][1] == 0.0 && pts[i][2] == 0.0)
        row.center_abs_J = std::abs(vals[i].J);
    }
    row.min_abs_J = minj;
    row.certified = row.max_phase <= opts.phase_budget && minj > 0.0;
    double log2_v = 3.0 * std::log2(2.0 * opts.c_box) - j * vol_e.to_double();
    row.log2_surrogate =
        j * amp_e.to_double() + inv_pprime.to_double() * log2_v + std::log2(minj);
    rep.rows.push_back(row);
    if (row.certified) {
      xs.push_back(j);
      ys.push_back(row.log2_surrogate);
      rep.nonoscillation_max_phase = std::max(rep.nonoscillation_max_phase, row.max_phase);
    } else {
      rep.dropped.push_back(j);
    }
  }

  if (xs.size() < 4)
    throw InsufficientDataError("growth fit kept " + std::to_string(xs.size()) +
                                " certified points; needs >= 4");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double np = static_cast<double>(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  rep.fitted_exponent = (np * sxy - sx * sy) / (np * sxx - sx * sx);
  return rep;
}

}  // namespace asharp
