#include "asharp/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "asharp/errors.hpp"
#include "asharp/finite_diff.hpp"

namespace asharp {

std::string surface_type_name(SurfaceType t) {
  switch (t) {
    case SurfaceType::I:
      return "I";
    case SurfaceType::II:
      return "II";
    case SurfaceType::III:
      return "III";
  }
  return "?";
}

namespace {

double newton_fold(const PhaseOracle& phase, double x1, double seed, double h_min,
                   double residual_tol, const char* ctx) {
  double x2 = seed;
  for (int it = 0; it < 60; ++it) {
    double g = phase.partial(0, 1, x1, x2);
    double gg = phase.partial(0, 2, x1, x2);
    if (std::abs(gg) < h_min)
      throw FoldTraceError(std::string(ctx) + ": second derivative degenerate at x1=" +
                           std::to_string(x1));
    double step = g / gg;
    x2 -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(x2))) break;
  }
  double res = std::abs(phase.partial(0, 1, x1, x2));
  if (res > residual_tol)
    throw FoldTraceError(std::string(ctx) + ": Newton residual " + std::to_string(res) +
                         " at x1=" + std::to_string(x1));
  return x2;
}

double interp_linear(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (xs.empty()) return 0.0;
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  size_t hi = static_cast<size_t>(it - xs.begin());
  size_t lo = hi - 1;
  double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + t * (ys[hi] - ys[lo]);
}

}  // namespace

double fold_point(const PhaseOracle& phase, double x1, double seed, double residual_tol) {
  double h_min = 1e-6 * std::abs(phase.partial(0, 2, 0.0, 0.0));
  return newton_fold(phase, x1, seed, h_min, residual_tol, "fold_point");
}

FoldTrace trace_fold_curve(const PhaseOracle& phase, const NormalFormOptions& opts) {
  double d22 = phase.partial(0, 2, 0.0, 0.0);
  if (std::abs(d22) < 1e-12)
    throw DegeneracyError("d2^2 phi(0,0) vanishes; no fold direction");
  double h_min = 1e-6 * std::abs(d22);
  double r = 0.5 * std::min(phase.domain().half_width1(), phase.domain().half_width2());
  int npts = opts.grid_points;
  FoldTrace tr;
  tr.x1.resize(static_cast<size_t>(npts));
  tr.psi.resize(static_cast<size_t>(npts));
  int center = npts / 2;
  for (int i = 0; i < npts; ++i)
    tr.x1[static_cast<size_t>(i)] = -r + 2.0 * r * i / (npts - 1.0);
  tr.x1[static_cast<size_t>(center)] = 0.0;

  // continuation outward from the origin keeps Newton on the branch
  double seed = 0.0;
  for (int i = center; i < npts; ++i) {
    double x1 = tr.x1[static_cast<size_t>(i)];
    double p = newton_fold(phase, x1, seed, h_min, opts.newton_residual, "trace_fold_curve");
    tr.psi[static_cast<size_t>(i)] = p;
    seed = p;
    tr.max_residual = std::max(tr.max_residual, std::abs(phase.partial(0, 1, x1, p)));
  }
  seed = tr.psi[static_cast<size_t>(center)];
  for (int i = center - 1; i >= 0; --i) {
    double x1 = tr.x1[static_cast<size_t>(i)];
    double p = newton_fold(phase, x1, seed, h_min, opts.newton_residual, "trace_fold_curve");
    tr.psi[static_cast<size_t>(i)] = p;
    seed = p;
    tr.max_residual = std::max(tr.max_residual, std::abs(phase.partial(0, 1, x1, p)));
  }
  return tr;
}

VanishingReport vanishing_order_exact(const Series& s, int k_max) {
  VanishingReport r;
  int fn = s.first_nonzero();
  if (fn < 0) {
    r.order = Order::flat();
    r.exact = true;
    r.certified_up_to = std::min(k_max, s.trunc_deg());
    r.note = "zero through truncation degree " + std::to_string(s.trunc_deg());
    return r;
  }
  r.order = Order::finite(fn);
  r.leading = s.coeff(fn).to_double();
  r.exact = true;
  r.certified_up_to = fn;
  return r;
}

namespace {

// k-th derivative at 0 with two Richardson levels and a spread estimate;
// rejects contamination from higher-order terms.
struct DerivProbe {
  double value;
  double err;
};

DerivProbe fd_deriv2(const std::function<double(double)>& f, int k, double h) {
  auto raw = [&](double hh) {
    double acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
      double off = (0.5 * k - i) * hh;
      acc += ((i % 2) ? -1.0 : 1.0) * binom * f(off);
      binom = binom * (k - i) / (i + 1);
    }
    return acc / std::pow(hh, k);
  };
  double d0 = raw(h), d1 = raw(0.5 * h), d2 = raw(0.25 * h);
  double r0 = (4.0 * d1 - d0) / 3.0;
  double r1 = (4.0 * d2 - d1) / 3.0;
  double rr = (16.0 * r1 - r0) / 15.0;
  return {rr, std::abs(rr - r1)};
}

}  // namespace

VanishingReport vanishing_order_sampled(const std::function<double(double)>& f, double scale,
                                        double tau_flat, int k_max) {
  if (!(scale > 0.0)) throw DomainError("vanishing_order_sampled needs positive scale");

  // log-spaced probes for the slope cross-check
  double r_max = 0.5 * scale;
  const int nprobe = 29;  // quarter-octave spacing over ~7 octaves
  std::vector<double> px(nprobe), pg(nprobe);
  double gmax_all = 0.0;
  for (int i = 0; i < nprobe; ++i) {
    double x = r_max * std::pow(2.0, -i / 4.0);
    px[static_cast<size_t>(i)] = x;
    double g = std::max(std::abs(f(x)), std::abs(f(-x)));
    pg[static_cast<size_t>(i)] = g;
    gmax_all = std::max(gmax_all, g);
  }

  // noise floor: rounding of O(1)-sized intermediates inside the oracle
  // (solver residuals sit below this for the Newton-based callers)
  const double noise_abs = 16.0 * 2.2204460492503131e-16 * (1.0 + gmax_all);

  VanishingReport rep;
  if (gmax_all < tau_flat) {
    rep.order = Order::flat();
    rep.certified_up_to = k_max;
    rep.note = "all probes below tau_flat; certified only up to k_max";
    return rep;
  }

  // FD sweep: smallest k whose extrapolated derivative clears the noise gates
  double eps = 2.2204460492503131e-16;
  int k_found = -1;
  double leading = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    double h = std::pow(eps, 1.0 / (k + 2)) * scale;
    DerivProbe d = fd_deriv2(f, k, h);
    double mloc = 0.0;
    for (int i = 0; i <= k; ++i) mloc = std::max(mloc, std::abs(f((0.5 * k - i) * h)));
    double noise = (eps * mloc + noise_abs) * std::pow(2.0, k) / std::pow(h, k);
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    double gate = std::max({tau_flat * fact, 10.0 * d.err, 10.0 * noise});
    if (std::abs(d.value) > gate) {
      k_found = k;
      leading = d.value / fact;
      break;
    }
  }

  // slope over the smallest fully-clean quarter-octave decade (9 points)
  double slope = std::numeric_limits<double>::quiet_NaN();
  {
    const int win = 9;
    int best_lo = -1;
    for (int lo = nprobe - win; lo >= 0; --lo) {
      bool clean = true;
      for (int i = lo; i < lo + win; ++i)
        if (!(pg[static_cast<size_t>(i)] > 100.0 * noise_abs)) {
          clean = false;
          break;
        }
      if (clean) {
        best_lo = lo;
        break;
      }
    }
    // prefer the smallest-x clean window; fall back to the largest-x one
    if (best_lo < 0) {
      for (int lo = 0; lo + win <= nprobe; ++lo) {
        bool clean = true;
        for (int i = lo; i < lo + win; ++i)
          if (!(pg[static_cast<size_t>(i)] > 100.0 * noise_abs)) {
            clean = false;
            break;
          }
        if (clean) {
          best_lo = lo;
          break;
        }
      }
    }
    if (best_lo >= 0) {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (int i = best_lo; i < best_lo + win; ++i) {
        double lx = std::log2(px[static_cast<size_t>(i)]);
        double ly = std::log2(pg[static_cast<size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
      }
      slope = (win * sxy - sx * sy) / (win * sxx - sx * sx);
    }
  }

  if (k_found < 0) {
    rep.order = Order::flat();
    rep.certified_up_to = k_max;
    rep.note = "no derivative through order " + std::to_string(k_max) +
               " clears the noise gate; certified only up to k_max";
    if (std::isfinite(slope) && slope < k_max - 0.2) {
      std::ostringstream os;
      os << "vanishing order ambiguous: no derivative candidate through k_max="
         << k_max << " but |f| slope " << slope << " suggests a finite order";
      throw AmbiguityError(os.str());
    }
    return rep;
  }

  if (std::isfinite(slope) && std::abs(slope - k_found) > 0.2) {
    std::ostringstream os;
    os << "vanishing order ambiguous: derivative test says " << k_found << ", |f| slope says "
       << slope;
    throw AmbiguityError(os.str());
  }

  rep.order = Order::finite(k_found);
  rep.leading = leading;
  rep.certified_up_to = k_found;
  if (!std::isfinite(slope)) rep.note = "slope check skipped: probe values at noise floor";
  return rep;
}

namespace {

double eval_b0_at(const PhaseOracle& phase, double x1, double seed, double residual_tol) {
  double p = fold_point(phase, x1, seed, residual_tol);
  return phase.evaluate(x1, p);
}

// off-fold estimator of b via the symmetric quotient, one Richardson level
double b_off_fold(const PhaseOracle& phase, double x1, double psi, double b0, double h) {
  auto quot = [&](double hh) {
    double up = phase.evaluate(x1, psi + hh) - b0;
    double dn = phase.evaluate(x1, psi - hh) - b0;
    return 0.5 * (up + dn) / (hh * hh);
  };
  double c = quot(h), fdbl = quot(0.5 * h);
  return (4.0 * fdbl - c) / 3.0;
}

}  // namespace

void decompose(const PhaseOracle& phase, const FoldTrace& fold, SurfaceProfile& out,
               const NormalFormOptions& opts) {
  out.grid_x1 = fold.x1;
  out.psi_samples = fold.psi;
  out.fold_max_residual = fold.max_residual;
  size_t npts = fold.x1.size();
  out.b0_samples.resize(npts);
  out.b_samples.resize(npts);
  double scale = 0.5 * std::min(phase.domain().half_width1(), phase.domain().half_width2());
  double h = 1e-3 * scale;
  double cont_err = 0.0;
  for (size_t i = 0; i < npts; ++i) {
    double x1 = fold.x1[i], psi = fold.psi[i];
    double b0 = phase.evaluate(x1, psi);
    out.b0_samples[i] = b0;
    double b_on = 0.5 * phase.partial(0, 2, x1, psi);
    out.b_samples[i] = b_on;
    double b_off = b_off_fold(phase, x1, psi, b0, h);
    cont_err = std::max(cont_err, std::abs(b_on - b_off));
  }
  out.b_continuity_err = cont_err;
  if (cont_err > opts.b_continuity_tol)
    throw DecompositionError("b discontinuous across the fold: err=" + std::to_string(cont_err));
  out.b_at_origin = 0.5 * phase.partial(0, 2, 0.0, fold.psi[npts / 2]);

  // reconstruction check on an independent grid
  int g = opts.reconstruction_grid;
  double r = scale;
  double rec_err = 0.0;
  for (int i = 0; i < g; ++i) {
    double x1 = -r + 2.0 * r * i / (g - 1.0);
    double psi = fold_point(phase, x1, interp_linear(fold.x1, fold.psi, x1), opts.newton_residual);
    double b0 = phase.evaluate(x1, psi);
    for (int j = 0; j < g; ++j) {
      double x2 = -r + 2.0 * r * j / (g - 1.0);
      double d = x2 - psi;
      double b;
      if (out.b_poly) {
        b = PolynomialPhase(*out.b_poly).evaluate(x1, x2);
      } else if (std::abs(d) > h) {
        b = (phase.evaluate(x1, x2) - b0) / (d * d);
      } else {
        b = 0.5 * phase.partial(0, 2, x1, psi);
      }
      double recon = b * d * d + b0;
      rec_err = std::max(rec_err, std::abs(phase.evaluate(x1, x2) - recon));
    }
  }
  out.reconstruction_err = rec_err;
  if (rec_err > opts.reconstruction_tol)
    throw DecompositionError("reconstruction mismatch: err=" + std::to_string(rec_err));
}

namespace {

// exact normal form of a polynomial phase via series Newton
void classify_exact(const PolynomialPhase& phase, SurfaceProfile& out,
                    const NormalFormOptions& opts) {
  const Poly2& P = phase.poly();
  if (!P.coeff(0, 0).is_zero() || !P.coeff(1, 0).is_zero() || !P.coeff(0, 1).is_zero())
    throw DomainError("phase must vanish to first order at the origin");
  if (P.coeff(0, 2).is_zero())
    throw DegeneracyError("d2^2 phi(0,0) = 0: no non-vanishing principal curvature");

  int D = opts.series_deg;
  Poly2 d2 = P.partial(0, 1);
  Poly2 d22 = P.partial(0, 2);
  Series t = Series::identity(D);
  Series psi = Series::zero(D);
  for (int it = 0; it < 10; ++it) {
    Series num = d2.eval_series(t, psi);
    if (num.is_zero()) break;
    Series den = d22.eval_series(t, psi);
    psi = psi - num * den.inverse();
  }
  if (!psi.coeff(0).is_zero() || !psi.coeff(1).is_zero())
    throw DomainError("fold curve not tangent to the x1-axis at the origin; adapted coordinates required");

  out.psi_series = psi;

  // try to certify psi as an exact polynomial (enables exact b0, b and an
  // identically-zero residual certificate)
  bool certified = false;
  Series b0(D);
  int last_nz = -1;
  for (int k = 0; k <= psi.trunc_deg(); ++k)
    if (!psi.coeff(k).is_zero()) last_nz = k;
  if (last_nz <= 16) {
    try {
      Series psi_hat = psi;
      Series resid = d2.substitute_x2(psi_hat, 2 * D);
      // substitute_x2 truncates; degree bound of the exact composite
      int true_deg = d2.deg1() + d2.deg2() * std::max(last_nz, 0);
      if (resid.is_zero() && true_deg <= 2 * D) {
        certified = true;
        b0 = P.substitute_x2(psi_hat, 2 * D);
        // exact b via the x2 -> x2 + psi shift
        Poly2 shifted = P.shift_x2(psi_hat);
        Series c1 = shifted.coeff_in_x2(1, 2 * D);
        if (!c1.is_zero()) certified = false;
        if (certified) {
          Poly2 b_u;
          for (const auto& [ij, c] : shifted.terms())
            if (ij.second >= 2) b_u = b_u + mono(ij.first, ij.second - 2, c);
          // back to (x1, x2) coordinates
          Series neg_psi = psi_hat * Rational(-1);
          out.b_poly = b_u.shift_x2(neg_psi);
        }
      }
    } catch (const std::overflow_error&) {
      certified = false;  // coefficient blow-up; fall back to series truncation
    }
  }
  if (!certified) b0 = P.eval_series(t, psi);
  out.b0_series = b0;
  out.exact = certified;

  VanishingReport mrep = vanishing_order_exact(psi, opts.k_max);
  VanishingReport nrep = vanishing_order_exact(b0, opts.k_max);
  out.m = mrep.order;
  out.n = nrep.order;
  if (mrep.order.is_finite()) out.omega0 = mrep.leading;
  if (nrep.order.is_finite()) out.beta0 = nrep.leading;
  out.flat_certified_up_to =
      certified ? opts.series_deg : std::min(opts.k_max, opts.series_deg);
  if (out.m.is_finite() && out.m.value() < 2)
    throw DomainError("fold curve vanishes only to order " + std::to_string(out.m.value()));

  // residual-vanishes certificate: exact when certified, else truncation-level
  out.residual_vanishes = b0.is_zero();
}

void classify_sampled(const PhaseOracle& phase, SurfaceProfile& out,
                      const NormalFormOptions& opts) {
  if (std::abs(phase.evaluate(0.0, 0.0)) > opts.tau_flat ||
      std::abs(phase.partial(1, 0, 0.0, 0.0)) > 1e-8 ||
      std::abs(phase.partial(0, 1, 0.0, 0.0)) > 1e-8)
    throw DomainError("phase must vanish to first order at the origin");
  if (std::abs(phase.partial(0, 2, 0.0, 0.0)) < 1e-8)
    throw DegeneracyError("d2^2 phi(0,0) ~ 0: no non-vanishing principal curvature");

  // probes and FD stencils stay inside the traced fold window (half of this)
  double scale = std::min(phase.domain().half_width1(), phase.domain().half_width2());
  auto psi_fn = [&](double x1) {
    return fold_point(phase, x1, 0.0, opts.newton_residual);
  };
  VanishingReport mrep = vanishing_order_sampled(psi_fn, scale, opts.tau_flat, opts.k_max);
  auto b0_fn = [&](double x1) { return eval_b0_at(phase, x1, 0.0, opts.newton_residual); };
  VanishingReport nrep = vanishing_order_sampled(b0_fn, scale, opts.tau_flat, opts.k_max);
  out.m = mrep.order;
  out.n = nrep.order;
  if (mrep.order.is_finite()) out.omega0 = mrep.leading;
  if (nrep.order.is_finite()) out.beta0 = nrep.leading;
  out.exact = false;
  out.flat_certified_up_to = opts.k_max;
  if (out.m.is_finite() && out.m.value() < 2)
    throw DomainError("fold curve vanishes only to order " + std::to_string(out.m.value()));
}

}  // namespace

SurfaceProfile classify_phase(const PhaseOracle& phase, const NormalFormOptions& opts) {
  SurfaceProfile out;
  if (phase.is_polynomial())
    classify_exact(static_cast<const PolynomialPhase&>(phase), out, opts);
  else
    classify_sampled(phase, out, opts);

  FoldTrace tr = trace_fold_curve(phase, opts);
  decompose(phase, tr, out, opts);

  if (!phase.is_polynomial() || !out.exact) {
    // residual certificate from the tabulation
    double worst = 0.0;
    for (double v : out.b0_samples) worst = std::max(worst, std::abs(v));
    out.residual_vanishes = worst <= opts.tau_flat;
  }

  out.type = out.n.is_finite() ? SurfaceType::I
                               : (out.m.is_finite() ? SurfaceType::II : SurfaceType::III);
  if (out.m.is_flat())
    out.regime_first = true;
  else if (out.n.is_flat())
    out.regime_first = false;
  else
    out.regime_first = 2 * out.m.value() >= out.n.value();
  return out;
}

double profile_psi(const SurfaceProfile& p, double x1) {
  if (p.psi_series.trunc_deg() > 0) return p.psi_series.eval(x1);
  return interp_linear(p.grid_x1, p.psi_samples, x1);
}

double profile_b0(const SurfaceProfile& p, double x1) {
  if (p.b0_series.trunc_deg() > 0) return p.b0_series.eval(x1);
  return interp_linear(p.grid_x1, p.b0_samples, x1);
}

double profile_b(const SurfaceProfile& p, const PhaseOracle& phase, double x1, double x2) {
  if (p.b_poly) return PolynomialPhase(*p.b_poly).evaluate(x1, x2);
  double psi = profile_psi(p, x1);
  double d = x2 - psi;
  double scale = 0.5 * std::min(phase.domain().half_width1(), phase.domain().half_width2());
  if (std::abs(d) > 1e-3 * scale)
    return (phase.evaluate(x1, x2) - profile_b0(p, x1)) / (d * d);
  return 0.5 * phase.partial(0, 2, x1, psi);
}

}  // namespace asharp
