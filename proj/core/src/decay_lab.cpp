#include "asharp/decay_lab.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "asharp/errors.hpp"
#include "asharp/parallel.hpp"

namespace asharp {

DecayFit decay_fit(int j0, const std::vector<double>& values) {
  int npts = static_cast<int>(values.size());
  if (npts < 5)
    throw InsufficientDataError("decay fit needs at least 5 dyadic points, got " +
                                std::to_string(npts));
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw DataError("decay fit requires positive finite values");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < npts; ++i) {
    double x = j0 + i, y = std::log2(values[static_cast<size_t>(i)]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = npts * sxx - sx * sx;
  double slope = (npts * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / npts;
  double ss_res = 0, ss_tot = 0, ybar = sy / npts;
  for (int i = 0; i < npts; ++i) {
    double x = j0 + i, y = std::log2(values[static_cast<size_t>(i)]);
    double e = y - (slope * x + intercept);
    ss_res += e * e;
    ss_tot += (y - ybar) * (y - ybar);
  }
  DecayFit fit;
  fit.alpha_hat = -slope;
  fit.intercept = intercept;
  fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
  fit.j0 = j0;
  fit.j1 = j0 + npts - 1;
  fit.values = values;
  return fit;
}

std::vector<double> reduced_row(const ReducedPhase& red, const AmplitudeCutoff& g,
                                double lambda, const std::vector<double>& z1s,
                                const OscOptions& opts) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  double r = g.support_radius;
  double lo = std::max(red.x1_min(), -r), hi = std::min(red.x1_max(), r);
  std::vector<double> out(z1s.size(), 0.0);
  if (!(hi > lo)) return out;

  const PhaseOracle& phase = red.phase();
  double sup0 = 0.0;
  for (int i = 0; i < opts.sup_grid; ++i) {
    double x = lo + (hi - lo) * i / (opts.sup_grid - 1.0);
    ReducedPoint pt = red.at(x);
    sup0 = std::max(sup0, std::abs(phase.partial(1, 0, x, pt.x2c)));
  }
  double zmax = 0.0;
  for (double z1 : z1s) zmax = std::max(zmax, std::abs(z1));
  double sup = (sup0 + zmax) * opts.sup_safety;
  double width = opts.c_osc / (1.0 + lambda * sup);
  std::int64_t panels = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil((hi - lo) / width)));
  std::int64_t nodes = panels * opts.nodes_per_panel;
  if (nodes > opts.budget)
    throw ResolutionError("reduced-row budget exceeded at lambda=" + std::to_string(lambda));

  const GlRule& gl = gl_rule(opts.nodes_per_panel);
  std::vector<double> xs(static_cast<size_t>(nodes));
  std::vector<std::complex<double>> base(static_cast<size_t>(nodes));
  size_t idx = 0;
  for (std::int64_t k = 0; k < panels; ++k) {
    double pa = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(panels);
    double pb = lo + (hi - lo) * static_cast<double>(k + 1) / static_cast<double>(panels);
    double mid = 0.5 * (pa + pb), hw = 0.5 * (pb - pa);
    for (int t = 0; t < opts.nodes_per_panel; ++t, ++idx) {
      double x = mid + hw * gl.x[static_cast<size_t>(t)];
      ReducedPoint pt = red.at(x);
      double a = g.evaluate(x, pt.x2c) / std::sqrt(std::abs(pt.hess22));
      xs[idx] = x;
      base[idx] = std::polar(a * hw * gl.w[static_cast<size_t>(t)], lambda * pt.phi1);
    }
  }
  double pref = std::sqrt(2.0 * M_PI / lambda);
  for (size_t zi = 0; zi < z1s.size(); ++zi) {
    std::complex<double> acc{0.0, 0.0};
    double lz = lambda * z1s[zi];
    for (size_t k = 0; k < xs.size(); ++k) acc += base[k] * std::polar(1.0, lz * xs[k]);
    out[zi] = pref * std::abs(acc);
  }
  return out;
}

namespace {

std::vector<double> uniform_grid(double a, double b, int n) {
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = a + (b - a) * i / (n - 1.0);
  return g;
}

// one reduction per z2, shared across the dyadic sweep; nullopt marks a
// column that needs the direct2d fallback
std::vector<std::optional<ReducedPhase>> share_reductions(const PhaseOracle& phase,
                                                          const std::vector<double>& z2s) {
  std::vector<std::optional<ReducedPhase>> reds;
  reds.reserve(z2s.size());
  for (double z2 : z2s) {
    try {
      reds.emplace_back(ReducedPhase(phase, z2));
    } catch (const DegeneracyError&) {
      reds.emplace_back(std::nullopt);
    }
  }
  return reds;
}

}  // namespace

DecayFit sup_decay(const PhaseOracle& phase, const SurfaceProfile& profile,
                   const SupDecayOptions& opts) {
  if (opts.grid < 2) throw ConfigError("sup_decay grid must have >= 2 points per axis");
  std::vector<double> z1s = uniform_grid(opts.zbox.z1_min, opts.zbox.z1_max, opts.grid);
  std::vector<double> z2s = uniform_grid(opts.zbox.z2_min, opts.zbox.z2_max, opts.grid);
  auto reds = share_reductions(phase, z2s);

  std::vector<double> values;
  for (int j = opts.j0; j <= opts.j1; ++j) {
    double lambda = std::ldexp(1.0, j);
    std::vector<double> colmax = parallel_map<double>(
        z2s.size(), opts.workers, [&](size_t i) {
          if (reds[i]) {
            std::vector<double> row = reduced_row(*reds[i], opts.amp, lambda, z1s, opts.quad);
            return *std::max_element(row.begin(), row.end());
          }
          double best = 0.0;
          for (double z1 : z1s) {
            OscSample s = eval_I_direct(phase, opts.amp, lambda, {z1, z2s[i]}, opts.quad);
            best = std::max(best, std::abs(s.value));
          }
          return best;
        });
    values.push_back(*std::max_element(colmax.begin(), colmax.end()));
  }
  DecayFit fit = decay_fit(opts.j0, values);
  fit.predicted_alpha = 0.5 + profile.n.reciprocal().to_double();
  fit.norm_kind = "sup";
  return fit;
}

DecayFit lq_decay(const PhaseOracle& phase, const SurfaceProfile& profile,
                  const LqDecayOptions& opts) {
  Rational q;
  if (opts.q) {
    q = *opts.q;
  } else if (profile.m.is_finite()) {
    q = Rational(profile.m.value() + 1);
  } else {
    throw DomainError("lq_decay needs an explicit q when m is flat");
  }
  if (q < Rational(1)) throw DomainError("q must be >= 1");
  double qd = q.to_double();

  const GlRule& gl = gl_rule(opts.gl_nodes);
  auto scale_nodes = [&](double a, double b) {
    std::vector<std::pair<double, double>> nw(gl.x.size());
    double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    for (size_t i = 0; i < gl.x.size(); ++i) nw[i] = {mid + hw * gl.x[i], hw * gl.w[i]};
    return nw;
  };
  auto n1 = scale_nodes(opts.zbox.z1_min, opts.zbox.z1_max);
  auto n2 = scale_nodes(opts.zbox.z2_min, opts.zbox.z2_max);
  std::vector<double> z1s(n1.size());
  for (size_t i = 0; i < n1.size(); ++i) z1s[i] = n1[i].first;
  std::vector<double> z2s(n2.size());
  for (size_t i = 0; i < n2.size(); ++i) z2s[i] = n2[i].first;
  auto reds = share_reductions(phase, z2s);

  std::vector<double> values;
  for (int j = opts.j0; j <= opts.j1; ++j) {
    double lambda = std::ldexp(1.0, j);
    std::vector<double> colsum = parallel_map<double>(
        z2s.size(), opts.workers, [&](size_t i) {
          std::vector<double> row;
          if (reds[i]) {
            row = reduced_row(*reds[i], opts.amp, lambda, z1s, opts.quad);
          } else {
            row.reserve(z1s.size());
            for (double z1 : z1s)
              row.push_back(
                  std::abs(eval_I_direct(phase, opts.amp, lambda, {z1, z2s[i]}, opts.quad).value));
          }
          double acc = 0.0;
          for (size_t k = 0; k < row.size(); ++k) acc += n1[k].second * std::pow(row[k], qd);
          return acc;
        });
    double norm_q = 0.0;
    for (size_t i = 0; i < colsum.size(); ++i) norm_q += n2[i].second * colsum[i];
    values.push_back(std::pow(norm_q, 1.0 / qd));
  }
  DecayFit fit = decay_fit(opts.j0, values);
  fit.norm_kind = "L" + q.str();
  bool case_ii = profile.m.is_finite() && profile.m.value() >= 3 && !profile.regime_first;
  if (case_ii && q == Rational(profile.m.value() + 1))
    fit.predicted_alpha = 0.5 + 2.0 / (profile.m.value() + 1.0) - opts.eps_report;
  return fit;
}

std::pair<RegionProbe, RegionProbe> region_probe(const PhaseOracle& phase,
                                                 const SurfaceProfile& profile,
                                                 const RegionProbeOptions& opts) {
  if (!(opts.delta > 0.0)) throw DomainError("delta must be positive");
  if (!profile.m.is_finite() || !profile.n.is_finite() || profile.regime_first)
    throw DomainError("region probe needs 2m < n with finite m, n");
  double m = static_cast<double>(profile.m.value());
  double n = static_cast<double>(profile.n.value());
  double lam_e = 2.0 / (m + 1.0);
  double inner_e = (2.0 * n - m - 1.0) / ((n - 1.0) * (m + 1.0));
  double outer_e = (2.0 * n - m - 1.0) / ((n - m) * (m + 1.0));
  double bnd_e = (n - m) / (n - 1.0);
  double zcap = 0.125;

  struct Sample {
    double z1, z2, weight_scale;  // weight_scale: |z1|^e or |z2|^e
  };

  RegionProbe inner, outer;
  inner.inner = true;
  outer.inner = false;
  inner.delta = outer.delta = opts.delta;
  inner.j0 = outer.j0 = opts.j0;

  for (int j = opts.j0; j <= opts.j1; ++j) {
    double lambda = std::ldexp(1.0, j);
    std::vector<Sample> in_s, out_s;
    double z1_floor = std::pow(2.0, -j * (n - 1.0) / n);
    double z2_floor = std::pow(2.0, -j * (n - m) / n);
    for (int i = 0; i < opts.radial_grid; ++i) {
      double f = opts.radial_grid == 1
                     ? 0.0
                     : static_cast<double>(i) / (opts.radial_grid - 1.0);
      double r1 = z1_floor * std::pow(zcap / z1_floor, f);
      double bound = opts.delta * std::pow(r1, bnd_e);
      for (int s = -1; s <= 1; s += 2) {
        double z1 = s * r1;
        for (int c = 0; c < opts.cross_grid; ++c) {
          double fc = opts.cross_grid == 1 ? 0.0 : -0.9 + 1.8 * c / (opts.cross_grid - 1.0);
          in_s.push_back({z1, fc * bound, std::pow(r1, inner_e)});
        }
      }
      double r2 = z2_floor * std::pow(zcap / z2_floor, f);
      double cap1 = std::min(zcap, std::pow(r2 / opts.delta, 1.0 / bnd_e));
      for (int s = -1; s <= 1; s += 2) {
        double z2 = s * r2;
        for (int c = 0; c < opts.cross_grid; ++c) {
          double fc = opts.cross_grid == 1 ? 0.0 : -0.9 + 1.8 * c / (opts.cross_grid - 1.0);
          out_s.push_back({fc * cap1, z2, std::pow(r2, outer_e)});
        }
      }
    }
    auto run = [&](const std::vector<Sample>& samples) {
      std::vector<double> stats = parallel_map<double>(
          samples.size(), opts.workers, [&](size_t i) {
            const Sample& s = samples[i];
            ReducedPhase red(phase, s.z2);
            std::vector<double> row = reduced_row(red, opts.amp, lambda, {s.z1}, opts.quad);
            double bare = row[0] * std::sqrt(lambda / (2.0 * M_PI));
            return bare * std::pow(lambda, lam_e) * s.weight_scale;
          });
      double best = 0.0;
      for (double v : stats) best = std::max(best, v);
      return best;
    };
    inner.per_j.push_back(run(in_s));
    outer.per_j.push_back(run(out_s));
    inner.samples += static_cast<int>(in_s.size());
    outer.samples += static_cast<int>(out_s.size());
  }
  inner.ratio_stat = *std::max_element(inner.per_j.begin(), inner.per_j.end());
  outer.ratio_stat = *std::max_element(outer.per_j.begin(), outer.per_j.end());
  return {inner, outer};
}

}  // namespace asharp
