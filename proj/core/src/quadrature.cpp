#include "asharp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "asharp/errors.hpp"

namespace asharp {

namespace {

GlRule compute_gl(int n) {
  // Newton from Chebyshev initial guesses; standard Golub-Welsch-free route.
  GlRule r;
  r.x.resize(static_cast<size_t>(n));
  r.w.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[static_cast<size_t>(n - 1 - i)] = x;
    r.w[static_cast<size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

std::map<int, GlRule> g_rules;
std::mutex g_rules_mu;

}  // namespace

const GlRule& gl_rule(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be >= 1");
  std::lock_guard<std::mutex> lk(g_rules_mu);
  auto it = g_rules.find(n);
  if (it == g_rules.end()) it = g_rules.emplace(n, compute_gl(n)).first;
  return it->second;
}

namespace {

std::complex<double> panel_pass_1d(const std::function<double(double)>& phase,
                                   const std::function<double(double)>& amp, double lambda,
                                   double a, double b, std::int64_t panels, const GlRule& rule) {
  double w = (b - a) / static_cast<double>(panels);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t p = 0; p < panels; ++p) {
    double lo = a + w * static_cast<double>(p);
    std::complex<double> cell{0.0, 0.0};
    for (size_t k = 0; k < rule.x.size(); ++k) {
      double x = lo + 0.5 * w * (rule.x[k] + 1.0);
      double av = amp(x);
      if (av == 0.0) continue;
      double ph = lambda * phase(x);
      cell += rule.w[k] * av * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    acc += cell * (0.5 * w);
  }
  return acc;
}

double sample_sup_1d(const std::function<double(double)>& g, double a, double b, int pts,
                     double safety) {
  double sup = 0.0;
  for (int i = 0; i < pts; ++i) {
    double x = a + (b - a) * i / (pts - 1.0);
    sup = std::max(sup, std::abs(g(x)));
  }
  return sup * safety;
}

}  // namespace

OscResult osc_integral_1d_bounded(const std::function<double(double)>& phase,
                                  const std::function<double(double)>& amp, double lambda,
                                  double a, double b, double grad_sup, const OscOptions& opts) {
  if (!(b > a)) throw DomainError("empty integration interval");
  double width = opts.c_osc / (1.0 + lambda * grad_sup);
  auto panels = static_cast<std::int64_t>(std::ceil((b - a) / width));
  if (panels < 1) panels = 1;
  const GlRule& rule = gl_rule(opts.nodes_per_panel);
  std::int64_t fine_nodes = panels * opts.nodes_per_panel;
  std::int64_t coarse_panels = (panels + 1) / 2;
  std::int64_t total = fine_nodes + (opts.error_estimate ? coarse_panels * opts.nodes_per_panel : 0);
  if (total > opts.budget)
    throw ResolutionError("oscillatory quadrature budget exceeded at lambda=" +
                          std::to_string(lambda) + " (needs " + std::to_string(total) +
                          " nodes, budget " + std::to_string(opts.budget) + ")");
  OscResult r;
  r.value = panel_pass_1d(phase, amp, lambda, a, b, panels, rule);
  r.panels = panels;
  r.nodes = fine_nodes;
  if (opts.error_estimate) {
    std::complex<double> coarse = panel_pass_1d(phase, amp, lambda, a, b, coarse_panels, rule);
    r.err_est = std::abs(r.value - coarse);
    r.nodes = total;
  }
  return r;
}

OscResult osc_integral_1d(const std::function<double(double)>& phase,
                          const std::function<double(double)>& amp, double lambda, double a,
                          double b, const OscOptions& opts) {
  double sup = sample_sup_1d(
      [&](double x) {
        double h = 1e-6 * (b - a);
        return (phase(x + h) - phase(x - h)) / (2.0 * h);
      },
      a + 1e-9 * (b - a), b - 1e-9 * (b - a), opts.sup_grid, opts.sup_safety);
  return osc_integral_1d_bounded(phase, amp, lambda, a, b, sup, opts);
}

namespace {

std::complex<double> panel_pass_2d(const std::function<double(double, double)>& phase,
                                   const std::function<double(double, double)>& amp,
                                   double lambda, double a1, double b1, double a2, double b2,
                                   std::int64_t p1, std::int64_t p2, const GlRule& rule) {
  double w1 = (b1 - a1) / static_cast<double>(p1);
  double w2 = (b2 - a2) / static_cast<double>(p2);
  size_t nn = rule.x.size();
  std::vector<double> off1(nn), off2(nn);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t i = 0; i < p1; ++i) {
    double lo1 = a1 + w1 * static_cast<double>(i);
    for (size_t k = 0; k < nn; ++k) off1[k] = lo1 + 0.5 * w1 * (rule.x[k] + 1.0);
    for (std::int64_t j = 0; j < p2; ++j) {
      double lo2 = a2 + w2 * static_cast<double>(j);
      for (size_t k = 0; k < nn; ++k) off2[k] = lo2 + 0.5 * w2 * (rule.x[k] + 1.0);
      std::complex<double> cell{0.0, 0.0};
      for (size_t ka = 0; ka < nn; ++ka) {
        double x = off1[ka];
        std::complex<double> row{0.0, 0.0};
        for (size_t kb = 0; kb < nn; ++kb) {
          double y = off2[kb];
          double av = amp(x, y);
          if (av == 0.0) continue;
          double ph = lambda * phase(x, y);
          row += rule.w[kb] * av * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        cell += rule.w[ka] * row;
      }
      acc += cell * (0.25 * w1 * w2);
    }
  }
  return acc;
}

}  // namespace

OscResult osc_integral_2d(const std::function<double(double, double)>& phase,
                          const std::function<double(double, double)>& amp, double lambda,
                          double a1, double b1, double a2, double b2, const OscOptions& opts) {
  if (!(b1 > a1) || !(b2 > a2)) throw DomainError("empty integration box");
  int g = opts.sup_grid;
  double sup1 = 0.0, sup2 = 0.0;
  double h1 = 1e-6 * (b1 - a1), h2 = 1e-6 * (b2 - a2);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      double x = a1 + (b1 - a1) * (i + 0.5) / g;
      double y = a2 + (b2 - a2) * (j + 0.5) / g;
      sup1 = std::max(sup1, std::abs(phase(x + h1, y) - phase(x - h1, y)) / (2.0 * h1));
      sup2 = std::max(sup2, std::abs(phase(x, y + h2) - phase(x, y - h2)) / (2.0 * h2));
    }
  sup1 *= opts.sup_safety;
  sup2 *= opts.sup_safety;

  double width1 = opts.c_osc / (1.0 + lambda * sup1);
  double width2 = opts.c_osc / (1.0 + lambda * sup2);
  auto p1 = static_cast<std::int64_t>(std::ceil((b1 - a1) / width1));
  auto p2 = static_cast<std::int64_t>(std::ceil((b2 - a2) / width2));
  if (p1 < 1) p1 = 1;
  if (p2 < 1) p2 = 1;
  std::int64_t npp = std::int64_t(opts.nodes_per_panel) * opts.nodes_per_panel;
  std::int64_t cp1 = (p1 + 1) / 2, cp2 = (p2 + 1) / 2;
  std::int64_t total = p1 * p2 * npp + (opts.error_estimate ? cp1 * cp2 * npp : 0);
  if (total > opts.budget)
    throw ResolutionError("oscillatory quadrature budget exceeded at lambda=" +
                          std::to_string(lambda) + " (needs " + std::to_string(total) +
                          " nodes, budget " + std::to_string(opts.budget) + ")");

  const GlRule& rule = gl_rule(opts.nodes_per_panel);
  OscResult r;
  r.value = panel_pass_2d(phase, amp, lambda, a1, b1, a2, b2, p1, p2, rule);
  r.panels = p1 * p2;
  r.nodes = p1 * p2 * npp;
  if (opts.error_estimate) {
    std::complex<double> coarse = panel_pass_2d(phase, amp, lambda, a1, b1, a2, b2, cp1, cp2, rule);
    r.err_est = std::abs(r.value - coarse);
    r.nodes = total;
  }
  return r;
}

double integrate_gl_1d(const std::function<double(double)>& f, double a, double b, int n) {
  const GlRule& rule = gl_rule(n);
  double acc = 0.0;
  for (size_t k = 0; k < rule.x.size(); ++k)
    acc += rule.w[k] * f(a + 0.5 * (b - a) * (rule.x[k] + 1.0));
  return acc * 0.5 * (b - a);
}

double integrate_gl_2d(const std::function<double(double, double)>& f, double a1, double b1,
                       double a2, double b2, int n) {
  const GlRule& rule = gl_rule(n);
  double acc = 0.0;
  for (size_t a = 0; a < rule.x.size(); ++a) {
    double x = a1 + 0.5 * (b1 - a1) * (rule.x[a] + 1.0);
    double row = 0.0;
    for (size_t b = 0; b < rule.x.size(); ++b) {
      double y = a2 + 0.5 * (b2 - a2) * (rule.x[b] + 1.0);
      row += rule.w[b] * f(x, y);
    }
    acc += rule.w[a] * row;
  }
  return acc * 0.25 * (b1 - a1) * (b2 - a2);
}

}  // namespace asharp
