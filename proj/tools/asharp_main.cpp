// asharp: batch front end for the oscillatory-integral laboratory.
// Every run writes artifacts under --out-dir: a config echo, a JSON summary,
// per-command CSV tables, and (optionally) SVG plots. Outputs are
// byte-deterministic for a fixed config, independent of --workers.

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <asharp/amplitude.hpp>
#include <asharp/corpus.hpp>
#include <asharp/csv.hpp>
#include <asharp/decay_lab.hpp>
#include <asharp/errors.hpp>
#include <asharp/exponents.hpp>
#include <asharp/normal_form.hpp>
#include <asharp/osc_quad.hpp>
#include <asharp/phase_io.hpp>
#include <asharp/quadrature.hpp>
#include <asharp/rational.hpp>
#include <asharp/sharpness.hpp>
#include <asharp/svg.hpp>

using nlohmann::ordered_json;
using namespace asharp;

namespace {

Rational parse_rat(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw ConfigError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_rat_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t a = item.find_first_not_of(" \t");
    size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(parse_rat(item.substr(a, b - a + 1), flag));
  }
  if (out.empty()) throw ConfigError(flag + ": empty list");
  return out;
}

PolynomialPhase load_phase(const std::string& source) {
  if (corpus_has(source)) return corpus_phase(source);
  return PolynomialPhase(load_phase_file(source));
}

ordered_json order_json(const Order& o) {
  if (o.is_flat()) return "flat";
  return o.value();
}

ordered_json profile_json(const SurfaceProfile& s) {
  ordered_json j;
  j["m"] = order_json(s.m);
  j["n"] = order_json(s.n);
  j["type"] = surface_type_name(s.type);
  j["residual_vanishes"] = s.residual_vanishes;
  j["regime"] = s.regime_first ? "first" : "second";
  j["b_at_origin"] = s.b_at_origin;
  j["omega0"] = s.omega0 ? ordered_json(*s.omega0) : ordered_json(nullptr);
  j["beta0"] = s.beta0 ? ordered_json(*s.beta0) : ordered_json(nullptr);
  j["exact"] = s.exact;
  j["flat_certified_up_to"] = s.flat_certified_up_to;
  j["fold_max_residual"] = s.fold_max_residual;
  j["b_continuity_err"] = s.b_continuity_err;
  j["reconstruction_err"] = s.reconstruction_err;
  return j;
}

struct Tool {
  // common knobs
  std::string phase_source;
  std::string out_dir;
  int workers = 1;
  bool emit_plots = false;
  int j0 = 6, j1 = 14;
  std::int64_t budget = std::int64_t(1) << 22;

  // per-command knobs
  std::string p_text = "1";
  std::string p_grid_text;
  std::string q_text;
  std::string delta_text = "0.1";
  std::string k_offsets_text = "-1/4,1/4";
  int sup_grid = 65;
  int gl_nodes = 48;
  double zbox_radius = 0.125;
  double c_box = 0.01;
  double decay_tol = 0.05;
  double lq_floor = 0.90;
  double growth_tol = 0.15;

  std::filesystem::path out(const std::string& name) const {
    return std::filesystem::path(out_dir) / name;
  }

  void check_range() const {
    if (j0 < 4 || j1 > 20 || j0 > j1)
      throw ConfigError("j-range [" + std::to_string(j0) + ", " + std::to_string(j1) +
                        "] must sit inside [4, 20]");
  }

  ZBox zbox() const {
    if (!(zbox_radius > 0.0)) throw ConfigError("zbox radius must be positive");
    return ZBox{-zbox_radius, zbox_radius, -zbox_radius, zbox_radius};
  }

  OscOptions quad() const {
    OscOptions q;
    q.budget = budget;
    return q;
  }
};

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw DataError("cannot write " + p.string());
  os << text;
}

void write_summary(const Tool& t, ordered_json& summary, bool pass) {
  summary["pass"] = pass;
  write_file(t.out("summary.json"), summary.dump(2) + "\n");
}

std::string fit_footer(const DecayFit& fit) {
  std::ostringstream os;
  os << "# fit: alpha_hat=" << g17(fit.alpha_hat) << " intercept=" << g17(fit.intercept)
     << " r2=" << g17(fit.r_squared);
  if (fit.predicted_alpha) os << " predicted=" << g17(*fit.predicted_alpha);
  os << " norm=" << fit.norm_kind << "\n";
  return os.str();
}

ordered_json fit_json(const DecayFit& fit) {
  ordered_json j;
  j["alpha_hat"] = fit.alpha_hat;
  j["intercept"] = fit.intercept;
  j["r_squared"] = fit.r_squared;
  j["j0"] = fit.j0;
  j["j1"] = fit.j1;
  j["predicted_alpha"] = fit.predicted_alpha ? ordered_json(*fit.predicted_alpha)
                                             : ordered_json(nullptr);
  j["norm"] = fit.norm_kind;
  return j;
}

void decay_plot(const Tool& t, const std::string& fname, const std::string& title,
                const DecayFit& fit) {
  SvgSeries data;
  data.label = fit.norm_kind + " data";
  for (size_t i = 0; i < fit.values.size(); ++i)
    data.pts.emplace_back(fit.j0 + static_cast<double>(i), std::log2(fit.values[i]));
  std::vector<SvgSeries> series{data};
  if (fit.predicted_alpha) {
    SvgSeries pred;
    pred.label = "predicted slope";
    pred.color = "#d14343";
    pred.dashed = true;
    double y0 = std::log2(fit.values.front());
    for (size_t i = 0; i < fit.values.size(); ++i)
      pred.pts.emplace_back(fit.j0 + static_cast<double>(i),
                            y0 - *fit.predicted_alpha * static_cast<double>(i));
    series.push_back(pred);
  }
  std::ostringstream os;
  write_line_svg(os, title, "log2 lambda", "log2 norm", series);
  write_file(t.out(fname), os.str());
}

int run_classify(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  std::ostringstream csv;
  csv_begin(csv, "asharp-profile/1", {"x1", "psi", "b0"});
  for (size_t i = 0; i < s.grid_x1.size(); ++i)
    csv_row(csv, {g17(s.grid_x1[i]), g17(s.psi_samples[i]), g17(s.b0_samples[i])});
  write_file(t.out("profile.csv"), csv.str());

  bool pass = s.reconstruction_err <= 1e-8 && s.b_continuity_err <= 1e-8;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

int run_exponent(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  std::vector<Rational> grid;
  if (!t.p_grid_text.empty()) {
    grid = parse_rat_list(t.p_grid_text, "--p-grid");
  } else {
    for (int i = 0; i <= 100; ++i) grid.push_back(rat(1) + rat(i, 100));
  }

  std::optional<Rational> cross = branch_crossover(s.m, s.n);
  std::ostringstream csv;
  csv_begin(csv, "asharp-exponent/1",
            {"p", "k_sharp", "branch", "upper", "gap", "covered", "crossover"});
  bool covered_all = true;
  std::string reason;
  for (const Rational& p : grid) {
    ExponentQuery q = ExponentQuery::from_profile(s, p);
    ExponentResult r = k_sharp(q);
    covered_all = covered_all && r.covered;
    if (!r.covered && reason.empty()) reason = r.reason;
    bool at_cross = cross && *cross == p;
    csv_row(csv, {p.str(), r.k_p.str(), branch_name(r.binding), r.upper_bound.str(),
                  (r.upper_bound - r.k_p).str(), r.covered ? "1" : "0", at_cross ? "1" : "0"});
  }
  write_file(t.out("exponent.csv"), csv.str());

  summary["p_grid_size"] = grid.size();
  summary["crossover"] = cross ? ordered_json(cross->str()) : ordered_json(nullptr);
  summary["covered_all"] = covered_all;
  summary["uncovered_reason"] = reason.empty() ? ordered_json(nullptr) : ordered_json(reason);
  write_summary(t, summary, true);
  return 0;
}

int run_decay(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  t.check_range();
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  SupDecayOptions opts;
  opts.zbox = t.zbox();
  opts.j0 = t.j0;
  opts.j1 = t.j1;
  opts.grid = t.sup_grid;
  opts.quad = t.quad();
  opts.workers = t.workers;
  DecayFit fit = sup_decay(phase, s, opts);

  std::ostringstream csv;
  csv_begin(csv, "asharp-decay/1", {"j", "lambda", "norm"});
  for (size_t i = 0; i < fit.values.size(); ++i) {
    int j = fit.j0 + static_cast<int>(i);
    csv_row(csv, {std::to_string(j), g17(std::exp2(j)), g17(fit.values[i])});
  }
  csv << fit_footer(fit);
  write_file(t.out("decay.csv"), csv.str());
  if (t.emit_plots) decay_plot(t, "decay.svg", "sup-norm decay", fit);

  summary["fit"] = fit_json(fit);
  bool pass = fit.predicted_alpha && std::abs(fit.alpha_hat - *fit.predicted_alpha) <= t.decay_tol &&
              fit.r_squared >= 0.98;
  summary["decay_tol"] = t.decay_tol;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

int run_lq_decay(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  t.check_range();
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  LqDecayOptions opts;
  opts.zbox = t.zbox();
  opts.j0 = t.j0;
  opts.j1 = t.j1;
  opts.gl_nodes = t.gl_nodes;
  opts.quad = t.quad();
  opts.workers = t.workers;
  if (!t.q_text.empty()) opts.q = parse_rat(t.q_text, "--q");
  DecayFit fit = lq_decay(phase, s, opts);

  std::ostringstream csv;
  csv_begin(csv, "asharp-lq-decay/1", {"j", "lambda", "norm"});
  for (size_t i = 0; i < fit.values.size(); ++i) {
    int j = fit.j0 + static_cast<int>(i);
    csv_row(csv, {std::to_string(j), g17(std::exp2(j)), g17(fit.values[i])});
  }
  csv << fit_footer(fit);
  write_file(t.out("lq_decay.csv"), csv.str());
  if (t.emit_plots) decay_plot(t, "lq_decay.svg", fit.norm_kind + "-norm decay", fit);

  summary["fit"] = fit_json(fit);
  summary["lq_floor"] = t.lq_floor;
  bool pass = !fit.predicted_alpha || fit.alpha_hat >= t.lq_floor;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

int run_region(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  t.check_range();
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  std::vector<Rational> deltas = parse_rat_list(t.delta_text, "--delta-list");
  std::ostringstream csv;
  csv_begin(csv, "asharp-region/1", {"delta", "region", "j", "ratio_max"});
  ordered_json rows = ordered_json::array();
  bool pass = true;
  for (const Rational& dr : deltas) {
    RegionProbeOptions opts;
    opts.delta = dr.to_double();
    opts.j0 = t.j0;
    opts.j1 = t.j1;
    opts.quad = t.quad();
    opts.workers = t.workers;
    auto [inner, outer] = region_probe(phase, s, opts);
    for (const RegionProbe* rp : {&inner, &outer}) {
      for (size_t i = 0; i < rp->per_j.size(); ++i)
        csv_row(csv, {dr.str(), rp->inner ? "inner" : "outer",
                      std::to_string(rp->j0 + static_cast<int>(i)), g17(rp->per_j[i])});
      ordered_json rj;
      rj["delta"] = dr.str();
      rj["region"] = rp->inner ? "inner" : "outer";
      rj["ratio_stat"] = rp->ratio_stat;
      rj["samples"] = rp->samples;
      double lo = rp->per_j.empty() ? 0.0 : rp->per_j.front(), hi = lo;
      for (double v : rp->per_j) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      rj["per_j_spread"] = lo > 0.0 ? hi / lo : 0.0;
      rows.push_back(rj);
      if (rp->inner) {
        bool ok = std::isfinite(rp->ratio_stat) && rp->ratio_stat > 0.0 && lo > 0.0 &&
                  hi / lo < 2.0;
        pass = pass && ok;
      }
    }
  }
  write_file(t.out("region.csv"), csv.str());
  summary["regions"] = rows;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

int run_sharpness(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  t.check_range();
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);

  Rational p = parse_rat(t.p_text, "--p");
  std::vector<Rational> offsets = parse_rat_list(t.k_offsets_text, "--k-offsets");

  ExponentQuery q = ExponentQuery::from_profile(s, p);
  ExponentResult base = k_sharp(q);
  summary["p"] = p.str();
  summary["k_sharp"] = base.k_p.str();

  std::ostringstream csv;
  csv_begin(csv, "asharp-growth/1",
            {"k_offset", "k", "j", "certified", "max_phase", "min_abs_J", "log2_surrogate"});
  ordered_json fits = ordered_json::array();
  bool pass = true;
  std::vector<std::string> plots;
  for (size_t oi = 0; oi < offsets.size(); ++oi) {
    const Rational& off = offsets[oi];
    Rational k = base.k_p + off;

    WitnessCase kind;
    if (base.regime == Regime::case_i) {
      kind = WitnessCase::case_i;
    } else if (base.binding == Branch::first) {
      kind = WitnessCase::remark_nonadapted;
    } else {
      kind = WitnessCase::case_ii;  // second branch and ties
    }

    GrowthOptions opts;
    opts.j0 = t.j0;
    opts.j1 = t.j1;
    opts.c_box = t.c_box;
    opts.gl_nodes = t.gl_nodes;
    opts.workers = t.workers;
    GrowthReport rep = growth_fit(phase, s.exact ? &s : nullptr, kind, p, k, s.m, s.n, opts);

    for (const GrowthRow& row : rep.rows)
      csv_row(csv, {off.str(), k.str(), std::to_string(row.j), row.certified ? "1" : "0",
                    g17(row.max_phase), g17(row.min_abs_J), g17(row.log2_surrogate)});

    ordered_json fj;
    fj["k_offset"] = off.str();
    fj["k"] = k.str();
    fj["witness"] = witness_case_name(kind);
    fj["fitted_exponent"] = rep.fitted_exponent;
    fj["predicted_exponent"] = rep.predicted_exponent;
    fj["predicted_exact"] = rep.predicted_exact.str();
    fj["nonoscillation_max_phase"] = rep.nonoscillation_max_phase;
    fj["dropped_j"] = rep.dropped;
    fits.push_back(fj);

    bool ok = rep.nonoscillation_max_phase <= 0.2 &&
              std::abs(rep.fitted_exponent - rep.predicted_exponent) <= t.growth_tol;
    if (std::abs(rep.predicted_exponent) >= 0.15)
      ok = ok && (rep.fitted_exponent > 0) == (rep.predicted_exponent > 0);
    pass = pass && ok;

    if (t.emit_plots) {
      SvgSeries data;
      data.label = "log2 surrogate";
      for (const GrowthRow& row : rep.rows)
        if (row.certified) data.pts.emplace_back(row.j, row.log2_surrogate);
      SvgSeries pred;
      pred.label = "predicted slope";
      pred.color = "#d14343";
      pred.dashed = true;
      if (!data.pts.empty())
        for (const auto& [x, y] : data.pts)
          pred.pts.emplace_back(x, data.pts.front().second +
                                       rep.predicted_exponent * (x - data.pts.front().first));
      std::ostringstream os;
      write_line_svg(os, "witness growth, k = " + k.str(), "j", "log2 surrogate",
                     {data, pred});
      std::string fname = "growth_" + std::to_string(oi) + ".svg";
      write_file(t.out(fname), os.str());
      plots.push_back(fname);
    }
  }
  write_file(t.out("growth.csv"), csv.str());
  summary["fits"] = fits;
  summary["growth_tol"] = t.growth_tol;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

int run_vdc(const Tool& t, const PolynomialPhase& phase, ordered_json& summary) {
  t.check_range();
  SurfaceProfile s = classify_phase(phase);
  summary["profile"] = profile_json(s);
  if (!s.n.is_finite())
    throw DomainError("the derivative-order probe needs a finite residual order n");
  int k = static_cast<int>(s.n.value());

  Profile1 amp1{0.25};
  auto f = [&](double x) { return profile_b0(s, x); };
  auto a = [&](double x) { return amp1.evaluate(x); };

  std::ostringstream csv;
  csv_begin(csv, "asharp-vdc/1", {"j", "lambda", "scaled_value"});
  double worst = 0.0;
  for (int j = t.j0; j <= t.j1; ++j) {
    double lambda = std::exp2(j);
    double v = vdc_probe_1d({lambda}, f, k, a, -0.25, 0.25, t.quad());
    worst = std::max(worst, v);
    csv_row(csv, {std::to_string(j), g17(lambda), g17(v)});
  }
  write_file(t.out("vdc.csv"), csv.str());

  summary["derivative_order"] = k;
  summary["max_scaled_value"] = worst;
  bool pass = std::isfinite(worst) && worst > 0.0;
  write_summary(t, summary, pass);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for sharp convolution exponents"};
  app.require_subcommand(1);
  Tool t;

  app.set_config("--config", "", "read options from an INI file");

  // machinery knobs are deliberately not part of the config echo
  app.add_option("--phase", t.phase_source, "corpus name or phase coefficient file")
      ->required();
  app.add_option("--out-dir", t.out_dir, "artifact directory")->required()->configurable(false);
  app.add_option("--workers", t.workers, "worker threads")->configurable(false);
  app.add_flag("--emit-plots", t.emit_plots, "write SVG plots");
  app.add_option("--j0", t.j0, "first dyadic level");
  app.add_option("--j1", t.j1, "last dyadic level");
  app.add_option("--budget", t.budget, "node budget per oscillatory integral");

  CLI::App* classify = app.add_subcommand("classify", "normal-form profile of the phase");
  CLI::App* exponent = app.add_subcommand("exponent", "sharp exponent table over a p-grid");
  exponent->add_option("--p-grid", t.p_grid_text, "comma-separated rationals in [1,2]");
  CLI::App* decay = app.add_subcommand("decay", "sup-norm decay sweep");
  decay->add_option("--grid", t.sup_grid, "z-grid points per axis");
  decay->add_option("--zbox", t.zbox_radius, "z-box half width");
  CLI::App* lq = app.add_subcommand("lq-decay", "L^q-norm decay sweep");
  lq->add_option("--q", t.q_text, "norm exponent (default m+1)");
  lq->add_option("--gl-nodes", t.gl_nodes, "GL nodes per z-axis");
  lq->add_option("--zbox", t.zbox_radius, "z-box half width");
  lq->add_option("--lq-floor", t.lq_floor, "pass floor for the fitted exponent");
  CLI::App* region = app.add_subcommand("region", "two-region ratio statistics");
  region->add_option("--delta-list", t.delta_text, "comma-separated region constants");
  CLI::App* sharp = app.add_subcommand("sharpness", "witness-family growth fits");
  sharp->add_option("--p", t.p_text, "Lebesgue exponent p");
  sharp->add_option("--k-offsets", t.k_offsets_text, "offsets from k_sharp, comma-separated");
  sharp->add_option("--gl-nodes", t.gl_nodes, "GL nodes per integrand axis");
  sharp->add_option("--box-c", t.c_box, "witness box constant");
  sharp->add_option("--growth-tol", t.growth_tol, "pass tolerance on the fitted exponent");
  CLI::App* vdc = app.add_subcommand("vdc", "derivative-order decay probe on the residual");

  decay->add_option("--decay-tol", t.decay_tol, "pass tolerance on the fitted exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(errc::config);
  }

  try {
    std::filesystem::create_directories(t.out_dir);
    PolynomialPhase phase = load_phase(t.phase_source);

    ordered_json summary;
    summary["schema"] = "asharp-summary/1";
    summary["phase"] = t.phase_source;

    std::string echo = app.config_to_str(true, false);

    int rc = 0;
    if (classify->parsed()) {
      summary["command"] = "classify";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_classify(t, phase, summary);
    } else if (exponent->parsed()) {
      summary["command"] = "exponent";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_exponent(t, phase, summary);
    } else if (decay->parsed()) {
      summary["command"] = "decay";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_decay(t, phase, summary);
    } else if (lq->parsed()) {
      summary["command"] = "lq-decay";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_lq_decay(t, phase, summary);
    } else if (region->parsed()) {
      summary["command"] = "region";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_region(t, phase, summary);
    } else if (sharp->parsed()) {
      summary["command"] = "sharpness";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_sharpness(t, phase, summary);
    } else if (vdc->parsed()) {
      summary["command"] = "vdc";
      write_file(t.out("config_echo.ini"), echo);
      rc = run_vdc(t, phase, summary);
    }
    return rc;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(errc::numerical);
  }
}
