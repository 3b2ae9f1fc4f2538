#include <doctest.h>

#include <asharp/corpus.hpp>
#include <asharp/decay_lab.hpp>
#include <asharp/errors.hpp>
#include <asharp/normal_form.hpp>
#include <cmath>
#include <limits>

using namespace asharp;

TEST_CASE("power-law fit is exact on synthetic data") {
  std::vector<double> vals;
  for (int j = 6; j <= 12; ++j) vals.push_back(std::exp2(-1.75 * j + 0.4));
  DecayFit fit = decay_fit(6, vals);
  CHECK(fit.alpha_hat == doctest::Approx(1.75).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.j0 == 6);
  CHECK(fit.j1 == 12);

  CHECK_THROWS_AS(decay_fit(6, std::vector<double>{1.0, 0.5, 0.25, 0.125}),
                  InsufficientDataError);
  CHECK_THROWS_AS(decay_fit(6, std::vector<double>{1, 1, 1, 0.0, 1}), DataError);
  CHECK_THROWS_AS(decay_fit(6, std::vector<double>{1, 1, -2.0, 1, 1}), DataError);
  CHECK_THROWS_AS(
      decay_fit(6, std::vector<double>{1, 1, std::numeric_limits<double>::quiet_NaN(), 1, 1}),
      DataError);
}

TEST_CASE("row sweep equals one-at-a-time reduced evaluation") {
  PolynomialPhase ph = corpus_phase("tail3");
  AmplitudeCutoff g = make_bump(0.25);
  double z2 = 0.02, lambda = 128.0;
  ReducedPhase red = reduce_in_x2(ph, z2);
  std::vector<double> z1s{-0.1, -0.03, 0.0, 0.07};
  std::vector<double> row = reduced_row(red, g, lambda, z1s);
  REQUIRE(row.size() == z1s.size());
  for (size_t i = 0; i < z1s.size(); ++i) {
    OscSample one = eval_I1(red, g, lambda, {z1s[i], z2}, 0.0);
    CHECK(row[i] == doctest::Approx(std::abs(one.value)).epsilon(1e-9));
  }
}

TEST_CASE("sup sweep sees the first-regime rate on the parabola") {
  PolynomialPhase ph = corpus_phase("tail2");
  SurfaceProfile prof = classify_phase(ph);
  SupDecayOptions opts;
  opts.j0 = 6;
  opts.j1 = 11;
  opts.grid = 21;
  DecayFit fit = sup_decay(ph, prof, opts);
  CHECK(fit.norm_kind == "sup");
  REQUIRE(fit.predicted_alpha.has_value());
  CHECK(*fit.predicted_alpha == doctest::Approx(1.0));
  CHECK(fit.alpha_hat == doctest::Approx(1.0).epsilon(0.12));
  CHECK(fit.r_squared >= 0.95);
  for (size_t i = 1; i < fit.values.size(); ++i) CHECK(fit.values[i] < fit.values[i - 1]);
}

TEST_CASE("lq sweep defaults to the dual exponent q = m + 1") {
  PolynomialPhase ph = corpus_phase("fold3_tail8");
  SurfaceProfile prof = classify_phase(ph);
  LqDecayOptions opts;
  opts.j0 = 6;
  opts.j1 = 10;
  opts.gl_nodes = 24;
  DecayFit fit = lq_decay(ph, prof, opts);
  CHECK(fit.norm_kind == "L4");
  REQUIRE(fit.predicted_alpha.has_value());
  CHECK(*fit.predicted_alpha == doctest::Approx(0.95));  // 1/2 + 2/(m+1) - 0.05
  CHECK(fit.alpha_hat > 0.5);
  for (size_t i = 1; i < fit.values.size(); ++i) CHECK(fit.values[i] < fit.values[i - 1]);

  // explicit q overrides the default and drops the prediction
  LqDecayOptions opts2 = opts;
  opts2.q = rat(2);
  DecayFit f2 = lq_decay(ph, prof, opts2);
  CHECK(f2.norm_kind == "L2");
  CHECK(!f2.predicted_alpha.has_value());

  // flat m has no dual exponent to default to
  PolynomialPhase tail = corpus_phase("tail2");
  SurfaceProfile tprof = classify_phase(tail);
  LqDecayOptions opts3;
  opts3.j0 = 6;
  opts3.j1 = 10;
  CHECK_THROWS_AS(lq_decay(tail, tprof, opts3), DomainError);
}

TEST_CASE("region probe splits the z-plane by the fold geometry") {
  PolynomialPhase ph = corpus_phase("fold3_tail8");
  SurfaceProfile prof = classify_phase(ph);
  RegionProbeOptions opts;
  opts.j0 = 8;
  opts.j1 = 11;
  opts.radial_grid = 6;
  opts.cross_grid = 3;
  auto [inner, outer] = region_probe(ph, prof, opts);
  CHECK(inner.inner);
  CHECK(!outer.inner);
  CHECK(inner.samples > 0);
  CHECK(outer.samples > 0);
  CHECK(inner.ratio_stat > 0.0);
  CHECK(outer.ratio_stat > 0.0);
  CHECK(std::isfinite(inner.ratio_stat));
  CHECK(std::isfinite(outer.ratio_stat));
  REQUIRE(inner.per_j.size() == 4);
  REQUIRE(outer.per_j.size() == 4);
  for (double v : inner.per_j) CHECK(v <= inner.ratio_stat);

  // the bound statistic should be sturdy under delta changes
  RegionProbeOptions lo = opts, hi = opts;
  lo.delta = 0.05;
  hi.delta = 0.2;
  auto [in_lo, out_lo] = region_probe(ph, prof, lo);
  auto [in_hi, out_hi] = region_probe(ph, prof, hi);
  double r = in_lo.ratio_stat / in_hi.ratio_stat;
  CHECK(r < 10.0);
  CHECK(r > 0.1);

  // the split needs the two-scale geometry: finite m < n/2
  PolynomialPhase tail = corpus_phase("tail3");
  SurfaceProfile tprof = classify_phase(tail);
  CHECK_THROWS_AS(region_probe(tail, tprof, opts), DomainError);
  PolynomialPhase cross = corpus_phase("cross2_tail5");
  SurfaceProfile cprof = classify_phase(cross);
  CHECK_THROWS_AS(region_probe(cross, cprof, opts), DomainError);
}

TEST_CASE("worker count never changes the numbers") {
  PolynomialPhase ph = corpus_phase("tail3");
  SurfaceProfile prof = classify_phase(ph);
  SupDecayOptions a;
  a.j0 = 6;
  a.j1 = 10;
  a.grid = 11;
  SupDecayOptions b = a;
  b.workers = 3;
  DecayFit fa = sup_decay(ph, prof, a);
  DecayFit fb = sup_decay(ph, prof, b);
  REQUIRE(fa.values.size() == fb.values.size());
  for (size_t i = 0; i < fa.values.size(); ++i) CHECK(fa.values[i] == fb.values[i]);
  CHECK(fa.alpha_hat == fb.alpha_hat);
}
