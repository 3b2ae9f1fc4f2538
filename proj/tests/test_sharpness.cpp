#include <doctest.h>

#include <asharp/corpus.hpp>
#include <asharp/errors.hpp>
#include <asharp/exponents.hpp>
#include <asharp/normal_form.hpp>
#include <asharp/sharpness.hpp>
#include <cmath>

using namespace asharp;

TEST_CASE("witness scaling exponents") {
  WitnessSpec ci = WitnessSpec::make(WitnessCase::case_i, 8, rat(1), rat(2), Order::flat(),
                                     Order::finite(3));
  CHECK(ci.s1 == rat(1, 2));
  CHECK(ci.s2 == rat(1, 3));
  CHECK(ci.sigma1 == rat(1, 2));
  CHECK(ci.sigma2 == rat(2, 3));

  WitnessSpec cii = WitnessSpec::make(WitnessCase::case_ii, 8, rat(1), rat(2), Order::finite(3),
                                      Order::finite(8));
  CHECK(cii.s1 == rat(1, 8));
  CHECK(cii.s2 == rat(3, 8));
  CHECK(cii.sigma1 == rat(7, 8));
  CHECK(cii.sigma2 == rat(5, 8));

  WitnessSpec rm = WitnessSpec::make(WitnessCase::remark_nonadapted, 8, rat(1), rat(2),
                                     Order::finite(3), Order::flat());
  CHECK(rm.s1 == rat(1, 2));
  CHECK(rm.s2 == rat(1, 6));
  CHECK(rm.sigma1 == rat(1, 2));
  CHECK(rm.sigma2 == rat(5, 6));

  // box constant is capped at 1/100
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::case_i, 8, rat(1), rat(2), Order::flat(),
                                    Order::finite(3), 0.02),
                  DomainError);
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::case_i, 8, rat(1), rat(2), Order::flat(),
                                    Order::finite(3), 0.0),
                  DomainError);

  // each construction requires its own finiteness pattern
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::case_i, 8, rat(1), rat(2), Order::flat(),
                                    Order::flat()),
                  DomainError);
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::case_ii, 8, rat(1), rat(2), Order::finite(3),
                                    Order::finite(6)),  // needs n > 2m
                  DomainError);
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::case_ii, 8, rat(1), rat(2), Order::flat(),
                                    Order::finite(8)),
                  DomainError);
  CHECK_THROWS_AS(WitnessSpec::make(WitnessCase::remark_nonadapted, 8, rat(1), rat(2),
                                    Order::flat(), Order::flat()),
                  DomainError);
}

TEST_CASE("predicted growth spot values") {
  CHECK(predicted_growth(WitnessCase::case_i, rat(1), rat(7, 4), Order::flat(),
                         Order::finite(2)) == rat(1, 4));
  CHECK(predicted_growth(WitnessCase::case_i, rat(1), rat(9, 4), Order::flat(),
                         Order::finite(2)) == rat(-1, 4));
  CHECK(predicted_growth(WitnessCase::case_ii, rat(1), rat(2), Order::finite(3),
                         Order::finite(8)) == rat(3, 8));
  CHECK(predicted_growth(WitnessCase::remark_nonadapted, rat(1), rat(2), Order::finite(3),
                         Order::flat()) == rat(1, 3));  // 7/3 - 2
}

TEST_CASE("growth exponent meets the sharp line branch by branch") {
  for (int i = 0; i <= 20; ++i) {
    Rational p = rat(1) + rat(i, 20);

    for (int n : {2, 3, 4, 6}) {
      ExponentQuery q;
      q.p = p;
      q.m = Order::flat();
      q.n = Order::finite(n);
      q.type = SurfaceType::I;
      CHECK(predicted_growth(WitnessCase::case_i, p, rat(0), q.m, q.n) == k_sharp(q).k_p);
    }

    ExponentQuery f38;
    f38.p = p;
    f38.m = Order::finite(3);
    f38.n = Order::finite(8);
    f38.type = SurfaceType::I;
    ExponentResult r = k_sharp(f38);
    CHECK(predicted_growth(WitnessCase::case_ii, p, rat(0), f38.m, f38.n) == r.branch_second);
    CHECK(predicted_growth(WitnessCase::remark_nonadapted, p, rat(0), f38.m, f38.n) ==
          r.branch_first);
  }
}

TEST_CASE("witness integrand concentrates near the box center") {
  PolynomialPhase tail2 = corpus_phase("tail2");
  WitnessSpec spec = WitnessSpec::make(WitnessCase::case_i, 10, rat(1), rat(7, 4), Order::flat(),
                                       Order::finite(2));
  WitnessIntegrand wi(spec, tail2, nullptr, 32);
  CHECK(wi.fg_mass() > 0.0);
  WitnessValue center = wi.eval({0.0, 0.0, 0.0});
  CHECK(std::abs(center.J) >= 0.7 * wi.fg_mass());
  WitnessValue corner = wi.eval({1.0, 1.0, 1.0});
  CHECK(std::isfinite(std::abs(corner.J)));
  CHECK(corner.max_phase >= 0.0);

  PolynomialPhase f38 = corpus_phase("fold3_tail8");
  SurfaceProfile prof = classify_phase(f38);
  REQUIRE(prof.exact);
  WitnessSpec spec2 = WitnessSpec::make(WitnessCase::case_ii, 10, rat(1), rat(2),
                                        Order::finite(3), Order::finite(8));
  WitnessIntegrand wi2(spec2, f38, &prof, 32);
  CHECK(wi2.fg_mass() > 0.0);
  WitnessValue c2 = wi2.eval({0.0, 0.0, 0.0});
  CHECK(std::abs(c2.J) >= 0.7 * wi2.fg_mass());

  // the residual-aware construction needs the exact profile pieces
  CHECK_THROWS_AS(WitnessIntegrand(spec2, f38, nullptr, 32), ProfileError);
}

TEST_CASE("growth fit brackets the predicted rate on the parabola") {
  PolynomialPhase ph = corpus_phase("tail2");
  GrowthOptions opts;
  opts.j0 = 6;
  opts.j1 = 13;
  opts.gl_nodes = 32;

  GrowthReport below = growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(7, 4),
                                  Order::flat(), Order::finite(2), opts);
  CHECK(below.predicted_exact == rat(1, 4));
  CHECK(below.predicted_exponent == doctest::Approx(0.25));
  CHECK(below.fitted_exponent == doctest::Approx(0.25).epsilon(0.12));
  CHECK(below.fitted_exponent > 0.0);
  CHECK(below.nonoscillation_max_phase <= 0.2);
  CHECK(below.rows.size() == 8);

  GrowthReport above = growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(9, 4),
                                  Order::flat(), Order::finite(2), opts);
  CHECK(above.fitted_exponent < 0.0);
}

TEST_CASE("growth fit input validation") {
  PolynomialPhase ph = corpus_phase("tail2");
  GrowthOptions opts;
  opts.j0 = 6;
  opts.j1 = 8;  // three points only
  CHECK_THROWS_AS(growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(7, 4), Order::flat(),
                             Order::finite(2), opts),
                  InsufficientDataError);

  GrowthOptions even;
  even.box_samples = 4;
  CHECK_THROWS_AS(growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(7, 4), Order::flat(),
                             Order::finite(2), even),
                  ConfigError);
}

TEST_CASE("growth fit is worker-count invariant") {
  PolynomialPhase ph = corpus_phase("tail2");
  GrowthOptions a;
  a.j0 = 6;
  a.j1 = 10;
  a.gl_nodes = 24;
  GrowthOptions b = a;
  b.workers = 3;
  GrowthReport ra = growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(7, 4), Order::flat(),
                               Order::finite(2), a);
  GrowthReport rb = growth_fit(ph, nullptr, WitnessCase::case_i, rat(1), rat(7, 4), Order::flat(),
                               Order::finite(2), b);
  CHECK(ra.fitted_exponent == rb.fitted_exponent);
  REQUIRE(ra.rows.size() == rb.rows.size());
  for (size_t i = 0; i < ra.rows.size(); ++i)
    CHECK(ra.rows[i].log2_surrogate == rb.rows[i].log2_surrogate);
}
