#include <doctest.h>

#include <asharp/corpus.hpp>
#include <asharp/errors.hpp>
#include <asharp/normal_form.hpp>
#include <asharp/phase.hpp>
#include <cmath>
#include <string>

using namespace asharp;

namespace {

struct Expected {
  const char* name;
  Order m, n;
  SurfaceType type;
  bool residual_vanishes;
  bool regime_first;
};

const Expected kTable[] = {
    {"tail2", Order::flat(), Order::finite(2), SurfaceType::I, false, true},
    {"tail3", Order::flat(), Order::finite(3), SurfaceType::I, false, true},
    {"tail4", Order::flat(), Order::finite(4), SurfaceType::I, false, true},
    {"tail6", Order::flat(), Order::finite(6), SurfaceType::I, false, true},
    {"fold2", Order::finite(2), Order::flat(), SurfaceType::II, true, false},
    {"fold3", Order::finite(3), Order::flat(), SurfaceType::II, true, false},
    {"fold4", Order::finite(4), Order::flat(), SurfaceType::II, true, false},
    {"fold2_tail8", Order::finite(2), Order::finite(8), SurfaceType::I, false, false},
    {"fold3_tail7", Order::finite(3), Order::finite(7), SurfaceType::I, false, false},
    {"fold3_tail8", Order::finite(3), Order::finite(8), SurfaceType::I, false, false},
    {"cross2_tail5", Order::finite(2), Order::finite(4), SurfaceType::I, false, true},
    {"cross3_tail4", Order::finite(3), Order::finite(4), SurfaceType::I, false, true},
};

}  // namespace

TEST_CASE("corpus classification table") {
  for (const Expected& e : kTable) {
    INFO("phase ", e.name);
    PolynomialPhase ph = corpus_phase(e.name);
    SurfaceProfile s = classify_phase(ph);
    CHECK(s.m == e.m);
    CHECK(s.n == e.n);
    CHECK(s.type == e.type);
    CHECK(s.residual_vanishes == e.residual_vanishes);
    CHECK(s.regime_first == e.regime_first);
    CHECK(s.exact);
    CHECK(s.reconstruction_err <= 1e-8);
    CHECK(s.b_continuity_err <= 1e-8);
    CHECK(s.fold_max_residual <= 1e-12);
    CHECK(s.b_at_origin == doctest::Approx(1.0));
  }
}

TEST_CASE("leading coefficients of the fold curve and residual") {
  SurfaceProfile f3 = classify_phase(corpus_phase("fold3"));
  REQUIRE(f3.omega0.has_value());
  CHECK(*f3.omega0 == doctest::Approx(1.0));
  CHECK(!f3.beta0.has_value());

  SurfaceProfile c25 = classify_phase(corpus_phase("cross2_tail5"));
  REQUIRE(c25.omega0.has_value());
  REQUIRE(c25.beta0.has_value());
  CHECK(*c25.omega0 == doctest::Approx(-0.5));   // psi = -x1^2/2 + ...
  CHECK(*c25.beta0 == doctest::Approx(-0.25));   // b0 = -x1^4/4 + x1^5

  SurfaceProfile t3 = classify_phase(corpus_phase("tail3"));
  REQUIRE(t3.beta0.has_value());
  CHECK(*t3.beta0 == doctest::Approx(1.0));
  CHECK(!t3.omega0.has_value());
}

TEST_CASE("profile evaluators match the formulas") {
  PolynomialPhase f3t8 = corpus_phase("fold3_tail8");
  SurfaceProfile s = classify_phase(f3t8);
  CHECK(profile_psi(s, 0.2) == doctest::Approx(0.008).epsilon(1e-12));
  CHECK(profile_b0(s, 0.2) == doctest::Approx(std::pow(0.2, 8)).epsilon(1e-10));
  CHECK(profile_b(s, f3t8, 0.13, 0.21) == doctest::Approx(1.0).epsilon(1e-10));

  PolynomialPhase c25 = corpus_phase("cross2_tail5");
  SurfaceProfile sc = classify_phase(c25);
  CHECK(profile_psi(sc, 0.1) == doctest::Approx(-0.005).epsilon(1e-12));
  CHECK(profile_b0(sc, 0.1) == doctest::Approx(-1.5e-5).epsilon(1e-10));
}

TEST_CASE("classification is invariant under phase scaling") {
  for (const char* name : {"tail3", "fold3_tail8", "cross2_tail5"}) {
    SurfaceProfile ref = classify_phase(corpus_phase(name));
    for (auto c : {rat(1, 3), rat(2), rat(10)}) {
      PolynomialPhase scaled(corpus_phase(name).poly().scaled(c));
      SurfaceProfile s = classify_phase(scaled);
      INFO(name, " scaled by ", c.str());
      CHECK(s.m == ref.m);
      CHECK(s.n == ref.n);
      CHECK(s.type == ref.type);
      CHECK(s.residual_vanishes == ref.residual_vanishes);
    }
  }
}

TEST_CASE("black-box route reproduces the exact classification") {
  for (const char* name : {"tail3", "fold3", "fold3_tail8", "cross2_tail5"}) {
    PolynomialPhase ref = corpus_phase(name);
    SurfaceProfile want = classify_phase(ref);
    FnPhase fn([&](double x, double y) { return ref.evaluate(x, y); }, ref.domain());
    SurfaceProfile got = classify_phase(fn);
    INFO("phase ", name);
    CHECK(!got.exact);
    CHECK(got.m == want.m);
    CHECK(got.n == want.n);
    CHECK(got.type == want.type);
    CHECK(got.residual_vanishes == want.residual_vanishes);
    CHECK(got.reconstruction_err <= 1e-8);
    if (want.omega0) CHECK(*got.omega0 == doctest::Approx(*want.omega0).epsilon(1e-4));
    if (want.beta0) CHECK(*got.beta0 == doctest::Approx(*want.beta0).epsilon(1e-3));
  }
}

TEST_CASE("exact vanishing order") {
  Series x = Series::identity(12);
  Series f = x * x * x + x * x * x * x;  // x^3(1+x)
  VanishingReport r = vanishing_order_exact(f);
  CHECK(r.order == Order::finite(3));
  CHECK(r.leading == doctest::Approx(1.0));
  CHECK(r.exact);

  Series g = (x * x * x * x) * rat(1, 4) - x * x * x * x * x;
  VanishingReport r2 = vanishing_order_exact(g);
  CHECK(r2.order == Order::finite(4));
  CHECK(r2.leading == doctest::Approx(0.25));

  VanishingReport rz = vanishing_order_exact(Series::zero(12));
  CHECK(rz.order.is_flat());
  CHECK(rz.certified_up_to >= 12);
}

TEST_CASE("sampled vanishing order") {
  auto cubic = [](double x) { return x * x * x * (1.0 + x); };
  VanishingReport r = vanishing_order_sampled(cubic, 1.0);
  CHECK(r.order == Order::finite(3));
  CHECK(r.leading == doctest::Approx(1.0).epsilon(1e-4));

  auto sin_minus_x = [](double x) { return std::sin(x) - x; };
  VanishingReport r3 = vanishing_order_sampled(sin_minus_x, 1.0);
  CHECK(r3.order == Order::finite(3));
  CHECK(r3.leading == doctest::Approx(-1.0 / 6.0).epsilon(1e-3));

  auto pure8 = [](double x) { return std::pow(x, 8); };
  VanishingReport r8 = vanishing_order_sampled(pure8, 1.0);
  CHECK(r8.order == Order::finite(8));

  auto gauss_flat = [](double x) { return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x)); };
  VanishingReport rf = vanishing_order_sampled(gauss_flat, 1.0);
  CHECK(rf.order.is_flat());
  CHECK(rf.certified_up_to >= 1);

  // |x|^3 has integer-order second derivative data but slope 3: must refuse
  auto abs3 = [](double x) { return std::abs(x * x * x); };
  CHECK_THROWS_AS(vanishing_order_sampled(abs3, 1.0), AmbiguityError);
}

TEST_CASE("degenerate and ill-posed phases are rejected") {
  // nonzero gradient at the origin
  PolynomialPhase grad(mono(0, 2) + mono(1, 0));
  CHECK_THROWS_AS(classify_phase(grad), DomainError);

  // no quadratic term in x2
  PolynomialPhase deg(mono(2, 0));
  CHECK_THROWS_AS(classify_phase(deg), DegeneracyError);

  // fold curve not tangent to the x1-axis
  PolynomialPhase tilt(mono(0, 2) + mono(1, 1, rat(-2)) + mono(2, 0));  // (x2 - x1)^2
  CHECK_THROWS_AS(classify_phase(tilt), DomainError);
}

TEST_CASE("fold trace hits machine-level residuals") {
  PolynomialPhase ph = corpus_phase("fold3_tail8");
  FoldTrace tr = trace_fold_curve(ph);
  CHECK(tr.x1.size() == 201);
  CHECK(tr.max_residual <= 1e-12);
  // psi(x1) = x1^3 along the traced window
  for (size_t i = 0; i < tr.x1.size(); i += 25)
    CHECK(tr.psi[i] == doctest::Approx(std::pow(tr.x1[i], 3)).epsilon(1e-10));
}
