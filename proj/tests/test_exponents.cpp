#include <doctest.h>

#include <asharp/corpus.hpp>
#include <asharp/errors.hpp>
#include <asharp/exponents.hpp>
#include <asharp/normal_form.hpp>

using namespace asharp;

namespace {

ExponentQuery q_tail(int n, const Rational& p) {
  ExponentQuery q;
  q.p = p;
  q.m = Order::flat();
  q.n = Order::finite(n);
  q.type = SurfaceType::I;
  return q;
}

ExponentQuery q_fold(int m, int n, const Rational& p) {
  ExponentQuery q;
  q.p = p;
  q.m = Order::finite(m);
  q.n = Order::finite(n);
  q.type = SurfaceType::I;
  return q;
}

ExponentQuery q_flat_residual(int m, const Rational& p, bool vanishes) {
  ExponentQuery q;
  q.p = p;
  q.m = Order::finite(m);
  q.n = Order::flat();
  q.type = SurfaceType::II;
  q.residual_vanishes = vanishes;
  return q;
}

}  // namespace

TEST_CASE("first-regime values are exact") {
  // n = 2 at p = 1: k = (5 - 1) * 1/2 = 2
  ExponentResult r = k_sharp(q_tail(2, rat(1)));
  CHECK(r.k_p == rat(2));
  CHECK(r.regime == Regime::case_i);
  CHECK(r.covered);

  CHECK(k_sharp(q_tail(3, rat(1))).k_p == rat(13, 6));
  CHECK(k_sharp(q_tail(4, rat(1))).k_p == rat(9, 4));
  CHECK(k_sharp(q_tail(6, rat(1))).k_p == rat(7, 3));
  CHECK(k_sharp(q_tail(4, rat(4, 3))).k_p == rat(9, 8));

  // finite m with 2m >= n stays in the first regime
  ExponentResult c = k_sharp(q_fold(2, 4, rat(1)));
  CHECK(c.regime == Regime::case_i);
  CHECK(c.k_p == rat(9, 4));
}

TEST_CASE("second-regime branches, binding, and the flat tail") {
  // m = 3, n flat, residual vanishing certificate: second branch binds at p=1
  ExponentResult r = k_sharp(q_flat_residual(3, rat(1), true));
  CHECK(r.regime == Regime::case_ii);
  CHECK(r.k_p == rat(5, 2));
  CHECK(r.binding == Branch::second);
  CHECK(r.branch_first == rat(7, 3));
  CHECK(r.branch_second == rat(5, 2));
  CHECK(r.covered);

  // m = 3, n = 8 at p = 1: max{7/3, 19/8} = 19/8
  ExponentResult s = k_sharp(q_fold(3, 8, rat(1)));
  CHECK(s.regime == Regime::case_ii);
  CHECK(s.branch_first == rat(7, 3));
  CHECK(s.branch_second == rat(19, 8));
  CHECK(s.k_p == rat(19, 8));
  CHECK(s.binding == Branch::second);

  // same surface at p = 2: both branches nonpositive, k floors at 0
  ExponentResult z = k_sharp(q_fold(3, 8, rat(2)));
  CHECK(z.k_p == rat(0));
  CHECK(z.branch_first == rat(0));
  CHECK(z.branch_second == rat(-1, 8));
  CHECK(z.binding == Branch::first);

  // p = 2 flattens the first regime too
  CHECK(k_sharp(q_tail(3, rat(2))).k_p == rat(0));
  CHECK(k_sharp(q_flat_residual(4, rat(2), true)).k_p == rat(0));
}

TEST_CASE("coverage gaps carry reasons but still report the formula value") {
  // m = 2 with 2m < n sits outside the covered range
  ExponentResult r = k_sharp(q_fold(2, 8, rat(1)));
  CHECK(!r.covered);
  CHECK(r.reason == "m = 2 outside the covered range (needs m >= 3)");
  CHECK(r.k_p == rat(19, 8));  // max{(5 - 1/2)/2, (6 - 3/4)/2 - 1/2 + 1/4} = max{9/4, 19/8}

  // flat residual order without the vanishing certificate
  ExponentResult s = k_sharp(q_flat_residual(3, rat(1), false));
  CHECK(!s.covered);
  CHECK(s.reason == "flat residual order without a vanishing certificate");
  CHECK(s.k_p == rat(5, 2));
}

TEST_CASE("regime boundary 2m = n is continuous") {
  for (int m : {2, 3, 4, 5}) {
    int n = 2 * m;
    for (auto p : {rat(1), rat(8, 7), rat(4, 3), rat(3, 2), rat(2)}) {
      Rational t = Rational(1) / p - rat(1, 2);
      Rational from_case_i = k_sharp(q_fold(m, n, p)).k_p;
      // both second-regime branches collapse to the same line at n = 2m
      Rational first = (rat(5) - rat(1, m)) * t;
      Rational second = (rat(6) - rat(2 * (m + 1), n)) * t - rat(1, 2) + rat(m, n);
      CHECK(from_case_i == rat_max(first, rat(0)));
      CHECK(first == second);
    }
  }
}

TEST_CASE("k_sharp decreases along the p-grid") {
  for (auto mk : {q_tail(3, rat(1)), q_fold(3, 8, rat(1)), q_flat_residual(3, rat(1), true)}) {
    Rational prev = rat(100);
    for (int i = 0; i <= 100; ++i) {
      ExponentQuery q = mk;
      q.p = rat(1) + rat(i, 100);
      Rational k = k_sharp(q).k_p;
      CHECK(k <= prev);
      CHECK(k >= rat(0));
      prev = k;
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(k_sharp(q_tail(3, rat(1, 2))), DomainError);   // p < 1
  CHECK_THROWS_AS(k_sharp(q_tail(3, rat(5, 2))), DomainError);   // p > 2
  CHECK_THROWS_AS(k_sharp(q_tail(1, rat(1))), DomainError);      // n < 2
  CHECK_THROWS_AS(k_sharp(q_fold(1, 8, rat(1))), DomainError);   // m < 2

  // type inconsistent with the orders
  ExponentQuery bad = q_fold(3, 8, rat(1));
  bad.type = SurfaceType::II;
  CHECK_THROWS_AS(k_sharp(bad), DomainError);

  ExponentQuery bad2;
  bad2.p = rat(1);
  bad2.m = Order::flat();
  bad2.n = Order::flat();
  bad2.type = SurfaceType::I;
  CHECK_THROWS_AS(k_sharp(bad2), DomainError);
}

TEST_CASE("type-class upper bound") {
  // type I: (5 - 2/n) t
  CHECK(type_class_upper(SurfaceType::I, Order::flat(), Order::finite(4), rat(1)) == rat(9, 4));
  // type II: max{(5 - 1/m) t, 6t - 1/2, 0}
  CHECK(type_class_upper(SurfaceType::II, Order::finite(3), Order::flat(), rat(1)) == rat(5, 2));
  CHECK(type_class_upper(SurfaceType::II, Order::finite(3), Order::flat(), rat(2)) == rat(0));
  // type III: 5t
  CHECK(type_class_upper(SurfaceType::III, Order::flat(), Order::flat(), rat(1)) == rat(5, 2));

  CHECK_THROWS_AS(type_class_upper(SurfaceType::I, Order::flat(), Order::flat(), rat(1)),
                  DomainError);
  CHECK_THROWS_AS(type_class_upper(SurfaceType::II, Order::flat(), Order::flat(), rat(1)),
                  DomainError);
}

TEST_CASE("sharp value never exceeds the type-class bound") {
  // equality on the boundary p in {1, 2} and strictness inside for 2m < n
  ExponentQuery q = q_fold(3, 8, rat(1));
  CHECK(k_sharp(q).k_p == type_class_upper(SurfaceType::I, q.m, q.n, rat(1)));
  q.p = rat(2);
  CHECK(k_sharp(q).k_p == type_class_upper(SurfaceType::I, q.m, q.n, rat(2)));
  for (int i = 1; i < 100; ++i) {
    q.p = rat(1) + rat(i, 100);
    Rational up = type_class_upper(SurfaceType::I, q.m, q.n, q.p);
    CHECK(k_sharp(q).k_p < up);
  }
  // 2m >= n and type II meet the bound everywhere
  for (int i = 0; i <= 100; ++i) {
    Rational p = rat(1) + rat(i, 100);
    CHECK(k_sharp(q_tail(4, p)).k_p == type_class_upper(SurfaceType::I, Order::flat(),
                                                        Order::finite(4), p));
    CHECK(k_sharp(q_flat_residual(3, p, true)).k_p ==
          type_class_upper(SurfaceType::II, Order::finite(3), Order::flat(), p));
  }
}

TEST_CASE("branch crossover points") {
  auto c38 = branch_crossover(Order::finite(3), Order::finite(8));
  REQUIRE(c38.has_value());
  CHECK(*c38 == rat(8, 7));

  auto c3f = branch_crossover(Order::finite(3), Order::flat());
  REQUIRE(c3f.has_value());
  CHECK(*c3f == rat(8, 7));

  auto c4f = branch_crossover(Order::finite(4), Order::flat());
  REQUIRE(c4f.has_value());
  CHECK(*c4f == rat(10, 9));

  CHECK(!branch_crossover(Order::flat(), Order::finite(8)).has_value());

  // crossing sits where the two branch values agree
  ExponentResult at = k_sharp(q_fold(3, 8, *c38));
  CHECK(at.branch_first == at.branch_second);
  CHECK(at.binding == Branch::tie);
}

TEST_CASE("decay-rate thresholds") {
  LqThreshold t = threshold_from_lq_decay(rat(1), rat(4), rat(3));
  CHECK(t.k_threshold == rat(7, 4));
  CHECK(t.p == rat(8, 7));

  LqThreshold t2 = threshold_from_lq_decay(rat(0), rat(2), rat(3));
  CHECK(t2.k_threshold == rat(5, 2));
  CHECK(t2.p == rat(4, 3));

  CHECK_THROWS_AS(threshold_from_lq_decay(rat(1), rat(3, 2), rat(3)), DomainError);
  CHECK_THROWS_AS(threshold_from_lq_decay(rat(-1), rat(4), rat(3)), DomainError);

  CHECK(threshold_from_linfty_decay(rat(5, 6), rat(3), rat(1)) == rat(13, 6));

  // sup-decay rate 1/2 + 1/n reproduces the first-regime line at every p
  for (int n : {2, 3, 4, 6}) {
    for (int i = 0; i <= 20; ++i) {
      Rational p = rat(1) + rat(i, 20);
      Rational alpha = rat(1, 2) + rat(1, n);
      CHECK(threshold_from_linfty_decay(alpha, rat(3), p) == k_sharp(q_tail(n, p)).k_p);
    }
  }
}

TEST_CASE("profile queries feed straight into the formula") {
  SurfaceProfile s = classify_phase(corpus_phase("fold3_tail8"));
  ExponentQuery q = ExponentQuery::from_profile(s, rat(1));
  ExponentResult r = k_sharp(q);
  CHECK(r.k_p == rat(19, 8));
  CHECK(r.regime == Regime::case_ii);
  CHECK(r.covered);

  SurfaceProfile f2 = classify_phase(corpus_phase("fold2_tail8"));
  ExponentResult r2 = k_sharp(ExponentQuery::from_profile(f2, rat(1)));
  CHECK(!r2.covered);  // m = 2 below the covered range in the second regime
}
