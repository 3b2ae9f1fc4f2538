#include "asharp/exponents.hpp"

#include "asharp/errors.hpp"

namespace asharp {

std::string regime_name(Regime r) { return r == Regime::case_i ? "case_i" : "case_ii"; }

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::first:
      return "first";
    case Branch::second:
      return "second";
    case Branch::tie:
      return "tie";
    case Branch::none:
      return "none";
  }
  return "?";
}

ExponentQuery ExponentQuery::from_profile(const SurfaceProfile& s, const Rational& p) {
  ExponentQuery q;
  q.p = p;
  q.m = s.m;
  q.n = s.n;
  q.type = s.type;
  q.residual_vanishes = s.residual_vanishes;
  return q;
}

namespace {

void validate(const ExponentQuery& q) {
  if (q.p < Rational(1) || q.p > Rational(2))
    throw DomainError("p must lie in [1, 2], got " + q.p.str());
  if (q.m.is_finite() && q.m.value() < 2)
    throw DomainError("m must be >= 2 or flat");
  if (q.n.is_finite() && q.n.value() < 2)
    throw DomainError("n must be >= 2 or flat");
  SurfaceType want = q.n.is_finite()
                         ? SurfaceType::I
                         : (q.m.is_finite() ? SurfaceType::II : SurfaceType::III);
  if (q.type != want)
    throw DomainError("surface_type " + surface_type_name(q.type) +
                      " inconsistent with m=" + q.m.str() + ", n=" + q.n.str());
}

bool regime_is_first(const Order& m, const Order& n) {
  if (m.is_flat()) return true;
  if (n.is_flat()) return false;
  return 2 * m.value() >= n.value();
}

}  // namespace

Rational type_class_upper(SurfaceType type, const Order& m, const Order& n, const Rational& p) {
  if (p < Rational(1) || p > Rational(2))
    throw DomainError("p must lie in [1, 2], got " + p.str());
  Rational t = Rational(1) / p - rat(1, 2);
  switch (type) {
    case SurfaceType::I:
      if (!n.is_finite()) throw DomainError("type I needs finite n");
      return (Rational(5) - rat(2) * n.reciprocal()) * t;
    case SurfaceType::II: {
      if (!m.is_finite()) throw DomainError("type II needs finite m");
      Rational first = (Rational(5) - m.reciprocal()) * t;
      Rational second = Rational(6) * t - rat(1, 2);
      return rat_max(rat_max(first, second), Rational(0));
    }
    case SurfaceType::III:
      return Rational(5) * t;
  }
  throw DomainError("unknown surface type");
}

ExponentResult k_sharp(const ExponentQuery& q) {
  validate(q);
  ExponentResult r;
  Rational t = Rational(1) / q.p - rat(1, 2);
  r.upper_bound = type_class_upper(q.type, q.m, q.n, q.p);

  if (regime_is_first(q.m, q.n)) {
    r.regime = Regime::case_i;
    r.k_p = (Rational(5) - rat(2) * q.n.reciprocal()) * t;
    r.binding = Branch::none;
    r.covered = true;
    return r;
  }

  r.regime = Regime::case_ii;
  // case_ii has finite m by construction
  Rational rm = q.m.reciprocal();
  Rational rn = q.n.reciprocal();
  Rational m_over_n = Rational(q.m.value()) * rn;
  r.branch_first = (Rational(5) - rm) * t;
  r.branch_second =
      (Rational(6) - rat(2) * Rational(q.m.value() + 1) * rn) * t - rat(1, 2) + m_over_n;
  Rational k = rat_max(r.branch_first, r.branch_second);
  if (r.branch_first > r.branch_second)
    r.binding = Branch::first;
  else if (r.branch_second > r.branch_first)
    r.binding = Branch::second;
  else
    r.binding = Branch::tie;
  r.k_p = rat_max(k, Rational(0));

  if (q.m.value() < 3) {
    r.covered = false;
    r.reason = "m = " + q.m.str() + " outside the covered range (needs m >= 3)";
  } else if (q.n.is_flat() && !q.residual_vanishes) {
    r.covered = false;
    r.reason = "flat residual order without a vanishing certificate";
  } else {
    r.covered = true;
  }
  return r;
}

std::optional<Rational> branch_crossover(const Order& m, const Order& n) {
  if (m.is_flat()) return std::nullopt;
  Rational rm = m.reciprocal();
  Rational rn = n.reciprocal();
  Rational m_over_n = Rational(m.value()) * rn;
  Rational denom = rat(2) * Rational(m.value() + 1) * rn - Rational(1) - rm;
  if (denom.is_zero()) return std::nullopt;
  Rational t = (m_over_n - rat(1, 2)) / denom;
  if (t < Rational(0) || t > rat(1, 2)) return std::nullopt;
  return Rational(1) / (t + rat(1, 2));
}

LqThreshold threshold_from_lq_decay(const Rational& alpha, const Rational& q,
                                    const Rational& nu) {
  if (q < Rational(2)) throw DomainError("q must be >= 2, got " + q.str());
  if (alpha < Rational(0)) throw DomainError("alpha must be >= 0");
  LqThreshold out;
  out.k_threshold = nu - alpha - Rational(1) / q;
  out.p = rat(2) * q / (rat(2) * q - Rational(1));
  return out;
}

Rational threshold_from_linfty_decay(const Rational& alpha, const Rational& nu,
                                     const Rational& p) {
  if (alpha < Rational(0)) throw DomainError("alpha must be >= 0");
  if (p < Rational(1) || p > Rational(2))
    throw DomainError("p must lie in [1, 2], got " + p.str());
  Rational t = Rational(1) / p - rat(1, 2);
  return (rat(2) * nu - rat(2) * alpha) * t;
}

}  // namespace asharp
