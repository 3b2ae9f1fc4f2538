#pragma once

#include <optional>
#include <string>

#include "asharp/normal_form.hpp"
#include "asharp/rational.hpp"

namespace asharp {

enum class Regime { case_i, case_ii };
enum class Branch { first, second, tie, none };

std::string regime_name(Regime r);
std::string branch_name(Branch b);

// Inputs to the sharp-exponent formula. p is exact; m, n carry flatness.
struct ExponentQuery {
  Rational p;
  Order m = Order::flat();
  Order n = Order::flat();
  SurfaceType type = SurfaceType::III;
  bool residual_vanishes = false;

  static ExponentQuery from_profile(const SurfaceProfile& s, const Rational& p);
};

struct ExponentResult {
  Rational k_p;             // sharp exponent (formula value)
  Regime regime = Regime::case_i;
  Branch binding = Branch::none;    // which branch attains the max (case_ii)
  Rational branch_first;            // case_ii branch values before the max
  Rational branch_second;
  Rational upper_bound;             // type-class upper bound at this p
  bool covered = true;              // hypotheses of the sharp statement hold
  std::string reason;               // why not covered, when covered == false
};

// Sharp exponent k_p. Throws DomainError for p outside [1,2], m or n below 2,
// or an m/n/type combination that is internally inconsistent.
ExponentResult k_sharp(const ExponentQuery& q);

// Upper bound from the surface type alone.
Rational type_class_upper(SurfaceType type, const Order& m, const Order& n, const Rational& p);

// p where the two case_ii branches cross, if it lands inside [1,2].
std::optional<Rational> branch_crossover(const Order& m, const Order& n);

// Exponent threshold implied by an L^q sup-decay rate alpha at dual scaling;
// valid for q >= 2 (DomainError below).
struct LqThreshold {
  Rational k_threshold;
  Rational p;
};
LqThreshold threshold_from_lq_decay(const Rational& alpha, const Rational& q, const Rational& nu);

// Exponent threshold from an L^infinity decay rate alpha at fixed p.
Rational threshold_from_linfty_decay(const Rational& alpha, const Rational& nu, const Rational& p);

}  // namespace asharp
