#include "asharp/phase.hpp"

#include <sstream>

#include "asharp/errors.hpp"
#include "asharp/finite_diff.hpp"

namespace asharp {

Poly2 Poly2::from_terms(const std::vector<std::tuple<int, int, Rational>>& terms) {
  Poly2 p;
  for (const auto& [i, j, c] : terms) p.set(i, j, p.coeff(i, j) + c);
  return p;
}

void Poly2::set(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw DomainError("negative monomial exponent");
  if (c.is_zero())
    c_.erase({i, j});
  else
    c_[{i, j}] = c;
  rebuild_cache();
}

Rational Poly2::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Rational(0) : it->second;
}

void Poly2::rebuild_cache() {
  deg1_ = deg2_ = -1;
  for (const auto& [ij, c] : c_) {
    deg1_ = std::max(deg1_, ij.first);
    deg2_ = std::max(deg2_, ij.second);
  }
  rows_.assign(static_cast<size_t>(deg2_ + 1), {});
  for (auto& r : rows_) r.assign(static_cast<size_t>(deg1_ + 1), 0.0);
  for (const auto& [ij, c] : c_)
    rows_[static_cast<size_t>(ij.second)][static_cast<size_t>(ij.first)] = c.to_double();
}

double Poly2::eval(double x1, double x2) const {
  double acc = 0.0;
  for (size_t j = rows_.size(); j-- > 0;) {
    const auto& row = rows_[j];
    double r = 0.0;
    for (size_t i = row.size(); i-- > 0;) r = r * x1 + row[i];
    acc = acc * x2 + r;
  }
  return acc;
}

Rational Poly2::eval_exact(const Rational& x1, const Rational& x2) const {
  Rational acc(0);
  for (const auto& [ij, c] : c_) {
    Rational term = c;
    for (int k = 0; k < ij.first; ++k) term *= x1;
    for (int k = 0; k < ij.second; ++k) term *= x2;
    acc += term;
  }
  return acc;
}

Poly2 Poly2::partial(int g1, int g2) const {
  Poly2 r;
  for (const auto& [ij, c] : c_) {
    int i = ij.first, j = ij.second;
    if (i < g1 || j < g2) continue;
    Rational f(1);
    for (int k = 0; k < g1; ++k) f *= Rational(i - k);
    for (int k = 0; k < g2; ++k) f *= Rational(j - k);
    r.c_[{i - g1, j - g2}] = r.coeff(i - g1, j - g2) + c * f;
  }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = it->second.is_zero() ? r.c_.erase(it) : std::next(it);
  r.rebuild_cache();
  return r;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [ij, c] : o.c_) {
    Rational s = r.coeff(ij.first, ij.second) + c;
    if (s.is_zero())
      r.c_.erase(ij);
    else
      r.c_[ij] = s;
  }
  r.rebuild_cache();
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o.scaled(Rational(-1)); }

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [a, ca] : c_)
    for (const auto& [b, cb] : o.c_) {
      std::pair<int, int> ij{a.first + b.first, a.second + b.second};
      Rational s = r.coeff(ij.first, ij.second) + ca * cb;
      if (s.is_zero())
        r.c_.erase(ij);
      else
        r.c_[ij] = s;
    }
  r.rebuild_cache();
  return r;
}

Poly2 Poly2::scaled(const Rational& c) const {
  Poly2 r;
  if (c.is_zero()) return r;
  for (const auto& [ij, v] : c_) r.c_[ij] = v * c;
  r.rebuild_cache();
  return r;
}

Series Poly2::coeff_in_x2(int k, int trunc_deg) const {
  Series s(trunc_deg);
  for (const auto& [ij, c] : c_)
    if (ij.second == k && ij.first <= trunc_deg) s.coeff(ij.first) += c;
  return s;
}

Poly2 Poly2::shift_x2(const Series& sh) const {
  // x2 -> x2 + sh(x1); sh must be an exact polynomial (its truncation holds
  // every nonzero coefficient).
  Poly2 shp;
  for (int k = 0; k <= sh.trunc_deg(); ++k)
    if (!sh.coeff(k).is_zero()) shp.set(k, 0, sh.coeff(k));
  Poly2 x2 = mono(0, 1);
  Poly2 base = x2 + shp;

  Poly2 r;
  int maxk = deg2();
  std::vector<Poly2> pw(static_cast<size_t>(maxk + 1));
  pw[0] = mono(0, 0);
  for (int k = 1; k <= maxk; ++k) pw[static_cast<size_t>(k)] = pw[static_cast<size_t>(k - 1)] * base;
  for (const auto& [ij, c] : c_) {
    Poly2 t = mono(ij.first, 0, c) * pw[static_cast<size_t>(ij.second)];
    r = r + t;
  }
  return r;
}

Series Poly2::substitute_x2(const Series& s, int trunc_deg) const {
  return eval_series(Series::identity(trunc_deg), s);
}

Series Poly2::eval_series(const Series& u, const Series& v) const {
  int d = std::min(u.trunc_deg(), v.trunc_deg());
  Series acc = Series::zero(d);
  // powers computed incrementally over the sorted (i,j) map
  std::map<int, Series> upow, vpow;
  auto power = [d](std::map<int, Series>& cache, const Series& base, int e) -> const Series& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Series r = Series::constant(Rational(1), d);
    for (int k = 0; k < e; ++k) r = r * base;
    return cache.emplace(e, std::move(r)).first->second;
  };
  for (const auto& [ij, c] : c_) {
    Series term = power(upow, u, ij.first) * power(vpow, v, ij.second) * c;
    acc = acc + term;
  }
  return acc;
}

std::string Poly2::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : c_) {
    Rational a = c;
    if (!first) {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool has_var = ij.first > 0 || ij.second > 0;
    if (!has_var || a != Rational(1)) os << a.str();
    if (has_var && a != Rational(1)) os << "*";
    if (ij.first > 0) {
      os << "x1";
      if (ij.first > 1) os << "^" << ij.first;
    }
    if (ij.first > 0 && ij.second > 0) os << "*";
    if (ij.second > 0) {
      os << "x2";
      if (ij.second > 1) os << "^" << ij.second;
    }
  }
  return os.str();
}

Poly2 mono(int i, int j, const Rational& c) {
  Poly2 p;
  p.set(i, j, c);
  return p;
}

PolynomialPhase::PolynomialPhase(Poly2 poly, Box2 dom) : poly_(std::move(poly)), dom_(dom) {
  d1_ = poly_.partial(1, 0);
  d2_ = poly_.partial(0, 1);
  d11_ = poly_.partial(2, 0);
  d12_ = poly_.partial(1, 1);
  d22_ = poly_.partial(0, 2);
}

double PolynomialPhase::partial(int g1, int g2, double x1, double x2) const {
  if (g1 == 0 && g2 == 0) return poly_.eval(x1, x2);
  if (g1 == 1 && g2 == 0) return d1_.eval(x1, x2);
  if (g1 == 0 && g2 == 1) return d2_.eval(x1, x2);
  if (g1 == 2 && g2 == 0) return d11_.eval(x1, x2);
  if (g1 == 1 && g2 == 1) return d12_.eval(x1, x2);
  if (g1 == 0 && g2 == 2) return d22_.eval(x1, x2);
  return poly_.partial(g1, g2).eval(x1, x2);
}

double FnPhase::partial(int g1, int g2, double x1, double x2) const {
  if (g1 == 0 && g2 == 0) return f_(x1, x2);
  double scale = std::max(dom_.half_width1(), dom_.half_width2());
  return fd_partial(f_, g1, g2, x1, x2, scale).value;
}

double eval_partial(const PhaseOracle& phase, int g1, int g2, double x1, double x2) {
  if (g1 < 0 || g2 < 0) throw DomainError("negative derivative order");
  if (g1 + g2 > phase.d_max())
    throw CapabilityError("derivative order " + std::to_string(g1 + g2) + " exceeds d_max " +
                          std::to_string(phase.d_max()));
  if (!phase.domain().contains(x1, x2))
    throw DomainError("probe point outside phase domain");
  return phase.partial(g1, g2, x1, x2);
}

}  // namespace asharp
