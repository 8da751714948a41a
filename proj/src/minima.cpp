#include "nscalc/minima.hpp"

#include <stdexcept>
#include <string>

#include "nscalc/cones.hpp"

namespace nscalc {

MinimaReport cone_minimum(const NSClass& l) {
  const ConeVerdict v = classify(l);
  if (!v.is_nef) {
    throw NotNef("cone_minimum: L is not nef (defect " + to_string(v.defect) + ")");
  }
  const Genus g = l.genus;
  const Rational g_fact(factorial(static_cast<unsigned long>(g.value())));

  MinimaReport report{};
  if (l.a == 0) {
    // Nef with A = 0 forces C = 0: the height is g! B for every point.
    report.infimum = g_fact * l.b;
    report.s_star = 0;
    report.t_star = 0;
  } else {
    report.t_star = l.c / (g.value() * l.a);
    report.s_star = g.value() * report.t_star * report.t_star;
    report.infimum = g_fact * (g.value() * l.a * l.b - l.c * l.c) / (g.value() * l.a);
  }

  // (1, s*, t*) is proportional to f_{p,q}^* theta = (g p^2, q^2, pq) iff
  // q / p = g t*.
  const Rational ratio = g.value() * report.t_star;
  report.witness_p = ratio.get_den();
  report.witness_q = ratio.get_num();
  NSClass ray = pullback_theta(g, Rational(report.witness_p), Rational(report.witness_q));
  report.attained_by_witness =
      ray.b == ray.a * report.s_star && ray.c == ray.a * report.t_star && ray.a > 0;
  if (report.attained_by_witness) report.witness_ray = std::move(ray);
  return report;
}

Rational grid_oracle(const NSClass& l, const Rational& t_lo, const Rational& t_hi, long steps) {
  if (steps < 1 || t_lo > t_hi) {
    throw std::invalid_argument("grid_oracle: empty grid (steps " + std::to_string(steps) +
                                ", t_lo " + to_string(t_lo) + ", t_hi " + to_string(t_hi) + ")");
  }
  if (!classify(l).is_nef) throw NotNef("grid_oracle: L is not nef");
  if (l.a <= 0) throw std::invalid_argument("grid_oracle: L needs A > 0");

  // The height of (1, s, t) is linear in the point class, so pair L with the
  // basis once through the intersection engine.
  const Genus g = l.genus;
  const Rational with_alpha = pair_theta_power(alpha1(g), l);
  const Rational with_theta = pair_theta_power(theta2(g), l);
  const Rational with_q = pair_theta_power(poincare(g), l);

  const Rational step = (t_hi - t_lo) / steps;
  std::optional<Rational> best;
  for (long i = 0; i <= steps; ++i) {
    const Rational t = t_lo + i * step;
    Rational value = with_alpha + g.value() * t * t * with_theta + t * with_q;
    if (!best || value < *best) best = std::move(value);
  }
  return *best;
}

PointClass witness_sequence(Genus g, long n) {
  if (n <= 0) {
    throw std::invalid_argument("witness_sequence: n must be positive, got " + std::to_string(n));
  }
  return PointClass(scale(pullback_theta(g, g.value(), 1), n));
}

ZhangAudit zhang_audit(const NSClass& l) {
  const MinimaReport minima = cone_minimum(l);
  ZhangAudit audit{};
  audit.e1 = minima.infimum;
  audit.e2 = minima.infimum;
  audit.h_curve = height_curve(l);
  const Rational mean = (audit.e1 + audit.e2) / 2;
  audit.first_inequality_holds = audit.e1 >= audit.h_curve;
  audit.second_inequality_holds = audit.h_curve >= mean;
  audit.violation_margin = mean - audit.h_curve;
  audit.lower_bound_only = !minima.attained_by_witness;
  return audit;
}

}  // namespace nscalc
