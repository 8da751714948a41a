#include "nscalc/heights.hpp"

#include <stdexcept>
#include <string>

#include "nscalc/cones.hpp"

namespace nscalc {
namespace {

Rational base_factor(Genus g, const Rational& base_scale) {
  if (base_scale <= 0) {
    throw std::invalid_argument("base polarization scale must be positive, got " +
                                to_string(base_scale));
  }
  Rational out = 1;
  for (int i = 0; i < g.value() - 1; ++i) out *= base_scale;
  return out;
}

}  // namespace

PointClass::PointClass(NSClass cls) : cls_(std::move(cls)) {
  if (cls_.a <= 0) {
    throw std::invalid_argument("point class needs positive degree a, got " + to_string(cls_.a));
  }
  if (!classify(cls_).is_psef) {
    throw std::invalid_argument("point class is not pseudo-effective (defect " +
                                to_string(defect(cls_)) + ")");
  }
}

NSClass paper_polarization(Genus g) { return mk_class(g, g.value(), 1, 1); }

Rational generic_degree(const NSClass& l) { return restrict_to_C_fiber(l); }

HeightReport height_point(const NSClass& l, const PointClass& p, const Rational& base_scale) {
  const Rational pairing = pair_theta_power(p.cls(), l);
  return {pairing * base_factor(l.genus, base_scale) / p.degree(), p.degree()};
}

Rational height_curve(const NSClass& l, const Rational& base_scale) {
  const Rational deg = generic_degree(l);
  if (deg <= 0) {
    throw std::domain_error("height of C_K needs positive generic degree, got " + to_string(deg));
  }
  return pair_theta_power(l, l) * base_factor(l.genus, base_scale) / (2 * deg);
}

}  // namespace nscalc
