#pragma once

// Heights for the family p_2 : C x J -> J polarized by theta on the base.
// A point x of the generic fiber is represented by the class of its closure.

#include "nscalc/ns_lattice.hpp"

namespace nscalc {

/// Class of the closure of a point. Validated on construction: a > 0 (the
/// degree) and the class is pseudo-effective.
class PointClass {
 public:
  explicit PointClass(NSClass cls);

  const NSClass& cls() const { return cls_; }
  const Rational& degree() const { return cls_.a; }

 private:
  NSClass cls_;
};

struct HeightReport {
  Rational height;
  Rational degree;
};

/// L = f_{1,1}^* theta = g alpha_1 + theta_2 + Q.
NSClass paper_polarization(Genus g);

/// deg L|_{C_K}, the degree on a fiber C x {y}.
Rational generic_degree(const NSClass& l);

// `base_scale` is lambda in M = lambda * theta; heights scale by lambda^{g-1}.

HeightReport height_point(const NSClass& l, const PointClass& p, const Rational& base_scale = 1);

/// L^2 * theta_2^{g-1} / (2 deg L_K). Throws std::domain_error if deg L_K <= 0.
Rational height_curve(const NSClass& l, const Rational& base_scale = 1);

}  // namespace nscalc
