#include "nscalc/cones.hpp"

#include <string>

namespace nscalc {

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Interior:
      return "interior";
    case Region::Boundary:
      return "boundary";
    case Region::Outside:
      return "outside";
  }
  return "unknown";
}

NotNef::NotNef(std::string_view what) : std::domain_error(std::string(what)) {}

Rational defect(const NSClass& x) { return x.a * x.b - x.genus.value() * x.c * x.c; }

ConeVerdict classify(const NSClass& x) {
  ConeVerdict v{Region::Outside, false, false, false, false, defect(x)};
  v.is_nef = x.a >= 0 && x.b >= 0 && v.defect >= 0;
  v.is_ample = x.a > 0 && x.b > 0 && v.defect > 0;
  v.is_psef = v.is_nef;
  v.is_big = v.is_ample;
  if (v.is_ample) {
    v.region = Region::Interior;
  } else if (v.is_nef) {
    v.region = Region::Boundary;
  }
  return v;
}

NefDecomposition nef_decomposition(const NSClass& x) {
  const ConeVerdict v = classify(x);
  if (!v.is_nef) {
    throw NotNef("nef_decomposition: class is not nef (defect " + to_string(v.defect) + ")");
  }
  if (x.b == 0) {
    // Nefness with b = 0 forces c = 0.
    return {mk_class(x.genus, 0, 0, 0), x.a, true};
  }
  Rational boundary_a = x.genus.value() * x.c * x.c / x.b;
  Rational excess = x.a - boundary_a;
  return {mk_class(x.genus, std::move(boundary_a), x.b, x.c), std::move(excess), false};
}

namespace {

SqrtWitness make_witness(const Rational& square, int sign_of_root) {
  std::optional<Rational> root = exact_sqrt(square);
  if (root && sign_of_root < 0) *root = -*root;
  return {square, square == 0 ? 0 : sign_of_root, std::move(root)};
}

}  // namespace

BoundaryWitness boundary_witness(const NSClass& x) {
  if (x.b == 0 && x.c != 0) {
    throw std::invalid_argument("boundary_witness: b = 0 with c != 0 is inconsistent");
  }
  const ConeVerdict v = classify(x);
  if (!v.is_nef || v.defect != 0) {
    throw NotNef("boundary_witness: class is not on the nef boundary (defect " +
                 to_string(v.defect) + ")");
  }
  // n >= 0 always; m carries the sign of c (or + when c = 0).
  const int m_sign = x.c < 0 ? -1 : 1;
  return {make_witness(x.a / x.genus.value(), m_sign), make_witness(x.b, 1)};
}

}  // namespace nscalc
