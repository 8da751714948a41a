#pragma once

// Coordinates on NS(C x J)_Q over the basis (alpha_1, theta_2, Q) and the
// top-degree intersection form, for C a genus-g curve with Jacobian J and
// Picard number rho(C x J) = 3 (assumed, never checked).

#include <span>
#include <stdexcept>
#include <vector>

#include "nscalc/rational.hpp"

namespace nscalc {

class GenusMismatch : public std::invalid_argument {
 public:
  GenusMismatch(int lhs, int rhs);
};

/// Genus of the curve; always >= 2.
class Genus {
 public:
  explicit Genus(int g);
  int value() const { return g_; }
  /// dim(C x J) = g + 1, the number of factors in a top intersection.
  int dimension() const { return g_ + 1; }
  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

/// The class a*alpha_1 + b*theta_2 + c*Q. No cone condition is imposed.
struct NSClass {
  Genus genus;
  Rational a;  // alpha_1 = p_1^* alpha
  Rational b;  // theta_2 = p_2^* theta
  Rational c;  // Poincare class Q

  bool is_zero() const { return a == 0 && b == 0 && c == 0; }
  friend bool operator==(const NSClass&, const NSClass&) = default;
};

NSClass mk_class(Genus g, Rational a, Rational b, Rational c);
NSClass mk_class(int g, Rational a, Rational b, Rational c);

NSClass alpha1(Genus g);
NSClass theta2(Genus g);
NSClass poincare(Genus g);

NSClass add(const NSClass& x, const NSClass& y);
NSClass scale(const NSClass& x, const Rational& lambda);

NSClass operator+(const NSClass& x, const NSClass& y);
NSClass operator-(const NSClass& x, const NSClass& y);
NSClass operator*(const Rational& lambda, const NSClass& x);

/// Values of the monomials alpha_1^i * theta_2^j * Q^k with i+j+k = g+1.
///
/// theta^g = g! on J; alpha_1^2 = 0; Pic^0 classes are numerically trivial on
/// every fiber, which kills alpha_1 * Q^k (k >= 1) and theta_2^g * Q. The
/// remaining theta_2^{g+1-k} * Q^k are forced by the vanishing of
/// (f_{m,n}^* theta)^{g+1} identically in (m, n): only k = 2 survives, with
/// value -2 * g!.
class MonomialTable {
 public:
  struct Entry {
    int i;
    int j;
    int k;
    Rational value;
  };

  explicit MonomialTable(Genus g);

  Genus genus() const { return genus_; }
  const Integer& genus_factorial() const { return factorial_; }

  /// Throws std::out_of_range unless i, j, k >= 0 and i + j + k = g + 1.
  Rational value(int i, int j, int k) const;

  /// Every index triple of total degree g + 1, ordered by (i, k).
  std::vector<Entry> entries() const;

 private:
  Genus genus_;
  Integer factorial_;
};

MonomialTable monomial_table(Genus g);

/// Intersection number of g + 1 classes on C x J. Exact, symmetric and
/// multilinear; O(g^2) rational operations.
Rational top_intersect(std::span<const NSClass> classes);

/// X * Y * theta_2^{g-1}, evaluated through top_intersect.
Rational pair_theta_power(const NSClass& x, const NSClass& y);

/// Closed form g! * (x_a y_b + x_b y_a - 2 x_c y_c) of the same pairing.
Rational pair_theta_power_closed(const NSClass& x, const NSClass& y);

/// f_{m,n}^* theta = g m^2 alpha_1 + n^2 theta_2 + m n Q, where
/// f_{m,n}(x, y) = m (x - alpha) + n y.
NSClass pullback_theta(Genus g, const Rational& m, const Rational& n);

/// Restriction to a fiber {x} x J: theta_coeff * theta + pic0_coeff * phi(x - alpha).
struct JFiberRestriction {
  Rational theta_coeff;
  Rational pic0_coeff;
  friend bool operator==(const JFiberRestriction&, const JFiberRestriction&) = default;
};

JFiberRestriction restrict_to_J_fiber(const NSClass& x);

/// Degree of the restriction to a fiber C x {y}.
Rational restrict_to_C_fiber(const NSClass& x);

}  // namespace nscalc
