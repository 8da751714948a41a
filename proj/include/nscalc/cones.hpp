#pragma once

// Positivity cones of C x J under rho = 3:
//   Nef = Psef = { a >= 0, b >= 0, ab >= g c^2 }
//   Amp = Big  = { a > 0,  b > 0,  ab >  g c^2 }

#include <optional>
#include <stdexcept>
#include <string_view>

#include "nscalc/ns_lattice.hpp"

namespace nscalc {

enum class Region { Interior, Boundary, Outside };

std::string_view to_string(Region r);

struct ConeVerdict {
  Region region;
  bool is_ample;
  bool is_nef;
  bool is_big;
  bool is_psef;
  Rational defect;  // ab - g c^2, unnormalized
};

/// Nef-cone defect ab - g c^2.
Rational defect(const NSClass& x);

ConeVerdict classify(const NSClass& x);

class NotNef : public std::domain_error {
 public:
  explicit NotNef(std::string_view what);
};

/// x = boundary_part + alpha_excess * alpha_1 with boundary_part on the nef
/// boundary. When b = 0 the decomposition is the degenerate (0, a).
struct NefDecomposition {
  NSClass boundary_part;
  Rational alpha_excess;
  bool degenerate;
};

/// Throws NotNef for classes outside the nef cone.
NefDecomposition nef_decomposition(const NSClass& x);

/// A real number known through its square and sign.
struct SqrtWitness {
  Rational square;
  int sign;                      // -1, 0 or +1
  std::optional<Rational> exact;  // set when square is a rational square

  friend bool operator==(const SqrtWitness&, const SqrtWitness&) = default;
};

/// (m, n) with x = f_{m,n}^* theta, i.e. m^2 = a/g, n^2 = b, sign(mn) = sign(c).
struct BoundaryWitness {
  SqrtWitness m;
  SqrtWitness n;
};

/// Throws NotNef unless ab = g c^2 with a, b >= 0.
BoundaryWitness boundary_witness(const NSClass& x);

}  // namespace nscalc
