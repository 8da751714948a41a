#pragma once

// Successive minima of h_L over point classes. Normalizing a point class to
// (1, s, t), its height is g! (B + sA - 2tC) for L = (A, B, C), minimized over
// the pseudo-effective slice s >= g t^2.

#include <optional>

#include "nscalc/heights.hpp"
#include "nscalc/ns_lattice.hpp"

namespace nscalc {

struct MinimaReport {
  Rational infimum;
  Rational s_star;
  Rational t_star;
  bool attained_by_witness;
  // Primitive pullback f_{p,q}^* theta on the minimizing ray, when one exists.
  // Its positive integer multiples N * f_{p,q}^* theta are witness classes of
  // degree N g p^2.
  std::optional<NSClass> witness_ray;
  Integer witness_p;
  Integer witness_q;
};

/// Exact minimum over the cone for nef L. Throws NotNef otherwise.
MinimaReport cone_minimum(const NSClass& l);

/// Brute-force minimum of the normalized height over the grid
/// t_lo + i (t_hi - t_lo) / steps, i = 0..steps, with s = g t^2. Heights come
/// from the intersection engine, not from the closed form.
Rational grid_oracle(const NSClass& l, const Rational& t_lo, const Rational& t_hi, long steps);

/// n * f_{g,1}^* theta = (g^3 n, n, g n): a point class of degree g^3 n.
PointClass witness_sequence(Genus g, long n);

struct ZhangAudit {
  Rational e1;
  Rational e2;
  Rational h_curve;
  bool first_inequality_holds;   // e1 >= h
  bool second_inequality_holds;  // h >= (e1 + e2) / 2
  Rational violation_margin;     // (e1 + e2) / 2 - h
  bool lower_bound_only;         // minima not certified by a witness family
};

ZhangAudit zhang_audit(const NSClass& l);

}  // namespace nscalc
