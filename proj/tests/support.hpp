#pragma once

// Generators and independent oracles shared by the unit and acceptance suites.
// Nothing here calls top_intersect or the closed-form pairing.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "nscalc/ns_lattice.hpp"

namespace nscalc::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Rational rational(std::int64_t max_num = 30, std::int64_t max_den = 12) {
    return make_rational(integer(-max_num, max_num), integer(1, max_den));
  }

  Rational nonnegative(std::int64_t max_num = 30, std::int64_t max_den = 12) {
    return make_rational(integer(0, max_num), integer(1, max_den));
  }

  NSClass any_class(Genus g) { return mk_class(g, rational(), rational(), rational()); }

  /// f_{m,n}^* theta + s alpha_1 + t theta_2 with s, t >= 0.
  NSClass nef_class(Genus g) {
    const Rational m = rational(), n = rational(), s = nonnegative(), t = nonnegative();
    return mk_class(g, g.value() * m * m + s, n * n + t, m * n);
  }

  /// A class with ab < g c^2.
  NSClass outside_class(Genus g) {
    Rational a = rational(), b = rational(), c = rational();
    if (c == 0) c = 1;
    while (a * b >= g.value() * c * c) c *= 2;
    return mk_class(g, a, b, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Naive 3^{g+1} expansion of the product, looking each monomial up in the
/// table. Only meant for small g.
inline Rational brute_force_intersect(std::span<const NSClass> classes) {
  const Genus g = classes.front().genus;
  const MonomialTable table(g);
  const std::size_t count = classes.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < count; ++i) total *= 3;
  Rational sum = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    int exps[3] = {0, 0, 0};
    Rational coeff = 1;
    for (std::size_t f = 0; f < count; ++f) {
      const int pick = static_cast<int>(rest % 3);
      rest /= 3;
      ++exps[pick];
      coeff *= pick == 0 ? classes[f].a : pick == 1 ? classes[f].b : classes[f].c;
    }
    if (coeff != 0) sum += coeff * table.value(exps[0], exps[1], exps[2]);
  }
  return sum;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Symbolic expansion of (g m^2 alpha_1 + n^2 theta_2 + m n Q)^{g+1} evaluated
/// against `value(i, j, k)`: returns the coefficient of m^p n^q for every
/// (p, q) that occurs.
template <typename ValueFn>
std::map<std::pair<int, int>, Rational> boundary_power_coefficients(int g, ValueFn value) {
  const int top = g + 1;
  std::map<std::pair<int, int>, Rational> coeffs;
  for (int i = 0; i <= top; ++i) {
    for (int k = 0; i + k <= top; ++k) {
      const int j = top - i - k;
      // multinomial (g+1; i, j, k) * g^i
      Integer mult = binomial(static_cast<unsigned long>(top), static_cast<unsigned long>(i)) *
                     binomial(static_cast<unsigned long>(top - i), static_cast<unsigned long>(k));
      Integer gpow;
      mpz_ui_pow_ui(gpow.get_mpz_t(), static_cast<unsigned long>(g), static_cast<unsigned long>(i));
      const std::pair<int, int> key{2 * i + k, 2 * j + k};
      coeffs[key] += Rational(mult * gpow) * value(i, j, k);
    }
  }
  return coeffs;
}

/// The theta_2^{g-1} Q^2 entry solved from the vanishing of the m^2 n^{2g}
/// coefficient, using only theta^g = g! and alpha_1^2 = 0:
///   C(g+1, 2) v + (g+1) g * g! = 0.
inline Rational solved_q_squared_entry(int g) {
  const Integer gf = factorial(static_cast<unsigned long>(g));
  return -Rational((g + 1) * g * gf) / Rational(binomial(static_cast<unsigned long>(g + 1), 2));
}

}  // namespace nscalc::testing
