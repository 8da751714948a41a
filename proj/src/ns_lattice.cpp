#include "nscalc/ns_lattice.hpp"

#include <array>
#include <string>
#include <utility>

namespace nscalc {

GenusMismatch::GenusMismatch(int lhs, int rhs)
    : std::invalid_argument("genus mismatch: " + std::to_string(lhs) + " vs " +
                            std::to_string(rhs)) {}

Genus::Genus(int g) : g_(g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(g));
}

namespace {

void require_same_genus(Genus lhs, Genus rhs) {
  if (lhs != rhs) throw GenusMismatch(lhs.value(), rhs.value());
}

}  // namespace

NSClass mk_class(Genus g, Rational a, Rational b, Rational c) {
  return NSClass{g, std::move(a), std::move(b), std::move(c)};
}

NSClass mk_class(int g, Rational a, Rational b, Rational c) {
  return mk_class(Genus(g), std::move(a), std::move(b), std::move(c));
}

NSClass alpha1(Genus g) { return mk_class(g, 1, 0, 0); }
NSClass theta2(Genus g) { return mk_class(g, 0, 1, 0); }
NSClass poincare(Genus g) { return mk_class(g, 0, 0, 1); }

NSClass add(const NSClass& x, const NSClass& y) {
  require_same_genus(x.genus, y.genus);
  return NSClass{x.genus, x.a + y.a, x.b + y.b, x.c + y.c};
}

NSClass scale(const NSClass& x, const Rational& lambda) {
  return NSClass{x.genus, lambda * x.a, lambda * x.b, lambda * x.c};
}

NSClass operator+(const NSClass& x, const NSClass& y) { return add(x, y); }
NSClass operator-(const NSClass& x, const NSClass& y) { return add(x, scale(y, -1)); }
NSClass operator*(const Rational& lambda, const NSClass& x) { return scale(x, lambda); }

MonomialTable::MonomialTable(Genus g)
    : genus_(g), factorial_(factorial(static_cast<unsigned long>(g.value()))) {}

Rational MonomialTable::value(int i, int j, int k) const {
  const int g = genus_.value();
  if (i < 0 || j < 0 || k < 0 || i + j + k != g + 1) {
    throw std::out_of_range("monomial (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ") is not of degree " + std::to_string(g + 1));
  }
  if (i >= 2) return 0;
  if (i == 1) return k == 0 ? Rational(factorial_) : Rational(0);
  // FIXME: the Q^2 * theta_2^{g-1} entry is sometimes quoted as -2 (g-1)!.
  // That value breaks (f_{m,n}^* theta)^{g+1} = 0 and the height of the
  // curve; tests/test_ns_lattice.cpp pins -2 g! through both.
  if (k == 2) return Rational(-2 * factorial_);
  return 0;
}

std::vector<MonomialTable::Entry> MonomialTable::entries() const {
  const int top = genus_.dimension();
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>((top + 1) * (top + 2) / 2));
  for (int i = 0; i <= top; ++i) {
    for (int k = 0; i + k <= top; ++k) {
      const int j = top - i - k;
      out.push_back(Entry{i, j, k, value(i, j, k)});
    }
  }
  return out;
}

MonomialTable monomial_table(Genus g) { return MonomialTable(g); }

Rational top_intersect(std::span<const NSClass> classes) {
  if (classes.empty()) throw std::invalid_argument("top_intersect needs g + 1 classes, got 0");
  const Genus g = classes.front().genus;
  const int top = g.dimension();
  if (static_cast<int>(classes.size()) != top) {
    throw std::invalid_argument("top_intersect needs " + std::to_string(top) +
                                " classes at genus " + std::to_string(g.value()) + ", got " +
                                std::to_string(classes.size()));
  }
  for (const NSClass& x : classes) require_same_genus(g, x.genus);

  // Truncated product in the formal variables (alpha_1, theta_2, Q). After d
  // factors, poly[i][k] is the coefficient of alpha_1^i theta_2^{d-i-k} Q^k;
  // alpha_1-degree >= 2 is dropped since those monomials vanish.
  const auto width = static_cast<std::size_t>(top + 1);
  std::array<std::vector<Rational>, 2> poly{std::vector<Rational>(width),
                                            std::vector<Rational>(width)};
  poly[0][0] = 1;
  int degree = 0;
  for (const NSClass& x : classes) {
    std::array<std::vector<Rational>, 2> next{std::vector<Rational>(width),
                                              std::vector<Rational>(width)};
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; i + k <= degree; ++k) {
        const Rational& coeff = poly[i][k];
        if (coeff == 0) continue;
        if (x.b != 0) next[i][k] += coeff * x.b;
        if (i == 0 && x.a != 0) next[1][k] += coeff * x.a;
        if (x.c != 0) next[i][k + 1] += coeff * x.c;
      }
    }
    poly = std::move(next);
    ++degree;
  }

  const MonomialTable table(g);
  Rational total = 0;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; i + k <= top; ++k) {
      if (poly[i][k] == 0) continue;
      total += poly[i][k] * table.value(i, top - i - k, k);
    }
  }
  return total;
}

Rational pair_theta_power(const NSClass& x, const NSClass& y) {
  require_same_genus(x.genus, y.genus);
  std::vector<NSClass> factors;
  factors.reserve(static_cast<std::size_t>(x.genus.dimension()));
  factors.push_back(x);
  factors.push_back(y);
  for (int i = 0; i < x.genus.value() - 1; ++i) factors.push_back(theta2(x.genus));
  return top_intersect(factors);
}

Rational pair_theta_power_closed(const NSClass& x, const NSClass& y) {
  require_same_genus(x.genus, y.genus);
  const Rational bracket = x.a * y.b + x.b * y.a - 2 * x.c * y.c;
  return bracket * factorial(static_cast<unsigned long>(x.genus.value()));
}

NSClass pullback_theta(Genus g, const Rational& m, const Rational& n) {
  return NSClass{g, g.value() * m * m, n * n, m * n};
}

JFiberRestriction restrict_to_J_fiber(const NSClass& x) { return {x.b, x.c}; }

Rational restrict_to_C_fiber(const NSClass& x) { return x.a; }

}  // namespace nscalc
