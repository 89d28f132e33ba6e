#pragma once

#include <utility>
#include <vector>

#include "pdmult/rational.hpp"

namespace pdmult {

// Dense univariate polynomial over the rationals, coefficient of t^k at
// index k. Internal plumbing shared by form_gcd, the bivariate gcd, and
// the resultant machinery. The zero polynomial is the empty vector; a
// nonzero one has a nonzero back().
using UniPoly = std::vector<Rational>;

namespace uni {

void trim(UniPoly& p);
inline bool is_zero(const UniPoly& p) { return p.empty(); }
inline int degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

UniPoly from_constant(const Rational& c);
UniPoly add(const UniPoly& a, const UniPoly& b);
UniPoly sub(const UniPoly& a, const UniPoly& b);
UniPoly mul(const UniPoly& a, const UniPoly& b);
UniPoly scale(const UniPoly& a, const Rational& c);
Rational eval(const UniPoly& p, const Rational& t);
UniPoly derivative(const UniPoly& p);

// Quotient and remainder; the divisor must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// Exact division; the remainder must vanish.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd over Q (1 for coprime nonzero inputs, zero only if both zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

UniPoly monic(const UniPoly& p);

// Integer content model used by the root finder: p = (num/den) * prim with
// prim a primitive integer polynomial (gcd of coefficients 1, positive
// leading coefficient).
struct PrimitiveParts {
  std::vector<mpz_class> prim;
  mpq_class content;
};
PrimitiveParts primitive_integer(const UniPoly& p);

// All rational roots of p (p != 0), each listed once, via the rational
// root theorem on the primitive integer polynomial.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace uni
}  // namespace pdmult
