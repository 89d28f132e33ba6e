#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdmult/rational.hpp"

namespace pdmult {

// Exponent pair of a bivariate monomial x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Graded lexicographic order with x > y: lower total degree first, and
// within a degree x-powers descending, so iteration runs
// 1, x, y, x^2, xy, y^2, ... This is the canonical term order everywhere:
// serialization, matrix columns, echelon pivots.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.i > b.i;
  }
};

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) = default;
};

// Lex order on coordinates; fixes the deterministic point ordering of
// reports and operator systems.
inline bool point_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Sparse bivariate polynomial over the rationals. No zero coefficients are
// ever stored; the zero polynomial has an empty term map and its degree is
// a distinct sentinel (nullopt), never an integer.
class BivarPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  BivarPoly() = default;
  explicit BivarPoly(const Rational& c) {
    if (!c.is_zero()) terms_[{0, 0}] = c;
  }

  static BivarPoly monomial(int i, int j, Rational c = Rational(1)) {
    BivarPoly p;
    if (!c.is_zero() && i >= 0 && j >= 0) p.terms_[{i, j}] = std::move(c);
    return p;
  }
  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly one() { return BivarPoly(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }
  // Degree of a polynomial known to be nonzero at the call site.
  int degree_nonzero() const { return *degree(); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void set_coefficient(int i, int j, const Rational& c) {
    if (c.is_zero()) {
      terms_.erase({i, j});
    } else {
      terms_[{i, j}] = c;
    }
  }

  void add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_[m] = c;
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly& operator*=(const BivarPoly& o) { return *this = *this * o; }

  BivarPoly scaled(const Rational& c) const;

  // Partial derivatives of the polynomial itself.
  BivarPoly dx() const;
  BivarPoly dy() const;
  // D^(a,b) applied to the polynomial.
  BivarPoly derivative(int a, int b) const;

  Rational evaluate(const Point& at) const;

  // p(x + cx, y + cy): Taylor shift moving `at` to the origin when called
  // with at's coordinates.
  BivarPoly shifted(const Rational& cx, const Rational& cy) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

// Trivariate homogeneous form of fixed total degree d; every stored
// exponent triple sums to exactly d.
class TrivarForm {
 public:
  struct Triple {
    int i = 0, j = 0, k = 0;
    friend auto operator<=>(const Triple&, const Triple&) = default;
  };
  using TermMap = std::map<Triple, Rational>;

  TrivarForm() : degree_(0) {}
  explicit TrivarForm(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rational coefficient(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Triple& t, const Rational& c);

  friend TrivarForm operator*(const TrivarForm& a, const TrivarForm& b);
  friend bool operator==(const TrivarForm& a, const TrivarForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  TermMap terms_;
};

// dim Pi_n = (n+2 choose 2) for n >= 0, and 0 for negative n so that
// "A in Pi_{k-m}" with k < m uniformly means A = 0.
int dim_pi(int n);

// Monomial basis of Pi_n in graded-lex order (empty for n < 0).
std::vector<Monomial> monomial_basis(int n);

// Sum of the terms of p with total degree exactly k.
BivarPoly homogeneous_part(const BivarPoly& p, int k);

// Leading (top-degree) and lowest nonzero homogeneous parts. Both require
// p != 0.
BivarPoly leading_part(const BivarPoly& p);
BivarPoly lowest_part(const BivarPoly& p);

// The PD functional: sum over terms c_ij of h of c_ij * (d^i_x d^j_y f)
// evaluated at the point.
Rational apply_pd(const BivarPoly& h, const BivarPoly& f, const Point& at);

// Right-hand side of the Leibniz expansion
//   R(D)[g f](at) = sum_{i,j} 1/(i! j!) g^(i,j)(at) * (R^(i,j))(D) f (at).
Rational leibniz_rhs(const BivarPoly& r, const BivarPoly& g, const BivarPoly& f, const Point& at);

// Exact division by a degree-1 polynomial. Returns the quotient when p is
// divisible by the line, nullopt otherwise. Throws degenerate_line unless
// deg(line) == 1.
std::optional<BivarPoly> divide_by_line(const BivarPoly& p, const BivarPoly& line);

// Associated trivariate form: z-padding of every term to total degree
// deg p. Throws zero_polynomial on p == 0. Multiplicative over products.
TrivarForm homogenize(const BivarPoly& p);

// True iff p is homogeneous (all terms of the same total degree). The zero
// polynomial counts as homogeneous.
bool is_homogeneous(const BivarPoly& p);

// GCD of two homogeneous bivariate forms, normalized monic in x when x
// occurs, else in y; a constant 1 when coprime. Throws not_homogeneous on
// inhomogeneous input and zero_polynomial when both are zero.
BivarPoly form_gcd(const BivarPoly& u, const BivarPoly& v);

// Exact divisibility test for homogeneous forms (used by tests and by the
// tangent analysis).
bool form_divides(const BivarPoly& divisor, const BivarPoly& dividend);

// Display form such as "x^2 - y + 1/2"; graded-lex descending, omitted
// unit coefficients.
std::string to_pretty_string(const BivarPoly& p);

}  // namespace pdmult
