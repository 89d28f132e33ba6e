#pragma once

#include <optional>
#include <vector>

#include "pdmult/rational.hpp"

namespace pdmult {

// Dense rational matrix, row-major. Condition matrices at desk scale are
// small and fill in quickly under elimination, so dense storage is fine.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

  // Stacks other below this; column counts must agree.
  RationalMatrix stacked(const RationalMatrix& other) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// Reduced row echelon form plus pivot bookkeeping. RREF is canonical, so
// every consumer (kernel bases, particular solutions, graded bases) is
// deterministic across runs and platforms.
struct EchelonForm {
  RationalMatrix rref;          // rank rows, original column count
  std::vector<int> pivot_cols;  // ascending
  int rank = 0;
};

// Fraction-free forward elimination (Bareiss on the integer-scaled rows,
// first-nonzero pivot rule in column order) followed by rational
// back-substitution.
EchelonForm echelon_form(const RationalMatrix& m);

int rank(const RationalMatrix& m);

// Basis of {v : Mv = 0} in reduced echelon normal form: one vector per
// free column in column order, free coordinate 1.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// One exact solution of Mv = b with free variables zero, or nullopt when
// the system is inconsistent. b.size() must equal m.rows().
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// M * v exactly.
std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v);

}  // namespace pdmult
