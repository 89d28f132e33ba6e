#include "pdmult/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace pdmult {

RationalMatrix RationalMatrix::stacked(const RationalMatrix& other) const {
  if (cols_ != other.cols_) throw std::logic_error("stacked: column mismatch");
  RationalMatrix out(rows_ + other.rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
  }
  for (int r = 0; r < other.rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(rows_ + r, c) = other.at(r, c);
  }
  return out;
}

namespace {

// Integer working copy: each row scaled by the lcm of its denominators.
// Row scaling by nonzero rationals preserves rank, kernel, and solution
// sets when the right-hand side is carried inside the matrix.
std::vector<std::vector<mpz_class>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (int c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).denominator().get_mpz_t());
    }
    rows[r].resize(m.cols());
    for (int c = 0; c < m.cols(); ++c) {
      const Rational& q = m.at(r, c);
      rows[r][c] = q.numerator() * (lcm / q.denominator());
    }
  }
  return rows;
}

}  // namespace

EchelonForm echelon_form(const RationalMatrix& m) {
  auto a = to_integer_rows(m);
  const int rows = m.rows(), cols = m.cols();

  EchelonForm out;
  mpz_class prev = 1;
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[lead], a[pivot]);
    const mpz_class p = a[lead][col];
    for (int r = lead + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        mpz_class t = p * a[r][c] - a[r][col] * a[lead][c];
        mpz_divexact(a[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = p;
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());

  // Rational back-substitution into canonical RREF.
  RationalMatrix r(out.rank, cols);
  for (int i = 0; i < out.rank; ++i) {
    for (int c = 0; c < cols; ++c) r.at(i, c) = Rational(mpq_class(a[i][c]));
  }
  for (int i = out.rank - 1; i >= 0; --i) {
    const int pc = out.pivot_cols[i];
    Rational inv = Rational(1) / r.at(i, pc);
    for (int c = pc; c < cols; ++c) r.at(i, c) *= inv;
    for (int k = 0; k < i; ++k) {
      Rational factor = r.at(k, pc);
      if (factor.is_zero()) continue;
      for (int c = pc; c < cols; ++c) r.at(k, c) -= factor * r.at(i, c);
    }
  }
  out.rref = std::move(r);
  return out;
}

int rank(const RationalMatrix& m) { return echelon_form(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  EchelonForm ef = echelon_form(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int pc : ef.pivot_cols) is_pivot[pc] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = Rational(1);
    for (int i = 0; i < ef.rank; ++i) v[ef.pivot_cols[i]] = -ef.rref.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::logic_error("solve: rhs length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  EchelonForm ef = echelon_form(aug);
  if (!ef.pivot_cols.empty() && ef.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (int i = 0; i < ef.rank; ++i) x[ef.pivot_cols[i]] = ef.rref.at(i, m.cols());
  return x;
}

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v) {
  assert(static_cast<int>(v.size()) == m.cols());
  std::vector<Rational> out(m.rows(), Rational(0));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

}  // namespace pdmult
