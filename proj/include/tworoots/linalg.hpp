#pragma once

// Exact linear algebra over Q (GMP rationals) and over prime fields.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "tworoots/integer.hpp"

namespace tworoots {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const IntMatrix& m);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);

namespace linalg {

struct Echelon {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(QMatrix m);
std::size_t rank(const QMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of {x : m x = 0}, one vector per free column, in RREF normal form.
std::vector<QVector> nullspace(const QMatrix& m);

std::optional<QVector> solve(const QMatrix& a, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& m);

// Fraction-free determinant (Bareiss).
mpz_class determinant(const IntMatrix& m);

// Scale a rational vector to the primitive integer vector with the same direction.
IntVector primitive_integer(const QVector& v);

// Arithmetic mod a prime p. Inputs may hold any residues.
std::size_t rank_mod_p(const IntMatrix& m, Int p);
std::vector<IntVector> nullspace_mod_p(const IntMatrix& m, Int p);

}  // namespace linalg
}  // namespace tworoots
