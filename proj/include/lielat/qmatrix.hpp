#pragma once

#include <optional>
#include <vector>

#include "lielat/rational.hpp"

namespace lielat {

// Dense exact rational matrix. No rounding anywhere.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rat(0)) {
    if (rows <= 0 || cols <= 0) throw InvalidInput("QMatrix: non-positive dimensions");
  }

  static QMatrix identity(int n);
  static QMatrix diagonal(const std::vector<Rat>& d);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
  static QMatrix from_columns(const std::vector<std::vector<Rat>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<Rat> column(int j) const;
  std::vector<Rat> row(int i) const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rat& s) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * vector

  Rat det() const;          // square only
  int rank() const;
  Rat trace() const;
  bool is_zero() const;
  bool is_p_integral(const Int& p) const;

  // Solve M x = b exactly; nullopt when inconsistent. For underdetermined
  // systems returns one particular solution (free variables set to 0).
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

  std::optional<QMatrix> inverse() const;  // nullopt when singular

  // Basis of the right kernel {x : Mx = 0}.
  std::vector<std::vector<Rat>> kernel_basis() const;

  // Coefficients c_0..c_n of det(xI - M) = x^n + c_{n-1} x^{n-1} + ... + c_0,
  // via Faddeev-LeVerrier. c_n = 1.
  std::vector<Rat> char_poly() const;

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

// Row space basis (as a reduced-row-echelon set) of a list of vectors;
// used for exact span/rank computations.
std::vector<std::vector<Rat>> row_space_basis(const std::vector<std::vector<Rat>>& vecs);

QMatrix matrix_commutator(const QMatrix& a, const QMatrix& b);

}  // namespace lielat
