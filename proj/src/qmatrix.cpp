#include "lielat/qmatrix.hpp"

#include <algorithm>

namespace lielat {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rat>& d) {
  QMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows[0].empty()) throw InvalidInput("from_rows: empty");
  QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw InvalidInput("from_rows: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rat>>& cols) {
  if (cols.empty() || cols[0].empty()) throw InvalidInput("from_columns: empty");
  QMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != m.rows())
      throw InvalidInput("from_columns: ragged columns");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rat> QMatrix::column(int j) const {
  std::vector<Rat> c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<Rat> QMatrix::row(int i) const {
  std::vector<Rat> r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product: dimension mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rat& s) const {
  QMatrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum: dimension mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix diff: dimension mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("apply: dimension mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Rat QMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("det: not square");
  QMatrix m = *this;
  Rat d(1);
  for (int c = 0; c < cols_; ++c) {
    int pivot = -1;
    for (int r = c; r < rows_; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (int r = c + 1; r < rows_; ++r) {
      if (m.at(r, c) == 0) continue;
      Rat f = m.at(r, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

Rat QMatrix::trace() const {
  if (rows_ != cols_) throw InvalidInput("trace: not square");
  Rat t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

bool QMatrix::is_p_integral(const Int& p) const {
  return std::all_of(e_.begin(), e_.end(), [&](const Rat& x) { return p_integral(x, p); });
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int QMatrix::rank() const {
  QMatrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::optional<std::vector<Rat>> QMatrix::solve(const std::vector<Rat>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw InvalidInput("solve: dimension mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = rref(aug);
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == cols_) return std::nullopt;  // row [0 ... 0 | 1]
  std::vector<Rat> x(cols_, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), cols_);
  return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse: not square");
  QMatrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
  QMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<std::vector<Rat>> QMatrix::kernel_basis() const {
  QMatrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[free] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> QMatrix::char_poly() const {
  if (rows_ != cols_) throw InvalidInput("char_poly: not square");
  int n = rows_;
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  QMatrix m = *this;  // M_1 = A
  for (int k = 1; k <= n; ++k) {
    Rat ck = -m.trace() / k;
    c[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) m.at(i, i) += ck;
    m = (*this) * m;
  }
  return c;
}

std::vector<std::vector<Rat>> row_space_basis(const std::vector<std::vector<Rat>>& vecs) {
  if (vecs.empty()) return {};
  QMatrix m = QMatrix::from_rows(vecs);
  auto pivots = rref(m);
  std::vector<std::vector<Rat>> basis;
  for (size_t k = 0; k < pivots.size(); ++k) basis.push_back(m.row(static_cast<int>(k)));
  return basis;
}

QMatrix matrix_commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace lielat
