#include "coquasi/matrix.hpp"

#include <sstream>

namespace coquasi {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw DimensionMismatch("matrix product shape mismatch: " + std::to_string(cols_) +
                            " vs " + std::to_string(o.rows_));
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e *= c;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
  Matrix m = *this;
  if (pivot_cols) pivot_cols->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = rows_;
    for (std::size_t r = row; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(row, c), m.at(pivot, c));
    Scalar lead = m.at(row, col).inv();
    for (std::size_t c = col; c < cols_; ++c) m.at(row, c) *= lead;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<Vec> Matrix::null_space() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(pr, free);
    // normalize so the first nonzero coordinate is 1
    for (const Scalar& lead : v) {
      if (lead.is_zero()) continue;
      Scalar scale = lead.inv();
      for (auto& e : v) e *= scale;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Singular();
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(&pivots);
  if (pivots.size() != rows_ || pivots.back() >= cols_) throw Singular();
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.at(i, cols_ + j);
  return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw DimensionMismatch("solve: rhs length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
  Vec x(cols_, Scalar::zero(field_));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = r.at(pr, cols_);
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace coquasi
