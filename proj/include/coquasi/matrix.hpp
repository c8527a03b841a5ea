#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coquasi/scalar.hpp"

namespace coquasi {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field. Row reduction pivots on the first
/// nonzero entry in column order, so all derived data (rank, null space,
/// inverse, solutions) is deterministic.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;

  /// Reduced row echelon form; optionally reports the pivot columns.
  Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
  std::size_t rank() const;

  /// Kernel basis in reduced echelon normal form, one vector per free
  /// column in ascending order, each scaled so its first nonzero entry is 1.
  std::vector<Vec> null_space() const;

  Matrix inverse() const;  // throws Singular

  /// Particular solution of A x = b with free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

}  // namespace coquasi
