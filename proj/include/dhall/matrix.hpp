#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dhall/field.hpp"

namespace dhall {

using Vec = std::vector<Residue>;

/// Dense matrix over F_q, row-major.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols, int q);

  static FqMatrix identity(int n, int q);
  static FqMatrix from_rows(const std::vector<Vec>& rows, int cols, int q);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int q() const noexcept { return q_; }

  Residue operator()(int r, int c) const noexcept { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Residue& operator()(int r, int c) noexcept { return data_[static_cast<size_t>(r) * cols_ + c]; }
  std::span<const Residue> row(int r) const noexcept {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }
  Vec column(int c) const;
  const std::vector<Residue>& data() const noexcept { return data_; }

  FqMatrix operator*(const FqMatrix& o) const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator-() const;
  FqMatrix scaled(Residue s) const;
  FqMatrix transpose() const;
  Vec apply(std::span<const Residue> v) const;

  bool is_zero() const noexcept;
  bool operator==(const FqMatrix& o) const = default;

 private:
  int rows_ = 0, cols_ = 0, q_ = 2;
  std::vector<Residue> data_;
};

/// Block matrix [[a, b], [c, d]].
FqMatrix block2(const FqMatrix& a, const FqMatrix& b, const FqMatrix& c, const FqMatrix& d);
FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

struct RowEchelon {
  FqMatrix reduced;         // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

RowEchelon row_reduce(const FqMatrix& m);
int rank(const FqMatrix& m);
/// Columns form a basis of {x : m x = 0}.
FqMatrix kernel_basis(const FqMatrix& m);
bool is_invertible(const FqMatrix& m);
std::optional<FqMatrix> inverse(const FqMatrix& m);

struct LinearSolution {
  Vec particular;
  FqMatrix kernel;  // columns span the solution space of the homogeneous system
};

/// Solves m x = target; nullopt if inconsistent, throws on a dimension mismatch.
std::optional<LinearSolution> solve_linear(const FqMatrix& m, std::span<const Residue> target);

}  // namespace dhall
