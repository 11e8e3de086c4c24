#pragma once

#include <cstdint>
#include <vector>

#include "dhall/matrix.hpp"

namespace dhall {

/// Subspace of F_q^n stored as its canonical RREF basis (rows).
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of m.
  static Subspace span_rows(const FqMatrix& m);
  /// Span of the columns of m.
  static Subspace span_columns(const FqMatrix& m);
  static Subspace zero(int n, int q);
  static Subspace full(int n, int q);

  int ambient() const noexcept { return basis_.cols(); }
  int dim() const noexcept { return basis_.rows(); }
  int q() const noexcept { return basis_.q(); }
  const FqMatrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  /// Coordinates outside the pivots; the matching unit vectors span a complement.
  std::vector<int> free_coordinates() const;

  bool contains(std::span<const Residue> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  Vec coordinates(std::span<const Residue> v) const;
  /// v reduced against the basis; the free coordinates give its coset.
  Vec reduce(std::span<const Residue> v) const;

  Subspace operator+(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  auto operator<=>(const Subspace& o) const { return basis_.data() <=> o.basis_.data(); }

 private:
  explicit Subspace(RowEchelon e) : basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}
  FqMatrix basis_;
  std::vector<int> pivots_;
};

/// Number of k-dimensional subspaces of F_q^n via the product formula.
std::uint64_t gaussian_binomial(int n, int k, int q);

/// All k-dimensional subspaces of F_q^n, each as a canonical RREF basis.
std::vector<Subspace> enumerate_subspaces(int n, int k, int q, std::uint64_t budget = 1u << 20);

/// All subspaces of F_q^n of every dimension.
std::vector<Subspace> enumerate_all_subspaces(int n, int q, std::uint64_t budget = 1u << 20);

/// q^e, saturating at UINT64_MAX.
std::uint64_t ipow_sat(std::uint64_t q, int e);

}  // namespace dhall
