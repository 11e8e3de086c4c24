#include "dhall/subspace.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace dhall {

std::uint64_t ipow_sat(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

Subspace Subspace::span_rows(const FqMatrix& m) { return Subspace(row_reduce(m)); }

Subspace Subspace::span_columns(const FqMatrix& m) { return Subspace(row_reduce(m.transpose())); }

Subspace Subspace::zero(int n, int q) { return Subspace(RowEchelon{FqMatrix(0, n, q), {}}); }

Subspace Subspace::full(int n, int q) {
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  return Subspace(RowEchelon{FqMatrix::identity(n, q), piv});
}

std::vector<int> Subspace::free_coordinates() const {
  std::vector<char> is_pivot(ambient(), 0);
  for (int p : pivots_) is_pivot[p] = 1;
  std::vector<int> out;
  for (int c = 0; c < ambient(); ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

Vec Subspace::reduce(std::span<const Residue> v) const {
  if (static_cast<int>(v.size()) != ambient()) throw std::invalid_argument("vector length does not match subspace ambient");
  const int q = this->q();
  Vec r(v.begin(), v.end());
  for (int i = 0; i < dim(); ++i) {
    int c = r[pivots_[i]];
    if (!c) continue;
    for (int j = 0; j < ambient(); ++j) r[j] = static_cast<Residue>((r[j] + (q - c) * basis_(i, j)) % q);
  }
  return r;
}

bool Subspace::contains(std::span<const Residue> v) const {
  for (auto x : reduce(v))
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vec Subspace::coordinates(std::span<const Residue> v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const { return span_rows(vstack(basis_, o.basis_)); }

std::uint64_t gaussian_binomial(int n, int k, int q) {
  if (k < 0 || k > n) return 0;
  // prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), exact at each step
  unsigned __int128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow_sat(q, n - i) - 1;
    den *= ipow_sat(q, i + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

namespace {

void fill_rref(int n, int k, int q, const std::vector<int>& piv, std::vector<Subspace>& out) {
  std::vector<std::pair<int, int>> slots;
  std::vector<char> is_pivot(n, 0);
  for (int p : piv) is_pivot[p] = 1;
  for (int i = 0; i < k; ++i)
    for (int c = piv[i] + 1; c < n; ++c)
      if (!is_pivot[c]) slots.emplace_back(i, c);
  std::uint64_t total = ipow_sat(q, static_cast<int>(slots.size()));
  FqMatrix m(k, n, q);
  for (int i = 0; i < k; ++i) m(i, piv[i]) = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (auto [i, c] : slots) {
      m(i, c) = static_cast<Residue>(x % q);
      x /= q;
    }
    out.push_back(Subspace::span_rows(m));
  }
}

void choose_pivots(int n, int k, int q, int start, std::vector<int>& piv, std::vector<Subspace>& out) {
  if (static_cast<int>(piv.size()) == k) {
    fill_rref(n, k, q, piv, out);
    return;
  }
  for (int c = start; c < n; ++c) {
    piv.push_back(c);
    choose_pivots(n, k, q, c + 1, piv, out);
    piv.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(int n, int k, int q, std::uint64_t budget) {
  field_of(q);
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("enumerate_subspaces: need 0 <= k <= n");
  std::uint64_t count = gaussian_binomial(n, k, q);
  if (count > budget)
    throw BudgetExceeded("enumerate_subspaces: " + std::to_string(count) + " subspaces exceed budget " +
                         std::to_string(budget));
  std::vector<Subspace> out;
  out.reserve(count);
  std::vector<int> piv;
  choose_pivots(n, k, q, 0, piv, out);
  return out;
}

std::vector<Subspace> enumerate_all_subspaces(int n, int q, std::uint64_t budget) {
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    auto part = enumerate_subspaces(n, k, q, budget);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace dhall
