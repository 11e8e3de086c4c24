#include "dhall/matrix.hpp"

#include <stdexcept>

namespace dhall {

namespace {

void require_same_field(const FqMatrix& a, const FqMatrix& b) {
  if (a.q() != b.q()) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

FqMatrix::FqMatrix(int rows, int cols, int q)
    : rows_(rows), cols_(cols), q_(q), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

FqMatrix FqMatrix::identity(int n, int q) {
  FqMatrix m(n, n, q);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(const std::vector<Vec>& rows, int cols, int q) {
  FqMatrix m(static_cast<int>(rows.size()), cols, q);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(r, c) = static_cast<Residue>(rows[r][c] % q);
  }
  return m;
}

Vec FqMatrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  FqMatrix m(rows_, o.cols_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int a = (*this)(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j) m(i, j) = static_cast<Residue>((m(i, j) + a * o(k, j)) % q_);
    }
  return m;
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  FqMatrix m(*this);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = static_cast<Residue>((data_[i] + o.data_[i]) % q_);
  return m;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const { return *this + (-o); }

FqMatrix FqMatrix::operator-() const {
  FqMatrix m(*this);
  for (auto& x : m.data_) x = static_cast<Residue>((q_ - x) % q_);
  return m;
}

FqMatrix FqMatrix::scaled(Residue s) const {
  FqMatrix m(*this);
  for (auto& x : m.data_) x = static_cast<Residue>(x * s % q_);
  return m;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix m(cols_, rows_, q_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Vec FqMatrix::apply(std::span<const Residue> v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    int s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = static_cast<Residue>(s % q_);
  }
  return out;
}

bool FqMatrix::is_zero() const noexcept {
  for (auto x : data_)
    if (x) return false;
  return true;
}

FqMatrix block2(const FqMatrix& a, const FqMatrix& b, const FqMatrix& c, const FqMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  FqMatrix m(a.rows(), a.cols() + b.cols(), a.q());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  FqMatrix m(a.rows() + b.rows(), a.cols(), a.q());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

RowEchelon row_reduce(const FqMatrix& input) {
  const int q = input.q();
  const PrimeField& f = field_of(q);
  FqMatrix m = input;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Residue s = f.inv(m(r, c));
    for (int j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), s);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Residue factor = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  FqMatrix reduced(r, m.cols(), q);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

int rank(const FqMatrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

FqMatrix kernel_basis(const FqMatrix& m) {
  const int q = m.q();
  RowEchelon e = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<int> free;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  FqMatrix k(m.cols(), static_cast<int>(free.size()), q);
  for (size_t j = 0; j < free.size(); ++j) {
    k(free[j], static_cast<int>(j)) = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) {
      Residue v = e.reduced(static_cast<int>(i), free[j]);
      k(e.pivots[i], static_cast<int>(j)) = static_cast<Residue>((q - v) % q);
    }
  }
  return k;
}

bool is_invertible(const FqMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<FqMatrix> inverse(const FqMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  RowEchelon e = row_reduce(hstack(m, FqMatrix::identity(n, m.q())));
  if (static_cast<int>(e.pivots.size()) < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  FqMatrix inv(n, n, m.q());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<LinearSolution> solve_linear(const FqMatrix& m, std::span<const Residue> target) {
  if (static_cast<int>(target.size()) != m.rows())
    throw std::invalid_argument("solve_linear: target length " + std::to_string(target.size()) +
                                " does not match " + std::to_string(m.rows()) + " rows");
  FqMatrix aug(m.rows(), m.cols() + 1, m.q());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = static_cast<Residue>(target[i] % m.q());
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(static_cast<int>(i), m.cols());
  return LinearSolution{std::move(x), kernel_basis(m)};
}

}  // namespace dhall
