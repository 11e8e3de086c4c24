#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dhall {

using Residue = std::uint8_t;

/// Thrown when an enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic in the prime field F_q (q a prime below 16).
class PrimeField {
 public:
  explicit PrimeField(int q);

  int q() const noexcept { return q_; }

  Residue add(Residue a, Residue b) const noexcept {
    int s = a + b;
    return static_cast<Residue>(s >= q_ ? s - q_ : s);
  }
  Residue sub(Residue a, Residue b) const noexcept {
    int s = a - b;
    return static_cast<Residue>(s < 0 ? s + q_ : s);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : static_cast<Residue>(q_ - a); }
  Residue mul(Residue a, Residue b) const noexcept { return static_cast<Residue>((a * b) % q_); }
  Residue inv(Residue a) const;
  Residue reduce(long long v) const noexcept {
    long long r = v % q_;
    return static_cast<Residue>(r < 0 ? r + q_ : r);
  }
  // generator of the multiplicative group
  Residue primitive_root() const noexcept { return root_; }

 private:
  int q_;
  Residue root_ = 1;
  std::array<Residue, 16> inv_{};
};

bool is_small_prime(int q) noexcept;
/// Shared immutable field instance for q.
const PrimeField& field_of(int q);

/// A single element of F_q, carrying its modulus.
class FieldElement {
 public:
  FieldElement(long long value, int q);

  Residue value() const noexcept { return v_; }
  int q() const noexcept { return q_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  bool operator==(const FieldElement& o) const = default;

 private:
  void same_field(const FieldElement& o) const;
  Residue v_;
  int q_;
};

}  // namespace dhall
