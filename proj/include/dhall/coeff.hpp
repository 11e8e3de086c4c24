#pragma once

#include <gmpxx.h>

#include <string>

namespace dhall {

/// Exact element a + b t of Q(t), t^2 = q.
///
/// A coefficient with b = 0 may have q = 0 ("plain rational"); it adopts the
/// field of whatever it is combined with.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Coeff(mpq_class a, mpq_class b = 0, int q = 0);

  /// t^k
  static Coeff t_pow(long k, int q);

  const mpq_class& rational() const noexcept { return a_; }
  const mpq_class& sqrt_part() const noexcept { return b_; }
  int q() const noexcept { return q_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff inverse() const;

  bool operator==(const Coeff& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// "a + b*t" with t written as "t"
  std::string to_string() const;

 private:
  int merged_q(const Coeff& o) const;
  mpq_class a_ = 0, b_ = 0;
  int q_ = 0;
};

}  // namespace dhall
