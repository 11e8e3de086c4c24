#include "dhall/coeff.hpp"

#include <stdexcept>

namespace dhall {

Coeff::Coeff(mpq_class a, mpq_class b, int q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && q_ <= 0) throw std::invalid_argument("coefficient with a t-part needs q");
}

Coeff Coeff::t_pow(long k, int q) {
  if (q <= 1) throw std::invalid_argument("t_pow needs q >= 2");
  long h = k >= 0 ? k / 2 : -((-k + 1) / 2);  // floor(k/2)
  mpq_class base = 1;
  mpz_class qp;
  mpz_ui_pow_ui(qp.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(h >= 0 ? h : -h));
  base = h >= 0 ? mpq_class(qp) : mpq_class(1) / mpq_class(qp);
  if (k - 2 * h == 0) return Coeff(base, 0, q);
  return Coeff(0, base, q);
}

int Coeff::merged_q(const Coeff& o) const {
  if (q_ && o.q_ && q_ != o.q_) throw std::invalid_argument("coefficients over different q");
  return q_ ? q_ : o.q_;
}

Coeff Coeff::operator+(const Coeff& o) const { return Coeff(a_ + o.a_, b_ + o.b_, merged_q(o)); }
Coeff Coeff::operator-(const Coeff& o) const { return Coeff(a_ - o.a_, b_ - o.b_, merged_q(o)); }
Coeff Coeff::operator-() const { return Coeff(-a_, -b_, q_); }

Coeff Coeff::operator*(const Coeff& o) const {
  int q = merged_q(o);
  mpq_class bb = b_ * o.b_;
  mpq_class a = a_ * o.a_;
  if (bb != 0) a += bb * q;
  return Coeff(a, a_ * o.b_ + b_ * o.a_, q);
}

Coeff Coeff::inverse() const {
  // (a + b t)^{-1} = (a - b t) / (a^2 - q b^2); the norm vanishes only at 0 since q is not a square
  mpq_class norm = a_ * a_ - b_ * b_ * q_;
  if (norm == 0) throw std::domain_error("inverse of zero coefficient");
  return Coeff(a_ / norm, -b_ / norm, q_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

std::string Coeff::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string tb = b_ == 1 ? "t" : (b_ == -1 ? "-t" : b_.get_str() + "*t");
  if (a_ == 0) return tb;
  if (b_ < 0) return a_.get_str() + " - " + (b_ == -1 ? "t" : mpq_class(-b_).get_str() + "*t");
  return a_.get_str() + " + " + tb;
}

}  // namespace dhall
