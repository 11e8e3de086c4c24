#include "dhall/field.hpp"

namespace dhall {

bool is_small_prime(int q) noexcept {
  return q == 2 || q == 3 || q == 5 || q == 7 || q == 11 || q == 13;
}

PrimeField::PrimeField(int q) : q_(q) {
  if (!is_small_prime(q)) throw std::invalid_argument("field size must be a prime below 16, got " + std::to_string(q));
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (a * b % q == 1) inv_[a] = static_cast<Residue>(b);
  for (int g = 1; g < q; ++g) {
    int x = 1, order = 0;
    do {
      x = x * g % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) {
      root_ = static_cast<Residue>(g);
      break;
    }
  }
}

const PrimeField& field_of(int q) {
  static const PrimeField fields[] = {PrimeField(2), PrimeField(3), PrimeField(5),
                                      PrimeField(7), PrimeField(11), PrimeField(13)};
  for (const auto& f : fields)
    if (f.q() == q) return f;
  throw std::invalid_argument("field size must be a prime below 16, got " + std::to_string(q));
}

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

FieldElement::FieldElement(long long value, int q) : q_(q) {
  if (!is_small_prime(q)) throw std::invalid_argument("field size must be a prime below 16");
  long long r = value % q;
  v_ = static_cast<Residue>(r < 0 ? r + q : r);
}

void FieldElement::same_field(const FieldElement& o) const {
  if (o.q_ != q_) throw std::invalid_argument("field elements over different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(o);
  return FieldElement(v_ + o.v_, q_);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(o);
  return FieldElement(v_ - o.v_, q_);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(o);
  return FieldElement(v_ * o.v_, q_);
}
FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }
FieldElement FieldElement::operator-() const { return FieldElement(-static_cast<int>(v_), q_); }
FieldElement FieldElement::inverse() const { return FieldElement(field_of(q_).inv(v_), q_); }

}  // namespace dhall
