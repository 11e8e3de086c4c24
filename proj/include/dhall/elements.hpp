#pragma once

#include <map>
#include <tuple>
#include <utility>

#include "dhall/coeff.hpp"

namespace dhall {

/// Finite linear combination of basis keys. Zero coefficients are never stored.
template <class Key>
class Element {
 public:
  using key_type = Key;
  using Map = std::map<Key, Coeff>;

  Element() = default;
  static Element basis(const Key& k, const Coeff& c = Coeff(1)) {
    Element e;
    e.add(k, c);
    return e;
  }

  void add(const Key& k, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add(const Element& o, const Coeff& c = Coeff(1)) {
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }

  const Map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  Element operator+(const Element& o) const {
    Element r = *this;
    r.add(o);
    return r;
  }
  Element operator-(const Element& o) const {
    Element r = *this;
    r.add(o, Coeff(-1));
    return r;
  }
  Element scaled(const Coeff& c) const {
    Element r;
    r.add(*this, c);
    return r;
  }
  Element& operator+=(const Element& o) {
    add(o);
    return *this;
  }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

 private:
  Map terms_;
};

template <class Key>
using Tensor = Element<std::pair<Key, Key>>;

template <class Key>
Tensor<Key> tensor(const Element<Key>& x, const Element<Key>& y) {
  Tensor<Key> r;
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) r.add({a, b}, u * v);
  return r;
}

template <class Key>
Tensor<Key> flip(const Tensor<Key>& x) {
  Tensor<Key> r;
  for (const auto& [k, v] : x.terms()) r.add({k.second, k.first}, v);
  return r;
}

/// Linear extension of f: Key -> Element<Out>.
template <class Out, class Key, class F>
Element<Out> linear_map(const Element<Key>& x, F&& f) {
  Element<Out> r;
  for (const auto& [k, c] : x.terms()) r.add(f(k), c);
  return r;
}

/// Bilinear extension of f: (Key, Key) -> Element<Key>.
template <class Key, class F>
Element<Key> bilinear(const Element<Key>& x, const Element<Key>& y, F&& f) {
  Element<Key> r;
  for (const auto& [a, u] : x.terms())
    for (const auto& [b, v] : y.terms()) r.add(f(a, b), u * v);
  return r;
}

/// (f (x) g) applied to a tensor.
template <class Out, class Key, class F, class G>
Tensor<Out> tensor_map(const Tensor<Key>& x, F&& f, G&& g) {
  Tensor<Out> r;
  for (const auto& [k, c] : x.terms()) r.add(tensor(f(k.first), g(k.second)), c);
  return r;
}

/// Componentwise product (a (x) b)(c (x) d) = twist(b, c) (ac) (x) (bd).
template <class Key, class Mul, class Twist>
Tensor<Key> tensor_mul(const Tensor<Key>& u, const Tensor<Key>& v, Mul&& mul, Twist&& twist) {
  Tensor<Key> r;
  for (const auto& [ab, x] : u.terms())
    for (const auto& [cd, y] : v.terms()) {
      Coeff c = x * y * twist(ab.second, cd.first);
      if (c.is_zero()) continue;
      r.add(tensor(mul(Element<Key>::basis(ab.first), Element<Key>::basis(cd.first)),
                   mul(Element<Key>::basis(ab.second), Element<Key>::basis(cd.second))),
            c);
    }
  return r;
}

template <class Key>
using Tensor3 = Element<std::tuple<Key, Key, Key>>;

/// (Delta (x) id) applied to a tensor; delta maps a basis key to a Tensor<Key>.
template <class Key, class D>
Tensor3<Key> delta_left(const Tensor<Key>& x, D&& delta) {
  Tensor3<Key> r;
  for (const auto& [k, c] : x.terms()) {
    const Tensor<Key> d = delta(k.first);
    for (const auto& [ab, v] : d.terms()) r.add({ab.first, ab.second, k.second}, c * v);
  }
  return r;
}

/// (id (x) Delta) applied to a tensor.
template <class Key, class D>
Tensor3<Key> delta_right(const Tensor<Key>& x, D&& delta) {
  Tensor3<Key> r;
  for (const auto& [k, c] : x.terms()) {
    const Tensor<Key> d = delta(k.second);
    for (const auto& [ab, v] : d.terms()) r.add({k.first, ab.first, ab.second}, c * v);
  }
  return r;
}

}  // namespace dhall
