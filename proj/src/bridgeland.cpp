#include "dhall/bridgeland.hpp"

#include <mutex>

namespace dhall {

std::string DHKey::to_string() const {
  return "[" + a.to_string() + "|" + b.to_string() + "]K" + alpha.to_string() + "K*" + beta.to_string();
}

DHKey star_key(const DHKey& k) { return {k.b, k.a, k.beta, k.alpha}; }

DHElement BridgelandAlgebra::unit() const { return k_element(zero_class()); }

DHElement BridgelandAlgebra::k_element(const KClass& alpha) const {
  return basis({s_->zero_key(), s_->zero_key(), alpha, zero_class()});
}

DHElement BridgelandAlgebra::k_star_element(const KClass& beta) const {
  return basis({s_->zero_key(), s_->zero_key(), zero_class(), beta});
}

DHElement BridgelandAlgebra::cc_element(const RepKey& a, const RepKey& b) const {
  return basis({a, b, zero_class(), zero_class()});
}

DHElement BridgelandAlgebra::normalize(const ComplexKey& k) const {
  const Quiver& quiver = s_->quiver();
  KClass p = projective_class(quiver, k.p), q = projective_class(quiver, k.q);
  KClass n = k.a.dims - k.b.dims;
  return DHElement::basis({k.a, k.b, p, q}, t_pow(s_->euler(n, p) - s_->euler(n, q)));
}

DHElement BridgelandAlgebra::normalize(const ComplexElement& x) const {
  return linear_map<DHKey>(x, [&](const ComplexKey& k) { return normalize(k); });
}

DHElement BridgelandAlgebra::nn_product(const RepKey& a1, const RepKey& b1, const RepKey& a2,
                                        const RepKey& b2) const {
  auto key = std::make_tuple(a1, b1, a2, b2);
  {
    std::shared_lock lock(mu_);
    auto it = nn_.find(key);
    if (it != nn_.end()) return it->second;
  }
  Mult none(static_cast<size_t>(s_->quiver().vertex_count()), 0);
  ComplexElement x = ComplexElement::basis({a1, b1, none, none});
  ComplexElement y = ComplexElement::basis({a2, b2, none, none});
  DHElement r = normalize(ch_.twisted_mul(x, y));
  std::unique_lock lock(mu_);
  nn_.try_emplace(key, r);
  return r;
}

DHElement BridgelandAlgebra::dh_mul(const DHElement& x, const DHElement& y) const {
  return bilinear(x, y, [&](const DHKey& u, const DHKey& v) {
    // K_a K^*_b [N] = t^{(a,N^) - (b,N^)} [N] K_a K^*_b
    KClass nv = hat(v);
    Coeff c = t_pow(s_->sym_euler(u.alpha, nv) - s_->sym_euler(u.beta, nv));
    DHElement r;
    DHElement nn = nn_product(u.a, u.b, v.a, v.b);
    for (const auto& [k, w] : nn.terms())
      r.add(DHKey{k.a, k.b, k.alpha + u.alpha + v.alpha, k.beta + u.beta + v.beta}, w * c);
    return r;
  });
}

DHElement BridgelandAlgebra::e_element(const RepKey& a) const {
  KClass p = s_->p_class(a);
  return dh_mul(k_element(-p), cc_element(a, s_->zero_key())).scaled(t_pow(s_->euler(p, a.dims)));
}

DHElement BridgelandAlgebra::star(const DHElement& x) const {
  return linear_map<DHKey>(x, [](const DHKey& k) { return DHElement::basis(star_key(k)); });
}

Coeff BridgelandAlgebra::counit(const DHElement& x) const {
  Coeff r;
  for (const auto& [k, c] : x.terms())
    if (k.a == s_->zero_key() && k.b == s_->zero_key()) r += c;
  return r;
}

DHTensor BridgelandAlgebra::tensor_mul(const DHTensor& u, const DHTensor& v) const {
  auto mul = [&](const DHElement& a, const DHElement& b) { return dh_mul(a, b); };
  return dhall::tensor_mul(u, v, mul, [](const DHKey&, const DHKey&) { return Coeff(1); });
}

DHTensor BridgelandAlgebra::k_tensor(const KClass& alpha, const KClass& beta) const {
  DHElement k = basis({s_->zero_key(), s_->zero_key(), alpha, beta});
  return tensor(k, k);
}

DHTensor BridgelandAlgebra::delta_prime(const DHElement& x, const ChiMap& chi) const {
  Mult none(static_cast<size_t>(s_->quiver().vertex_count()), 0);
  DHTensor r;
  for (const auto& [k, c] : x.terms()) {
    DHTensor d;
    for (const auto& [mn, counts] : ch_.subobjects({k.a, k.b, none, none})) {
      if (!counts.e0) continue;
      Coeff w = t_pow(ch_.chi(chi, mn.first, mn.second)) * Coeff(static_cast<long>(counts.e0));
      d.add(tensor(normalize(mn.first), normalize(mn.second)), w);
    }
    r.add(tensor_mul(d, k_tensor(k.alpha, k.beta)), c);
  }
  return r;
}

DHTensor BridgelandAlgebra::delta_e0_legs(const RepKey& a, bool starred, const ChiMap& chi) const {
  auto key = std::make_tuple(chi.name, a, starred);
  {
    std::shared_lock lock(mu_);
    auto it = legs_.find(key);
    if (it != legs_.end()) return it->second;
  }
  Mult none(static_cast<size_t>(s_->quiver().vertex_count()), 0);
  ComplexKey l = starred ? ComplexKey{s_->zero_key(), a, none, none} : ComplexKey{a, s_->zero_key(), none, none};
  DHTensor r;
  for (const auto& [mn, counts] : ch_.subobjects(l)) {
    if (!counts.e0) continue;
    const auto& [m, n] = mn;
    auto [m1, m0] = ch_.pieces(m);
    auto [n1, n0] = ch_.pieces(n);
    Coeff w = t_pow(ch_.chi(chi, m, n)) * Coeff(static_cast<long>(counts.e0));
    DHElement left, right;
    if (!starred) {
      left = dh_mul(k_element(n0), normalize(m));
      right = dh_mul(normalize(n), k_element(m1));
    } else {
      left = dh_mul(k_star_element(n1), normalize(m));
      right = dh_mul(normalize(n), k_star_element(m0));
    }
    r.add(tensor(left, right), w);
  }
  std::unique_lock lock(mu_);
  legs_.try_emplace(key, r);
  return r;
}

DHTensor BridgelandAlgebra::delta(const DHElement& x, const ChiMap& chi) const {
  DHTensor r;
  for (const auto& [k, c] : x.terms()) {
    DHTensor d = tensor_mul(delta_e0_legs(k.a, false, chi), delta_e0_legs(k.b, true, chi));
    r.add(tensor_mul(d, k_tensor(k.alpha, k.beta)), c);
  }
  return r;
}

DHElement BridgelandAlgebra::embed_plus(const ExtElement& x) const {
  return linear_map<DHKey>(x, [&](const ExtKey& k) { return dh_mul(e_element(k.a), k_element(k.alpha)); });
}

DHElement BridgelandAlgebra::embed_minus(const ExtElement& x) const {
  return linear_map<DHKey>(x, [&](const ExtKey& k) { return dh_mul(f_element(k.a), k_star_element(k.alpha)); });
}

DHTensor BridgelandAlgebra::embed_plus(const ExtTensor& x) const {
  auto f = [&](const ExtKey& k) { return embed_plus(ExtElement::basis(k)); };
  return tensor_map<DHKey>(x, f, f);
}

DHTensor BridgelandAlgebra::embed_minus(const ExtTensor& x) const {
  auto f = [&](const ExtKey& k) { return embed_minus(ExtElement::basis(k)); };
  return tensor_map<DHKey>(x, f, f);
}

}  // namespace dhall
