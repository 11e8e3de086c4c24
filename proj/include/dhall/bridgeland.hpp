#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "dhall/complex_hall.hpp"
#include "dhall/hall.hpp"

namespace dhall {

/// [C_A + C_B^*] * K_alpha * K^*_beta
struct DHKey {
  RepKey a, b;
  KClass alpha, beta;
  auto operator<=>(const DHKey&) const = default;
  bool operator==(const DHKey&) const = default;
  std::string to_string() const;
};
using DHElement = Element<DHKey>;
using DHTensor = Tensor<DHKey>;

DHKey star_key(const DHKey& k);

/// The localized Hall algebra DH(A) in the basis [C_A + C_B^*] K_alpha K^*_beta.
class BridgelandAlgebra {
 public:
  explicit BridgelandAlgebra(const Session& s) : s_(&s), ch_(s) {}
  BridgelandAlgebra(const BridgelandAlgebra&) = delete;
  BridgelandAlgebra& operator=(const BridgelandAlgebra&) = delete;

  const Session& session() const noexcept { return *s_; }
  const ComplexHallAlgebra& complexes() const noexcept { return ch_; }
  Coeff t_pow(long k) const { return Coeff::t_pow(k, s_->q()); }
  KClass zero_class() const { return KClass(s_->quiver().vertex_count()); }

  DHElement unit() const;
  DHElement basis(const DHKey& k) const { return DHElement::basis(k); }
  DHElement k_element(const KClass& alpha) const;
  DHElement k_star_element(const KClass& beta) const;
  /// [C_A + C_B^*]
  DHElement cc_element(const RepKey& a, const RepKey& b) const;
  /// A complex class rewritten in normal form:
  /// [N + K_P + K_Q^*] = t^{<N^,P> - <N^,Q>} [N] K_P K^*_Q
  DHElement normalize(const ComplexKey& k) const;
  DHElement normalize(const ComplexElement& x) const;
  /// cl M_0 - cl M_1 of the non-acyclic part
  KClass hat(const DHKey& k) const { return k.a.dims - k.b.dims; }

  DHElement dh_mul(const DHElement& x, const DHElement& y) const;
  /// E_A = t^{<P_A,A>} K_{-P_A} * [C_A]
  DHElement e_element(const RepKey& a) const;
  DHElement f_element(const RepKey& a) const { return star(e_element(a)); }
  DHElement star(const DHElement& x) const;
  Coeff counit(const DHElement& x) const;

  /// Delta'_{chi,E_0}([L]) K-factors duplicated into both legs.
  DHTensor delta_prime(const DHElement& x, const ChiMap& chi) const;
  /// Delta_chi: Delta_{chi,E_0}([C_A]) Delta^op_{chi,E_0}([C_B^*]) (K_a (x) K_a)(K^*_b (x) K^*_b).
  DHTensor delta(const DHElement& x, const ChiMap& chi) const;
  DHTensor delta_prime(const DHKey& k, const ChiMap& chi) const { return delta_prime(basis(k), chi); }
  DHTensor delta(const DHKey& k, const ChiMap& chi) const { return delta(basis(k), chi); }
  /// (x (x) y)(z (x) w) = (x*z) (x) (y*w)
  DHTensor tensor_mul(const DHTensor& u, const DHTensor& v) const;

  DHElement embed_plus(const ExtElement& x) const;
  DHElement embed_minus(const ExtElement& x) const;
  DHTensor embed_plus(const ExtTensor& x) const;
  DHTensor embed_minus(const ExtTensor& x) const;

 private:
  DHElement nn_product(const RepKey& a1, const RepKey& b1, const RepKey& a2, const RepKey& b2) const;
  DHTensor delta_e0_legs(const RepKey& a, bool starred, const ChiMap& chi) const;
  DHTensor k_tensor(const KClass& alpha, const KClass& beta) const;

  const Session* s_;
  ComplexHallAlgebra ch_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::tuple<RepKey, RepKey, RepKey, RepKey>, DHElement> nn_;
  mutable std::map<std::tuple<std::string, RepKey, bool>, DHTensor> legs_;
};

}  // namespace dhall
