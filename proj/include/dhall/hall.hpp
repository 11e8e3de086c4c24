#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhall/elements.hpp"
#include "dhall/session.hpp"

namespace dhall {

using HallElement = Element<RepKey>;
using HallTensor = Tensor<RepKey>;

/// [A] * K_alpha in the extended algebra.
struct ExtKey {
  RepKey a;
  KClass alpha;
  auto operator<=>(const ExtKey&) const = default;
  bool operator==(const ExtKey&) const = default;
  std::string to_string() const;
};
using ExtElement = Element<ExtKey>;
using ExtTensor = Tensor<ExtKey>;

/// g^L_{M,N} for fixed L, keyed by (M, N) = (quotient, sub).
using GTable = std::map<std::pair<RepKey, RepKey>, std::uint64_t>;

/// H(A), H_tw(A) and the extended algebra over a session, in the basis [A].
class HallAlgebra {
 public:
  explicit HallAlgebra(const Session& s) : s_(&s) {}
  HallAlgebra(const HallAlgebra&) = delete;
  HallAlgebra& operator=(const HallAlgebra&) = delete;

  const Session& session() const noexcept { return *s_; }

  HallElement unit() const { return HallElement::basis(s_->zero_key()); }
  HallElement basis(const RepKey& a) const { return HallElement::basis(a); }
  Coeff t_pow(long k) const { return Coeff::t_pow(k, s_->q()); }

  const GTable& g_table(const RepKey& l) const;
  std::uint64_t g(const RepKey& l, const RepKey& m, const RepKey& n) const;

  /// [A] <> [B] = sum_C g^C_{A,B} a_A a_B / a_C [C]
  HallElement hall_mul(const HallElement& x, const HallElement& y) const;
  /// [A] * [B] = t^<A,B> [A] <> [B]
  HallElement twisted_mul(const HallElement& x, const HallElement& y) const;
  /// sum_{h in Ext cocycles} [L_h] / q^(sum_v m_v n_v), a route independent of g-numbers
  HallElement hall_mul_by_extensions(const RepKey& a, const RepKey& b) const;

  /// Delta'([A]) = sum t^<B,C> g^A_{B,C} [B] (x) [C]
  HallTensor green_coproduct(const HallElement& x) const;
  Coeff counit(const HallElement& x) const;

  HallTensor tensor_mul_plain(const HallTensor& u, const HallTensor& v) const;
  /// ([a](x)[b])([c](x)[d]) = t^{(b,c)} (a*c) (x) (b*d)
  HallTensor tensor_mul_green_twisted(const HallTensor& u, const HallTensor& v) const;
  /// Either product on the legs, with or without the t^{(b,c)} factor.
  enum class Product { diamond, twisted };
  HallTensor tensor_mul(const HallTensor& u, const HallTensor& v, Product p, bool sym_twist) const;

  ExtElement ext_basis(const RepKey& a, const KClass& alpha) const { return ExtElement::basis({a, alpha}); }
  ExtElement k_element(const KClass& alpha) const { return ext_basis(s_->zero_key(), alpha); }
  ExtElement ext_unit() const { return k_element(KClass(s_->quiver().vertex_count())); }
  ExtElement extended_mul(const ExtElement& x, const ExtElement& y) const;
  /// Delta([A] K_a) = sum t^<B,C> g^A_{B,C} ([B] K_{C+a}) (x) ([C] K_a)
  ExtTensor extended_coproduct(const ExtElement& x) const;
  Coeff counit(const ExtElement& x) const;
  ExtTensor ext_tensor_mul(const ExtTensor& u, const ExtTensor& v) const;

  /// Structure constants {"L","M","N","g"} for all L with class <= bound.
  nlohmann::json export_structure_constants(const KClass& bound) const;

 private:
  HallElement basis_mul(const RepKey& a, const RepKey& b) const;

  const Session* s_;
  mutable std::shared_mutex mu_;
  mutable std::map<RepKey, std::unique_ptr<GTable>> g_;
  mutable std::map<std::pair<RepKey, RepKey>, HallElement> products_;
};

}  // namespace dhall
