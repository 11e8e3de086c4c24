#pragma once

#include <map>
#include <memory>
#include <shared_mutex>

#include "dhall/elements.hpp"
#include "dhall/kernels.hpp"

namespace dhall {

using ComplexElement = Element<ComplexKey>;
using ComplexTensor = Tensor<ComplexKey>;

/// Bilinear rule chi(M, N) = sum_{i,j in {1,0}} cl(M_i)^T B_ij cl(N_j) on graded classes.
struct ChiMap {
  std::string name;
  // b[i][j] pairs M_i with N_j, index 0 for degree 1 and 1 for degree 0
  std::vector<std::vector<long>> b[2][2];

  long operator()(const KClass& m1, const KClass& m0, const KClass& n1, const KClass& n0) const;

  /// <M,N>' = <M_0,N_0> + <M_1,N_1>
  static ChiMap euler_prime(const Quiver& quiver);
  /// chi_0(M,N) = -<N,M>'
  static ChiMap chi0(const Quiver& quiver);
  static ChiMap by_name(const Quiver& quiver, const std::string& name);
};

/// The chi condition on random graded class tuples with entries in [-3, 3],
/// where cl M_i = cl P_i + cl Q_i and cl R_i = cl Q_i + cl N_i.
bool satisfies_chi_condition(const ChiMap& chi, int vertex_count, int samples = 2000);

/// Twisted Hall algebra of C(P) on complex keys, with the naive and E_0 coproducts.
class ComplexHallAlgebra {
 public:
  explicit ComplexHallAlgebra(const Session& s) : s_(&s) {}
  ComplexHallAlgebra(const ComplexHallAlgebra&) = delete;
  ComplexHallAlgebra& operator=(const ComplexHallAlgebra&) = delete;

  const Session& session() const noexcept { return *s_; }
  Coeff t_pow(long k) const { return Coeff::t_pow(k, s_->q()); }

  const Complex& complex(const ComplexKey& k) const;
  /// (cl M_1, cl M_0)
  std::pair<KClass, KClass> pieces(const ComplexKey& k) const { return key_pieces(*s_, k); }
  /// cl M_0 - cl M_1
  KClass hat(const ComplexKey& k) const;
  /// <M,N>'
  long euler_prime(const ComplexKey& m, const ComplexKey& n) const;
  long chi(const ChiMap& c, const ComplexKey& m, const ComplexKey& n) const;

  /// [M] <> [N] = sum_{h in Z^1(M,N)} [L_h] / |Hom_1(M_1,N_1) x Hom_0(M_0,N_0)|
  ComplexElement hall_mul(const ComplexKey& m, const ComplexKey& n) const;
  /// [M] * [N] = t^{<M,N>'} [M] <> [N]
  ComplexElement twisted_mul(const ComplexElement& x, const ComplexElement& y) const;

  /// Subobject counts of L by (quotient, sub), projective quotients only.
  const SubobjectTally& subobjects(const ComplexKey& l) const;
  /// sum t^chi g^L_{M,N} [M] (x) [N]
  ComplexTensor delta_naive(const ComplexElement& x, const ChiMap& chi) const;
  /// sum t^chi w^L_{M,N} [M] (x) [N], E_0 conflations only
  ComplexTensor delta_e0(const ComplexElement& x, const ChiMap& chi) const;
  Coeff counit(const ComplexElement& x) const;

 private:
  const Session* s_;
  mutable std::shared_mutex mu_;
  mutable std::map<ComplexKey, std::unique_ptr<Complex>> complexes_;
  mutable std::map<ComplexKey, std::unique_ptr<SubobjectTally>> subs_;
  mutable std::map<std::pair<ComplexKey, ComplexKey>, ComplexElement> products_;
};

}  // namespace dhall
