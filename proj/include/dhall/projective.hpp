#pragma once

#include <optional>
#include <vector>

#include "dhall/rep.hpp"

namespace dhall {

using Mult = std::vector<int>;

/// P_v: basis of (P_v)_w is the set of paths v -> w.
Rep indecomposable_projective(const Quiver& quiver, int q, int v);
std::vector<Rep> indecomposable_projectives(const Quiver& quiver, int q);
/// Direct sum of m[v] copies of P_v, in vertex order.
Rep standard_projective(const Quiver& quiver, int q, const Mult& m);

KClass projective_class(const Quiver& quiver, const Mult& m);
/// m with sum m_v cl(P_v) = c, when it exists with m >= 0.
std::optional<Mult> projective_multiplicities(const Quiver& quiver, const KClass& c);
/// Like projective_multiplicities but allows negative entries.
std::vector<long> projective_coordinates(const Quiver& quiver, const KClass& c);

/// Dimensions of X / rad X.
Mult top_dims(const Quiver& quiver, const Rep& x);
bool is_projective(const Quiver& quiver, const Rep& x);

struct ProjectiveCover {
  Mult mult;
  Rep cover;
  RepMorphism map;  // surjection cover -> X
};
ProjectiveCover projective_cover(const Quiver& quiver, const Rep& x);

/// 0 -> P --f--> Q --cover--> X -> 0 with P, Q standard projective sums.
struct Resolution {
  Mult p_mult, q_mult;
  Rep p, q;
  RepMorphism f;
  RepMorphism cover;
};
Resolution minimal_resolution(const Quiver& quiver, const Rep& x);

/// For f: P -> Q between standard projective sums: no component P_v -> P_v
/// is an isomorphism, i.e. f(P) lies in rad Q.
bool is_radical_map(const Quiver& quiver, const Rep& q_rep, const RepMorphism& f);

/// Composite linear map along a path.
FqMatrix path_matrix(const Quiver& quiver, const Rep& x, const Path& p);

}  // namespace dhall
