#pragma once

#include <cstdint>
#include <vector>

#include "dhall/matrix.hpp"
#include "dhall/quiver.hpp"
#include "dhall/subspace.hpp"

namespace dhall {

/// Representation: a space F_q^{dims[v]} per vertex and a matrix per arrow
/// (dims[target] x dims[source]).
struct Rep {
  int q = 2;
  std::vector<int> dims;
  std::vector<FqMatrix> maps;

  KClass dim_vector() const;
  int total_dim() const;
  bool operator==(const Rep&) const = default;
};

/// Per-vertex linear maps; a morphism of representations when it commutes with the arrows.
struct RepMorphism {
  std::vector<FqMatrix> at;
  bool operator==(const RepMorphism&) const = default;
};

/// Per-vertex subspaces of a representation.
struct SubRep {
  std::vector<Subspace> at;
  KClass dim_vector() const;
  auto operator<=>(const SubRep& o) const { return at <=> o.at; }
  bool operator==(const SubRep& o) const { return at == o.at; }
};

Rep zero_rep(const Quiver& quiver, int q);
/// Representation with the given dimensions and all arrows zero.
Rep semisimple_rep(const Quiver& quiver, const KClass& dims, int q);
void validate_rep(const Quiver& quiver, const Rep& x);
Rep direct_sum(const Rep& x, const Rep& y);

RepMorphism zero_morphism(const Rep& from, const Rep& to);
RepMorphism identity_morphism(const Rep& x);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
RepMorphism operator+(const RepMorphism& f, const RepMorphism& g);
RepMorphism scaled(const RepMorphism& f, Residue s);
RepMorphism negated(const RepMorphism& f);
/// [[f, 0], [0, g]]
RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g);
bool is_zero(const RepMorphism& f);
bool is_morphism(const Quiver& quiver, const Rep& from, const Rep& to, const RepMorphism& f);
bool is_iso(const RepMorphism& f);

/// Basis of Hom(X, Y) as an F_q-space.
std::vector<RepMorphism> hom_basis(const Quiver& quiver, const Rep& x, const Rep& y);
int hom_dim(const Quiver& quiver, const Rep& x, const Rep& y);
/// sum_i c_i basis_i
RepMorphism combine(const std::vector<RepMorphism>& basis, std::span<const Residue> c, const Rep& from, const Rep& to);
/// |Hom(X, Y)|
std::uint64_t hom_count(const Quiver& quiver, const Rep& x, const Rep& y);
/// |Aut(X)| by exhaustive search over End(X).
std::uint64_t aut_count(const Quiver& quiver, const Rep& x, std::uint64_t budget = 1u << 20);

bool is_subrep(const Quiver& quiver, const Rep& x, const SubRep& u);
SubRep image(const RepMorphism& f, int q);
SubRep kernel(const RepMorphism& f, const Rep& from);
SubRep zero_subrep(const Rep& x);
SubRep full_subrep(const Rep& x);

/// The subrepresentation U in the RREF basis of each U_v.
Rep sub_rep(const Quiver& quiver, const Rep& x, const SubRep& u);
/// X/U on the complement spanned by the free coordinates of each U_v.
Rep quotient_rep(const Quiver& quiver, const Rep& x, const SubRep& u);
RepMorphism inclusion(const Rep& x, const SubRep& u);
RepMorphism projection(const Rep& x, const SubRep& u);
/// outer/inner for inner <= outer <= X.
Rep subquotient(const Quiver& quiver, const Rep& x, const SubRep& outer, const SubRep& inner);

/// All subrepresentations of X of dimension vector dims.
std::vector<SubRep> enumerate_subreps(const Quiver& quiver, const Rep& x, const KClass& dims,
                                      std::uint64_t budget = 1u << 20);
/// All subrepresentations of X.
std::vector<SubRep> enumerate_all_subreps(const Quiver& quiver, const Rep& x, std::uint64_t budget = 1u << 20);

/// All classes c with 0 <= c <= bound componentwise.
std::vector<KClass> classes_below(const KClass& bound);

}  // namespace dhall
