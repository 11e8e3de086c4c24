#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhall/session.hpp"

namespace dhall {

/// Z/2-graded complex M1 --d1--> M0 --d0--> M1.
struct Complex {
  Rep m1, m0;
  RepMorphism d1, d0;
  bool operator==(const Complex&) const = default;
};

struct ComplexMorphism {
  RepMorphism s1, s0;
};

/// (A, B, P, Q) with M ~ C_A + C_B^* + K_P + K_Q^*.
struct ComplexKey {
  RepKey a, b;
  Mult p, q;
  auto operator<=>(const ComplexKey&) const = default;
  bool operator==(const ComplexKey&) const = default;
  std::string to_string() const;
};

struct Homology {
  Rep h0, h1;
};

Complex zero_complex(const Quiver& quiver, int q);
/// Throws std::invalid_argument if d0 d1 != 0, d1 d0 != 0 or a map is not a morphism.
void validate_complex(const Quiver& quiver, const Complex& c);
bool is_projective_complex(const Quiver& quiver, const Complex& c);

/// K_P = (P --id--> P --0--> P)
Complex make_kp(const Quiver& quiver, const Rep& p);
/// K_P^* = (P --0--> P --(-id)--> P)
Complex make_kp_star(const Quiver& quiver, const Rep& p);
/// Swaps the pieces and negates both differentials.
Complex star(const Complex& c);
Complex direct_sum(const Complex& x, const Complex& y);
/// (P_A --f_A--> Q_A --0--> P_A) from the minimal resolution of A.
Complex make_ca(const Quiver& quiver, const Rep& a);
/// C_A built on the cached resolution of the canonical representative.
Complex make_ca(const Session& s, const RepKey& a);

/// cl(M0) - cl(M1)
KClass complex_class(const Complex& c);

/// H0 = ker d0 / im d1, H1 = ker d1 / im d0.
Homology homology(const Quiver& quiver, const Complex& c);
bool is_acyclic(const Quiver& quiver, const Complex& c);

ComplexKey decompose(const Session& s, const Complex& c);
/// C_A + C_B^* + K_P + K_Q^* on the canonical pieces.
Complex complex_from_key(const Session& s, const ComplexKey& k);
/// Decomposition followed by an exhaustive isomorphism test against the reconstruction.
ComplexKey decompose_verified(const Session& s, const Complex& c);
ComplexKey zero_complex_key(const Session& s);
/// Key of C^* from the key of C.
ComplexKey star_key(const ComplexKey& k);

/// All keys whose canonical complex has both pieces of dimension <= bound.
std::vector<ComplexKey> enumerate_complex_keys(const Session& s, const KClass& piece_bound);
/// The pieces (cl M1, cl M0) of the canonical complex of k.
std::pair<KClass, KClass> key_pieces(const Session& s, const ComplexKey& k);

/// Basis of the chain maps M -> N.
std::vector<ComplexMorphism> complex_hom_basis(const Quiver& quiver, const Complex& m, const Complex& n);
int complex_hom_dim(const Quiver& quiver, const Complex& m, const Complex& n);
std::uint64_t complex_hom_count(const Session& s, const Complex& m, const Complex& n);
/// Exhaustive count of invertible chain maps.
std::uint64_t complex_aut_count(const Session& s, const Complex& m);
/// Exhaustive search for an invertible chain map.
bool complexes_iso(const Session& s, const Complex& m, const Complex& n);

/// dim of chain maps M -> N modulo null-homotopic ones.
int homotopy_hom_dim(const Quiver& quiver, const Complex& m, const Complex& n);

struct Subcomplex {
  SubRep u1, u0;
};
struct SubcomplexEntry {
  Subcomplex sc;
  Complex sub, quotient;
  bool quotient_projective = false;
};

bool is_subcomplex(const Quiver& quiver, const Complex& l, const Subcomplex& sc);
Complex sub_complex(const Quiver& quiver, const Complex& l, const Subcomplex& sc);
Complex quotient_complex(const Quiver& quiver, const Complex& l, const Subcomplex& sc);
std::vector<Subcomplex> enumerate_subcomplex_spaces(const Session& s, const Complex& l);
std::vector<SubcomplexEntry> enumerate_subcomplexes(const Session& s, const Complex& l);

/// g^L_{M,N} for complexes in C(P).
std::uint64_t complex_hall_number(const Session& s, const Complex& l, const Complex& m, const Complex& n);

struct Conflation {
  Complex n, l, m;
  ComplexMorphism inclusion, projection;
};
Conflation conflation_of(const Quiver& quiver, const Complex& l, const Subcomplex& sc);
/// Degreewise short exact, maps commute with the differentials.
bool is_conflation(const Quiver& quiver, const Conflation& c);
/// H_i(M) != 0 implies H_{i+1}(N) = 0, for i = 0, 1.
bool e0_condition(const Homology& n, const Homology& m);
bool e0_condition(const ComplexKey& n, const ComplexKey& m);
bool is_e0(const Quiver& quiver, const Conflation& c);

/// w^L_{M,N}: number of E_0-subobjects N' ~ N of L with L/N' ~ M.
std::uint64_t w_number(const Session& s, const Complex& l, const Complex& m, const Complex& n);
/// |W^L_{M,N}|: E_0-conflation map pairs (inclusion, projection), by exhaustive search.
std::uint64_t conflation_count(const Session& s, const Complex& l, const Complex& m, const Complex& n);

/// Middle term of the extension of M by N given by h1: M1 -> N0, h0: M0 -> N1.
Complex complex_extension_middle(const Complex& m, const Complex& n, const RepMorphism& h1, const RepMorphism& h0);

/// Basis of the cocycles (h1, h0) of Ext^1(M, N) in C(A).
struct CocycleSpace {
  std::vector<RepMorphism> h1_basis, h0_basis;  // bases of Hom_A(M1,N0), Hom_A(M0,N1)
  FqMatrix cocycles;                            // columns: coordinates of a cocycle basis
  int degreewise_hom_dim = 0;                   // dim Hom_A(M1,N1) + dim Hom_A(M0,N0)
};
CocycleSpace cocycle_space(const Quiver& quiver, const Complex& m, const Complex& n);
Complex cocycle_middle(const Complex& m, const Complex& n, const CocycleSpace& z, std::span<const Residue> coords);

}  // namespace dhall
