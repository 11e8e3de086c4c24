#include "dhall/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace dhall {

namespace {

void append_flat(Vec& out, const RepMorphism& f) {
  for (const auto& m : f.at) out.insert(out.end(), m.data().begin(), m.data().end());
}

/// Matrix whose j-th column is the flattening of images[j].
FqMatrix columns_of(const std::vector<Vec>& images, int rows, int q) {
  FqMatrix m(rows, static_cast<int>(images.size()), q);
  for (size_t j = 0; j < images.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, static_cast<int>(j)) = images[j][i];
  return m;
}

int flat_size(const Rep& from, const Rep& to) {
  int s = 0;
  for (size_t v = 0; v < from.dims.size(); ++v) s += from.dims[v] * to.dims[v];
  return s;
}

Vec column_part(const FqMatrix& k, int col, int begin, int len) {
  Vec c(len);
  for (int i = 0; i < len; ++i) c[i] = k(begin + i, col);
  return c;
}

RepMorphism restrict_map(const RepMorphism& f, const SubRep& src, const SubRep& tgt) {
  RepMorphism r;
  for (size_t v = 0; v < f.at.size(); ++v) {
    const auto& b = src.at[v].basis();
    FqMatrix m(tgt.at[v].dim(), b.rows(), f.at[v].q());
    for (int j = 0; j < b.rows(); ++j) {
      Vec c = tgt.at[v].coordinates(f.at[v].apply(b.row(j)));
      for (int i = 0; i < m.rows(); ++i) m(i, j) = c[i];
    }
    r.at.push_back(std::move(m));
  }
  return r;
}

RepMorphism induced_quotient_map(const RepMorphism& f, const SubRep& src, const SubRep& tgt) {
  RepMorphism r;
  for (size_t v = 0; v < f.at.size(); ++v) {
    auto fs = src.at[v].free_coordinates();
    auto ft = tgt.at[v].free_coordinates();
    FqMatrix m(static_cast<int>(ft.size()), static_cast<int>(fs.size()), f.at[v].q());
    for (size_t j = 0; j < fs.size(); ++j) {
      Vec red = tgt.at[v].reduce(f.at[v].column(fs[j]));
      for (size_t i = 0; i < ft.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = red[ft[i]];
    }
    r.at.push_back(std::move(m));
  }
  return r;
}

bool maps_into(const RepMorphism& f, const SubRep& src, const SubRep& tgt) {
  for (size_t v = 0; v < f.at.size(); ++v) {
    const auto& b = src.at[v].basis();
    for (int j = 0; j < b.rows(); ++j)
      if (!tgt.at[v].contains(f.at[v].apply(b.row(j)))) return false;
  }
  return true;
}

bool is_zero_key(const RepKey& k) { return k.dims.is_zero(); }

bool is_zero_rep(const Rep& r) { return r.total_dim() == 0; }

std::uint64_t enumerate_count(const Session& s, int dim, const std::string& what) {
  std::uint64_t total = ipow_sat(s.q(), dim);
  s.require_budget(total, what);
  return total;
}

void index_to_coords(std::uint64_t idx, int q, Vec& c) {
  for (auto& x : c) {
    x = static_cast<Residue>(idx % q);
    idx /= q;
  }
}

ComplexMorphism combine_chain(const std::vector<ComplexMorphism>& basis, std::span<const Residue> c, const Complex& m,
                              const Complex& n) {
  ComplexMorphism f{zero_morphism(m.m1, n.m1), zero_morphism(m.m0, n.m0)};
  for (size_t b = 0; b < basis.size(); ++b) {
    if (!c[b]) continue;
    f.s1 = f.s1 + scaled(basis[b].s1, c[b]);
    f.s0 = f.s0 + scaled(basis[b].s0, c[b]);
  }
  return f;
}

}  // namespace

std::string ComplexKey::to_string() const {
  auto mult = [](const Mult& m) {
    std::string s = "[";
    for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + "]";
  };
  return "(A=" + a.to_string() + ", B=" + b.to_string() + ", P=" + mult(p) + ", Q=" + mult(q) + ")";
}

Complex zero_complex(const Quiver& quiver, int q) {
  Rep z = zero_rep(quiver, q);
  return {z, z, zero_morphism(z, z), zero_morphism(z, z)};
}

void validate_complex(const Quiver& quiver, const Complex& c) {
  validate_rep(quiver, c.m1);
  validate_rep(quiver, c.m0);
  if (!is_morphism(quiver, c.m1, c.m0, c.d1)) throw std::invalid_argument("d1 is not a morphism M1 -> M0");
  if (!is_morphism(quiver, c.m0, c.m1, c.d0)) throw std::invalid_argument("d0 is not a morphism M0 -> M1");
  if (!is_zero(compose(c.d0, c.d1)) || !is_zero(compose(c.d1, c.d0)))
    throw std::invalid_argument("differentials do not square to zero");
}

bool is_projective_complex(const Quiver& quiver, const Complex& c) {
  return is_projective(quiver, c.m1) && is_projective(quiver, c.m0);
}

Complex make_kp(const Quiver& quiver, const Rep& p) {
  if (!is_projective(quiver, p)) throw std::invalid_argument("K_P needs a projective representation");
  return {p, p, identity_morphism(p), zero_morphism(p, p)};
}

Complex make_kp_star(const Quiver& quiver, const Rep& p) {
  if (!is_projective(quiver, p)) throw std::invalid_argument("K_P^* needs a projective representation");
  return {p, p, zero_morphism(p, p), negated(identity_morphism(p))};
}

Complex star(const Complex& c) { return {c.m0, c.m1, negated(c.d0), negated(c.d1)}; }

Complex direct_sum(const Complex& x, const Complex& y) {
  return {direct_sum(x.m1, y.m1), direct_sum(x.m0, y.m0), direct_sum(x.d1, y.d1), direct_sum(x.d0, y.d0)};
}

Complex make_ca(const Quiver& quiver, const Rep& a) {
  Resolution r = minimal_resolution(quiver, a);
  return {r.p, r.q, r.f, zero_morphism(r.q, r.p)};
}

Complex make_ca(const Session& s, const RepKey& a) {
  const Resolution& r = s.resolution(a);
  return {r.p, r.q, r.f, zero_morphism(r.q, r.p)};
}

KClass complex_class(const Complex& c) { return c.m0.dim_vector() - c.m1.dim_vector(); }

Homology homology(const Quiver& quiver, const Complex& c) {
  return {subquotient(quiver, c.m0, kernel(c.d0, c.m0), image(c.d1, c.m0.q)),
          subquotient(quiver, c.m1, kernel(c.d1, c.m1), image(c.d0, c.m1.q))};
}

bool is_acyclic(const Quiver& quiver, const Complex& c) {
  Homology h = homology(quiver, c);
  return is_zero_rep(h.h0) && is_zero_rep(h.h1);
}

ComplexKey decompose(const Session& s, const Complex& c) {
  const Quiver& quiver = s.quiver();
  Homology h = homology(quiver, c);
  ComplexKey k;
  k.a = s.key(h.h0);
  k.b = s.key(h.h1);
  KClass im1 = image(c.d1, c.m1.q).dim_vector(), im0 = image(c.d0, c.m0.q).dim_vector();
  auto p = projective_multiplicities(quiver, im1 - s.p_class(k.a));
  auto q = projective_multiplicities(quiver, im0 - s.p_class(k.b));
  if (!p || !q) throw std::logic_error("decompose: complex is not in C(P)");
  k.p = *p;
  k.q = *q;
  auto [c1, c0] = key_pieces(s, k);
  if (c.m1.dim_vector() != c1 || c.m0.dim_vector() != c0)
    throw std::logic_error("decompose: graded pieces do not match the reconstruction");
  return k;
}

Complex complex_from_key(const Session& s, const ComplexKey& k) {
  const Quiver& quiver = s.quiver();
  Complex c = direct_sum(make_ca(s, k.a), star(make_ca(s, k.b)));
  c = direct_sum(c, make_kp(quiver, standard_projective(quiver, s.q(), k.p)));
  return direct_sum(c, make_kp_star(quiver, standard_projective(quiver, s.q(), k.q)));
}

ComplexKey decompose_verified(const Session& s, const Complex& c) {
  ComplexKey k = decompose(s, c);
  if (!complexes_iso(s, c, complex_from_key(s, k))) throw std::logic_error("decompose: reconstruction is not isomorphic");
  return k;
}

ComplexKey zero_complex_key(const Session& s) {
  Mult z(s.quiver().vertex_count(), 0);
  return {s.zero_key(), s.zero_key(), z, z};
}

ComplexKey star_key(const ComplexKey& k) { return {k.b, k.a, k.q, k.p}; }

std::pair<KClass, KClass> key_pieces(const Session& s, const ComplexKey& k) {
  KClass pq = projective_class(s.quiver(), k.p) + projective_class(s.quiver(), k.q);
  return {s.p_class(k.a) + s.q_class(k.b) + pq, s.q_class(k.a) + s.p_class(k.b) + pq};
}

std::vector<ComplexKey> enumerate_complex_keys(const Session& s, const KClass& piece_bound) {
  const Quiver& quiver = s.quiver();
  std::vector<Mult> mults;
  for (const auto& m : classes_below(piece_bound)) {
    Mult mm(m.values().begin(), m.values().end());
    if (projective_class(quiver, mm).leq(piece_bound)) mults.push_back(mm);
  }
  auto reps = s.catalog().classes_below(piece_bound);
  std::vector<ComplexKey> out;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      if (!(s.q_class(a) + s.p_class(b)).leq(piece_bound) || !(s.p_class(a) + s.q_class(b)).leq(piece_bound)) continue;
      for (const auto& p : mults)
        for (const auto& q : mults) {
          ComplexKey k{a, b, p, q};
          auto [c1, c0] = key_pieces(s, k);
          if (c1.leq(piece_bound) && c0.leq(piece_bound)) out.push_back(k);
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ComplexMorphism> complex_hom_basis(const Quiver& quiver, const Complex& m, const Complex& n) {
  auto b1 = hom_basis(quiver, m.m1, n.m1);
  auto b0 = hom_basis(quiver, m.m0, n.m0);
  // s0 d1^M - d1^N s1 = 0 and s1 d0^M - d0^N s0 = 0
  std::vector<Vec> cols;
  for (const auto& b : b1) {
    Vec v;
    append_flat(v, negated(compose(n.d1, b)));
    append_flat(v, compose(b, m.d0));
    cols.push_back(std::move(v));
  }
  for (const auto& b : b0) {
    Vec v;
    append_flat(v, compose(b, m.d1));
    append_flat(v, negated(compose(n.d0, b)));
    cols.push_back(std::move(v));
  }
  int rows = flat_size(m.m1, n.m0) + flat_size(m.m0, n.m1);
  FqMatrix k = kernel_basis(columns_of(cols, rows, m.m1.q));
  std::vector<ComplexMorphism> out;
  const int k1 = static_cast<int>(b1.size()), k0 = static_cast<int>(b0.size());
  for (int c = 0; c < k.cols(); ++c)
    out.push_back({combine(b1, column_part(k, c, 0, k1), m.m1, n.m1), combine(b0, column_part(k, c, k1, k0), m.m0, n.m0)});
  return out;
}

int complex_hom_dim(const Quiver& quiver, const Complex& m, const Complex& n) {
  return static_cast<int>(complex_hom_basis(quiver, m, n).size());
}

std::uint64_t complex_hom_count(const Session& s, const Complex& m, const Complex& n) {
  return ipow_sat(s.q(), complex_hom_dim(s.quiver(), m, n));
}

std::uint64_t complex_aut_count(const Session& s, const Complex& m) {
  auto basis = complex_hom_basis(s.quiver(), m, m);
  std::uint64_t total = enumerate_count(s, static_cast<int>(basis.size()), "complex_aut_count");
  Vec c(basis.size());
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    index_to_coords(idx, s.q(), c);
    ComplexMorphism f = combine_chain(basis, c, m, m);
    if (is_iso(f.s1) && is_iso(f.s0)) ++count;
  }
  return count;
}

bool complexes_iso(const Session& s, const Complex& m, const Complex& n) {
  if (m.m1.dims != n.m1.dims || m.m0.dims != n.m0.dims) return false;
  auto basis = complex_hom_basis(s.quiver(), m, n);
  std::uint64_t total = enumerate_count(s, static_cast<int>(basis.size()), "complexes_iso");
  Vec c(basis.size());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    index_to_coords(idx, s.q(), c);
    ComplexMorphism f = combine_chain(basis, c, m, n);
    if (is_iso(f.s1) && is_iso(f.s0)) return true;
  }
  return false;
}

int homotopy_hom_dim(const Quiver& quiver, const Complex& m, const Complex& x) {
  // null-homotopic maps: s1 = d0^X h1 + h0 d1^M, s0 = d1^X h0 + h1 d0^M
  auto h1 = hom_basis(quiver, m.m1, x.m0);
  auto h0 = hom_basis(quiver, m.m0, x.m1);
  std::vector<Vec> cols;
  for (const auto& b : h1) {
    Vec v;
    append_flat(v, compose(x.d0, b));
    append_flat(v, compose(b, m.d0));
    cols.push_back(std::move(v));
  }
  for (const auto& b : h0) {
    Vec v;
    append_flat(v, compose(b, m.d1));
    append_flat(v, compose(x.d1, b));
    cols.push_back(std::move(v));
  }
  int rows = flat_size(m.m1, x.m1) + flat_size(m.m0, x.m0);
  return complex_hom_dim(quiver, m, x) - rank(columns_of(cols, rows, m.m1.q));
}

bool is_subcomplex(const Quiver& quiver, const Complex& l, const Subcomplex& sc) {
  return is_subrep(quiver, l.m1, sc.u1) && is_subrep(quiver, l.m0, sc.u0) && maps_into(l.d1, sc.u1, sc.u0) &&
         maps_into(l.d0, sc.u0, sc.u1);
}

Complex sub_complex(const Quiver& quiver, const Complex& l, const Subcomplex& sc) {
  return {sub_rep(quiver, l.m1, sc.u1), sub_rep(quiver, l.m0, sc.u0), restrict_map(l.d1, sc.u1, sc.u0),
          restrict_map(l.d0, sc.u0, sc.u1)};
}

Complex quotient_complex(const Quiver& quiver, const Complex& l, const Subcomplex& sc) {
  return {quotient_rep(quiver, l.m1, sc.u1), quotient_rep(quiver, l.m0, sc.u0),
          induced_quotient_map(l.d1, sc.u1, sc.u0), induced_quotient_map(l.d0, sc.u0, sc.u1)};
}

std::vector<Subcomplex> enumerate_subcomplex_spaces(const Session& s, const Complex& l) {
  auto s1 = enumerate_all_subreps(s.quiver(), l.m1, s.budget());
  auto s0 = enumerate_all_subreps(s.quiver(), l.m0, s.budget());
  s.require_budget(static_cast<std::uint64_t>(s1.size()) * s0.size(), "enumerate_subcomplexes");
  std::vector<Subcomplex> out;
  for (const auto& u1 : s1)
    for (const auto& u0 : s0)
      if (maps_into(l.d1, u1, u0) && maps_into(l.d0, u0, u1)) out.push_back({u1, u0});
  return out;
}

std::vector<SubcomplexEntry> enumerate_subcomplexes(const Session& s, const Complex& l) {
  std::vector<SubcomplexEntry> out;
  for (auto& sc : enumerate_subcomplex_spaces(s, l)) {
    SubcomplexEntry e{sc, sub_complex(s.quiver(), l, sc), quotient_complex(s.quiver(), l, sc), false};
    e.quotient_projective = is_projective_complex(s.quiver(), e.quotient);
    out.push_back(std::move(e));
  }
  return out;
}

std::uint64_t complex_hall_number(const Session& s, const Complex& l, const Complex& m, const Complex& n) {
  if (m.m1.dim_vector() + n.m1.dim_vector() != l.m1.dim_vector() ||
      m.m0.dim_vector() + n.m0.dim_vector() != l.m0.dim_vector())
    return 0;
  ComplexKey mk = decompose(s, m), nk = decompose(s, n);
  std::uint64_t count = 0;
  for (const auto& e : enumerate_subcomplexes(s, l)) {
    if (!e.quotient_projective || e.sub.m1.dims != n.m1.dims || e.sub.m0.dims != n.m0.dims) continue;
    if (decompose(s, e.sub) == nk && decompose(s, e.quotient) == mk) ++count;
  }
  return count;
}

Conflation conflation_of(const Quiver& quiver, const Complex& l, const Subcomplex& sc) {
  return {sub_complex(quiver, l, sc), l, quotient_complex(quiver, l, sc),
          {inclusion(l.m1, sc.u1), inclusion(l.m0, sc.u0)},
          {projection(l.m1, sc.u1), projection(l.m0, sc.u0)}};
}

bool is_conflation(const Quiver& quiver, const Conflation& c) {
  auto exact = [&](const Rep& n, const Rep& l, const Rep& m, const RepMorphism& i, const RepMorphism& p) {
    return is_morphism(quiver, n, l, i) && is_morphism(quiver, l, m, p) && kernel(i, n).dim_vector().is_zero() &&
           image(p, l.q).dim_vector() == m.dim_vector() && image(i, l.q) == kernel(p, l);
  };
  if (!exact(c.n.m1, c.l.m1, c.m.m1, c.inclusion.s1, c.projection.s1)) return false;
  if (!exact(c.n.m0, c.l.m0, c.m.m0, c.inclusion.s0, c.projection.s0)) return false;
  return compose(c.l.d1, c.inclusion.s1) == compose(c.inclusion.s0, c.n.d1) &&
         compose(c.l.d0, c.inclusion.s0) == compose(c.inclusion.s1, c.n.d0) &&
         compose(c.m.d1, c.projection.s1) == compose(c.projection.s0, c.l.d1) &&
         compose(c.m.d0, c.projection.s0) == compose(c.projection.s1, c.l.d0);
}

bool e0_condition(const Homology& n, const Homology& m) {
  return (is_zero_rep(m.h0) || is_zero_rep(n.h1)) && (is_zero_rep(m.h1) || is_zero_rep(n.h0));
}

bool e0_condition(const ComplexKey& n, const ComplexKey& m) {
  return (is_zero_key(m.a) || is_zero_key(n.b)) && (is_zero_key(m.b) || is_zero_key(n.a));
}

bool is_e0(const Quiver& quiver, const Conflation& c) {
  return e0_condition(homology(quiver, c.n), homology(quiver, c.m));
}

std::uint64_t w_number(const Session& s, const Complex& l, const Complex& m, const Complex& n) {
  ComplexKey mk = decompose(s, m), nk = decompose(s, n);
  std::uint64_t count = 0;
  for (const auto& sc : enumerate_subcomplex_spaces(s, l)) {
    if (sc.u1.dim_vector() != n.m1.dim_vector() || sc.u0.dim_vector() != n.m0.dim_vector()) continue;
    Conflation c = conflation_of(s.quiver(), l, sc);
    if (!is_projective_complex(s.quiver(), c.m) || !is_e0(s.quiver(), c)) continue;
    if (decompose(s, c.n) == nk && decompose(s, c.m) == mk) ++count;
  }
  return count;
}

std::uint64_t conflation_count(const Session& s, const Complex& l, const Complex& m, const Complex& n) {
  const Quiver& quiver = s.quiver();
  if (m.m1.dim_vector() + n.m1.dim_vector() != l.m1.dim_vector() ||
      m.m0.dim_vector() + n.m0.dim_vector() != l.m0.dim_vector())
    return 0;
  if (!e0_condition(homology(quiver, n), homology(quiver, m))) return 0;
  auto ib = complex_hom_basis(quiver, n, l);
  auto pb = complex_hom_basis(quiver, l, m);
  std::uint64_t ti = enumerate_count(s, static_cast<int>(ib.size()), "conflation_count");
  std::uint64_t tp = enumerate_count(s, static_cast<int>(pb.size()), "conflation_count");
  std::vector<ComplexMorphism> incs, projs;
  Vec c(ib.size());
  for (std::uint64_t idx = 0; idx < ti; ++idx) {
    index_to_coords(idx, s.q(), c);
    ComplexMorphism f = combine_chain(ib, c, n, l);
    if (kernel(f.s1, n.m1).dim_vector().is_zero() && kernel(f.s0, n.m0).dim_vector().is_zero()) incs.push_back(f);
  }
  c.assign(pb.size(), 0);
  for (std::uint64_t idx = 0; idx < tp; ++idx) {
    index_to_coords(idx, s.q(), c);
    ComplexMorphism f = combine_chain(pb, c, l, m);
    if (image(f.s1, s.q()).dim_vector() == m.m1.dim_vector() && image(f.s0, s.q()).dim_vector() == m.m0.dim_vector())
      projs.push_back(f);
  }
  s.require_budget(static_cast<std::uint64_t>(incs.size()) * projs.size(), "conflation_count");
  std::uint64_t count = 0;
  for (const auto& i : incs)
    for (const auto& p : projs)
      if (is_zero(compose(p.s1, i.s1)) && is_zero(compose(p.s0, i.s0))) ++count;
  return count;
}

Complex complex_extension_middle(const Complex& m, const Complex& n, const RepMorphism& h1, const RepMorphism& h0) {
  Complex l;
  l.m1 = direct_sum(n.m1, m.m1);
  l.m0 = direct_sum(n.m0, m.m0);
  for (size_t v = 0; v < m.m1.dims.size(); ++v) {
    const int q = m.m1.q;
    l.d1.at.push_back(block2(n.d1.at[v], h1.at[v], FqMatrix(m.m0.dims[v], n.m1.dims[v], q), m.d1.at[v]));
    l.d0.at.push_back(block2(n.d0.at[v], h0.at[v], FqMatrix(m.m1.dims[v], n.m0.dims[v], q), m.d0.at[v]));
  }
  return l;
}

CocycleSpace cocycle_space(const Quiver& quiver, const Complex& m, const Complex& n) {
  CocycleSpace z;
  z.h1_basis = hom_basis(quiver, m.m1, n.m0);
  z.h0_basis = hom_basis(quiver, m.m0, n.m1);
  // d0^N h1 + h0 d1^M = 0 (M1 -> N1) and d1^N h0 + h1 d0^M = 0 (M0 -> N0)
  std::vector<Vec> cols;
  for (const auto& b : z.h1_basis) {
    Vec v;
    append_flat(v, compose(n.d0, b));
    append_flat(v, compose(b, m.d0));
    cols.push_back(std::move(v));
  }
  for (const auto& b : z.h0_basis) {
    Vec v;
    append_flat(v, compose(b, m.d1));
    append_flat(v, compose(n.d1, b));
    cols.push_back(std::move(v));
  }
  int rows = flat_size(m.m1, n.m1) + flat_size(m.m0, n.m0);
  z.cocycles = kernel_basis(columns_of(cols, rows, m.m1.q));
  z.degreewise_hom_dim = hom_dim(quiver, m.m1, n.m1) + hom_dim(quiver, m.m0, n.m0);
  return z;
}

Complex cocycle_middle(const Complex& m, const Complex& n, const CocycleSpace& z, std::span<const Residue> coords) {
  const int k1 = static_cast<int>(z.h1_basis.size()), k0 = static_cast<int>(z.h0_basis.size());
  const int q = m.m1.q;
  Vec c(k1 + k0, 0);
  for (int j = 0; j < z.cocycles.cols(); ++j) {
    if (!coords[j]) continue;
    for (int i = 0; i < k1 + k0; ++i) c[i] = static_cast<Residue>((c[i] + coords[j] * z.cocycles(i, j)) % q);
  }
  RepMorphism h1 = combine(z.h1_basis, std::span<const Residue>(c.data(), k1), m.m1, n.m0);
  RepMorphism h0 = combine(z.h0_basis, std::span<const Residue>(c.data() + k1, k0), m.m0, n.m1);
  return complex_extension_middle(m, n, h1, h0);
}

}  // namespace dhall
