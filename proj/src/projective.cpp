#include "dhall/projective.hpp"

#include <stdexcept>

namespace dhall {

namespace {

/// paths from v grouped by target, in the order of Quiver::paths_from
std::vector<std::vector<Path>> paths_by_target(const Quiver& quiver, int v) {
  std::vector<std::vector<Path>> out(quiver.vertex_count());
  for (auto& p : quiver.paths_from(v)) out[p.target].push_back(std::move(p));
  return out;
}

int find_path(const std::vector<Path>& list, const std::vector<int>& arrows) {
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i].arrows == arrows) return static_cast<int>(i);
  throw std::logic_error("path not found");
}

SubRep radical(const Quiver& quiver, const Rep& x) {
  SubRep r;
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    Subspace s = Subspace::zero(x.dims[v], x.q);
    for (int a : quiver.arrows_into(v)) s = s + Subspace::span_columns(x.maps[a]);
    r.at.push_back(std::move(s));
  }
  return r;
}

}  // namespace

Rep indecomposable_projective(const Quiver& quiver, int q, int v) {
  auto by_target = paths_by_target(quiver, v);
  KClass dims(quiver.vertex_count());
  for (int w = 0; w < quiver.vertex_count(); ++w) dims[w] = static_cast<long>(by_target[w].size());
  Rep p = semisimple_rep(quiver, dims, q);
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    for (size_t j = 0; j < by_target[s].size(); ++j) {
      auto ext = by_target[s][j].arrows;
      ext.push_back(a);
      p.maps[a](find_path(by_target[t], ext), static_cast<int>(j)) = 1;
    }
  }
  return p;
}

std::vector<Rep> indecomposable_projectives(const Quiver& quiver, int q) {
  std::vector<Rep> out;
  for (int v = 0; v < quiver.vertex_count(); ++v) out.push_back(indecomposable_projective(quiver, q, v));
  return out;
}

Rep standard_projective(const Quiver& quiver, int q, const Mult& m) {
  if (static_cast<int>(m.size()) != quiver.vertex_count()) throw std::invalid_argument("multiplicity size mismatch");
  Rep r = zero_rep(quiver, q);
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    if (m[v] < 0) throw std::invalid_argument("negative projective multiplicity");
    if (m[v] == 0) continue;
    Rep pv = indecomposable_projective(quiver, q, v);
    for (int k = 0; k < m[v]; ++k) r = direct_sum(r, pv);
  }
  return r;
}

KClass projective_class(const Quiver& quiver, const Mult& m) {
  KClass c = quiver.zero_class();
  for (int v = 0; v < quiver.vertex_count(); ++v) {
    KClass pv = quiver.zero_class();
    for (const auto& p : quiver.paths_from(v)) pv[p.target] += 1;
    c += pv.scaled(m[v]);
  }
  return c;
}

std::vector<long> projective_coordinates(const Quiver& quiver, const KClass& c) {
  // the Cartan matrix is unitriangular along a topological order
  const int n = quiver.vertex_count();
  std::vector<std::vector<long>> paths(n, std::vector<long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (const auto& p : quiver.paths_from(u)) paths[u][p.target] += 1;
  std::vector<long> m(n, 0);
  for (int v : quiver.topological_order()) {
    long r = c[v];
    for (int u = 0; u < n; ++u)
      if (u != v) r -= m[u] * paths[u][v];
    m[v] = r;
  }
  return m;
}

std::optional<Mult> projective_multiplicities(const Quiver& quiver, const KClass& c) {
  Mult out;
  for (long x : projective_coordinates(quiver, c)) {
    if (x < 0) return std::nullopt;
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Mult top_dims(const Quiver& quiver, const Rep& x) {
  SubRep r = radical(quiver, x);
  Mult t;
  for (int v = 0; v < quiver.vertex_count(); ++v) t.push_back(x.dims[v] - r.at[v].dim());
  return t;
}

FqMatrix path_matrix(const Quiver&, const Rep& x, const Path& p) {
  FqMatrix m = FqMatrix::identity(x.dims[p.source], x.q);
  for (int a : p.arrows) m = x.maps[a] * m;
  return m;
}

ProjectiveCover projective_cover(const Quiver& quiver, const Rep& x) {
  const int n = quiver.vertex_count();
  SubRep rad = radical(quiver, x);
  ProjectiveCover pc;
  std::vector<std::vector<int>> generators(n);
  for (int v = 0; v < n; ++v) {
    generators[v] = rad.at[v].free_coordinates();
    pc.mult.push_back(static_cast<int>(generators[v].size()));
  }
  pc.cover = standard_projective(quiver, x.q, pc.mult);
  pc.map = zero_morphism(pc.cover, x);
  std::vector<int> filled(n, 0);
  for (int v = 0; v < n; ++v) {
    auto by_target = paths_by_target(quiver, v);
    for (int g : generators[v]) {
      for (int w = 0; w < n; ++w)
        for (const auto& p : by_target[w]) {
          Vec col = path_matrix(quiver, x, p).column(g);
          for (int i = 0; i < x.dims[w]; ++i) pc.map.at[w](i, filled[w]) = col[i];
          ++filled[w];
        }
    }
  }
  return pc;
}

bool is_projective(const Quiver& quiver, const Rep& x) {
  return projective_class(quiver, top_dims(quiver, x)) == x.dim_vector();
}

Resolution minimal_resolution(const Quiver& quiver, const Rep& x) {
  ProjectiveCover top = projective_cover(quiver, x);
  SubRep k = kernel(top.map, top.cover);
  Rep krep = sub_rep(quiver, top.cover, k);
  ProjectiveCover kc = projective_cover(quiver, krep);
  if (kc.cover.dims != krep.dims) throw std::logic_error("kernel of a projective cover is not projective");
  Resolution r;
  r.p_mult = kc.mult;
  r.q_mult = top.mult;
  r.p = kc.cover;
  r.q = top.cover;
  r.f = compose(inclusion(top.cover, k), kc.map);
  r.cover = top.map;
  return r;
}

bool is_radical_map(const Quiver& quiver, const Rep& q_rep, const RepMorphism& f) {
  SubRep rad = radical(quiver, q_rep);
  for (int v = 0; v < quiver.vertex_count(); ++v)
    for (int c = 0; c < f.at[v].cols(); ++c)
      if (!rad.at[v].contains(f.at[v].column(c))) return false;
  return true;
}

}  // namespace dhall
