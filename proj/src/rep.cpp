#include "dhall/rep.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace dhall {

KClass Rep::dim_vector() const {
  KClass c(static_cast<int>(dims.size()));
  for (size_t v = 0; v < dims.size(); ++v) c[static_cast<int>(v)] = dims[v];
  return c;
}

int Rep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

KClass SubRep::dim_vector() const {
  KClass c(static_cast<int>(at.size()));
  for (size_t v = 0; v < at.size(); ++v) c[static_cast<int>(v)] = at[v].dim();
  return c;
}

Rep zero_rep(const Quiver& quiver, int q) { return semisimple_rep(quiver, quiver.zero_class(), q); }

Rep semisimple_rep(const Quiver& quiver, const KClass& dims, int q) {
  if (dims.size() != quiver.vertex_count() || !dims.nonnegative()) throw std::invalid_argument("bad dimension vector");
  Rep x;
  x.q = q;
  for (long d : dims.values()) x.dims.push_back(static_cast<int>(d));
  for (auto [s, t] : quiver.arrows()) x.maps.emplace_back(x.dims[t], x.dims[s], q);
  return x;
}

void validate_rep(const Quiver& quiver, const Rep& x) {
  if (static_cast<int>(x.dims.size()) != quiver.vertex_count()) throw std::invalid_argument("rep has wrong vertex count");
  if (static_cast<int>(x.maps.size()) != quiver.arrow_count()) throw std::invalid_argument("rep has wrong arrow count");
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    const auto& m = x.maps[a];
    if (m.rows() != x.dims[t] || m.cols() != x.dims[s] || m.q() != x.q)
      throw std::invalid_argument("arrow matrix " + std::to_string(a) + " has wrong shape");
  }
}

Rep direct_sum(const Rep& x, const Rep& y) {
  if (x.dims.size() != y.dims.size() || x.q != y.q) throw std::invalid_argument("direct sum of incompatible reps");
  Rep r;
  r.q = x.q;
  for (size_t v = 0; v < x.dims.size(); ++v) r.dims.push_back(x.dims[v] + y.dims[v]);
  for (size_t a = 0; a < x.maps.size(); ++a) {
    const auto& f = x.maps[a];
    const auto& g = y.maps[a];
    r.maps.push_back(block2(f, FqMatrix(f.rows(), g.cols(), x.q), FqMatrix(g.rows(), f.cols(), x.q), g));
  }
  return r;
}

RepMorphism zero_morphism(const Rep& from, const Rep& to) {
  RepMorphism f;
  for (size_t v = 0; v < from.dims.size(); ++v) f.at.emplace_back(to.dims[v], from.dims[v], from.q);
  return f;
}

RepMorphism identity_morphism(const Rep& x) {
  RepMorphism f;
  for (int d : x.dims) f.at.push_back(FqMatrix::identity(d, x.q));
  return f;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
  RepMorphism h;
  for (size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
  return h;
}

RepMorphism operator+(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism h;
  for (size_t v = 0; v < f.at.size(); ++v) h.at.push_back(f.at[v] + g.at[v]);
  return h;
}

RepMorphism scaled(const RepMorphism& f, Residue s) {
  RepMorphism h;
  for (const auto& m : f.at) h.at.push_back(m.scaled(s));
  return h;
}

RepMorphism negated(const RepMorphism& f) {
  RepMorphism h;
  for (const auto& m : f.at) h.at.push_back(-m);
  return h;
}

RepMorphism direct_sum(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism h;
  for (size_t v = 0; v < f.at.size(); ++v) {
    const auto& a = f.at[v];
    const auto& b = g.at[v];
    h.at.push_back(block2(a, FqMatrix(a.rows(), b.cols(), a.q()), FqMatrix(b.rows(), a.cols(), a.q()), b));
  }
  return h;
}

bool is_zero(const RepMorphism& f) {
  for (const auto& m : f.at)
    if (!m.is_zero()) return false;
  return true;
}

bool is_morphism(const Quiver& quiver, const Rep& from, const Rep& to, const RepMorphism& f) {
  if (f.at.size() != from.dims.size()) return false;
  for (size_t v = 0; v < from.dims.size(); ++v)
    if (f.at[v].rows() != to.dims[v] || f.at[v].cols() != from.dims[v]) return false;
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    if (!(to.maps[a] * f.at[s] == f.at[t] * from.maps[a])) return false;
  }
  return true;
}

bool is_iso(const RepMorphism& f) {
  for (const auto& m : f.at)
    if (!is_invertible(m)) return false;
  return true;
}

std::vector<RepMorphism> hom_basis(const Quiver& quiver, const Rep& x, const Rep& y) {
  const int n = quiver.vertex_count();
  const int q = x.q;
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
  const int unknowns = offset[n];
  auto var = [&](int v, int i, int j) { return offset[v] + i * x.dims[v] + j; };
  int eqs = 0;
  for (auto [s, t] : quiver.arrows()) eqs += y.dims[t] * x.dims[s];
  FqMatrix sys(eqs, unknowns, q);
  int row = 0;
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    const auto& ya = y.maps[a];
    const auto& xa = x.maps[a];
    // (Y_a phi_s - phi_t X_a)(i, j) = 0
    for (int i = 0; i < y.dims[t]; ++i)
      for (int j = 0; j < x.dims[s]; ++j, ++row) {
        for (int k = 0; k < y.dims[s]; ++k)
          if (ya(i, k)) sys(row, var(s, k, j)) = static_cast<Residue>((sys(row, var(s, k, j)) + ya(i, k)) % q);
        for (int l = 0; l < x.dims[t]; ++l)
          if (xa(l, j)) sys(row, var(t, i, l)) = static_cast<Residue>((sys(row, var(t, i, l)) + q - xa(l, j)) % q);
      }
  }
  FqMatrix k = kernel_basis(sys);
  std::vector<RepMorphism> out;
  for (int c = 0; c < k.cols(); ++c) {
    RepMorphism f = zero_morphism(x, y);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < y.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j) f.at[v](i, j) = k(var(v, i, j), c);
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Quiver& quiver, const Rep& x, const Rep& y) {
  return static_cast<int>(hom_basis(quiver, x, y).size());
}

RepMorphism combine(const std::vector<RepMorphism>& basis, std::span<const Residue> c, const Rep& from, const Rep& to) {
  RepMorphism f = zero_morphism(from, to);
  const int q = from.q;
  for (size_t b = 0; b < basis.size(); ++b) {
    if (!c[b]) continue;
    for (size_t v = 0; v < f.at.size(); ++v) {
      auto& m = f.at[v];
      const auto& bm = basis[b].at[v];
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = static_cast<Residue>((m(i, j) + c[b] * bm(i, j)) % q);
    }
  }
  return f;
}

std::uint64_t hom_count(const Quiver& quiver, const Rep& x, const Rep& y) {
  return ipow_sat(x.q, hom_dim(quiver, x, y));
}

std::uint64_t aut_count(const Quiver& quiver, const Rep& x, std::uint64_t budget) {
  auto basis = hom_basis(quiver, x, x);
  const int dim = static_cast<int>(basis.size());
  std::uint64_t total = ipow_sat(x.q, dim);
  if (total > budget)
    throw BudgetExceeded("aut_count: |End| = q^" + std::to_string(dim) + " exceeds budget " + std::to_string(budget));
  std::uint64_t count = 0;
  Vec c(dim, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = 0; i < dim; ++i) {
      c[i] = static_cast<Residue>(r % x.q);
      r /= x.q;
    }
    if (is_iso(combine(basis, c, x, x))) ++count;
  }
  return count;
}

bool is_subrep(const Quiver& quiver, const Rep& x, const SubRep& u) {
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    const auto& b = u.at[s].basis();
    for (int i = 0; i < b.rows(); ++i)
      if (!u.at[t].contains(x.maps[a].apply(b.row(i)))) return false;
  }
  return true;
}

SubRep image(const RepMorphism& f, int) {
  SubRep u;
  for (const auto& m : f.at) u.at.push_back(Subspace::span_columns(m));
  return u;
}

SubRep kernel(const RepMorphism& f, const Rep&) {
  SubRep u;
  for (const auto& m : f.at) u.at.push_back(Subspace::span_columns(kernel_basis(m)));
  return u;
}

SubRep zero_subrep(const Rep& x) {
  SubRep u;
  for (int d : x.dims) u.at.push_back(Subspace::zero(d, x.q));
  return u;
}

SubRep full_subrep(const Rep& x) {
  SubRep u;
  for (int d : x.dims) u.at.push_back(Subspace::full(d, x.q));
  return u;
}

Rep sub_rep(const Quiver& quiver, const Rep& x, const SubRep& u) {
  Rep r;
  r.q = x.q;
  for (const auto& s : u.at) r.dims.push_back(s.dim());
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    FqMatrix m(r.dims[t], r.dims[s], x.q);
    const auto& b = u.at[s].basis();
    for (int j = 0; j < b.rows(); ++j) {
      Vec c = u.at[t].coordinates(x.maps[a].apply(b.row(j)));
      for (int i = 0; i < r.dims[t]; ++i) m(i, j) = c[i];
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

Rep quotient_rep(const Quiver& quiver, const Rep& x, const SubRep& u) {
  Rep r;
  r.q = x.q;
  std::vector<std::vector<int>> free;
  for (const auto& s : u.at) {
    free.push_back(s.free_coordinates());
    r.dims.push_back(static_cast<int>(free.back().size()));
  }
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    FqMatrix m(r.dims[t], r.dims[s], x.q);
    for (int j = 0; j < r.dims[s]; ++j) {
      Vec e(x.dims[s], 0);
      e[free[s][j]] = 1;
      Vec red = u.at[t].reduce(x.maps[a].apply(e));
      for (int i = 0; i < r.dims[t]; ++i) m(i, j) = red[free[t][i]];
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

RepMorphism inclusion(const Rep& x, const SubRep& u) {
  RepMorphism f;
  for (size_t v = 0; v < x.dims.size(); ++v) f.at.push_back(u.at[v].basis().transpose());
  return f;
}

RepMorphism projection(const Rep& x, const SubRep& u) {
  RepMorphism f;
  for (size_t v = 0; v < x.dims.size(); ++v) {
    auto free = u.at[v].free_coordinates();
    FqMatrix m(static_cast<int>(free.size()), x.dims[v], x.q);
    for (int j = 0; j < x.dims[v]; ++j) {
      Vec e(x.dims[v], 0);
      e[j] = 1;
      Vec red = u.at[v].reduce(e);
      for (size_t i = 0; i < free.size(); ++i) m(static_cast<int>(i), j) = red[free[i]];
    }
    f.at.push_back(std::move(m));
  }
  return f;
}

Rep subquotient(const Quiver& quiver, const Rep& x, const SubRep& outer, const SubRep& inner) {
  Rep o = sub_rep(quiver, x, outer);
  SubRep in_o;
  for (size_t v = 0; v < x.dims.size(); ++v) {
    const auto& b = inner.at[v].basis();
    FqMatrix coords(b.rows(), outer.at[v].dim(), x.q);
    for (int i = 0; i < b.rows(); ++i) {
      Vec c = outer.at[v].coordinates(b.row(i));
      for (int j = 0; j < coords.cols(); ++j) coords(i, j) = c[j];
    }
    in_o.at.push_back(Subspace::span_rows(coords));
  }
  return quotient_rep(quiver, o, in_o);
}

namespace {

const std::vector<Subspace>& cached_subspaces(std::map<std::pair<int, int>, std::vector<Subspace>>& cache, int n,
                                              int k, int q, std::uint64_t budget) {
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_subspaces(n, k, q, budget)).first;
  return it->second;
}

}  // namespace

std::vector<SubRep> enumerate_subreps(const Quiver& quiver, const Rep& x, const KClass& dims, std::uint64_t budget) {
  const int n = quiver.vertex_count();
  if (dims.size() != n) throw std::invalid_argument("enumerate_subreps: class size mismatch");
  for (int v = 0; v < n; ++v)
    if (dims[v] < 0 || dims[v] > x.dims[v]) return {};
  unsigned __int128 space = 1;
  for (int v = 0; v < n; ++v) {
    space *= gaussian_binomial(x.dims[v], static_cast<int>(dims[v]), x.q);
    if (space > budget)
      throw BudgetExceeded("enumerate_subreps: candidate count exceeds budget " + std::to_string(budget));
  }
  std::map<std::pair<int, int>, std::vector<Subspace>> cache;
  std::vector<const std::vector<Subspace>*> choices(n);
  for (int v = 0; v < n; ++v) choices[v] = &cached_subspaces(cache, x.dims[v], static_cast<int>(dims[v]), x.q, budget);
  const auto& order = quiver.topological_order();
  std::vector<SubRep> out;
  SubRep cur;
  cur.at.resize(n);
  // fixes vertices in topological order, checking arrows as soon as both ends are set
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.push_back(cur);
      return;
    }
    int v = order[depth];
    for (const auto& s : *choices[v]) {
      cur.at[v] = s;
      bool ok = true;
      for (int a : quiver.arrows_into(v)) {
        int src = quiver.arrows()[a].source;
        const auto& b = cur.at[src].basis();
        for (int i = 0; i < b.rows() && ok; ++i) ok = s.contains(x.maps[a].apply(b.row(i)));
        if (!ok) break;
      }
      if (ok) self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<SubRep> enumerate_all_subreps(const Quiver& quiver, const Rep& x, std::uint64_t budget) {
  std::vector<SubRep> out;
  for (const auto& d : classes_below(x.dim_vector())) {
    auto part = enumerate_subreps(quiver, x, d, budget);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<KClass> classes_below(const KClass& bound) {
  std::vector<KClass> out;
  KClass c(bound.size());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == bound.size()) {
      out.push_back(c);
      return;
    }
    for (long x = 0; x <= bound[i]; ++x) {
      c[i] = x;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace dhall
