#include "dhall/kernels.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

namespace dhall {

namespace {

constexpr std::uint64_t kParallelThreshold = 256;

void coords_of(std::uint64_t idx, int q, Vec& c) {
  for (auto& x : c) {
    x = static_cast<Residue>(idx % q);
    idx /= q;
  }
}

bool maps_into(const RepMorphism& f, const SubRep& src, const SubRep& tgt) {
  for (size_t v = 0; v < f.at.size(); ++v) {
    const auto& b = src.at[v].basis();
    for (int j = 0; j < b.rows(); ++j)
      if (!tgt.at[v].contains(f.at[v].apply(b.row(j)))) return false;
  }
  return true;
}

template <class Map>
void merge_into(Map& total, const Map& part) {
  for (const auto& [k, v] : part) total[k] += v;
}

SubobjectCounts& operator+=(SubobjectCounts& a, const SubobjectCounts& b) {
  a.all += b.all;
  a.e0 += b.e0;
  return a;
}

void tally_subcomplex(const Session& s, const Complex& l, const Subcomplex& sc, SubobjectTally& out) {
  Complex quot = quotient_complex(s.quiver(), l, sc);
  if (!is_projective_complex(s.quiver(), quot)) return;
  ComplexKey mk = decompose(s, quot);
  ComplexKey nk = decompose(s, sub_complex(s.quiver(), l, sc));
  auto& c = out[{mk, nk}];
  ++c.all;
  if (e0_condition(nk, mk)) ++c.e0;
}

std::uint64_t cocycle_total(const Session& s, const CocycleSpace& z) {
  std::uint64_t total = ipow_sat(s.q(), z.cocycles.cols());
  s.require_budget(total, "extension sweep");
  return total;
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

ExtensionTally extension_sweep_serial(const Session& s, const Complex& m, const Complex& n) {
  CocycleSpace z = cocycle_space(s.quiver(), m, n);
  ExtensionTally t{{}, z.cocycles.cols(), z.degreewise_hom_dim};
  std::uint64_t total = cocycle_total(s, z);
  Vec c(z.cocycles.cols());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    coords_of(idx, s.q(), c);
    ++t.middles[decompose(s, cocycle_middle(m, n, z, c))];
  }
  return t;
}

ExtensionTally extension_sweep_parallel(const Session& s, const Complex& m, const Complex& n) {
  CocycleSpace z = cocycle_space(s.quiver(), m, n);
  ExtensionTally t{{}, z.cocycles.cols(), z.degreewise_hom_dim};
  const std::uint64_t total = cocycle_total(s, z);
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel
  {
    std::map<ComplexKey, std::uint64_t> local;
    Vec c(z.cocycles.cols());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      try {
        coords_of(static_cast<std::uint64_t>(idx), s.q(), c);
        ++local[decompose(s, cocycle_middle(m, n, z, c))];
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    std::lock_guard lock(mu);
    merge_into(t.middles, local);
  }
  if (error) std::rethrow_exception(error);
  return t;
}

ExtensionTally extension_sweep(const Session& s, const Complex& m, const Complex& n) {
  CocycleSpace z = cocycle_space(s.quiver(), m, n);
  if (max_threads() > 1 && ipow_sat(s.q(), z.cocycles.cols()) >= kParallelThreshold)
    return extension_sweep_parallel(s, m, n);
  return extension_sweep_serial(s, m, n);
}

SubobjectTally subobject_sweep_serial(const Session& s, const Complex& l) {
  SubobjectTally out;
  for (const auto& sc : enumerate_subcomplex_spaces(s, l)) tally_subcomplex(s, l, sc, out);
  return out;
}

SubobjectTally subobject_sweep_parallel(const Session& s, const Complex& l) {
  auto s1 = enumerate_all_subreps(s.quiver(), l.m1, s.budget());
  auto s0 = enumerate_all_subreps(s.quiver(), l.m0, s.budget());
  s.require_budget(static_cast<std::uint64_t>(s1.size()) * s0.size(), "enumerate_subcomplexes");
  SubobjectTally out;
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel
  {
    SubobjectTally local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(s1.size()); ++i) {
      try {
        for (const auto& u0 : s0) {
          const auto& u1 = s1[static_cast<size_t>(i)];
          if (maps_into(l.d1, u1, u0) && maps_into(l.d0, u0, u1)) tally_subcomplex(s, l, {u1, u0}, local);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    std::lock_guard lock(mu);
    merge_into(out, local);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

SubobjectTally subobject_sweep(const Session& s, const Complex& l) {
  if (max_threads() > 1 && l.m1.total_dim() + l.m0.total_dim() >= 4) return subobject_sweep_parallel(s, l);
  return subobject_sweep_serial(s, l);
}

std::map<std::pair<RepKey, RepKey>, std::uint64_t> subrep_sweep_serial(const Session& s, const Rep& l) {
  std::map<std::pair<RepKey, RepKey>, std::uint64_t> out;
  for (const auto& u : enumerate_all_subreps(s.quiver(), l, s.budget()))
    ++out[{s.key(quotient_rep(s.quiver(), l, u)), s.key(sub_rep(s.quiver(), l, u))}];
  return out;
}

std::map<std::pair<RepKey, RepKey>, std::uint64_t> subrep_sweep_parallel(const Session& s, const Rep& l) {
  auto subs = enumerate_all_subreps(s.quiver(), l, s.budget());
  std::map<std::pair<RepKey, RepKey>, std::uint64_t> out;
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel
  {
    std::map<std::pair<RepKey, RepKey>, std::uint64_t> local;
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(subs.size()); ++i) {
      try {
        const auto& u = subs[static_cast<size_t>(i)];
        ++local[{s.key(quotient_rep(s.quiver(), l, u)), s.key(sub_rep(s.quiver(), l, u))}];
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    std::lock_guard lock(mu);
    merge_into(out, local);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace dhall
