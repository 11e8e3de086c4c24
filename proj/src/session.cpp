#include "dhall/session.hpp"

#include <mutex>
#include <stdexcept>

#include <gmpxx.h>

namespace dhall {

Session::Session(Quiver quiver, int q, std::uint64_t budget)
    : quiver_(std::move(quiver)), q_(q), budget_(budget) {
  if (q != 2 && q != 3 && q != 5) throw std::invalid_argument("q must be 2, 3 or 5");
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  catalog_ = std::make_unique<RepCatalog>(quiver_, q_, budget_);
}

void Session::require_budget(std::uint64_t count, const std::string& what) const {
  if (count > budget_)
    throw BudgetExceeded(what + ": " + std::to_string(count) + " cases exceed budget " + std::to_string(budget_));
}

RepKey Session::simple(int v) const { return key(semisimple_rep(quiver_, quiver_.simple_class(v), q_)); }

RepKey Session::projective(int v) const { return key(indecomposable_projective(quiver_, q_, v)); }

const Resolution& Session::resolution(const RepKey& k) const {
  {
    std::shared_lock lock(mu_);
    auto it = resolutions_.find(k);
    if (it != resolutions_.end()) return *it->second;
  }
  auto r = std::make_unique<Resolution>(minimal_resolution(quiver_, rep(k)));
  std::unique_lock lock(mu_);
  auto& slot = resolutions_[k];
  if (!slot) slot = std::move(r);
  return *slot;
}

KClass Session::p_class(const RepKey& k) const { return resolution(k).p.dim_vector(); }

KClass Session::q_class(const RepKey& k) const { return resolution(k).q.dim_vector(); }

std::uint64_t hall_number(const Session& s, const Rep& l, const Rep& m, const Rep& n) {
  if (l.dim_vector() != m.dim_vector() + n.dim_vector()) return 0;
  RepKey mk = s.key(m), nk = s.key(n);
  std::uint64_t count = 0;
  for (const auto& u : enumerate_subreps(s.quiver(), l, n.dim_vector(), s.budget())) {
    if (s.key(sub_rep(s.quiver(), l, u)) != nk) continue;
    if (s.key(quotient_rep(s.quiver(), l, u)) == mk) ++count;
  }
  return count;
}

std::uint64_t hall_number(const Session& s, const RepKey& l, const RepKey& m, const RepKey& n) {
  return hall_number(s, s.rep(l), s.rep(m), s.rep(n));
}

std::map<std::pair<RepKey, RepKey>, std::uint64_t> hall_numbers_of(const Session& s, const RepKey& l) {
  Rep lr = s.rep(l);
  std::map<std::pair<RepKey, RepKey>, std::uint64_t> out;
  for (const auto& u : enumerate_all_subreps(s.quiver(), lr, s.budget()))
    ++out[{s.key(quotient_rep(s.quiver(), lr, u)), s.key(sub_rep(s.quiver(), lr, u))}];
  return out;
}

int ext_dim(const Session& s, const Rep& x, const Rep& y) {
  return hom_dim(s.quiver(), x, y) - static_cast<int>(s.euler(x.dim_vector(), y.dim_vector()));
}

std::uint64_t ext_count_with_middle(const Session& s, const RepKey& m, const RepKey& n, const RepKey& l) {
  std::uint64_t g = hall_number(s, l, m, n);
  if (g == 0) return 0;
  mpz_class num = mpz_class(std::to_string(g)) * mpz_class(std::to_string(hom_count(s.quiver(), s.rep(m), s.rep(n)))) *
                  mpz_class(std::to_string(s.aut(m))) * mpz_class(std::to_string(s.aut(n)));
  mpz_class den = mpz_class(std::to_string(s.aut(l)));
  if (num % den != 0) throw std::logic_error("non-integral extension count");
  mpz_class r = num / den;
  return std::stoull(r.get_str());
}

Rep extension_middle(const Quiver& quiver, const Rep& m, const Rep& n, const std::vector<FqMatrix>& h) {
  Rep l;
  l.q = m.q;
  for (size_t v = 0; v < m.dims.size(); ++v) l.dims.push_back(n.dims[v] + m.dims[v]);
  for (int a = 0; a < quiver.arrow_count(); ++a) {
    auto [s, t] = quiver.arrows()[a];
    l.maps.push_back(block2(n.maps[a], h[a], FqMatrix(m.dims[t], n.dims[s], m.q), m.maps[a]));
  }
  return l;
}

std::uint64_t ext_count_by_cocycles(const Session& s, const RepKey& mk, const RepKey& nk, const RepKey& lk) {
  // every h = (h_a: M_s -> N_t) is a cocycle; coboundaries have q^{sum m_v n_v - dim Hom(M,N)} elements
  const Quiver& quiver = s.quiver();
  Rep m = s.rep(mk), n = s.rep(nk);
  int entries = 0;
  for (auto [src, tgt] : quiver.arrows()) entries += m.dims[src] * n.dims[tgt];
  std::uint64_t total = ipow_sat(s.q(), entries);
  s.require_budget(total, "ext_count_by_cocycles");
  std::uint64_t hits = 0;
  std::vector<FqMatrix> h;
  for (auto [src, tgt] : quiver.arrows()) h.emplace_back(n.dims[tgt], m.dims[src], s.q());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (auto& mat : h)
      for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j) {
          mat(i, j) = static_cast<Residue>(r % s.q());
          r /= s.q();
        }
    if (s.key(extension_middle(quiver, m, n, h)) == lk) ++hits;
  }
  int c0 = 0;
  for (size_t v = 0; v < m.dims.size(); ++v) c0 += m.dims[v] * n.dims[v];
  int coboundary_dim = c0 - hom_dim(quiver, m, n);
  std::uint64_t b = ipow_sat(s.q(), coboundary_dim);
  if (hits % b != 0) throw std::logic_error("cocycle count not divisible by coboundaries");
  return hits / b;
}

}  // namespace dhall
