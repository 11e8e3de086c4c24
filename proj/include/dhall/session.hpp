#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include "dhall/catalog.hpp"
#include "dhall/projective.hpp"

namespace dhall {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Immutable parameters (quiver, q, budget) plus shared caches.
class Session {
 public:
  Session(Quiver quiver, int q, std::uint64_t budget = kDefaultBudget);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const Quiver& quiver() const noexcept { return quiver_; }
  int q() const noexcept { return q_; }
  std::uint64_t budget() const noexcept { return budget_; }
  const RepCatalog& catalog() const noexcept { return *catalog_; }

  /// Throws BudgetExceeded when count > budget.
  void require_budget(std::uint64_t count, const std::string& what) const;

  RepKey key(const Rep& x) const { return catalog_->key_of(x); }
  Rep rep(const RepKey& k) const { return catalog_->representative(k); }
  std::uint64_t aut(const RepKey& k) const { return catalog_->aut_order(k); }
  RepKey zero_key() const { return catalog_->zero_key(); }
  RepKey simple(int v) const;
  RepKey projective(int v) const;

  /// Minimal projective resolution of the canonical representative.
  const Resolution& resolution(const RepKey& k) const;
  KClass p_class(const RepKey& k) const;  // cl P_A
  KClass q_class(const RepKey& k) const;  // cl Q_A

  long euler(const KClass& a, const KClass& b) const { return quiver_.euler_form(a, b); }
  long sym_euler(const KClass& a, const KClass& b) const { return quiver_.sym_euler_form(a, b); }

 private:
  Quiver quiver_;
  int q_;
  std::uint64_t budget_;
  std::unique_ptr<RepCatalog> catalog_;
  mutable std::shared_mutex mu_;
  mutable std::map<RepKey, std::unique_ptr<Resolution>> resolutions_;
};

/// g^L_{M,N}: subrepresentations N' of L with N' ~ N and L/N' ~ M.
std::uint64_t hall_number(const Session& s, const Rep& l, const Rep& m, const Rep& n);
std::uint64_t hall_number(const Session& s, const RepKey& l, const RepKey& m, const RepKey& n);

/// All g^L_{M,N} for fixed L, keyed by (M, N).
std::map<std::pair<RepKey, RepKey>, std::uint64_t> hall_numbers_of(const Session& s, const RepKey& l);

/// |Ext^1(M, N)_L| = g^L_{M,N} |Hom(M,N)| a_M a_N / a_L.
std::uint64_t ext_count_with_middle(const Session& s, const RepKey& m, const RepKey& n, const RepKey& l);
/// Same count by enumerating extension cocycles.
std::uint64_t ext_count_by_cocycles(const Session& s, const RepKey& m, const RepKey& n, const RepKey& l);

/// dim Ext^1(X, Y) = dim Hom(X, Y) - <X, Y> (the path algebra is hereditary).
int ext_dim(const Session& s, const Rep& x, const Rep& y);

/// Middle term of the extension of M by N given by h = (h_a: M_s -> N_t).
Rep extension_middle(const Quiver& quiver, const Rep& m, const Rep& n, const std::vector<FqMatrix>& h);

}  // namespace dhall
