#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dhall/rep.hpp"

namespace dhall {

/// Isomorphism class of a representation: its dimension vector and the
/// smallest base-q encoding of its arrow matrices over the GL_d orbit.
struct RepKey {
  KClass dims;
  std::uint64_t code = 0;

  auto operator<=>(const RepKey&) const = default;
  bool operator==(const RepKey&) const = default;
  std::string to_string() const;
};

/// Memo of GL_d orbits on representation spaces, shared by a session.
/// Lookups take a shared lock; new orbits are inserted under a unique lock.
class RepCatalog {
 public:
  RepCatalog(const Quiver& quiver, int q, std::uint64_t budget);

  int q() const noexcept { return q_; }

  std::uint64_t encode(const Rep& x) const;
  Rep decode(const KClass& dims, std::uint64_t code) const;

  RepKey key_of(const Rep& x) const;
  /// Canonical representative of the class.
  Rep representative(const RepKey& key) const;
  std::uint64_t orbit_size(const RepKey& key) const;
  /// |Aut X| = |GL_d| / |orbit|
  std::uint64_t aut_order(const RepKey& key) const;
  /// All classes of dimension vector dims, sorted.
  std::vector<RepKey> classes(const KClass& dims) const;
  /// All classes with 0 <= dims <= bound, sorted.
  std::vector<RepKey> classes_below(const KClass& bound) const;
  RepKey zero_key() const;

  /// Number of entries in the representation space of dimension vector dims.
  int space_entries(const KClass& dims) const;

 private:
  struct Orbit {
    std::uint64_t canonical;
    std::uint64_t size;
  };
  struct Table {
    std::unordered_map<std::uint64_t, std::uint32_t> orbit_of;
    std::vector<Orbit> orbits;
    bool complete = false;
  };
  struct Layout {
    std::vector<int> dims;
    std::vector<int> offset;  // start of arrow matrix a in the flat encoding
  };

  Layout layout(const KClass& dims) const;
  void check_budget(const KClass& dims) const;
  std::vector<std::uint64_t> orbit_codes(const Layout& l, std::uint64_t start) const;
  Orbit orbit_for(const KClass& dims, std::uint64_t code) const;
  Table& table(const KClass& dims) const;

  const Quiver* quiver_;
  int q_;
  std::uint64_t budget_;
  mutable std::shared_mutex mu_;
  mutable std::map<KClass, std::unique_ptr<Table>> tables_;
};

/// |GL_n(F_q)|
unsigned __int128 gl_order(int n, int q);

}  // namespace dhall
