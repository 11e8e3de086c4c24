#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

namespace dhall {

/// Integer vector indexed by vertices: dimension vectors and K_0 classes.
class KClass {
 public:
  KClass() = default;
  explicit KClass(int n) : c_(n, 0) {}
  explicit KClass(std::vector<long> c) : c_(std::move(c)) {}
  KClass(std::initializer_list<long> c) : c_(c) {}

  int size() const noexcept { return static_cast<int>(c_.size()); }
  long operator[](int i) const { return c_[i]; }
  long& operator[](int i) { return c_[i]; }
  const std::vector<long>& values() const noexcept { return c_; }

  KClass operator+(const KClass& o) const;
  KClass operator-(const KClass& o) const;
  KClass operator-() const;
  KClass& operator+=(const KClass& o) { return *this = *this + o; }
  KClass& operator-=(const KClass& o) { return *this = *this - o; }
  KClass scaled(long s) const;

  bool is_zero() const noexcept;
  bool nonnegative() const noexcept;
  /// componentwise <=
  bool leq(const KClass& o) const;
  long total() const noexcept;

  auto operator<=>(const KClass&) const = default;
  bool operator==(const KClass&) const = default;

  std::string to_string() const;

 private:
  std::vector<long> c_;
};

struct Arrow {
  int source, target;
};

/// A path out of a vertex; arrows listed in traversal order.
struct Path {
  int source, target;
  std::vector<int> arrows;
};

/// Finite acyclic quiver.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static Quiver from_json(const nlohmann::json& j);
  static Quiver load(const std::string& path);
  /// 1 -> 2 -> ... -> n
  static Quiver linear(int n);

  nlohmann::json to_json() const;

  int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  int arrow_count() const noexcept { return static_cast<int>(arrows_.size()); }
  const std::vector<int>& topological_order() const noexcept { return topo_; }
  const std::vector<int>& arrows_into(int v) const { return into_[v]; }
  const std::vector<int>& arrows_out_of(int v) const { return out_[v]; }
  int vertex_index(const std::string& name) const;

  /// <a, b> = sum_i a_i b_i - sum_{s->t} a_s b_t
  long euler_form(const KClass& a, const KClass& b) const;
  long sym_euler_form(const KClass& a, const KClass& b) const;
  /// Matrix E with <a, b> = a^T E b.
  std::vector<std::vector<long>> euler_matrix() const;

  /// All paths starting at v, the trivial path first; deterministic order.
  std::vector<Path> paths_from(int v) const;

  KClass simple_class(int v) const;
  KClass zero_class() const { return KClass(vertex_count()); }

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_;
  std::vector<std::vector<int>> into_, out_;
};

}  // namespace dhall
