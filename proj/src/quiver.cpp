#include "dhall/quiver.hpp"

#include <fstream>
#include <queue>
#include <stdexcept>

namespace dhall {

KClass KClass::operator+(const KClass& o) const {
  if (size() != o.size()) throw std::invalid_argument("class size mismatch");
  KClass r(*this);
  for (int i = 0; i < size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

KClass KClass::operator-(const KClass& o) const { return *this + (-o); }

KClass KClass::operator-() const { return scaled(-1); }

KClass KClass::scaled(long s) const {
  KClass r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

bool KClass::is_zero() const noexcept {
  for (long x : c_)
    if (x) return false;
  return true;
}

bool KClass::nonnegative() const noexcept {
  for (long x : c_)
    if (x < 0) return false;
  return true;
}

bool KClass::leq(const KClass& o) const {
  if (size() != o.size()) throw std::invalid_argument("class size mismatch");
  for (int i = 0; i < size(); ++i)
    if (c_[i] > o.c_[i]) return false;
  return true;
}

long KClass::total() const noexcept {
  long s = 0;
  for (long x : c_) s += x;
  return s;
}

std::string KClass::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + ")";
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : names_(std::move(vertices)), arrows_(std::move(arrows)) {
  const int n = vertex_count();
  if (n == 0) throw std::invalid_argument("quiver has no vertices");
  into_.assign(n, {});
  out_.assign(n, {});
  std::vector<int> indeg(n, 0);
  for (int a = 0; a < arrow_count(); ++a) {
    auto [s, t] = arrows_[a];
    if (s < 0 || s >= n || t < 0 || t >= n) throw std::invalid_argument("arrow endpoint out of range");
    out_[s].push_back(a);
    into_[t].push_back(a);
    ++indeg[t];
  }
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) ready.push(v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    topo_.push_back(v);
    for (int a : out_[v])
      if (--indeg[arrows_[a].target] == 0) ready.push(arrows_[a].target);
  }
  if (static_cast<int>(topo_.size()) != n) throw std::invalid_argument("quiver has an oriented cycle");
}

Quiver Quiver::from_json(const nlohmann::json& j) {
  std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
  auto index = [&](const std::string& v) {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == v) return static_cast<int>(i);
    throw std::invalid_argument("arrow mentions unknown vertex '" + v + "'");
  };
  std::vector<Arrow> arrows;
  for (const auto& a : j.value("arrows", nlohmann::json::array())) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("arrow must be [source, target]");
    arrows.push_back({index(a[0].get<std::string>()), index(a[1].get<std::string>())});
  }
  return Quiver(std::move(names), std::move(arrows));
}

Quiver Quiver::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open quiver file " + path);
  return from_json(nlohmann::json::parse(in));
}

Quiver Quiver::linear(int n) {
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) arrows.push_back({i, i + 1});
  return Quiver(std::move(names), std::move(arrows));
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [s, t] : arrows_) arrows.push_back({names_[s], names_[t]});
  return {{"vertices", names_}, {"arrows", arrows}};
}

int Quiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown vertex " + name);
}

long Quiver::euler_form(const KClass& a, const KClass& b) const {
  if (a.size() != vertex_count() || b.size() != vertex_count()) throw std::invalid_argument("class size mismatch");
  long s = 0;
  for (int i = 0; i < vertex_count(); ++i) s += a[i] * b[i];
  for (auto [src, tgt] : arrows_) s -= a[src] * b[tgt];
  return s;
}

long Quiver::sym_euler_form(const KClass& a, const KClass& b) const { return euler_form(a, b) + euler_form(b, a); }

std::vector<std::vector<long>> Quiver::euler_matrix() const {
  const int n = vertex_count();
  std::vector<std::vector<long>> e(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  for (auto [s, t] : arrows_) e[s][t] -= 1;
  return e;
}

std::vector<Path> Quiver::paths_from(int v) const {
  std::vector<Path> out{{v, v, {}}};
  for (size_t i = 0; i < out.size(); ++i) {
    Path p = out[i];
    for (int a : out_[p.target]) {
      Path next = p;
      next.target = arrows_[a].target;
      next.arrows.push_back(a);
      out.push_back(std::move(next));
    }
  }
  return out;
}

KClass Quiver::simple_class(int v) const {
  KClass c(vertex_count());
  c[v] = 1;
  return c;
}

}  // namespace dhall
