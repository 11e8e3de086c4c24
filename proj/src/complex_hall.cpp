#include "dhall/complex_hall.hpp"

#include <mutex>
#include <random>
#include <stdexcept>

#include "dhall/subspace.hpp"

namespace dhall {

namespace {

long bilinear_form(const std::vector<std::vector<long>>& b, const KClass& x, const KClass& y) {
  long r = 0;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j) r += x[i] * b[i][j] * y[j];
  return r;
}

std::vector<std::vector<long>> zeros(int n) { return std::vector<std::vector<long>>(n, std::vector<long>(n, 0)); }

}  // namespace

long ChiMap::operator()(const KClass& m1, const KClass& m0, const KClass& n1, const KClass& n0) const {
  const KClass* m[2] = {&m1, &m0};
  const KClass* n[2] = {&n1, &n0};
  long r = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r += bilinear_form(b[i][j], *m[i], *n[j]);
  return r;
}

ChiMap ChiMap::euler_prime(const Quiver& quiver) {
  ChiMap c;
  c.name = "euler";
  int n = quiver.vertex_count();
  for (auto& row : c.b)
    for (auto& blk : row) blk = zeros(n);
  c.b[0][0] = c.b[1][1] = quiver.euler_matrix();
  return c;
}

ChiMap ChiMap::chi0(const Quiver& quiver) {
  ChiMap c;
  c.name = "chi0";
  int n = quiver.vertex_count();
  for (auto& row : c.b)
    for (auto& blk : row) blk = zeros(n);
  auto e = quiver.euler_matrix();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c.b[0][0][i][j] = c.b[1][1][i][j] = -e[j][i];
  return c;
}

ChiMap ChiMap::by_name(const Quiver& quiver, const std::string& name) {
  if (name == "euler") return euler_prime(quiver);
  if (name == "chi0") return chi0(quiver);
  throw std::invalid_argument("unknown chi map: " + name);
}

bool satisfies_chi_condition(const ChiMap& chi, int vertex_count, int samples) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> dist(-3, 3);
  auto draw = [&] {
    KClass k(vertex_count);
    for (int i = 0; i < vertex_count; ++i) k[i] = dist(rng);
    return k;
  };
  for (int it = 0; it < samples; ++it) {
    KClass p1 = draw(), p0 = draw(), q1 = draw(), q0 = draw(), n1 = draw(), n0 = draw();
    KClass m1 = p1 + q1, m0 = p0 + q0, r1 = q1 + n1, r0 = q0 + n0;
    if (chi(m1, m0, n1, n0) + chi(p1, p0, q1, q0) != chi(p1, p0, r1, r0) + chi(q1, q0, n1, n0)) return false;
  }
  return true;
}

const Complex& ComplexHallAlgebra::complex(const ComplexKey& k) const {
  {
    std::shared_lock lock(mu_);
    auto it = complexes_.find(k);
    if (it != complexes_.end()) return *it->second;
  }
  auto c = std::make_unique<Complex>(complex_from_key(*s_, k));
  std::unique_lock lock(mu_);
  auto [it, fresh] = complexes_.try_emplace(k, std::move(c));
  return *it->second;
}

KClass ComplexHallAlgebra::hat(const ComplexKey& k) const {
  auto [c1, c0] = pieces(k);
  return c0 - c1;
}

long ComplexHallAlgebra::euler_prime(const ComplexKey& m, const ComplexKey& n) const {
  auto [m1, m0] = pieces(m);
  auto [n1, n0] = pieces(n);
  return s_->euler(m0, n0) + s_->euler(m1, n1);
}

long ComplexHallAlgebra::chi(const ChiMap& c, const ComplexKey& m, const ComplexKey& n) const {
  auto [m1, m0] = pieces(m);
  auto [n1, n0] = pieces(n);
  return c(m1, m0, n1, n0);
}

ComplexElement ComplexHallAlgebra::hall_mul(const ComplexKey& m, const ComplexKey& n) const {
  {
    std::shared_lock lock(mu_);
    auto it = products_.find({m, n});
    if (it != products_.end()) return it->second;
  }
  ExtensionTally tally = extension_sweep(*s_, complex(m), complex(n));
  mpz_class den(ipow_sat(s_->q(), tally.degreewise_hom_dim));
  ComplexElement r;
  for (const auto& [l, c] : tally.middles) r.add(l, Coeff(mpq_class(mpz_class(c), den)));
  std::unique_lock lock(mu_);
  products_.try_emplace({m, n}, r);
  return r;
}

ComplexElement ComplexHallAlgebra::twisted_mul(const ComplexElement& x, const ComplexElement& y) const {
  return bilinear(x, y, [&](const ComplexKey& m, const ComplexKey& n) {
    return hall_mul(m, n).scaled(t_pow(euler_prime(m, n)));
  });
}

const SubobjectTally& ComplexHallAlgebra::subobjects(const ComplexKey& l) const {
  {
    std::shared_lock lock(mu_);
    auto it = subs_.find(l);
    if (it != subs_.end()) return *it->second;
  }
  auto t = std::make_unique<SubobjectTally>(subobject_sweep(*s_, complex(l)));
  std::unique_lock lock(mu_);
  auto [it, fresh] = subs_.try_emplace(l, std::move(t));
  return *it->second;
}

ComplexTensor ComplexHallAlgebra::delta_naive(const ComplexElement& x, const ChiMap& c) const {
  ComplexTensor r;
  for (const auto& [l, v] : x.terms())
    for (const auto& [mn, counts] : subobjects(l))
      if (counts.all) r.add(mn, v * t_pow(chi(c, mn.first, mn.second)) * Coeff(static_cast<long>(counts.all)));
  return r;
}

ComplexTensor ComplexHallAlgebra::delta_e0(const ComplexElement& x, const ChiMap& c) const {
  ComplexTensor r;
  for (const auto& [l, v] : x.terms())
    for (const auto& [mn, counts] : subobjects(l))
      if (counts.e0) r.add(mn, v * t_pow(chi(c, mn.first, mn.second)) * Coeff(static_cast<long>(counts.e0)));
  return r;
}

Coeff ComplexHallAlgebra::counit(const ComplexElement& x) const { return x.coeff(zero_complex_key(*s_)); }

}  // namespace dhall
