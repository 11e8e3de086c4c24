#include "dhall/hall.hpp"

#include <mutex>

#include "dhall/io.hpp"
#include "dhall/kernels.hpp"
#include "dhall/subspace.hpp"

namespace dhall {

std::string ExtKey::to_string() const { return a.to_string() + "K" + alpha.to_string(); }

const GTable& HallAlgebra::g_table(const RepKey& l) const {
  {
    std::shared_lock lock(mu_);
    auto it = g_.find(l);
    if (it != g_.end()) return *it->second;
  }
  auto table = std::make_unique<GTable>(subrep_sweep_parallel(*s_, s_->rep(l)));
  std::unique_lock lock(mu_);
  auto [it, fresh] = g_.try_emplace(l, std::move(table));
  return *it->second;
}

std::uint64_t HallAlgebra::g(const RepKey& l, const RepKey& m, const RepKey& n) const {
  if (l.dims != m.dims + n.dims) return 0;
  const GTable& t = g_table(l);
  auto it = t.find({m, n});
  return it == t.end() ? 0 : it->second;
}

HallElement HallAlgebra::basis_mul(const RepKey& a, const RepKey& b) const {
  {
    std::shared_lock lock(mu_);
    auto it = products_.find({a, b});
    if (it != products_.end()) return it->second;
  }
  HallElement r;
  mpz_class ab = mpz_class(s_->aut(a)) * mpz_class(s_->aut(b));
  for (const auto& c : s_->catalog().classes(a.dims + b.dims)) {
    std::uint64_t gc = g(c, a, b);
    if (gc == 0) continue;
    r.add(c, Coeff(mpq_class(mpz_class(gc) * ab, mpz_class(s_->aut(c)))));
  }
  std::unique_lock lock(mu_);
  products_.try_emplace({a, b}, r);
  return r;
}

HallElement HallAlgebra::hall_mul(const HallElement& x, const HallElement& y) const {
  return bilinear(x, y, [&](const RepKey& a, const RepKey& b) { return basis_mul(a, b); });
}

HallElement HallAlgebra::twisted_mul(const HallElement& x, const HallElement& y) const {
  return bilinear(x, y, [&](const RepKey& a, const RepKey& b) {
    return basis_mul(a, b).scaled(t_pow(s_->euler(a.dims, b.dims)));
  });
}

HallElement HallAlgebra::hall_mul_by_extensions(const RepKey& ak, const RepKey& bk) const {
  const Quiver& quiver = s_->quiver();
  Rep m = s_->rep(ak), n = s_->rep(bk);
  int entries = 0;
  for (auto [src, tgt] : quiver.arrows()) entries += m.dims[src] * n.dims[tgt];
  std::uint64_t total = ipow_sat(s_->q(), entries);
  s_->require_budget(total, "hall_mul_by_extensions");
  std::map<RepKey, std::uint64_t> hits;
  std::vector<FqMatrix> h;
  for (auto [src, tgt] : quiver.arrows()) h.emplace_back(n.dims[tgt], m.dims[src], s_->q());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (auto& mat : h)
      for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j) {
          mat(i, j) = static_cast<Residue>(r % s_->q());
          r /= s_->q();
        }
    ++hits[s_->key(extension_middle(quiver, m, n, h))];
  }
  int c0 = 0;
  for (size_t v = 0; v < m.dims.size(); ++v) c0 += m.dims[v] * n.dims[v];
  mpz_class den = mpz_class(ipow_sat(s_->q(), c0));
  HallElement out;
  for (const auto& [l, c] : hits) out.add(l, Coeff(mpq_class(mpz_class(c), den)));
  return out;
}

HallTensor HallAlgebra::green_coproduct(const HallElement& x) const {
  HallTensor r;
  for (const auto& [a, c] : x.terms())
    for (const auto& [mn, gv] : g_table(a))
      r.add(mn, c * t_pow(s_->euler(mn.first.dims, mn.second.dims)) * Coeff(static_cast<long>(gv)));
  return r;
}

Coeff HallAlgebra::counit(const HallElement& x) const { return x.coeff(s_->zero_key()); }

HallTensor HallAlgebra::tensor_mul(const HallTensor& u, const HallTensor& v, Product p, bool sym_twist) const {
  auto mul = [&](const HallElement& a, const HallElement& b) {
    return p == Product::twisted ? twisted_mul(a, b) : hall_mul(a, b);
  };
  auto twist = [&](const RepKey& b, const RepKey& c) {
    return sym_twist ? t_pow(s_->sym_euler(b.dims, c.dims)) : Coeff(1);
  };
  return dhall::tensor_mul(u, v, mul, twist);
}

HallTensor HallAlgebra::tensor_mul_plain(const HallTensor& u, const HallTensor& v) const {
  return tensor_mul(u, v, Product::twisted, false);
}

HallTensor HallAlgebra::tensor_mul_green_twisted(const HallTensor& u, const HallTensor& v) const {
  return tensor_mul(u, v, Product::twisted, true);
}

ExtElement HallAlgebra::extended_mul(const ExtElement& x, const ExtElement& y) const {
  return bilinear(x, y, [&](const ExtKey& a, const ExtKey& b) {
    // K_alpha * [B] = t^{(alpha, B)} [B] * K_alpha
    Coeff c = t_pow(s_->sym_euler(a.alpha, b.a.dims));
    ExtElement r;
    KClass k = a.alpha + b.alpha;
    HallElement ab = twisted_mul(basis(a.a), basis(b.a));
    for (const auto& [l, v] : ab.terms()) r.add(ExtKey{l, k}, v * c);
    return r;
  });
}

ExtTensor HallAlgebra::extended_coproduct(const ExtElement& x) const {
  ExtTensor r;
  for (const auto& [ak, c] : x.terms())
    for (const auto& [mn, gv] : g_table(ak.a)) {
      const auto& [b, d] = mn;
      r.add({ExtKey{b, d.dims + ak.alpha}, ExtKey{d, ak.alpha}},
            c * t_pow(s_->euler(b.dims, d.dims)) * Coeff(static_cast<long>(gv)));
    }
  return r;
}

Coeff HallAlgebra::counit(const ExtElement& x) const {
  Coeff r;
  for (const auto& [k, c] : x.terms())
    if (k.a == s_->zero_key()) r += c;
  return r;
}

ExtTensor HallAlgebra::ext_tensor_mul(const ExtTensor& u, const ExtTensor& v) const {
  auto mul = [&](const ExtElement& a, const ExtElement& b) { return extended_mul(a, b); };
  return dhall::tensor_mul(u, v, mul, [](const ExtKey&, const ExtKey&) { return Coeff(1); });
}

nlohmann::json HallAlgebra::export_structure_constants(const KClass& bound) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& l : s_->catalog().classes_below(bound))
    for (const auto& [mn, gv] : g_table(l))
      rows.push_back({{"L", to_json(l)}, {"M", to_json(mn.first)}, {"N", to_json(mn.second)}, {"g", gv}});
  return rows;
}

}  // namespace dhall
