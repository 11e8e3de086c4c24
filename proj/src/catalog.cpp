#include "dhall/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

namespace dhall {

std::string RepKey::to_string() const { return dims.to_string() + "#" + std::to_string(code); }

unsigned __int128 gl_order(int n, int q) {
  unsigned __int128 r = 1, qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  unsigned __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    r *= qn - qi;
    qi *= q;
  }
  return r;
}

RepCatalog::RepCatalog(const Quiver& quiver, int q, std::uint64_t budget) : quiver_(&quiver), q_(q), budget_(budget) {
  field_of(q);
}

RepCatalog::Layout RepCatalog::layout(const KClass& dims) const {
  if (dims.size() != quiver_->vertex_count() || !dims.nonnegative()) throw std::invalid_argument("bad dimension vector");
  Layout l;
  for (long d : dims.values()) l.dims.push_back(static_cast<int>(d));
  int off = 0;
  for (auto [s, t] : quiver_->arrows()) {
    l.offset.push_back(off);
    off += l.dims[s] * l.dims[t];
  }
  l.offset.push_back(off);
  return l;
}

int RepCatalog::space_entries(const KClass& dims) const { return layout(dims).offset.back(); }

void RepCatalog::check_budget(const KClass& dims) const {
  int n = space_entries(dims);
  if (ipow_sat(q_, n) > budget_)
    throw BudgetExceeded("representation space of dimension " + dims.to_string() + " has q^" + std::to_string(n) +
                         " points, over budget " + std::to_string(budget_));
}

std::uint64_t RepCatalog::encode(const Rep& x) const {
  std::uint64_t code = 0, place = 1;
  for (const auto& m : x.maps)
    for (Residue r : m.data()) {
      code += r * place;
      place *= q_;
    }
  return code;
}

Rep RepCatalog::decode(const KClass& dims, std::uint64_t code) const {
  Rep x = semisimple_rep(*quiver_, dims, q_);
  for (auto& m : x.maps)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) {
        m(i, j) = static_cast<Residue>(code % q_);
        code /= q_;
      }
  return x;
}

std::vector<std::uint64_t> RepCatalog::orbit_codes(const Layout& l, std::uint64_t start) const {
  const int q = q_;
  const int entries = l.offset.back();
  const auto& arrows = quiver_->arrows();
  const PrimeField& f = field_of(q);
  const Residue g = f.primitive_root();
  const Residue ginv = f.inv(g);

  std::vector<std::uint64_t> place(entries + 1, 1);
  for (int i = 1; i <= entries; ++i) place[i] = place[i - 1] * q;
  auto decode_flat = [&](std::uint64_t c, std::vector<int>& buf) {
    for (int i = 0; i < entries; ++i) {
      buf[i] = static_cast<int>(c % q);
      c /= q;
    }
  };
  auto encode_flat = [&](const std::vector<int>& buf) {
    std::uint64_t c = 0;
    for (int i = 0; i < entries; ++i) c += buf[i] * place[i];
    return c;
  };

  // generators at vertex v: transvections I + E_ij and diag(g, 1, ..., 1)
  struct Gen {
    int v, i, j;  // j < 0 marks the diagonal generator
  };
  std::vector<Gen> gens;
  for (int v = 0; v < quiver_->vertex_count(); ++v) {
    int d = l.dims[v];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (i != j) gens.push_back({v, i, j});
    if (d > 0 && q > 2) gens.push_back({v, 0, -1});
  }

  auto apply = [&](const Gen& gen, std::vector<int>& m) {
    for (size_t a = 0; a < arrows.size(); ++a) {
      auto [s, t] = arrows[a];
      const int rows = l.dims[t], cols = l.dims[s];
      int* base = m.data() + l.offset[a];
      if (t == gen.v) {  // left multiplication
        if (gen.j >= 0)
          for (int c = 0; c < cols; ++c) base[gen.i * cols + c] = (base[gen.i * cols + c] + base[gen.j * cols + c]) % q;
        else
          for (int c = 0; c < cols; ++c) base[c] = base[c] * g % q;
      }
      if (s == gen.v) {  // right multiplication by the inverse
        if (gen.j >= 0)
          for (int r = 0; r < rows; ++r)
            base[r * cols + gen.j] = (base[r * cols + gen.j] + q - base[r * cols + gen.i]) % q;
        else
          for (int r = 0; r < rows; ++r) base[r * cols] = base[r * cols] * ginv % q;
      }
    }
  };

  std::vector<std::uint64_t> orbit{start};
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<int> buf(entries);
  for (size_t k = 0; k < orbit.size(); ++k) {
    for (const auto& gen : gens) {
      decode_flat(orbit[k], buf);
      apply(gen, buf);
      std::uint64_t c = encode_flat(buf);
      if (seen.insert(c).second) orbit.push_back(c);
    }
  }
  return orbit;
}

RepCatalog::Table& RepCatalog::table(const KClass& dims) const {
  // caller holds the unique lock
  auto& slot = tables_[dims];
  if (!slot) slot = std::make_unique<Table>();
  return *slot;
}

RepCatalog::Orbit RepCatalog::orbit_for(const KClass& dims, std::uint64_t code) const {
  {
    std::shared_lock lock(mu_);
    auto it = tables_.find(dims);
    if (it != tables_.end()) {
      auto o = it->second->orbit_of.find(code);
      if (o != it->second->orbit_of.end()) return it->second->orbits[o->second];
    }
  }
  check_budget(dims);
  auto codes = orbit_codes(layout(dims), code);
  std::uint64_t canonical = *std::min_element(codes.begin(), codes.end());
  std::unique_lock lock(mu_);
  Table& t = table(dims);
  auto o = t.orbit_of.find(code);
  if (o != t.orbit_of.end()) return t.orbits[o->second];
  auto id = static_cast<std::uint32_t>(t.orbits.size());
  t.orbits.push_back({canonical, codes.size()});
  for (auto c : codes) t.orbit_of.emplace(c, id);
  return t.orbits[id];
}

RepKey RepCatalog::key_of(const Rep& x) const {
  validate_rep(*quiver_, x);
  if (x.q != q_) throw std::invalid_argument("representation over a different field");
  KClass d = x.dim_vector();
  return {d, orbit_for(d, encode(x)).canonical};
}

Rep RepCatalog::representative(const RepKey& key) const { return decode(key.dims, key.code); }

std::uint64_t RepCatalog::orbit_size(const RepKey& key) const { return orbit_for(key.dims, key.code).size; }

std::uint64_t RepCatalog::aut_order(const RepKey& key) const {
  unsigned __int128 gl = 1;
  for (long d : key.dims.values()) gl *= gl_order(static_cast<int>(d), q_);
  std::uint64_t size = orbit_size(key);
  if (gl % size != 0) throw std::logic_error("orbit size does not divide |GL_d|");
  return static_cast<std::uint64_t>(gl / size);
}

std::vector<RepKey> RepCatalog::classes(const KClass& dims) const {
  check_budget(dims);
  bool complete = false;
  {
    std::shared_lock lock(mu_);
    auto it = tables_.find(dims);
    complete = it != tables_.end() && it->second->complete;
  }
  if (!complete) {
    std::uint64_t total = ipow_sat(q_, space_entries(dims));
    for (std::uint64_t c = 0; c < total; ++c) orbit_for(dims, c);
  }
  std::vector<RepKey> out;
  {
    std::unique_lock lock(mu_);
    Table& t = table(dims);
    t.complete = true;
    for (const auto& o : t.orbits) out.push_back({dims, o.canonical});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RepKey> RepCatalog::classes_below(const KClass& bound) const {
  std::vector<RepKey> out;
  for (const auto& d : dhall::classes_below(bound)) {
    auto part = classes(d);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RepKey RepCatalog::zero_key() const { return {quiver_->zero_class(), 0}; }

}  // namespace dhall
