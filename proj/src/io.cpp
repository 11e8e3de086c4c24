#include "dhall/io.hpp"

#include <sstream>
#include <stdexcept>

namespace dhall {

json to_json(const Rep& x) {
  json maps = json::array();
  for (const auto& m : x.maps) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(static_cast<int>(m(i, j)));
      rows.push_back(row);
    }
    maps.push_back(rows);
  }
  return {{"dims", x.dims}, {"maps", maps}};
}

Rep rep_from_json(const Session& s, const json& j) {
  const Quiver& quiver = s.quiver();
  KClass dims = kclass_from_json(j.at("dims"));
  if (dims.size() != quiver.vertex_count() || !dims.nonnegative())
    throw std::invalid_argument("rep: dims must have one nonnegative entry per vertex");
  Rep x = semisimple_rep(quiver, dims, s.q());
  if (j.contains("maps")) {
    const json& maps = j.at("maps");
    if (!maps.is_array() || static_cast<int>(maps.size()) != quiver.arrow_count())
      throw std::invalid_argument("rep: one matrix per arrow expected");
    for (int a = 0; a < quiver.arrow_count(); ++a) {
      FqMatrix& m = x.maps[a];
      const json& rows = maps[a];
      if (static_cast<int>(rows.size()) != m.rows()) throw std::invalid_argument("rep: matrix row count mismatch");
      for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols()) throw std::invalid_argument("rep: matrix column count mismatch");
        for (int c = 0; c < m.cols(); ++c) {
          long v = rows[r][c].get<long>() % s.q();
          m(r, c) = static_cast<Residue>(v < 0 ? v + s.q() : v);
        }
      }
    }
  }
  validate_rep(quiver, x);
  return x;
}

json to_json(const RepKey& k) { return {{"dims", k.dims.values()}, {"code", k.code}}; }

RepKey rep_key_from_json(const Session& s, const json& j) {
  if (j.contains("code")) {
    RepKey k{kclass_from_json(j.at("dims")), j.at("code").get<std::uint64_t>()};
    // round-trip through the catalog to reject non-canonical codes
    RepKey c = s.key(s.catalog().decode(k.dims, k.code));
    if (c != k) throw std::invalid_argument("rep key: code is not the canonical one of its class");
    return k;
  }
  return s.key(rep_from_json(s, j));
}

json to_json(const ComplexKey& k) { return {{"A", to_json(k.a)}, {"B", to_json(k.b)}, {"P", k.p}, {"Q", k.q}}; }

ComplexKey complex_key_from_json(const Session& s, const json& j) {
  ComplexKey k;
  k.a = rep_key_from_json(s, j.at("A"));
  k.b = rep_key_from_json(s, j.at("B"));
  Mult none(static_cast<size_t>(s.quiver().vertex_count()), 0);
  k.p = j.contains("P") ? j.at("P").get<Mult>() : none;
  k.q = j.contains("Q") ? j.at("Q").get<Mult>() : none;
  if (k.p.size() != none.size() || k.q.size() != none.size())
    throw std::invalid_argument("complex key: P and Q need one entry per vertex");
  return k;
}

json to_json(const KClass& c) { return c.values(); }

KClass kclass_from_json(const json& j) { return KClass(j.get<std::vector<long>>()); }

json to_json(const Coeff& c) { return {{"rat", c.rational().get_str()}, {"sqrt", c.sqrt_part().get_str()}}; }

Coeff coeff_from_json(const json& j, int q) {
  mpq_class a(j.at("rat").get<std::string>()), b(j.value("sqrt", std::string("0")));
  a.canonicalize();
  b.canonicalize();
  return Coeff(a, b, q);
}

json to_json(const HallElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) out.push_back({{"key", to_json(k)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const HallTensor& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const ExtElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"key", to_json(k.a)}, {"alpha", to_json(k.alpha)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const ComplexElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) out.push_back({{"key", to_json(k)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const ComplexTensor& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"left", to_json(k.first)}, {"right", to_json(k.second)}, {"coeff", to_json(c)}});
  return out;
}

json key_fields(const DHKey& k) {
  return {{"A", to_json(k.a)}, {"B", to_json(k.b)}, {"alpha", to_json(k.alpha)}, {"beta", to_json(k.beta)}};
}

json to_json(const DHElement& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms()) {
    json row = key_fields(k);
    row["coeff"] = to_json(c);
    out.push_back(row);
  }
  return out;
}

json to_json(const DHTensor& x) {
  json out = json::array();
  for (const auto& [k, c] : x.terms())
    out.push_back({{"left", key_fields(k.first)}, {"right", key_fields(k.second)}, {"coeff", to_json(c)}});
  return out;
}

DHElement dh_element_from_json(const Session& s, const json& j) {
  DHElement x;
  int n = s.quiver().vertex_count();
  for (const auto& row : j) {
    DHKey k;
    k.a = rep_key_from_json(s, row.at("A"));
    k.b = rep_key_from_json(s, row.at("B"));
    k.alpha = row.contains("alpha") ? kclass_from_json(row.at("alpha")) : KClass(n);
    k.beta = row.contains("beta") ? kclass_from_json(row.at("beta")) : KClass(n);
    if (k.alpha.size() != n || k.beta.size() != n) throw std::invalid_argument("DH key: alpha/beta size mismatch");
    x.add(k, row.contains("coeff") ? coeff_from_json(row.at("coeff"), s.q()) : Coeff(1));
  }
  return x;
}

KClass parse_dims(const std::string& text) {
  std::vector<long> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw std::invalid_argument("dims: empty entry in '" + text + "'");
    size_t used = 0;
    long x = std::stol(part, &used);
    if (used != part.size()) throw std::invalid_argument("dims: bad entry '" + part + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("dims: empty");
  return KClass(std::move(v));
}

}  // namespace dhall
