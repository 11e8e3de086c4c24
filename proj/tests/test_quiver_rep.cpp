#include <doctest.h>

#include <functional>

#include "dhall/session.hpp"

using namespace dhall;

namespace {

/// Number of ways to write d as a sum of the given positive roots (multisets).
long root_partitions(const std::vector<KClass>& roots, size_t from, const KClass& d) {
  if (d.is_zero()) return 1;
  long total = 0;
  for (size_t i = from; i < roots.size(); ++i) {
    KClass rest = d - roots[i];
    if (rest.nonnegative()) total += root_partitions(roots, i, rest);
  }
  return total;
}

Quiver a3() { return Quiver::linear(3); }

}  // namespace

TEST_CASE("quiver loading and Euler form") {
  auto q = Quiver::from_json(nlohmann::json::parse(R"({"vertices":["1","2"],"arrows":[["1","2"]]})"));
  CHECK(q.vertex_count() == 2);
  CHECK(q.euler_form({1, 0}, {0, 1}) == -1);
  CHECK(q.euler_form({0, 1}, {1, 0}) == 0);
  CHECK(q.sym_euler_form({1, 1}, {1, 1}) == 2);
  CHECK_THROWS(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["1","2"],"arrows":[["1","2"],["2","1"]]})")));
  CHECK_THROWS(Quiver::from_json(nlohmann::json::parse(R"({"vertices":["1"],"arrows":[["1","3"]]})")));
}

TEST_CASE("iso classes on A_2 and A_3 match root multisets") {
  Session a2(Quiver::linear(2), 2);
  CHECK(a2.catalog().classes_below({1, 1}).size() == 5);
  std::vector<KClass> roots2{{1, 0}, {0, 1}, {1, 1}};
  for (int q : {2, 3}) {
    Session s(Quiver::linear(2), q);
    for (const auto& d : classes_below(KClass{2, 2})) {
      auto cls = s.catalog().classes(d);
      CHECK(static_cast<long>(cls.size()) == root_partitions(roots2, 0, d));
      std::uint64_t total = 0;
      for (const auto& k : cls) total += s.catalog().orbit_size(k);
      CHECK(total == ipow_sat(q, static_cast<int>(d[0] * d[1])));
    }
  }
  Session s3(a3(), 2);
  std::vector<KClass> roots3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
  for (const auto& d : classes_below(KClass{1, 2, 1}))
    CHECK(static_cast<long>(s3.catalog().classes(d).size()) == root_partitions(roots3, 0, d));
}

TEST_CASE("automorphism counts: orbit-stabilizer vs exhaustive") {
  Session a1(Quiver::linear(1), 2);
  CHECK(a1.aut(a1.key(semisimple_rep(a1.quiver(), {2}, 2))) == 6);
  CHECK(aut_count(a1.quiver(), semisimple_rep(a1.quiver(), {2}, 2)) == 6);
  for (int q : {2, 3}) {
    Session s(Quiver::linear(2), q);
    for (const auto& k : s.catalog().classes_below({2, 2}))
      CHECK(s.aut(k) == aut_count(s.quiver(), s.rep(k)));
  }
}

TEST_CASE("Hall numbers") {
  for (int q : {2, 3}) {
    Session s(Quiver::linear(1), q);
    Rep k1 = semisimple_rep(s.quiver(), {1}, q), k2 = semisimple_rep(s.quiver(), {2}, q);
    CHECK(hall_number(s, k2, k1, k1) == static_cast<std::uint64_t>(q + 1));
    CHECK(hall_number(s, k2, k1, k1) == enumerate_subspaces(2, 1, q).size());
  }
  Session s(Quiver::linear(2), 2);
  RepKey s1 = s.simple(0), s2 = s.simple(1), p1 = s.projective(0);
  CHECK(hall_number(s, p1, s1, s2) == 1);
  CHECK(hall_number(s, p1, s2, s1) == 0);
  CHECK(ext_count_with_middle(s, s1, s2, p1) == 1);
  CHECK(ext_count_by_cocycles(s, s1, s2, p1) == 1);
}

TEST_CASE("extension counts: Riedtmann formula vs cocycles, and dim Ext via Euler form") {
  for (int q : {2, 3}) {
    Session s(Quiver::linear(2), q);
    auto cls = s.catalog().classes_below({1, 1});
    for (const auto& m : cls)
      for (const auto& n : cls) {
        std::uint64_t sum = 0;
        for (const auto& l : s.catalog().classes(m.dims + n.dims)) {
          std::uint64_t e = ext_count_with_middle(s, m, n, l);
          CHECK(e == ext_count_by_cocycles(s, m, n, l));
          sum += e;
        }
        Rep mr = s.rep(m), nr = s.rep(n);
        CHECK(sum == ipow_sat(q, ext_dim(s, mr, nr)));
        CHECK(hom_dim(s.quiver(), mr, nr) - ext_dim(s, mr, nr) == s.euler(m.dims, n.dims));
      }
  }
}

TEST_CASE("projectives and minimal resolutions") {
  Session s(Quiver::linear(2), 2);
  auto ps = indecomposable_projectives(s.quiver(), 2);
  CHECK(ps[0].dim_vector() == KClass{1, 1});
  CHECK(s.key(ps[1]) == s.simple(1));
  const Resolution& r = s.resolution(s.simple(0));
  CHECK(r.p_mult == Mult{0, 1});
  CHECK(r.q_mult == Mult{1, 0});
  CHECK(projective_multiplicities(s.quiver(), {1, 2}) == Mult{1, 1});
  CHECK_FALSE(projective_multiplicities(s.quiver(), {1, 0}));

  for (const Quiver& quiver : {Quiver::linear(2), a3()}) {
    Session t(quiver, 2);
    KClass bound(quiver.vertex_count());
    for (int v = 0; v < quiver.vertex_count(); ++v) bound[v] = quiver.vertex_count() == 2 ? 2 : 1;
    for (const auto& k : t.catalog().classes_below(bound)) {
      const Resolution& res = t.resolution(k);
      Rep a = t.rep(k);
      CHECK(k.dims == res.q.dim_vector() - res.p.dim_vector());
      CHECK(is_morphism(quiver, res.p, res.q, res.f));
      CHECK(is_morphism(quiver, res.q, a, res.cover));
      CHECK(kernel(res.f, res.p).dim_vector().is_zero());
      CHECK(image(res.cover, 2).dim_vector() == k.dims);
      CHECK(image(res.f, 2) == kernel(res.cover, res.q));
      CHECK(is_radical_map(quiver, res.q, res.f));
      CHECK(is_projective(quiver, res.p));
      CHECK(is_projective(quiver, a) == (res.p.total_dim() == 0));
    }
  }
}

TEST_CASE("budget guard") {
  Session s(Quiver::linear(2), 2, 64);
  CHECK_NOTHROW(s.catalog().classes({2, 3}));
  CHECK_THROWS_AS(s.catalog().classes({3, 3}), BudgetExceeded);
}
