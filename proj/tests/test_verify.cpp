#include <doctest.h>

#include <set>

#include "dhall/verify.hpp"

using namespace dhall;

namespace {

SessionConfig a1(int q, KClass bound) {
  SessionConfig c;
  c.quiver = Quiver::linear(1);
  c.q = q;
  c.bound = std::move(bound);
  return c;
}

SessionConfig a2(KClass bound) {
  SessionConfig c;
  c.bound = std::move(bound);
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(SessionConfig{}.validate());
  SessionConfig c;
  c.q = 4;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SessionConfig{};
  c.budget = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SessionConfig{};
  c.bound = KClass{1, 1, 1};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SessionConfig{};
  c.chi = "nope";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SessionConfig{};
  c.checks = {"assoc-hall", "no-such-check"};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("check ids and anchors") {
  const auto& ids = check_ids();
  CHECK(ids.size() == 18);
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  for (const auto& id : ids) CHECK_FALSE(check_anchor(id).empty());
  CHECK_THROWS_AS(check_anchor("bogus"), std::invalid_argument);
}

TEST_CASE("naive failure and coideal on A_1") {
  Verifier v(a1(2, KClass{2}));
  CheckReport nf = v.run("naive-failure");
  CHECK(nf.status == Status::pass);
  REQUIRE(nf.details.contains("witness"));
  CHECK(nf.details["witness"]["e0"] == 0);
  CHECK(nf.details["witness"]["g"].get<int>() > 0);
  CHECK(nf.counterexample.is_null());
  CHECK(v.run("coideal").status == Status::pass);
}

TEST_CASE("report schema and byte determinism") {
  std::vector<std::string> ids = {"assoc-hall", "km-kk-relations", "lemma-ggt"};
  std::string first, second;
  for (std::string* out : {&first, &second}) {
    Verifier v(a2({1, 1}));
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : v.run(ids)) j.push_back(to_json(r, false));
    *out = j.dump();
  }
  CHECK(first == second);
  auto j = nlohmann::json::parse(first);
  for (const auto& r : j) {
    for (const char* k : {"check", "status", "anchor", "counterexample", "ms"}) CHECK(r.contains(k));
    CHECK(r["ms"] == 0);
    if (r["status"] == "fail") CHECK_FALSE(r["counterexample"].is_null());
  }
}

TEST_CASE("statuses on the small A_2 session") {
  Verifier v(a2({1, 1}));
  for (const char* id : {"assoc-hall", "assoc-dh", "coassoc-naive", "coassoc-E0", "coideal", "lemma-ncm", "lemma-aa",
                         "green-bialgebra", "km-kk-relations", "ext-hom-bridge", "serre-sanity"})
    CHECK_MESSAGE(v.run(id).status == Status::pass, id);
  CheckReport km = v.run("km-kk-relations");
  CHECK(km.details["exponent_alpha_P1_M_CS1"] == 1);

  // g^{C_{P_1}}_{C_{S_1},C_{S_2}} = 0 while g^{P_1}_{S_1,S_2} = 1
  CheckReport ggt = v.run("lemma-ggt");
  CHECK(ggt.status == Status::fail);
  CHECK(ggt.counterexample["g_A"] == 1);
  CHECK(ggt.counterexample["g_CA"] == 0);

  CheckReport ex = v.run("exact-axioms");
  CHECK(ex.status == Status::fail);
  CHECK(ex.details["axioms"]["Ex0"]["failed"] == 0);
  CHECK(ex.details["axioms"]["Ex1"]["failed"] == 0);
  CHECK(ex.details["axioms"]["Ex2"]["failed"].get<int>() > 0);

  CheckReport emb = v.run("thm-embedding");
  CHECK(emb.status == Status::fail);
  CHECK(emb.details["failing_classes"].size() == 1);
}

TEST_CASE("budget exhaustion is reported as skipped, never as pass") {
  SessionConfig c = a2({2, 2});
  c.budget = 8;
  Verifier v(c);
  CheckReport r = v.run("assoc-hall");
  CHECK(r.status == Status::skipped_budget);
  CHECK(exit_code({r}) == 3);
  CheckReport ok;
  CHECK(exit_code({ok}) == 0);
  CheckReport bad;
  bad.status = Status::fail;
  CHECK(exit_code({r, bad, ok}) == 1);
}
