#include <doctest.h>

#include "msv/serialize.hpp"

using namespace msv;

TEST_CASE("bs json shape") {
  const RootSystem rs = RootSystem::build(Family::A, 3);
  const BottSamelsonData bs = BottSamelsonData::build(rs, 2, {1, 3, 2});
  const Json j = to_json(bs);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"family", "rank", "weight", "n", "gamma", "beta", "alpha",
                                         "special_root", "pair_alpha", "pair_beta", "contracted",
                                         "tangent", "hat_basis"});
  CHECK(j["family"] == "A");
  CHECK(j["beta"] == Json::array({3, 1, 2}));
  CHECK(j["alpha"][2] == Json::array({1, 1, 1}));
  CHECK(j["contracted"] == Json::array({3}));
  CHECK(j["tangent"][2] == Json::array({1, 1, 2}));
  CHECK(j["hat_basis"][0] == Json::array({1, 0, 1}));
}

TEST_CASE("components json") {
  const RootSystem rs = RootSystem::build(Family::A, 3);
  const BottSamelsonData bs = BottSamelsonData::build(rs, 2, {1, 3, 2});
  const Json j = to_json(bs, ne_set(bs, 2), false);
  CHECK(j["degree"] == 2);
  CHECK(j["count"] == 3);
  CHECK(j["classes"][0]["b"] == Json::array({2, 0, 0}));
  CHECK(j["classes"][0]["a"] == Json::array({2, 0, 2}));
  CHECK_FALSE(j["classes"][0].contains("dimension"));
  CHECK(to_json(bs, ne_set(bs, 1), true)["classes"][0].contains("dimension"));
}

TEST_CASE("table json and text agree") {
  const RootSystem rs = RootSystem::build(Family::B, 3);
  const auto cls = classify_minuscule(rs);
  const Json j = to_json(rs, cls);
  CHECK(j["weights"][2]["minuscule"] == true);
  CHECK(j["weights"][0]["cominuscule"] == true);
  CHECK(j["weights"][0]["minuscule"] == false);
  const std::string text = render_table(rs, cls);
  CHECK(text.find("w3      yes        no") != std::string::npos);
  CHECK(text.find("w1      no         yes") != std::string::npos);
}

TEST_CASE("audit json") {
  AuditReport r;
  SuiteResult s;
  s.suite = Suite::Fin;
  s.checks = 2;
  s.failures = 1;
  s.counterexamples.push_back({"A3 w2", {1, 3, 2}, {1, 3}, 0, 1, "x"});
  r.suites.push_back(s);
  const Json j = to_json(r, false);
  CHECK(j["passed"] == false);
  CHECK(j["suites"][0]["suite"] == "fin");
  CHECK(j["suites"][0]["counterexamples"][0]["indices"] == Json::array({1, 3}));
  CHECK_FALSE(j["suites"][0].contains("wall_ms"));
  CHECK(render_audit(r).find("FAIL") != std::string::npos);
}
