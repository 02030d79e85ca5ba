#include <doctest.h>

#include "xlk/pipelines.hpp"

using namespace xlk;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.count = 2;
  c.grid = 3;
  return c;
}

}  // namespace

TEST_CASE("run config round trip and validation") {
  RunConfig c;
  c.seed = 99;
  c.h = 2e-5;
  RunConfig d = RunConfig::from_json(c.to_json());
  CHECK(d.to_json() == c.to_json());
  c.tol = -1;
  CHECK_THROWS_AS(c.validate(), Error);
  RunConfig e;
  e.count = 0;
  CHECK_THROWS_AS(e.validate(), Error);
}

TEST_CASE("bundled instances resolve") {
  Json inst = instances();
  for (const char* k : {"10_98", "10_99_I", "10_99_II", "10_123", "parabolic", "turks_head"}) CHECK(inst.contains(k));
  CHECK_NOTHROW(PDCode::load(data_path(inst["10_98"]["link"].get<std::string>())));
}

TEST_CASE("quotient claim report") {
  RunConfig c;
  Json yes = quotient_claim_report(BraidWord::parse("s1 S2 s1 S2 s1", 3), c);
  CHECK(yes["holds"].get<bool>());
  CHECK(yes["report"] == "claim holds");
  Json no = quotient_claim_report(BraidWord::parse("s1 s2 s1 s2 s1", 3), c);
  CHECK_FALSE(no["holds"].get<bool>());
}

TEST_CASE("riley report") {
  Json r = riley_report("3/1", {Complex(1.0)});
  CHECK(r["word"] == "x y");
  CHECK(r["roots"].size() == 1);
}

TEST_CASE("construction II certificate is deterministic and verifies") {
  RunConfig c = small_config();
  Json a = construction2_certificate("10_123", BraidWord::parse("s1 S2 s1 S2 s1", 3),
                                     Involution::parse("reflect", 3), c);
  Json b = construction2_certificate("10_123", BraidWord::parse("s1 S2 s1 S2 s1", 3),
                                     Involution::parse("reflect", 3), c);
  CHECK(emit_certificate(a) == emit_certificate(b));
  CHECK(a["schema"] == "xlk-certificate");
  CHECK(certificate_passed(a));
  CHECK(certificate_consistency(a).empty());
  auto v = verify_certificate(a);
  CHECK(v.ok);

  Json t = a;
  t["points"][0]["residual"] = 1e-3;
  CHECK_FALSE(verify_certificate(t).ok);
  Json u = a;
  u["points"][0]["rank"]["rank"] = 1;
  CHECK_FALSE(certificate_consistency(u).empty());
}

TEST_CASE("construction I certificate") {
  RunConfig c = small_config();
  Json inst = instances()["10_98"];
  Json cert = construction1_certificate("10_98", inst["link"], inst["crossing"], inst["tangle"], c);
  CHECK(certificate_passed(cert));
  CHECK(cert["derived"]["knot"]["components"] == 1);
  CHECK(verify_certificate(cert).ok);
  Json again = RunConfig::from_json(cert["config"]).to_json();
  CHECK(again == cert["config"]);
}

TEST_CASE("json compare tolerances") {
  Json a = {{"x", 1.0}, {"y", {1, 2}}};
  Json b = {{"x", 1.0 + 1e-12}, {"y", {1, 2}}};
  CHECK(compare_json(a, b).empty());
  b["x"] = 1.1;
  CHECK_FALSE(compare_json(a, b).empty());
  b["x"] = 1.0;
  b["y"] = {1};
  CHECK_FALSE(compare_json(a, b).empty());
}

TEST_CASE("trace action report") {
  Json r = trace_action_report(BraidWord::parse("s1 S2 s1 S2 s1", 3));
  CHECK(r["b"] == "b");
  CHECK(r["c"] == "c");
  CHECK(r["P_preserved"].get<bool>());
}
