#include "doctest.h"
#include "gk1/suites.hpp"

using namespace gk1;

TEST_CASE("root parsing") {
  CHECK(parse_root("zeta3^1") == std::pair<int, long>{3, 1});
  CHECK(parse_root("zeta6") == std::pair<int, long>{6, 1});
  CHECK(parse_root("zeta12^-5") == std::pair<int, long>{12, -5});
  CHECK_THROWS_AS(parse_root("0.5+0.8i"), UsageError);
}

TEST_CASE("family construction from a run configuration") {
  RunConfig c;
  c.family = "dmx";
  c.m = 2;
  c.d = 1;
  CHECK_THROWS_WITH_AS(build_family(c), "(1+m)d must be even", ParamError);
  c.m = 3;
  FamilySetup s = build_family(c);
  CHECK(s.fam->tag == "dmx");
  CHECK(s.fam->dmx().xi == Cyclo::zeta(CycloContext::get(6), 1));

  RunConfig t;
  t.family = "taft";
  t.n = 3;
  t.v = 1;
  t.xi = "zeta3^2";
  t.field = 6;
  FamilySetup ts = build_family(t);
  CHECK(ts.fam->taft().xi == Cyclo::zeta(CycloContext::get(6), 4));
  t.field = 4;
  CHECK_THROWS_AS(build_family(t), UsageError);
  t.field = 0;
  t.xi = "zeta3^3";
  CHECK_THROWS_AS(build_family(t), ParamError);

  RunConfig bad;
  bad.family = "sl2";
  CHECK_THROWS_AS(build_family(bad), UsageError);
}

TEST_CASE("suite ids") {
  CHECK(suite_ids().size() == 8);
  CHECK(is_suite_id("gram"));
  CHECK_FALSE(is_suite_id("associativity"));
}

TEST_CASE("family independent suites") {
  CHECK(matrix_lemma_suite().passed());
  CHECK(scalar_suite({make_d(3, 1, CycloContext::get(6), 1)}).passed());
}

TEST_CASE("nilpotency") {
  RunConfig c;
  c.family = "dmx";
  c.m = 3;
  c.d = 1;
  CHECK(nilpotency_report(build_family(c), 1).passed());
  c.family = "liu";
  c.n = 2;
  c.omega = 2;
  CHECK(nilpotency_report(build_family(c), 1).passed());
}

TEST_CASE("report document") {
  RunConfig c;
  c.family = "dihedral";
  c.suites = {"gram"};
  c.timing = false;
  FamilySetup s = build_family(c);
  auto reps = run_suite("gram", s, c);
  auto doc = make_document(c, reps);
  CHECK(doc["version"] == kVersion);
  CHECK(doc["suites"].size() == 1);
  CHECK_FALSE(doc["suites"][0].contains("timing"));
  CHECK(doc["suites"][0]["details"]["full_rank"] == true);
  CHECK(doc.contains("timestamp"));
}
