#include "doctest.h"
#include "rankvar/corpus.hpp"
#include "rankvar/homalg.hpp"
#include "rankvar/io.hpp"
#include "rankvar/verify.hpp"

using namespace rankvar;

TEST_CASE("field specs") {
  CHECK(parse_field_spec("2")->describe() == "F_2");
  CHECK(parse_field_spec("9")->size() == 9);
  CHECK(parse_field_spec("GF(9)")->size() == 9);
  CHECK(parse_field_spec("F4")->size() == 4);
  CHECK(parse_field_spec("3^2")->size() == 9);
  const auto rf = parse_field_spec("3(t1,t2)");
  CHECK(rf->kind() == FieldKind::RationalFunctions);
  CHECK(rf->nvars() == 2);
  CHECK_THROWS_AS(parse_field_spec("6"), InputError);
  CHECK_THROWS_AS(parse_field_spec("4^2"), InputError);
  CHECK_THROWS_AS(parse_field_spec("x"), InputError);
  for (FieldPtr f : {Field::prime(5), Field::finite(2, 3), Field::rational_functions(Field::finite(3, 2), 1)})
    CHECK(field_from_json(field_to_json(f))->describe() == f->describe());
}

TEST_CASE("module json round trip") {
  for (uint32_t p : {2u, 3u}) {
    const auto spec = AlgebraSpec::make(p, 2, Field::finite(p, 2), HopfFlavor::Primitive);
    for (const auto& e : module_corpus(spec, 8, 3, 9)) {
      const LambdaModule back = module_from_json(json::parse(module_to_json(e.module).dump()));
      CHECK(back.spec().flavor == HopfFlavor::Primitive);
      CHECK(back.field()->describe() == e.module.field()->describe());
      REQUIRE(back.dim() == e.module.dim());
      for (unsigned i = 0; i < 2; ++i) CHECK(back.action(i).str() == e.module.action(i).str());
    }
  }
}

TEST_CASE("module loader rejects invalid input") {
  const json bad = json::parse(R"({"p":2,"r":2,"dim":2,"actions":[["0","0","1","0"],["0","1","0","0"]]})");
  try {
    module_from_json(bad);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"p":4,"r":1,"dim":1,"actions":[["0"]]})")), InputError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"p":2,"r":1,"dim":2,"actions":[["0"]]})")), InputError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"p":2,"r":1,"dim":1,"actions":[["x+"]]})")), InputError);
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"p":2,"r":1,"dim":1,"actions":[["0"]],"field":{"kind":"prime","p":3}})")),
                  InputError);
  // z^2 != 0
  CHECK_THROWS_AS(module_from_json(json::parse(R"({"p":2,"r":1,"dim":2,"actions":[["1","0","0","0"]]})")), InputError);
  CHECK_THROWS_AS(load_module("/nonexistent/module.json"), InputError);
}

TEST_CASE("ideal text") {
  const auto f3 = Field::prime(3);
  const auto i = parse_ideal_text("# a conic\n%r 3\ny1*y3 - y2^2   # comment\n\n", f3);
  CHECK(i.nvars == 3);
  REQUIRE(i.gens.size() == 1);
  CHECK(same_ideal(i, parse_ideal_text(ideal_to_text(i), f3)));

  const auto j = parse_ideal_text("%field 4\ny1 + x*y2\n", f3);
  CHECK(j.field->size() == 4);
  CHECK(j.nvars == 2);

  CHECK(parse_ideal_text("%r 2\n", f3).gens.empty());
  CHECK_THROWS_AS(parse_ideal_text("y1^2 + y2\n", f3), InputError);
  CHECK_THROWS_AS(parse_ideal_text("%r 2\ny3\n", f3), InputError);
  CHECK_THROWS_AS(parse_ideal_text("%bogus 1\n", f3), InputError);
  try {
    parse_ideal_text("y1\ny1 +* y2\n", f3);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).rfind("line 2", 0) == 0);
  }
}

TEST_CASE("generic point report") {
  const auto f2 = Field::prime(2);
  const auto d = generic_point(parse_ideal_text("%r 3\ny1\n", f2));
  json j = report("generic-point");
  j.update(generic_point_to_json(d));
  CHECK(j["schema"] == "v1");
  CHECK(j["checks"]["closed_point"] == true);
  CHECK(j["checks"]["contraction"] == true);
  CHECK(j["checks"]["weak_sequence"] == true);
  CHECK(j["certificates"]["q_dimension"] == 1);
  CHECK(j["certificates"]["primality"] == "unverified");
  CHECK(j["extension_field"] == "F_2(t1)");
}

TEST_CASE("suites are deterministic and named") {
  SuiteConfig cfg;
  cfg.corpus_size = 10;
  cfg.pair_count = 6;
  for (const char* s : {"dade", "tensor", "equiv", "carlson"}) {
    const auto a = suite_result_to_json(run_suite(s, cfg)), b = suite_result_to_json(run_suite(s, cfg));
    CHECK(a.dump() == b.dump());
    CHECK(a["passed"] == true);
  }
  CHECK_THROWS_AS(run_suite("nope", cfg), UnknownSuite);
  const auto names = suite_names();
  for (const char* s : {"dade", "tensor", "hom", "koszul", "carlson", "equiv", "ext-symmetry", "generic-points",
                        "residue-model", "cosupport"})
    CHECK(std::find(names.begin(), names.end(), s) != names.end());
}
