#include "doctest.h"
#include "rankvar/corpus.hpp"
#include "rankvar/parse.hpp"
#include "rankvar/pipoint.hpp"

using namespace rankvar;

namespace {

std::vector<std::string> strs(const std::vector<ProjPoint>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(p.str());
  return out;
}

LambdaModule carlson(const AlgebraSpec& spec, const char* zeta) { return carlson_module(parse_class(spec, zeta)); }

}  // namespace

TEST_CASE("pi-point construction") {
  auto s = AlgebraSpec::make(2, 2);
  CHECK_NOTHROW(parse_pi_point(s, "z1"));
  CHECK_THROWS_AS(parse_pi_point(s, "z1*z2"), NotFlat);
  auto a = parse_pi_point(s, "z1 + z1*z2");
  CHECK(a.linear[0].is_one());
  CHECK(a.linear[1].is_zero());
  CHECK_THROWS(parse_pi_point(s, "1 + z1"));
  // z1^2 = 0 in the algebra, so this has no linear part.
  CHECK_THROWS_AS(parse_pi_point(s, "z1*z2 + z2^2"), NotFlat);
}

TEST_CASE("pi-point equivalence") {
  auto s5 = AlgebraSpec::make(5, 2);
  CHECK(equivalent(parse_pi_point(s5, "z1"), parse_pi_point(s5, "2*z1")));
  CHECK_FALSE(equivalent(parse_pi_point(s5, "z1"), parse_pi_point(s5, "z2")));
  CHECK(equivalent(parse_pi_point(s5, "z1"), parse_pi_point(s5, "z1 + z2^2")));
  CHECK_THROWS_AS(equivalent(parse_pi_point(s5, "z1"), parse_pi_point(AlgebraSpec::make(5, 3), "z1")), SpecMismatch);
}

TEST_CASE("restriction examples") {
  auto s1 = AlgebraSpec::make(2, 1);
  auto f2 = Field::prime(2);
  CHECK(restriction(parse_pi_point(s1, "z1"), free_module(s1, 1)) == Matrix::from_ints(f2, 2, 2, {0, 0, 1, 0}));

  auto s = AlgebraSpec::make(3, 2);
  CHECK(restriction(parse_pi_point(s, "z1 + 2*z1*z2 + z2^2"), trivial_module(s)).is_zero());

  auto s2 = AlgebraSpec::make(2, 2);
  CHECK(rank(restriction(parse_pi_point(s2, "z1 + z2"), free_module(s2, 1))) == 2);
  CHECK_THROWS_AS(restriction(parse_pi_point(s2, "z1"), free_module(s, 1)), SpecMismatch);
}

TEST_CASE("jordan types") {
  auto s = AlgebraSpec::make(2, 2);
  for (const char* a : {"z1", "z2", "z1 + z2", "z1 + z1*z2"}) {
    CHECK(jordan_type(parse_pi_point(s, a), free_module(s, 1)).str() == "2,2");
    CHECK(is_projective_at(parse_pi_point(s, a), free_module(s, 1)));
  }
  CHECK(jordan_type(parse_pi_point(s, "z1"), trivial_module(s)).str() == "1");
  CHECK_FALSE(is_projective_at(parse_pi_point(s, "z1"), trivial_module(s)));

  const auto l = carlson(s, "y1");
  const auto jt = jordan_type(parse_pi_point(s, "z2"), l);
  CHECK(std::count(jt.parts.begin(), jt.parts.end(), 1u) > 0);
  CHECK(is_projective_at(parse_pi_point(s, "z1"), l));

  auto s3 = AlgebraSpec::make(3, 2);
  CHECK(jordan_type(parse_pi_point(s3, "z1"), free_module(s3, 1)).str() == "3,3,3");
  CHECK(jordan_type(parse_pi_point(s3, "z1 + z2"), trivial_module(s3)).str() == "1");
  auto om = syzygy(trivial_module(s3), 1);
  CHECK(jordan_type(parse_pi_point(s3, "z1"), om).str() == "3,3,2");
}

TEST_CASE("projective points") {
  CHECK(projective_points(Field::prime(2), 2).size() == 3);
  CHECK(projective_points(Field::prime(3), 3).size() == 13);
  CHECK(projective_points(Field::finite(2, 2), 2).size() == 5);
  auto f3 = Field::prime(3);
  CHECK(ProjPoint::normalized({f3->from_int(0), f3->from_int(2)}).str() == "[0:1]");
  CHECK(ProjPoint::normalized({f3->from_int(2), f3->from_int(1)}).str() == "[1:2]");
  CHECK_THROWS(ProjPoint::normalized({f3->zero(), f3->zero()}));
}

TEST_CASE("support examples") {
  auto s = AlgebraSpec::make(2, 2);
  auto f2 = Field::prime(2);
  CHECK(support_points(trivial_module(s), f2).size() == 3);
  CHECK(support_points(free_module(s, 1), f2).empty());
  CHECK(strs(support_points(carlson(s, "y1"), f2)) == std::vector<std::string>{"[0:1]"});
  CHECK(strs(support_points(carlson(s, "y1 + y2"), f2)) == std::vector<std::string>{"[1:1]"});
  CHECK(support_points(carlson(s, "y1^2 + y1*y2 + y2^2"), f2).empty());
  CHECK(support_points(carlson(s, "y1^2 + y1*y2 + y2^2"), Field::finite(2, 2)).size() == 2);

  auto s3 = AlgebraSpec::make(3, 2);
  CHECK(strs(support_points(carlson(s3, "y2"), Field::prime(3))) == std::vector<std::string>{"[1:0]"});
}

TEST_CASE("cosupport equals support over finite extensions") {
  auto s = AlgebraSpec::make(2, 2);
  auto f4 = Field::finite(2, 2);
  for (const auto& m : {trivial_module(s), free_module(s, 1), carlson(s, "y1"), carlson(s, "y1^2 + y1*y2 + y2^2")})
    CHECK(cosupport_points(m, f4) == support_points(m, f4));
  auto s3 = AlgebraSpec::make(3, 2);
  auto f9 = Field::finite(3, 2);
  for (const auto& e : module_corpus(s3, 12, 4, 9)) CHECK(cosupport_points(e.module, f9) == support_points(e.module, f9));
  CHECK_THROWS(cosupport_points(scalar_extension(trivial_module(s), f4), Field::finite(2, 4)));
}

TEST_CASE("twisted coordinates") {
  auto f4 = Field::finite(2, 2);
  auto x = f4->generator();
  auto pt = ProjPoint::normalized({f4->one(), x});
  CHECK(twisted(pt, 0) == pt);
  CHECK(twisted(pt, 1).coords[1] == x * x);
  CHECK(twisted(twisted(pt, 1), 1) == pt);
}

TEST_CASE("generic charts") {
  auto s2 = AlgebraSpec::make(2, 2);
  CHECK(generic_chart(s2, 1).str() == "z1+t1*z2");
  CHECK(generic_chart(AlgebraSpec::make(2, 1), 1).str() == "z1");
  auto c = generic_chart(AlgebraSpec::make(3, 3), 2);
  CHECK(c.linear[1].is_one());
  CHECK(c.linear[0] == c.spec.field->variable(0));
  CHECK(c.linear[2] == c.spec.field->variable(1));
  CHECK_THROWS(generic_chart(s2, 3));

  CHECK(chart_verdicts(free_module(s2, 1)) == std::vector<bool>{true, true});
  CHECK(chart_verdicts(trivial_module(s2)) == std::vector<bool>{false, false});
  CHECK(chart_verdicts(carlson(s2, "y1")) == std::vector<bool>{true, true});
}

TEST_CASE("dade test examples") {
  auto s = AlgebraSpec::make(2, 2);
  CHECK(dade_test(free_module(s, 1)));
  CHECK_FALSE(dade_test(trivial_module(s)));
  CHECK_FALSE(dade_test(carlson(s, "y1")));
  CHECK(dade_test(tensor_product(free_module(s, 1), carlson(s, "y1"))));
  CHECK_FALSE(dade_test(direct_sum(free_module(s, 1), trivial_module(s))));
  // Support at a single point of degree three: invisible over F_2 and F_4.
  const auto cubic = carlson(s, "y1^3 + y1*y2^2 + y2^3");
  CHECK(support_points(cubic, Field::prime(2)).empty());
  CHECK(support_points(cubic, Field::finite(2, 2)).empty());
  CHECK(support_points(cubic, Field::finite(2, 3)).size() == 3);
  CHECK_FALSE(dade_test(cubic));
  CHECK_FALSE(is_projective(cubic));
}

TEST_CASE("dade test agrees with the projective cover oracle") {
  for (uint32_t p : {2u, 3u})
    for (unsigned r : {2u, 3u}) {
      const auto spec = AlgebraSpec::make(p, r);
      for (const auto& e : module_corpus(spec, 25, 11, 16)) {
        INFO(spec.describe() << " " << e.name);
        CHECK(dade_test(e.module) == is_projective(e.module));
      }
    }
}

TEST_CASE("verdicts ignore higher-order terms and the flavor") {
  const auto spec = AlgebraSpec::make(3, 2);
  auto f3 = Field::prime(3);
  for (const auto& e : module_corpus(spec, 10, 5, 12)) {
    const auto prim = e.module.with_flavor(HopfFlavor::Primitive);
    for (const auto& pt : projective_points(f3, 2)) {
      const auto a = linear_pi_point(spec, pt.coords);
      const auto tail = make_pi_point(spec, a.alpha + parse_poly(f3, pi_variable_names(2), "z1*z2 + 2*z2^2 + z1^2*z2"));
      CHECK(equivalent(a, tail));
      CHECK(is_projective_at(a, e.module) == is_projective_at(tail, e.module));
    }
    CHECK(support_points(e.module, f3) == support_points(prim, f3));
  }
}
