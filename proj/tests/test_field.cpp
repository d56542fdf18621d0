#include <random>

#include "doctest.h"
#include "rankvar/parse.hpp"

using namespace rankvar;

TEST_CASE("prime field product reduces mod p") {
  FieldPtr F5 = Field::prime(5);
  CHECK(F5->from_int(3) * F5->from_int(4) == F5->from_int(2));
  CHECK((F5->from_int(3) * F5->from_int(4)).str() == "2");
}

TEST_CASE("common denominator cancels in F_2(t)") {
  FieldPtr K = Field::rational_functions(Field::prime(2), 1);
  const FieldElem t = K->variable(0);
  const FieldElem s = t / (t + K->one()) + K->one() / (t + K->one());
  CHECK(s == K->one());
  CHECK(s.is_one());
}

TEST_CASE("defining relation in F_4") {
  FieldPtr F4 = Field::extension(2, std::vector<uint32_t>{1, 1, 1});
  const FieldElem x = F4->generator();
  CHECK(x * x == x + F4->one());
  CHECK((x * x).str() == "x+1");
}

TEST_CASE("gcd examples") {
  FieldPtr F2 = Field::prime(2), F3 = Field::prime(3);
  const std::vector<std::string> t1{"t"};
  CHECK(poly_gcd(parse_poly(F2, t1, "t^2"), parse_poly(F2, t1, "t^3")) == parse_poly(F2, t1, "t^2"));
  const Poly f = parse_poly(F2, t1, "t^2+t");
  CHECK(poly_gcd(f, Poly(F2, 1)) == f);
  CHECK(poly_gcd(parse_poly(F2, t1, "3*t^2"), Poly(F2, 1)) == parse_poly(F2, t1, "t^2"));
  const std::vector<std::string> t2{"t1", "t2"};
  CHECK(poly_gcd(parse_poly(F3, t2, "t1^2-t2^2"), parse_poly(F3, t2, "t1-t2")) == parse_poly(F3, t2, "t1-t2"));
}

TEST_CASE("gcd of products with a shared multivariate factor") {
  FieldPtr F3 = Field::prime(3);
  const std::vector<std::string> v{"a", "b", "c"};
  const Poly g = parse_poly(F3, v, "a*b + c^2 + 1");
  const Poly u = parse_poly(F3, v, "a - b*c");
  const Poly w = parse_poly(F3, v, "b^2 + a + 2");
  CHECK(poly_gcd(g * u, g * w) == g.deglex_monic());
}

TEST_CASE("division by zero and mismatched fields") {
  FieldPtr F5 = Field::prime(5), F7 = Field::prime(7);
  CHECK_THROWS_AS(F5->one() / F5->zero(), DivisionByZero);
  CHECK_THROWS_AS(F5->one() + F7->one(), FieldMismatch);
  FieldPtr K = Field::rational_functions(F5, 2);
  CHECK_THROWS_AS(K->one() / K->zero(), DivisionByZero);
}

TEST_CASE("extension construction checks") {
  CHECK_THROWS(Field::extension(2, std::vector<uint32_t>{1, 0, 1}));
  CHECK_THROWS(Field::extension(2, 21u));
  CHECK(Field::extension(3, 2u)->size() == 9);
  CHECK(Field::extension(2, 2u) == Field::extension(2, 2u));
}

TEST_CASE("parser syntax") {
  FieldPtr F4 = Field::extension(2, 2u);
  CHECK(parse_elem(F4, "x^2") == parse_elem(F4, "x + 1"));
  FieldPtr K = Field::rational_functions(Field::prime(3), 2);
  const FieldElem a = parse_elem(K, "(t1^2 - t2^2)/(t1 - t2)");
  CHECK(a == parse_elem(K, "t1+t2"));
  CHECK(parse_elem(K, a.str()) == a);
  const FieldElem b = parse_elem(K, "t1/(t2+1)");
  CHECK(parse_elem(K, b.str()) == b);
  CHECK_THROWS_AS(parse_elem(K, "t3"), ParseError);
  CHECK_THROWS_AS(parse_elem(K, "(t1"), ParseError);
  CHECK_THROWS_AS(parse_elem(Field::prime(5), "2/0"), ParseError);
  const Poly f = parse_poly(K, {"y1", "y2"}, "y1^2 + t1*y1*y2");
  CHECK(f.size() == 2);
  CHECK(f.is_homogeneous());
}

namespace {

FieldElem random_elem(FieldPtr F, std::mt19937_64& rng) {
  if (F->is_finite()) return F->element_at(rng() % F->size());
  FieldPtr base = F->base();
  auto rpoly = [&]() {
    Poly f(base, F->nvars(), MonomialOrder::deglex());
    for (int k = 0; k < 3; ++k) {
      Monomial m;
      for (unsigned i = 0; i < F->nvars(); ++i) m.set(i, static_cast<uint16_t>(rng() % 3));
      f += Poly::term(base, F->nvars(), m, base->element_at(rng() % base->size()), MonomialOrder::deglex());
    }
    return f;
  };
  Poly d = rpoly();
  while (d.is_zero()) d = rpoly();
  return make_ratfunc(F, rpoly(), d);
}

}  // namespace

TEST_CASE("field axioms and Frobenius on random triples") {
  std::mt19937_64 rng(7);
  const std::vector<FieldPtr> fields{Field::prime(2), Field::prime(7), Field::extension(2, 3u),
                                     Field::extension(3, 2u),
                                     Field::rational_functions(Field::prime(2), 1),
                                     Field::rational_functions(Field::prime(3), 2)};
  for (FieldPtr F : fields) {
    for (int trial = 0; trial < 20; ++trial) {
      const FieldElem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == F->zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
      if (!b.is_zero() && !c.is_zero()) CHECK(a / b == (a * c) / (b * c));
      CHECK((a + b).pow(F->characteristic()) == a.pow(F->characteristic()) + b.pow(F->characteristic()));
    }
  }
}

TEST_CASE("embedding subfields") {
  FieldPtr F4 = Field::extension(2, 2u), F16 = Field::extension(2, 4u);
  const FieldElem x = F4->generator();
  const FieldElem y = F16->embed(x);
  CHECK(y * y == y + F16->one());
  CHECK_THROWS_AS(Field::extension(2, 3u)->embed(x), IncompatibleFields);
}
