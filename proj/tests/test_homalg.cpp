#include "doctest.h"
#include "rankvar/homalg.hpp"

using namespace rankvar;

TEST_CASE("resolution of the free module stops") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const Resolution res = minimal_resolution(free_module(s, 1), 3);
  CHECK(res.betti(0) == 1);
  for (size_t i = 1; i <= 3; ++i) CHECK(res.betti(i) == 0);
}

TEST_CASE("Betti numbers of k") {
  const Resolution r1 = minimal_resolution(trivial_module(AlgebraSpec::make(2, 1)), 5);
  for (size_t i = 0; i <= 5; ++i) CHECK(r1.betti(i) == 1);
  const Resolution r2 = minimal_resolution(trivial_module(AlgebraSpec::make(2, 2)), 5);
  for (size_t i = 0; i <= 5; ++i) CHECK(r2.betti(i) == i + 1);
  // p odd: b_n = sum over j = n mod 2 of C(r,j) C((n-j)/2 + r-1, r-1); r = 2 gives n+1.
  const Resolution r3 = minimal_resolution(trivial_module(AlgebraSpec::make(3, 2)), 4);
  for (size_t i = 0; i <= 4; ++i) CHECK(r3.betti(i) == i + 1);
}

TEST_CASE("resolutions are complexes and minimal") {
  const AlgebraSpec s = AlgebraSpec::make(3, 2);
  const LambdaModule m = direct_sum(trivial_module(s), syzygy(trivial_module(s), 1));
  const Resolution res = minimal_resolution(m, 4);
  CHECK((res.augmentation() * res.boundaries[1]).is_zero());
  const size_t q = s.algebra_dim();
  for (size_t i = 2; i <= 4; ++i) CHECK((res.boundaries[i - 1] * res.boundaries[i]).is_zero());
  for (size_t i = 1; i <= 4; ++i)
    for (size_t r = 0; r < res.boundaries[i].rows(); r += q)
      for (size_t c = 0; c < res.boundaries[i].cols(); c += q) CHECK(res.boundaries[i](r, c).is_zero());
}

TEST_CASE("syzygy examples") {
  const AlgebraSpec s1 = AlgebraSpec::make(2, 1);
  const LambdaModule o = syzygy(trivial_module(s1), 1);
  CHECK(o.dim() == 1);
  CHECK(o.action(0).is_zero());
  const AlgebraSpec s2 = AlgebraSpec::make(2, 2);
  CHECK(syzygy(trivial_module(s2), 1).dim() == 3);
  CHECK(syzygy(free_module(s2, 1), 1).dim() == 0);
  CHECK(syzygy(trivial_module(s2), -1).dim() == 3);
  CHECK(syzygy(trivial_module(s2), 0).dim() == 1);
}

TEST_CASE("Ext examples") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const LambdaModule k = trivial_module(s), l = free_module(s, 1);
  CHECK(ext_dim(k, k, 0) == 1);
  CHECK(ext_dim(k, k, 1) == 2);
  for (size_t i = 1; i <= 4; ++i) CHECK(ext_dim(l, k, i) == 0);
  CHECK(ext_dim(l, k, 0) == 1);
  const auto dims = ext_dims(k, k, 4);
  for (size_t i = 0; i <= 4; ++i) CHECK(dims[i] == i + 1);
  CHECK(ext_dim(k, l, 2) == 0);
}

TEST_CASE("class maps") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const CohClass y1 = parse_class(s, "y1");
  const ClassMap c = class_to_map(y1);
  CHECK(c.omega.dim() == 3);
  CHECK(rank(c.map) == 1);
  // Omega^1 k sits in Lambda as span of z1, z2, z1z2 (monomial indices 1, 2, 3).
  const Matrix z1 = Matrix::from_ints(s.field, 4, 1, {0, 1, 0, 0});
  const Matrix z2 = Matrix::from_ints(s.field, 4, 1, {0, 0, 1, 0});
  const Matrix a = *solve(c.inclusion, z1), b = *solve(c.inclusion, z2);
  CHECK((c.map * a)(0, 0).is_one());
  CHECK((c.map * b)(0, 0).is_zero());

  const CohClass zero = make_class(s, Poly(s.field, 2), 1);
  CHECK(class_to_map(zero).map.is_zero());
  CHECK_THROWS_AS(parse_class(s, "y1 + y2^2"), NonHomogeneous);
  CHECK_THROWS_AS(carlson_module(zero), ZeroClass);
  CHECK_THROWS_AS(koszul_factor(zero), ZeroClass);
}

TEST_CASE("class maps are module maps") {
  for (auto [p, r] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    const AlgebraSpec s = AlgebraSpec::make(p, r);
    for (const char* text : {"y1", "y2", "y1*y2", "y1^2+y2^2"}) {
      const ClassMap c = class_to_map(parse_class(s, text));
      for (const auto& z : c.omega.actions()) CHECK((c.map * z).is_zero());
      CHECK(rank(c.map) == 1);
    }
  }
}

TEST_CASE("Carlson module examples") {
  CHECK(carlson_module(parse_class(AlgebraSpec::make(2, 1), "y1")).dim() == 0);
  const LambdaModule l = carlson_module(parse_class(AlgebraSpec::make(2, 2), "y1"));
  CHECK(l.dim() == 2);
  CHECK_NOTHROW(validate_actions(l.spec(), l.dim(), l.actions()));
}

TEST_CASE("Koszul factor dimension") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const LambdaModule kk = koszul_factor(parse_class(s, "y1"));
  CHECK(kk.dim() == 2);
  CHECK_NOTHROW(validate_actions(s, kk.dim(), kk.actions()));
  const LambdaModule kq = koszul_factor(parse_class(s, "y1^2+y1*y2+y2^2"));
  CHECK_NOTHROW(validate_actions(s, kq.dim(), kq.actions()));
  CHECK(is_projective(koszul_object(free_module(s, 1), {parse_class(s, "y2")})));
}

TEST_CASE("classes over a rational function field") {
  FieldPtr K = Field::rational_functions(Field::prime(2), 1);
  const AlgebraSpec s = AlgebraSpec::make(2, 2, K);
  const CohClass b = parse_class(s, "y2 + t*y1");
  const LambdaModule kk = koszul_factor(b);
  CHECK(kk.dim() == 2);
  CHECK_NOTHROW(validate_actions(s, kk.dim(), kk.actions()));
}
