#include "doctest.h"
#include "rankvar/module.hpp"

using namespace rankvar;

TEST_CASE("free module examples") {
  const AlgebraSpec s21 = AlgebraSpec::make(2, 1);
  const LambdaModule l = free_module(s21, 1);
  CHECK(l.dim() == 2);
  CHECK(l.action(0) == Matrix::from_ints(s21.field, 2, 2, {0, 0, 1, 0}));

  const AlgebraSpec s22 = AlgebraSpec::make(2, 2);
  const LambdaModule l2 = free_module(s22, 1);
  CHECK(l2.dim() == 4);
  for (unsigned i = 0; i < 2; ++i) CHECK(power(l2.action(i), 2).is_zero());
  CHECK(!(l2.action(0) * l2.action(1)).is_zero());
  CHECK(free_module(s22, 0).dim() == 0);
  CHECK_NOTHROW(LambdaModule(s22, l2.actions()));
}

TEST_CASE("trivial module examples") {
  for (auto [p, r] : {std::pair{2u, 1u}, {3u, 2u}, {2u, 3u}}) {
    const LambdaModule k = trivial_module(AlgebraSpec::make(p, r));
    CHECK(k.dim() == 1);
    for (const auto& z : k.actions()) CHECK(z.is_zero());
  }
}

TEST_CASE("validation reports the offending pair") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  FieldPtr F = s.field;
  const Matrix a = Matrix::from_ints(F, 3, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0});
  const Matrix b = Matrix::from_ints(F, 3, 3, {0, 0, 0, 0, 0, 0, 0, 1, 0});
  try {
    LambdaModule m(s, {a, b});
    FAIL("expected InvalidModule");
  } catch (const InvalidModule& e) {
    CHECK(e.i() == 1);
    CHECK(e.j() == 2);
  }
  const Matrix c = Matrix::from_ints(F, 3, 3, {0, 0, 0, 1, 0, 0, 0, 1, 0});
  try {
    LambdaModule m(s, {Matrix(F, 3, 3), c});
    FAIL("expected InvalidModule");
  } catch (const InvalidModule& e) {
    CHECK(e.i() == 2);
    CHECK(e.j() == 2);
  }
}

TEST_CASE("tensor product examples") {
  for (HopfFlavor h : {HopfFlavor::GroupLike, HopfFlavor::Primitive}) {
    const AlgebraSpec s = AlgebraSpec::make(2, 2, nullptr, h);
    const LambdaModule k = trivial_module(s), l = free_module(s, 1);
    const LambdaModule m = direct_sum(k, l);
    const LambdaModule km = tensor_product(k, m);
    for (unsigned i = 0; i < 2; ++i) CHECK(km.action(i) == m.action(i));
    const LambdaModule lm = tensor_product(l, m);
    CHECK(lm.dim() == 4 * m.dim());
    CHECK(is_projective(lm));
    CHECK_NOTHROW(validate_actions(s, lm.dim(), lm.actions()));

    const AlgebraSpec s1 = AlgebraSpec::make(2, 1, nullptr, h);
    const LambdaModule a = free_module(s1, 1);
    const LambdaModule aa = tensor_product(a, a);
    CHECK(rank(aa.action(0)) == 2);
    CHECK(is_projective(aa));
  }
}

TEST_CASE("hom module examples") {
  for (HopfFlavor h : {HopfFlavor::GroupLike, HopfFlavor::Primitive}) {
    for (uint32_t p : {2u, 3u}) {
      const AlgebraSpec s = AlgebraSpec::make(p, 2, nullptr, h);
      const LambdaModule k = trivial_module(s), l = free_module(s, 1);
      const LambdaModule n = direct_sum(k, l);
      const LambdaModule kn = hom_module(k, n);
      for (unsigned i = 0; i < 2; ++i) CHECK(kn.action(i) == n.action(i));
      const LambdaModule hl = hom_module(n, l);
      CHECK_NOTHROW(validate_actions(s, hl.dim(), hl.actions()));
      CHECK(is_projective(hl));
      CHECK(!is_projective(hom_module(n, n)));
      CHECK(is_projective(dual(l)));
      CHECK(dual(k).dim() == 1);
    }
  }
}

TEST_CASE("direct sum examples") {
  const AlgebraSpec s = AlgebraSpec::make(3, 2);
  const LambdaModule k = trivial_module(s), l = free_module(s, 1);
  const LambdaModule lz = direct_sum(l, zero_module(s));
  for (unsigned i = 0; i < 2; ++i) CHECK(lz.action(i) == l.action(i));
  const LambdaModule kk = direct_sum(k, k);
  CHECK(kk.dim() == 2);
  for (const auto& z : kk.actions()) CHECK(z.is_zero());
  CHECK(direct_sum(k, l).dim() == 10);
  CHECK_THROWS_AS(direct_sum(k, trivial_module(AlgebraSpec::make(2, 2))), SpecMismatch);
}

TEST_CASE("scalar extension examples") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  FieldPtr F4 = Field::extension(2, 2u);
  const LambdaModule k = trivial_module(s);
  const LambdaModule k4 = scalar_extension(k, F4);
  CHECK(k4.dim() == 1);
  CHECK(k4.field() == F4);
  for (const auto& z : k4.actions()) CHECK(z.is_zero());
  CHECK(is_projective(scalar_extension(free_module(s, 2), F4)));
  CHECK_THROWS_AS(scalar_extension(k, Field::prime(3)), IncompatibleFields);
}

TEST_CASE("projectivity and covers") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const LambdaModule k = trivial_module(s), l = free_module(s, 1);
  CHECK(is_projective(l));
  CHECK(!is_projective(k));
  CHECK(!is_projective(direct_sum(k, l)));
  const ProjectiveCover c = projective_cover(direct_sum(k, l));
  CHECK(c.cover.dim() == 8);
  CHECK(rank(c.surjection) == 5);
  for (unsigned i = 0; i < 2; ++i)
    CHECK(c.surjection * c.cover.action(i) == direct_sum(k, l).action(i) * c.surjection);
}

TEST_CASE("submodule and quotient") {
  const AlgebraSpec s = AlgebraSpec::make(2, 2);
  const LambdaModule l = free_module(s, 1);
  const Matrix rad = radical_basis(l);
  CHECK(rad.cols() == 3);
  const LambdaModule r = submodule(l, rad);
  CHECK(r.dim() == 3);
  CHECK_NOTHROW(validate_actions(s, r.dim(), r.actions()));
  const Quotient q = quotient(l, rad);
  CHECK(q.module.dim() == 1);
  for (const auto& z : q.module.actions()) CHECK(z.is_zero());
}
