#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/module.hpp"
#include "rankvar/poly.hpp"

namespace rankvar {

class NonHomogeneous : public std::invalid_argument {
 public:
  NonHomogeneous() : std::invalid_argument("cohomology class is not homogeneous") {}
};

class ZeroClass : public std::invalid_argument {
 public:
  ZeroClass() : std::invalid_argument("cohomology class is zero") {}
};

/// Minimal projective resolution P_l -> ... -> P_0 -> M.
struct Resolution {
  LambdaModule target;
  size_t length = 0;
  std::vector<ProjectiveCover> covers;  // covers[i] : P_i -> Omega^i M, i = 0..length
  std::vector<LambdaModule> omega;      // Omega^i M, i = 0..length+1
  std::vector<Matrix> inclusions;       // inclusions[i] : Omega^i M -> P_{i-1}, i >= 1 (entry 0 unused)
  std::vector<Matrix> boundaries;       // boundaries[i] : P_i -> P_{i-1}, i >= 1 (entry 0 unused)
  std::vector<std::vector<size_t>> coords;  // rows of P_{i-1} giving coordinates in Omega^i M

  /// Number of free generators of P_i.
  size_t betti(size_t i) const { return covers[i].generators.cols(); }
  const LambdaModule& free(size_t i) const { return covers[i].cover; }
  const Matrix& augmentation() const { return covers[0].surjection; }
};

Resolution minimal_resolution(const LambdaModule& m, size_t length);

/// Omega^i M; for i < 0 the dual of Omega^{-i} of the dual.
LambdaModule syzygy(const LambdaModule& m, int i);

/// dim Ext^i(M, N) from Hom(P_., N).
size_t ext_dim(const LambdaModule& m, const LambdaModule& n, size_t i);
/// dim Ext^i(M, N) for i = 0..max_i from one resolution.
std::vector<size_t> ext_dims(const LambdaModule& m, const LambdaModule& n, size_t max_i);

/// Homogeneous element of k[y_1..y_r] (deg y_i = 1 for p = 2, else 2) with coefficients in the spec's field.
struct CohClass {
  AlgebraSpec spec;
  Poly poly;
  unsigned degree = 0;  // cohomological degree

  bool is_zero() const { return poly.is_zero(); }
  std::string str() const;
};

/// `zero_degree` is the degree recorded for the zero polynomial.
CohClass make_class(const AlgebraSpec& spec, const Poly& poly, unsigned zero_degree = 1);
/// Parses a polynomial in y1..yr with field-element coefficients.
CohClass parse_class(const AlgebraSpec& spec, const std::string& text);
std::vector<std::string> class_variable_names(unsigned r);

/// A class as a module map Omega^d k -> k, together with Omega^d k inside P_{d-1}.
struct ClassMap {
  unsigned degree = 0;
  LambdaModule omega;  // Omega^d k over the spec's field
  Matrix map;          // 1 x dim omega
  LambdaModule cover;  // P_{d-1}
  Matrix inclusion;    // dim P_{d-1} x dim omega
};

ClassMap class_to_map(const CohClass& zeta);
/// Map of the monomial y_{f_1} ... y_{f_m} built as y_{f_1} o Omega(y_{f_2} o ...), factors 0-based,
/// over the prime field.
Matrix monomial_map(uint32_t p, unsigned r, const std::vector<unsigned>& factors);

LambdaModule carlson_module(const CohClass& zeta);
/// k//zeta, the cone of zeta : Omega^d k -> k.
LambdaModule koszul_factor(const CohClass& zeta);
/// M tensored with k//a for each class.
LambdaModule koszul_object(const LambdaModule& m, const std::vector<CohClass>& classes);

/// The cached minimal resolution of k over the prime field, at least `length` long.
std::shared_ptr<const Resolution> trivial_resolution(uint32_t p, unsigned r, size_t length);

}  // namespace rankvar
