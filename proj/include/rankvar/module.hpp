#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/matrix.hpp"

namespace rankvar {

enum class HopfFlavor { GroupLike, Primitive };

class SpecMismatch : public std::invalid_argument {
 public:
  explicit SpecMismatch(const std::string& what = "modules over different algebras")
      : std::invalid_argument(what) {}
};

/// Raised by validation; i and j are 1-based action indices (i == j for z_i^p != 0).
class InvalidModule : public std::invalid_argument {
 public:
  InvalidModule(const std::string& what, unsigned i, unsigned j)
      : std::invalid_argument(what), i_(i), j_(j) {}
  unsigned i() const { return i_; }
  unsigned j() const { return j_; }

 private:
  unsigned i_, j_;
};

/// Lambda_K(r,p) = K[z_1..z_r]/(z_i^p) with a choice of comultiplication.
struct AlgebraSpec {
  uint32_t p = 2;
  unsigned r = 1;
  FieldPtr field = nullptr;
  HopfFlavor flavor = HopfFlavor::GroupLike;

  static AlgebraSpec make(uint32_t p, unsigned r, FieldPtr field = nullptr,
                          HopfFlavor flavor = HopfFlavor::GroupLike);
  AlgebraSpec with_field(FieldPtr f) const { return {p, r, f, flavor}; }
  AlgebraSpec with_flavor(HopfFlavor h) const { return {p, r, field, h}; }
  /// dim Lambda = p^r
  size_t algebra_dim() const;
  bool operator==(const AlgebraSpec& o) const {
    return p == o.p && r == o.r && field == o.field && flavor == o.flavor;
  }
  std::string describe() const;
};

std::string flavor_name(HopfFlavor h);
HopfFlavor parse_flavor(const std::string& s);

/// A finite-dimensional Lambda-module given by r commuting p-nilpotent matrices.
class LambdaModule {
 public:
  LambdaModule() = default;
  /// Validates commutativity and z_i^p = 0.
  LambdaModule(AlgebraSpec spec, std::vector<Matrix> actions);
  static LambdaModule unchecked(AlgebraSpec spec, size_t dim, std::vector<Matrix> actions);

  const AlgebraSpec& spec() const { return spec_; }
  FieldPtr field() const { return spec_.field; }
  size_t dim() const { return dim_; }
  const Matrix& action(unsigned i) const { return actions_[i]; }
  const std::vector<Matrix>& actions() const { return actions_; }

  /// Same matrices, other comultiplication.
  LambdaModule with_flavor(HopfFlavor h) const;

 private:
  AlgebraSpec spec_;
  size_t dim_ = 0;
  std::vector<Matrix> actions_;
};

void validate_actions(const AlgebraSpec& spec, size_t dim, const std::vector<Matrix>& actions);

/// Index of z^a in the monomial basis of Lambda: sum a_i p^i.
size_t monomial_index(const std::vector<unsigned>& a, uint32_t p);
std::vector<unsigned> monomial_exponents(size_t index, uint32_t p, unsigned r);

LambdaModule free_module(const AlgebraSpec& spec, size_t n);
LambdaModule trivial_module(const AlgebraSpec& spec);
LambdaModule zero_module(const AlgebraSpec& spec);
LambdaModule tensor_product(const LambdaModule& m, const LambdaModule& n);
LambdaModule hom_module(const LambdaModule& m, const LambdaModule& n);
LambdaModule dual(const LambdaModule& m);
LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n);
LambdaModule direct_sum(const std::vector<LambdaModule>& parts);
LambdaModule scalar_extension(const LambdaModule& m, FieldPtr target);

/// Matrix of z^a acting on m.
Matrix monomial_action(const LambdaModule& m, const std::vector<unsigned>& a);

/// Columns z^a g_j for each column g_j of gens, at index j * p^r + monomial_index(a).
Matrix generator_orbits(const LambdaModule& m, const Matrix& gens);

/// ker f as a submodule of M; `inclusion` receives the basis, `coords` the rows giving
/// coordinates of kernel vectors in that basis.
LambdaModule kernel_module(const LambdaModule& m, const Matrix& f, Matrix* inclusion = nullptr,
                           std::vector<size_t>* coords = nullptr);

/// Column basis of rad M = sum z_i M.
Matrix radical_basis(const LambdaModule& m);

struct ProjectiveCover {
  LambdaModule cover;    // Lambda^mu
  Matrix surjection;     // dim M x dim cover
  Matrix generators;     // dim M x mu, minimal generators of M
};
ProjectiveCover projective_cover(const LambdaModule& m);
bool is_projective(const LambdaModule& m);

/// The submodule spanned by the (independent, invariant) columns of basis.
LambdaModule submodule(const LambdaModule& m, const Matrix& basis);

struct Quotient {
  LambdaModule module;
  Matrix projection;   // dim Q x dim M
  Matrix section;      // dim M x dim Q, columns are standard basis vectors
};
/// M / W for W the span of the (invariant) columns of w.
Quotient quotient(const LambdaModule& m, const Matrix& w);

}  // namespace rankvar
