#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/module.hpp"
#include "rankvar/poly.hpp"

namespace rankvar {

class NotFlat : public std::invalid_argument {
 public:
  NotFlat() : std::invalid_argument("pi-point has zero linear part") {}
};

class DadeUndecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat map K[t]/(t^p) -> Lambda_K sending t to alpha(z).
struct PiPoint {
  AlgebraSpec spec;
  Poly alpha;                      // in K[z_1..z_r], no constant term, exponents < p
  std::vector<FieldElem> linear;  // coefficient of z_i in alpha

  std::string str() const;
};

PiPoint make_pi_point(const AlgebraSpec& spec, const Poly& alpha);
/// Parses alpha in z1..zr over the spec's field.
PiPoint parse_pi_point(const AlgebraSpec& spec, const std::string& text);
PiPoint linear_pi_point(const AlgebraSpec& spec, const std::vector<FieldElem>& lambda);
std::vector<std::string> pi_variable_names(unsigned r);

/// Linear parts proportional.
bool equivalent(const PiPoint& a, const PiPoint& b);

/// Matrix of t on alpha^*(M); M is extended to alpha's field when needed.
Matrix restriction(const PiPoint& a, const LambdaModule& m);

/// Block sizes, descending.
struct JordanType {
  std::vector<unsigned> parts;

  std::string str() const;
  bool operator==(const JordanType& o) const { return parts == o.parts; }
};

JordanType jordan_type_of(const Matrix& nilpotent, uint32_t p);
JordanType jordan_type(const PiPoint& a, const LambdaModule& m);
bool is_projective_at(const PiPoint& a, const LambdaModule& m);

/// Homogeneous coordinates, first nonzero entry 1.
struct ProjPoint {
  std::vector<FieldElem> coords;

  static ProjPoint normalized(std::vector<FieldElem> v);
  std::string str() const;
  bool operator==(const ProjPoint& o) const { return coords == o.coords; }
  bool operator<(const ProjPoint& o) const;
};

/// All points of P^{r-1}(F), sorted.
std::vector<ProjPoint> projective_points(FieldPtr f, unsigned r);

/// Coordinates raised to p^twist.
ProjPoint twisted(const ProjPoint& pt, unsigned twist);

/// Points [lambda] of P^{r-1}(F) where M_F is not projective along sum lambda_i z_i.
std::vector<ProjPoint> support_points(const LambdaModule& m, FieldPtr f, unsigned twist = 0);
/// The same test on Hom_k(K, M); needs M over the prime field or over K itself.
std::vector<ProjPoint> cosupport_points(const LambdaModule& m, FieldPtr k_ext, unsigned twist = 0);
bool is_projective_at_cosupport(const LambdaModule& m, const std::vector<FieldElem>& lambda);

/// Chart i (1-based): z_i + sum_{j != i} t_* z_j over K = k(t_1..t_{r-1}).
PiPoint generic_chart(const AlgebraSpec& spec, unsigned i);
/// Projectivity along each generic chart.
std::vector<bool> chart_verdicts(const LambdaModule& m);

/// Projectivity through pi-points: generic charts plus a certified exceptional-locus check.
bool dade_test(const LambdaModule& m);

struct SupportReport {
  FieldPtr field = nullptr;
  std::vector<ProjPoint> support;
  std::vector<ProjPoint> cosupport;
  std::vector<bool> charts;
  unsigned twist = 0;
};

SupportReport support_report(const LambdaModule& m, FieldPtr f, unsigned twist = 0);

}  // namespace rankvar
