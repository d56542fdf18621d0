#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rankvar/field.hpp"

namespace rankvar {

inline constexpr unsigned kMaxVars = 12;

struct Monomial {
  std::array<uint16_t, kMaxVars> exp{};
  uint32_t deg = 0;

  static Monomial variable(unsigned i, uint16_t power = 1);
  uint16_t operator[](unsigned i) const { return exp[i]; }
  void set(unsigned i, uint16_t e);
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in reverse: this / other.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exp == other.exp; }
};

struct MonomialOrder {
  enum class Kind { Lex, DegLex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  /// For Block: variables [0, block) form the first (eliminated) block.
  unsigned block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder deglex() { return {Kind::DegLex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder eliminate_first(unsigned k) { return {Kind::Block, k}; }

  /// Negative, zero, positive as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b, unsigned nvars) const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

struct Term {
  Monomial mono;
  FieldElem coeff;
};

/// Sparse multivariate polynomial, terms sorted strictly descending in its order.
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr coeffs, unsigned nvars, MonomialOrder order = MonomialOrder::grevlex());

  static Poly constant(FieldPtr coeffs, unsigned nvars, const FieldElem& c,
                       MonomialOrder order = MonomialOrder::grevlex());
  static Poly variable(FieldPtr coeffs, unsigned nvars, unsigned i,
                       MonomialOrder order = MonomialOrder::grevlex());
  static Poly term(FieldPtr coeffs, unsigned nvars, const Monomial& m, const FieldElem& c,
                   MonomialOrder order = MonomialOrder::grevlex());
  /// Builds from unsorted terms; equal monomials are combined.
  static Poly from_terms(FieldPtr coeffs, unsigned nvars, std::vector<Term> terms,
                         MonomialOrder order = MonomialOrder::grevlex());

  FieldPtr field() const { return field_; }
  unsigned nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const FieldElem& leading_coeff() const { return terms_.front().coeff; }
  uint32_t total_degree() const;
  uint16_t degree_in(unsigned var) const;
  bool involves(unsigned var) const { return degree_in(var) > 0; }
  FieldElem constant_coeff() const;
  FieldElem coeff_of(const Monomial& m) const;

  Poly with_order(MonomialOrder order) const;
  /// Reinterprets in a ring with more variables (new ones appended or shifted by `offset`).
  Poly lift_vars(unsigned new_nvars, unsigned offset, MonomialOrder order) const;
  /// Divides by the leading coefficient.
  Poly monic() const;
  /// Normalizes the leading coefficient under degree-lex, independent of the stored order.
  Poly deglex_monic() const;
  FieldElem deglex_leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const FieldElem& c) const;
  Poly mul_term(const Monomial& m, const FieldElem& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Value at a point; the point's field must contain the coefficient field.
  FieldElem evaluate(const std::vector<FieldElem>& point) const;
  /// Substitutes polynomials (same target ring) for each variable.
  Poly substitute(const std::vector<Poly>& images) const;
  /// Maps coefficients through f (e.g. embedding into a larger field).
  template <typename Fn>
  Poly map_coeffs(FieldPtr target, Fn&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto c = f(t.coeff);
      if (!c.is_zero()) out.push_back({t.mono, c});
    }
    return from_terms(target, nvars_, std::move(out), order_);
  }

  std::string str(const std::vector<std::string>& names) const;
  /// Default names y1..yn.
  std::string str() const;

 private:
  void check_compatible(const Poly& o) const;
  void normalize_sorted();

  FieldPtr field_ = nullptr;
  unsigned nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;
};

/// Quotient if g divides f exactly.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);
/// gcd normalized monic in the degree-lex leading coefficient; gcd(0,g) = normalized g.
Poly poly_gcd(const Poly& f, const Poly& g);
/// Coefficients of f as a polynomial in `var` (index = power); entries free of var.
std::vector<Poly> coefficients_in(const Poly& f, unsigned var);

std::vector<std::string> default_names(const std::string& prefix, unsigned n);

/// Value of a rational function field element: num/den over the base field in
/// the field's variables, gcd 1, den monic under degree-lex, zero is 0/1.
struct RatFuncValue {
  Poly num;
  Poly den;
};

/// Canonical element num/den of the rational function field K.
FieldElem make_ratfunc(FieldPtr K, Poly num, Poly den);
/// Constant polynomial ring element of K's base field as a polynomial in K's variables.
Poly ratfunc_ring_poly(FieldPtr K, const FieldElem& base_constant);

}  // namespace rankvar
