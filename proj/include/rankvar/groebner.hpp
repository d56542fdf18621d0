#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/poly.hpp"

namespace rankvar {

class UnitIdeal : public std::domain_error {
 public:
  UnitIdeal() : std::domain_error("ideal is the unit ideal") {}
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ideal in field[y_1..y_n] given by generators (homogeneous in all uses here).
struct GradedIdeal {
  FieldPtr field = nullptr;
  unsigned nvars = 0;
  std::vector<Poly> gens;

  static GradedIdeal make(FieldPtr field, unsigned nvars, std::vector<Poly> gens);
  std::vector<std::string> strs(const std::vector<std::string>& names) const;
};

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, FieldPtr field, unsigned nvars,
                                 MonomialOrder order = MonomialOrder::grevlex());
GradedIdeal groebner(const GradedIdeal& ideal, MonomialOrder order = MonomialOrder::grevlex());

/// Fully reduced remainder of f by g (g in f's order).
Poly normal_form(const Poly& f, const std::vector<Poly>& g);
/// Every S-polynomial of g reduces to zero modulo g.
bool satisfies_buchberger_criterion(const std::vector<Poly>& g);

bool ideal_contains(const GradedIdeal& ideal, const Poly& f);
bool is_unit(const GradedIdeal& ideal);
bool same_ideal(const GradedIdeal& a, const GradedIdeal& b);

/// Krull dimension of field[y]/I from the leading-term ideal; throws UnitIdeal.
unsigned krull_dimension(const GradedIdeal& ideal);

/// (I : f^infinity).
GradedIdeal saturate(const GradedIdeal& ideal, const Poly& f);
/// (I : f).
GradedIdeal colon(const GradedIdeal& ideal, const Poly& f);
/// f in sqrt(I), tested as 1 in (I, 1 - w f).
bool radical_member(const Poly& f, const GradedIdeal& ideal);

/// q over k(t_1..t_n)[y] intersected with k[y].
GradedIdeal contract_to_base(const GradedIdeal& q);

/// Equal-degree elements a_0..a_n with field[y]/p finite over field[a].
std::vector<Poly> noether_normalization(const GradedIdeal& p);

struct WeakSequenceReport {
  std::vector<bool> localized;    // sat((J_i : b_i), a0) == sat(J_i, a0)
  std::vector<bool> unlocalized;  // (J_i : b_i) == J_i
  bool passed() const;
  bool regular_unlocalized() const;
};

/// J_i = (ideal, b_1..b_{i-1}); b_i must be a nonzerodivisor modulo J_i after inverting a0.
WeakSequenceReport weak_sequence_report(const GradedIdeal& ideal, const std::vector<Poly>& b, const Poly& a0);
bool weak_sequence_check(const GradedIdeal& ideal, const std::vector<Poly>& b, const Poly& a0);

struct GenericPointData {
  GradedIdeal prime;               // over k
  std::vector<Poly> normalization;  // a_0..a_n over k
  FieldPtr extension = nullptr;    // K = k(t_1..t_n)
  std::vector<Poly> b;             // b_i = a_i - a_0 t_i over K
  GradedIdeal q;                   // (p, b) over K
  unsigned q_dimension = 0;
  size_t q_basis_size = 0;
  GradedIdeal contraction;         // q intersected with k[y]
  size_t contraction_basis_size = 0;
  WeakSequenceReport weak;
  bool closed_point = false;
  bool contraction_matches = false;
  bool weak_sequence = false;

  bool passed() const { return closed_point && contraction_matches && weak_sequence; }
};

GenericPointData generic_point(const GradedIdeal& p);

}  // namespace rankvar
