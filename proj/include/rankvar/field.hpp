#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankvar {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class FieldMismatch : public std::invalid_argument {
 public:
  explicit FieldMismatch(const std::string& what = "operands belong to different fields")
      : std::invalid_argument(what) {}
};

class IncompatibleFields : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { Prime, Extension, RationalFunctions };

class Field;
class FieldElem;
class Poly;
struct RatFuncValue;

/// Fields are interned: two equal descriptions yield the same pointer, and
/// pointers stay valid for the life of the program.
using FieldPtr = const Field*;

class Field {
 public:
  static FieldPtr prime(uint32_t p);
  /// F_p[x]/(modulus); coefficients low to high, monic, irreducible.
  static FieldPtr extension(uint32_t p, std::vector<uint32_t> modulus);
  /// The standard F_{p^d}: lexicographically first monic irreducible of degree d.
  static FieldPtr extension(uint32_t p, unsigned degree);
  /// Finite field of size p^degree (prime field when degree == 1).
  static FieldPtr finite(uint32_t p, unsigned degree);
  static FieldPtr rational_functions(FieldPtr base, unsigned nvars);

  FieldKind kind() const { return kind_; }
  uint32_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ != FieldKind::RationalFunctions; }
  /// Degree over the prime field (finite fields only).
  unsigned degree() const { return d_; }
  /// Number of elements (finite fields only).
  uint64_t size() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  /// Coefficient field of a rational function field; the prime field for finite fields.
  FieldPtr base() const { return base_; }
  unsigned nvars() const { return nvars_; }
  FieldPtr prime_subfield() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(int64_t n) const;
  /// The class of x in an extension field.
  FieldElem generator() const;
  /// t_{i+1} in a rational function field.
  FieldElem variable(unsigned i) const;
  /// All elements in a fixed order (finite fields only).
  std::vector<FieldElem> elements() const;
  FieldElem element_at(uint64_t index) const;

  /// Coordinates over F_p in the power basis 1, x, ..., x^{d-1}.
  std::vector<uint32_t> coefficients(const FieldElem& a) const;
  FieldElem from_coefficients(const std::vector<uint32_t>& c) const;

  /// True when elements of `sub` can be mapped into this field.
  bool contains(FieldPtr sub) const;
  /// Image of `a` (an element of a subfield) in this field.
  FieldElem embed(const FieldElem& a) const;

  std::string describe() const;
  std::string variable_name(unsigned i) const { return "t" + std::to_string(i + 1); }

  // Finite-field kernels on raw encodings (prime: residue, extension: 0 or 1+log).
  uint32_t raw_add(uint32_t a, uint32_t b) const;
  uint32_t raw_sub(uint32_t a, uint32_t b) const { return raw_add(a, raw_neg(b)); }
  uint32_t raw_neg(uint32_t a) const;
  uint32_t raw_mul(uint32_t a, uint32_t b) const;
  uint32_t raw_inv(uint32_t a) const;
  uint32_t raw_from_int(int64_t n) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build_tables();
  FieldElem embed_finite(const FieldElem& a) const;

  FieldKind kind_ = FieldKind::Prime;
  uint32_t p_ = 0;
  unsigned d_ = 1;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  FieldPtr base_ = nullptr;
  unsigned nvars_ = 0;

  // Extension tables: Zech logarithms relative to a primitive element g.
  uint32_t order_ = 0;                   // q - 1
  std::vector<uint32_t> log_to_vec_;     // g^k as base-p digit index
  std::vector<uint32_t> vec_to_enc_;     // digit index -> encoding
  std::vector<uint32_t> zech_;           // enc(1 + g^k)
  uint32_t neg_one_log_ = 0;
  std::vector<uint32_t> prime_inv_;      // inverses mod p for small p

  // Images of generators of subfields, found by root search.
  mutable std::mutex embed_mu_;
  mutable std::map<FieldPtr, uint32_t> embed_roots_;

  friend class FieldRegistry;
};

/// An element of a field with canonical representation; equality is
/// representation equality.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr f, uint32_t raw) : field_(f), raw_(raw) {}
  FieldElem(FieldPtr f, std::shared_ptr<const RatFuncValue> v) : field_(f), rf_(std::move(v)) {}

  FieldPtr field() const { return field_; }
  uint32_t raw() const { return raw_; }
  const RatFuncValue& ratfunc() const { return *rf_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;
  FieldElem inverse() const;
  FieldElem pow(uint64_t e) const;
  std::string str() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem& operator/=(const FieldElem& b) { return *this = *this / b; }

 private:
  FieldPtr field_ = nullptr;
  uint32_t raw_ = 0;
  std::shared_ptr<const RatFuncValue> rf_;
};

bool is_prime(uint64_t n);

/// Total order on elements of one field (for sorting point sets).
bool elem_less(const FieldElem& a, const FieldElem& b);

}  // namespace rankvar
