#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rankvar/poly.hpp"

namespace rankvar {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

/// Parses an element of F: integers, `x` for extensions, `t1..tn` (or `t`
/// when n = 1) for rational function fields, with + - * / ^ and parentheses.
FieldElem parse_elem(FieldPtr F, const std::string& text);

/// Parses a polynomial over F in the named variables; field atoms as in
/// parse_elem may appear as coefficients. Division only by field elements.
Poly parse_poly(FieldPtr F, const std::vector<std::string>& names, const std::string& text,
                MonomialOrder order = MonomialOrder::grevlex());

}  // namespace rankvar
