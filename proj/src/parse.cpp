#include "rankvar/parse.hpp"

#include <cctype>

namespace rankvar {

namespace {

class Parser {
 public:
  Parser(FieldPtr F, const std::vector<std::string>& names, const std::string& text, MonomialOrder order)
      : F_(F), names_(names), s_(text), order_(order) {}

  Poly run() {
    Poly f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly constant(const FieldElem& c) const { return Poly::constant(F_, names_.size(), c, order_); }

  Poly expr() {
    Poly acc(F_, names_.size(), order_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (accept('-')) neg = true;
      else if (!first && !accept('+')) break;
      else if (first) accept('+');
      Poly t = term();
      acc += neg ? -t : t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = power();
    while (true) {
      skip();
      if (accept('*')) {
        acc = acc * power();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        const size_t at = pos_++;
        Poly d = power();
        if (!d.is_constant()) throw ParseError("division by a non-constant polynomial", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc.scaled(d.constant_coeff().inverse());
      } else if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip();
      const size_t at = pos_;
      const uint64_t e = integer();
      if (e > 0xFFFF) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  uint64_t integer() {
    skip();
    const size_t start = pos_;
    uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
      if (v > (uint64_t{1} << 60)) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly f = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const uint64_t v = integer();
      return constant(F_->from_int(static_cast<int64_t>(v % F_->characteristic())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string id = s_.substr(start, pos_ - start);
      for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return Poly::variable(F_, names_.size(), static_cast<unsigned>(i), order_);
      if (auto e = field_atom(id)) return constant(*e);
      throw ParseError("unknown symbol '" + id + "'", start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::optional<FieldElem> field_atom(const std::string& id) const {
    FieldPtr base = F_->kind() == FieldKind::RationalFunctions ? F_->base() : F_;
    if (id == "x" && base->kind() == FieldKind::Extension) return F_->embed(base->generator());
    if (F_->kind() != FieldKind::RationalFunctions || id.empty() || id[0] != 't') return std::nullopt;
    if (id == "t" && F_->nvars() == 1) return F_->variable(0);
    if (id.size() < 2) return std::nullopt;
    unsigned idx = 0;
    for (size_t i = 1; i < id.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
      idx = idx * 10 + static_cast<unsigned>(id[i] - '0');
      if (idx > 64) return std::nullopt;
    }
    if (idx < 1 || idx > F_->nvars()) return std::nullopt;
    return F_->variable(idx - 1);
  }

  FieldPtr F_;
  const std::vector<std::string>& names_;
  const std::string& s_;
  MonomialOrder order_;
  size_t pos_ = 0;
};

}  // namespace

FieldElem parse_elem(FieldPtr F, const std::string& text) {
  static const std::vector<std::string> none;
  Poly f = Parser(F, none, text, MonomialOrder::grevlex()).run();
  return f.constant_coeff();
}

Poly parse_poly(FieldPtr F, const std::vector<std::string>& names, const std::string& text, MonomialOrder order) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many variables");
  return Parser(F, names, text, order).run();
}

}  // namespace rankvar
