#include "rankvar/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rankvar {

// ---------------------------------------------------------------- monomials

Monomial Monomial::variable(unsigned i, uint16_t power) {
  Monomial m;
  m.exp[i] = power;
  m.deg = power;
  return m;
}

void Monomial::set(unsigned i, uint16_t e) {
  deg = deg - exp[i] + e;
  exp[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    const uint32_t e = uint32_t{exp[i]} + other.exp[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    m.exp[i] = static_cast<uint16_t>(e);
  }
  m.deg = deg + other.deg;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (unsigned i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<uint16_t>(exp[i] - other.exp[i]);
  m.deg = deg - other.deg;
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    m.exp[i] = std::max(exp[i], other.exp[i]);
    m.deg += m.exp[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& other) const {
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (exp[i] && other.exp[i]) return false;
  return true;
}

namespace {

int revlex_tail(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
  for (unsigned i = hi; i-- > lo;)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

int grevlex_range(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
  uint32_t da = 0, db = 0;
  for (unsigned i = lo; i < hi; ++i) {
    da += a.exp[i];
    db += b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, unsigned nvars) const {
  switch (kind) {
    case Kind::Lex:
      for (unsigned i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::DegLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (unsigned i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      return revlex_tail(a, b, 0, nvars);
    case Kind::Block: {
      const int c = grevlex_range(a, b, 0, block);
      if (c) return c;
      return grevlex_range(a, b, block, nvars);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- polys

Poly::Poly(FieldPtr coeffs, unsigned nvars, MonomialOrder order)
    : field_(coeffs), nvars_(nvars), order_(order) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many polynomial variables");
}

Poly Poly::constant(FieldPtr coeffs, unsigned nvars, const FieldElem& c, MonomialOrder order) {
  Poly f(coeffs, nvars, order);
  if (!c.is_zero()) f.terms_.push_back({Monomial{}, c});
  return f;
}

Poly Poly::variable(FieldPtr coeffs, unsigned nvars, unsigned i, MonomialOrder order) {
  if (i >= nvars) throw std::out_of_range("variable index");
  Poly f(coeffs, nvars, order);
  f.terms_.push_back({Monomial::variable(i), coeffs->one()});
  return f;
}

Poly Poly::term(FieldPtr coeffs, unsigned nvars, const Monomial& m, const FieldElem& c,
                MonomialOrder order) {
  Poly f(coeffs, nvars, order);
  if (!c.is_zero()) f.terms_.push_back({m, c});
  return f;
}

Poly Poly::from_terms(FieldPtr coeffs, unsigned nvars, std::vector<Term> terms, MonomialOrder order) {
  Poly f(coeffs, nvars, order);
  f.terms_ = std::move(terms);
  f.normalize_sorted();
  return f;
}

void Poly::normalize_sorted() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order_.compare(a.mono, b.mono, nvars_) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0);
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.deg != terms_.front().mono.deg) return false;
  return true;
}

uint32_t Poly::total_degree() const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

uint16_t Poly::degree_in(unsigned var) const {
  uint16_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp[var]);
  return d;
}

FieldElem Poly::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mono.deg == 0) return terms_.back().coeff;
  return field_->zero();
}

FieldElem Poly::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return field_->zero();
}

Poly Poly::with_order(MonomialOrder order) const {
  Poly f(field_, nvars_, order);
  f.terms_ = terms_;
  f.normalize_sorted();
  return f;
}

Poly Poly::lift_vars(unsigned new_nvars, unsigned offset, MonomialOrder order) const {
  if (offset + nvars_ > new_nvars) throw std::invalid_argument("lift_vars: not enough variables");
  Poly f(field_, new_nvars, order);
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (unsigned i = 0; i < nvars_; ++i) m.exp[offset + i] = t.mono.exp[i];
    m.deg = t.mono.deg;
    f.terms_.push_back({m, t.coeff});
  }
  f.normalize_sorted();
  return f;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

FieldElem Poly::deglex_leading_coeff() const {
  if (is_zero()) return field_->zero();
  const auto deglex = MonomialOrder::deglex();
  const Term* best = &terms_.front();
  for (const auto& t : terms_)
    if (deglex.compare(t.mono, best->mono, nvars_) > 0) best = &t;
  return best->coeff;
}

Poly Poly::deglex_monic() const {
  if (is_zero()) return *this;
  const FieldElem lc = deglex_leading_coeff();
  return lc.is_one() ? *this : scaled(lc.inverse());
}

void Poly::check_compatible(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different coefficient fields");
  if (nvars_ != o.nvars_ || !(order_ == o.order_))
    throw std::invalid_argument("polynomials in different rings or orders");
}

Poly Poly::operator-() const {
  Poly f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const MonomialOrder& order, unsigned nvars) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = order.compare(a[i].mono, b[j].mono, nvars);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      FieldElem s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, false, order_, nvars_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  terms_ = merge_terms(terms_, o.terms_, true, order_, nvars_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly f(a.field_, a.nvars_, a.order_);
  if (a.is_zero() || b.is_zero()) return f;
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coeff);
  f.terms_.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) f.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
  f.normalize_sorted();
  return f;
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly f(field_, nvars_, order_);
  if (c.is_zero()) return f;
  f.terms_.reserve(terms_.size());
  for (const auto& t : terms_) f.terms_.push_back({t.mono, t.coeff * c});
  return f;
}

Poly Poly::mul_term(const Monomial& m, const FieldElem& c) const {
  Poly f(field_, nvars_, order_);
  if (c.is_zero()) return f;
  f.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) f.terms_.push_back({t.mono * m, t.coeff * c});
  return f;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(field_, nvars_, field_->one(), order_);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

FieldElem Poly::evaluate(const std::vector<FieldElem>& point) const {
  if (point.size() < nvars_) throw std::invalid_argument("evaluate: point has too few coordinates");
  FieldPtr target = nvars_ ? point[0].field() : field_;
  std::vector<std::vector<FieldElem>> powers(nvars_);
  FieldElem acc = target->zero();
  for (const auto& t : terms_) {
    FieldElem v = target->embed(t.coeff);
    for (unsigned i = 0; i < nvars_; ++i) {
      const uint16_t e = t.mono.exp[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(target->one());
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    acc += v;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() < nvars_) throw std::invalid_argument("substitute: too few images");
  const Poly& proto = images.empty() ? *this : images[0];
  Poly acc(proto.field_, proto.nvars_, proto.order_);
  std::vector<std::vector<Poly>> powers(nvars_);
  for (const auto& t : terms_) {
    Poly v = constant(proto.field_, proto.nvars_, proto.field_->embed(t.coeff), proto.order_);
    for (unsigned i = 0; i < nvars_; ++i) {
      const uint16_t e = t.mono.exp[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(proto.field_, proto.nvars_, proto.field_->one(), proto.order_));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v = v * pw[e];
    }
    acc += v;
  }
  return acc;
}

namespace {

bool needs_parens(const std::string& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == '/') return true;
  return s.find('/') != std::string::npos;
}

}  // namespace

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.str();
    const bool is_const = t.mono.deg == 0;
    if (!first) os << "+";
    first = false;
    std::string mono;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (!t.mono.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : ("v" + std::to_string(i + 1));
      if (t.mono.exp[i] > 1) mono += "^" + std::to_string(t.mono.exp[i]);
    }
    if (is_const) {
      os << (needs_parens(c) ? "(" + c + ")" : c);
    } else if (t.coeff.is_one()) {
      os << mono;
    } else {
      os << (needs_parens(c) ? "(" + c + ")" : c) << "*" << mono;
    }
  }
  return os.str();
}

std::string Poly::str() const { return str(default_names("y", nvars_)); }

std::vector<std::string> default_names(const std::string& prefix, unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

// ---------------------------------------------------------------- division and gcd

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  Poly q(f.field(), f.nvars(), f.order());
  Poly r = f;
  const Term& lg = g.leading_term();
  const FieldElem inv = lg.coeff.inverse();
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lg.mono.divides(lr.mono)) return std::nullopt;
    const Monomial m = lr.mono / lg.mono;
    const FieldElem c = lr.coeff * inv;
    q += Poly::term(f.field(), f.nvars(), m, c, f.order());
    r -= g.mul_term(m, c);
  }
  return q;
}

std::vector<Poly> coefficients_in(const Poly& f, unsigned var) {
  const uint16_t d = f.degree_in(var);
  std::vector<std::vector<Term>> buckets(f.is_zero() ? 0 : d + 1u);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const uint16_t e = m.exp[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(f.field(), f.nvars(), std::move(b), f.order()));
  return out;
}

namespace {

Poly content_in(const Poly& f, unsigned var) {
  Poly g(f.field(), f.nvars(), f.order());
  for (const auto& c : coefficients_in(f, var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& f, unsigned var) {
  if (f.is_zero()) return f;
  Poly c = content_in(f, var);
  if (c.is_constant()) return f;
  return *divide_exact(f, c);
}

// Pseudo-remainder of a by b as polynomials in var.
Poly pseudo_rem(Poly a, const Poly& b, unsigned var) {
  const uint16_t db = b.degree_in(var);
  const auto bc = coefficients_in(b, var);
  const Poly& lcb = bc[db];
  while (!a.is_zero()) {
    const uint16_t da = a.degree_in(var);
    if (da < db) break;
    const auto ac = coefficients_in(a, var);
    const Poly& lca = ac[da];
    Poly shifted = b * lca;
    shifted = shifted.mul_term(Monomial::variable(var, static_cast<uint16_t>(da - db)), a.field()->one());
    a = a * lcb - shifted;
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.deglex_monic();
  if (g.is_zero()) return f.deglex_monic();
  if (f.is_constant() || g.is_constant())
    return Poly::constant(f.field(), f.nvars(), f.field()->one(), f.order());
  unsigned var = kMaxVars;
  for (unsigned i = 0; i < f.nvars() && var == kMaxVars; ++i)
    if (f.involves(i) || g.involves(i)) var = i;
  if (!f.involves(var)) return poly_gcd(f, content_in(g, var));
  if (!g.involves(var)) return poly_gcd(content_in(f, var), g);

  const Poly cf = content_in(f, var), cg = content_in(g, var);
  const Poly c = poly_gcd(cf, cg);
  Poly a = cf.is_constant() ? f : *divide_exact(f, cf);
  Poly b = cg.is_constant() ? g : *divide_exact(g, cg);
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  Poly pp;
  while (true) {
    Poly r = pseudo_rem(a, b, var);
    if (r.is_zero()) {
      pp = primitive_part(b, var);
      break;
    }
    if (!r.involves(var)) {
      pp = Poly::constant(f.field(), f.nvars(), f.field()->one(), f.order());
      break;
    }
    a = std::move(b);
    b = primitive_part(r, var);
  }
  return (c * pp).deglex_monic();
}

}  // namespace rankvar
