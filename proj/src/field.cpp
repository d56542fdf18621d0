#include "rankvar/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "rankvar/poly.hpp"

namespace rankvar {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr uint64_t kMaxExtensionSize = uint64_t{1} << 20;

using UPoly = std::vector<uint32_t>;  // coefficients low to high over F_p

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

uint32_t inv_mod(uint32_t a, uint32_t p) {
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

// Remainder of f modulo g over F_p; g nonzero.
UPoly upoly_rem(UPoly f, const UPoly& g, uint32_t p) {
  trim(f);
  const size_t dg = g.size() - 1;
  const uint32_t inv_lead = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const uint64_t c = uint64_t{f.back()} * inv_lead % p;
    const size_t shift = f.size() - 1 - dg;
    for (size_t i = 0; i <= dg; ++i) {
      const uint64_t sub = c * g[i] % p;
      f[shift + i] = static_cast<uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

bool upoly_irreducible(const UPoly& f, uint32_t p) {
  const size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (size_t k = 1; k <= d / 2; ++k) {
    uint64_t count = 1;
    for (size_t i = 0; i < k; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      UPoly g(k + 1, 0);
      uint64_t v = idx;
      for (size_t i = 0; i < k; ++i) {
        g[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      g[k] = 1;
      if (upoly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

uint64_t ipow(uint64_t b, unsigned e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

class FieldRegistry {
 public:
  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }

  FieldPtr prime(uint32_t p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = primes_.find(p);
    if (it != primes_.end()) return it->second.get();
    if (!is_prime(p) || p >= (uint32_t{1} << 31))
      throw std::invalid_argument("characteristic must be a prime below 2^31: " + std::to_string(p));
    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Prime;
    f->p_ = p;
    f->d_ = 1;
    f->q_ = p;
    if (p <= kMaxExtensionSize) {
      f->prime_inv_.assign(p, 0);
      for (uint32_t a = 1; a < p; ++a) f->prime_inv_[a] = inv_mod(a, p);
    }
    f->base_ = f.get();
    FieldPtr out = f.get();
    primes_.emplace(p, std::move(f));
    return out;
  }

  FieldPtr extension(uint32_t p, UPoly modulus) {
    FieldPtr fp = prime(p);
    (void)fp;
    for (auto& c : modulus) c %= p;
    trim(modulus);
    if (modulus.size() < 3 || modulus.back() != 1)
      throw std::invalid_argument("extension modulus must be monic of degree >= 2");
    const unsigned d = static_cast<unsigned>(modulus.size() - 1);
    if (ipow(p, d) > kMaxExtensionSize)
      throw std::invalid_argument("extension fields are limited to p^d <= 2^20");
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(p, modulus);
    auto it = exts_.find(key);
    if (it != exts_.end()) return it->second.get();
    if (!upoly_irreducible(modulus, p))
      throw std::invalid_argument("extension modulus is reducible over F_" + std::to_string(p));
    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::Extension;
    f->p_ = p;
    f->d_ = d;
    f->q_ = ipow(p, d);
    f->modulus_ = modulus;
    f->build_tables();
    FieldPtr out = f.get();
    exts_.emplace(std::move(key), std::move(f));
    return out;
  }

  FieldPtr ratfunc(FieldPtr base, unsigned n) {
    if (!base->is_finite())
      throw std::invalid_argument("rational function fields are built over finite fields");
    if (n == 0) return base;
    if (n > kMaxVars) throw std::invalid_argument("too many rational function variables");
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(base, n);
    auto it = ratfuncs_.find(key);
    if (it != ratfuncs_.end()) return it->second.get();
    std::unique_ptr<Field> f(new Field());
    f->kind_ = FieldKind::RationalFunctions;
    f->p_ = base->characteristic();
    f->d_ = 0;
    f->q_ = 0;
    f->base_ = base;
    f->nvars_ = n;
    FieldPtr out = f.get();
    ratfuncs_.emplace(key, std::move(f));
    return out;
  }

  FieldPtr standard_extension(uint32_t p, unsigned d) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = standard_.find({p, d});
      if (it != standard_.end()) return it->second;
    }
    if (ipow(p, d) > kMaxExtensionSize)
      throw std::invalid_argument("extension fields are limited to p^d <= 2^20");
    const uint64_t count = ipow(p, d);
    // Prefer a modulus for which x is primitive; this keeps table construction linear.
    FieldPtr found = nullptr;
    for (int want_primitive = 1; want_primitive >= 0 && !found; --want_primitive) {
      for (uint64_t idx = 1; idx < count && !found; ++idx) {
        UPoly g(d + 1, 0);
        uint64_t v = idx;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = static_cast<uint32_t>(v % p);
          v /= p;
        }
        g[d] = 1;
        if (g[0] == 0 || !upoly_irreducible(g, p)) continue;
        if (want_primitive && !x_is_primitive(g, p)) continue;
        found = extension(p, g);
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    standard_[{p, d}] = found;
    return found;
  }

 private:
  static bool x_is_primitive(const UPoly& f, uint32_t p) {
    const unsigned d = static_cast<unsigned>(f.size() - 1);
    const uint64_t order = ipow(p, d) - 1;
    // x^k for k | order, k < order, must differ from 1.
    std::vector<uint64_t> primes;
    uint64_t m = order;
    for (uint64_t q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) primes.push_back(m);
    for (uint64_t q : primes) {
      uint64_t e = order / q;
      UPoly result{1}, base{0, 1};
      while (e) {
        if (e & 1) result = upoly_rem(mul(result, base, p), f, p);
        base = upoly_rem(mul(base, base, p), f, p);
        e >>= 1;
      }
      if (result.size() == 1 && result[0] == 1) return false;
    }
    return true;
  }

  static UPoly mul(const UPoly& a, const UPoly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    trim(r);
    return r;
  }

  std::mutex mu_;
  std::map<uint32_t, std::unique_ptr<Field>> primes_;
  std::map<std::pair<uint32_t, UPoly>, std::unique_ptr<Field>> exts_;
  std::map<std::pair<FieldPtr, unsigned>, std::unique_ptr<Field>> ratfuncs_;
  std::map<std::pair<uint32_t, unsigned>, FieldPtr> standard_;
};

FieldPtr Field::prime(uint32_t p) { return FieldRegistry::instance().prime(p); }

FieldPtr Field::extension(uint32_t p, std::vector<uint32_t> modulus) {
  return FieldRegistry::instance().extension(p, std::move(modulus));
}

FieldPtr Field::extension(uint32_t p, unsigned degree) {
  if (degree < 2) throw std::invalid_argument("extension degree must be >= 2");
  return FieldRegistry::instance().standard_extension(p, degree);
}

FieldPtr Field::finite(uint32_t p, unsigned degree) {
  return degree <= 1 ? prime(p) : extension(p, degree);
}

FieldPtr Field::rational_functions(FieldPtr base, unsigned nvars) {
  return FieldRegistry::instance().ratfunc(base, nvars);
}

FieldPtr Field::prime_subfield() const { return prime(p_); }

void Field::build_tables() {
  const uint32_t p = p_;
  const uint32_t q = static_cast<uint32_t>(q_);
  order_ = q - 1;
  auto to_digits = [&](uint32_t idx) {
    UPoly c(d_, 0);
    for (unsigned i = 0; i < d_; ++i) {
      c[i] = idx % p;
      idx /= p;
    }
    return c;
  };
  auto to_index = [&](const UPoly& c) {
    uint32_t idx = 0;
    for (unsigned i = d_; i-- > 0;) idx = idx * p + (i < c.size() ? c[i] : 0);
    return idx;
  };
  auto mulmod = [&](const UPoly& a, const UPoly& b) {
    UPoly r(2 * d_, 0);
    for (unsigned i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < d_; ++j)
        r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
    r = upoly_rem(r, modulus_, p);
    r.resize(d_, 0);
    return r;
  };
  // Multiplication by x is a shift followed by one reduction step.
  auto mul_x = [&](const UPoly& a) {
    UPoly r(d_, 0);
    const uint32_t top = a[d_ - 1];
    for (unsigned i = d_ - 1; i > 0; --i) r[i] = a[i - 1];
    r[0] = 0;
    if (top)
      for (unsigned i = 0; i < d_; ++i)
        r[i] = static_cast<uint32_t>((r[i] + uint64_t{p - top} * modulus_[i]) % p);
    return r;
  };

  log_to_vec_.assign(order_, 0);
  std::vector<char> seen;
  for (uint32_t cand = p; cand < q; ++cand) {
    const UPoly g = to_digits(cand);
    const bool is_x = (cand == p);
    UPoly cur(d_, 0);
    cur[0] = 1;
    seen.assign(q, 0);
    bool ok = true;
    for (uint32_t k = 0; k < order_; ++k) {
      const uint32_t idx = to_index(cur);
      if (seen[idx]) {
        ok = false;
        break;
      }
      seen[idx] = 1;
      log_to_vec_[k] = idx;
      cur = is_x ? mul_x(cur) : mulmod(cur, g);
    }
    if (ok) break;
  }
  vec_to_enc_.assign(q, 0);
  for (uint32_t k = 0; k < order_; ++k) vec_to_enc_[log_to_vec_[k]] = k + 1;
  zech_.assign(order_, 0);
  for (uint32_t k = 0; k < order_; ++k) {
    const uint32_t idx = log_to_vec_[k];
    const uint32_t c0 = idx % p;
    const uint32_t shifted = idx - c0 + (c0 + 1) % p;
    zech_[k] = vec_to_enc_[shifted];
  }
  neg_one_log_ = (p == 2) ? 0 : order_ / 2;
}

uint32_t Field::raw_add(uint32_t a, uint32_t b) const {
  if (kind_ == FieldKind::Prime) {
    const uint64_t s = uint64_t{a} + b;
    return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const uint32_t la = a - 1, lb = b - 1;
  const uint32_t diff = lb >= la ? lb - la : lb + order_ - la;
  const uint32_t z = zech_[diff];
  if (z == 0) return 0;
  uint32_t l = la + (z - 1);
  if (l >= order_) l -= order_;
  return l + 1;
}

uint32_t Field::raw_neg(uint32_t a) const {
  if (kind_ == FieldKind::Prime) return a == 0 ? 0 : p_ - a;
  if (a == 0 || p_ == 2) return a;
  uint32_t l = (a - 1) + neg_one_log_;
  if (l >= order_) l -= order_;
  return l + 1;
}

uint32_t Field::raw_mul(uint32_t a, uint32_t b) const {
  if (kind_ == FieldKind::Prime) return static_cast<uint32_t>(uint64_t{a} * b % p_);
  if (a == 0 || b == 0) return 0;
  uint32_t l = (a - 1) + (b - 1);
  if (l >= order_) l -= order_;
  return l + 1;
}

uint32_t Field::raw_inv(uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  if (kind_ == FieldKind::Prime) return prime_inv_.empty() ? inv_mod(a, p_) : prime_inv_[a];
  const uint32_t l = a - 1;
  return (l == 0 ? 0 : order_ - l) + 1;
}

uint32_t Field::raw_from_int(int64_t n) const {
  int64_t m = n % static_cast<int64_t>(p_);
  if (m < 0) m += p_;
  if (kind_ == FieldKind::Prime) return static_cast<uint32_t>(m);
  return vec_to_enc_[static_cast<uint32_t>(m)];
}

FieldElem Field::zero() const {
  if (kind_ == FieldKind::RationalFunctions) {
    auto v = std::make_shared<RatFuncValue>();
    v->num = Poly(base_, nvars_, MonomialOrder::deglex());
    v->den = Poly::constant(base_, nvars_, base_->one(), MonomialOrder::deglex());
    return FieldElem(this, std::shared_ptr<const RatFuncValue>(std::move(v)));
  }
  return FieldElem(this, 0u);
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(int64_t n) const {
  if (kind_ == FieldKind::RationalFunctions) {
    auto v = std::make_shared<RatFuncValue>();
    v->num = Poly::constant(base_, nvars_, base_->from_int(n), MonomialOrder::deglex());
    v->den = Poly::constant(base_, nvars_, base_->one(), MonomialOrder::deglex());
    return FieldElem(this, std::shared_ptr<const RatFuncValue>(std::move(v)));
  }
  return FieldElem(this, raw_from_int(n));
}

FieldElem Field::generator() const {
  if (kind_ != FieldKind::Extension) throw std::logic_error("generator() needs an extension field");
  return FieldElem(this, vec_to_enc_[p_]);
}

FieldElem Field::variable(unsigned i) const {
  if (kind_ != FieldKind::RationalFunctions || i >= nvars_)
    throw std::out_of_range("rational function variable index");
  auto v = std::make_shared<RatFuncValue>();
  v->num = Poly::variable(base_, nvars_, i, MonomialOrder::deglex());
  v->den = Poly::constant(base_, nvars_, base_->one(), MonomialOrder::deglex());
  return FieldElem(this, std::shared_ptr<const RatFuncValue>(std::move(v)));
}

FieldElem Field::element_at(uint64_t index) const {
  if (!is_finite() || index >= q_) throw std::out_of_range("element index");
  if (kind_ == FieldKind::Prime) return FieldElem(this, static_cast<uint32_t>(index));
  return FieldElem(this, vec_to_enc_[static_cast<uint32_t>(index)]);
}

std::vector<FieldElem> Field::elements() const {
  if (!is_finite()) throw std::logic_error("elements() needs a finite field");
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (uint64_t i = 0; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<uint32_t> Field::coefficients(const FieldElem& a) const {
  if (a.field() != this) throw FieldMismatch();
  if (kind_ == FieldKind::Prime) return {a.raw()};
  if (kind_ != FieldKind::Extension) throw std::logic_error("coefficients() needs a finite field");
  uint32_t idx = a.raw() == 0 ? 0 : log_to_vec_[a.raw() - 1];
  std::vector<uint32_t> c(d_, 0);
  for (unsigned i = 0; i < d_; ++i) {
    c[i] = idx % p_;
    idx /= p_;
  }
  return c;
}

FieldElem Field::from_coefficients(const std::vector<uint32_t>& c) const {
  if (kind_ == FieldKind::Prime) return from_int(c.empty() ? 0 : c[0]);
  if (kind_ != FieldKind::Extension) throw std::logic_error("from_coefficients() needs a finite field");
  uint32_t idx = 0;
  for (unsigned i = d_; i-- > 0;) idx = idx * p_ + (i < c.size() ? c[i] % p_ : 0);
  return FieldElem(this, vec_to_enc_[idx]);
}

bool Field::contains(FieldPtr sub) const {
  if (sub == this) return true;
  if (sub->characteristic() != p_) return false;
  if (kind_ == FieldKind::RationalFunctions) {
    if (sub->kind() == FieldKind::RationalFunctions)
      return sub->nvars() <= nvars_ && base_->contains(sub->base());
    return base_->contains(sub);
  }
  if (sub->kind() == FieldKind::RationalFunctions) return false;
  if (sub->kind() == FieldKind::Prime) return true;
  return kind_ == FieldKind::Extension && d_ % sub->degree() == 0;
}

FieldElem Field::embed_finite(const FieldElem& a) const {
  FieldPtr sub = a.field();
  if (sub == this) return a;
  if (sub->kind() == FieldKind::Prime) return from_int(a.raw());
  uint32_t root;
  {
    std::lock_guard<std::mutex> lock(embed_mu_);
    auto it = embed_roots_.find(sub);
    if (it != embed_roots_.end()) {
      root = it->second;
    } else {
      // Search this field for a root of the subfield's modulus.
      const auto& mod = sub->modulus();
      bool found = false;
      root = 0;
      for (uint64_t idx = 0; idx < q_ && !found; ++idx) {
        const uint32_t cand = element_at(idx).raw();
        uint32_t acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = raw_add(raw_mul(acc, cand), raw_from_int(mod[i]));
        if (acc == 0) {
          root = cand;
          found = true;
        }
      }
      if (!found) throw IncompatibleFields("no embedding of " + sub->describe() + " into " + describe());
      embed_roots_[sub] = root;
    }
  }
  const auto c = sub->coefficients(a);
  uint32_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = raw_add(raw_mul(acc, root), raw_from_int(c[i]));
  return FieldElem(this, acc);
}

FieldElem Field::embed(const FieldElem& a) const {
  FieldPtr sub = a.field();
  if (sub == this) return a;
  if (!contains(sub))
    throw IncompatibleFields(sub->describe() + " is not a subfield of " + describe());
  if (kind_ != FieldKind::RationalFunctions) return embed_finite(a);
  if (sub->kind() != FieldKind::RationalFunctions) {
    auto v = std::make_shared<RatFuncValue>();
    v->num = Poly::constant(base_, nvars_, base_->embed(a), MonomialOrder::deglex());
    v->den = Poly::constant(base_, nvars_, base_->one(), MonomialOrder::deglex());
    if (v->num.is_zero()) v->num = Poly(base_, nvars_, MonomialOrder::deglex());
    return FieldElem(this, std::shared_ptr<const RatFuncValue>(std::move(v)));
  }
  auto lift = [&](const Poly& f) {
    return f.lift_vars(nvars_, 0, MonomialOrder::deglex())
        .map_coeffs(base_, [&](const FieldElem& c) { return base_->embed(c); });
  };
  return make_ratfunc(this, lift(a.ratfunc().num), lift(a.ratfunc().den));
}

std::string Field::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case FieldKind::Prime:
      os << "F_" << p_;
      break;
    case FieldKind::Extension: {
      os << "F_" << p_ << "[x]/(";
      Poly m(prime(p_), 1, MonomialOrder::lex());
      std::vector<Term> terms;
      for (size_t i = 0; i < modulus_.size(); ++i)
        if (modulus_[i]) terms.push_back({Monomial::variable(0, static_cast<uint16_t>(i)), prime(p_)->from_int(modulus_[i])});
      os << Poly::from_terms(prime(p_), 1, terms, MonomialOrder::lex()).str({"x"}) << ")";
      break;
    }
    case FieldKind::RationalFunctions:
      os << base_->describe() << "(";
      for (unsigned i = 0; i < nvars_; ++i) os << (i ? "," : "") << variable_name(i);
      os << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------- elements

namespace {

inline void same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field() || a.field() == nullptr) throw FieldMismatch();
}

const RatFuncValue& rv(const FieldElem& a) { return a.ratfunc(); }

}  // namespace

bool FieldElem::is_zero() const {
  if (field_->kind() == FieldKind::RationalFunctions) return rf_->num.is_zero();
  return raw_ == 0;
}

bool FieldElem::is_one() const {
  if (field_->kind() == FieldKind::RationalFunctions)
    return rf_->num == rf_->den;
  return raw_ == 1;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  FieldPtr f = a.field();
  if (f->kind() != FieldKind::RationalFunctions) return FieldElem(f, f->raw_add(a.raw(), b.raw()));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto &x = rv(a), &y = rv(b);
  if (x.den == y.den) return make_ratfunc(f, x.num + y.num, x.den);
  return make_ratfunc(f, x.num * y.den + y.num * x.den, x.den * y.den);
}

FieldElem operator-(const FieldElem& a) {
  FieldPtr f = a.field();
  if (f->kind() != FieldKind::RationalFunctions) return FieldElem(f, f->raw_neg(a.raw()));
  auto v = std::make_shared<RatFuncValue>(RatFuncValue{-rv(a).num, rv(a).den});
  return FieldElem(f, std::shared_ptr<const RatFuncValue>(std::move(v)));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  FieldPtr f = a.field();
  if (f->kind() != FieldKind::RationalFunctions) return FieldElem(f, f->raw_sub(a.raw(), b.raw()));
  return a + (-b);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  FieldPtr f = a.field();
  if (f->kind() != FieldKind::RationalFunctions) return FieldElem(f, f->raw_mul(a.raw(), b.raw()));
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const auto &x = rv(a), &y = rv(b);
  return make_ratfunc(f, x.num * y.num, x.den * y.den);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_->kind() != FieldKind::RationalFunctions) return FieldElem(field_, field_->raw_inv(raw_));
  return make_ratfunc(field_, rf_->den, rf_->num);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  if (b.is_zero()) throw DivisionByZero();
  FieldPtr f = a.field();
  if (f->kind() != FieldKind::RationalFunctions) return FieldElem(f, f->raw_mul(a.raw(), f->raw_inv(b.raw())));
  const auto &x = rv(a), &y = rv(b);
  return make_ratfunc(f, x.num * y.den, x.den * y.num);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) return false;
  if (a.field() == nullptr) return true;
  if (a.field()->kind() != FieldKind::RationalFunctions) return a.raw() == b.raw();
  return rv(a).num == rv(b).num && rv(a).den == rv(b).den;
}

FieldElem FieldElem::pow(uint64_t e) const {
  FieldElem result = field_->one(), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string FieldElem::str() const {
  if (!field_) return "<invalid>";
  switch (field_->kind()) {
    case FieldKind::Prime:
      return std::to_string(raw_);
    case FieldKind::Extension: {
      const auto c = field_->coefficients(*this);
      std::vector<Term> terms;
      FieldPtr fp = field_->prime_subfield();
      for (size_t i = 0; i < c.size(); ++i)
        if (c[i]) terms.push_back({Monomial::variable(0, static_cast<uint16_t>(i)), fp->from_int(c[i])});
      return Poly::from_terms(fp, 1, terms, MonomialOrder::lex()).str({"x"});
    }
    case FieldKind::RationalFunctions: {
      std::vector<std::string> names;
      for (unsigned i = 0; i < field_->nvars(); ++i) names.push_back(field_->variable_name(i));
      const std::string num = rf_->num.str(names);
      if (rf_->den.is_constant()) return num;
      return "(" + num + ")/(" + rf_->den.str(names) + ")";
    }
  }
  return {};
}

bool elem_less(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  switch (a.field()->kind()) {
    case FieldKind::Prime:
      return a.raw() < b.raw();
    case FieldKind::Extension: {
      auto ca = a.field()->coefficients(a), cb = b.field()->coefficients(b);
      return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
    }
    case FieldKind::RationalFunctions:
      return a.str() < b.str();
  }
  return false;
}

FieldElem make_ratfunc(FieldPtr K, Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  FieldPtr base = K->base();
  const auto order = MonomialOrder::deglex();
  if (!(num.order() == order)) num = num.with_order(order);
  if (!(den.order() == order)) den = den.with_order(order);
  auto v = std::make_shared<RatFuncValue>();
  if (num.is_zero()) {
    v->num = Poly(base, K->nvars(), order);
    v->den = Poly::constant(base, K->nvars(), base->one(), order);
    return FieldElem(K, std::shared_ptr<const RatFuncValue>(std::move(v)));
  }
  if (!den.is_constant()) {
    Poly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  const FieldElem lc_inv = den.leading_coeff().inverse();
  v->num = num.scaled(lc_inv);
  v->den = den.scaled(lc_inv);
  return FieldElem(K, std::shared_ptr<const RatFuncValue>(std::move(v)));
}

Poly ratfunc_ring_poly(FieldPtr K, const FieldElem& c) {
  return Poly::constant(K->base(), K->nvars(), c, MonomialOrder::deglex());
}

}  // namespace rankvar
