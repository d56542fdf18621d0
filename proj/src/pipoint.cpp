#include "rankvar/pipoint.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "rankvar/groebner.hpp"
#include "rankvar/parse.hpp"

namespace rankvar {

std::vector<std::string> pi_variable_names(unsigned r) { return default_names("z", r); }

std::string PiPoint::str() const { return alpha.str(pi_variable_names(spec.r)); }

PiPoint make_pi_point(const AlgebraSpec& spec, const Poly& alpha) {
  if (alpha.field() != spec.field || alpha.nvars() != spec.r)
    throw SpecMismatch("pi-point polynomial not over the spec's ring");
  if (!alpha.constant_coeff().is_zero()) throw std::invalid_argument("pi-point has a nonzero constant term");
  std::vector<Term> kept;
  for (const auto& t : alpha.terms()) {
    bool vanishes = false;
    for (unsigned i = 0; i < spec.r; ++i)
      if (t.mono[i] >= spec.p) vanishes = true;
    if (!vanishes) kept.push_back(t);
  }
  PiPoint out{spec, Poly::from_terms(spec.field, spec.r, std::move(kept), alpha.order()), {}};
  bool flat = false;
  for (unsigned i = 0; i < spec.r; ++i) {
    out.linear.push_back(out.alpha.coeff_of(Monomial::variable(i)));
    flat = flat || !out.linear.back().is_zero();
  }
  if (!flat) throw NotFlat();
  return out;
}

PiPoint parse_pi_point(const AlgebraSpec& spec, const std::string& text) {
  return make_pi_point(spec, parse_poly(spec.field, pi_variable_names(spec.r), text));
}

PiPoint linear_pi_point(const AlgebraSpec& spec, const std::vector<FieldElem>& lambda) {
  if (lambda.size() != spec.r) throw SpecMismatch("linear part has the wrong length");
  Poly a(spec.field, spec.r);
  for (unsigned i = 0; i < spec.r; ++i)
    if (!lambda[i].is_zero()) a += Poly::term(spec.field, spec.r, Monomial::variable(i), lambda[i]);
  return make_pi_point(spec, a);
}

bool equivalent(const PiPoint& a, const PiPoint& b) {
  if (a.spec.p != b.spec.p || a.spec.r != b.spec.r || a.spec.field != b.spec.field) throw SpecMismatch();
  size_t lead = 0;
  while (a.linear[lead].is_zero()) ++lead;
  if (b.linear[lead].is_zero()) return false;
  const FieldElem c = b.linear[lead] / a.linear[lead];
  for (unsigned i = 0; i < a.spec.r; ++i)
    if (!(a.linear[i] * c == b.linear[i])) return false;
  return true;
}

namespace {

void check_spec(const PiPoint& a, const LambdaModule& m) {
  if (a.spec.p != m.spec().p || a.spec.r != m.spec().r)
    throw SpecMismatch("pi-point and module over different algebras");
}

Matrix evaluate_alpha(const Poly& alpha, const LambdaModule& m) {
  Matrix n(m.field(), m.dim(), m.dim());
  for (const auto& t : alpha.terms()) {
    std::vector<unsigned> e(m.spec().r);
    for (unsigned i = 0; i < m.spec().r; ++i) e[i] = t.mono[i];
    n = n + t.coeff * monomial_action(m, e);
  }
  return n;
}

Matrix linear_combination(const std::vector<Matrix>& zs, const std::vector<FieldElem>& lambda) {
  Matrix n(zs[0].field(), zs[0].rows(), zs[0].cols());
  for (size_t i = 0; i < zs.size(); ++i)
    if (!lambda[i].is_zero()) n = n + lambda[i] * zs[i];
  return n;
}

bool projective_nilpotent(const Matrix& n, uint32_t p) {
  const size_t dim = n.rows();
  if (dim % p != 0) return false;
  if (dim == 0) return true;
  if (n.field()->kind() == FieldKind::RationalFunctions) {
    const size_t target = dim / p * (p - 1);
    return ratfunc_rank(n, target) == target;
  }
  return rank(power(n, p - 1)) == dim / p;
}

}  // namespace

Matrix restriction(const PiPoint& a, const LambdaModule& m) {
  check_spec(a, m);
  FieldPtr fa = a.spec.field, fm = m.field();
  if (fa == fm) return evaluate_alpha(a.alpha, m);
  if (fa->contains(fm)) return evaluate_alpha(a.alpha, scalar_extension(m, fa));
  if (fm->contains(fa))
    return evaluate_alpha(a.alpha.map_coeffs(fm, [&](const FieldElem& c) { return fm->embed(c); }), m);
  throw FieldMismatch("pi-point and module fields are not comparable");
}

std::string JordanType::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

JordanType jordan_type_of(const Matrix& n, uint32_t p) {
  std::vector<size_t> ranks{n.rows()};
  Matrix pw = Matrix::identity(n.field(), n.rows());
  for (uint32_t s = 1; s <= p + 1; ++s) {
    if (ranks.back() == 0) {
      ranks.push_back(0);
      continue;
    }
    pw = pw * n;
    ranks.push_back(rank(pw));
  }
  if (ranks[p] != 0) throw std::invalid_argument("restriction is not p-nilpotent");
  JordanType jt;
  for (uint32_t s = p; s >= 1; --s) {
    const long mult = long(ranks[s - 1]) - 2 * long(ranks[s]) + long(ranks[s + 1]);
    for (long k = 0; k < mult; ++k) jt.parts.push_back(s);
  }
  return jt;
}

JordanType jordan_type(const PiPoint& a, const LambdaModule& m) { return jordan_type_of(restriction(a, m), a.spec.p); }

bool is_projective_at(const PiPoint& a, const LambdaModule& m) {
  check_spec(a, m);
  if (m.dim() % a.spec.p != 0) return false;
  return projective_nilpotent(restriction(a, m), a.spec.p);
}

ProjPoint ProjPoint::normalized(std::vector<FieldElem> v) {
  size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) throw std::invalid_argument("projective point with all coordinates zero");
  const FieldElem inv = v[lead].inverse();
  for (auto& c : v) c = c * inv;
  return {std::move(v)};
}

std::string ProjPoint::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coords.size(); ++i) s += (i ? ":" : "") + coords[i].str();
  return s + "]";
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(), o.coords.end(), elem_less);
}

std::vector<ProjPoint> projective_points(FieldPtr f, unsigned r) {
  const auto elems = f->elements();
  const uint64_t q = elems.size();
  std::vector<ProjPoint> out;
  for (unsigned lead = 0; lead < r; ++lead) {
    const unsigned free = r - 1 - lead;
    uint64_t count = 1;
    for (unsigned i = 0; i < free; ++i) count *= q;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<FieldElem> v(r, f->zero());
      v[lead] = f->one();
      uint64_t c = code;
      for (unsigned i = lead + 1; i < r; ++i) {
        v[i] = elems[c % q];
        c /= q;
      }
      out.push_back({std::move(v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ProjPoint twisted(const ProjPoint& pt, unsigned twist) {
  if (twist == 0) return pt;
  uint64_t e = 1;
  const uint32_t p = pt.coords[0].field()->characteristic();
  for (unsigned i = 0; i < twist; ++i) e *= p;
  std::vector<FieldElem> v;
  for (const auto& c : pt.coords) v.push_back(c.pow(e));
  return ProjPoint::normalized(std::move(v));
}

namespace {

LambdaModule over_field(const LambdaModule& m, FieldPtr f) {
  if (m.field() == f) return m;
  if (!f->contains(m.field())) throw FieldMismatch("enumeration field does not contain the module's field");
  return scalar_extension(m, f);
}

std::vector<ProjPoint> finish(std::vector<ProjPoint> pts, unsigned twist) {
  for (auto& pt : pts) pt = twisted(pt, twist);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Multiplication by c on K in the basis 1, x, ..., x^{d-1}; row j holds c x^j.
Matrix multiplication_matrix(FieldPtr K, FieldPtr k, const FieldElem& c) {
  const unsigned d = K->degree();
  Matrix l(k, d, d);
  FieldElem xj = K->one();
  for (unsigned j = 0; j < d; ++j) {
    const auto coeffs = K->coefficients(c * xj);
    for (unsigned i = 0; i < d; ++i) l(j, i) = k->from_int(coeffs[i]);
    xj = xj * K->generator();
  }
  return l;
}

}  // namespace

std::vector<ProjPoint> support_points(const LambdaModule& m, FieldPtr f, unsigned twist) {
  if (!f->is_finite()) throw std::invalid_argument("support points need a finite field");
  const LambdaModule mf = over_field(m, f);
  const uint32_t p = m.spec().p;
  std::vector<ProjPoint> out;
  for (const auto& pt : projective_points(f, m.spec().r))
    if (!projective_nilpotent(linear_combination(mf.actions(), pt.coords), p)) out.push_back(pt);
  return finish(std::move(out), twist);
}

bool is_projective_at_cosupport(const LambdaModule& m, const std::vector<FieldElem>& lambda) {
  FieldPtr K = lambda.at(0).field(), k = m.field();
  const uint32_t p = m.spec().p;
  if (K == k) return projective_nilpotent(linear_combination(m.actions(), lambda), p);
  if (k->kind() != FieldKind::Prime || K->kind() != FieldKind::Extension || K->characteristic() != p)
    throw FieldMismatch("cosupport needs a module over the prime field and a finite extension of it");
  Matrix t(k, K->degree() * m.dim(), K->degree() * m.dim());
  for (unsigned i = 0; i < m.spec().r; ++i)
    if (!lambda[i].is_zero()) t = t + kron(multiplication_matrix(K, k, lambda[i]), m.action(i));
  return projective_nilpotent(t, p);
}

std::vector<ProjPoint> cosupport_points(const LambdaModule& m, FieldPtr k_ext, unsigned twist) {
  if (!k_ext->is_finite()) throw std::invalid_argument("cosupport points need a finite field");
  std::vector<ProjPoint> out;
  for (const auto& pt : projective_points(k_ext, m.spec().r))
    if (!is_projective_at_cosupport(m, pt.coords)) out.push_back(pt);
  return finish(std::move(out), twist);
}

PiPoint generic_chart(const AlgebraSpec& spec, unsigned i) {
  if (i < 1 || i > spec.r) throw std::out_of_range("chart index out of range");
  FieldPtr K = spec.r == 1 ? spec.field : Field::rational_functions(spec.field, spec.r - 1);
  std::vector<FieldElem> lambda;
  unsigned t = 0;
  for (unsigned j = 1; j <= spec.r; ++j) lambda.push_back(j == i ? K->one() : K->variable(t++));
  return linear_pi_point(spec.with_field(K), lambda);
}

std::vector<bool> chart_verdicts(const LambdaModule& m) {
  std::vector<bool> out;
  for (unsigned i = 1; i <= m.spec().r; ++i) out.push_back(is_projective_at(generic_chart(m.spec(), i), m));
  return out;
}

namespace {

Poly bareiss_det(std::vector<Poly> a, size_t n) {
  FieldPtr f = a[0].field();
  const unsigned nv = a[0].nvars();
  Poly prev = Poly::constant(f, nv, f->one());
  bool negate = false;
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && a[piv * n + k].is_zero()) ++piv;
    if (piv == n) return Poly(f, nv);
    if (piv != k) {
      for (size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Poly num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        a[i * n + j] = std::move(*q);
      }
      a[i * n + k] = Poly(f, nv);
    }
    prev = a[k * n + k];
  }
  return negate ? -a[(n - 1) * n + (n - 1)] : a[(n - 1) * n + (n - 1)];
}

class ExceptionalLocus {
 public:
  ExceptionalLocus(const LambdaModule& m, size_t target) : m_(m), target_(target) {
    FieldPtr k = m.field();
    const unsigned r = m.spec().r;
    forms_.assign(m.dim() * m.dim(), Poly(k, r));
    for (unsigned i = 0; i < r; ++i) {
      const Poly y = Poly::variable(k, r, i);
      for (size_t a = 0; a < m.dim(); ++a)
        for (size_t b = 0; b < m.dim(); ++b)
          if (!m.action(i)(a, b).is_zero()) forms_[a * m.dim() + b] += y.scaled(m.action(i)(a, b));
    }
  }

  // Rank of N(lambda); adds the minor on its pivot rows and columns when the rank is full.
  size_t probe(const std::vector<FieldElem>& lambda) {
    FieldPtr f = lambda[0].field();
    const Matrix n = linear_combination(extended(f), lambda);
    const auto cols = pivot_columns(n);
    if (cols.size() < target_) return cols.size();
    const auto rows = pivot_columns(n.transpose());
    std::vector<size_t> rs(rows.begin(), rows.begin() + target_), cs(cols.begin(), cols.begin() + target_);
    if (!seen_.insert({rs, cs}).second) return cols.size();
    std::vector<Poly> sub;
    for (size_t a : rs)
      for (size_t b : cs) sub.push_back(forms_[a * m_.dim() + b]);
    minors_.push_back(bareiss_det(std::move(sub), target_));
    return cols.size();
  }

  bool finite_locus() const {
    GradedIdeal i{m_.field(), m_.spec().r, minors_};
    return krull_dimension(i) == 0;
  }

  bool minors_vanish(const std::vector<FieldElem>& lambda) const {
    for (const auto& g : minors_)
      if (!g.evaluate(lambda).is_zero()) return false;
    return true;
  }

 private:
  const std::vector<Matrix>& extended(FieldPtr f) {
    for (auto& [field, zs] : cache_)
      if (field == f) return zs;
    cache_.emplace_back(f, over_field(m_, f).actions());
    return cache_.back().second;
  }

  const LambdaModule& m_;
  size_t target_;
  std::vector<Poly> forms_;
  std::vector<Poly> minors_;
  std::set<std::pair<std::vector<size_t>, std::vector<size_t>>> seen_;
  std::vector<std::pair<FieldPtr, std::vector<Matrix>>> cache_;
};

unsigned field_degree(FieldPtr f) { return f->kind() == FieldKind::Extension ? f->degree() : 1; }

}  // namespace

bool dade_test(const LambdaModule& m) {
  if (!m.field()->is_finite()) throw std::invalid_argument("dade_test needs a module over a finite field");
  const uint32_t p = m.spec().p;
  const unsigned r = m.spec().r;
  if (m.dim() % p != 0) return false;
  if (m.dim() == 0) return true;
  for (bool v : chart_verdicts(m))
    if (!v) return false;

  const size_t target = m.dim() / p * (p - 1);
  ExceptionalLocus locus(m, target);
  const unsigned d0 = field_degree(m.field());

  unsigned big = d0;
  while (std::pow(double(p), big) < 4096.0) big += d0;
  FieldPtr e = Field::finite(p, big);
  std::mt19937_64 rng(m.dim() * 1000003u + r);
  for (unsigned trial = 0; trial < r + 2; ++trial) {
    std::vector<FieldElem> lambda;
    for (unsigned i = 0; i < r; ++i) lambda.push_back(e->element_at(rng() % e->size()));
    if (std::all_of(lambda.begin(), lambda.end(), [](const FieldElem& c) { return c.is_zero(); })) continue;
    if (locus.probe(lambda) < target) return false;
  }
  if (locus.finite_locus()) return true;

  constexpr size_t kPointBudget = 30000;
  size_t visited = 0;
  for (unsigned k = d0;; k += d0) {
    if (std::pow(double(p), k) > double(1 << 20)) break;
    FieldPtr f = Field::finite(p, k);
    const auto pts = projective_points(f, r);
    if (visited + pts.size() > kPointBudget) break;
    visited += pts.size();
    for (const auto& pt : pts) {
      if (!locus.minors_vanish(pt.coords)) continue;
      if (locus.probe(pt.coords) < target) return false;
      if (locus.finite_locus()) return true;
    }
  }
  throw DadeUndecided("no certificate for the exceptional locus within the search budget");
}

SupportReport support_report(const LambdaModule& m, FieldPtr f, unsigned twist) {
  SupportReport rep;
  rep.field = f;
  rep.twist = twist;
  rep.support = support_points(m, f, twist);
  rep.charts = chart_verdicts(m);
  return rep;
}

}  // namespace rankvar
