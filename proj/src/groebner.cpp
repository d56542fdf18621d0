#include "rankvar/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace rankvar {

GradedIdeal GradedIdeal::make(FieldPtr field, unsigned nvars, std::vector<Poly> gens) {
  for (const auto& g : gens)
    if (g.field() != field || g.nvars() != nvars) throw std::invalid_argument("generator not in the ideal's ring");
  return {field, nvars, std::move(gens)};
}

std::vector<std::string> GradedIdeal::strs(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(g.str(names));
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& g) {
  Poly rest = f, out(f.field(), f.nvars(), f.order());
  std::vector<Term> done;
  while (!rest.is_zero()) {
    const Term lt = rest.leading_term();
    const Poly* div = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && h.leading_monomial().divides(lt.mono)) {
        div = &h;
        break;
      }
    if (div) {
      rest -= div->mul_term(lt.mono / div->leading_monomial(), lt.coeff / div->leading_coeff());
    } else {
      done.push_back(lt);
      rest -= Poly::term(f.field(), f.nvars(), lt.mono, lt.coeff, f.order());
    }
  }
  return Poly::from_terms(f.field(), f.nvars(), std::move(done), f.order());
}

namespace {

Poly s_poly(const Poly& a, const Poly& b) {
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  return a.mul_term(l / a.leading_monomial(), a.leading_coeff().inverse()) -
         b.mul_term(l / b.leading_monomial(), b.leading_coeff().inverse());
}

std::vector<Poly> interreduce(std::vector<Poly> g) {
  // Drop elements whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(), [](const Poly& a, const Poly& b) {
    return a.order().compare(a.leading_monomial(), b.leading_monomial(), a.nvars()) < 0;
  });
  std::vector<Poly> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.leading_monomial().divides(p.leading_monomial())) redundant = true;
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(normal_form(minimal[i], others).monic());
  }
  return out;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, FieldPtr field, unsigned nvars, MonomialOrder order) {
  std::vector<Poly> g;
  for (const auto& f : gens) {
    if (f.field() != field || f.nvars() != nvars) throw std::invalid_argument("generator not in the ring");
    Poly h = f.with_order(order);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Poly::constant(field, nvars, field->one(), order)};
    g.push_back(h.monic());
  }
  if (g.empty()) return {};

  struct Pair {
    size_t i, j;
    uint32_t deg;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](size_t k) {
    for (size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, g[i].leading_monomial().lcm(g[k].leading_monomial()).deg});
  };
  for (size_t k = 1; k < g.size(); ++k) add_pairs(k);
  std::set<std::pair<size_t, size_t>> done;
  auto is_done = [&](size_t a, size_t b) { return done.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
    const Pair pr = *it;
    pairs.erase(it);
    done.insert({pr.i, pr.j});
    const Monomial& li = g[pr.i].leading_monomial();
    const Monomial& lj = g[pr.j].leading_monomial();
    if (li.coprime(lj)) continue;
    const Monomial l = li.lcm(lj);
    bool chain = false;
    for (size_t k = 0; k < g.size() && !chain; ++k)
      if (k != pr.i && k != pr.j && g[k].leading_monomial().divides(l) && is_done(pr.i, k) && is_done(pr.j, k))
        chain = true;
    if (chain) continue;
    Poly h = normal_form(s_poly(g[pr.i], g[pr.j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Poly::constant(field, nvars, field->one(), order)};
    g.push_back(h.monic());
    add_pairs(g.size() - 1);
  }
  return interreduce(std::move(g));
}

GradedIdeal groebner(const GradedIdeal& ideal, MonomialOrder order) {
  return {ideal.field, ideal.nvars, groebner_basis(ideal.gens, ideal.field, ideal.nvars, order)};
}

bool satisfies_buchberger_criterion(const std::vector<Poly>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!normal_form(s_poly(g[i], g[j]), g).is_zero()) return false;
  return true;
}

bool ideal_contains(const GradedIdeal& ideal, const Poly& f) {
  const auto g = groebner_basis(ideal.gens, ideal.field, ideal.nvars);
  return normal_form(f.with_order(MonomialOrder::grevlex()), g).is_zero();
}

bool is_unit(const GradedIdeal& ideal) {
  const auto g = groebner_basis(ideal.gens, ideal.field, ideal.nvars);
  return g.size() == 1 && g[0].is_constant();
}

bool same_ideal(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.field != b.field || a.nvars != b.nvars) return false;
  const auto ga = groebner_basis(a.gens, a.field, a.nvars), gb = groebner_basis(b.gens, b.field, b.nvars);
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (ga[i] != gb[i]) return false;
  return true;
}

unsigned krull_dimension(const GradedIdeal& ideal) {
  const auto g = groebner_basis(ideal.gens, ideal.field, ideal.nvars);
  if (g.size() == 1 && g[0].is_constant()) throw UnitIdeal();
  const unsigned n = ideal.nvars;
  std::vector<uint32_t> supports;
  for (const auto& p : g) {
    uint32_t s = 0;
    for (unsigned i = 0; i < n; ++i)
      if (p.leading_monomial().exp[i]) s |= 1u << i;
    supports.push_back(s);
  }
  unsigned best = 0;
  for (uint32_t set = 0; set < (1u << n); ++set) {
    const unsigned size = static_cast<unsigned>(__builtin_popcount(set));
    if (size <= best) continue;
    bool independent = true;
    for (uint32_t s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

namespace {

// Moves f into a ring with `extra` new variables in front.
Poly push_vars(const Poly& f, unsigned extra, MonomialOrder order) {
  return f.lift_vars(f.nvars() + extra, extra, order);
}

// Inverse of push_vars for polynomials free of the first `extra` variables.
Poly pop_vars(const Poly& f, unsigned extra, MonomialOrder order) {
  const unsigned n = f.nvars() - extra;
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (unsigned i = 0; i < n; ++i) m.exp[i] = t.mono.exp[i + extra];
    m.deg = t.mono.deg;
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(f.field(), n, std::move(terms), order);
}

bool free_of_first(const Poly& f, unsigned k) {
  for (unsigned i = 0; i < k; ++i)
    if (f.involves(i)) return false;
  return true;
}

// Elements of the basis of `gens` (in nvars + k variables) free of the first k, moved down.
std::vector<Poly> eliminate_first(const std::vector<Poly>& gens, FieldPtr field, unsigned total, unsigned k) {
  const auto g = groebner_basis(gens, field, total, MonomialOrder::eliminate_first(k));
  std::vector<Poly> out;
  for (const auto& p : g)
    if (free_of_first(p, k)) out.push_back(pop_vars(p, k, MonomialOrder::grevlex()));
  return out;
}

}  // namespace

GradedIdeal saturate(const GradedIdeal& ideal, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("saturation by zero");
  const auto order = MonomialOrder::eliminate_first(1);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) gens.push_back(push_vars(g, 1, order));
  const Poly w = Poly::variable(ideal.field, ideal.nvars + 1, 0, order);
  gens.push_back(Poly::constant(ideal.field, ideal.nvars + 1, ideal.field->one(), order) - w * push_vars(f, 1, order));
  return {ideal.field, ideal.nvars, groebner_basis(eliminate_first(gens, ideal.field, ideal.nvars + 1, 1),
                                                    ideal.field, ideal.nvars)};
}

GradedIdeal colon(const GradedIdeal& ideal, const Poly& f) {
  if (f.is_zero()) return {ideal.field, ideal.nvars, {Poly::constant(ideal.field, ideal.nvars, ideal.field->one())}};
  // I : f = (I intersect (f)) / f, the intersection by eliminating s from (s I, (1 - s) f).
  const auto order = MonomialOrder::eliminate_first(1);
  const unsigned n1 = ideal.nvars + 1;
  const Poly s = Poly::variable(ideal.field, n1, 0, order);
  const Poly one = Poly::constant(ideal.field, n1, ideal.field->one(), order);
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) gens.push_back(s * push_vars(g, 1, order));
  gens.push_back((one - s) * push_vars(f, 1, order));
  std::vector<Poly> out;
  const Poly fg = f.with_order(MonomialOrder::grevlex());
  for (const auto& h : eliminate_first(gens, ideal.field, n1, 1)) {
    auto q = divide_exact(h, fg);
    if (!q) throw std::logic_error("colon: intersection element not divisible by f");
    out.push_back(*q);
  }
  return {ideal.field, ideal.nvars, groebner_basis(out, ideal.field, ideal.nvars)};
}

bool radical_member(const Poly& f, const GradedIdeal& ideal) {
  const auto order = MonomialOrder::grevlex();
  const unsigned n1 = ideal.nvars + 1;
  std::vector<Poly> gens;
  for (const auto& g : ideal.gens) gens.push_back(push_vars(g, 1, order));
  const Poly w = Poly::variable(ideal.field, n1, 0, order);
  gens.push_back(Poly::constant(ideal.field, n1, ideal.field->one(), order) - w * push_vars(f, 1, order));
  const auto g = groebner_basis(gens, ideal.field, n1, order);
  return g.size() == 1 && g[0].is_constant();
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  return *divide_exact(a * b, poly_gcd(a, b));
}

}  // namespace

GradedIdeal contract_to_base(const GradedIdeal& q) {
  FieldPtr K = q.field;
  if (K->kind() != FieldKind::RationalFunctions) return groebner(q);
  FieldPtr k = K->base();
  const unsigned n = K->nvars(), r = q.nvars, total = 1 + n + r;
  if (total > kMaxVars) throw std::invalid_argument("contraction needs too many variables");
  const auto g = groebner_basis(q.gens, K, r);
  if (g.size() == 1 && g[0].is_constant()) return {k, r, {Poly::constant(k, r, k->one())}};

  const auto order = MonomialOrder::eliminate_first(1 + n);
  auto in_big = [&](const Poly& tpoly, const Monomial& ymono) {
    // tpoly lives in k[t] (deglex); place t at 1..n and y at n+1..
    std::vector<Term> terms;
    for (const auto& t : tpoly.terms()) {
      Monomial m;
      for (unsigned i = 0; i < n; ++i) m.exp[1 + i] = t.mono.exp[i];
      for (unsigned i = 0; i < r; ++i) m.exp[1 + n + i] = ymono.exp[i];
      m.deg = t.mono.deg + ymono.deg;
      terms.push_back({m, t.coeff});
    }
    return Poly::from_terms(k, total, std::move(terms), order);
  };

  std::vector<Poly> gens;
  Poly h = Poly::constant(k, n, k->one(), MonomialOrder::deglex());
  for (const auto& p : g) {
    Poly l = Poly::constant(k, n, k->one(), MonomialOrder::deglex());
    for (const auto& t : p.terms()) l = poly_lcm(l, t.coeff.ratfunc().den);
    Poly cleared(k, total, order);
    for (const auto& t : p.terms()) {
      const auto& v = t.coeff.ratfunc();
      const Poly c = v.num * *divide_exact(l, v.den);
      cleared += in_big(c, t.mono);
    }
    gens.push_back(cleared);
    h = h * l;
  }
  const Poly w = Poly::variable(k, total, 0, order);
  gens.push_back(Poly::constant(k, total, k->one(), order) - w * in_big(h, Monomial{}));
  return {k, r, groebner_basis(eliminate_first(gens, k, total, 1 + n), k, r)};
}

std::vector<Poly> noether_normalization(const GradedIdeal& p) {
  const unsigned dim = krull_dimension(p);
  if (dim == 0) throw std::invalid_argument("noether_normalization: quotient has dimension 0");
  FieldPtr k = p.field;
  const unsigned r = p.nvars;

  auto certified = [&](const std::vector<Poly>& a) {
    GradedIdeal ext = p;
    for (const auto& x : a) ext.gens.push_back(x);
    return krull_dimension(ext) == 0;
  };
  auto search = [&](const std::vector<Poly>& cands, size_t budget) -> std::optional<std::vector<Poly>> {
    if (cands.size() < dim) return std::nullopt;
    std::vector<size_t> idx(dim);
    for (unsigned i = 0; i < dim; ++i) idx[i] = i;
    size_t tried = 0;
    while (tried++ < budget) {
      std::vector<Poly> a;
      for (size_t i : idx) a.push_back(cands[i]);
      if (certified(a)) return a;
      int i = static_cast<int>(dim) - 1;
      while (i >= 0 && idx[i] == cands.size() - dim + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (unsigned j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
  };

  std::vector<Poly> vars;
  for (unsigned i = 0; i < r; ++i) vars.push_back(Poly::variable(k, r, i));
  if (auto a = search(vars, 5000)) return *a;

  std::vector<Poly> linear;
  if (k->is_finite()) {
    const uint64_t q = k->size();
    uint64_t total = 1;
    for (unsigned i = 0; i < r && total < 100000; ++i) total *= q;
    for (uint64_t code = 1; code < total && linear.size() < 400; ++code) {
      std::vector<uint64_t> digits(r);
      uint64_t c = code;
      for (unsigned i = 0; i < r; ++i) {
        digits[i] = c % q;
        c /= q;
      }
      unsigned lead = 0;
      while (digits[lead] == 0) ++lead;
      if (digits[lead] != 1) continue;
      Poly f(k, r);
      for (unsigned i = 0; i < r; ++i)
        if (digits[i]) f += Poly::variable(k, r, i).scaled(k->element_at(digits[i]));
      linear.push_back(f);
    }
    if (auto a = search(linear, 20000)) return *a;
  }

  std::vector<Poly> quadratic;
  for (const auto& l : linear.empty() ? vars : linear) quadratic.push_back(l * l);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j) quadratic.push_back(vars[i] * vars[j]);
  if (auto a = search(quadratic, 20000)) return *a;
  throw SearchExhausted("no Noether normalisation found within the search bounds");
}

bool WeakSequenceReport::passed() const {
  return std::all_of(localized.begin(), localized.end(), [](bool b) { return b; });
}

bool WeakSequenceReport::regular_unlocalized() const {
  return std::all_of(unlocalized.begin(), unlocalized.end(), [](bool b) { return b; });
}

WeakSequenceReport weak_sequence_report(const GradedIdeal& ideal, const std::vector<Poly>& b, const Poly& a0) {
  WeakSequenceReport rep;
  GradedIdeal j = ideal;
  for (const auto& bi : b) {
    const GradedIdeal c = colon(j, bi);
    rep.unlocalized.push_back(same_ideal(c, j));
    rep.localized.push_back(same_ideal(saturate(c, a0), saturate(j, a0)));
    j.gens.push_back(bi);
  }
  return rep;
}

bool weak_sequence_check(const GradedIdeal& ideal, const std::vector<Poly>& b, const Poly& a0) {
  return weak_sequence_report(ideal, b, a0).passed();
}

GenericPointData generic_point(const GradedIdeal& p) {
  GenericPointData out;
  out.prime = p;
  out.normalization = noether_normalization(p);
  FieldPtr k = p.field;
  const unsigned r = p.nvars;
  const unsigned n = static_cast<unsigned>(out.normalization.size()) - 1;
  FieldPtr K = n ? Field::rational_functions(k, n) : k;
  out.extension = K;
  auto lift = [&](const Poly& f) { return f.map_coeffs(K, [&](const FieldElem& c) { return K->embed(c); }); };

  GradedIdeal pk{K, r, {}};
  for (const auto& g : p.gens) pk.gens.push_back(lift(g));
  const Poly a0 = lift(out.normalization[0]);
  for (unsigned i = 1; i <= n; ++i)
    out.b.push_back(lift(out.normalization[i]) - a0.scaled(K->variable(i - 1)));
  out.q = pk;
  for (const auto& bi : out.b) out.q.gens.push_back(bi);

  out.q_basis_size = groebner(out.q).gens.size();
  out.q_dimension = is_unit(out.q) ? 0 : krull_dimension(out.q);
  out.closed_point = !is_unit(out.q) && out.q_dimension == 1;

  out.contraction = contract_to_base(out.q);
  out.contraction_basis_size = out.contraction.gens.size();
  bool ok = true;
  for (const auto& c : out.contraction.gens) ok = ok && radical_member(c, p);
  for (const auto& g : p.gens) ok = ok && radical_member(g, out.contraction);
  out.contraction_matches = ok;

  out.weak = weak_sequence_report(pk, out.b, a0);
  out.weak_sequence = out.weak.passed();
  return out;
}

}  // namespace rankvar
