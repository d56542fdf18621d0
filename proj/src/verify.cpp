#include "rankvar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "rankvar/corpus.hpp"
#include "rankvar/homalg.hpp"
#include "rankvar/parse.hpp"

namespace rankvar {

namespace {

constexpr size_t kMaxDumps = 5;

using Points = std::vector<ProjPoint>;

Points intersect(const Points& a, const Points& b) {
  Points out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void record(SuiteResult& res, bool ok, const std::function<json()>& dump) {
  ++res.cases;
  if (ok) return;
  ++res.failed;
  if (res.failures.size() < kMaxDumps) res.failures.push_back(dump());
}

std::vector<FieldPtr> enumeration_fields(const SuiteConfig& cfg, uint32_t p) {
  std::vector<FieldPtr> out;
  for (unsigned d : cfg.field_degrees) out.push_back(Field::finite(p, d));
  return out;
}

std::vector<AlgebraSpec> specs(const SuiteConfig& cfg) {
  std::vector<AlgebraSpec> out;
  for (uint32_t p : cfg.primes)
    for (unsigned r : cfg.ranks) out.push_back(AlgebraSpec::make(p, r, nullptr, cfg.flavor));
  return out;
}

Points zero_set(const CohClass& zeta, FieldPtr f) {
  Points out;
  for (const auto& pt : projective_points(f, zeta.spec.r))
    if (zeta.poly.evaluate(pt.coords).is_zero()) out.push_back(pt);
  return out;
}

json module_dump(const std::string& name, const LambdaModule& m) { return {{"name", name}, {"module", module_to_json(m)}}; }

std::vector<std::pair<size_t, size_t>> sample_pairs(const std::vector<CorpusModule>& c, size_t count, Rng& rng,
                                                    size_t max_product) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t tries = 0; out.size() < count && tries < 100 * count; ++tries) {
    const size_t a = rng() % c.size(), b = rng() % c.size();
    if (c[a].module.dim() * c[b].module.dim() <= max_product) out.push_back({a, b});
  }
  return out;
}

// ---------------------------------------------------------------- suites

void suite_dade(const SuiteConfig& cfg, SuiteResult& res) {
  size_t projective = 0, proper = 0;
  for (const auto& spec : specs(cfg)) {
    for (const auto& e : module_corpus(spec, cfg.corpus_size, cfg.seed)) {
      const bool oracle = is_projective(e.module);
      const bool dade = dade_test(e.module);
      const auto charts = chart_verdicts(e.module);
      bool pointwise = std::all_of(charts.begin(), charts.end(), [](bool b) { return b; });
      for (FieldPtr f : enumeration_fields(cfg, spec.p)) pointwise = pointwise && support_points(e.module, f).empty();
      projective += oracle;
      proper += !oracle && charts[0];
      record(res, dade == oracle && pointwise == oracle, [&] {
        return json{{"case", module_dump(e.name, e.module)}, {"oracle", oracle}, {"dade", dade}, {"pointwise", pointwise}};
      });
    }
  }
  res.stats = {{"projective", projective}, {"proper_support", proper}};
}

void suite_tensor(const SuiteConfig& cfg, SuiteResult& res) {
  for (const auto& spec : specs(cfg)) {
    const auto corpus = module_corpus(spec, cfg.corpus_size, cfg.seed);
    Rng rng(cfg.seed + 17 * spec.p + spec.r);
    for (auto [a, b] : sample_pairs(corpus, cfg.pair_count, rng, 64)) {
      for (FieldPtr f : enumeration_fields(cfg, spec.p)) {
        const auto sm = support_points(corpus[a].module, f, cfg.twist);
        const auto sn = support_points(corpus[b].module, f, cfg.twist);
        const auto expected = intersect(sm, sn);
        for (HopfFlavor h : {HopfFlavor::GroupLike, HopfFlavor::Primitive}) {
          const auto t = tensor_product(corpus[a].module.with_flavor(h), corpus[b].module.with_flavor(h));
          const auto got = support_points(t, f, cfg.twist);
          record(res, got == expected, [&] {
            return json{{"m", module_dump(corpus[a].name, corpus[a].module)},
                        {"n", module_dump(corpus[b].name, corpus[b].module)},
                        {"field", f->describe()},
                        {"flavor", flavor_name(h)},
                        {"expected", points_to_json(expected)},
                        {"got", points_to_json(got)}};
          });
        }
      }
    }
  }
}

void suite_hom(const SuiteConfig& cfg, SuiteResult& res) {
  for (const auto& spec : specs(cfg)) {
    const auto corpus = module_corpus(spec, cfg.corpus_size, cfg.seed);
    Rng rng(cfg.seed + 17 * spec.p + spec.r);
    const FieldPtr fp = Field::prime(spec.p);
    for (auto [a, b] : sample_pairs(corpus, cfg.pair_count, rng, 64)) {
      const auto expected = intersect(support_points(corpus[a].module, fp, cfg.twist),
                                      support_points(corpus[b].module, fp, cfg.twist));
      const auto got = support_points(hom_module(corpus[a].module, corpus[b].module), fp, cfg.twist);
      record(res, got == expected, [&] {
        return json{{"m", module_dump(corpus[a].name, corpus[a].module)},
                    {"n", module_dump(corpus[b].name, corpus[b].module)},
                    {"expected", points_to_json(expected)},
                    {"got", points_to_json(got)}};
      });
    }
  }
}

void suite_cosupport(const SuiteConfig& cfg, SuiteResult& res) {
  for (const auto& spec : specs(cfg)) {
    const FieldPtr f = Field::finite(spec.p, 2);
    for (const auto& e : module_corpus(spec, cfg.corpus_size, cfg.seed)) {
      const auto sup = support_points(e.module, f, cfg.twist);
      const auto co = cosupport_points(e.module, f, cfg.twist);
      record(res, sup == co, [&] {
        return json{{"case", module_dump(e.name, e.module)}, {"support", points_to_json(sup)}, {"cosupport", points_to_json(co)}};
      });
    }
  }
}

// Koszul objects of quadratic classes are only built where P_{d-1} stays small.
bool koszul_fits(const AlgebraSpec& spec, unsigned poly_degree, size_t module_dim) {
  const unsigned d = poly_degree * (spec.p == 2 ? 1 : 2);
  const auto res = trivial_resolution(spec.p, spec.r, d);
  const size_t factor = res->free(d - 1).dim() + 1 - res->omega[d].dim();
  return factor * module_dim <= 160;
}

void suite_koszul(const SuiteConfig& cfg, SuiteResult& res) {
  size_t quadratic = 0;
  for (const auto& spec : specs(cfg)) {
    const FieldPtr fp = Field::prime(spec.p);
    const auto corpus = module_corpus(spec, cfg.corpus_size, cfg.seed, 8);
    Rng rng(cfg.seed + 29 * spec.p + spec.r);
    const size_t want = std::max<size_t>(cfg.pair_count / 2 + 1, 1);
    size_t done = 0;
    for (size_t k = 0; done < want && k < 20 * want; ++k) {
      const auto& e = corpus[rng() % corpus.size()];
      unsigned deg = 1 + static_cast<unsigned>(k % 2);
      if (!koszul_fits(spec, deg, e.module.dim())) deg = 1;
      if (!koszul_fits(spec, deg, e.module.dim())) continue;
      const CohClass zeta = random_class(spec, rng, deg);
      const auto expected = intersect(support_points(e.module, fp), zero_set(zeta, fp));
      const auto got = support_points(koszul_object(e.module, {zeta}), fp);
      quadratic += deg == 2;
      ++done;
      record(res, got == expected, [&] {
        return json{{"case", module_dump(e.name, e.module)},
                    {"zeta", zeta.str()},
                    {"expected", points_to_json(expected)},
                    {"got", points_to_json(got)}};
      });
    }
  }
  res.stats = {{"quadratic", quadratic}, {"linear", res.cases - quadratic}};
}

void suite_carlson(const SuiteConfig& cfg, SuiteResult& res) {
  for (const auto& spec : specs(cfg)) {
    const FieldPtr fp = Field::prime(spec.p);
    const auto all = support_points(trivial_module(spec), fp);
    for (const auto& coeffs : projective_points(fp, spec.r)) {
      Poly g(fp, spec.r);
      for (unsigned i = 0; i < spec.r; ++i) g += Poly::variable(fp, spec.r, i).scaled(coeffs.coords[i]);
      const CohClass zeta = make_class(spec, g);
      const auto expected = intersect(zero_set(zeta, fp), all);
      const auto got = support_points(carlson_module(zeta), fp);
      record(res, got == expected, [&] {
        return json{{"spec", spec.describe()}, {"zeta", zeta.str()}, {"expected", points_to_json(expected)}, {"got", points_to_json(got)}};
      });
    }
  }
}

Poly random_tail(const AlgebraSpec& spec, FieldPtr f, Rng& rng) {
  Poly t(f, spec.r);
  const size_t q = spec.algebra_dim();
  for (size_t idx = 0; idx < q; ++idx) {
    const auto e = monomial_exponents(idx, spec.p, spec.r);
    unsigned deg = 0;
    Monomial m;
    for (unsigned i = 0; i < spec.r; ++i) {
      deg += e[i];
      m.set(i, static_cast<uint16_t>(e[i]));
    }
    if (deg >= 2 && rng() % 2) t += Poly::term(f, spec.r, m, f->element_at(rng() % f->size()));
  }
  return t;
}

void suite_equiv(const SuiteConfig& cfg, SuiteResult& res) {
  for (const auto& spec : specs(cfg)) {
    Rng rng(cfg.seed + 41 * spec.p + spec.r);
    for (FieldPtr f : enumeration_fields(cfg, spec.p)) {
      const AlgebraSpec sf = spec.with_field(f);
      const auto points = projective_points(f, spec.r);
      for (const auto& e : module_corpus(spec, cfg.corpus_size, cfg.seed)) {
        const LambdaModule mf = scalar_extension(e.module, f);
        for (size_t k = 0; k < 3; ++k) {
          const auto& pt = points[rng() % points.size()];
          const PiPoint a = linear_pi_point(sf, pt.coords);
          const FieldElem c = f->element_at(1 + rng() % (f->size() - 1));
          const PiPoint b = make_pi_point(sf, a.alpha.scaled(c) + random_tail(spec, f, rng));
          const bool va = is_projective_at(a, mf), vb = is_projective_at(b, mf);
          record(res, equivalent(a, b) && va == vb, [&] {
            return json{{"case", module_dump(e.name, e.module)}, {"alpha", a.str()}, {"beta", b.str()}, {"alpha_projective", va}, {"beta_projective", vb}};
          });
        }
      }
    }
  }
}

void suite_ext_symmetry(const SuiteConfig& cfg, SuiteResult& res) {
  size_t disjoint_count = 0;
  for (const auto& spec : specs(cfg)) {
    const auto corpus = module_corpus(spec, cfg.corpus_size, cfg.seed, 6);
    Rng rng(cfg.seed + 53 * spec.p + spec.r);
    for (size_t k = 0; k < cfg.pair_count; ++k) {
      LambdaModule m, n;
      std::string mn, nn;
      if (k % 2 == 0) {
        const auto& a = corpus[rng() % corpus.size()];
        const auto& b = corpus[rng() % corpus.size()];
        m = a.module, n = b.module, mn = a.name, nn = b.name;
      } else {
        const CohClass z1 = random_class(spec, rng, 1), z2 = random_class(spec, rng, 1);
        m = carlson_module(z1), n = carlson_module(z2);
        mn = "carlson " + z1.str(), nn = "carlson " + z2.str();
      }
      const auto ext = ext_dims(m, n, cfg.ext_bound);
      bool some_zero = false, all_zero = true;
      for (unsigned i = 1; i <= cfg.ext_bound; ++i) {
        some_zero = some_zero || ext[i] == 0;
        all_zero = all_zero && ext[i] == 0;
      }
      const LambdaModule t = tensor_product(m, n);
      const auto charts = chart_verdicts(t);
      bool disjoint = std::all_of(charts.begin(), charts.end(), [](bool b) { return b; });
      for (FieldPtr f : enumeration_fields(cfg, spec.p))
        disjoint = disjoint && intersect(support_points(m, f), support_points(n, f)).empty();
      disjoint_count += disjoint;
      record(res, some_zero == disjoint && (!disjoint || all_zero), [&] {
        return json{{"m", module_dump(mn, m)}, {"n", module_dump(nn, n)}, {"ext", ext}, {"disjoint", disjoint}};
      });
    }
  }
  res.stats = {{"disjoint", disjoint_count}, {"bound", cfg.ext_bound}};
}

void suite_generic_points(const SuiteConfig& cfg, SuiteResult& res) {
  for (uint32_t p : cfg.primes) {
    for (const auto& prime : bundled_primes(Field::prime(p))) {
      const auto d = generic_point(prime);
      record(res, d.passed(), [&] { return generic_point_to_json(d); });
    }
  }
}

FieldElem random_ratfunc_coord(FieldPtr K, Rng& rng) {
  FieldPtr k = K->base();
  Poly num(k, K->nvars(), MonomialOrder::deglex());
  for (unsigned i = 0; i < K->nvars(); ++i)
    num += Poly::variable(k, K->nvars(), i, MonomialOrder::deglex()).scaled(k->element_at(rng() % k->size()));
  num += Poly::constant(k, K->nvars(), k->element_at(rng() % k->size()), MonomialOrder::deglex());
  return make_ratfunc(K, num, Poly::constant(k, K->nvars(), k->one(), MonomialOrder::deglex()));
}

void suite_residue_model(const SuiteConfig& cfg, SuiteResult& res) {
  size_t sampled = 0;
  for (uint32_t p : cfg.primes) {
    // p = 2 on the bundled primes of k[y1,y2,y3]; p odd on (0), (y1) in two variables.
    std::vector<GradedIdeal> primes;
    FieldPtr k = Field::prime(p);
    if (p == 2) {
      primes = bundled_primes(k);
    } else {
      primes.push_back({k, 2, {}});
      primes.push_back({k, 2, {Poly::variable(k, 2, 0)}});
    }
    Rng rng(cfg.seed + 61 * p);
    for (const auto& prime : primes) {
      const auto d = generic_point(prime);
      FieldPtr K = d.extension;
      const AlgebraSpec spec = AlgebraSpec::make(p, prime.nvars, K, cfg.flavor);
      std::vector<CohClass> classes;
      for (const auto& g : groebner(d.q).gens) classes.push_back(make_class(spec, g));
      const LambdaModule kappa = koszul_object(trivial_module(spec), classes);
      const bool projective = is_projective(kappa);
      const unsigned dim_q = krull_dimension(d.q);
      record(res, !projective && dim_q == 1, [&] {
        return json{{"prime", prime.strs(class_variable_names(prime.nvars))}, {"kappa_projective", projective}, {"dim_q", dim_q}};
      });
      FieldPtr sample = K->is_finite() ? Field::finite(p, 4) : K;
      const AlgebraSpec ss = spec.with_field(sample);
      for (int s = 0, found = 0; found < 6 && s < 200; ++s) {
        std::vector<FieldElem> lambda;
        for (unsigned i = 0; i < prime.nvars; ++i)
          lambda.push_back(sample->is_finite() ? sample->element_at(rng() % sample->size()) : random_ratfunc_coord(sample, rng));
        if (std::all_of(lambda.begin(), lambda.end(), [](const FieldElem& c) { return c.is_zero(); })) continue;
        std::vector<FieldElem> at;
        for (const auto& c : lambda) at.push_back(c);
        bool outside = false;
        for (const auto& g : d.q.gens) {
          const Poly gs = g.map_coeffs(sample, [&](const FieldElem& c) { return sample->embed(c); });
          outside = outside || !gs.evaluate(at).is_zero();
        }
        if (!outside) continue;
        ++found;
        ++sampled;
        const bool ok = is_projective_at(linear_pi_point(ss, lambda), kappa);
        record(res, ok, [&] {
          json l = json::array();
          for (const auto& c : lambda) l.push_back(c.str());
          return json{{"prime", prime.strs(class_variable_names(prime.nvars))}, {"lambda", l}};
        });
      }
    }
  }
  res.stats = {{"sampled_points", sampled}};
}

// ---------------------------------------------------------------- hygiene

FieldElem random_field_elem(FieldPtr f, Rng& rng, bool polynomial = false) {
  if (f->is_finite()) return f->element_at(rng() % f->size());
  FieldPtr k = f->base();
  auto rand_poly = [&](unsigned deg) {
    Poly g(k, f->nvars(), MonomialOrder::deglex());
    for (unsigned e = 0; e <= deg; ++e) {
      Monomial m;
      m.set(rng() % f->nvars(), static_cast<uint16_t>(e));
      g += Poly::term(k, f->nvars(), m, k->element_at(rng() % k->size()), MonomialOrder::deglex());
    }
    return g;
  };
  if (polynomial) return make_ratfunc(f, rand_poly(1), Poly::constant(k, f->nvars(), k->one(), MonomialOrder::deglex()));
  Poly den = rand_poly(1);
  if (den.is_zero()) den = Poly::constant(k, f->nvars(), k->one(), MonomialOrder::deglex());
  return make_ratfunc(f, rand_poly(2), den);
}

std::vector<FieldPtr> hygiene_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::finite(2, 2), Field::finite(3, 2),
          Field::finite(2, 3), Field::rational_functions(Field::prime(2), 1),
          Field::rational_functions(Field::prime(3), 2)};
}

void hygiene_field_axioms(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed + 71);
  const auto fields = hygiene_fields();
  for (size_t k = 0; k < cfg.hygiene_cases; ++k) {
    FieldPtr f = fields[k % fields.size()];
    const FieldElem a = random_field_elem(f, rng), b = random_field_elem(f, rng), c = random_field_elem(f, rng);
    const uint32_t p = f->characteristic();
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
              a * (b + c) == a * b + a * c && a + f->zero() == a && a * f->one() == a && a - a == f->zero() &&
              (a + b).pow(p) == a.pow(p) + b.pow(p);
    if (!a.is_zero()) ok = ok && a * a.inverse() == f->one() && (b / a) * a == b;
    record(res, ok, [&] { return json{{"field", f->describe()}, {"a", a.str()}, {"b", b.str()}, {"c", c.str()}}; });
  }
}

void hygiene_rank_nullity(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed + 73);
  const auto fields = hygiene_fields();
  for (size_t k = 0; k < cfg.hygiene_cases; ++k) {
    FieldPtr f = fields[k % fields.size()];
    const size_t limit = f->is_finite() ? 9 : 3;
    const size_t rows = 1 + rng() % limit, cols = 1 + rng() % limit, inner = 1 + rng() % limit;
    // Low-rank products exercise nontrivial kernels.
    Matrix a(f, rows, inner), b(f, inner, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < inner; ++j) a(i, j) = random_field_elem(f, rng, true);
    for (size_t i = 0; i < inner; ++i)
      for (size_t j = 0; j < cols; ++j) b(i, j) = random_field_elem(f, rng, true);
    const Matrix m = a * b;
    const size_t rk = rank(m);
    const Matrix ker = kernel_basis(m);
    const bool ok = rk + ker.cols() == cols && (m * ker).is_zero() && rank(ker) == ker.cols();
    record(res, ok, [&] { return json{{"field", f->describe()}, {"matrix", m.str()}, {"rank", rk}, {"nullity", ker.cols()}}; });
  }
}

void hygiene_dd(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed + 79);
  const std::vector<std::pair<uint32_t, unsigned>> shapes{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 1}, {2, 1}};
  for (size_t k = 0; res.cases < cfg.hygiene_cases; ++k) {
    const auto [p, r] = shapes[k % shapes.size()];
    const AlgebraSpec spec = AlgebraSpec::make(p, r, nullptr, k % 2 ? HopfFlavor::Primitive : HopfFlavor::GroupLike);
    const LambdaModule m = k % 3 == 0 ? random_commuting_module(spec, rng, 1 + rng() % 6)
                                      : random_quotient(spec, rng, 8);
    const Resolution resn = minimal_resolution(m, 3);
    const Matrix& eps = resn.augmentation();
    record(res, (eps * resn.boundaries[1]).is_zero(), [&] { return json{{"module", module_to_json(m)}, {"step", 0}}; });
    for (size_t i = 2; i <= resn.length; ++i)
      record(res, (resn.boundaries[i - 1] * resn.boundaries[i]).is_zero(),
             [&] { return json{{"module", module_to_json(m)}, {"step", i}}; });
  }
}

void hygiene_buchberger(const SuiteConfig& cfg, SuiteResult& res) {
  Rng rng(cfg.seed + 83);
  const std::vector<FieldPtr> fields{Field::prime(2), Field::prime(3), Field::prime(5), Field::finite(2, 2)};
  for (size_t k = 0; k < cfg.hygiene_cases; ++k) {
    FieldPtr f = fields[k % fields.size()];
    const unsigned r = 2 + static_cast<unsigned>(rng() % 2);
    std::vector<Poly> gens;
    const size_t count = 1 + rng() % 3;
    for (size_t g = 0; g < count; ++g) {
      const unsigned deg = 1 + static_cast<unsigned>(rng() % 3);
      Poly h(f, r);
      for (int t = 0; t < 4; ++t) {
        Monomial m;
        unsigned left = deg;
        for (unsigned i = 0; i + 1 < r; ++i) {
          const unsigned e = static_cast<unsigned>(rng() % (left + 1));
          m.set(i, static_cast<uint16_t>(e));
          left -= e;
        }
        m.set(r - 1, static_cast<uint16_t>(left));
        h += Poly::term(f, r, m, f->element_at(rng() % f->size()));
      }
      gens.push_back(h);
    }
    const auto basis = groebner_basis(gens, f, r);
    bool ok = satisfies_buchberger_criterion(basis);
    for (const auto& g : gens) ok = ok && normal_form(g, basis).is_zero();
    record(res, ok, [&] {
      json j = json::array();
      for (const auto& g : gens) j.push_back(g.str());
      return json{{"field", f->describe()}, {"generators", j}};
    });
  }
}

void suite_hygiene(const SuiteConfig& cfg, SuiteResult& res) {
  json parts = json::object();
  for (const auto& [name, fn] : std::vector<std::pair<std::string, void (*)(const SuiteConfig&, SuiteResult&)>>{
           {"field-axioms", hygiene_field_axioms},
           {"rank-nullity", hygiene_rank_nullity},
           {"d-squared", hygiene_dd},
           {"buchberger", hygiene_buchberger}}) {
    SuiteResult part;
    fn(cfg, part);
    parts[name] = {{"cases", part.cases}, {"failed", part.failed}};
    res.cases += part.cases;
    res.failed += part.failed;
    for (auto& f : part.failures)
      if (res.failures.size() < kMaxDumps) res.failures.push_back({{"part", name}, {"case", f}});
  }
  res.stats = parts;
}

const std::map<std::string, void (*)(const SuiteConfig&, SuiteResult&)>& registry() {
  static const std::map<std::string, void (*)(const SuiteConfig&, SuiteResult&)> r{
      {"dade", suite_dade},
      {"tensor", suite_tensor},
      {"hom", suite_hom},
      {"koszul", suite_koszul},
      {"carlson", suite_carlson},
      {"equiv", suite_equiv},
      {"ext-symmetry", suite_ext_symmetry},
      {"generic-points", suite_generic_points},
      {"residue-model", suite_residue_model},
      {"cosupport", suite_cosupport},
      {"hygiene", suite_hygiene},
  };
  return r;
}

}  // namespace

std::vector<GradedIdeal> bundled_primes(FieldPtr k) {
  const auto names = class_variable_names(3);
  std::vector<GradedIdeal> out;
  for (const auto& gens : std::vector<std::vector<std::string>>{{}, {"y1"}, {"y1", "y2"}, {"y1*y3 - y2^2"}}) {
    GradedIdeal i{k, 3, {}};
    for (const auto& g : gens) i.gens.push_back(parse_poly(k, names, g));
    out.push_back(i);
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw UnknownSuite(name);
  SuiteResult res;
  res.suite = name;
  const auto t0 = std::chrono::steady_clock::now();
  it->second(cfg, res);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

json suite_result_to_json(const SuiteResult& r) {
  return {{"suite", r.suite},     {"passed", r.passed()}, {"cases", r.cases}, {"failed", r.failed},
          {"stats", r.stats},     {"failures", r.failures}};
}

}  // namespace rankvar
