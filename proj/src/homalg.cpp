#include "rankvar/homalg.hpp"

#include <map>
#include <mutex>

#include "rankvar/parse.hpp"

namespace rankvar {

namespace {

void extend(Resolution& res, size_t length) {
  while (res.covers.size() <= length) {
    const size_t i = res.covers.size();
    res.covers.push_back(projective_cover(res.omega[i]));
    const ProjectiveCover& c = res.covers.back();
    Matrix incl;
    std::vector<size_t> fc;
    res.omega.push_back(kernel_module(c.cover, c.surjection, &incl, &fc));
    res.inclusions.push_back(std::move(incl));
    res.coords.push_back(std::move(fc));
    if (i == 0) res.boundaries.emplace_back();
    else res.boundaries.push_back(res.inclusions[i] * c.surjection);
  }
  res.length = std::max(res.length, length);
}

Resolution start(const LambdaModule& m) {
  Resolution res;
  res.target = m;
  res.omega.push_back(m);
  res.inclusions.emplace_back();
  res.coords.emplace_back();
  return res;
}

}  // namespace

Resolution minimal_resolution(const LambdaModule& m, size_t length) {
  Resolution res = start(m);
  extend(res, length);
  res.length = length;
  return res;
}

LambdaModule syzygy(const LambdaModule& m, int i) {
  if (i >= 0) return minimal_resolution(m, static_cast<size_t>(i)).omega[static_cast<size_t>(i)];
  return dual(syzygy(dual(m), -i));
}

namespace {

// Hom(P_j, N) -> Hom(P_{j+1}, N), phi -> phi o d_{j+1}, in generator-image coordinates.
Matrix hom_boundary(const Resolution& res, size_t j, const std::vector<Matrix>& zn, size_t q) {
  const Matrix& d = res.boundaries[j + 1];
  const size_t bj = res.betti(j), bk = res.betti(j + 1), dn = zn[0].rows();
  FieldPtr f = zn[0].field();
  Matrix out(f, bk * dn, bj * dn);
  for (size_t k = 0; k < bk; ++k)
    for (size_t l = 0; l < bj; ++l) {
      Matrix blk(f, dn, dn);
      bool any = false;
      for (size_t a = 0; a < q; ++a) {
        const FieldElem& c = d(l * q + a, k * q);
        if (c.is_zero()) continue;
        blk = blk + c * zn[a];
        any = true;
      }
      if (any) out.set_block(k * dn, l * dn, blk);
    }
  return out;
}

}  // namespace

std::vector<size_t> ext_dims(const LambdaModule& m, const LambdaModule& n, size_t max_i) {
  if (!(m.spec() == n.spec())) throw SpecMismatch();
  const Resolution res = minimal_resolution(m, max_i + 1);
  const size_t q = m.spec().algebra_dim();
  std::vector<Matrix> zn;
  for (size_t a = 0; a < q; ++a) zn.push_back(monomial_action(n, monomial_exponents(a, m.spec().p, m.spec().r)));
  std::vector<size_t> rk(max_i + 2, 0);  // rk[j] = rank of Hom(P_{j-1}) -> Hom(P_j)
  for (size_t j = 0; j <= max_i; ++j) {
    if (n.dim() == 0 || res.betti(j) == 0 || res.betti(j + 1) == 0) continue;
    rk[j + 1] = rank(hom_boundary(res, j, zn, q));
  }
  std::vector<size_t> out;
  for (size_t i = 0; i <= max_i; ++i) out.push_back(res.betti(i) * n.dim() - rk[i + 1] - rk[i]);
  return out;
}

size_t ext_dim(const LambdaModule& m, const LambdaModule& n, size_t i) { return ext_dims(m, n, i)[i]; }

// ---------------------------------------------------------------- classes

std::vector<std::string> class_variable_names(unsigned r) { return default_names("y", r); }

CohClass make_class(const AlgebraSpec& spec, const Poly& poly, unsigned zero_degree) {
  if (poly.field() != spec.field) throw FieldMismatch("class coefficients not in the spec's field");
  if (poly.nvars() != spec.r) throw std::invalid_argument("class must be a polynomial in y1..yr");
  const unsigned unit = spec.p == 2 ? 1 : 2;
  if (poly.is_zero()) return {spec, poly, zero_degree};
  if (!poly.is_homogeneous()) throw NonHomogeneous();
  if (poly.total_degree() == 0) throw std::invalid_argument("class must have positive degree");
  return {spec, poly, poly.total_degree() * unit};
}

CohClass parse_class(const AlgebraSpec& spec, const std::string& text) {
  return make_class(spec, parse_poly(spec.field, class_variable_names(spec.r), text));
}

std::string CohClass::str() const { return poly.str(class_variable_names(spec.r)); }

namespace {

struct TrivialCache {
  std::mutex mu;
  std::map<std::pair<uint32_t, unsigned>, std::shared_ptr<Resolution>> res;
  std::map<std::tuple<uint32_t, unsigned, std::vector<unsigned>>, Matrix> maps;
  std::map<std::tuple<uint32_t, unsigned, size_t>, Matrix> gen_proj;
};

TrivialCache& cache() {
  static TrivialCache c;
  return c;
}

std::shared_ptr<const Resolution> trivial_resolution_locked(uint32_t p, unsigned r, size_t length) {
  auto& c = cache();
  auto& slot = c.res[{p, r}];
  if (!slot) {
    const AlgebraSpec spec = AlgebraSpec::make(p, r);
    slot = std::make_shared<Resolution>(start(trivial_module(spec)));
  }
  if (slot->covers.size() <= length) {
    auto grown = std::make_shared<Resolution>(*slot);
    extend(*grown, length);
    slot = grown;
  }
  return slot;
}

// Coordinates of Omega^d k modulo its radical, in the order of the cover's generators.
Matrix generator_projection_locked(uint32_t p, unsigned r, size_t d) {
  auto& c = cache();
  auto key = std::make_tuple(p, r, d);
  auto it = c.gen_proj.find(key);
  if (it != c.gen_proj.end()) return it->second;
  auto res = trivial_resolution_locked(p, r, d);
  const LambdaModule& x = res->omega[d];
  const Matrix g = res->covers[d].generators;
  const Matrix rad = radical_basis(x);
  Matrix basis = rad.cols() ? hstack({rad, g}) : g;
  const Matrix inv = inverse(basis);
  Matrix proj = inv.block(rad.cols(), 0, g.cols(), x.dim());
  c.gen_proj[key] = proj;
  return proj;
}

// Vector of P_{i} lifted from Omega^i.
Matrix lift_generator(const Resolution& res, size_t i, const Matrix& target) {
  return solve_or_throw(res.covers[i].surjection, target);
}

// y_i as a functional on Omega^1 k (p = 2) or Omega^2 k (p odd).
Matrix generator_map_locked(uint32_t p, unsigned r, unsigned i) {
  auto& c = cache();
  auto key = std::make_tuple(p, r, std::vector<unsigned>{i});
  auto it = c.maps.find(key);
  if (it != c.maps.end()) return it->second;
  const size_t d = p == 2 ? 1 : 2;
  auto res = trivial_resolution_locked(p, r, d);
  const Matrix proj = generator_projection_locked(p, r, d);
  FieldPtr F = Field::prime(p);
  const AlgebraSpec spec = AlgebraSpec::make(p, r);
  const size_t q = spec.algebra_dim();

  auto z_in_omega1 = [&](unsigned j) {
    std::vector<unsigned> a(r, 0);
    a[j] = 1;
    Matrix v(F, q, 1);
    v(monomial_index(a, p), 0) = F->one();
    return v.select_rows(res->coords[1]);
  };

  std::vector<Matrix> elems;
  if (p == 2) {
    for (unsigned j = 0; j < r; ++j) elems.push_back(z_in_omega1(j));
  } else {
    const LambdaModule& p1 = res->free(1);
    std::vector<Matrix> u;
    for (unsigned j = 0; j < r; ++j) u.push_back(lift_generator(*res, 1, z_in_omega1(j)));
    for (unsigned j = 0; j < r; ++j) {
      std::vector<unsigned> a(r, 0);
      a[j] = p - 1;
      elems.push_back(monomial_action(p1, a) * u[j]);
    }
    for (unsigned j = 0; j < r; ++j)
      for (unsigned l = j + 1; l < r; ++l) elems.push_back(p1.action(l) * u[j] - p1.action(j) * u[l]);
    for (auto& e : elems) e = e.select_rows(res->coords[2]);
  }
  std::vector<Matrix> cols;
  for (const auto& e : elems) cols.push_back(proj * e);
  const Matrix w = hstack(cols);
  if (w.rows() != w.cols() || rank(w) != w.rows())
    throw std::logic_error("degree generators do not form a basis of the generator space");
  Matrix e(F, w.cols(), 1);
  e(i, 0) = F->one();
  const Matrix v = solve_or_throw(w.transpose(), e);
  const Matrix map = v.transpose() * proj;
  c.maps[key] = map;
  return map;
}

// Omega of a map f : Omega^a k -> Omega^b k, giving Omega^{a+1} k -> Omega^{b+1} k.
Matrix omega_of_map(const Resolution& res, size_t a, size_t b, const Matrix& f) {
  const ProjectiveCover& ca = res.covers[a];
  const ProjectiveCover& cb = res.covers[b];
  const size_t q = ca.cover.spec().algebra_dim();
  const size_t na = ca.generators.cols();
  std::vector<Matrix> images;
  for (size_t j = 0; j < na; ++j) images.push_back(lift_generator(res, b, f * ca.surjection.col(j * q)));
  Matrix big(f.field(), cb.cover.dim(), ca.cover.dim());
  if (na) big = generator_orbits(cb.cover, hstack(images));
  return (big * res.inclusions[a + 1]).select_rows(res.coords[b + 1]);
}

Matrix monomial_map_locked(uint32_t p, unsigned r, const std::vector<unsigned>& factors) {
  if (factors.size() == 1) return generator_map_locked(p, r, factors[0]);
  auto& c = cache();
  auto key = std::make_tuple(p, r, factors);
  auto it = c.maps.find(key);
  if (it != c.maps.end()) return it->second;
  const size_t unit = p == 2 ? 1 : 2;
  const std::vector<unsigned> rest(factors.begin() + 1, factors.end());
  const size_t rest_deg = unit * rest.size();
  auto res = trivial_resolution_locked(p, r, rest_deg + unit);
  Matrix g = monomial_map_locked(p, r, rest);
  for (size_t s = 0; s < unit; ++s) g = omega_of_map(*res, rest_deg + s, s, g);
  const Matrix map = generator_map_locked(p, r, factors[0]) * g;
  c.maps[key] = map;
  return map;
}

}  // namespace

std::shared_ptr<const Resolution> trivial_resolution(uint32_t p, unsigned r, size_t length) {
  std::lock_guard<std::mutex> lock(cache().mu);
  return trivial_resolution_locked(p, r, length);
}

Matrix monomial_map(uint32_t p, unsigned r, const std::vector<unsigned>& factors) {
  if (factors.empty()) throw std::invalid_argument("monomial_map needs at least one factor");
  for (unsigned f : factors)
    if (f >= r) throw std::out_of_range("generator index out of range");
  std::lock_guard<std::mutex> lock(cache().mu);
  return monomial_map_locked(p, r, factors);
}

namespace {

LambdaModule respec(const LambdaModule& m, const AlgebraSpec& spec) {
  std::vector<Matrix> acts;
  for (const auto& z : m.actions()) acts.push_back(change_field(z, spec.field));
  return LambdaModule::unchecked(spec, m.dim(), std::move(acts));
}

}  // namespace

ClassMap class_to_map(const CohClass& zeta) {
  const AlgebraSpec& spec = zeta.spec;
  const uint32_t p = spec.p;
  const unsigned r = spec.r;
  const unsigned d = zeta.degree;
  if (d == 0) throw std::invalid_argument("class must have positive degree");
  auto res = trivial_resolution(p, r, d);
  ClassMap out;
  out.degree = d;
  out.omega = respec(res->omega[d], spec);
  out.cover = respec(res->free(d - 1), spec);
  out.inclusion = change_field(res->inclusions[d], spec.field);
  out.map = Matrix(spec.field, 1, out.omega.dim());
  for (const auto& t : zeta.poly.terms()) {
    std::vector<unsigned> factors;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned e = 0; e < t.mono.exp[i]; ++e) factors.push_back(i);
    out.map = out.map + t.coeff * change_field(monomial_map(p, r, factors), spec.field);
  }
  return out;
}

LambdaModule carlson_module(const CohClass& zeta) {
  if (zeta.is_zero()) throw ZeroClass();
  const ClassMap c = class_to_map(zeta);
  return kernel_module(c.omega, c.map);
}

LambdaModule koszul_factor(const CohClass& zeta) {
  if (zeta.is_zero()) throw ZeroClass();
  const ClassMap c = class_to_map(zeta);
  const LambdaModule sum = direct_sum(c.cover, trivial_module(zeta.spec));
  const Matrix w = vstack({c.inclusion, -c.map});
  return quotient(sum, w).module;
}

LambdaModule koszul_object(const LambdaModule& m, const std::vector<CohClass>& classes) {
  LambdaModule acc = m;
  for (const auto& z : classes) {
    if (z.is_zero()) throw ZeroClass();
    if (acc.field() != z.spec.field) acc = scalar_extension(acc, z.spec.field);
    if (!(acc.spec() == z.spec)) throw SpecMismatch();
    acc = tensor_product(acc, koszul_factor(z));
  }
  return acc;
}

}  // namespace rankvar
