#include "rankvar/module.hpp"

#include <sstream>

namespace rankvar {

AlgebraSpec AlgebraSpec::make(uint32_t p, unsigned r, FieldPtr field, HopfFlavor flavor) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
  if (r < 1) throw std::invalid_argument("rank r must be at least 1");
  if (!field) field = Field::prime(p);
  if (field->characteristic() != p) throw IncompatibleFields("field characteristic differs from p");
  return {p, r, field, flavor};
}

size_t AlgebraSpec::algebra_dim() const {
  size_t d = 1;
  for (unsigned i = 0; i < r; ++i) d *= p;
  return d;
}

std::string AlgebraSpec::describe() const {
  std::ostringstream os;
  os << "Lambda(p=" << p << ",r=" << r << ") over " << field->describe() << ", " << flavor_name(flavor);
  return os.str();
}

std::string flavor_name(HopfFlavor h) { return h == HopfFlavor::GroupLike ? "grouplike" : "primitive"; }

HopfFlavor parse_flavor(const std::string& s) {
  if (s == "grouplike") return HopfFlavor::GroupLike;
  if (s == "primitive") return HopfFlavor::Primitive;
  throw std::invalid_argument("unknown flavor '" + s + "' (expected grouplike or primitive)");
}

void validate_actions(const AlgebraSpec& spec, size_t dim, const std::vector<Matrix>& actions) {
  if (actions.size() != spec.r)
    throw std::invalid_argument("expected " + std::to_string(spec.r) + " actions, got " +
                                std::to_string(actions.size()));
  for (unsigned i = 0; i < spec.r; ++i) {
    const Matrix& z = actions[i];
    if (z.rows() != dim || z.cols() != dim)
      throw InvalidModule("action z" + std::to_string(i + 1) + " is not " + std::to_string(dim) + "x" +
                              std::to_string(dim),
                          i + 1, i + 1);
    if (dim && z.field() != spec.field) throw FieldMismatch("action over a different field than the spec");
  }
  if (dim == 0) return;
  for (unsigned i = 0; i < spec.r; ++i) {
    if (!power(actions[i], spec.p).is_zero())
      throw InvalidModule("z" + std::to_string(i + 1) + "^" + std::to_string(spec.p) + " is not zero (pair (" +
                              std::to_string(i + 1) + "," + std::to_string(i + 1) + "))",
                          i + 1, i + 1);
    for (unsigned j = i + 1; j < spec.r; ++j)
      if (actions[i] * actions[j] != actions[j] * actions[i])
        throw InvalidModule("z" + std::to_string(i + 1) + " and z" + std::to_string(j + 1) +
                                " do not commute (pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "))",
                            i + 1, j + 1);
  }
}

LambdaModule::LambdaModule(AlgebraSpec spec, std::vector<Matrix> actions) : spec_(spec) {
  dim_ = actions.empty() ? 0 : actions[0].rows();
  validate_actions(spec_, dim_, actions);
  actions_ = std::move(actions);
}

LambdaModule LambdaModule::unchecked(AlgebraSpec spec, size_t dim, std::vector<Matrix> actions) {
  LambdaModule m;
  m.spec_ = spec;
  m.dim_ = dim;
  m.actions_ = std::move(actions);
  return m;
}

LambdaModule LambdaModule::with_flavor(HopfFlavor h) const {
  return unchecked(spec_.with_flavor(h), dim_, actions_);
}

size_t monomial_index(const std::vector<unsigned>& a, uint32_t p) {
  size_t idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

std::vector<unsigned> monomial_exponents(size_t index, uint32_t p, unsigned r) {
  std::vector<unsigned> a(r);
  for (unsigned i = 0; i < r; ++i) {
    a[i] = static_cast<unsigned>(index % p);
    index /= p;
  }
  return a;
}

LambdaModule free_module(const AlgebraSpec& spec, size_t n) {
  const size_t q = spec.algebra_dim();
  FieldPtr f = spec.field;
  std::vector<Matrix> acts;
  for (unsigned i = 0; i < spec.r; ++i) {
    Matrix z(f, n * q, n * q);
    for (size_t j = 0; j < n; ++j)
      for (size_t m = 0; m < q; ++m) {
        auto a = monomial_exponents(m, spec.p, spec.r);
        if (a[i] + 1 >= spec.p) continue;
        ++a[i];
        z(j * q + monomial_index(a, spec.p), j * q + m) = f->one();
      }
    acts.push_back(std::move(z));
  }
  return LambdaModule::unchecked(spec, n * q, std::move(acts));
}

LambdaModule trivial_module(const AlgebraSpec& spec) {
  return LambdaModule::unchecked(spec, 1, std::vector<Matrix>(spec.r, Matrix(spec.field, 1, 1)));
}

LambdaModule zero_module(const AlgebraSpec& spec) {
  return LambdaModule::unchecked(spec, 0, std::vector<Matrix>(spec.r, Matrix(spec.field, 0, 0)));
}

namespace {

void same_spec(const LambdaModule& m, const LambdaModule& n) {
  if (!(m.spec() == n.spec())) throw SpecMismatch();
}

// g^{-1} = sum_{j<p} (-z)^j for g = 1 + z.
Matrix unit_inverse(const Matrix& z, uint32_t p) {
  const Matrix neg = -z;
  Matrix acc = Matrix::identity(z.field(), z.rows()), pw = acc;
  for (uint32_t j = 1; j < p; ++j) {
    pw = pw * neg;
    acc = acc + pw;
  }
  return acc;
}

}  // namespace

LambdaModule tensor_product(const LambdaModule& m, const LambdaModule& n) {
  same_spec(m, n);
  FieldPtr f = m.field();
  const Matrix im = Matrix::identity(f, m.dim()), in = Matrix::identity(f, n.dim());
  std::vector<Matrix> acts;
  for (unsigned i = 0; i < m.spec().r; ++i) {
    Matrix z = kron(m.action(i), in) + kron(im, n.action(i));
    if (m.spec().flavor == HopfFlavor::GroupLike) z = z + kron(m.action(i), n.action(i));
    acts.push_back(std::move(z));
  }
  return LambdaModule::unchecked(m.spec(), m.dim() * n.dim(), std::move(acts));
}

LambdaModule hom_module(const LambdaModule& m, const LambdaModule& n) {
  same_spec(m, n);
  FieldPtr f = m.field();
  const Matrix im = Matrix::identity(f, m.dim()), in = Matrix::identity(f, n.dim());
  std::vector<Matrix> acts;
  // f in Hom(M,N) is vectorised column-major: vec(A X B) = (B^T kron A) vec X.
  for (unsigned i = 0; i < m.spec().r; ++i) {
    if (m.spec().flavor == HopfFlavor::Primitive) {
      acts.push_back(kron(im, n.action(i)) - kron(m.action(i).transpose(), in));
    } else {
      const Matrix ginv = unit_inverse(m.action(i), m.spec().p);
      const Matrix gn = in + n.action(i);
      acts.push_back(kron(ginv.transpose(), gn) - Matrix::identity(f, m.dim() * n.dim()));
    }
  }
  return LambdaModule::unchecked(m.spec(), m.dim() * n.dim(), std::move(acts));
}

LambdaModule dual(const LambdaModule& m) { return hom_module(m, trivial_module(m.spec())); }

LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n) {
  same_spec(m, n);
  std::vector<Matrix> acts;
  for (unsigned i = 0; i < m.spec().r; ++i) acts.push_back(block_diag({m.action(i), n.action(i)}));
  return LambdaModule::unchecked(m.spec(), m.dim() + n.dim(), std::move(acts));
}

LambdaModule direct_sum(const std::vector<LambdaModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  LambdaModule acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

LambdaModule scalar_extension(const LambdaModule& m, FieldPtr target) {
  if (!target->contains(m.field()))
    throw IncompatibleFields(m.field()->describe() + " does not embed in " + target->describe());
  std::vector<Matrix> acts;
  for (const auto& z : m.actions()) acts.push_back(change_field(z, target));
  return LambdaModule::unchecked(m.spec().with_field(target), m.dim(), std::move(acts));
}

Matrix monomial_action(const LambdaModule& m, const std::vector<unsigned>& a) {
  Matrix acc = Matrix::identity(m.field(), m.dim());
  for (unsigned i = 0; i < a.size(); ++i)
    for (unsigned e = 0; e < a[i]; ++e) acc = m.action(i) * acc;
  return acc;
}

Matrix generator_orbits(const LambdaModule& m, const Matrix& gens) {
  const AlgebraSpec& spec = m.spec();
  const size_t q = spec.algebra_dim(), d = m.dim();
  Matrix out(m.field(), d, gens.cols() * q);
  for (size_t j = 0; j < gens.cols(); ++j) {
    for (size_t i = 0; i < d; ++i) out(i, j * q) = gens(i, j);
    for (size_t a = 1; a < q; ++a) {
      auto e = monomial_exponents(a, spec.p, spec.r);
      unsigned v = 0;
      while (e[v] == 0) ++v;
      --e[v];
      const size_t prev = j * q + monomial_index(e, spec.p);
      const Matrix& z = m.action(v);
      for (size_t i = 0; i < d; ++i) {
        FieldElem acc = m.field()->zero();
        for (size_t k = 0; k < d; ++k)
          if (!z(i, k).is_zero() && !out(k, prev).is_zero()) acc += z(i, k) * out(k, prev);
        out(i, j * q + a) = acc;
      }
    }
  }
  return out;
}

LambdaModule kernel_module(const LambdaModule& m, const Matrix& f, Matrix* inclusion, std::vector<size_t>* coords) {
  std::vector<size_t> fc;
  Matrix c = kernel_basis(f, fc);
  std::vector<Matrix> acts;
  for (const auto& z : m.actions()) acts.push_back((z * c).select_rows(fc));
  LambdaModule k = LambdaModule::unchecked(m.spec(), c.cols(), std::move(acts));
  if (inclusion) *inclusion = std::move(c);
  if (coords) *coords = std::move(fc);
  return k;
}

Matrix radical_basis(const LambdaModule& m) {
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  const Matrix all = hstack(m.actions());
  return all.select_cols(pivot_columns(all));
}

ProjectiveCover projective_cover(const LambdaModule& m) {
  const AlgebraSpec& spec = m.spec();
  FieldPtr f = m.field();
  const size_t d = m.dim();
  std::vector<size_t> gens;
  if (d > 0) {
    const Matrix all = hstack(m.actions());
    const size_t offset = all.cols();
    for (size_t c : pivot_columns(hstack({all, Matrix::identity(f, d)})))
      if (c >= offset) gens.push_back(c - offset);
  }
  Matrix g(f, d, gens.size());
  for (size_t j = 0; j < gens.size(); ++j) g(gens[j], j) = f->one();
  Matrix surj = generator_orbits(m, g);
  return {free_module(spec, gens.size()), std::move(surj), std::move(g)};
}

bool is_projective(const LambdaModule& m) {
  const size_t q = m.spec().algebra_dim();
  if (m.dim() % q != 0) return false;
  if (m.dim() == 0) return true;
  const size_t rad = rank(hstack(m.actions()));
  return (m.dim() - rad) * q == m.dim();
}

LambdaModule submodule(const LambdaModule& m, const Matrix& basis) {
  std::vector<Matrix> acts;
  for (const auto& z : m.actions()) {
    if (basis.cols() == 0) {
      acts.emplace_back(m.field(), 0, 0);
      continue;
    }
    auto x = solve(basis, z * basis);
    if (!x) throw std::invalid_argument("submodule: span is not invariant");
    acts.push_back(std::move(*x));
  }
  return LambdaModule::unchecked(m.spec(), basis.cols(), std::move(acts));
}

Quotient quotient(const LambdaModule& m, const Matrix& w0) {
  FieldPtr f = m.field();
  const size_t d = m.dim();
  const Matrix w = w0.cols() ? w0.select_cols(pivot_columns(w0)) : Matrix(f, d, 0);
  std::vector<size_t> comp;
  const auto piv = pivot_columns(hstack({w, Matrix::identity(f, d)}));
  for (size_t c : piv)
    if (c >= w.cols()) comp.push_back(c - w.cols());
  Matrix e(f, d, comp.size());
  for (size_t j = 0; j < comp.size(); ++j) e(comp[j], j) = f->one();
  const Matrix basis = hstack({w, e});
  const Matrix inv = inverse(basis);
  Matrix proj = inv.block(w.cols(), 0, comp.size(), d);
  std::vector<Matrix> acts;
  for (const auto& z : m.actions()) acts.push_back(proj * z * e);
  return {LambdaModule::unchecked(m.spec(), comp.size(), std::move(acts)), std::move(proj), std::move(e)};
}

}  // namespace rankvar
