#include "rankvar/corpus.hpp"

#include <functional>
#include <numeric>

namespace rankvar {

namespace {

FieldElem random_elem(FieldPtr f, Rng& rng) { return f->element_at(rng() % f->size()); }

unsigned monomial_degree(size_t index, const AlgebraSpec& spec) {
  const auto e = monomial_exponents(index, spec.p, spec.r);
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Columns: s random elements of rad^k in Lambda^m.
Matrix random_radical_elements(const AlgebraSpec& spec, Rng& rng, size_t m, size_t s, unsigned k) {
  const size_t q = spec.algebra_dim();
  Matrix g(spec.field, m * q, s);
  for (size_t j = 0; j < s; ++j)
    for (size_t i = 0; i < m * q; ++i)
      if (monomial_degree(i % q, spec) >= k && rng() % 2) g(i, j) = random_elem(spec.field, rng);
  return g;
}

Matrix orbit_basis(const LambdaModule& free, const Matrix& gens) {
  const Matrix orbits = generator_orbits(free, gens);
  return orbits.select_cols(pivot_columns(orbits));
}

size_t top_degree(const AlgebraSpec& spec) { return spec.r * (spec.p - 1); }

}  // namespace

LambdaModule random_quotient(const AlgebraSpec& spec, Rng& rng, size_t max_dim) {
  const size_t q = spec.algebra_dim();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const size_t m = (2 * q <= 2 * max_dim && rng() % 3 == 0) ? 2 : 1;
    const LambdaModule free = free_module(spec, m);
    const Matrix g = random_radical_elements(spec, rng, m, 1 + rng() % 3, 1 + rng() % 2);
    const auto quo = quotient(free, orbit_basis(free, g)).module;
    if (quo.dim() > 0 && quo.dim() <= max_dim) return quo;
  }
  return trivial_module(spec);
}

LambdaModule random_submodule(const AlgebraSpec& spec, Rng& rng, size_t max_dim) {
  const size_t q = spec.algebra_dim();
  for (int attempt = 0; attempt < 200; ++attempt) {
    const size_t m = (q <= max_dim && rng() % 3 == 0) ? 2 : 1;
    const LambdaModule free = free_module(spec, m);
    const unsigned k = 1 + static_cast<unsigned>(rng() % top_degree(spec));
    const Matrix basis = orbit_basis(free, random_radical_elements(spec, rng, m, 1 + rng() % 2, k));
    if (basis.cols() > 0 && basis.cols() <= max_dim) return submodule(free, basis);
  }
  return trivial_module(spec);
}

LambdaModule random_commuting_module(const AlgebraSpec& spec, Rng& rng, size_t dim) {
  FieldPtr f = spec.field;
  const uint32_t p = spec.p;
  // z_1 = L J L^{-1}: J nilpotent Jordan form with blocks of size <= p, L lower unitriangular.
  Matrix jordan(f, dim, dim);
  for (size_t start = 0; start < dim;) {
    const size_t len = std::min<size_t>(dim - start, 1 + rng() % p);
    for (size_t i = 1; i < len; ++i) jordan(start + i, start + i - 1) = f->one();
    start += len;
  }
  Matrix l = Matrix::identity(f, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < i; ++j) l(i, j) = random_elem(f, rng);
  std::vector<Matrix> acts{l * jordan * inverse(l)};

  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < i; ++j) slots.push_back({i, j});
  auto unit = [&](size_t s) {
    Matrix e(f, dim, dim);
    e(slots[s].first, slots[s].second) = f->one();
    return e;
  };
  for (unsigned a = 1; a < spec.r; ++a) {
    // Strictly lower X with X z_b = z_b X for b < a.
    Matrix constraints(f, a * dim * dim, slots.size());
    for (size_t s = 0; s < slots.size(); ++s) {
      const Matrix e = unit(s);
      for (unsigned b = 0; b < a; ++b) {
        const Matrix c = e * acts[b] - acts[b] * e;
        for (size_t i = 0; i < dim * dim; ++i) constraints(b * dim * dim + i, s) = c(i / dim, i % dim);
      }
    }
    const Matrix kernel = kernel_basis(constraints);
    Matrix chosen(f, dim, dim);
    bool found = false;
    for (int attempt = 0; attempt < 60 && !found && kernel.cols() > 0; ++attempt) {
      Matrix x(f, dim, dim);
      const size_t terms = 1 + rng() % 3;
      for (size_t t = 0; t < terms; ++t) {
        const size_t c = rng() % kernel.cols();
        const FieldElem w = random_elem(f, rng);
        for (size_t s = 0; s < slots.size(); ++s)
          if (!kernel(s, c).is_zero()) x(slots[s].first, slots[s].second) += w * kernel(s, c);
      }
      if (power(x, p).is_zero()) {
        chosen = x;
        found = true;
      }
    }
    if (!found) {
      // Polynomials in z_1 without constant term are p-nilpotent in characteristic p.
      Matrix pw = acts[0];
      for (uint32_t k = 1; k < p; ++k) {
        chosen = chosen + random_elem(f, rng) * pw;
        pw = pw * acts[0];
      }
    }
    acts.push_back(chosen);
  }
  return LambdaModule(spec, std::move(acts));
}

CohClass random_class(const AlgebraSpec& spec, Rng& rng, unsigned poly_degree) {
  FieldPtr f = spec.field;
  for (;;) {
    Poly g(f, spec.r);
    std::vector<unsigned> e(spec.r, 0);
    // Enumerate exponent vectors of the given total degree.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
      if (i + 1 == spec.r) {
        e[i] = left;
        Monomial m;
        for (unsigned j = 0; j < spec.r; ++j) m.set(j, static_cast<uint16_t>(e[j]));
        g += Poly::term(f, spec.r, m, random_elem(f, rng));
        return;
      }
      for (unsigned d = 0; d <= left; ++d) {
        e[i] = d;
        rec(i + 1, left - d);
      }
    };
    rec(0, poly_degree);
    if (!g.is_zero()) return make_class(spec, g);
  }
}

std::vector<CorpusModule> module_corpus(const AlgebraSpec& spec, size_t count, uint64_t seed, size_t max_dim) {
  Rng rng(seed * 0x9e3779b97f4a7c15ull + spec.p * 131 + spec.r);
  std::vector<CorpusModule> out;
  auto push = [&](std::string name, LambdaModule m) {
    if (out.size() < count && m.dim() > 0 && m.dim() <= max_dim)
      out.push_back({name + "#" + std::to_string(out.size()), std::move(m)});
  };
  const size_t q = spec.algebra_dim();
  const LambdaModule k = trivial_module(spec);
  push("trivial", k);
  if (q <= max_dim) push("free", free_module(spec, 1));
  if (2 * q <= max_dim) push("free2", free_module(spec, 2));
  auto small = [&]() {
    switch (rng() % 3) {
      case 0: return random_quotient(spec, rng, std::max<size_t>(2, max_dim / 4));
      case 1: return random_submodule(spec, rng, std::max<size_t>(2, max_dim / 4));
      default: return k;
    }
  };
  auto carlson_fits = [&](unsigned poly_degree) {
    const unsigned d = poly_degree * (spec.p == 2 ? 1 : 2);
    return trivial_resolution(spec.p, spec.r, d)->omega[d].dim() - 1 <= max_dim;
  };

  for (size_t round = 0; out.size() < count && round < 50 * count; ++round) {
    switch (round % 10) {
      case 0:
      case 1: push("quotient", random_quotient(spec, rng, max_dim)); break;
      case 2: push("submodule", random_submodule(spec, rng, max_dim)); break;
      case 3: push("commuting", random_commuting_module(spec, rng, spec.p + rng() % (max_dim - spec.p + 1))); break;
      case 4: {
        const unsigned deg = 1 + static_cast<unsigned>(rng() % 2);
        if (carlson_fits(deg)) push("carlson", carlson_module(random_class(spec, rng, deg)));
        else push("carlson", carlson_module(random_class(spec, rng, 1)));
        break;
      }
      case 5: {
        const LambdaModule base = random_quotient(spec, rng, max_dim / 2);
        push("syzygy", syzygy(base, rng() % 2 ? 1 : -1));
        break;
      }
      case 6: push("sum", direct_sum(small(), small())); break;
      case 7: push("tensor", tensor_product(small(), small())); break;
      case 8:
        if (!out.empty()) push("dual", dual(out[rng() % out.size()].module));
        break;
      case 9: {
        const LambdaModule s = small();
        if (q * s.dim() <= max_dim) push("free-tensor", tensor_product(free_module(spec, 1), s));
        else if (q + s.dim() <= max_dim) push("free-sum", direct_sum(free_module(spec, 1), s));
        else push("koszul", koszul_factor(random_class(spec, rng, 1)));
        break;
      }
    }
  }
  return out;
}

}  // namespace rankvar
