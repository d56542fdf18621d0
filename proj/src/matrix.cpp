#include "rankvar/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rankvar/poly.hpp"

namespace rankvar {

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f->zero()) {}

Matrix Matrix::identity(FieldPtr f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = f->one();
  return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<FieldElem>>& rows) {
  const size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged rows");
    for (size_t j = 0; j < nc; ++j) {
      if (rows[i][j].field() != f) throw FieldMismatch();
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(FieldPtr f, size_t rows, size_t cols, const std::vector<int64_t>& entries) {
  if (entries.size() != rows * cols) throw ShapeMismatch("entry count does not match shape");
  Matrix m(f, rows, cols);
  for (size_t k = 0; k < entries.size(); ++k) m.data_[k] = f->from_int(entries[k]);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElem& e) { return e.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < data_.size(); ++k)
    if (!(data_[k] == o.data_[k])) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  Matrix b(field_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block out of range");
  if (b.rows_ && b.cols_ && b.field_ != field_) throw FieldMismatch();
  for (size_t i = 0; i < b.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
  Matrix m(field_, idx.size(), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Matrix Matrix::select_cols(const std::vector<size_t>& idx) const {
  Matrix m(field_, rows_, idx.size());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void same_shape(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("matrix shapes differ");
}

bool finite_raw(FieldPtr f) { return f->is_finite(); }

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  same_shape(a, b);
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  same_shape(a, b);
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.cols() != b.rows()) throw ShapeMismatch("inner dimensions differ");
  FieldPtr f = a.field();
  Matrix c(f, a.rows(), b.cols());
  if (finite_raw(f)) {
    std::vector<uint32_t> row(b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
      std::fill(row.begin(), row.end(), 0u);
      for (size_t k = 0; k < a.cols(); ++k) {
        const uint32_t x = a(i, k).raw();
        if (!x) continue;
        for (size_t j = 0; j < b.cols(); ++j) {
          const uint32_t y = b(k, j).raw();
          if (y) row[j] = f->raw_add(row[j], f->raw_mul(x, y));
        }
      }
      for (size_t j = 0; j < b.cols(); ++j) c(i, j) = FieldElem(f, row[j]);
    }
    return c;
  }
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator*(const FieldElem& s, const Matrix& a) {
  Matrix c = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  Matrix c(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

Matrix power(const Matrix& a, unsigned e) {
  if (a.rows() != a.cols()) throw ShapeMismatch("power of a non-square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows()), base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ShapeMismatch("hstack of nothing");
  size_t nc = 0;
  for (const auto& m : parts) {
    if (m.rows() != parts[0].rows()) throw ShapeMismatch("hstack row counts differ");
    nc += m.cols();
  }
  Matrix out(parts[0].field(), parts[0].rows(), nc);
  size_t c = 0;
  for (const auto& m : parts) {
    out.set_block(0, c, m);
    c += m.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ShapeMismatch("vstack of nothing");
  size_t nr = 0;
  for (const auto& m : parts) {
    if (m.cols() != parts[0].cols()) throw ShapeMismatch("vstack column counts differ");
    nr += m.rows();
  }
  Matrix out(parts[0].field(), nr, parts[0].cols());
  size_t r = 0;
  for (const auto& m : parts) {
    out.set_block(r, 0, m);
    r += m.rows();
  }
  return out;
}

Matrix block_diag(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw ShapeMismatch("block_diag of nothing");
  size_t nr = 0, nc = 0;
  for (const auto& m : parts) {
    nr += m.rows();
    nc += m.cols();
  }
  Matrix out(parts[0].field(), nr, nc);
  size_t r = 0, c = 0;
  for (const auto& m : parts) {
    out.set_block(r, c, m);
    r += m.rows();
    c += m.cols();
  }
  return out;
}

Matrix change_field(const Matrix& a, FieldPtr target) {
  if (a.field() == target) return a;
  Matrix out(target, a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) out(i, j) = target->embed(a(i, j));
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

std::vector<size_t> rref_raw(FieldPtr f, std::vector<uint32_t>& m, size_t rows, size_t cols, size_t col_limit) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < col_limit && r < rows; ++c) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (m[i * cols + c]) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
    const uint32_t inv = f->raw_inv(m[r * cols + c]);
    uint32_t* pr = &m[r * cols];
    for (size_t j = c; j < cols; ++j)
      if (pr[j]) pr[j] = f->raw_mul(pr[j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      uint32_t* qi = &m[i * cols];
      const uint32_t factor = qi[c];
      if (!factor) continue;
      const uint32_t neg = f->raw_neg(factor);
      for (size_t j = c; j < cols; ++j)
        if (pr[j]) qi[j] = f->raw_add(qi[j], f->raw_mul(neg, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t weight(const FieldElem& e) {
  if (e.field()->kind() != FieldKind::RationalFunctions) return 1;
  return e.ratfunc().num.size() + e.ratfunc().den.size();
}

std::vector<size_t> rref_elem(Matrix& m, size_t col_limit) {
  std::vector<size_t> pivots;
  const size_t rows = m.rows(), cols = m.cols();
  size_t r = 0;
  for (size_t c = 0; c < col_limit && r < rows; ++c) {
    size_t piv = rows, best = 0;
    for (size_t i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        const size_t w = weight(m(i, c));
        if (piv == rows || w < best) {
          piv = i;
          best = w;
        }
      }
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    const FieldElem inv = m(r, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElem factor = m(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Echelon echelon_limited(const Matrix& a, size_t col_limit) {
  FieldPtr f = a.field();
  Echelon e;
  if (finite_raw(f)) {
    std::vector<uint32_t> m(a.rows() * a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = a(i, j).raw();
    e.pivots = rref_raw(f, m, a.rows(), a.cols(), col_limit);
    e.reduced = Matrix(f, a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
      for (size_t j = 0; j < a.cols(); ++j) e.reduced(i, j) = FieldElem(f, m[i * a.cols() + j]);
    return e;
  }
  e.reduced = a;
  e.pivots = rref_elem(e.reduced, col_limit);
  return e;
}

}  // namespace

Echelon echelon(const Matrix& a) { return echelon_limited(a, a.cols()); }

size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (a.field()->kind() == FieldKind::RationalFunctions) return ratfunc_rank(a, std::min(a.rows(), a.cols()));
  FieldPtr f = a.field();
  std::vector<uint32_t> m(a.rows() * a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = a(i, j).raw();
  return rref_raw(f, m, a.rows(), a.cols(), a.cols()).size();
}

Matrix kernel_basis(const Matrix& a) {
  std::vector<size_t> free_cols;
  return kernel_basis(a, free_cols);
}

Matrix kernel_basis(const Matrix& a, std::vector<size_t>& free_cols) {
  FieldPtr f = a.field();
  const size_t n = a.cols();
  const Echelon e = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  free_cols.clear();
  for (size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(f, n, free_cols.size());
  for (size_t t = 0; t < free_cols.size(); ++t) {
    const size_t fc = free_cols[t];
    k(fc, t) = f->one();
    for (size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced(r, fc).is_zero()) k(e.pivots[r], t) = -e.reduced(r, fc);
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch();
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row counts differ");
  FieldPtr f = a.field();
  const size_t n = a.cols();
  Matrix x(f, n, b.cols());
  if (b.cols() == 0) return x;
  if (a.rows() == 0) return x;
  const Echelon e = echelon_limited(hstack({a, b}), n);
  const size_t rk = e.pivots.size();
  for (size_t r = rk; r < a.rows(); ++r)
    for (size_t j = 0; j < b.cols(); ++j)
      if (!e.reduced(r, n + j).is_zero()) return std::nullopt;
  for (size_t r = 0; r < rk; ++r)
    for (size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  return x;
}

Matrix solve_or_throw(const Matrix& a, const Matrix& b) {
  auto x = solve(a, b);
  if (!x) throw NoSolution();
  return *x;
}

std::vector<size_t> pivot_columns(const Matrix& a) {
  if (a.rows() == 0) return {};
  return echelon(a).pivots;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x || rank(a) != a.rows()) throw DivisionByZero();
  return *x;
}

// ---------------------------------------------------------------- rank over k(t)

namespace {

constexpr double kGridBudget = 4e8;

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b;
  if (b.is_constant()) return a;
  const Poly g = poly_gcd(a, b);
  return *divide_exact(a * b, g);
}

// Sum of the largest k values.
uint32_t top_sum(std::vector<uint32_t> v, size_t k) {
  std::sort(v.begin(), v.end(), std::greater<>());
  uint32_t s = 0;
  for (size_t i = 0; i < std::min(k, v.size()); ++i) s += v[i];
  return s;
}

size_t symbolic_rank(const Matrix& a) {
  Matrix m = a;
  return rref_elem(m, m.cols()).size();
}

}  // namespace

size_t ratfunc_rank(const Matrix& a0, size_t upper) {
  FieldPtr K = a0.field();
  if (K->kind() != FieldKind::RationalFunctions) return rank(a0);

  std::vector<size_t> nz_rows, nz_cols;
  for (size_t i = 0; i < a0.rows(); ++i)
    for (size_t j = 0; j < a0.cols(); ++j)
      if (!a0(i, j).is_zero()) {
        nz_rows.push_back(i);
        break;
      }
  for (size_t j = 0; j < a0.cols(); ++j)
    for (size_t i = 0; i < a0.rows(); ++i)
      if (!a0(i, j).is_zero()) {
        nz_cols.push_back(j);
        break;
      }
  if (nz_rows.empty()) return 0;
  const Matrix a = a0.select_rows(nz_rows).select_cols(nz_cols);
  const size_t R = a.rows(), C = a.cols();
  upper = std::min({upper, R, C});
  const unsigned n = K->nvars();
  FieldPtr base = K->base();

  // Clear denominators row by row; the rank is unchanged.
  std::vector<Poly> polys(R * C);
  std::vector<std::vector<uint32_t>> row_deg(n, std::vector<uint32_t>(R, 0)), col_deg(n, std::vector<uint32_t>(C, 0));
  for (size_t i = 0; i < R; ++i) {
    Poly l = Poly::constant(base, n, base->one(), MonomialOrder::deglex());
    for (size_t j = 0; j < C; ++j)
      if (!a(i, j).is_zero()) l = poly_lcm(l, a(i, j).ratfunc().den);
    for (size_t j = 0; j < C; ++j) {
      if (a(i, j).is_zero()) {
        polys[i * C + j] = Poly(base, n, MonomialOrder::deglex());
        continue;
      }
      const auto& v = a(i, j).ratfunc();
      Poly e = v.den == l ? v.num : v.num * *divide_exact(l, v.den);
      for (unsigned t = 0; t < n; ++t) {
        const uint32_t d = e.degree_in(t);
        row_deg[t][i] = std::max(row_deg[t][i], d);
        col_deg[t][j] = std::max(col_deg[t][j], d);
      }
      polys[i * C + j] = std::move(e);
    }
  }

  // Per-variable grid sizes that witness any nonzero (rho+1)-minor.
  auto grid_sizes = [&](size_t rho) {
    std::vector<uint64_t> s(n);
    for (unsigned t = 0; t < n; ++t)
      s[t] = uint64_t{std::min(top_sum(row_deg[t], rho + 1), top_sum(col_deg[t], rho + 1))} + 1;
    return s;
  };

  const auto worst = grid_sizes(upper > 0 ? upper - 1 : 0);
  uint64_t need = 64;
  for (auto s : worst) need = std::max(need, s);
  const uint32_t p = K->characteristic();
  const unsigned d0 = base->kind() == FieldKind::Extension ? base->degree() : 1;
  FieldPtr S = nullptr;
  for (unsigned k = d0; k <= 20; k += d0) {
    double q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    if (q > double(1 << 20)) break;
    if (q >= double(need)) {
      S = Field::finite(p, k);
      break;
    }
  }
  double grid_points = 1;
  for (auto s : worst) grid_points *= double(s);
  const double cost = grid_points * double(R) * double(C) * double(std::min(R, C));
  if (!S) return std::min(symbolic_rank(a), upper);

  std::vector<Poly> sp(R * C);
  for (size_t k = 0; k < polys.size(); ++k)
    sp[k] = polys[k].map_coeffs(S, [&](const FieldElem& c) { return S->embed(c); });

  auto rank_at = [&](const std::vector<FieldElem>& pt) {
    Matrix m(S, R, C);
    for (size_t i = 0; i < R; ++i)
      for (size_t j = 0; j < C; ++j)
        if (!sp[i * C + j].is_zero()) m(i, j) = sp[i * C + j].evaluate(pt);
    return rank(m);
  };

  size_t rho = 0;
  // A few scattered points first: the generic rank is usually reached at once.
  uint64_t state = 0x9E3779B97F4A7C15ull;
  for (int trial = 0; trial < 3 && rho < upper; ++trial) {
    std::vector<FieldElem> pt(n);
    for (unsigned t = 0; t < n; ++t) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      pt[t] = S->element_at((state >> 33) % S->size());
    }
    rho = std::max(rho, rank_at(pt));
  }
  if (rho >= upper) return upper;
  if (cost > kGridBudget) return std::min(symbolic_rank(a), upper);

  // Exhaust the witnessing grid for rank rho + 1; enlarge when rho grows.
  bool improved = true;
  while (improved && rho < upper) {
    improved = false;
    const auto sizes = grid_sizes(rho);
    std::vector<uint64_t> idx(n, 0);
    while (true) {
      std::vector<FieldElem> pt(n);
      for (unsigned t = 0; t < n; ++t) pt[t] = S->element_at(idx[t]);
      const size_t rk = rank_at(pt);
      if (rk > rho) {
        rho = rk;
        improved = true;
        break;
      }
      unsigned t = 0;
      while (t < n && ++idx[t] == sizes[t]) idx[t++] = 0;
      if (t == n) break;
    }
  }
  return std::min(rho, upper);
}

}  // namespace rankvar
