#include "codomin/linalg.hpp"

#include <utility>

#include "codomin/error.hpp"

namespace codomin {

namespace {

using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Echelon rref_rows(RowMatrix a) {
  const Index rows = a.rows(), cols = a.cols();
  Echelon out;
  Index r = 0;
  std::vector<Index> nz;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    if (!a(r, c).is_one()) {
      const Scalar inv = a(r, c).inverse();
      for (Index j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    nz.clear();
    for (Index j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) nz.push_back(j);
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar factor = a(i, c);
      for (Index j : nz) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = a.topRows(r);
  return out;
}

RowMatrix bound_rows(const Matrix& m, Field f) {
  RowMatrix a(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).bind(f);
  return a;
}

Matrix kernel_rows(const Echelon& e, Index cols, Field f) {
  std::vector<bool> is_pivot(cols, false);
  for (Index p : e.pivots) is_pivot[p] = true;
  Matrix out = zeros(f, cols - e.rank(), cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    out(k, j) = Scalar(f, 1);
    for (Index i = 0; i < e.rank(); ++i) out(k, e.pivots[i]) = -e.reduced(i, j);
    ++k;
  }
  return out;
}

}  // namespace

Matrix zeros(Field f, Index rows, Index cols) {
  return Matrix::Constant(rows, cols, Scalar(f, 0));
}

Matrix identity(Field f, Index n) {
  Matrix m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Vector unit_vector(Field f, Index n, Index i) {
  Vector v = Vector::Constant(n, Scalar(f, 0));
  v(i) = Scalar(f, 1);
  return v;
}

Matrix bind(const Matrix& m, Field f) {
  Matrix out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = m(i, j).bind(f);
  return out;
}

Matrix flip(Field f, Index a, Index b) {
  Matrix p = zeros(f, a * b, a * b);
  for (Index i = 0; i < a; ++i)
    for (Index j = 0; j < b; ++j) p(j * a + i, i * b + j) = Scalar(f, 1);
  return p;
}

Matrix kron_apply(Field f, const Matrix& a, const Matrix& b, const Matrix& x) {
  const Index ca = a.cols(), cb = b.cols(), rb = b.rows();
  if (x.rows() != ca * cb) raise(Errc::DimensionMismatch, "kron_apply: operand has the wrong number of rows");
  using Entries = std::vector<std::pair<Index, Scalar>>;
  auto nonzero_columns = [](const Matrix& m) {
    std::vector<Entries> cols(m.cols());
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < m.rows(); ++i)
        if (!m(i, j).is_zero()) cols[j].emplace_back(i, m(i, j));
    return cols;
  };
  const auto ac = nonzero_columns(a), bc = nonzero_columns(b);
  Matrix out = zeros(f, a.rows() * rb, x.cols());
  for (Index c = 0; c < x.cols(); ++c) {
    for (Index i = 0; i < ca; ++i) {
      if (ac[i].empty()) continue;
      for (Index j = 0; j < cb; ++j) {
        const Scalar& xv = x(i * cb + j, c);
        if (xv.is_zero() || bc[j].empty()) continue;
        for (const auto& [r, av] : ac[i]) {
          const Scalar t = av * xv;
          for (const auto& [s, bv] : bc[j]) out(r * rb + s, c) += t * bv;
        }
      }
    }
  }
  return out;
}

Echelon rref(const Matrix& m, Field f) { return rref_rows(bound_rows(m, f)); }

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(Field f, Index ambient_dim) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient_dim;
  s.basis_ = zeros(f, 0, ambient_dim);
  return s;
}

Subspace Subspace::full(Field f, Index ambient_dim) {
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient_dim;
  s.basis_ = identity(f, ambient_dim);
  for (Index i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(Field f, Index ambient_dim, const Matrix& rows) {
  if (rows.cols() != ambient_dim)
    raise(Errc::DimensionMismatch, "spanning rows have " + std::to_string(rows.cols()) +
                                       " columns, ambient dimension is " + std::to_string(ambient_dim));
  Echelon e = rref(rows, f);
  Subspace s;
  s.field_ = f;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::column_span(Field f, const Matrix& m) { return span(f, m.rows(), m.transpose()); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) raise(Errc::DimensionMismatch, "vector length differs from the ambient dimension");
  Vector r = v;
  for (Index i = 0; i < dim(); ++i) {
    const Scalar c = r(pivots_[i]);
    if (c.is_zero()) continue;
    for (Index j = 0; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r(j) -= c * basis_(i, j);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) raise(Errc::DimensionMismatch, "subspaces of different ambient spaces");
  if (other.dim() > dim()) return false;
  for (Index i = 0; i < other.dim(); ++i)
    if (!contains(Vector(other.basis_.row(i).transpose()))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(dim());
  for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]).bind(field_);
  return c;
}

// ---------------------------------------------------------------------------

KernelImage kernel_image_rank(const Matrix& m, Field f) {
  const Echelon e = rref(m, f);
  KernelImage out;
  out.rank = e.rank();
  out.kernel = Subspace::span(f, m.cols(), kernel_rows(e, m.cols(), f));
  out.image = Subspace::column_span(f, m);
  return out;
}

Subspace kernel(const Matrix& m, Field f) {
  const Echelon e = rref(m, f);
  return Subspace::span(f, m.cols(), kernel_rows(e, m.cols(), f));
}

Subspace image(const Matrix& m, Field f) { return Subspace::column_span(f, m); }

Index rank(const Matrix& m, Field f) { return rref(m, f).rank(); }

std::optional<LinearSolution> solve_linear(const Matrix& m, const Vector& b, Field f) {
  if (b.size() != m.rows()) raise(Errc::DimensionMismatch, "right-hand side length differs from the row count");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const Echelon e = rref(aug, f);
  if (e.rank() > 0 && e.pivots.back() == m.cols()) return std::nullopt;
  LinearSolution out;
  out.particular = Vector::Constant(m.cols(), Scalar(f, 0));
  for (Index i = 0; i < e.rank(); ++i) out.particular(e.pivots[i]) = e.reduced(i, m.cols());
  out.kernel = kernel(m, f);
  return out;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) raise(Errc::DimensionMismatch, "sum of subspaces of different ambient spaces");
  Matrix rows(u.dim() + w.dim(), u.ambient_dim());
  rows.topRows(u.dim()) = u.basis();
  rows.bottomRows(w.dim()) = w.basis();
  return Subspace::span(u.field(), u.ambient_dim(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    raise(Errc::DimensionMismatch, "intersection of subspaces of different ambient spaces");
  const Matrix pu = quotient_basis(u).projection;
  const Matrix pw = quotient_basis(w).projection;
  Matrix stacked(pu.rows() + pw.rows(), u.ambient_dim());
  stacked.topRows(pu.rows()) = pu;
  stacked.bottomRows(pw.rows()) = pw;
  return kernel(stacked, u.field());
}

bool contains(const Subspace& u, const Subspace& w) { return u.contains(w); }

QuotientMaps quotient_basis(const Subspace& u) {
  const Field f = u.field();
  const Index n = u.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (Index p : u.pivots()) is_pivot[p] = true;
  std::vector<Index> free;
  for (Index j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  const Index q = static_cast<Index>(free.size());
  QuotientMaps out;
  out.projection = zeros(f, q, n);
  out.section = zeros(f, n, q);
  for (Index k = 0; k < q; ++k) {
    out.projection(k, free[k]) = Scalar(f, 1);
    out.section(free[k], k) = Scalar(f, 1);
  }
  // Basis row i is e_{pivot i} + Σ_free u_ij e_j and must map to zero.
  for (Index i = 0; i < u.dim(); ++i)
    for (Index k = 0; k < q; ++k) out.projection(k, u.pivots()[i]) = -u.basis()(i, free[k]);
  return out;
}

Subspace map_subspace(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) raise(Errc::DimensionMismatch, "map and subspace have incompatible shapes");
  return Subspace::column_span(u.field(), m * u.inclusion());
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim()) raise(Errc::DimensionMismatch, "map and subspace have incompatible shapes");
  return kernel(quotient_basis(w).projection * m, w.field());
}

Subspace tensor(const Subspace& u, const Subspace& w) {
  return Subspace::span(u.field(), u.ambient_dim() * w.ambient_dim(), kron(u.basis(), w.basis()));
}

}  // namespace codomin
