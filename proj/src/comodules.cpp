#include "codomin/comodules.hpp"

#include "codomin/error.hpp"

namespace codomin {

namespace {

void check_comodule_shape(const Coalgebra& c, Index dim, const Matrix& rho, const char* name) {
  if (rho.rows() != dim * c.dim || rho.cols() != dim)
    raise(Errc::ShapeMismatch, std::string(name) + " has shape " + std::to_string(rho.rows()) + "x" +
                                   std::to_string(rho.cols()) + ", expected " + std::to_string(dim * c.dim) + "x" +
                                   std::to_string(dim));
  for (Index j = 0; j < rho.cols(); ++j)
    for (Index i = 0; i < rho.rows(); ++i)
      if (rho(i, j).bound() && !(rho(i, j).field() == c.field))
        raise(Errc::FieldMismatch, std::string(name) + " has an entry outside " + c.field.str());
}

void require_same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (!(a.field == b.field)) raise(Errc::FieldMismatch, "comodules over different fields");
  if (!(a == b)) raise(Errc::ShapeMismatch, "comodules over different coalgebras");
}

Matrix drop_zero_rows(const Matrix& m) {
  std::vector<Index> keep;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        keep.push_back(i);
        break;
      }
  Matrix out(static_cast<Index>(keep.size()), m.cols());
  for (Index k = 0; k < out.rows(); ++k) out.row(k) = m.row(keep[k]);
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

/// Solves the colinearity system for maps V → W together with the affine
/// constraint `extra * vec(φ) = rhs`.
std::optional<Matrix> solve_colinear(const Comodule& v, const Comodule& w, const Matrix& extra, const Vector& rhs) {
  const Field f = v.over.field;
  const Matrix hom = drop_zero_rows(colinearity_system(v, w));
  const Matrix a = stack(hom, extra);
  Vector b = Vector::Constant(a.rows(), Scalar(f, 0));
  b.tail(rhs.size()) = rhs;
  auto sol = solve_linear(a, b, f);
  if (!sol) return std::nullopt;
  return unflatten(sol->particular, w.dim, v.dim);
}

/// Rows expressing vec(left · φ · right) for unknown φ (rows × cols), flattened.
Matrix composition_rows(const Matrix& left, const Matrix& right, Index rows, Index cols, Field f) {
  // (L φ R)[i, j] = Σ_{a,b} L[i, a] φ[a, b] R[b, j]
  Matrix out = zeros(f, left.rows() * right.cols(), rows * cols);
  for (Index i = 0; i < left.rows(); ++i)
    for (Index a = 0; a < rows; ++a) {
      if (left(i, a).is_zero()) continue;
      for (Index b = 0; b < cols; ++b)
        for (Index j = 0; j < right.cols(); ++j)
          if (!right(b, j).is_zero()) out(i * right.cols() + j, a * cols + b) += left(i, a) * right(b, j);
    }
  return out;
}

}  // namespace

const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

bool operator==(const Comodule& a, const Comodule& b) {
  return a.side == b.side && a.dim == b.dim && a.over == b.over && equal(a.rho, b.rho);
}

std::vector<std::string> violations(const Comodule& v) {
  check_comodule_shape(v.over, v.dim, v.rho, "coaction");
  const Field f = v.over.field;
  const Matrix iv = identity(f, v.dim), ic = identity(f, v.over.dim);
  std::vector<std::string> out;
  if (v.side == Side::Right) {
    if (!equal(kron_apply(f, v.rho, ic, v.rho), kron_apply(f, iv, v.over.delta, v.rho)))
      out.push_back("coassociativity");
    if (!equal(kron_apply(f, iv, v.over.counit, v.rho), iv)) out.push_back("counit");
  } else {
    if (!equal(kron_apply(f, ic, v.rho, v.rho), kron_apply(f, v.over.delta, iv, v.rho)))
      out.push_back("coassociativity");
    if (!equal(kron_apply(f, v.over.counit, iv, v.rho), iv)) out.push_back("counit");
  }
  return out;
}

std::vector<std::string> violations(const Bicomodule& x) {
  std::vector<std::string> out;
  for (const auto& s : violations(x.left_comodule())) out.push_back("left-" + s);
  for (const auto& s : violations(x.right_comodule())) out.push_back("right-" + s);
  const Field f = x.over.field;
  const Matrix ic = identity(f, x.over.dim);
  if (!equal(kron_apply(f, ic, x.right, x.left), kron_apply(f, x.left, ic, x.right))) out.push_back("compatibility");
  return out;
}

Comodule regular_comodule(const Coalgebra& c, Side side) { return {c, side, c.dim, c.delta}; }

Bicomodule regular_bicomodule(const Coalgebra& c) { return {c, c.dim, c.delta, c.delta}; }

Comodule trivial_comodule(const Bialgebra& h, Index dim, Side side) {
  const Matrix iv = identity(h.field(), dim);
  const Matrix& one = h.algebra.unit;
  return {h.coalgebra, side, dim, side == Side::Right ? kron(iv, one) : kron(one, iv)};
}

Comodule cofree_comodule(const Coalgebra& c, Index dim, Side side) {
  const Matrix iv = identity(c.field, dim);
  return {c, side, dim * c.dim, side == Side::Right ? kron(iv, c.delta) : kron(c.delta, iv)};
}

Comodule corestrict(const Comodule& v, const CoalgebraMap& f) {
  require_same_coalgebra(v.over, f.src);
  const Field k = v.over.field;
  const Matrix iv = identity(k, v.dim);
  Matrix rho = v.side == Side::Right ? kron_apply(k, iv, f.matrix, v.rho) : kron_apply(k, f.matrix, iv, v.rho);
  return {f.dst, v.side, v.dim, std::move(rho)};
}

Subspace cotensor(const Comodule& v, const Comodule& w) {
  if (v.side != Side::Right || w.side != Side::Left)
    raise(Errc::ShapeMismatch, "cotensor needs a right comodule and a left comodule");
  require_same_coalgebra(v.over, w.over);
  const Field f = v.over.field;
  const Matrix diff = kron(v.rho, identity(f, w.dim)) - kron(identity(f, v.dim), w.rho);
  return kernel(drop_zero_rows(diff), f);
}

Subspace coinvariants(const Comodule& v, const Bialgebra& h) {
  require_same_coalgebra(v.over, h.coalgebra);
  const Field f = h.field();
  const Matrix iv = identity(f, v.dim);
  const Matrix fixed = v.side == Side::Right ? kron(iv, h.algebra.unit) : kron(h.algebra.unit, iv);
  return kernel(drop_zero_rows(v.rho - fixed), f);
}

Subspace coinvariants(const Comodule& v, const BialgebraMap& pi) {
  return coinvariants(corestrict(v, as_coalgebra_map(pi)), pi.dst);
}

Matrix colinearity_system(const Comodule& v, const Comodule& w) {
  if (v.side != w.side) raise(Errc::ShapeMismatch, "colinear maps need comodules on the same side");
  require_same_coalgebra(v.over, w.over);
  const Field f = v.over.field;
  const Index n = v.over.dim, dv = v.dim, dw = w.dim;
  Matrix m = zeros(f, dw * n * dv, dw * dv);
  if (v.side == Side::Right) {
    for (Index w0 = 0; w0 < dw; ++w0)
      for (Index c = 0; c < n; ++c)
        for (Index x = 0; x < dv; ++x) {
          const Index row = (w0 * n + c) * dv + x;
          for (Index x1 = 0; x1 < dv; ++x1) {
            const Scalar& r = v.rho(x1 * n + c, x);
            if (!r.is_zero()) m(row, w0 * dv + x1) += r;
          }
          for (Index w1 = 0; w1 < dw; ++w1) {
            const Scalar& r = w.rho(w0 * n + c, w1);
            if (!r.is_zero()) m(row, w1 * dv + x) -= r;
          }
        }
  } else {
    for (Index c = 0; c < n; ++c)
      for (Index w0 = 0; w0 < dw; ++w0)
        for (Index x = 0; x < dv; ++x) {
          const Index row = (c * dw + w0) * dv + x;
          for (Index x1 = 0; x1 < dv; ++x1) {
            const Scalar& r = v.rho(c * dv + x1, x);
            if (!r.is_zero()) m(row, w0 * dv + x1) += r;
          }
          for (Index w1 = 0; w1 < dw; ++w1) {
            const Scalar& r = w.rho(c * dw + w0, w1);
            if (!r.is_zero()) m(row, w1 * dv + x) -= r;
          }
        }
  }
  return m;
}

Subspace hom_colinear(const Comodule& v, const Comodule& w) {
  return kernel(drop_zero_rows(colinearity_system(v, w)), v.over.field);
}

Matrix unflatten(const Vector& x, Index rows, Index cols) {
  if (x.size() != rows * cols) raise(Errc::DimensionMismatch, "flattened map has the wrong length");
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = x(i * cols + j);
  return m;
}

Vector flatten(const Matrix& m) {
  Vector x(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) x(i * m.cols() + j) = m(i, j);
  return x;
}

Comodule tensor_comodules(const Comodule& w, const Comodule& u, const Bialgebra& h) {
  if (w.side != Side::Right || u.side != Side::Right)
    raise(Errc::Unsupported, "tensor products are implemented for right comodules");
  require_same_coalgebra(w.over, h.coalgebra);
  require_same_coalgebra(u.over, h.coalgebra);
  const Field f = h.field();
  const Index n = h.dim(), dw = w.dim, du = u.dim, d = dw * du;
  Matrix rho = zeros(f, d * n, d);
  for (Index x = 0; x < dw; ++x)
    for (Index y = 0; y < du; ++y)
      for (Index p = 0; p < dw * n; ++p) {
        const Scalar& a = w.rho(p, x);
        if (a.is_zero()) continue;
        const Index x0 = p / n, c1 = p % n;
        for (Index q = 0; q < du * n; ++q) {
          const Scalar& b = u.rho(q, y);
          if (b.is_zero()) continue;
          const Index y0 = q / n, c2 = q % n;
          const Scalar ab = a * b;
          for (Index c = 0; c < n; ++c) {
            const Scalar& m = h.algebra.mul(c, c1 * n + c2);
            if (!m.is_zero()) rho((x0 * du + y0) * n + c, x * du + y) += ab * m;
          }
        }
      }
  return {h.coalgebra, Side::Right, d, rho};
}

Comodule dual_comodule(const Comodule& v, const HopfAlgebra& h) {
  if (v.side != Side::Right) raise(Errc::Unsupported, "dual comodules are implemented for right comodules");
  require_same_coalgebra(v.over, h.coalgebra());
  const Field f = h.field();
  const Index n = h.dim(), m = v.dim;
  Matrix rho = zeros(f, m * n, m);
  // ρ*(e^a) = Σ_b e^b ⊗ Σ_c ρ(a·n + c, b) S(e_c)
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      for (Index c = 0; c < n; ++c) {
        const Scalar& r = v.rho(a * n + c, b);
        if (r.is_zero()) continue;
        for (Index d = 0; d < n; ++d)
          if (!h.antipode(d, c).is_zero()) rho(b * n + d, a) += r * h.antipode(d, c);
      }
  return {h.coalgebra(), Side::Right, m, rho};
}

std::optional<Matrix> injectivity_witness(const Comodule& v) {
  check_comodule_shape(v.over, v.dim, v.rho, "coaction");
  const Field f = v.over.field;
  const Comodule free = cofree_comodule(v.over, v.dim, v.side);
  // σ: free → V colinear with σ∘ρ = I.
  const Matrix extra = composition_rows(identity(f, v.dim), v.rho, v.dim, free.dim, f);
  return solve_colinear(free, v, extra, flatten(identity(f, v.dim)));
}

std::optional<Matrix> find_comodule_splitting(const CoalgebraMap& f, Side side) {
  const Field k = f.src.field;
  if (rank(f.matrix, k) != f.dst.dim) raise(Errc::NotSurjective, "the morphism is not surjective");
  const Comodule target = corestrict(regular_comodule(f.src, side), f);
  const Comodule source = regular_comodule(f.dst, side);
  // s: D → C colinear with f∘s = I.
  const Matrix extra = composition_rows(f.matrix, identity(k, f.dst.dim), f.src.dim, f.dst.dim, k);
  return solve_colinear(source, target, extra, flatten(identity(k, f.dst.dim)));
}

}  // namespace codomin
