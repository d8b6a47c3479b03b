#include "codomin/structures.hpp"

#include <string>

#include "codomin/error.hpp"

namespace codomin {

namespace {

std::string shape_str(Index r, Index c) { return std::to_string(r) + "x" + std::to_string(c); }

void check_matrix(const char* name, const Matrix& m, Index rows, Index cols, Field f) {
  if (m.rows() != rows || m.cols() != cols)
    raise(Errc::ShapeMismatch, std::string(name) + " has shape " + shape_str(m.rows(), m.cols()) + ", expected " +
                                   shape_str(rows, cols));
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      if (m(i, j).bound() && !(m(i, j).field() == f))
        raise(Errc::FieldMismatch, std::string(name) + " has an entry over " + m(i, j).field().str() +
                                       ", expected " + f.str());
}

void check_shapes(const Coalgebra& c) {
  check_matrix("delta", c.delta, c.dim * c.dim, c.dim, c.field);
  check_matrix("counit", c.counit, 1, c.dim, c.field);
}

void check_shapes(const Algebra& a) {
  check_matrix("mul", a.mul, a.dim, a.dim * a.dim, a.field);
  check_matrix("unit", a.unit, a.dim, 1, a.field);
}

void check_shapes(const Bialgebra& b) {
  check_shapes(b.coalgebra);
  check_shapes(b.algebra);
  if (!(b.coalgebra.field == b.algebra.field)) raise(Errc::FieldMismatch, "coalgebra and algebra fields differ");
  if (b.coalgebra.dim != b.algebra.dim) raise(Errc::ShapeMismatch, "coalgebra and algebra dimensions differ");
}

void check_shapes(const HopfAlgebra& h) {
  check_shapes(h.bialgebra);
  check_matrix("antipode", h.antipode, h.dim(), h.dim(), h.field());
}

template <class Object>
void check_morphism_shapes(const Morphism<Object>& f) {
  if (!(field_of(f.src) == field_of(f.dst))) raise(Errc::FieldMismatch, "source and target fields differ");
  check_matrix("morphism", f.matrix, dim_of(f.dst), dim_of(f.src), field_of(f.src));
}

/// mul∘(x⊗y) for column blocks x, y, without the Kronecker product:
/// (mul (x⊗y))ᵀ = (xᵀ⊗yᵀ) mulᵀ.
Matrix mul_after(const Algebra& a, const Matrix& x, const Matrix& y) {
  return kron_apply(a.field, x.transpose(), y.transpose(), a.mul.transpose()).transpose();
}

void append(std::vector<std::string>& out, std::vector<std::string> more) {
  out.insert(out.end(), more.begin(), more.end());
}

Matrix coordinate_rows(const Subspace& s) {
  Matrix r = zeros(s.field(), s.dim(), s.ambient_dim());
  for (Index i = 0; i < s.dim(); ++i) r(i, s.pivots()[i]) = Scalar(s.field(), 1);
  return r;
}

void require_field(const Subspace& k, Field f, Index n) {
  if (!(k.field() == f)) raise(Errc::FieldMismatch, "subspace lives over " + k.field().str());
  if (k.ambient_dim() != n) raise(Errc::DimensionMismatch, "subspace ambient dimension differs from the object");
}

Algebra quotient_algebra(const Algebra& a, const Matrix& p, const Matrix& s) {
  return {a.field, p.rows(), p * mul_after(a, s, s), p * a.unit};
}

std::vector<std::string> ideal_failures(const Algebra& a, const Subspace& k) {
  std::vector<std::string> out;
  if (!is_left_ideal(a, k)) out.push_back("left-ideal");
  if (!is_right_ideal(a, k)) out.push_back("right-ideal");
  return out;
}

}  // namespace

void throw_axiom_violation(std::vector<std::string> names) {
  std::string msg = "violated";
  for (const auto& n : names) msg += " " + n;
  raise(Errc::AxiomViolation, msg, std::move(names));
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  return a.field == b.field && a.dim == b.dim && equal(a.delta, b.delta) && equal(a.counit, b.counit);
}
bool operator==(const Algebra& a, const Algebra& b) {
  return a.field == b.field && a.dim == b.dim && equal(a.mul, b.mul) && equal(a.unit, b.unit);
}
bool operator==(const Bialgebra& a, const Bialgebra& b) {
  return a.coalgebra == b.coalgebra && a.algebra == b.algebra;
}
bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  return a.bialgebra == b.bialgebra && equal(a.antipode, b.antipode);
}

// ---------------------------------------------------------------------------
// Axioms

std::vector<std::string> violations(const Coalgebra& c) {
  check_shapes(c);
  const Field f = c.field;
  const Matrix id = identity(f, c.dim);
  std::vector<std::string> out;
  if (!equal(kron_apply(f, c.delta, id, c.delta), kron_apply(f, id, c.delta, c.delta)))
    out.push_back("coassociativity");
  if (!equal(kron_apply(f, c.counit, id, c.delta), id)) out.push_back("counit-left");
  if (!equal(kron_apply(f, id, c.counit, c.delta), id)) out.push_back("counit-right");
  return out;
}

std::vector<std::string> violations(const Algebra& a) {
  check_shapes(a);
  const Matrix id = identity(a.field, a.dim);
  std::vector<std::string> out;
  if (!equal(mul_after(a, a.mul, id), mul_after(a, id, a.mul))) out.push_back("associativity");
  if (!equal(mul_after(a, a.unit, id), id)) out.push_back("unit-left");
  if (!equal(mul_after(a, id, a.unit), id)) out.push_back("unit-right");
  return out;
}

std::vector<std::string> violations(const Bialgebra& b) {
  check_shapes(b);
  const Coalgebra& c = b.coalgebra;
  const Algebra& a = b.algebra;
  const Field f = c.field;
  const Index n = c.dim;
  std::vector<std::string> out = violations(c);
  append(out, violations(a));

  const Matrix lhs = c.delta * a.mul;
  bool multiplicative = true;
  for (Index i = 0; i < n && multiplicative; ++i)
    for (Index j = 0; j < n && multiplicative; ++j)
      if (!equal(lhs.col(i * n + j), tensor_product_multiply(a, a, c.delta.col(i), c.delta.col(j))))
        multiplicative = false;
  if (!multiplicative) out.push_back("delta-multiplicative");
  if (!equal(c.counit * a.mul, kron(c.counit, c.counit))) out.push_back("counit-multiplicative");
  if (!equal(c.delta * a.unit, kron(a.unit, a.unit))) out.push_back("delta-unit");
  if (!equal(c.counit * a.unit, identity(f, 1))) out.push_back("counit-unit");
  return out;
}

std::vector<std::string> violations(const HopfAlgebra& h) {
  check_shapes(h);
  const Coalgebra& c = h.coalgebra();
  const Algebra& a = h.algebra();
  const Field f = h.field();
  const Matrix id = identity(f, h.dim());
  std::vector<std::string> out = violations(h.bialgebra);
  const Matrix target = a.unit * c.counit;
  if (!equal(a.mul * kron_apply(f, h.antipode, id, c.delta), target)) out.push_back("antipode-left");
  if (!equal(a.mul * kron_apply(f, id, h.antipode, c.delta), target)) out.push_back("antipode-right");
  return out;
}

namespace {

void coalgebra_map_failures(const CoalgebraMap& m, std::vector<std::string>& out) {
  const Field f = m.src.field;
  if (!equal(kron_apply(f, m.matrix, m.matrix, m.src.delta), m.dst.delta * m.matrix)) out.push_back("preserves-delta");
  if (!equal(m.dst.counit * m.matrix, m.src.counit)) out.push_back("preserves-counit");
}

void algebra_map_failures(const AlgebraMap& m, std::vector<std::string>& out) {
  if (!equal(m.matrix * m.src.mul, mul_after(m.dst, m.matrix, m.matrix))) out.push_back("preserves-mul");
  if (!equal(m.matrix * m.src.unit, m.dst.unit)) out.push_back("preserves-unit");
}

}  // namespace

std::vector<std::string> violations(const CoalgebraMap& m) {
  check_morphism_shapes(m);
  std::vector<std::string> out;
  coalgebra_map_failures(m, out);
  return out;
}

std::vector<std::string> violations(const AlgebraMap& m) {
  check_morphism_shapes(m);
  std::vector<std::string> out;
  algebra_map_failures(m, out);
  return out;
}

std::vector<std::string> violations(const BialgebraMap& m) {
  check_morphism_shapes(m);
  std::vector<std::string> out;
  coalgebra_map_failures(as_coalgebra_map(m), out);
  algebra_map_failures(as_algebra_map(m), out);
  return out;
}

std::vector<std::string> violations(const HopfMap& m) {
  check_morphism_shapes(m);
  std::vector<std::string> out;
  coalgebra_map_failures(as_coalgebra_map(m), out);
  algebra_map_failures(as_algebra_map(m), out);
  if (!equal(m.matrix * m.src.antipode, m.dst.antipode * m.matrix)) out.push_back("preserves-antipode");
  return out;
}

// ---------------------------------------------------------------------------
// Duality and tensor products

Algebra dualize(const Coalgebra& c) { return {c.field, c.dim, c.delta.transpose(), c.counit.transpose()}; }
Coalgebra dualize(const Algebra& a) { return {a.field, a.dim, a.mul.transpose(), a.unit.transpose()}; }
Bialgebra dualize(const Bialgebra& b) { return {dualize(b.algebra), dualize(b.coalgebra)}; }
HopfAlgebra dualize(const HopfAlgebra& h) { return {dualize(h.bialgebra), h.antipode.transpose()}; }
AlgebraMap dualize(const CoalgebraMap& f) { return {dualize(f.dst), dualize(f.src), f.matrix.transpose()}; }
CoalgebraMap dualize(const AlgebraMap& f) { return {dualize(f.dst), dualize(f.src), f.matrix.transpose()}; }

Coalgebra tensor_objects(const Coalgebra& c, const Coalgebra& d) {
  if (!(c.field == d.field)) raise(Errc::FieldMismatch, "tensor product of coalgebras over different fields");
  const Field f = c.field;
  const Index n = c.dim, m = d.dim, nm = n * m;
  Coalgebra out{f, nm, zeros(f, nm * nm, nm), kron(c.counit, d.counit)};
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < m; ++y)
      for (Index c12 = 0; c12 < n * n; ++c12) {
        const Scalar& cv = c.delta(c12, x);
        if (cv.is_zero()) continue;
        const Index c1 = c12 / n, c2 = c12 % n;
        for (Index d12 = 0; d12 < m * m; ++d12) {
          const Scalar& dv = d.delta(d12, y);
          if (dv.is_zero()) continue;
          const Index d1 = d12 / m, d2 = d12 % m;
          out.delta((c1 * m + d1) * nm + (c2 * m + d2), x * m + y) += cv * dv;
        }
      }
  return out;
}

Algebra tensor_objects(const Algebra& a, const Algebra& b) {
  if (!(a.field == b.field)) raise(Errc::FieldMismatch, "tensor product of algebras over different fields");
  const Field f = a.field;
  const Index n = a.dim, m = b.dim, nm = n * m;
  Algebra out{f, nm, zeros(f, nm, nm * nm), kron(a.unit, b.unit)};
  for (Index a12 = 0; a12 < n * n; ++a12)
    for (Index b12 = 0; b12 < m * m; ++b12) {
      const Index a1 = a12 / n, a2 = a12 % n, b1 = b12 / m, b2 = b12 % m;
      const Index col = (a1 * m + b1) * nm + (a2 * m + b2);
      for (Index i = 0; i < n; ++i) {
        if (a.mul(i, a12).is_zero()) continue;
        for (Index j = 0; j < m; ++j)
          if (!b.mul(j, b12).is_zero()) out.mul(i * m + j, col) = a.mul(i, a12) * b.mul(j, b12);
      }
    }
  return out;
}

Bialgebra tensor_objects(const Bialgebra& a, const Bialgebra& b) {
  return {tensor_objects(a.coalgebra, b.coalgebra), tensor_objects(a.algebra, b.algebra)};
}

HopfAlgebra tensor_objects(const HopfAlgebra& a, const HopfAlgebra& b) {
  return {tensor_objects(a.bialgebra, b.bialgebra), kron(a.antipode, b.antipode)};
}

bool is_cocommutative(const Coalgebra& c) {
  check_shapes(c);
  const Index n = c.dim;
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (c.delta(i * n + j, k) != c.delta(j * n + i, k)) return false;
  return true;
}

bool is_commutative(const Algebra& a) {
  check_shapes(a);
  const Index n = a.dim;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (!equal(a.mul.col(i * n + j), a.mul.col(j * n + i))) return false;
  return true;
}

Vector tensor_product_multiply(const Algebra& a, const Algebra& b, const Vector& x, const Vector& y) {
  const Index n = a.dim, m = b.dim;
  if (x.size() != n * m || y.size() != n * m) raise(Errc::DimensionMismatch, "tensor element has the wrong length");
  Vector out = Vector::Constant(n * m, Scalar(a.field, 0));
  for (Index p = 0; p < n * m; ++p) {
    if (x(p).is_zero()) continue;
    const Index i = p / m, j = p % m;
    for (Index q = 0; q < n * m; ++q) {
      if (y(q).is_zero()) continue;
      const Index k = q / m, l = q % m;
      const Scalar coef = x(p) * y(q);
      for (Index r = 0; r < n; ++r) {
        const Scalar& av = a.mul(r, i * n + k);
        if (av.is_zero()) continue;
        for (Index s = 0; s < m; ++s) {
          const Scalar& bv = b.mul(s, j * m + l);
          if (!bv.is_zero()) out(r * m + s) += coef * av * bv;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subspace tests

bool is_coideal(const Coalgebra& c, const Subspace& k) {
  require_field(k, c.field, c.dim);
  if (!is_zero(c.counit * k.inclusion())) return false;
  const Matrix p = quotient_basis(k).projection;
  return is_zero(kron_apply(c.field, p, p, c.delta * k.inclusion()));
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& e) {
  require_field(e, c.field, c.dim);
  const Matrix p = quotient_basis(e).projection;
  const Matrix id = identity(c.field, c.dim);
  const Matrix image = c.delta * e.inclusion();
  return is_zero(kron_apply(c.field, p, id, image)) && is_zero(kron_apply(c.field, id, p, image));
}

bool is_left_ideal(const Algebra& a, const Subspace& k) {
  require_field(k, a.field, a.dim);
  return is_zero(quotient_basis(k).projection * mul_after(a, identity(a.field, a.dim), k.inclusion()));
}

bool is_right_ideal(const Algebra& a, const Subspace& k) {
  require_field(k, a.field, a.dim);
  return is_zero(quotient_basis(k).projection * mul_after(a, k.inclusion(), identity(a.field, a.dim)));
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& k) { return is_left_ideal(a, k) && is_right_ideal(a, k); }

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  require_field(s, a.field, a.dim);
  if (!s.contains(Vector(a.unit.col(0)))) return false;
  return is_zero(quotient_basis(s).projection * mul_after(a, s.inclusion(), s.inclusion()));
}

bool is_stable(const Matrix& m, const Subspace& k) {
  if (m.rows() != k.ambient_dim() || m.cols() != k.ambient_dim())
    raise(Errc::DimensionMismatch, "endomorphism and subspace have incompatible shapes");
  return is_zero(quotient_basis(k).projection * m * k.inclusion());
}

// ---------------------------------------------------------------------------
// Quotients

Coalgebra quotient_through_section(const Coalgebra& c, const Matrix& projection, const Matrix& section) {
  return {c.field, projection.rows(), kron_apply(c.field, projection, projection, c.delta * section),
          c.counit * section};
}

QuotientPresentation quotient_by_coideal(const Coalgebra& c, const Subspace& k) {
  check_shapes(c);
  require_field(k, c.field, c.dim);
  QuotientMaps qm = quotient_basis(k);
  std::vector<std::string> failed;
  if (!is_zero(c.counit * k.inclusion())) failed.push_back("counit-vanishes");
  if (!is_zero(kron_apply(c.field, qm.projection, qm.projection, c.delta * k.inclusion())))
    failed.push_back("delta-inclusion");
  if (!failed.empty()) {
    std::string msg = "subspace is not a coideal:";
    for (const auto& s : failed) msg += " " + s;
    raise(Errc::NotACoideal, msg, failed);
  }
  QuotientPresentation out{c, k, qm.projection, qm.section, {}};
  out.quotient = quotient_through_section(c, qm.projection, qm.section);
  return out;
}

BialgebraQuotient quotient_by_biideal(const Bialgebra& b, const Subspace& k) {
  BialgebraQuotient out{quotient_by_coideal(b.coalgebra, k), {}};
  auto failed = ideal_failures(b.algebra, k);
  if (!failed.empty()) throw_axiom_violation(std::move(failed));
  const auto& pr = out.presentation;
  out.quotient = {pr.quotient, quotient_algebra(b.algebra, pr.projection, pr.section)};
  return out;
}

HopfQuotient quotient_by_hopf_ideal(const HopfAlgebra& h, const Subspace& k) {
  BialgebraQuotient bq = quotient_by_biideal(h.bialgebra, k);
  if (!is_stable(h.antipode, k)) throw_axiom_violation({"antipode-stable"});
  const Matrix s = bq.presentation.projection * h.antipode * bq.presentation.section;
  return {std::move(bq.presentation), {std::move(bq.quotient), s}};
}

namespace {

template <class Map>
Subspace reflexive_kernel(const Map& f1, const Map& f2, const Map& s) {
  validate(f1);
  validate(f2);
  validate(s);
  if (!(f1.src == f2.src) || !(f1.dst == f2.dst))
    raise(Errc::ShapeMismatch, "the parallel pair must share source and target");
  if (!(s.src == f1.dst) || !(s.dst == f1.src)) raise(Errc::ShapeMismatch, "the section must go from target to source");
  const Field f = field_of(f1.src);
  const Matrix id = identity(f, dim_of(f1.dst));
  std::vector<std::string> failed;
  if (!equal(f1.matrix * s.matrix, id)) failed.push_back("first-map");
  if (!equal(f2.matrix * s.matrix, id)) failed.push_back("second-map");
  if (!failed.empty()) raise(Errc::NotReflexive, "the common section is not a section of both maps", failed);
  return image(f1.matrix - f2.matrix, f);
}

}  // namespace

BialgebraQuotient reflexive_coequalizer(const BialgebraMap& f1, const BialgebraMap& f2, const BialgebraMap& s) {
  BialgebraQuotient out = quotient_by_biideal(f1.dst, reflexive_kernel(f1, f2, s));
  validate(out.quotient);
  return out;
}

HopfQuotient reflexive_coequalizer(const HopfMap& f1, const HopfMap& f2, const HopfMap& s) {
  HopfQuotient out = quotient_by_hopf_ideal(f1.dst, reflexive_kernel(f1, f2, s));
  validate(out.quotient);
  return out;
}

// ---------------------------------------------------------------------------
// Sub-objects

SubcoalgebraPresentation restrict_to_subcoalgebra(const Coalgebra& c, const Subspace& e) {
  check_shapes(c);
  if (!is_subcoalgebra(c, e)) raise(Errc::NotASubspace, "subspace is not a subcoalgebra");
  const Matrix r = coordinate_rows(e);
  const Matrix inc = e.inclusion();
  return {e, {c.field, e.dim(), kron_apply(c.field, r, r, c.delta * inc), c.counit * inc}, inc};
}

SubalgebraPresentation restrict_to_subalgebra(const Algebra& a, const Subspace& s) {
  check_shapes(a);
  if (!is_subalgebra(a, s)) raise(Errc::NotASubspace, "subspace is not a subalgebra");
  const Matrix r = coordinate_rows(s);
  const Matrix inc = s.inclusion();
  return {s, {a.field, s.dim(), r * mul_after(a, inc, inc), r * a.unit}, inc};
}

}  // namespace codomin
