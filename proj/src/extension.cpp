#include "codomin/extension.hpp"

#include <string>

#include "codomin/error.hpp"

namespace codomin {

ExtensionContext extension_context(Field ext) {
  if (!ext.valid() || ext.kind() != Field::Kind::Extension)
    raise(Errc::Unsupported, "scalar extension needs a simple extension field");
  if (ext.degree() < 2) raise(Errc::Unsupported, "scalar extension needs degree at least 2");
  return {ext.base(), ext};
}

Matrix extend(const Matrix& m, const ExtensionContext& ctx) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar& a = m(i, j);
      if (a.bound() && !(a.field() == ctx.base))
        raise(Errc::FieldMismatch, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") lies in " +
                                       a.field().str() + ", not in " + ctx.base.str());
      out(i, j) = embed_scalar(a.bind(ctx.base), ctx.ext);
    }
  return out;
}

Subspace extend(const Subspace& s, const ExtensionContext& ctx) {
  if (!(s.field() == ctx.base)) raise(Errc::FieldMismatch, "the subspace is not over " + ctx.base.str());
  return Subspace::span(ctx.ext, s.ambient_dim(), extend(s.basis(), ctx));
}

Coalgebra extend(const Coalgebra& c, const ExtensionContext& ctx) {
  if (!(c.field == ctx.base)) raise(Errc::FieldMismatch, "the coalgebra is not over " + ctx.base.str());
  return {ctx.ext, c.dim, extend(c.delta, ctx), extend(c.counit, ctx)};
}

Algebra extend(const Algebra& a, const ExtensionContext& ctx) {
  if (!(a.field == ctx.base)) raise(Errc::FieldMismatch, "the algebra is not over " + ctx.base.str());
  return {ctx.ext, a.dim, extend(a.mul, ctx), extend(a.unit, ctx)};
}

Bialgebra extend(const Bialgebra& b, const ExtensionContext& ctx) {
  return {extend(b.coalgebra, ctx), extend(b.algebra, ctx)};
}

HopfAlgebra extend(const HopfAlgebra& h, const ExtensionContext& ctx) {
  return {extend(h.bialgebra, ctx), extend(h.antipode, ctx)};
}

Comodule extend(const Comodule& v, const ExtensionContext& ctx) {
  return {extend(v.over, ctx), v.side, v.dim, extend(v.rho, ctx)};
}

Bicomodule extend(const Bicomodule& x, const ExtensionContext& ctx) {
  return {extend(x.over, ctx), x.dim, extend(x.left, ctx), extend(x.right, ctx)};
}

Matrix descend(const Matrix& m, const ExtensionContext& ctx) {
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar a = m(i, j).bind(ctx.ext);
      const std::vector<Scalar> parts = a.coefficients();
      for (std::size_t c = 1; c < parts.size(); ++c)
        if (!parts[c].is_zero())
          raise(Errc::DescentFailure, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + a.str() +
                                          " has a nonzero t^" + std::to_string(c) + " component");
      out(i, j) = parts.empty() ? Scalar(ctx.base, 0) : parts[0].bind(ctx.base);
    }
  return out;
}

Comodule descend_comodule(const Comodule& v, const Coalgebra& base, const ExtensionContext& ctx) {
  if (!(v.over == extend(base, ctx)))
    raise(Errc::FieldMismatch, "the comodule does not live over the extension of the given coalgebra");
  validate(v);
  Comodule out{base, v.side, v.dim, descend(v.rho, ctx)};
  validate(out);
  return out;
}

}  // namespace codomin
