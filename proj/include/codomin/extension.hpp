#pragma once

#include "codomin/comodules.hpp"
#include "codomin/structures.hpp"

namespace codomin {

/// A simple extension k' = k[t]/(m) of degree at least 2 and its power basis
/// 1, t, ..., t^{d-1} over k.
struct ExtensionContext {
  Field base;
  Field ext;

  int degree() const { return ext.degree(); }
};

/// Raises Unsupported unless `ext` is a simple extension of degree ≥ 2.
ExtensionContext extension_context(Field ext);

/// Entry-wise embedding; FieldMismatch for entries outside the base field.
Matrix extend(const Matrix& m, const ExtensionContext& ctx);
Subspace extend(const Subspace& s, const ExtensionContext& ctx);
Coalgebra extend(const Coalgebra& c, const ExtensionContext& ctx);
Algebra extend(const Algebra& a, const ExtensionContext& ctx);
Bialgebra extend(const Bialgebra& b, const ExtensionContext& ctx);
HopfAlgebra extend(const HopfAlgebra& h, const ExtensionContext& ctx);
Comodule extend(const Comodule& v, const ExtensionContext& ctx);
Bicomodule extend(const Bicomodule& x, const ExtensionContext& ctx);

template <class Object>
Morphism<Object> extend(const Morphism<Object>& f, const ExtensionContext& ctx) {
  return {extend(f.src, ctx), extend(f.dst, ctx), extend(f.matrix, ctx)};
}

/// The base-field matrix whose extension is `m`. Raises DescentFailure naming
/// the first entry with a nonzero component off the identity basis element.
Matrix descend(const Matrix& m, const ExtensionContext& ctx);

/// The unique comodule over `base` whose extension is `v`, which must live
/// over the extension of `base`. Raises DescentFailure.
Comodule descend_comodule(const Comodule& v, const Coalgebra& base, const ExtensionContext& ctx);

}  // namespace codomin
