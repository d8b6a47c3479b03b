#include "codomin/domkit.hpp"

#include <stdexcept>

#include "codomin/error.hpp"

namespace codomin {

namespace {

Matrix stack(const std::vector<Matrix>& parts, Index cols, Field f) {
  Index rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Matrix out = zeros(f, rows, cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleRows(at, p.rows()) = p;
    at += p.rows();
  }
  return out;
}

/// (I⊗ε − ε⊗I) applied to the cotensor basis, as columns.
Matrix contraction_difference(const Coalgebra& c, const Subspace& cot) {
  const Field f = c.field;
  const Matrix id = identity(f, c.dim);
  const Matrix x = cot.inclusion();
  return kron_apply(f, id, c.counit, x) - kron_apply(f, c.counit, id, x);
}

void require_same_source(const CoalgebraMap& f, const QuotientPresentation& q) {
  if (!(f.src == q.total)) raise(Errc::ShapeMismatch, "the quotient must be of the morphism's source");
}

}  // namespace

Subspace self_cotensor(const CoalgebraMap& f) {
  validate(f);
  return cotensor(corestrict(regular_comodule(f.src, Side::Right), f),
                  corestrict(regular_comodule(f.src, Side::Left), f));
}

bool is_monic(const CoalgebraMap& f) { return self_cotensor(f).dim() == f.src.dim; }

bool is_epic(const CoalgebraMap& f) {
  validate(f);
  return rank(f.matrix, f.src.field) == f.dst.dim;
}

CodominionResult codominion(const CoalgebraMap& f) {
  const Subspace cot = self_cotensor(f);
  const Field k = f.src.field;
  CodominionResult out;
  out.kernel = Subspace::column_span(k, contraction_difference(f.src, cot));
  if ((out.kernel.dim() == 0) != (cot.dim() == f.src.dim))
    throw std::logic_error("codominion: monic test and K0 = 0 disagree");
  out.quotient = quotient_by_coideal(f.src, out.kernel);
  const Subspace ker = kernel(f.matrix, k);
  if (!ker.contains(out.kernel)) throw std::logic_error("codominion: K0 is not inside ker f");
  out.is_codominion = out.kernel == ker;
  return out;
}

BialgebraQuotient codominion_quotient(const BialgebraMap& f) {
  BialgebraQuotient q = quotient_by_biideal(f.src, codominion(as_coalgebra_map(f)).kernel);
  validate(q.quotient);
  return q;
}

HopfQuotient codominion_quotient(const HopfMap& f) {
  HopfQuotient q = quotient_by_hopf_ideal(f.src, codominion(as_coalgebra_map(f)).kernel);
  validate(q.quotient);
  return q;
}

bool dominates(const CoalgebraMap& f, const QuotientPresentation& q) {
  require_same_source(f, q);
  const Subspace cot = self_cotensor(f);
  const Field k = f.src.field;
  const bool by_contractions = is_zero(q.projection * contraction_difference(f.src, cot));
  const Subspace k0 = Subspace::column_span(k, contraction_difference(f.src, cot));
  const bool by_kernels = q.kernel.contains(k0);
  if (by_contractions != by_kernels) throw std::logic_error("dominates: the two criteria disagree");
  return by_kernels;
}

bool dominates(const CoalgebraMap& f, const Subspace& quotient_kernel) {
  return dominates(f, quotient_by_coideal(f.src, quotient_kernel));
}

Subspace bicomodule_fixed_space(const Bicomodule& x, const Matrix& f) {
  const Field k = x.over.field;
  const Index m = x.dim, d = f.rows();
  const Matrix im = identity(k, m);
  const Matrix right = kron_apply(k, im, f, x.right);                      // x₀⊗f(x₁)
  const Matrix left = flip(k, d, m) * kron_apply(k, f, im, x.left);       // x₀⊗f(x₋₁)
  return kernel(right - left, k);
}

bool bicomodule_domination_check(const CoalgebraMap& f, const QuotientPresentation& q, const Bicomodule& x) {
  validate(f);
  require_same_source(f, q);
  validate(x);
  if (!(x.over == f.src)) raise(Errc::ShapeMismatch, "the bicomodule must live over the morphism's source");
  return bicomodule_fixed_space(x, q.projection).contains(bicomodule_fixed_space(x, f.matrix));
}

bool colinear_domination_check(const CoalgebraMap& f, const QuotientPresentation& q, const Comodule& v,
                               const Comodule& w) {
  require_same_source(f, q);
  const Subspace along_f = hom_colinear(corestrict(v, f), corestrict(w, f));
  const CoalgebraMap pi = q.projection_map();
  const Subspace along_pi = hom_colinear(corestrict(v, pi), corestrict(w, pi));
  return along_pi.contains(along_f);
}

DominionResult dominion_alg(const AlgebraMap& f) {
  validate(f);
  const Algebra& a = f.src;
  const Algebra& b = f.dst;
  const Field k = b.field;
  const Index n = b.dim;
  // Relations b·f(x)⊗b' − b⊗f(x)·b' for basis b, x, b'.
  const Matrix images = f.matrix;  // columns f(e_x)
  Matrix relations = zeros(k, n * n, n * a.dim * n);
  Index col = 0;
  for (Index i = 0; i < n; ++i)
    for (Index x = 0; x < a.dim; ++x) {
      const Vector left = b.mul * kron(unit_vector(k, n, i), images.col(x));
      for (Index j = 0; j < n; ++j) {
        const Vector right = b.mul * kron(images.col(x), unit_vector(k, n, j));
        relations.col(col++) = kron(left, unit_vector(k, n, j)) - kron(unit_vector(k, n, i), right);
      }
    }
  const Subspace rel = Subspace::column_span(k, relations);
  const Matrix p = quotient_basis(rel).projection;
  const Matrix id = identity(k, n);
  const Matrix diff = kron(id, b.unit) - kron(b.unit, id);
  DominionResult out;
  out.tensor_dim = n * n - rel.dim();
  out.dominion = kernel(p * diff, k);
  out.is_dominion = out.dominion == image(f.matrix, k);
  out.is_epic = out.dominion.dim() == n;
  return out;
}

Subspace largest_subcoalgebra(const Coalgebra& c, const Subspace& v) {
  validate(c);
  if (v.ambient_dim() != c.dim || !(v.field() == c.field))
    raise(Errc::NotASubspace, "the subspace does not live in the coalgebra");
  const Field k = c.field;
  const Matrix id = identity(k, c.dim);
  Subspace e = v;
  for (;;) {
    const Matrix p = quotient_basis(e).projection;
    const Matrix cond = stack({kron_apply(k, p, id, c.delta), kron_apply(k, id, p, c.delta)}, c.dim, k);
    Subspace next = intersect(e, kernel(cond, k));
    if (next.dim() == e.dim()) return e;
    e = std::move(next);
  }
}

SubcoalgebraPresentation equalizer_coalg(const std::vector<CoalgebraMap>& family) {
  if (family.empty()) raise(Errc::EmptyFamily, "equalizer of an empty family");
  const CoalgebraMap& first = family.front();
  std::vector<Matrix> diffs;
  for (const auto& f : family) {
    validate(f);
    if (!(f.src == first.src) || !(f.dst == first.dst))
      raise(Errc::ShapeMismatch, "equalizer family members must share source and target");
    diffs.push_back(f.matrix - first.matrix);
  }
  const Field k = first.src.field;
  const Subspace v = kernel(stack(diffs, first.src.dim, k), k);
  SubcoalgebraPresentation out = restrict_to_subcoalgebra(first.src, largest_subcoalgebra(first.src, v));
  validate(out.sub);
  validate(out.inclusion_map(first.src));
  return out;
}

bool is_cosemisimple(const Coalgebra& c) {
  validate(c);
  const Field k = c.field;
  const Index n = c.dim;
  const long p = k.characteristic();
  if (p > 0 && p <= n)
    raise(Errc::UnsupportedCharacteristic, "the trace-form test needs characteristic 0 or greater than " +
                                               std::to_string(n) + ", got " + std::to_string(p));
  // Left multiplication by e_i in C*: L_i[r, j] = Δ[(i·n + j), r].
  std::vector<Matrix> left(n);
  for (Index i = 0; i < n; ++i) {
    left[i] = zeros(k, n, n);
    for (Index r = 0; r < n; ++r)
      for (Index j = 0; j < n; ++j) left[i](r, j) = c.delta(i * n + j, r);
  }
  Matrix gram = zeros(k, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Scalar t(k, 0);
      for (Index r = 0; r < n; ++r)
        for (Index s = 0; s < n; ++s)
          if (!left[i](r, s).is_zero() && !left[j](s, r).is_zero()) t += left[i](r, s) * left[j](s, r);
      gram(i, j) = gram(j, i) = t;
    }
  return rank(gram, k) == n;
}

CcProduct cc_product(const Coalgebra& c, const Coalgebra& d) {
  validate(c);
  validate(d);
  if (!is_cocommutative(c) || !is_cocommutative(d))
    raise(Errc::NotCocommutative, "products are tensor products only for cocommutative coalgebras");
  const Field k = c.field;
  Coalgebra prod = tensor_objects(c, d);
  CoalgebraMap first{prod, c, kron(identity(k, c.dim), d.counit)};
  CoalgebraMap second{prod, d, kron(c.counit, identity(k, d.dim))};
  return {std::move(prod), std::move(first), std::move(second)};
}

SubcoalgebraPresentation cc_pullback(const CoalgebraMap& f, const CoalgebraMap& g) {
  if (!(f.dst == g.dst)) raise(Errc::ShapeMismatch, "pullback legs must share their target");
  if (!is_cocommutative(f.dst)) raise(Errc::NotCocommutative, "pullback target is not cocommutative");
  const CcProduct p = cc_product(f.src, g.src);
  return equalizer_coalg({compose(f, p.first), compose(g, p.second)});
}

bool monic_by_coinvariants(const HopfMap& pi) {
  validate(pi);
  return coinvariants(regular_comodule(pi.src.coalgebra()), as_bialgebra_map(pi)).dim() == 1;
}

bool monic_by_end_spaces(const HopfMap& pi) {
  validate(pi);
  const HopfAlgebra& h = pi.src;
  const CoalgebraMap f = as_coalgebra_map(pi);
  std::vector<Comodule> probes{regular_comodule(h.coalgebra())};
  if (h.dim() <= 4) probes.push_back(tensor_comodules(probes[0], probes[0], h.bialgebra));
  for (const Comodule& v : probes) {
    const Subspace fine = hom_colinear(v, v);
    const Comodule down = corestrict(v, f);
    if (hom_colinear(down, down).dim() != fine.dim()) return false;
  }
  return true;
}

}  // namespace codomin
