#include "codomin/takeuchi.hpp"

#include <stdexcept>

#include "codomin/error.hpp"

namespace codomin {

namespace {

void require_ambient(const HopfAlgebra& h, const Subspace& s) {
  if (s.ambient_dim() != h.dim() || !(s.field() == h.field()))
    raise(Errc::NotASubspace, "the subspace does not live in the Hopf algebra");
}

/// m·(a⊗b) without forming the Kronecker product.
Matrix mul_after(Field k, const Matrix& mul, const Matrix& a, const Matrix& b) {
  return kron_apply(k, a.transpose(), b.transpose(), mul.transpose()).transpose();
}

}  // namespace

std::vector<std::string> coideal_subalgebra_violations(const HopfAlgebra& h, const Subspace& a) {
  require_ambient(h, a);
  const Field k = h.field();
  const Algebra& alg = h.algebra();
  std::vector<std::string> out;
  if (!a.contains(Vector(alg.unit.col(0)))) out.push_back("unit");
  const Matrix inc = a.inclusion();
  if (!a.contains(Subspace::column_span(k, mul_after(k, alg.mul, inc, inc)))) out.push_back("subalgebra");
  const Matrix p = quotient_basis(a).projection;
  if (!is_zero(kron_apply(k, p, identity(k, h.dim()), h.coalgebra().delta * inc))) out.push_back("right-coideal");
  return out;
}

CoidealSubalgebra validate_coideal_subalgebra(const HopfAlgebra& h, const Subspace& a) {
  const auto v = coideal_subalgebra_violations(h, a);
  if (!v.empty()) raise(Errc::AxiomViolation, "not a right coideal subalgebra", v);
  return {h, a};
}

ModuleQuotientCoalgebra module_quotient(const HopfAlgebra& h, const Subspace& kernel) {
  require_ambient(h, kernel);
  QuotientPresentation q = quotient_by_coideal(h.coalgebra(), kernel);
  if (!is_left_ideal(h.algebra(), kernel)) raise(Errc::AxiomViolation, "not a left ideal", {"left-ideal"});
  const Field k = h.field();
  const Matrix id = identity(k, h.dim());
  const Matrix& mul = h.algebra().mul;
  // h·π(c) = π(h·s(π(c))), well defined because the kernel is a left ideal.
  Matrix action = q.projection * mul_after(k, mul, id, q.section);
  if (!equal(q.projection * mul, mul_after(k, action, id, q.projection)))
    throw std::logic_error("module_quotient: the projection is not H-linear");
  return {h, std::move(q), std::move(action)};
}

ModuleQuotientCoalgebra op_r(const CoidealSubalgebra& a) {
  const HopfAlgebra& h = a.ambient;
  const Field k = h.field();
  const Subspace plus = intersect(a.subspace, kernel(h.coalgebra().counit, k));
  const Subspace ideal =
      Subspace::column_span(k, mul_after(k, h.algebra().mul, identity(k, h.dim()), plus.inclusion()));
  return module_quotient(h, ideal);
}

CoidealSubalgebra op_l(const ModuleQuotientCoalgebra& q) {
  const HopfAlgebra& h = q.ambient;
  const Field k = h.field();
  const Matrix id = identity(k, h.dim());
  const Matrix one = q.quotient.projection * h.algebra().unit;  // π(1)
  const Matrix lhs = kron_apply(k, q.quotient.projection, id, h.coalgebra().delta);
  const Subspace fixed = kernel(lhs - kron(one, id), k);
  const auto v = coideal_subalgebra_violations(h, fixed);
  if (!v.empty()) throw std::logic_error("op_l: the result is not a right coideal subalgebra");
  return {h, fixed};
}

CoidealSubalgebra closure(const CoidealSubalgebra& a) { return op_l(op_r(a)); }

ModuleQuotientCoalgebra closure(const ModuleQuotientCoalgebra& q) { return op_r(op_l(q)); }

bool finer_or_equal(const ModuleQuotientCoalgebra& q, const ModuleQuotientCoalgebra& coarser) {
  return coarser.quotient.kernel.contains(q.quotient.kernel);
}

}  // namespace codomin
