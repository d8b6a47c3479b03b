#include "codomin/catalog.hpp"
#include "codomin/domkit.hpp"
#include "codomin/takeuchi.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace codomin;
using namespace testing;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

HopfAlgebra cyclic(Field f, int n) { return group_algebra(f, cyclic_group(n)); }

Subspace basis_span(Field f, Index n, std::initializer_list<Index> idx) {
  Matrix rows = zeros(f, static_cast<Index>(idx.size()), n);
  Index r = 0;
  for (Index i : idx) rows(r++, i) = Scalar(f, 1);
  return Subspace::span(f, n, rows);
}

struct Ambient {
  HopfAlgebra h;
  std::vector<Subspace> coideal_subalgebras;
};

/// Right coideal subalgebras of kC₄, kC₂⊗kC₂ and the Sweedler algebra.
std::vector<Ambient> ambients() {
  const HopfAlgebra k4 = cyclic(Q, 4);
  const HopfAlgebra v4 = group_algebra(Q, group_table("C2xC2"));
  const HopfAlgebra h4 = sweedler4(Q);  // 1, g, x, gx
  return {
      {k4, {basis_span(Q, 4, {0}), basis_span(Q, 4, {0, 2}), Subspace::full(Q, 4)}},
      {v4,
       {basis_span(Q, 4, {0}), basis_span(Q, 4, {0, 1}), basis_span(Q, 4, {0, 2}), basis_span(Q, 4, {0, 3}),
        Subspace::full(Q, 4)}},
      {h4, {basis_span(Q, 4, {0}), basis_span(Q, 4, {0, 1}), basis_span(Q, 4, {0, 3}), Subspace::full(Q, 4)}},
  };
}

ModuleQuotientCoalgebra identity_quotient(const HopfAlgebra& h) {
  return module_quotient(h, Subspace::zero(h.field(), h.dim()));
}

ModuleQuotientCoalgebra counit_quotient(const HopfAlgebra& h) {
  return module_quotient(h, kernel(h.coalgebra().counit, h.field()));
}

}  // namespace

TEST_CASE("coideal subalgebra validation") {
  const HopfAlgebra h4 = sweedler4(Q);
  CHECK(coideal_subalgebra_violations(h4, basis_span(Q, 4, {0})).empty());
  CHECK(coideal_subalgebra_violations(cyclic(Q, 3), basis_span(Q, 3, {0})).empty());
  CHECK(coideal_subalgebra_violations(h4, basis_span(Q, 4, {0, 3})).empty());
  CHECK(coideal_subalgebra_violations(h4, basis_span(Q, 4, {0, 2})) == std::vector<std::string>{"right-coideal"});
  CHECK(code_of([&] { (void)validate_coideal_subalgebra(h4, basis_span(Q, 4, {0, 2})); }) == Errc::AxiomViolation);
  CHECK(coideal_subalgebra_violations(h4, basis_span(Q, 4, {1})) ==
        std::vector<std::string>{"unit", "subalgebra"});
  // span{1, g} in kC₃ is not closed under multiplication but is a right coideal.
  CHECK(coideal_subalgebra_violations(cyclic(Q, 3), basis_span(Q, 3, {0, 1})) ==
        std::vector<std::string>{"subalgebra"});
  CHECK(code_of([&] { (void)coideal_subalgebra_violations(h4, Subspace::full(Q, 3)); }) == Errc::NotASubspace);
}

TEST_CASE("module quotients") {
  const HopfAlgebra h4 = sweedler4(Q);
  const ModuleQuotientCoalgebra q = module_quotient(h4, basis_span(Q, 4, {2, 3}));
  CHECK(q.quotient.quotient.dim == 2);
  CHECK(q.action.rows() == 2);
  CHECK(q.action.cols() == 8);
  // span{x} and span{g − 1} are coideals but not left ideals; span{g} is not a coideal.
  CHECK(code_of([&] { (void)module_quotient(h4, basis_span(Q, 4, {2})); }) == Errc::AxiomViolation);
  CHECK(code_of([&] { (void)module_quotient(h4, basis_span(Q, 4, {1})); }) == Errc::NotACoideal);
  CHECK(code_of([&] { (void)module_quotient(h4, span_of(Q, {vec(Q, {-1, 1, 0, 0})})); }) == Errc::AxiomViolation);
}

TEST_CASE("r examples") {
  const HopfAlgebra h4 = sweedler4(Q);
  CHECK(op_r({h4, basis_span(Q, 4, {0})}).quotient.kernel.dim() == 0);

  const HopfAlgebra k4 = cyclic(Q, 4);
  const ModuleQuotientCoalgebra r = op_r(validate_coideal_subalgebra(k4, basis_span(Q, 4, {0, 2})));
  CHECK(r.quotient.kernel == span_of(Q, {vec(Q, {-1, 0, 1, 0}), vec(Q, {0, -1, 0, 1})}));
  CHECK(r.quotient.quotient.dim == 2);
  CHECK(r.quotient.kernel == kernel(cyclic_pair(Q, 4, 2).projection.matrix, Q));

  const ModuleQuotientCoalgebra s = op_r(validate_coideal_subalgebra(h4, basis_span(Q, 4, {0, 3})));
  CHECK(s.quotient.kernel == basis_span(Q, 4, {2, 3}));
  CHECK(s.quotient.quotient.dim == 2);
  CHECK(s.quotient.kernel == kernel(sweedler_projection(Q).matrix, Q));
}

TEST_CASE("l examples") {
  for (const HopfAlgebra& h : {cyclic(Q, 4), sweedler4(Q), group_algebra(F2, group_table("S3"))}) {
    CHECK(op_l(identity_quotient(h)).subspace == basis_span(h.field(), h.dim(), {0}));
    CHECK(op_l(counit_quotient(h)).subspace == Subspace::full(h.field(), h.dim()));
  }
  const HopfAlgebra k4 = cyclic(Q, 4);
  const ModuleQuotientCoalgebra onto =
      module_quotient(k4, kernel(cyclic_pair(Q, 4, 2).projection.matrix, Q));
  CHECK(op_l(onto).subspace == basis_span(Q, 4, {0, 2}));
}

TEST_CASE("closures") {
  for (const auto& [h, list] : ambients()) {
    for (const Subspace& a : list) {
      const CoidealSubalgebra sub = validate_coideal_subalgebra(h, a);
      const CoidealSubalgebra lr = closure(sub);
      CHECK(lr.subspace.contains(a));
      CHECK(closure(lr).subspace == lr.subspace);
      // Finite-dimensional Hopf algebras are free over coideal subalgebras, so every one is closed.
      CHECK(lr.subspace == a);
      // lr(A) is the dominion of A ⊆ H.
      CHECK(lr.subspace == dominion_alg(restrict_to_subalgebra(h.algebra(), a).inclusion_map(h.algebra())).dominion);

      const ModuleQuotientCoalgebra q = op_r(sub);
      const ModuleQuotientCoalgebra rl = closure(q);
      CHECK(finer_or_equal(rl, q));
      CHECK(closure(rl).quotient.kernel == rl.quotient.kernel);
      // rl(H/I) is the codominion of H ↠ H/I.
      CHECK(rl.quotient.kernel == codominion(q.quotient.projection_map()).kernel);
    }
    for (const ModuleQuotientCoalgebra& q : {identity_quotient(h), counit_quotient(h)})
      CHECK(closure(q).quotient.kernel == codominion(q.quotient.projection_map()).kernel);
  }
}

TEST_CASE("Galois connection and order reversal") {
  for (const auto& [h, list] : ambients()) {
    std::vector<ModuleQuotientCoalgebra> quotients{identity_quotient(h), counit_quotient(h)};
    for (const Subspace& a : list) quotients.push_back(op_r({h, a}));
    for (const Subspace& a : list) {
      const ModuleQuotientCoalgebra ra = op_r({h, a});
      for (const ModuleQuotientCoalgebra& q : quotients)
        CHECK(finer_or_equal(ra, q) == op_l(q).subspace.contains(a));
      for (const Subspace& b : list)
        if (b.contains(a)) CHECK(op_r({h, b}).quotient.kernel.contains(ra.quotient.kernel));
    }
  }
}

TEST_CASE("Galois connection on every coideal subalgebra and module quotient over F2") {
  for (const HopfAlgebra& h : {cyclic(F2, 4), group_algebra(F2, group_table("C2xC2"))}) {
    std::vector<CoidealSubalgebra> subs;
    std::vector<ModuleQuotientCoalgebra> quotients;
    for (const Subspace& s : all_subspaces_f2(h.dim())) {
      if (coideal_subalgebra_violations(h, s).empty()) subs.push_back({h, s});
      if (is_coideal(h.coalgebra(), s) && is_left_ideal(h.algebra(), s)) quotients.push_back(module_quotient(h, s));
    }
    CHECK(subs.size() >= 3);
    CHECK(quotients.size() >= 3);
    for (const CoidealSubalgebra& a : subs) {
      const ModuleQuotientCoalgebra ra = op_r(a);
      for (const ModuleQuotientCoalgebra& q : quotients)
        CHECK(finer_or_equal(ra, q) == op_l(q).subspace.contains(a.subspace));
      CHECK(closure(a).subspace.contains(a.subspace));
    }
    for (const ModuleQuotientCoalgebra& q : quotients) {
      CHECK(finer_or_equal(closure(q), q));
      CHECK(closure(q).quotient.kernel == codominion(q.quotient.projection_map()).kernel);
    }
  }
}
