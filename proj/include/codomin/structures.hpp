#pragma once

#include <string>
#include <vector>

#include "codomin/linalg.hpp"

namespace codomin {

/// Structure constants of a coalgebra on the basis e_0..e_{n-1}.
/// Column k of `delta` holds Δ(e_k) in the flat basis e_i⊗e_j ↦ i·n + j.
struct Coalgebra {
  Field field;
  Index dim = 0;
  Matrix delta;   // n² × n
  Matrix counit;  // 1 × n
};

/// Column i·n + j of `mul` holds e_i·e_j.
struct Algebra {
  Field field;
  Index dim = 0;
  Matrix mul;   // n × n²
  Matrix unit;  // n × 1
};

struct Bialgebra {
  Coalgebra coalgebra;
  Algebra algebra;

  Field field() const { return coalgebra.field; }
  Index dim() const { return coalgebra.dim; }
};

struct HopfAlgebra {
  Bialgebra bialgebra;
  Matrix antipode;  // n × n

  Field field() const { return bialgebra.field(); }
  Index dim() const { return bialgebra.dim(); }
  const Coalgebra& coalgebra() const { return bialgebra.coalgebra; }
  const Algebra& algebra() const { return bialgebra.algebra; }
};

inline const Coalgebra& coalgebra_of(const Coalgebra& c) { return c; }
inline const Coalgebra& coalgebra_of(const Bialgebra& b) { return b.coalgebra; }
inline const Coalgebra& coalgebra_of(const HopfAlgebra& h) { return h.bialgebra.coalgebra; }
inline const Algebra& algebra_of(const Algebra& a) { return a; }
inline const Algebra& algebra_of(const Bialgebra& b) { return b.algebra; }
inline const Algebra& algebra_of(const HopfAlgebra& h) { return h.bialgebra.algebra; }
inline const Bialgebra& bialgebra_of(const Bialgebra& b) { return b; }
inline const Bialgebra& bialgebra_of(const HopfAlgebra& h) { return h.bialgebra; }

inline Field field_of(const Coalgebra& c) { return c.field; }
inline Field field_of(const Algebra& a) { return a.field; }
inline Field field_of(const Bialgebra& b) { return b.field(); }
inline Field field_of(const HopfAlgebra& h) { return h.field(); }
inline Index dim_of(const Coalgebra& c) { return c.dim; }
inline Index dim_of(const Algebra& a) { return a.dim; }
inline Index dim_of(const Bialgebra& b) { return b.dim(); }
inline Index dim_of(const HopfAlgebra& h) { return h.dim(); }

bool operator==(const Coalgebra& a, const Coalgebra& b);
bool operator==(const Algebra& a, const Algebra& b);
bool operator==(const Bialgebra& a, const Bialgebra& b);
bool operator==(const HopfAlgebra& a, const HopfAlgebra& b);

/// A linear map between two structured objects; `matrix` is dim dst × dim src
/// and acts on coordinate columns.
template <class Object>
struct Morphism {
  Object src;
  Object dst;
  Matrix matrix;
};

using CoalgebraMap = Morphism<Coalgebra>;
using AlgebraMap = Morphism<Algebra>;
using BialgebraMap = Morphism<Bialgebra>;
using HopfMap = Morphism<HopfAlgebra>;

template <class Object>
CoalgebraMap as_coalgebra_map(const Morphism<Object>& f) {
  return {coalgebra_of(f.src), coalgebra_of(f.dst), f.matrix};
}
template <class Object>
AlgebraMap as_algebra_map(const Morphism<Object>& f) {
  return {algebra_of(f.src), algebra_of(f.dst), f.matrix};
}
inline BialgebraMap as_bialgebra_map(const HopfMap& f) { return {f.src.bialgebra, f.dst.bialgebra, f.matrix}; }

template <class Object>
Morphism<Object> identity_map(const Object& x) {
  return {x, x, identity(field_of(x), dim_of(x))};
}

/// g∘f.
template <class Object>
Morphism<Object> compose(const Morphism<Object>& g, const Morphism<Object>& f) {
  return {f.src, g.dst, g.matrix * f.matrix};
}

// ---------------------------------------------------------------------------
// Axiom checks. Each returns the names of the violated identities (empty when
// the object is valid); shape inconsistencies raise ShapeMismatch instead.
//
//   coalgebra:  coassociativity, counit-left, counit-right
//   algebra:    associativity, unit-left, unit-right
//   bialgebra:  the above plus delta-multiplicative, counit-multiplicative,
//               delta-unit, counit-unit
//   Hopf:       the above plus antipode-left, antipode-right
//   morphisms:  comultiplication, counit, multiplication, unit, antipode

std::vector<std::string> violations(const Coalgebra& c);
std::vector<std::string> violations(const Algebra& a);
std::vector<std::string> violations(const Bialgebra& b);
std::vector<std::string> violations(const HopfAlgebra& h);
std::vector<std::string> violations(const CoalgebraMap& f);
std::vector<std::string> violations(const AlgebraMap& f);
std::vector<std::string> violations(const BialgebraMap& f);
std::vector<std::string> violations(const HopfMap& f);

[[noreturn]] void throw_axiom_violation(std::vector<std::string> names);

/// Returns the argument unchanged, or raises AxiomViolation listing every
/// failed identity.
template <class T>
T validate(T x) {
  auto v = violations(x);
  if (!v.empty()) throw_axiom_violation(std::move(v));
  return x;
}


// ---------------------------------------------------------------------------
// Constructions

/// Transposed structure maps: (C*) has mul = Δᵀ and unit = εᵀ.
Algebra dualize(const Coalgebra& c);
Coalgebra dualize(const Algebra& a);
Bialgebra dualize(const Bialgebra& b);
HopfAlgebra dualize(const HopfAlgebra& h);
/// The transpose f*: Y* → X*.
AlgebraMap dualize(const CoalgebraMap& f);
CoalgebraMap dualize(const AlgebraMap& f);

/// Tensor products with the structure maps interleaved by the middle flip,
/// e.g. Δ(c⊗d) = c₁⊗d₁⊗c₂⊗d₂. The flat index of c⊗d is c·dim D + d.
Coalgebra tensor_objects(const Coalgebra& c, const Coalgebra& d);
Algebra tensor_objects(const Algebra& a, const Algebra& b);
Bialgebra tensor_objects(const Bialgebra& a, const Bialgebra& b);
HopfAlgebra tensor_objects(const HopfAlgebra& a, const HopfAlgebra& b);

/// τ∘Δ = Δ.
bool is_cocommutative(const Coalgebra& c);
bool is_commutative(const Algebra& a);

/// Product of two elements of A⊗B (flat coordinates).
Vector tensor_product_multiply(const Algebra& a, const Algebra& b, const Vector& x, const Vector& y);

// ---------------------------------------------------------------------------
// Subspace tests

/// ε(K) = 0 and Δ(K) ⊆ K⊗C + C⊗K.
bool is_coideal(const Coalgebra& c, const Subspace& k);
/// Δ(E) ⊆ E⊗E.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& e);
bool is_left_ideal(const Algebra& a, const Subspace& k);
bool is_right_ideal(const Algebra& a, const Subspace& k);
bool is_two_sided_ideal(const Algebra& a, const Subspace& k);
/// Contains the unit and is closed under multiplication.
bool is_subalgebra(const Algebra& a, const Subspace& s);
/// m(K) ⊆ K.
bool is_stable(const Matrix& m, const Subspace& k);

// ---------------------------------------------------------------------------
// Quotients and sub-objects

/// A quotient coalgebra C/K with the deterministic complement section.
struct QuotientPresentation {
  Coalgebra total;
  Subspace kernel;
  Matrix projection;  // dim quotient × dim C
  Matrix section;     // dim C × dim quotient
  Coalgebra quotient;

  CoalgebraMap projection_map() const { return {total, quotient, projection}; }
};

/// Raises NotACoideal naming the failed conditions ("counit", "comultiplication").
QuotientPresentation quotient_by_coideal(const Coalgebra& c, const Subspace& k);
/// Quotient structure computed through an arbitrary section s with p∘s = I;
/// agrees with `q.quotient` whenever q.kernel is a coideal.
Coalgebra quotient_through_section(const Coalgebra& c, const Matrix& projection, const Matrix& section);

struct BialgebraQuotient {
  QuotientPresentation presentation;
  Bialgebra quotient;
};

struct HopfQuotient {
  QuotientPresentation presentation;
  HopfAlgebra quotient;
};

/// Quotient by a biideal (coideal and two-sided ideal); the induced structure
/// is validated.
BialgebraQuotient quotient_by_biideal(const Bialgebra& b, const Subspace& k);
/// Quotient by a Hopf ideal (biideal stable under the antipode).
HopfQuotient quotient_by_hopf_ideal(const HopfAlgebra& h, const Subspace& k);

/// The vector-space coequalizer of a reflexive pair f1, f2: X → Y with common
/// section s (f1∘s = f2∘s = I); its kernel im(f1 − f2) is a Hopf ideal and the
/// quotient structure is validated. Raises NotReflexive otherwise.
BialgebraQuotient reflexive_coequalizer(const BialgebraMap& f1, const BialgebraMap& f2, const BialgebraMap& s);
HopfQuotient reflexive_coequalizer(const HopfMap& f1, const HopfMap& f2, const HopfMap& s);

struct SubcoalgebraPresentation {
  Subspace subspace;
  Coalgebra sub;
  Matrix inclusion;  // dim C × dim E

  CoalgebraMap inclusion_map(const Coalgebra& total) const { return {sub, total, inclusion}; }
};

/// The coalgebra structure on a subcoalgebra E ⊆ C in the RREF basis of E.
SubcoalgebraPresentation restrict_to_subcoalgebra(const Coalgebra& c, const Subspace& e);

struct SubalgebraPresentation {
  Subspace subspace;
  Algebra sub;
  Matrix inclusion;

  AlgebraMap inclusion_map(const Algebra& total) const { return {sub, total, inclusion}; }
};

SubalgebraPresentation restrict_to_subalgebra(const Algebra& a, const Subspace& s);

}  // namespace codomin
