#pragma once

#include <vector>

#include "codomin/comodules.hpp"
#include "codomin/structures.hpp"

namespace codomin {

/// C□_D C for f: C → D, with C a D-comodule on both sides through f.
Subspace self_cotensor(const CoalgebraMap& f);

/// Δ: C → C□_D C is injective by counitality, so f is monic exactly when the
/// cotensor has dimension dim C.
bool is_monic(const CoalgebraMap& f);
/// Surjectivity.
bool is_epic(const CoalgebraMap& f);

struct CodominionResult {
  Subspace kernel;  // K₀
  QuotientPresentation quotient;
  /// K₀ = ker f, i.e. C → C/K₀ → D has injective second factor.
  bool is_codominion = false;
};

/// K₀ is spanned by (I⊗ε − ε⊗I)(x) over a basis of C□_D C; the codominion is
/// C/K₀.
CodominionResult codominion(const CoalgebraMap& f);
/// For bialgebra and Hopf morphisms K₀ is also a (Hopf) ideal; the quotient
/// carries the induced structure, validated.
BialgebraQuotient codominion_quotient(const BialgebraMap& f);
HopfQuotient codominion_quotient(const HopfMap& f);

/// Whether π: C ↠ C/ker π factors through the codominion of f. Decided both
/// by comparing π∘(I⊗ε) and π∘(ε⊗I) on C□_D C and by K₀ ⊆ ker π; the two
/// answers must agree.
bool dominates(const CoalgebraMap& f, const QuotientPresentation& q);
bool dominates(const CoalgebraMap& f, const Subspace& quotient_kernel);

/// {x : x₀⊗f(x₁) = x₀⊗f(x₋₁)} ⊆ X for a bicomodule X.
Subspace bicomodule_fixed_space(const Bicomodule& x, const Matrix& f);
/// X_f ⊆ X_π.
bool bicomodule_domination_check(const CoalgebraMap& f, const QuotientPresentation& q, const Bicomodule& x);
/// Every linear V → W colinear over D through f is colinear over D' through π.
bool colinear_domination_check(const CoalgebraMap& f, const QuotientPresentation& q, const Comodule& v,
                               const Comodule& w);

struct DominionResult {
  Subspace dominion;
  Index tensor_dim = 0;  // dim B⊗_A B
  /// dominion = image of f.
  bool is_dominion = false;
  /// dominion = B.
  bool is_epic = false;
};

/// {b : b⊗1 = 1⊗b in B⊗_A B}.
DominionResult dominion_alg(const AlgebraMap& f);

/// The greatest E ⊆ V with Δ(E) ⊆ E⊗E, by the descending iteration
/// E ← {c ∈ E : Δc ∈ E⊗C ∩ C⊗E}.
Subspace largest_subcoalgebra(const Coalgebra& c, const Subspace& v);

/// The largest subcoalgebra inside the vector-space equalizer of the family.
/// Raises EmptyFamily.
SubcoalgebraPresentation equalizer_coalg(const std::vector<CoalgebraMap>& family);

/// Dickson's trace-form test on the dual algebra. Raises
/// UnsupportedCharacteristic when 0 < char ≤ dim C.
bool is_cosemisimple(const Coalgebra& c);

struct CcProduct {
  Coalgebra product;
  CoalgebraMap first;   // I⊗ε
  CoalgebraMap second;  // ε⊗I
};

/// Products of cocommutative coalgebras are tensor products. Raises
/// NotCocommutative.
CcProduct cc_product(const Coalgebra& c, const Coalgebra& d);
/// The pullback of f: C → E and g: D → E inside the product.
SubcoalgebraPresentation cc_pullback(const CoalgebraMap& f, const CoalgebraMap& g);

/// The only coinvariants of H along π are the scalars.
bool monic_by_coinvariants(const HopfMap& pi);
/// End spaces of the probe comodules agree before and after corestriction.
/// The probes are the regular comodule and, for dim H ≤ 4, its tensor square.
bool monic_by_end_spaces(const HopfMap& pi);

}  // namespace codomin
