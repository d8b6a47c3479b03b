#pragma once

#include <string>
#include <vector>

#include "codomin/structures.hpp"

namespace codomin {

/// A subalgebra A ⊆ H with Δ(A) ⊆ A⊗H.
struct CoidealSubalgebra {
  HopfAlgebra ambient;
  Subspace subspace;
};

/// H/I for a coideal and left ideal I, with the induced left H-action.
struct ModuleQuotientCoalgebra {
  HopfAlgebra ambient;
  QuotientPresentation quotient;
  /// H⊗(H/I) → H/I, index h·dim(H/I) + c.
  Matrix action;
};

/// Failed checks among "unit", "subalgebra" and "right-coideal".
std::vector<std::string> coideal_subalgebra_violations(const HopfAlgebra& h, const Subspace& a);
/// Raises AxiomViolation with the failed checks.
CoidealSubalgebra validate_coideal_subalgebra(const HopfAlgebra& h, const Subspace& a);

/// Checks that I is a coideal and a left ideal and builds H/I with its action.
/// Raises NotACoideal or AxiomViolation ("left-ideal").
ModuleQuotientCoalgebra module_quotient(const HopfAlgebra& h, const Subspace& kernel);

/// r(A) = H/HA⁺.
ModuleQuotientCoalgebra op_r(const CoidealSubalgebra& a);
/// l(H/I) = {h : π(h₁)⊗h₂ = π(1)⊗h}.
CoidealSubalgebra op_l(const ModuleQuotientCoalgebra& q);

/// lr(A) ⊇ A.
CoidealSubalgebra closure(const CoidealSubalgebra& a);
/// rl(H/I), a quotient of H through which H/I factors.
ModuleQuotientCoalgebra closure(const ModuleQuotientCoalgebra& q);

/// The order of the Galois connection: q ≤ q' when ker q ⊆ ker q', i.e. when
/// q' is a quotient of q.
bool finer_or_equal(const ModuleQuotientCoalgebra& q, const ModuleQuotientCoalgebra& coarser);

}  // namespace codomin
