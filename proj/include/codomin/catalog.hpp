#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "codomin/structures.hpp"

namespace codomin {

/// Cayley table of a finite group: row 0 is the identity and entry [i][j] is
/// the index of g_i·g_j.
using GroupTable = std::vector<std::vector<int>>;

/// Raises BadParams unless `t` is the table of a group with identity 0.
void validate_group_table(const GroupTable& t);
/// Named groups: "Cn" (cyclic, g^i at index i), "CaxCb" ((g^i,h^j) at i·b + j),
/// and "S3" (permutations of {0,1,2} in lexicographic order).
GroupTable group_table(const std::string& name);
GroupTable cyclic_group(int n);
GroupTable inverse_table(const GroupTable& t);

/// The one-dimensional Hopf algebra k.
HopfAlgebra trivial_hopf(Field f);
Coalgebra trivial_coalgebra(Field f);

/// kG with Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfAlgebra group_algebra(Field f, const GroupTable& t);
/// The dual of kG (functions on G with pointwise product).
HopfAlgebra function_algebra(Field f, const GroupTable& t);

/// Taft algebra of dimension n²: g^n = 1, x^n = 0, gx = q·xg, Δg = g⊗g,
/// Δx = x⊗1 + g⊗x. The basis element g^i x^j sits at index j·n + i.
/// `q` must be a primitive n-th root of unity.
HopfAlgebra taft(Field f, int n, const Scalar& q);
/// The Taft algebra with n = 2, q = −1 (basis 1, g, x, gx). Needs char ≠ 2.
HopfAlgebra sweedler4(Field f);

/// The n×n comatrix coalgebra, e_ij at index i·n + j, Δe_ij = Σ_k e_ik⊗e_kj.
Coalgebra comatrix(Field f, int n);
/// Dual of comatrix(n): the full matrix algebra.
Algebra matrix_algebra(Field f, int n);
/// k[t]/(tⁿ) on the basis 1, t, …, t^{n−1}.
Algebra truncated_polynomial(Field f, int n);
/// Dual of truncated_polynomial: Δd_k = Σ_{i+j=k} d_i⊗d_j.
Coalgebra divided_power(Field f, int n);

/// Upper-triangular 2×2 matrices on the basis e11, e12, e22.
Algebra upper_triangular(Field f);
/// Diagonal 2×2 matrices on the basis e11, e22.
Algebra diagonal(Field f);

struct AlgebraPair {
  AlgebraMap inclusion;   // algebra inclusion A ↪ B
  CoalgebraMap dual;      // its transpose B* ↠ A*
};

/// D₂ ↪ T₂ and the dual surjection T₂* ↠ D₂*.
AlgebraPair triangular_pair(Field f);
/// T₂ ↪ M₂ and the dual surjection M₂^c ↠ T₂*.
AlgebraPair upper_triangular_pair(Field f);

struct CyclicPair {
  HopfMap inclusion;   // kC_n ↪ kC_m, h ↦ g^{m/n}
  HopfMap dual;        // k^{C_m} ↠ k^{C_n}
  HopfMap projection;  // kC_m ↠ kC_n, g ↦ h
};

/// Requires n | m.
CyclicPair cyclic_pair(Field f, int m, int n);

/// H → k.
HopfMap counit_map(const HopfAlgebra& h);
/// k → H.
HopfMap unit_map(const HopfAlgebra& h);
/// Sweedler H₄ ↠ kC₂ killing x.
HopfMap sweedler_projection(Field f);

// ---------------------------------------------------------------------------
// Named builds (used by the command line)

using AnyObject = std::variant<Coalgebra, Algebra, Bialgebra, HopfAlgebra>;

Field field_of(const AnyObject& x);
Index dim_of(const AnyObject& x);
const char* kind_name(const AnyObject& x);

struct NamedMorphism {
  std::string name;
  std::string from;
  std::string to;
  Matrix matrix;
};

struct CatalogBuild {
  std::vector<std::pair<std::string, AnyObject>> objects;
  std::vector<NamedMorphism> morphisms;
};

/// Entries: trivial, group_algebra (group=NAME), function_algebra (group=NAME),
/// sweedler4, taft (n=N, root=SCALAR), comatrix (n=N), divided_power (n=N),
/// triangular_pair, upper_triangular_pair, cyclic_pair (m=M, n=N).
/// Raises BadParams on unknown entries or invalid parameters.
CatalogBuild build_catalog(const std::string& name, Field f, const std::map<std::string, std::string>& params = {});

/// Names accepted by build_catalog.
std::vector<std::string> catalog_entries();

}  // namespace codomin
