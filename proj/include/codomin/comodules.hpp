#pragma once

#include <optional>
#include <string>
#include <vector>

#include "codomin/structures.hpp"

namespace codomin {

enum class Side { Right, Left };

const char* to_string(Side s);

/// A comodule over `over` (dim n) on k^m. Column v of `rho` is ρ(e_v), in
/// V⊗C (index v·n + c) for right comodules and in C⊗V (index c·m + v) for
/// left ones.
struct Comodule {
  Coalgebra over;
  Side side = Side::Right;
  Index dim = 0;
  Matrix rho;
};

/// Compatible left and right coactions on one space.
struct Bicomodule {
  Coalgebra over;
  Index dim = 0;
  Matrix left;   // V → C⊗V
  Matrix right;  // V → V⊗C

  Comodule left_comodule() const { return {over, Side::Left, dim, left}; }
  Comodule right_comodule() const { return {over, Side::Right, dim, right}; }
};

bool operator==(const Comodule& a, const Comodule& b);

/// Violated identities among "coassociativity" and "counit" (and
/// "compatibility" for bicomodules); ShapeMismatch on inconsistent shapes.
std::vector<std::string> violations(const Comodule& v);
std::vector<std::string> violations(const Bicomodule& x);

/// C as a comodule over itself (ρ = Δ).
Comodule regular_comodule(const Coalgebra& c, Side side = Side::Right);
Bicomodule regular_bicomodule(const Coalgebra& c);
/// k^m with ρ(v) = v⊗1 (or 1⊗v) over a bialgebra.
Comodule trivial_comodule(const Bialgebra& h, Index dim, Side side = Side::Right);
/// V⊗C with coaction I⊗Δ (right) or C⊗V with Δ⊗I (left).
Comodule cofree_comodule(const Coalgebra& c, Index dim, Side side = Side::Right);

/// Pushes the coaction along f: C → D.
Comodule corestrict(const Comodule& v, const CoalgebraMap& f);

/// V□_D W ⊆ V⊗W for a right comodule V and a left comodule W over one D.
Subspace cotensor(const Comodule& v, const Comodule& w);

/// {v : ρ(v) = v⊗1} (mirrored for left comodules). `h` supplies the unit and
/// must carry the coalgebra V lives over.
Subspace coinvariants(const Comodule& v, const Bialgebra& h);
/// Coinvariants of V corestricted along π.
Subspace coinvariants(const Comodule& v, const BialgebraMap& pi);

/// The matrix of φ ↦ (φ⊗I)ρ_V − ρ_W φ (mirrored for left comodules) on the
/// flattened space of maps V → W, φ(w, v) at index w·dim V + v.
Matrix colinearity_system(const Comodule& v, const Comodule& w);
/// Colinear maps V → W inside the (dim W · dim V)-dimensional map space.
Subspace hom_colinear(const Comodule& v, const Comodule& w);
/// Inverse of the row-major flattening.
Matrix unflatten(const Vector& x, Index rows, Index cols);
Vector flatten(const Matrix& m);

/// Tensor product of right comodules over a bialgebra:
/// ρ(w⊗u) = w₀⊗u₀⊗w₁u₁.
Comodule tensor_comodules(const Comodule& w, const Comodule& u, const Bialgebra& h);
/// The dual of a right comodule over a Hopf algebra, ρ(f) = f(v₀)S(v₁).
Comodule dual_comodule(const Comodule& v, const HopfAlgebra& h);

/// A colinear retraction σ of the coaction ρ: V → cofree, when one exists.
/// Its existence is equivalent to V being injective (coflat).
std::optional<Matrix> injectivity_witness(const Comodule& v);
inline bool is_injective_comodule(const Comodule& v) { return injectivity_witness(v).has_value(); }

/// A D-colinear right inverse s: D → C of a surjective f: C → D, C being
/// corestricted along f on the chosen side. Raises NotSurjective.
std::optional<Matrix> find_comodule_splitting(const CoalgebraMap& f, Side side);

}  // namespace codomin
