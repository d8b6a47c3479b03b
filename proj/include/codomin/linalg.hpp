#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "codomin/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<codomin::Scalar> : GenericNumTraits<codomin::Scalar> {
  using Real = codomin::Scalar;
  using NonInteger = codomin::Scalar;
  using Nested = codomin::Scalar;
  using Literal = codomin::Scalar;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace codomin {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

Matrix zeros(Field f, Index rows, Index cols);
Matrix identity(Field f, Index n);
Vector unit_vector(Field f, Index n, Index i);
/// Coerces literal entries into `f`.
Matrix bind(const Matrix& m, Field f);

// Operands are evaluated once up front: coefficient access on an unevaluated
// product expression would recompute the whole product per entry.
template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& expr) {
  const auto& m = expr.eval();
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Shape-checked exact equality.
template <class A, class B>
bool equal(const Eigen::MatrixBase<A>& ea, const Eigen::MatrixBase<B>& eb) {
  const auto& a = ea.eval();
  const auto& b = eb.eval();
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// Kronecker product: (A⊗B)(i·rB + k, j·cB + l) = A(i,j)·B(k,l). The flat
/// index of e_i⊗e_j in k^a⊗k^b is i·b + j throughout the library.
template <class A, class B>
Matrix kron(const Eigen::MatrixBase<A>& ea, const Eigen::MatrixBase<B>& b) {
  const auto& a = ea.eval();
  const Index rb = b.rows(), cb = b.cols();
  Matrix out(a.rows() * rb, a.cols() * cb);
  const Matrix bb = b;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Scalar aij = a(i, j);
      if (aij.is_zero()) {
        for (Index l = 0; l < cb; ++l)
          for (Index k = 0; k < rb; ++k) out(i * rb + k, j * cb + l) = aij;
      } else {
        out.block(i * rb, j * cb, rb, cb) = bb * aij;
      }
    }
  }
  return out;
}

/// (a⊗b)·x computed column by column, skipping zeros, without forming the
/// Kronecker product.
Matrix kron_apply(Field f, const Matrix& a, const Matrix& b, const Matrix& x);

/// The flip k^a⊗k^b → k^b⊗k^a.
Matrix flip(Field f, Index a, Index b);

/// A linear subspace of k^n in canonical form: the basis rows are the nonzero
/// rows of the reduced row-echelon form, so equality is matrix identity.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field f, Index ambient_dim);
  static Subspace full(Field f, Index ambient_dim);
  /// Span of the rows of `rows` (which must have `ambient_dim` columns).
  static Subspace span(Field f, Index ambient_dim, const Matrix& rows);
  /// Span of the columns of `m`.
  static Subspace column_span(Field f, const Matrix& m);

  Field field() const { return field_; }
  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  /// dim × ambient_dim, RREF.
  const Matrix& basis() const { return basis_; }
  /// ambient_dim × dim; the inclusion map of the subspace.
  Matrix inclusion() const { return basis_.transpose(); }
  const std::vector<Index>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member vector in the basis (read off at the pivots).
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Field field_;
  Index ambient_ = 0;
  Matrix basis_;
  std::vector<Index> pivots_;
};

struct Echelon {
  Matrix reduced;  // rank × cols, RREF
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

Echelon rref(const Matrix& m, Field f);

struct KernelImage {
  Subspace kernel;
  Subspace image;
  Index rank = 0;
};

KernelImage kernel_image_rank(const Matrix& m, Field f);
Subspace kernel(const Matrix& m, Field f);
/// Column span.
Subspace image(const Matrix& m, Field f);
Index rank(const Matrix& m, Field f);

struct LinearSolution {
  Vector particular;
  Subspace kernel;
};

/// One solution of m·x = b (free variables set to zero) plus the kernel of m;
/// std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& m, const Vector& b, Field f);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
bool contains(const Subspace& u, const Subspace& w);

struct QuotientMaps {
  Matrix projection;  // (n - dim U) × n, kernel exactly U
  Matrix section;     // n × (n - dim U), projection·section = I
};

/// Quotient k^n → k^n/U using the non-pivot standard basis vectors as the
/// complement basis.
QuotientMaps quotient_basis(const Subspace& u);

/// m(U).
Subspace map_subspace(const Matrix& m, const Subspace& u);
/// {x : m·x ∈ W}.
Subspace preimage(const Matrix& m, const Subspace& w);
/// U⊗W as a subspace of k^a⊗k^b.
Subspace tensor(const Subspace& u, const Subspace& w);

}  // namespace codomin
