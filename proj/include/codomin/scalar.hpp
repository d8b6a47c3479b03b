#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace codomin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Scalar;

namespace detail {
struct FieldData;
}

/// Handle to an exact ground field: the rationals, a prime field, or a simple
/// extension base[t]/(m(t)) of one of those.
///
/// Fields are interned by their canonical spec string, so two handles compare
/// equal exactly when they describe the same field. The handle is trivially
/// copyable and the underlying data is immutable and never freed.
class Field {
 public:
  enum class Kind { Rationals, Prime, Extension };

  /// The unbound handle. Scalars carrying it are integer/rational literals.
  Field() = default;

  static Field rationals();
  static Field prime(std::int64_t p);
  /// `modulus` is monic, lowest coefficient first, over `base`; it is checked
  /// for irreducibility. Towers (extensions of extensions) are rejected.
  static Field extension(Field base, std::vector<Scalar> modulus);
  /// Parses `Q`, `F<p>`, `Q[t]/<poly>` and `F<p>[t]/<poly>`.
  static Field parse(std::string_view spec);

  bool valid() const noexcept { return data_ != nullptr; }
  Kind kind() const;
  std::int64_t characteristic() const;
  /// The field this one extends; the field itself when it is not an extension.
  Field base() const;
  /// Degree over the prime field / rationals (1 unless an extension).
  int degree() const;
  /// Monic modulus of an extension, lowest coefficient first (empty otherwise).
  std::span<const Scalar> modulus() const;
  const std::string& str() const;

  friend bool operator==(Field a, Field b) noexcept { return a.data_ == b.data_; }

 private:
  explicit Field(const detail::FieldData* data) : data_(data) {}
  friend class Scalar;
  const detail::FieldData* data_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, Field f);

/// An exact field element.
///
/// A scalar is either bound to a Field or an unbound rational literal. Literals
/// come from `Scalar(0)`/`Scalar(1)` style construction (which is what Eigen
/// uses internally) and are coerced into the field of the other operand on
/// first contact. Code that builds matrices should always produce bound
/// scalars; literals other than 0 and 1 are only safe where no field is known.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I value) : q_(value) {}  // NOLINT(google-explicit-constructor)

  /// The image of a rational number in `field`. Fails with DivisionByZero when
  /// the denominator vanishes in positive characteristic.
  Scalar(Field field, const Rational& value);
  /// Element of an extension field from its power-basis coordinates over the
  /// base field (any length; reduced modulo the minimal polynomial).
  static Scalar from_coefficients(Field ext, std::vector<Scalar> coefficients);
  /// The generator t of an extension field.
  static Scalar generator(Field ext);
  /// Parses `a`, `-a`, `a/b` into `field`.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool bound() const noexcept { return field_.valid(); }
  bool is_zero() const;
  bool is_one() const;

  /// This scalar as an element of `f`; literals are mapped, bound scalars must
  /// already live in `f` (FieldMismatch otherwise).
  Scalar bind(Field f) const;

  Scalar inverse() const;

  /// Rational value (rationals and literals only).
  const Rational& rational_value() const { return q_; }
  /// Residue in [0, p) (prime fields only).
  std::int64_t residue() const { return r_; }
  /// Power-basis coordinate i over the base field (extensions only).
  Scalar coefficient(int i) const;
  /// All d power-basis coordinates (extensions only).
  std::vector<Scalar> coefficients() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  static Field common_field(const Scalar& a, const Scalar& b);

  Field field_;
  Rational q_;                    // rationals and literals
  std::int64_t r_ = 0;            // prime fields
  std::vector<Scalar> coeffs_;    // extensions: trimmed power-basis coordinates
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Image of `a` under the inclusion of ext.base() into `ext`.
Scalar embed_scalar(const Scalar& a, Field ext);

/// Parses `c_k*t^k + ... + c_0` into coefficients over `base`, lowest first.
std::vector<Scalar> parse_polynomial(std::string_view text, Field base);
/// Canonical text form of a polynomial in t (highest degree first).
std::string polynomial_string(std::span<const Scalar> coefficients);

// Eigen looks these up by ADL.
inline const Scalar& conj(const Scalar& x) { return x; }
inline const Scalar& real(const Scalar& x) { return x; }
inline Scalar imag(const Scalar&) { return Scalar(0); }
inline Scalar abs2(const Scalar& x) { return x * x; }

}  // namespace codomin
