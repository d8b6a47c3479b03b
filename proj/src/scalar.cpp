#include "codomin/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "codomin/error.hpp"

namespace codomin {

namespace detail {
struct FieldData {
  Field::Kind kind = Field::Kind::Rationals;
  std::int64_t p = 0;
  Field base;
  std::vector<Scalar> modulus;
  std::string name;
};
}  // namespace detail

namespace {

using Poly = std::vector<Scalar>;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<detail::FieldData>> r;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t residue_of(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t residue_of(const Rational& q, std::int64_t p) {
  std::int64_t num = residue_of(boost::multiprecision::numerator(q), p);
  std::int64_t den = residue_of(boost::multiprecision::denominator(q), p);
  if (den == 0)
    raise(Errc::DivisionByZero, "denominator of " + q.str() + " vanishes modulo " + std::to_string(p));
  return mod_mul(num, mod_pow(den, p - 2, p), p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, Field base) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Scalar(base, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, Field base) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar(base, 0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division with remainder; `b` must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, Field base) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  Poly quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Scalar(base, 0));
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Scalar c = a.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(quot);
  return {std::move(quot), std::move(a)};
}

bool divides(const Poly& g, const Poly& f, Field base) {
  return poly_divmod(f, g, base).second.empty();
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n > Integer(1000000000000LL)) raise(Errc::Unsupported, "coefficient too large for the rational root test");
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

void check_irreducible(Field base, const Poly& m) {
  const int d = static_cast<int>(m.size()) - 1;
  if (base.kind() == Field::Kind::Prime) {
    const std::int64_t p = base.characteristic();
    for (int k = 1; k <= d / 2; ++k) {
      double count = 1;
      for (int i = 0; i < k; ++i) count *= static_cast<double>(p);
      if (count > 2e6) raise(Errc::Unsupported, "irreducibility check too large for " + base.str());
      const auto total = static_cast<std::int64_t>(count);
      for (std::int64_t code = 0; code < total; ++code) {
        Poly g(k + 1, Scalar(base, 0));
        g[k] = Scalar(base, 1);
        std::int64_t c = code;
        for (int i = 0; i < k; ++i) {
          g[i] = Scalar(base, Rational(c % p));
          c /= p;
        }
        if (divides(g, m, base))
          raise(Errc::BadParams, "minimal polynomial " + polynomial_string(m) + " is reducible over " + base.str());
      }
    }
    return;
  }
  // Over Q a polynomial of degree 2 or 3 is irreducible iff it has no rational root.
  if (d > 3) raise(Errc::Unsupported, "irreducibility over Q is only decided up to degree 3");
  Integer lcm = 1;
  for (const auto& c : m) {
    const Integer den = boost::multiprecision::denominator(c.rational_value());
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Integer> ints;
  for (const auto& c : m) ints.push_back(boost::multiprecision::numerator(Rational(c.rational_value() * lcm)));
  if (ints.front() == 0)
    raise(Errc::BadParams, "minimal polynomial " + polynomial_string(m) + " has the root 0");
  for (const auto& num : divisors(ints.front())) {
    for (const auto& den : divisors(ints.back())) {
      for (int sign : {1, -1}) {
        const Rational x(num * sign, den);
        Rational value = 0;
        for (auto it = m.rbegin(); it != m.rend(); ++it) value = value * x + it->rational_value();
        if (value == 0)
          raise(Errc::BadParams,
                "minimal polynomial " + polynomial_string(m) + " has the rational root " + x.str());
      }
    }
  }
}

const detail::FieldData* intern(std::unique_ptr<detail::FieldData> data) {
  std::lock_guard lock(registry_mutex());
  auto& slot = registry()[data->name];
  if (!slot) slot = std::move(data);
  return slot.get();
}

std::string rational_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  while (out.size() >= 2 && out.front() == '(' && out.back() == ')') out = out.substr(1, out.size() - 2);
  return out;
}

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (part.size() == start) raise(Errc::ParseError, "malformed number '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) raise(Errc::ParseError, "malformed number '" + s + "'");
    return Integer(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) raise(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  static const Field q = [] {
    auto d = std::make_unique<detail::FieldData>();
    d->kind = Kind::Rationals;
    d->name = "Q";
    return Field(intern(std::move(d)));
  }();
  return q;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) raise(Errc::BadParams, std::to_string(p) + " is not prime");
  auto d = std::make_unique<detail::FieldData>();
  d->kind = Kind::Prime;
  d->p = p;
  d->name = "F" + std::to_string(p);
  return Field(intern(std::move(d)));
}

Field Field::extension(Field base, std::vector<Scalar> modulus) {
  if (!base.valid()) raise(Errc::BadParams, "extension of an unbound field");
  if (base.kind() == Kind::Extension)
    raise(Errc::Unsupported, "towers of extensions are not supported (base " + base.str() + ")");
  for (auto& c : modulus) c = c.bind(base);
  trim(modulus);
  if (modulus.size() < 3) raise(Errc::BadParams, "minimal polynomial must have degree at least 2");
  if (!modulus.back().is_one()) raise(Errc::BadParams, "minimal polynomial must be monic");
  auto d = std::make_unique<detail::FieldData>();
  d->kind = Kind::Extension;
  d->p = base.characteristic();
  d->base = base;
  d->name = base.str() + "[t]/" + polynomial_string(modulus);
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(d->name);
    if (it != registry().end()) return Field(it->second.get());
  }
  check_irreducible(base, modulus);
  d->modulus = std::move(modulus);
  return Field(intern(std::move(d)));
}

Field Field::parse(std::string_view spec) {
  const std::string s = strip(spec);
  const auto bracket = s.find("[t]/");
  const std::string head = s.substr(0, bracket);
  Field base;
  if (head == "Q") {
    base = rationals();
  } else if (head.size() > 1 && head[0] == 'F' &&
             std::all_of(head.begin() + 1, head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    if (head.size() > 18) raise(Errc::ParseError, "prime too large in field spec '" + s + "'");
    base = prime(std::stoll(head.substr(1)));
  } else {
    raise(Errc::ParseError, "unrecognized field spec '" + s + "'");
  }
  if (bracket == std::string::npos) return base;
  return extension(base, parse_polynomial(s.substr(bracket + 4), base));
}

Field::Kind Field::kind() const {
  if (!data_) raise(Errc::FieldMismatch, "unbound field");
  return data_->kind;
}

std::int64_t Field::characteristic() const { return data_ ? data_->p : 0; }

Field Field::base() const {
  if (data_ && data_->kind == Kind::Extension) return data_->base;
  return *this;
}

int Field::degree() const {
  if (data_ && data_->kind == Kind::Extension) return static_cast<int>(data_->modulus.size()) - 1;
  return 1;
}

std::span<const Scalar> Field::modulus() const {
  if (!data_) return {};
  return data_->modulus;
}

const std::string& Field::str() const {
  static const std::string unbound = "<unbound>";
  return data_ ? data_->name : unbound;
}

std::ostream& operator<<(std::ostream& os, Field f) { return os << f.str(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (!field.valid()) {
    q_ = value;
    return;
  }
  switch (field.kind()) {
    case Field::Kind::Rationals:
      q_ = value;
      break;
    case Field::Kind::Prime:
      r_ = residue_of(value, field.characteristic());
      break;
    case Field::Kind::Extension:
      if (value != 0) coeffs_.push_back(Scalar(field.base(), value));
      break;
  }
}

Scalar Scalar::from_coefficients(Field ext, std::vector<Scalar> coefficients) {
  if (!ext.valid() || ext.kind() != Field::Kind::Extension)
    raise(Errc::FieldMismatch, "coefficient lists describe extension-field elements only");
  const Field base = ext.base();
  for (auto& c : coefficients) c = c.bind(base);
  trim(coefficients);
  Scalar out;
  out.field_ = ext;
  const std::span<const Scalar> m = ext.modulus();
  if (coefficients.size() >= m.size()) {
    coefficients = poly_divmod(std::move(coefficients), Poly(m.begin(), m.end()), base).second;
  }
  out.coeffs_ = std::move(coefficients);
  return out;
}

Scalar Scalar::generator(Field ext) {
  const Field base = ext.base();
  return from_coefficients(ext, {Scalar(base, 0), Scalar(base, 1)});
}

Scalar Scalar::parse(Field field, std::string_view text) {
  if (field.valid() && field.kind() == Field::Kind::Extension)
    return from_coefficients(field, parse_polynomial(text, field.base()));
  return Scalar(field, parse_rational(text));
}

bool Scalar::is_zero() const {
  if (!field_.valid()) return q_ == 0;
  switch (field_.data_->kind) {
    case Field::Kind::Rationals: return q_ == 0;
    case Field::Kind::Prime: return r_ == 0;
    case Field::Kind::Extension: return coeffs_.empty();
  }
  return false;
}

bool Scalar::is_one() const {
  if (!field_.valid()) return q_ == 1;
  switch (field_.data_->kind) {
    case Field::Kind::Rationals: return q_ == 1;
    case Field::Kind::Prime: return r_ == 1;
    case Field::Kind::Extension: return coeffs_.size() == 1 && coeffs_[0].is_one();
  }
  return false;
}

Scalar Scalar::bind(Field f) const {
  if (field_ == f) return *this;
  if (field_.valid())
    raise(Errc::FieldMismatch, "scalar over " + field_.str() + " used where " + f.str() + " is expected");
  return Scalar(f, q_);
}

Field Scalar::common_field(const Scalar& a, const Scalar& b) {
  if (!a.field_.valid()) return b.field_;
  if (!b.field_.valid() || a.field_ == b.field_) return a.field_;
  raise(Errc::FieldMismatch, "arithmetic between " + a.field_.str() + " and " + b.field_.str());
}

Scalar Scalar::coefficient(int i) const {
  if (!field_.valid() || field_.kind() != Field::Kind::Extension)
    raise(Errc::FieldMismatch, "coefficient() requires an extension-field scalar");
  if (i >= 0 && static_cast<std::size_t>(i) < coeffs_.size()) return coeffs_[i];
  return Scalar(field_.base(), 0);
}

std::vector<Scalar> Scalar::coefficients() const {
  std::vector<Scalar> out;
  for (int i = 0; i < field_.degree(); ++i) out.push_back(coefficient(i));
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (!field_.valid()) {
    out.q_ = -q_;
    return out;
  }
  switch (field_.kind()) {
    case Field::Kind::Rationals: out.q_ = -q_; break;
    case Field::Kind::Prime: out.r_ = r_ == 0 ? 0 : field_.characteristic() - r_; break;
    case Field::Kind::Extension:
      for (auto& c : out.coeffs_) c = -c;
      break;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& b) {
  const Field f = common_field(*this, b);
  if (!f.valid()) {
    q_ += b.q_;
    return *this;
  }
  if (b.is_zero()) {
    if (field_ != f) *this = bind(f);
    return *this;
  }
  if (is_zero()) {
    *this = b.bind(f);
    return *this;
  }
  if (field_ != f) *this = bind(f);
  switch (f.kind()) {
    case Field::Kind::Rationals:
      q_ += b.q_;
      break;
    case Field::Kind::Prime: {
      const std::int64_t p = f.characteristic();
      const std::int64_t rb = b.field_.valid() ? b.r_ : residue_of(b.q_, p);
      r_ += rb;
      if (r_ >= p) r_ -= p;
      break;
    }
    case Field::Kind::Extension: {
      const Scalar bb = b.bind(f);
      if (coeffs_.size() < bb.coeffs_.size()) coeffs_.resize(bb.coeffs_.size(), Scalar(f.base(), 0));
      for (std::size_t i = 0; i < bb.coeffs_.size(); ++i) coeffs_[i] += bb.coeffs_[i];
      trim(coeffs_);
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) { return *this += -b; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  const Field f = Scalar::common_field(a, b);
  Scalar out;
  out.field_ = f;
  if (!f.valid()) {
    out.q_ = a.q_ * b.q_;
    return out;
  }
  if (a.is_zero() || b.is_zero()) return out;
  switch (f.kind()) {
    case Field::Kind::Rationals:
      out.q_ = a.q_ * b.q_;
      break;
    case Field::Kind::Prime: {
      const std::int64_t p = f.characteristic();
      const std::int64_t ra = a.field_.valid() ? a.r_ : residue_of(a.q_, p);
      const std::int64_t rb = b.field_.valid() ? b.r_ : residue_of(b.q_, p);
      out.r_ = mod_mul(ra, rb, p);
      break;
    }
    case Field::Kind::Extension: {
      const Scalar aa = a.bind(f);
      const Scalar bb = b.bind(f);
      const std::span<const Scalar> m = f.modulus();
      Poly prod = poly_mul(aa.coeffs_, bb.coeffs_, f.base());
      if (prod.size() >= m.size()) prod = poly_divmod(std::move(prod), Poly(m.begin(), m.end()), f.base()).second;
      out.coeffs_ = std::move(prod);
      break;
    }
  }
  return out;
}

Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }

Scalar Scalar::inverse() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero");
  Scalar out = *this;
  if (!field_.valid()) {
    out.q_ = 1 / q_;
    return out;
  }
  switch (field_.kind()) {
    case Field::Kind::Rationals:
      out.q_ = 1 / q_;
      break;
    case Field::Kind::Prime: {
      const std::int64_t p = field_.characteristic();
      out.r_ = mod_pow(r_, p - 2, p);
      break;
    }
    case Field::Kind::Extension: {
      // Extended Euclid: s*a + u*m = g with g a nonzero constant.
      const Field base = field_.base();
      const std::span<const Scalar> ms = field_.modulus();
      Poly r0(ms.begin(), ms.end()), r1 = coeffs_;
      Poly s0, s1{Scalar(base, 1)};
      while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, base);
        Poly s2 = poly_sub(s0, poly_mul(q, s1, base), base);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      // r0 is the gcd, a nonzero constant since the modulus is irreducible.
      const Scalar g_inv = r0.front().inverse();
      for (auto& c : s0) c *= g_inv;
      out = from_coefficients(field_, std::move(s0));
      break;
    }
  }
  return out;
}

Scalar& Scalar::operator/=(const Scalar& b) {
  const Field f = common_field(*this, b);
  if (b.is_zero()) raise(Errc::DivisionByZero, "division by zero");
  if (!f.valid()) {
    q_ /= b.q_;
    return *this;
  }
  return *this = *this * b.bind(f).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_.valid() && b.field_.valid() && a.field_ != b.field_) return false;
  const Field f = a.field_.valid() ? a.field_ : b.field_;
  if (!f.valid()) return a.q_ == b.q_;
  if (a.field_ != b.field_) {
    try {
      return a.bind(f) == b.bind(f);
    } catch (const Error&) {
      return false;
    }
  }
  switch (f.kind()) {
    case Field::Kind::Rationals: return a.q_ == b.q_;
    case Field::Kind::Prime: return a.r_ == b.r_;
    case Field::Kind::Extension: return a.coeffs_ == b.coeffs_;
  }
  return false;
}

std::string Scalar::str() const {
  if (!field_.valid()) return rational_string(q_);
  switch (field_.kind()) {
    case Field::Kind::Rationals: return rational_string(q_);
    case Field::Kind::Prime: return std::to_string(r_);
    case Field::Kind::Extension: return polynomial_string(coeffs_);
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar embed_scalar(const Scalar& a, Field ext) {
  if (!ext.valid() || ext.kind() != Field::Kind::Extension)
    raise(Errc::FieldMismatch, "embedding target " + ext.str() + " is not an extension field");
  if (a.bound() && a.field() != ext.base())
    raise(Errc::FieldMismatch, "cannot embed a scalar over " + a.field().str() + " into " + ext.str());
  return Scalar::from_coefficients(ext, {a.bind(ext.base())});
}

std::vector<Scalar> parse_polynomial(std::string_view text, Field base) {
  const std::string s = strip(text);
  if (s.empty()) raise(Errc::ParseError, "empty polynomial");
  Poly out;
  std::size_t i = 0;
  auto fail = [&] { raise(Errc::ParseError, "malformed polynomial '" + s + "'"); };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -sign;
        ++i;
      }
    } else if (!first) {
      fail();
    }
    first = false;
    // Coefficient: digits with an optional /digits.
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coef = 1;
    const bool has_coef = i > start;
    if (has_coef) coef = parse_rational(s.substr(start, i - start));
    int degree = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coef) fail();
      ++i;
      if (i >= s.size() || s[i] != 't') fail();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start || i - start > 4) fail();
        degree = std::stoi(s.substr(start, i - start));
      }
    } else if (!has_coef) {
      fail();
    }
    if (out.size() <= static_cast<std::size_t>(degree)) out.resize(degree + 1, Scalar(base, 0));
    out[degree] += Scalar(base, coef * sign);
  }
  trim(out);
  return out;
}

std::string polynomial_string(std::span<const Scalar> coefficients) {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Scalar& c = coefficients[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    const std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k == 0) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace codomin
