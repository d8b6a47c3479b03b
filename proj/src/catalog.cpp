#include "codomin/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "codomin/error.hpp"

namespace codomin {

namespace {

[[noreturn]] void bad(const std::string& msg) { raise(Errc::BadParams, msg); }

Scalar one(Field f) { return Scalar(f, 1); }

int parse_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) bad("missing parameter " + key);
  try {
    std::size_t used = 0;
    const int v = std::stoi(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    bad("parameter " + key + " is not an integer: " + it->second);
  }
}

std::string param_or(const std::map<std::string, std::string>& params, const std::string& key,
                     const std::string& fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int group_inverse(const GroupTable& t, int i) {
  for (int j = 0; j < static_cast<int>(t.size()); ++j)
    if (t[i][j] == 0) return j;
  bad("element without inverse");
}

}  // namespace

void validate_group_table(const GroupTable& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) bad("empty group table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n) bad("group table is not square");
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n) bad("group table entry out of range");
      if (seen[v]) bad("group table row is not a permutation");
      seen[v] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    if (t[0][i] != i || t[i][0] != i) bad("row and column 0 must be the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) bad("group table is not associative");
}

GroupTable cyclic_group(int n) {
  if (n < 1) bad("cyclic group order must be positive");
  GroupTable t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

GroupTable group_table(const std::string& name) {
  std::smatch m;
  static const std::regex cyclic(R"(C([0-9]+))"), product(R"(C([0-9]+)xC([0-9]+))");
  if (std::regex_match(name, m, cyclic)) return cyclic_group(std::stoi(m[1]));
  if (std::regex_match(name, m, product)) {
    const int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a < 1 || b < 1) bad("cyclic factor order must be positive");
    GroupTable t(a * b, std::vector<int>(a * b));
    for (int x = 0; x < a * b; ++x)
      for (int y = 0; y < a * b; ++y) t[x][y] = ((x / b + y / b) % a) * b + (x % b + y % b) % b;
    return t;
  }
  if (name == "S3") {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    GroupTable t(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
        t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    return t;
  }
  bad("unknown group " + name);
}

GroupTable inverse_table(const GroupTable& t) {
  GroupTable out(1, std::vector<int>(t.size()));
  for (int i = 0; i < static_cast<int>(t.size()); ++i) out[0][i] = group_inverse(t, i);
  return out;
}

HopfAlgebra trivial_hopf(Field f) { return group_algebra(f, cyclic_group(1)); }

Coalgebra trivial_coalgebra(Field f) { return trivial_hopf(f).coalgebra(); }

HopfAlgebra group_algebra(Field f, const GroupTable& t) {
  validate_group_table(t);
  const Index n = static_cast<Index>(t.size());
  HopfAlgebra h;
  h.bialgebra.coalgebra = {f, n, zeros(f, n * n, n), Matrix::Constant(1, n, one(f))};
  h.bialgebra.algebra = {f, n, zeros(f, n, n * n), unit_vector(f, n, 0)};
  h.antipode = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) {
    h.bialgebra.coalgebra.delta(i * n + i, i) = one(f);
    h.antipode(group_inverse(t, static_cast<int>(i)), i) = one(f);
    for (Index j = 0; j < n; ++j) h.bialgebra.algebra.mul(t[i][j], i * n + j) = one(f);
  }
  return h;
}

HopfAlgebra function_algebra(Field f, const GroupTable& t) { return dualize(group_algebra(f, t)); }

HopfAlgebra taft(Field f, int n, const Scalar& q_in) {
  if (n < 2) bad("Taft algebras need n >= 2");
  const Scalar q = q_in.bind(f);
  Scalar power = one(f);
  for (int k = 1; k <= n; ++k) {
    power *= q;
    if (k < n && power.is_one()) bad("root " + q.str() + " is not a primitive " + std::to_string(n) + "-th root");
  }
  if (!power.is_one()) bad("root " + q.str() + " is not an " + std::to_string(n) + "-th root of unity");
  // A primitive n-th root with n = 2 is −1 ≠ 1, which already excludes characteristic 2.

  const Index d = static_cast<Index>(n) * n;
  auto idx = [n](int i, int j) { return static_cast<Index>(j) * n + i; };
  std::vector<Scalar> qpow(n);
  qpow[0] = one(f);
  for (int k = 1; k < n; ++k) qpow[k] = qpow[k - 1] * q;
  const Scalar qinv = q.inverse();

  Algebra alg{f, d, zeros(f, d, d * d), unit_vector(f, d, 0)};
  // (g^a x^b)(g^c x^d) = q^{-bc} g^{a+c} x^{b+d}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (b + e >= n) continue;
          Scalar coef = one(f);
          for (int k = 0; k < (b * c) % n; ++k) coef *= qinv;
          alg.mul(idx((a + c) % n, b + e), idx(a, b) * d + idx(c, e)) = coef;
        }

  auto basis = [&](int i, int j) { return unit_vector(f, d, idx(i, j)); };
  const Vector delta_g = kron(basis(1, 0), basis(1, 0));
  const Vector delta_x = Vector(kron(basis(0, 1), basis(0, 0)) + kron(basis(1, 0), basis(0, 1)));
  Coalgebra coalg{f, d, zeros(f, d * d, d), zeros(f, 1, d)};
  Vector gpow = kron(basis(0, 0), basis(0, 0));
  for (int i = 0; i < n; ++i) {
    Vector v = gpow;
    for (int j = 0; j < n; ++j) {
      coalg.delta.col(idx(i, j)) = v;
      v = tensor_product_multiply(alg, alg, v, delta_x);
    }
    coalg.counit(0, idx(i, 0)) = one(f);
    gpow = tensor_product_multiply(alg, alg, gpow, delta_g);
  }

  // S is an anti-homomorphism: S(g^i x^j) = S(x)^j S(g)^i, S(g) = g^{-1}, S(x) = -g^{-1}x.
  auto multiply = [&](const Vector& u, const Vector& v) { return Vector(alg.mul * kron(u, v)); };
  const Vector s_g = basis(n - 1, 0);
  const Vector s_x = Vector(-basis(n - 1, 1));
  Matrix antipode = zeros(f, d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vector v = basis(0, 0);
      for (int k = 0; k < j; ++k) v = multiply(v, s_x);
      for (int k = 0; k < i; ++k) v = multiply(v, s_g);
      antipode.col(idx(i, j)) = v;
    }
  return {{coalg, alg}, antipode};
}

HopfAlgebra sweedler4(Field f) {
  if (f.characteristic() == 2) bad("the Sweedler algebra needs characteristic other than 2");
  return taft(f, 2, Scalar(f, -1));
}

Coalgebra comatrix(Field f, int n) {
  if (n < 1) bad("comatrix size must be positive");
  const Index d = static_cast<Index>(n) * n;
  Coalgebra c{f, d, zeros(f, d * d, d), zeros(f, 1, d)};
  for (int i = 0; i < n; ++i) {
    c.counit(0, i * n + i) = one(f);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c.delta((i * n + k) * d + (k * n + j), i * n + j) = one(f);
  }
  return c;
}

Algebra matrix_algebra(Field f, int n) { return dualize(comatrix(f, n)); }

Algebra truncated_polynomial(Field f, int n) {
  if (n < 1) bad("truncation degree must be positive");
  Algebra a{f, n, zeros(f, n, static_cast<Index>(n) * n), unit_vector(f, n, 0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) a.mul(i + j, i * n + j) = one(f);
  return a;
}

Coalgebra divided_power(Field f, int n) { return dualize(truncated_polynomial(f, n)); }

Algebra upper_triangular(Field f) {
  // e11 = 0, e12 = 1, e22 = 2
  Algebra a{f, 3, zeros(f, 3, 9), zeros(f, 3, 1)};
  a.unit(0, 0) = a.unit(2, 0) = one(f);
  a.mul(0, 0 * 3 + 0) = one(f);
  a.mul(1, 0 * 3 + 1) = one(f);
  a.mul(1, 1 * 3 + 2) = one(f);
  a.mul(2, 2 * 3 + 2) = one(f);
  return a;
}

Algebra diagonal(Field f) {
  Algebra a{f, 2, zeros(f, 2, 4), Matrix::Constant(2, 1, one(f))};
  a.mul(0, 0) = a.mul(1, 3) = one(f);
  return a;
}

AlgebraPair triangular_pair(Field f) {
  Matrix inc = zeros(f, 3, 2);
  inc(0, 0) = inc(2, 1) = one(f);
  AlgebraMap i{diagonal(f), upper_triangular(f), inc};
  return {i, dualize(i)};
}

AlgebraPair upper_triangular_pair(Field f) {
  Matrix inc = zeros(f, 4, 3);
  inc(0, 0) = inc(1, 1) = inc(3, 2) = one(f);
  AlgebraMap i{upper_triangular(f), matrix_algebra(f, 2), inc};
  return {i, dualize(i)};
}

CyclicPair cyclic_pair(Field f, int m, int n) {
  if (m < 1 || n < 1 || m % n != 0) bad("cyclic_pair needs n dividing m");
  const HopfAlgebra big = group_algebra(f, cyclic_group(m)), small = group_algebra(f, cyclic_group(n));
  Matrix inc = zeros(f, m, n), proj = zeros(f, n, m);
  for (int i = 0; i < n; ++i) inc(i * (m / n), i) = one(f);
  for (int i = 0; i < m; ++i) proj(i % n, i) = one(f);
  return {{small, big, inc}, {dualize(big), dualize(small), inc.transpose()}, {big, small, proj}};
}

HopfMap counit_map(const HopfAlgebra& h) {
  return {h, trivial_hopf(h.field()), h.coalgebra().counit};
}

HopfMap unit_map(const HopfAlgebra& h) { return {trivial_hopf(h.field()), h, h.algebra().unit}; }

HopfMap sweedler_projection(Field f) {
  Matrix p = zeros(f, 2, 4);
  p(0, 0) = p(1, 1) = one(f);
  return {sweedler4(f), group_algebra(f, cyclic_group(2)), p};
}

// ---------------------------------------------------------------------------

Field field_of(const AnyObject& x) {
  return std::visit([](const auto& o) { return field_of(o); }, x);
}

Index dim_of(const AnyObject& x) {
  return std::visit([](const auto& o) { return dim_of(o); }, x);
}

const char* kind_name(const AnyObject& x) {
  static const char* names[] = {"coalgebra", "algebra", "bialgebra", "hopf"};
  return names[x.index()];
}

std::vector<std::string> catalog_entries() {
  return {"trivial",       "group_algebra",   "function_algebra",      "sweedler4",  "taft",
          "comatrix",      "divided_power",   "triangular_pair",       "upper_triangular_pair", "cyclic_pair"};
}

CatalogBuild build_catalog(const std::string& name, Field f, const std::map<std::string, std::string>& params) {
  CatalogBuild out;
  auto add_hopf = [&](const std::string& obj, const HopfAlgebra& h) {
    out.objects.emplace_back("k", trivial_hopf(f));
    out.objects.emplace_back(obj, h);
    out.morphisms.push_back({"eps", obj, "k", h.coalgebra().counit});
    out.morphisms.push_back({"unit", "k", obj, h.algebra().unit});
  };
  auto add_coalgebra = [&](const Coalgebra& c) {
    out.objects.emplace_back("k", trivial_coalgebra(f));
    out.objects.emplace_back("C", c);
    out.morphisms.push_back({"eps", "C", "k", c.counit});
  };

  if (name == "trivial") {
    out.objects.emplace_back("k", trivial_hopf(f));
  } else if (name == "group_algebra" || name == "function_algebra") {
    const std::string g = param_or(params, "group", "C2");
    const GroupTable t = group_table(g);
    add_hopf(name == "group_algebra" ? "k" + g : "f" + g,
             name == "group_algebra" ? group_algebra(f, t) : function_algebra(f, t));
  } else if (name == "sweedler4") {
    add_hopf("H4", sweedler4(f));
    const HopfMap pi = sweedler_projection(f);
    out.objects.emplace_back("kC2", pi.dst);
    out.morphisms.push_back({"pi", "H4", "kC2", pi.matrix});
    Matrix inc = zeros(f, 4, 2);
    inc(0, 0) = inc(1, 1) = one(f);
    out.morphisms.push_back({"incl", "kC2", "H4", inc});
  } else if (name == "taft") {
    const int n = parse_int(params, "n");
    auto it = params.find("root");
    Scalar q;
    if (it != params.end()) q = Scalar::parse(f, it->second);
    else if (n == 2) q = Scalar(f, -1);
    else bad("taft needs root=SCALAR for n > 2");
    if (f.kind() == Field::Kind::Rationals && n > 2) bad("over Q only n = 2 is available");
    add_hopf("H", taft(f, n, q));
  } else if (name == "comatrix") {
    add_coalgebra(comatrix(f, parse_int(params, "n")));
  } else if (name == "divided_power") {
    add_coalgebra(divided_power(f, parse_int(params, "n")));
  } else if (name == "triangular_pair" || name == "upper_triangular_pair") {
    const bool lower = name == "triangular_pair";
    const AlgebraPair p = lower ? triangular_pair(f) : upper_triangular_pair(f);
    const std::string a = lower ? "D2" : "T2", b = lower ? "T2" : "M2";
    out.objects.emplace_back(a, p.inclusion.src);
    out.objects.emplace_back(b, p.inclusion.dst);
    out.objects.emplace_back(a + "dual", p.dual.dst);
    out.objects.emplace_back(b + "dual", p.dual.src);
    out.morphisms.push_back({"inclusion", a, b, p.inclusion.matrix});
    out.morphisms.push_back({"q", b + "dual", a + "dual", p.dual.matrix});
  } else if (name == "cyclic_pair") {
    const int m = parse_int(params, "m"), n = parse_int(params, "n");
    const CyclicPair p = cyclic_pair(f, m, n);
    const std::string km = "kC" + std::to_string(m), kn = "kC" + std::to_string(n);
    const std::string fm = "fC" + std::to_string(m), fn = "fC" + std::to_string(n);
    out.objects.emplace_back(kn, p.inclusion.src);
    out.objects.emplace_back(km, p.inclusion.dst);
    out.objects.emplace_back(fm, p.dual.src);
    out.objects.emplace_back(fn, p.dual.dst);
    out.morphisms.push_back({"inclusion", kn, km, p.inclusion.matrix});
    out.morphisms.push_back({"q", fm, fn, p.dual.matrix});
    out.morphisms.push_back({"projection", km, kn, p.projection.matrix});
  } else {
    bad("unknown catalog entry " + name);
  }
  return out;
}

}  // namespace codomin
