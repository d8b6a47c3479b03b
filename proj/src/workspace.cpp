#include "codomin/workspace.hpp"

#include <algorithm>
#include <set>

#include "codomin/error.hpp"
#include "json.hpp"

namespace codomin {

using json = nlohmann::json;

namespace {

constexpr const char* kKinds[] = {"coalgebra", "algebra", "bialgebra", "hopf"};

[[noreturn]] void parse_error(const std::string& path, const std::string& what) {
  raise(Errc::ParseError, path + ": " + what);
}

[[noreturn]] void unknown(const std::string& what, const std::string& name) {
  raise(Errc::UnknownReference, "unknown " + what + " '" + name + "'", {name});
}

/// Runs a validation and reports failures as ValidationError naming `who`.
template <class Fn>
void validated(const std::string& who, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == Errc::AxiomViolation || e.code() == Errc::ShapeMismatch || e.code() == Errc::FieldMismatch) {
      std::string axioms;
      for (const auto& d : e.details()) axioms += (axioms.empty() ? "" : ", ") + d;
      raise(Errc::ValidationError, who + ": " + (axioms.empty() ? std::string(e.what()) : axioms), e.details());
    }
    throw;
  }
}

// ---------------------------------------------------------------------------
// Reading

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(path, "missing field '" + key + "'");
  return *it;
}

Index read_index(const json& j, const std::string& path, Index bound) {
  if (!j.is_number_integer()) parse_error(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v >= bound) parse_error(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<Index>(v);
}

Index read_dim(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) parse_error(path, "expected a nonnegative integer");
  return static_cast<Index>(j.get<std::int64_t>());
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_error(path, "expected a string");
  return j.get<std::string>();
}

Scalar read_scalar(Field f, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(f, Rational(j.get<std::int64_t>()));
    if (j.is_array()) {
      if (f.kind() != Field::Kind::Extension) parse_error(path, "coefficient lists need an extension field");
      std::vector<Scalar> coeffs;
      for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(read_scalar(f.base(), j[i], path + "/" + std::to_string(i)));
      return Scalar::from_coefficients(f, std::move(coeffs));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    parse_error(path, e.what());
  }
  parse_error(path, "expected a scalar");
}

Matrix read_vector_row(Field f, const json& j, Index n, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n)
    parse_error(path, "expected a list of " + std::to_string(n) + " scalars");
  Matrix out(1, n);
  for (Index i = 0; i < n; ++i) out(0, i) = read_scalar(f, j[i], path + "/" + std::to_string(i));
  return out;
}

Matrix read_matrix(Field f, const json& j, Index rows, Index cols, const std::string& path) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    parse_error(path, "expected " + std::to_string(rows) + " rows");
  Matrix out(rows, cols);
  for (Index r = 0; r < rows; ++r) out.row(r) = read_vector_row(f, j[r], cols, path + "/" + std::to_string(r));
  return out;
}

/// Entries [a, b, c, "s"]; `place` receives the indices and the scalar.
template <class Place>
void read_sparse(Field f, const json& j, Index n1, Index n2, Index n3, const std::string& path, Place&& place) {
  if (!j.is_array()) parse_error(path, "expected a list of entries");
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "/" + std::to_string(e);
    const json& entry = j[e];
    if (!entry.is_array() || entry.size() != 4) parse_error(p, "expected [index, index, index, scalar]");
    place(read_index(entry[0], p + "/0", n1), read_index(entry[1], p + "/1", n2), read_index(entry[2], p + "/2", n3),
          read_scalar(f, entry[3], p + "/3"));
  }
}

AnyObject read_object(Field f, const json& j, const std::string& path) {
  std::string kind = j.contains("kind") ? read_string(j["kind"], path + "/kind") : "coalgebra";
  if (std::find(std::begin(kKinds), std::end(kKinds), kind) == std::end(kKinds))
    parse_error(path + "/kind", "unknown kind '" + kind + "'");
  const Index n = read_dim(member(j, "dim", path), path + "/dim");
  const bool has_coalgebra = kind != "algebra";
  const bool has_algebra = kind != "coalgebra" || j.contains("mul") || j.contains("unit");
  const bool has_antipode = kind == "hopf" || j.contains("antipode");

  Coalgebra c{f, n, zeros(f, n * n, n), zeros(f, 1, n)};
  if (has_coalgebra) {
    read_sparse(f, member(j, "delta", path), n, n, n, path + "/delta",
                [&](Index k, Index a, Index b, const Scalar& s) { c.delta(a * n + b, k) += s; });
    c.counit = read_vector_row(f, member(j, "counit", path), n, path + "/counit");
  }
  Algebra a{f, n, zeros(f, n, n * n), zeros(f, n, 1)};
  if (has_algebra) {
    read_sparse(f, member(j, "mul", path), n, n, n, path + "/mul",
                [&](Index k, Index x, Index y, const Scalar& s) { a.mul(k, x * n + y) += s; });
    a.unit = read_vector_row(f, member(j, "unit", path), n, path + "/unit").transpose();
  }
  if (!has_coalgebra) return a;
  if (!has_algebra) return c;
  Bialgebra b{c, a};
  if (!has_antipode) return b;
  return HopfAlgebra{b, read_matrix(f, member(j, "antipode", path), n, n, path + "/antipode")};
}

int kind_rank(const std::string& kind) {
  if (kind == "coalgebra") return 0;
  if (kind == "bialgebra") return 2;
  if (kind == "hopf") return 3;
  return 1;
}

void validate_any(const AnyObject& x) {
  std::visit([](const auto& o) { validate(o); }, x);
}

// ---------------------------------------------------------------------------
// Writing

json scalar_json(const Scalar& s, Field f) {
  const Scalar b = s.bind(f);
  if (f.kind() != Field::Kind::Extension) return b.str();
  json out = json::array();
  std::vector<Scalar> coeffs = b.coefficients();
  coeffs.resize(static_cast<std::size_t>(f.degree()), Scalar(f.base(), 0));
  for (const Scalar& c : coeffs) out.push_back(c.bind(f.base()).str());
  return out;
}

json row_json(const Matrix& m, Index r, Field f) {
  json out = json::array();
  for (Index c = 0; c < m.cols(); ++c) out.push_back(scalar_json(m(r, c), f));
  return out;
}

json matrix_json(const Matrix& m, Field f) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(row_json(m, r, f));
  return out;
}

json object_json(const AnyObject& x) {
  const Field f = field_of(x);
  const Index n = dim_of(x);
  json out;
  out["kind"] = kind_name(x);
  out["dim"] = n;
  if (const auto c = coalgebra_part(x)) {
    json delta = json::array();
    for (Index k = 0; k < n; ++k)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          if (!c->delta(a * n + b, k).is_zero()) delta.push_back({k, a, b, scalar_json(c->delta(a * n + b, k), f)});
    out["delta"] = delta;
    out["counit"] = row_json(c->counit, 0, f);
  }
  if (const auto a = algebra_part(x)) {
    json mul = json::array();
    for (Index k = 0; k < n; ++k)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          if (!a->mul(k, i * n + j).is_zero()) mul.push_back({k, i, j, scalar_json(a->mul(k, i * n + j), f)});
    out["mul"] = mul;
    out["unit"] = row_json(a->unit.transpose(), 0, f);
  }
  if (const auto* h = std::get_if<HopfAlgebra>(&x)) out["antipode"] = matrix_json(h->antipode, f);
  return out;
}

/// Objects one key per line in sorted order; arrays of plain values on one
/// line; arrays of arrays or objects one element per line.
void print_canonical(const json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      print_canonical(value, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  const bool nested = j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) {
    return e.is_object() || (e.is_array() && std::any_of(e.begin(), e.end(), [](const json& x) { return x.is_structured(); }));
  });
  if (!j.is_array() || j.empty() || !nested) {
    if (j.is_array() && !j.empty() && j.front().is_array() && j.size() > 1) {
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) out += pad + j[i].dump(-1, ' ', false) + (i + 1 < j.size() ? ",\n" : "\n");
      out += close + "]";
      return;
    }
    out += j.dump();
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < j.size(); ++i) {
    out += pad;
    print_canonical(j[i], depth + 1, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += close + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

bool operator==(const WorkspaceMorphism& a, const WorkspaceMorphism& b) {
  return a.from == b.from && a.to == b.to && a.kind == b.kind && a.matrix.rows() == b.matrix.rows() &&
         a.matrix.cols() == b.matrix.cols() && equal(a.matrix, b.matrix);
}

bool operator==(const WorkspaceComodule& a, const WorkspaceComodule& b) {
  return a.over == b.over && a.comodule == b.comodule;
}

std::optional<Coalgebra> coalgebra_part(const AnyObject& x) {
  if (const auto* c = std::get_if<Coalgebra>(&x)) return *c;
  if (const auto* b = std::get_if<Bialgebra>(&x)) return b->coalgebra;
  if (const auto* h = std::get_if<HopfAlgebra>(&x)) return h->coalgebra();
  return std::nullopt;
}

std::optional<Algebra> algebra_part(const AnyObject& x) {
  if (const auto* a = std::get_if<Algebra>(&x)) return *a;
  if (const auto* b = std::get_if<Bialgebra>(&x)) return b->algebra;
  if (const auto* h = std::get_if<HopfAlgebra>(&x)) return h->algebra();
  return std::nullopt;
}

const AnyObject& Workspace::object(const std::string& name) const {
  const auto it = objects.find(name);
  if (it == objects.end()) unknown("object", name);
  return it->second;
}

const Subspace& Workspace::subspace(const std::string& name) const {
  const auto it = subspaces.find(name);
  if (it == subspaces.end()) unknown("subspace", name);
  return it->second;
}

const WorkspaceMorphism& Workspace::morphism(const std::string& name) const {
  const auto it = morphisms.find(name);
  if (it == morphisms.end()) unknown("morphism", name);
  return it->second;
}

const WorkspaceComodule& Workspace::comodule(const std::string& name) const {
  const auto it = comodules.find(name);
  if (it == comodules.end()) unknown("comodule", name);
  return it->second;
}

Coalgebra Workspace::coalgebra(const std::string& name) const {
  const auto c = coalgebra_part(object(name));
  if (!c) raise(Errc::ValidationError, "object '" + name + "' is not a coalgebra");
  return *c;
}

Algebra Workspace::algebra(const std::string& name) const {
  const auto a = algebra_part(object(name));
  if (!a) raise(Errc::ValidationError, "object '" + name + "' is not an algebra");
  return *a;
}

Bialgebra Workspace::bialgebra(const std::string& name) const {
  const AnyObject& x = object(name);
  if (const auto* b = std::get_if<Bialgebra>(&x)) return *b;
  if (const auto* h = std::get_if<HopfAlgebra>(&x)) return h->bialgebra;
  raise(Errc::ValidationError, "object '" + name + "' is not a bialgebra");
}

HopfAlgebra Workspace::hopf(const std::string& name) const {
  const AnyObject& x = object(name);
  if (const auto* h = std::get_if<HopfAlgebra>(&x)) return *h;
  raise(Errc::ValidationError, "object '" + name + "' is not a Hopf algebra");
}

std::string Workspace::morphism_kind(const std::string& name) const {
  const WorkspaceMorphism& m = morphism(name);
  const std::string a = kind_name(object(m.from));
  const std::string b = kind_name(object(m.to));
  std::string common;
  if (a == "algebra" || b == "algebra")
    common = (a == "coalgebra" || b == "coalgebra") ? "" : "algebra";
  else
    common = kKinds[std::min(kind_rank(a), kind_rank(b))];
  if (common.empty())
    raise(Errc::ValidationError, "morphism '" + name + "' joins a coalgebra and an algebra");
  if (m.kind.empty()) return common;
  const bool fits = m.kind == common || (m.kind == "coalgebra" && common != "algebra") ||
                    (m.kind == "algebra" && common != "coalgebra") ||
                    (m.kind == "bialgebra" && common == "hopf");
  if (!fits) raise(Errc::ValidationError, "morphism '" + name + "' cannot be a " + m.kind + " map between " + a + " and " + b);
  return m.kind;
}

CoalgebraMap Workspace::coalgebra_map(const std::string& name) const {
  const WorkspaceMorphism& m = morphism(name);
  return {coalgebra(m.from), coalgebra(m.to), m.matrix};
}

AlgebraMap Workspace::algebra_map(const std::string& name) const {
  const WorkspaceMorphism& m = morphism(name);
  return {algebra(m.from), algebra(m.to), m.matrix};
}

BialgebraMap Workspace::bialgebra_map(const std::string& name) const {
  const WorkspaceMorphism& m = morphism(name);
  return {bialgebra(m.from), bialgebra(m.to), m.matrix};
}

HopfMap Workspace::hopf_map(const std::string& name) const {
  const WorkspaceMorphism& m = morphism(name);
  return {hopf(m.from), hopf(m.to), m.matrix};
}

bool Workspace::contains(const std::string& name) const {
  return objects.count(name) || subspaces.count(name) || morphisms.count(name) || comodules.count(name);
}

namespace {

void claim(const Workspace& ws, const std::string& name) {
  if (name.empty()) raise(Errc::ValidationError, "empty name");
  if (ws.contains(name)) raise(Errc::ValidationError, "name '" + name + "' is already in use", {name});
}

void require_field(const Workspace& ws, Field f, const std::string& who) {
  if (!(f == ws.field))
    raise(Errc::ValidationError, who + " is over " + f.str() + ", not the workspace field " + ws.field.str());
}

}  // namespace

void Workspace::add_object(const std::string& name, AnyObject x) {
  claim(*this, name);
  require_field(*this, field_of(x), "object '" + name + "'");
  validated("object '" + name + "'", [&] { validate_any(x); });
  objects.emplace(name, std::move(x));
}

void Workspace::add_subspace(const std::string& name, Subspace s) {
  claim(*this, name);
  require_field(*this, s.field(), "subspace '" + name + "'");
  subspaces.emplace(name, std::move(s));
}

void Workspace::add_morphism(const std::string& name, WorkspaceMorphism m) {
  claim(*this, name);
  (void)object(m.from);
  (void)object(m.to);
  morphisms.emplace(name, m);
  try {
    const std::string kind = morphism_kind(name);
    const std::string who = "morphism '" + name + "'";
    validated(who, [&] {
      if (kind == "coalgebra") validate(coalgebra_map(name));
      if (kind == "algebra") validate(algebra_map(name));
      if (kind == "bialgebra") validate(bialgebra_map(name));
      if (kind == "hopf") validate(hopf_map(name));
    });
  } catch (...) {
    morphisms.erase(name);
    throw;
  }
}

void Workspace::add_comodule(const std::string& name, WorkspaceComodule v) {
  claim(*this, name);
  if (!(coalgebra(v.over) == v.comodule.over))
    raise(Errc::ValidationError, "comodule '" + name + "' does not live over '" + v.over + "'");
  validated("comodule '" + name + "'", [&] { validate(v.comodule); });
  comodules.emplace(name, std::move(v));
}

Workspace parse_workspace(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    raise(Errc::ParseError, "line " + std::to_string(line) + ": malformed JSON");
  }
  if (!doc.is_object()) parse_error("/", "expected an object");
  static const std::set<std::string> sections{"field", "objects", "subspaces", "morphisms", "comodules"};
  for (const auto& [key, value] : doc.items())
    if (!sections.count(key)) parse_error("/" + key, "unknown section");

  Workspace ws;
  try {
    ws.field = Field::parse(read_string(member(doc, "field", ""), "/field"));
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    parse_error("/field", e.what());
  }
  const auto section = [&](const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) return json::object();
    if (!it->is_object()) parse_error(std::string("/") + key, "expected an object");
    return *it;
  };

  // First pass: objects and subspaces, which reference nothing.
  const json objects = section("objects"), subspaces = section("subspaces"), morphisms = section("morphisms"),
             comodules = section("comodules");
  for (const auto& [name, j] : objects.items()) {
    const std::string path = "/objects/" + name;
    ws.add_object(name, read_object(ws.field, j, path));
  }
  for (const auto& [name, j] : subspaces.items()) {
    const std::string path = "/subspaces/" + name;
    const Index n = read_dim(member(j, "ambient_dim", path), path + "/ambient_dim");
    const json& basis = member(j, "basis", path);
    if (!basis.is_array()) parse_error(path + "/basis", "expected a list of rows");
    const Matrix rows = read_matrix(ws.field, basis, static_cast<Index>(basis.size()), n, path + "/basis");
    ws.add_subspace(name, Subspace::span(ws.field, n, rows));
  }
  // Second pass: entities that refer to objects by name.
  for (const auto& [name, j] : morphisms.items()) {
    const std::string path = "/morphisms/" + name;
    WorkspaceMorphism m;
    m.from = read_string(member(j, "from", path), path + "/from");
    m.to = read_string(member(j, "to", path), path + "/to");
    if (j.contains("kind")) {
      m.kind = read_string(j["kind"], path + "/kind");
      if (std::find(std::begin(kKinds), std::end(kKinds), m.kind) == std::end(kKinds))
        parse_error(path + "/kind", "unknown kind '" + m.kind + "'");
    }
    const Index rows = dim_of(ws.object(m.to));
    const Index cols = dim_of(ws.object(m.from));
    m.matrix = read_matrix(ws.field, member(j, "matrix", path), rows, cols, path + "/matrix");
    ws.add_morphism(name, std::move(m));
  }
  for (const auto& [name, j] : comodules.items()) {
    const std::string path = "/comodules/" + name;
    WorkspaceComodule v;
    v.over = read_string(member(j, "over", path), path + "/over");
    const Coalgebra c = ws.coalgebra(v.over);
    const std::string side = j.contains("side") ? read_string(j["side"], path + "/side") : "right";
    if (side != "right" && side != "left") parse_error(path + "/side", "expected \"right\" or \"left\"");
    const Index m = read_dim(member(j, "dim", path), path + "/dim");
    const Index n = c.dim;
    Comodule rho{c, side == "right" ? Side::Right : Side::Left, m, zeros(ws.field, m * n, m)};
    read_sparse(ws.field, member(j, "rho", path), m, m, n, path + "/rho",
                [&](Index a, Index w, Index k, const Scalar& s) {
                  rho.rho(rho.side == Side::Right ? w * n + k : k * m + w, a) += s;
                });
    v.comodule = std::move(rho);
    ws.add_comodule(name, std::move(v));
  }
  return ws;
}

std::string emit_workspace(const Workspace& ws) {
  const Field f = ws.field;
  json doc;
  doc["field"] = f.str();
  doc["objects"] = json::object();
  for (const auto& [name, x] : ws.objects) doc["objects"][name] = object_json(x);
  doc["subspaces"] = json::object();
  for (const auto& [name, s] : ws.subspaces)
    doc["subspaces"][name] = {{"ambient_dim", s.ambient_dim()}, {"basis", matrix_json(s.basis(), f)}};
  doc["morphisms"] = json::object();
  for (const auto& [name, m] : ws.morphisms) {
    json j = {{"from", m.from}, {"to", m.to}, {"matrix", matrix_json(m.matrix, f)}};
    if (!m.kind.empty()) j["kind"] = m.kind;
    doc["morphisms"][name] = j;
  }
  doc["comodules"] = json::object();
  for (const auto& [name, v] : ws.comodules) {
    const Comodule& c = v.comodule;
    const Index m = c.dim, n = c.over.dim;
    json rho = json::array();
    for (Index a = 0; a < m; ++a)
      for (Index w = 0; w < m; ++w)
        for (Index k = 0; k < n; ++k) {
          const Scalar& s = c.rho(c.side == Side::Right ? w * n + k : k * m + w, a);
          if (!s.is_zero()) rho.push_back({a, w, k, scalar_json(s, f)});
        }
    doc["comodules"][name] = {{"over", v.over}, {"side", to_string(c.side)}, {"dim", m}, {"rho", rho}};
  }
  std::string out;
  print_canonical(doc, 0, out);
  return out + "\n";
}

Workspace workspace_from_catalog(const CatalogBuild& build, Field f) {
  Workspace ws;
  ws.field = f;
  for (const auto& [name, x] : build.objects) ws.add_object(name, x);
  for (const NamedMorphism& m : build.morphisms) ws.add_morphism(m.name, {m.from, m.to, m.matrix, ""});
  return ws;
}

}  // namespace codomin
