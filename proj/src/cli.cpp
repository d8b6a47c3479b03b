#include "codomin/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "codomin/catalog.hpp"
#include "codomin/comodules.hpp"
#include "codomin/domkit.hpp"
#include "codomin/error.hpp"
#include "codomin/extension.hpp"
#include "codomin/takeuchi.hpp"
#include "codomin/workspace.hpp"
#include "json.hpp"

namespace codomin {

namespace {

using report = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Report rendering

report row_report(const Matrix& m, Index r) {
  report out = report::array();
  for (Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c).str());
  return out;
}

report matrix_report(const Matrix& m) {
  report out = report::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(row_report(m, r));
  return out;
}

report subspace_report(const Subspace& s) {
  return {{"dim", s.dim()}, {"ambient_dim", s.ambient_dim()}, {"basis", matrix_report(s.basis())}};
}

std::string spaced(std::string key) {
  std::replace(key.begin(), key.end(), '_', ' ');
  return key;
}

std::string row_text(const report& row) {
  std::string out = "[";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? ", " : "") + row[i].get<std::string>();
  return out + "]";
}

/// Boolean queries print the bare answer; everything else prints one
/// `key = value` line per field, subspaces as dimension plus RREF rows.
void render_text(const report& r, std::ostream& out) {
  if (r.contains("result") && r["result"].is_boolean()) {
    out << (r["result"].get<bool>() ? "true" : "false") << "\n";
    return;
  }
  for (const auto& [key, v] : r.items()) {
    if (key == "command") continue;
    const std::string k = spaced(key);
    if (v.is_object() && v.contains("basis")) {
      out << k << " dim = " << v["dim"].get<Index>() << "\n";
      if (!v["basis"].empty()) {
        out << k << " basis:\n";
        for (const auto& row : v["basis"]) out << "  " << row_text(row) << "\n";
      }
    } else if (v.is_array()) {
      out << k << ":\n";
      for (const auto& item : v) out << "  " << (item.is_array() ? row_text(item) : item.get<std::string>()) << "\n";
    } else if (v.is_boolean()) {
      out << k << " = " << (v.get<bool>() ? "true" : "false") << "\n";
    } else if (v.is_string()) {
      out << k << " = " << v.get<std::string>() << "\n";
    } else {
      out << k << " = " << v.dump() << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Workspace access

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::ParseError, "cannot write '" + path + "'");
  out << text;
}

/// The kernel of a quotient named either as a subspace or as a morphism out
/// of `source`.
Subspace quotient_kernel(const Workspace& ws, const std::string& name, const std::string& source) {
  if (ws.subspaces.count(name)) return ws.subspace(name);
  const WorkspaceMorphism& m = ws.morphism(name);
  if (m.from != source)
    raise(Errc::ValidationError, "quotient '" + name + "' does not start at '" + source + "'");
  return kernel(m.matrix, ws.field);
}

AnyObject quotient_object(const Workspace& ws, const std::string& morphism, const Subspace& k) {
  const WorkspaceMorphism& m = ws.morphism(morphism);
  const std::string kind = ws.morphism_kind(morphism);
  if (kind == "hopf") return quotient_by_hopf_ideal(ws.hopf(m.from), k).quotient;
  if (kind == "bialgebra") return quotient_by_biideal(ws.bialgebra(m.from), k).quotient;
  return quotient_by_coideal(ws.coalgebra(m.from), k).quotient;
}

struct Options {
  std::string workspace;
  std::string emit;
  std::string name;
  bool json = false;
  std::vector<std::string> morphisms;
  std::string object;
  std::string subspace;
  std::string kernel;
  std::string quotient;
  std::string comodule;
  std::string source;
  std::string target;
  std::string along;
  std::string side = "right";
  std::string minpoly;
  std::string field = "Q";
  std::string entry;
  std::vector<std::string> params;
};

const std::string& single_morphism(const Options& o) {
  if (o.morphisms.size() != 1) raise(Errc::ValidationError, "expected exactly one --morphism");
  return o.morphisms.front();
}

std::string need(const std::string& value, const char* option) {
  if (value.empty()) raise(Errc::ValidationError, std::string("missing ") + option);
  return value;
}

std::string derived(const Options& o, const std::string& base, const std::string& suffix) {
  return o.name.empty() ? base + "." + suffix : o.name;
}

/// Each command fills the report and may add entities to the emitted copy.
using Command = std::function<void(const Options&, const Workspace&, report&, Workspace&)>;

void cmd_validate(const Options&, const Workspace& ws, report& r, Workspace&) {
  r["field"] = ws.field.str();
  report entities = report::array();
  for (const auto& [name, x] : ws.objects)
    entities.push_back("object " + name + ": " + kind_name(x) + ", dim " + std::to_string(dim_of(x)));
  for (const auto& [name, s] : ws.subspaces)
    entities.push_back("subspace " + name + ": dim " + std::to_string(s.dim()) + " in " + std::to_string(s.ambient_dim()));
  for (const auto& [name, m] : ws.morphisms)
    entities.push_back("morphism " + name + ": " + m.from + " -> " + m.to + " (" + ws.morphism_kind(name) + ")");
  for (const auto& [name, v] : ws.comodules)
    entities.push_back("comodule " + name + ": " + to_string(v.comodule.side) + " over " + v.over + ", dim " +
                       std::to_string(v.comodule.dim));
  r["entities"] = entities;
  r["valid"] = true;
}

void cmd_monic(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string& m = single_morphism(o);
  const CoalgebraMap f = ws.coalgebra_map(m);
  r["morphism"] = m;
  r["result"] = is_monic(f);
  r["cotensor_dim"] = self_cotensor(f).dim();
  r["source_dim"] = f.src.dim;
}

void cmd_epic(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string& m = single_morphism(o);
  const std::string kind = ws.morphism_kind(m);
  r["morphism"] = m;
  if (kind == "algebra") {
    const DominionResult d = dominion_alg(ws.algebra_map(m));
    r["result"] = d.is_epic;
    r["dominion_dim"] = d.dominion.dim();
  } else {
    const CoalgebraMap f = ws.coalgebra_map(m);
    r["result"] = is_epic(f);
    r["rank"] = rank(f.matrix, ws.field);
  }
}

void cmd_codominion(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string& m = single_morphism(o);
  const CodominionResult c = codominion(ws.coalgebra_map(m));
  r["morphism"] = m;
  r["kernel"] = subspace_report(c.kernel);
  r["quotient_dim"] = c.quotient.quotient.dim;
  r["is_codominion"] = c.is_codominion;
  r["monic"] = c.kernel.dim() == 0;
  const std::string base = derived(o, m, "codominion");
  emitted.add_subspace(base + ".kernel", c.kernel);
  emitted.add_object(base, quotient_object(ws, m, c.kernel));
  emitted.add_morphism(base + ".projection", {ws.morphism(m).from, base, c.quotient.projection, ""});
}

void cmd_dominion(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string& m = single_morphism(o);
  const DominionResult d = dominion_alg(ws.algebra_map(m));
  r["morphism"] = m;
  r["dominion"] = subspace_report(d.dominion);
  r["tensor_dim"] = d.tensor_dim;
  r["is_dominion"] = d.is_dominion;
  r["epic"] = d.is_epic;
  emitted.add_subspace(derived(o, m, "dominion"), d.dominion);
}

void cmd_dominates(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string& m = single_morphism(o);
  const CoalgebraMap f = ws.coalgebra_map(m);
  const Subspace k = quotient_kernel(ws, need(o.quotient, "--quotient"), ws.morphism(m).from);
  r["morphism"] = m;
  r["quotient"] = o.quotient;
  r["result"] = dominates(f, k);
}

void cmd_equalizer(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  std::vector<CoalgebraMap> family;
  for (const auto& m : o.morphisms) family.push_back(ws.coalgebra_map(m));
  const SubcoalgebraPresentation e = equalizer_coalg(family);
  r["equalizer"] = subspace_report(e.subspace);
  if (family.empty()) return;
  const std::string base = derived(o, o.morphisms.front(), "equalizer");
  emitted.add_subspace(base + ".subspace", e.subspace);
  emitted.add_object(base, e.sub);
  emitted.add_morphism(base + ".inclusion", {base, ws.morphism(o.morphisms.front()).from, e.inclusion, "coalgebra"});
}

void cmd_largest(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string c = need(o.object, "--object");
  const std::string v = need(o.subspace, "--subspace");
  const Subspace e = largest_subcoalgebra(ws.coalgebra(c), ws.subspace(v));
  r["object"] = c;
  r["subspace"] = v;
  r["largest_subcoalgebra"] = subspace_report(e);
  emitted.add_subspace(derived(o, v, "largest"), e);
}

void cmd_coinvariants(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string name = need(o.comodule, "--comodule");
  const WorkspaceComodule& v = ws.comodule(name);
  const Subspace s = o.along.empty() ? coinvariants(v.comodule, ws.bialgebra(v.over))
                                     : coinvariants(v.comodule, ws.bialgebra_map(o.along));
  r["comodule"] = name;
  if (!o.along.empty()) r["along"] = o.along;
  r["coinvariants"] = subspace_report(s);
  emitted.add_subspace(derived(o, name, "coinvariants"), s);
}

void cmd_hom(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string v = need(o.source, "--source");
  const std::string w = need(o.target, "--target");
  const Subspace h = hom_colinear(ws.comodule(v).comodule, ws.comodule(w).comodule);
  r["source"] = v;
  r["target"] = w;
  r["hom"] = subspace_report(h);
}

void cmd_injective(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string name = need(o.comodule, "--comodule");
  r["comodule"] = name;
  r["result"] = is_injective_comodule(ws.comodule(name).comodule);
}

void cmd_split(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string& m = single_morphism(o);
  if (o.side != "right" && o.side != "left") raise(Errc::ValidationError, "--side must be right or left");
  const auto s = find_comodule_splitting(ws.coalgebra_map(m), o.side == "right" ? Side::Right : Side::Left);
  r["morphism"] = m;
  r["side"] = o.side;
  r["result"] = s.has_value();
  if (s) r["section"] = matrix_report(*s);
}

void cmd_cosemisimple(const Options& o, const Workspace& ws, report& r, Workspace&) {
  const std::string c = need(o.object, "--object");
  r["object"] = c;
  r["result"] = is_cosemisimple(ws.coalgebra(c));
}

void cmd_takeuchi_r(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string h = need(o.object, "--object");
  const std::string a = need(o.subspace, "--subspace");
  const ModuleQuotientCoalgebra q = op_r(validate_coideal_subalgebra(ws.hopf(h), ws.subspace(a)));
  r["object"] = h;
  r["subspace"] = a;
  r["kernel"] = subspace_report(q.quotient.kernel);
  r["quotient_dim"] = q.quotient.quotient.dim;
  const std::string base = derived(o, a, "r");
  emitted.add_subspace(base + ".kernel", q.quotient.kernel);
  emitted.add_object(base, q.quotient.quotient);
  emitted.add_morphism(base + ".projection", {h, base, q.quotient.projection, "coalgebra"});
}

void cmd_takeuchi_l(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string h = need(o.object, "--object");
  const std::string q = o.kernel.empty() ? need(o.quotient, "--kernel or --quotient") : o.kernel;
  const HopfAlgebra hopf = ws.hopf(h);
  const CoidealSubalgebra a = op_l(module_quotient(hopf, quotient_kernel(ws, q, h)));
  r["object"] = h;
  r["quotient"] = q;
  r["coideal_subalgebra"] = subspace_report(a.subspace);
  emitted.add_subspace(derived(o, q, "l"), a.subspace);
}

void cmd_closure(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const std::string h = need(o.object, "--object");
  const HopfAlgebra hopf = ws.hopf(h);
  r["object"] = h;
  if (!o.subspace.empty()) {
    const CoidealSubalgebra c = closure(validate_coideal_subalgebra(hopf, ws.subspace(o.subspace)));
    r["subspace"] = o.subspace;
    r["closure"] = subspace_report(c.subspace);
    r["closed"] = c.subspace == ws.subspace(o.subspace);
    emitted.add_subspace(derived(o, o.subspace, "closure"), c.subspace);
    return;
  }
  const std::string q = o.kernel.empty() ? need(o.quotient, "--subspace, --kernel or --quotient") : o.kernel;
  const Subspace k = quotient_kernel(ws, q, h);
  const ModuleQuotientCoalgebra c = closure(module_quotient(hopf, k));
  r["quotient"] = q;
  r["closure_kernel"] = subspace_report(c.quotient.kernel);
  r["closed"] = c.quotient.kernel == k;
  emitted.add_subspace(derived(o, q, "closure"), c.quotient.kernel);
}

Workspace extend_workspace(const Workspace& ws, const ExtensionContext& ctx) {
  Workspace out;
  out.field = ctx.ext;
  for (const auto& [name, x] : ws.objects) out.add_object(name, std::visit([&](const auto& y) { return AnyObject(extend(y, ctx)); }, x));
  for (const auto& [name, s] : ws.subspaces) out.add_subspace(name, extend(s, ctx));
  for (const auto& [name, m] : ws.morphisms) out.add_morphism(name, {m.from, m.to, extend(m.matrix, ctx), m.kind});
  for (const auto& [name, v] : ws.comodules) out.add_comodule(name, {v.over, extend(v.comodule, ctx)});
  return out;
}

void run_extend(const Options& o, const Workspace& ws, report& r, Workspace& emitted) {
  const Field ext = Field::parse(ws.field.str() + "[t]/" + need(o.minpoly, "--minpoly"));
  emitted = extend_workspace(ws, extension_context(ext));
  r["field"] = ext.str();
  r["degree"] = ext.degree();
  r["objects"] = emitted.objects.size();
  r["subspaces"] = emitted.subspaces.size();
  r["morphisms"] = emitted.morphisms.size();
  r["comodules"] = emitted.comodules.size();
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& p : raw) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) raise(Errc::BadParams, "parameter '" + p + "' is not KEY=VALUE");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

void run_catalog(const Options& o, report& r, std::optional<Workspace>& emitted) {
  if (o.entry.empty()) {
    report names = report::array();
    for (const auto& n : catalog_entries()) names.push_back(n);
    r["entries"] = names;
    return;
  }
  const Field f = Field::parse(o.field);
  Workspace ws = workspace_from_catalog(build_catalog(o.entry, f, parse_params(o.params)), f);
  r["entry"] = o.entry;
  r["field"] = f.str();
  report entities = report::array();
  for (const auto& [name, x] : ws.objects)
    entities.push_back("object " + name + ": " + kind_name(x) + ", dim " + std::to_string(dim_of(x)));
  for (const auto& [name, m] : ws.morphisms)
    entities.push_back("morphism " + name + ": " + m.from + " -> " + m.to + " (" + ws.morphism_kind(name) + ")");
  r["entities"] = entities;
  emitted = std::move(ws);
}

int exit_code_for(Errc code) {
  return code == Errc::Unsupported || code == Errc::UnsupportedCharacteristic ? kExitUnsupported : kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for finite-dimensional coalgebras and Hopf algebras", "codomin"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub, bool workspace) {
    if (workspace) sub->add_option("workspace", o.workspace, "Workspace JSON file")->required();
    sub->add_flag("--json", o.json, "Machine-readable report");
    sub->add_option("--emit", o.emit, "Write the resulting workspace to this file");
    sub->add_option("--name", o.name, "Name for emitted entities");
    return sub;
  };

  std::map<std::string, Command> commands{
      {"validate", cmd_validate},       {"monic", cmd_monic},
      {"epic", cmd_epic},               {"codominion", cmd_codominion},
      {"dominion", cmd_dominion},       {"dominates", cmd_dominates},
      {"equalizer", cmd_equalizer},     {"largest-subcoalgebra", cmd_largest},
      {"coinvariants", cmd_coinvariants}, {"hom", cmd_hom},
      {"injective", cmd_injective},     {"split", cmd_split},
      {"cosemisimple", cmd_cosemisimple}, {"takeuchi-r", cmd_takeuchi_r},
      {"takeuchi-l", cmd_takeuchi_l},   {"closure", cmd_closure},
      {"extend", run_extend},
  };
  const std::map<std::string, std::string> help{
      {"validate", "Load and validate every entity"},
      {"monic", "Whether a coalgebra morphism is a monomorphism"},
      {"epic", "Whether a morphism is an epimorphism"},
      {"codominion", "Codominion kernel and quotient of a coalgebra morphism"},
      {"dominion", "Dominion of an algebra morphism"},
      {"dominates", "Whether a morphism dominates a quotient"},
      {"equalizer", "Equalizer of a family of coalgebra morphisms"},
      {"largest-subcoalgebra", "Largest subcoalgebra inside a subspace"},
      {"coinvariants", "Coinvariants of a comodule"},
      {"hom", "Colinear maps between two comodules"},
      {"injective", "Whether a comodule is injective"},
      {"split", "Colinear section of a surjective coalgebra morphism"},
      {"cosemisimple", "Whether a coalgebra is cosemisimple"},
      {"takeuchi-r", "The quotient H/HA+ of a right coideal subalgebra"},
      {"takeuchi-l", "The coinvariant subalgebra of a module quotient coalgebra"},
      {"closure", "Closure of a coideal subalgebra or a module quotient"},
      {"extend", "Extend every entity along k[t]/(m)"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, text] : help) {
    CLI::App* sub = add_common(app.add_subcommand(name, text), true);
    subs[name] = sub;
  }
  for (const char* name : {"monic", "epic", "codominion", "dominion", "dominates", "equalizer", "split"})
    subs[name]->add_option("--morphism", o.morphisms, "Morphism name")->required();
  for (const char* name : {"largest-subcoalgebra", "cosemisimple", "takeuchi-r", "takeuchi-l", "closure"})
    subs[name]->add_option("--object", o.object, "Object name")->required();
  for (const char* name : {"largest-subcoalgebra", "takeuchi-r", "closure"})
    subs[name]->add_option("--subspace", o.subspace, "Subspace name");
  for (const char* name : {"takeuchi-l", "closure"}) {
    subs[name]->add_option("--kernel", o.kernel, "Subspace name of the quotient kernel");
    subs[name]->add_option("--quotient", o.quotient, "Subspace or morphism naming the quotient");
  }
  subs["dominates"]->add_option("--quotient", o.quotient, "Subspace or morphism naming the quotient")->required();
  for (const char* name : {"coinvariants", "injective"})
    subs[name]->add_option("--comodule", o.comodule, "Comodule name")->required();
  subs["coinvariants"]->add_option("--along", o.along, "Bialgebra morphism to corestrict along");
  subs["hom"]->add_option("--source", o.source, "Source comodule")->required();
  subs["hom"]->add_option("--target", o.target, "Target comodule")->required();
  subs["split"]->add_option("--side", o.side, "right or left");
  subs["extend"]->add_option("--minpoly", o.minpoly, "Monic irreducible polynomial in t")->required();

  CLI::App* catalog = add_common(app.add_subcommand("catalog", "List catalog entries or build one"), false);
  catalog->add_option("entry", o.entry, "Catalog entry");
  catalog->add_option("--field", o.field, "Ground field (Q, F<p>, or a simple extension)");
  catalog->add_option("--param", o.params, "KEY=VALUE parameter");

  std::vector<const char*> argv{"codomin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "codomin: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    report r;
    std::optional<Workspace> emitted;
    std::string command;
    if (catalog->parsed()) {
      command = "catalog";
      r["command"] = command;
      run_catalog(o, r, emitted);
    } else {
      for (const auto& [name, sub] : subs)
        if (sub->parsed()) command = name;
      r["command"] = command;
      const Workspace ws = parse_workspace(read_file(o.workspace));
      emitted = ws;
      commands.at(command)(o, ws, r, *emitted);
    }
    if (!o.emit.empty()) {
      if (!emitted) raise(Errc::ValidationError, "nothing to emit");
      write_file(o.emit, emit_workspace(*emitted));
      r["emitted"] = o.emit;
    }
    if (o.json)
      out << r.dump(2) << "\n";
    else
      render_text(r, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "codomin: " << e.what() << "\n";
    const std::string what = e.what();
    for (const auto& d : e.details())
      if (what.find(d) == std::string::npos) err << "  " << d << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace codomin
