#pragma once

#include <map>
#include <optional>
#include <string>

#include "codomin/catalog.hpp"
#include "codomin/comodules.hpp"
#include "codomin/structures.hpp"

namespace codomin {

/// A morphism between two named objects. `kind` is the declared kind
/// ("coalgebra", "algebra", "bialgebra", "hopf") or empty, in which case the
/// richest kind both endpoints support is used.
struct WorkspaceMorphism {
  std::string from;
  std::string to;
  Matrix matrix;
  std::string kind;
};

struct WorkspaceComodule {
  std::string over;
  Comodule comodule;
};

bool operator==(const WorkspaceMorphism& a, const WorkspaceMorphism& b);
bool operator==(const WorkspaceComodule& a, const WorkspaceComodule& b);

/// Named structures over one field. Names are unique across all four maps.
struct Workspace {
  Field field;
  std::map<std::string, AnyObject> objects;
  std::map<std::string, Subspace> subspaces;
  std::map<std::string, WorkspaceMorphism> morphisms;
  std::map<std::string, WorkspaceComodule> comodules;

  /// Raise UnknownReference for missing names.
  const AnyObject& object(const std::string& name) const;
  const Subspace& subspace(const std::string& name) const;
  const WorkspaceMorphism& morphism(const std::string& name) const;
  const WorkspaceComodule& comodule(const std::string& name) const;

  /// The structure of a named object; ValidationError when it has none.
  Coalgebra coalgebra(const std::string& name) const;
  Algebra algebra(const std::string& name) const;
  Bialgebra bialgebra(const std::string& name) const;
  HopfAlgebra hopf(const std::string& name) const;

  /// The effective kind of a named morphism.
  std::string morphism_kind(const std::string& name) const;
  CoalgebraMap coalgebra_map(const std::string& name) const;
  AlgebraMap algebra_map(const std::string& name) const;
  BialgebraMap bialgebra_map(const std::string& name) const;
  HopfMap hopf_map(const std::string& name) const;

  bool contains(const std::string& name) const;
  /// Insertions validate and raise ValidationError on a name clash.
  void add_object(const std::string& name, AnyObject x);
  void add_subspace(const std::string& name, Subspace s);
  void add_morphism(const std::string& name, WorkspaceMorphism m);
  void add_comodule(const std::string& name, WorkspaceComodule v);

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

/// The optional parts of an object.
std::optional<Coalgebra> coalgebra_part(const AnyObject& x);
std::optional<Algebra> algebra_part(const AnyObject& x);

/// Parses and validates a workspace document. Raises ParseError (with the
/// line or JSON path), ValidationError (naming the entity and the failed
/// axioms) or UnknownReference.
Workspace parse_workspace(const std::string& text);
/// Canonical form: sorted keys, two-space indentation, sparse structure
/// constants in index order, reduced scalars, RREF subspace bases.
std::string emit_workspace(const Workspace& ws);

/// The objects and morphisms of a catalog entry as a workspace.
Workspace workspace_from_catalog(const CatalogBuild& build, Field f);

}  // namespace codomin
