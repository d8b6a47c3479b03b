// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// The corpus is every catalog build below over Q, F2 and F5, with the
// identities of all objects and the group homomorphisms of the Hopf corpus.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "codomin/catalog.hpp"
#include "codomin/comodules.hpp"
#include "codomin/domkit.hpp"
#include "codomin/error.hpp"
#include "codomin/extension.hpp"
#include "codomin/takeuchi.hpp"
#include "codomin/workspace.hpp"
#include "corpus.hpp"
#include "oracle.hpp"

using namespace codomin;
using namespace testing;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);

using Params = std::map<std::string, std::string>;

struct CorpusObject {
  std::string label;
  AnyObject object;
};

struct CorpusMap {
  std::string label;
  std::optional<CoalgebraMap> coalgebra;
  std::optional<AlgebraMap> algebra;
  std::optional<BialgebraMap> bialgebra;
  std::optional<HopfMap> hopf;
};

struct Corpus {
  std::vector<CorpusObject> objects;
  std::vector<CorpusMap> maps;
};

std::vector<std::pair<std::string, Params>> catalog_entries_for(Field f) {
  std::vector<std::pair<std::string, Params>> out{{"trivial", {}}};
  for (const char* g : {"C2", "C3", "C4", "C2xC2", "S3"}) {
    out.push_back({"group_algebra", {{"group", g}}});
    out.push_back({"function_algebra", {{"group", g}}});
  }
  if (f.characteristic() != 2) out.push_back({"sweedler4", {}});
  if (f.characteristic() == 5) out.push_back({"taft", {{"n", "4"}, {"root", "2"}}});
  out.push_back({"comatrix", {{"n", "2"}}});
  out.push_back({"comatrix", {{"n", "3"}}});
  for (const char* n : {"2", "3", "4"}) out.push_back({"divided_power", {{"n", n}}});
  out.push_back({"triangular_pair", {}});
  out.push_back({"upper_triangular_pair", {}});
  out.push_back({"cyclic_pair", {{"m", "4"}, {"n", "2"}}});
  out.push_back({"cyclic_pair", {{"m", "6"}, {"n", "3"}}});
  return out;
}

CorpusMap typed(const Workspace& ws, const std::string& name, const std::string& label) {
  CorpusMap m{label, {}, {}, {}, {}};
  const std::string kind = ws.morphism_kind(name);
  if (kind != "algebra") m.coalgebra = ws.coalgebra_map(name);
  if (kind != "coalgebra") m.algebra = ws.algebra_map(name);
  if (kind == "bialgebra" || kind == "hopf") m.bialgebra = ws.bialgebra_map(name);
  if (kind == "hopf") m.hopf = ws.hopf_map(name);
  return m;
}

CorpusMap from_hopf(const std::string& label, const HopfMap& f) {
  return {label, as_coalgebra_map(f), as_algebra_map(f), as_bialgebra_map(f), f};
}

Corpus build_corpus(Field f) {
  Corpus c;
  for (const auto& [entry, params] : catalog_entries_for(f)) {
    std::string tag = entry;
    for (const auto& [k, v] : params) tag += " " + k + "=" + v;
    tag += " " + f.str();
    Workspace ws = workspace_from_catalog(build_catalog(entry, f, params), f);
    std::vector<std::string> names;
    for (const auto& [name, x] : ws.objects) names.push_back(name);
    for (const std::string& name : names) {
      c.objects.push_back({tag + ": " + name, ws.object(name)});
      ws.add_morphism("id_" + name, {name, name, identity(f, dim_of(ws.object(name))), ""});
    }
    for (const auto& [name, m] : ws.morphisms) c.maps.push_back(typed(ws, name, tag + ": " + name));
  }
  for (const auto& [label, m] : hopf_corpus())
    if (m.src.field() == f) c.maps.push_back(from_hopf(label, m));
  return c;
}

ExtensionContext extension_for(Field base) {
  if (base == F2) return extension_context(Field::parse("F2[t]/t^2+t+1"));
  if (base == F5) return extension_context(Field::parse("F5[t]/t^2+2"));
  return extension_context(Field::parse("Q[t]/t^2+1"));
}

std::vector<Corpus>& corpora() {
  static std::vector<Corpus> all{build_corpus(Q), build_corpus(F2), build_corpus(F5)};
  return all;
}

/// Counts checks and keeps the first few failures.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { info_ += (info_.empty() ? "" : ", ") + s; }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!info_.empty()) out << ", " << info_;
    if (failures_ > 0) out << ", " << failures_ << " failed: " << notes_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
  std::string info_;
};

bool injective(const Matrix& m, Field f) { return rank(m, f) == m.cols(); }
bool surjective(const Matrix& m, Field f) { return rank(m, f) == m.rows(); }

/// h ↦ ε(h)·1.
CoalgebraMap constant_map(const BialgebraMap& f) {
  return {f.src.coalgebra, f.dst.coalgebra, f.dst.algebra.unit * f.src.coalgebra.counit};
}

// ---------------------------------------------------------------------------

void monic_criteria(Tally& t) {
  std::size_t n = 0;
  for (const Corpus& c : corpora())
    for (const CorpusMap& m : c.maps) {
      if (!m.hopf) continue;
      ++n;
      const bool by_cotensor = is_monic(*m.coalgebra);
      const bool by_kernel = codominion(*m.coalgebra).kernel.dim() == 0;
      const bool by_coinvariants = monic_by_coinvariants(*m.hopf);
      const bool by_end_spaces = monic_by_end_spaces(*m.hopf);
      t.check(by_cotensor == by_kernel && by_kernel == by_coinvariants && by_coinvariants == by_end_spaces,
              m.label + " disagrees");
    }
  t.note(std::to_string(n) + " Hopf maps");
}

void triangular_landmark(Tally& t) {
  for (Field f : {Q, F2, F5}) {
    const AlgebraPair p = triangular_pair(f);
    const DominionResult dom = dominion_alg(p.inclusion);
    const Index cotensor_dim = self_cotensor(p.dual).dim();
    t.check(dom.is_epic && dom.dominion.dim() == 3,
            f.str() + " dominion dim " + std::to_string(dom.dominion.dim()) + " (tensor dim " +
                std::to_string(dom.tensor_dim) + ")");
    t.check(surjective(p.dual.matrix, f), f.str() + " dual not surjective");
    t.check(!injective(p.dual.matrix, f), f.str() + " dual injective");
    t.check(is_monic(p.dual) && cotensor_dim == 3, f.str() + " cotensor dim " + std::to_string(cotensor_dim));
  }
}

/// Coalgebras among the 𝔽₂ corpus objects with dimension at most `max_dim`,
/// without repeats.
std::vector<std::pair<std::string, Coalgebra>> f2_coalgebras(Index max_dim) {
  std::vector<std::pair<std::string, Coalgebra>> out;
  for (const CorpusObject& o : corpora()[1].objects) {
    const auto c = coalgebra_part(o.object);
    if (!c || c->dim > max_dim) continue;
    bool seen = false;
    for (const auto& [label, d] : out) seen = seen || d == *c;
    if (!seen) out.push_back({o.label, *c});
  }
  return out;
}

void domination_by_enumeration(Tally& t) {
  const auto probes = f2_coalgebras(3);
  const auto sources = f2_coalgebras(4);
  std::size_t maps = 0, pairs = 0, separated_but_dominated = 0, dominated_not_separated = 0;
  for (const auto& [label, c] : sources) {
    // Morphisms out of C: the corpus ones and every coalgebra map into a
    // small corpus coalgebra.
    std::vector<CoalgebraMap> family;
    for (const CorpusMap& m : corpora()[1].maps)
      if (m.coalgebra && m.coalgebra->src == c) family.push_back(*m.coalgebra);
    for (const auto& [dlabel, d] : probes)
      if (c.dim * d.dim <= 12)
        for (Matrix& m : coalgebra_maps_f2(c, d)) family.push_back({c, d, std::move(m)});

    std::vector<Matrix> tests;
    for (const auto& [plabel, p] : probes)
      for (Matrix& m : coalgebra_maps_f2(p, c)) tests.push_back(std::move(m));
    const std::vector<QuotientPresentation> quotients = all_quotients_f2(c);

    for (const CoalgebraMap& f : family) {
      ++maps;
      std::vector<std::pair<std::size_t, std::size_t>> merged;
      for (std::size_t i = 0; i < tests.size(); ++i)
        for (std::size_t j = i + 1; j < tests.size(); ++j)
          if (tests[i].cols() == tests[j].cols() && equal(f.matrix * tests[i], f.matrix * tests[j]))
            merged.emplace_back(i, j);
      for (const QuotientPresentation& q : quotients) {
        ++pairs;
        bool cancels = true;
        for (const auto& [i, j] : merged)
          if (!equal(q.projection * tests[i], q.projection * tests[j])) cancels = false;
        const bool dom = dominates(f, q);
        separated_but_dominated += dom && !cancels;
        dominated_not_separated += !dom && cancels;
        t.check(dom == cancels, label + " quotient by a " + std::to_string(q.kernel.dim()) + "-dim coideal");
      }
    }
  }
  t.note(std::to_string(maps) + " maps");
  t.note(std::to_string(pairs) + " (f, quotient) pairs");
  t.note(std::to_string(separated_but_dominated) + " dominated yet separated");
  t.note(std::to_string(dominated_not_separated) + " not dominated yet unseparated by the probes");
}

void largest_subcoalgebra_oracle(Tally& t) {
  std::size_t n = 0;
  for (const auto& [label, c] : f2_coalgebras(4))
    for (const Subspace& v : all_subspaces_f2(c.dim)) {
      ++n;
      t.check(largest_subcoalgebra(c, v) == largest_subcoalgebra_f2(c, v), label);
    }
  t.note(std::to_string(n) + " subspaces");
}

void hopf_ideal_descent(Tally& t) {
  std::size_t n = 0;
  for (const Corpus& c : corpora())
    for (const CorpusMap& m : c.maps) {
      if (!m.bialgebra) continue;
      ++n;
      const Subspace k0 = codominion(*m.coalgebra).kernel;
      const Bialgebra& src = m.bialgebra->src;
      t.check(is_coideal(src.coalgebra, k0), m.label + " K0 not a coideal");
      t.check(is_two_sided_ideal(src.algebra, k0), m.label + " K0 not an ideal");
      if (m.hopf) {
        t.check(is_stable(m.hopf->src.antipode, k0), m.label + " K0 not antipode-stable");
        const HopfQuotient q = codominion_quotient(*m.hopf);
        t.check(violations(q.quotient).empty() && q.presentation.kernel == k0, m.label + " Hopf quotient");
      } else {
        const BialgebraQuotient q = codominion_quotient(*m.bialgebra);
        t.check(violations(q.quotient).empty() && q.presentation.kernel == k0, m.label + " bialgebra quotient");
      }
    }
  t.note(std::to_string(n) + " bialgebra maps");
}

void cosemisimple_codomain(Tally& t) {
  std::size_t cosemisimple = 0, split = 0;
  for (const Corpus& c : corpora())
    for (const CorpusMap& m : c.maps) {
      if (!m.coalgebra) continue;
      const CoalgebraMap& f = *m.coalgebra;
      const Field k = f.src.field;
      if (!surjective(f.matrix, k)) continue;
      const bool codominion_equals_kernel = codominion(f).kernel == kernel(f.matrix, k);
      if (k.characteristic() == 0 && is_cosemisimple(f.dst)) {
        ++cosemisimple;
        t.check(codominion_equals_kernel, m.label + " onto a cosemisimple coalgebra");
      }
      if (find_comodule_splitting(f, Side::Right) || find_comodule_splitting(f, Side::Left)) {
        ++split;
        t.check(codominion_equals_kernel, m.label + " with a comodule splitting");
      }
    }
  t.note(std::to_string(cosemisimple) + " onto cosemisimple");
  t.note(std::to_string(split) + " split");
}

void extension_invariance(Tally& t) {
  std::size_t n = 0;
  for (const Corpus& c : corpora()) {
    const ExtensionContext ctx = extension_for(field_of(c.objects.front().object));
    for (const CorpusMap& m : c.maps) {
      if (m.coalgebra) {
        ++n;
        const CoalgebraMap& f = *m.coalgebra;
        const CoalgebraMap g = extend(f, ctx);
        t.check(is_monic(f) == is_monic(g), m.label + " monic");
        t.check(is_epic(f) == is_epic(g), m.label + " epic");
        t.check(extend(codominion(f).kernel, ctx) == codominion(g).kernel, m.label + " K0");
        t.check(extend(dominion_alg(dualize(f)).dominion, ctx) == dominion_alg(dualize(g)).dominion,
                m.label + " dual dominion");
        const Subspace k = kernel(f.matrix, f.src.field);
        t.check(extend(largest_subcoalgebra(f.src, k), ctx) == largest_subcoalgebra(g.src, extend(k, ctx)),
                m.label + " largest subcoalgebra in the kernel");
      }
      if (m.algebra) {
        const DominionResult base = dominion_alg(*m.algebra);
        const DominionResult up = dominion_alg(extend(*m.algebra, ctx));
        t.check(extend(base.dominion, ctx) == up.dominion && base.tensor_dim == up.tensor_dim, m.label + " dominion");
      }
      if (m.bialgebra) {
        const std::vector<CoalgebraMap> pair{*m.coalgebra, constant_map(*m.bialgebra)};
        const SubcoalgebraPresentation e = equalizer_coalg(pair);
        const SubcoalgebraPresentation up = equalizer_coalg({extend(pair[0], ctx), extend(pair[1], ctx)});
        t.check(extend(e.subspace, ctx) == up.subspace && extend(e.sub, ctx) == up.sub, m.label + " equalizer");
      }
    }
    // Equalizers of parallel corpus pairs.
    for (std::size_t i = 0; i < c.maps.size(); ++i)
      for (std::size_t j = i + 1; j < c.maps.size(); ++j) {
        const auto& a = c.maps[i].coalgebra;
        const auto& b = c.maps[j].coalgebra;
        if (!a || !b || !(a->src == b->src) || !(a->dst == b->dst) || equal(a->matrix, b->matrix)) continue;
        const SubcoalgebraPresentation e = equalizer_coalg({*a, *b});
        const SubcoalgebraPresentation up = equalizer_coalg({extend(*a, ctx), extend(*b, ctx)});
        t.check(extend(e.subspace, ctx) == up.subspace, c.maps[i].label + " and " + c.maps[j].label + " equalizer");
      }
    for (const CorpusObject& o : c.objects) {
      const auto co = coalgebra_part(o.object);
      if (!co) continue;
      const Subspace augmentation = kernel(co->counit, co->field);
      t.check(extend(largest_subcoalgebra(*co, augmentation), ctx) ==
                  largest_subcoalgebra(extend(*co, ctx), extend(augmentation, ctx)),
              o.label + " largest subcoalgebra in the augmentation");
    }
  }
  t.note(std::to_string(n) + " coalgebra maps");
}

Subspace basis_span(Index n, std::initializer_list<Index> idx) {
  Matrix rows = zeros(Q, static_cast<Index>(idx.size()), n);
  Index r = 0;
  for (Index i : idx) rows(r++, i) = Scalar(Q, 1);
  return Subspace::span(Q, n, rows);
}

void takeuchi_suite(Tally& t) {
  const HopfAlgebra k2 = group_algebra(Q, cyclic_group(2));
  const std::vector<std::pair<std::string, HopfAlgebra>> ambients{
      {"kC4", group_algebra(Q, cyclic_group(4))},
      {"kC2 (x) kC2", tensor_objects(k2, k2)},
      {"H4", sweedler4(Q)},
  };
  std::size_t pairs = 0;
  for (const auto& [label, h] : ambients) {
    const Index n = h.dim();
    // Coideal subalgebras: the trivial ones, images of corpus Hopf maps into
    // H, and the group-like and skew-primitive ones.
    std::vector<Subspace> subs{basis_span(n, {0}), Subspace::full(Q, n)};
    std::vector<Subspace> kernels{Subspace::zero(Q, n), kernel(h.coalgebra().counit, Q)};
    for (const CorpusMap& m : corpora()[0].maps) {
      if (!m.hopf) continue;
      if (m.hopf->dst == h) subs.push_back(image(m.hopf->matrix, Q));
      if (m.hopf->src == h) kernels.push_back(kernel(m.hopf->matrix, Q));
    }
    if (label == "kC4") {
      subs.push_back(basis_span(n, {0, 2}));
    } else if (label == "H4") {
      subs.push_back(basis_span(n, {0, 1}));
      subs.push_back(basis_span(n, {0, 3}));
    } else {
      for (Index g = 1; g < n; ++g) subs.push_back(basis_span(n, {0, g}));
    }
    std::vector<CoidealSubalgebra> as;
    for (const Subspace& s : subs)
      if (coideal_subalgebra_violations(h, s).empty()) as.push_back({h, s});
    std::vector<ModuleQuotientCoalgebra> qs;
    for (const Subspace& k : kernels) qs.push_back(module_quotient(h, k));
    const std::size_t given_as = as.size(), given_qs = qs.size();
    for (std::size_t i = 0; i < given_as; ++i) qs.push_back(op_r(as[i]));
    for (std::size_t i = 0; i < given_qs; ++i) as.push_back(op_l(qs[i]));

    for (const CoidealSubalgebra& a : as) {
      const ModuleQuotientCoalgebra ra = op_r(a);
      for (const ModuleQuotientCoalgebra& q : qs) {
        ++pairs;
        t.check(finer_or_equal(ra, q) == op_l(q).subspace.contains(a.subspace), label + " Galois connection");
      }
      const Subspace dom =
          dominion_alg(restrict_to_subalgebra(h.algebra(), a.subspace).inclusion_map(h.algebra())).dominion;
      t.check(closure(a).subspace == dom, label + " lr(A) vs dominion");
    }
    for (const ModuleQuotientCoalgebra& q : qs)
      t.check(closure(q).quotient.kernel == codominion(q.quotient.projection_map()).kernel,
              label + " rl(q) vs codominion");
  }
  t.note(std::to_string(pairs) + " (A, q) pairs");
}

void cocommutative_monos(Tally& t) {
  std::size_t monos = 0, products = 0, pullbacks = 0;
  for (const Corpus& c : corpora()) {
    std::vector<CoalgebraMap> cc_maps;
    for (const CorpusMap& m : c.maps) {
      if (!m.coalgebra || !is_cocommutative(m.coalgebra->dst)) continue;
      const CoalgebraMap& f = *m.coalgebra;
      if (is_monic(f)) {
        ++monos;
        t.check(injective(f.matrix, f.src.field), m.label + " monic but not injective");
      }
      if (is_cocommutative(f.src) && f.src.dim <= 4) cc_maps.push_back(f);
    }
    std::vector<Coalgebra> cc_objects;
    for (const CorpusObject& o : c.objects) {
      const auto co = coalgebra_part(o.object);
      if (co && co->dim <= 4 && is_cocommutative(*co)) cc_objects.push_back(*co);
    }
    for (const Coalgebra& a : cc_objects)
      for (const Coalgebra& b : cc_objects) {
        ++products;
        const CcProduct p = cc_product(a, b);
        const Field k = a.field;
        t.check(p.product == tensor_objects(a, b), "product is not the tensor product");
        t.check(equal(p.first.matrix, kron(identity(k, a.dim), b.counit)) &&
                    equal(p.second.matrix, kron(a.counit, identity(k, b.dim))),
                "product projections");
        t.check(violations(p.first).empty() && violations(p.second).empty(), "product projections validate");
      }
    for (const CoalgebraMap& f : cc_maps)
      for (const CoalgebraMap& g : cc_maps) {
        if (!(f.dst == g.dst)) continue;
        ++pullbacks;
        const SubcoalgebraPresentation p = cc_pullback(f, g);
        const Subspace expected =
            cotensor(corestrict(regular_comodule(f.src, Side::Right), f), corestrict(regular_comodule(g.src, Side::Left), g));
        t.check(p.subspace == expected, "pullback is not the cotensor product");
        t.check(violations(p.sub).empty(), "pullback validates");
      }
  }
  t.note(std::to_string(monos) + " cocommutative-codomain monics");
  t.note(std::to_string(products) + " products");
  t.note(std::to_string(pullbacks) + " pullbacks");
}

/// Canonical text of a one-comodule workspace.
std::string comodule_text(const Coalgebra& c, const Comodule& v) {
  Workspace ws;
  ws.field = c.field;
  ws.add_object("C", c);
  ws.add_comodule("V", {"C", v});
  return emit_workspace(ws);
}

void descent_uniqueness(Tally& t) {
  std::size_t n = 0;
  for (const Corpus& c : corpora()) {
    const ExtensionContext ctx = extension_for(field_of(c.objects.front().object));
    std::vector<std::pair<std::string, Comodule>> comodules;
    for (const CorpusObject& o : c.objects) {
      const auto co = coalgebra_part(o.object);
      if (!co) continue;
      comodules.push_back({o.label + " regular right", regular_comodule(*co, Side::Right)});
      comodules.push_back({o.label + " regular left", regular_comodule(*co, Side::Left)});
      comodules.push_back({o.label + " cofree", cofree_comodule(*co, 2)});
    }
    for (const CorpusMap& m : c.maps)
      if (m.coalgebra) {
        comodules.push_back({m.label + " corestricted right", corestrict(regular_comodule(m.coalgebra->src), *m.coalgebra)});
        comodules.push_back(
            {m.label + " corestricted left", corestrict(regular_comodule(m.coalgebra->src, Side::Left), *m.coalgebra)});
      }
    for (const auto& [label, v] : comodules) {
      ++n;
      try {
        const Comodule up = extend(v, ctx);
        const Comodule down = descend_comodule(up, v.over, ctx);
        t.check(down == v && comodule_text(v.over, down) == comodule_text(v.over, v), label);
      } catch (const Error& e) {
        t.check(false, label + ": " + e.what());
      }
    }
  }
  t.note(std::to_string(n) + " comodules");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"monic criteria agree on Hopf maps", monic_criteria},
      {"triangular landmark", triangular_landmark},
      {"domination against exhaustive F2 cancellation", domination_by_enumeration},
      {"largest subcoalgebra against F2 enumeration", largest_subcoalgebra_oracle},
      {"K0 is a Hopf ideal and the quotient revalidates", hopf_ideal_descent},
      {"surjections onto cosemisimple or split codomains are codominions", cosemisimple_codomain},
      {"field extension invariance", extension_invariance},
      {"Takeuchi correspondence", takeuchi_suite},
      {"cocommutative monos, products and pullbacks", cocommutative_monos},
      {"comodule descent round trips", descent_uniqueness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("raised ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = t.passed();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << t.summary() << ", "
              << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
