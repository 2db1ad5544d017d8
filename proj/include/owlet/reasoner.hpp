#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "owlet/diagnostic.hpp"
#include "owlet/ontology.hpp"

namespace owlet {

// --- Materialized atoms ------------------------------------------------------

struct Membership {
  Iri individual;
  Iri cls;
  auto operator<=>(const Membership&) const = default;
};

struct Link {
  Iri prop;
  Iri subject;
  Iri object;
  auto operator<=>(const Link&) const = default;
};

struct Subsumption {
  Iri sub;
  Iri sup;
  auto operator<=>(const Subsumption&) const = default;
};

using Atom = std::variant<Membership, Link, Subsumption>;

/// Inference rules of the materializer. `Asserted` marks atoms read directly
/// off an axiom; the rest derive new atoms from existing ones.
enum class Rule {
  Asserted,
  SubclassTransitivity,   // a<=b, b<=c        => a<=c
  ThingSubsumption,       // class c           => c<=Thing
  TypeInheritance,        // C(x), C<=D        => D(x)
  DomainTyping,           // P(x,y), dom(P)=C  => C(x)
  RangeTyping,            // P(x,y), rng(P)=C  => C(y)
  InversePropagation,     // P(x,y), P inv Q   => Q(y,x)
  SymmetricPropagation,   // P(x,y), sym P     => P(y,x)
  TransitivePropagation,  // P(x,y), P(y,z), tr P => P(x,z)
  ReflexiveExpansion,     // individual x, refl P => P(x,x)
};

inline constexpr std::array<Rule, 9> kDefaultRuleOrder = {
    Rule::ThingSubsumption,     Rule::SubclassTransitivity, Rule::TypeInheritance,
    Rule::DomainTyping,         Rule::RangeTyping,          Rule::InversePropagation,
    Rule::SymmetricPropagation, Rule::TransitivePropagation, Rule::ReflexiveExpansion,
};

/// How one atom came to be: the rule, the atoms fed into it, and the asserted
/// axioms it leans on. Asserted atoms carry their axiom and no premises.
struct Derivation {
  Rule rule = Rule::Asserted;
  std::vector<Atom> premises;
  std::vector<Axiom> axioms;
};

/// Deductive closure of an ontology's assertions under the rule set.
/// Equality compares the three atom sets; derivations and round counts are
/// explanatory metadata and may differ between equal graphs.
struct InferredGraph {
  std::set<Membership> memberships;
  std::set<Link> links;
  std::set<Subsumption> subsumptions;
  std::map<Atom, Derivation> derivations;
  std::size_t rounds = 0;

  bool has(const Membership& m) const { return memberships.count(m) > 0; }
  bool has(const Link& l) const { return links.count(l) > 0; }
  bool has(const Subsumption& s) const { return subsumptions.count(s) > 0; }

  std::size_t size() const { return memberships.size() + links.size() + subsumptions.size(); }

  bool operator==(const InferredGraph& other) const {
    return memberships == other.memberships && links == other.links &&
           subsumptions == other.subsumptions;
  }
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<Diagnostic> diagnostics;
};

/// Direct-edge view of the inferred class hierarchy: the transitive reduction
/// of the subsumption closure, every class reachable from owl:Thing.
/// `consistent` is false when classification ran on an inconsistent ontology;
/// the edges are still the syntactic hierarchy.
struct Taxonomy {
  std::set<Subsumption> edges;
  bool consistent = true;
};

namespace detail {

class Materializer {
public:
  Materializer(const Ontology& ont, std::span<const Rule> order) : ont_(ont), order_(order) {}

  InferredGraph run() {
    seed_asserted();
    const std::size_t cap = atom_bound() + 2;
    bool changed = true;
    while (changed) {
      changed = false;
      ++graph_.rounds;
      if (graph_.rounds > cap)
        throw std::logic_error("materialization exceeded its termination bound");
      for (const Rule rule : order_) changed |= apply(rule);
    }
    return std::move(graph_);
  }

private:
  // Rounds are capped by the total number of representable atoms: each
  // productive round grows one of three finite sets.
  std::size_t atom_bound() const {
    const std::size_t nc = ont_.signature().classes.size();
    const std::size_t ni = ont_.signature().individuals.size();
    const std::size_t np = ont_.signature().properties.size();
    return nc * nc + ni * nc + np * ni * ni;
  }

  void seed_asserted() {
    for (const Axiom& ax : ont_.axioms()) {
      if (const auto* sc = std::get_if<SubClassOf>(&ax)) {
        // Self-edges stay: materialization must contain every asserted atom.
        if (sc->sub.is_named() && sc->sup.is_named())
          insert(Subsumption{sc->sub.cls(), sc->sup.cls()}, {Rule::Asserted, {}, {ax}});
      } else if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
        if (ca->cls.is_named())
          insert(Membership{ca->individual, ca->cls.cls()}, {Rule::Asserted, {}, {ax}});
      } else if (const auto* oa = std::get_if<ObjectAssertion>(&ax)) {
        insert(Link{oa->prop, oa->subject, oa->object}, {Rule::Asserted, {}, {ax}});
      }
    }
  }

  bool apply(Rule rule) {
    // Collect first, insert after: keeps each application a pure function of
    // the state it observed.
    pending_.clear();
    switch (rule) {
      case Rule::Asserted: break;
      case Rule::ThingSubsumption: {
        for (const Iri& c : ont_.signature().classes) {
          if (c == vocab::owl_thing()) continue;
          propose(Subsumption{c, vocab::owl_thing()},
                  {Rule::ThingSubsumption, {}, {DeclareClass{c}}});
        }
        break;
      }
      case Rule::SubclassTransitivity: {
        for (const Subsumption& ab : graph_.subsumptions) {
          for (const Subsumption& bc : graph_.subsumptions) {
            if (ab.sup != bc.sub || ab.sub == bc.sup) continue;
            propose(Subsumption{ab.sub, bc.sup},
                    {Rule::SubclassTransitivity, {ab, bc}, {}});
          }
        }
        break;
      }
      case Rule::TypeInheritance: {
        for (const Membership& m : graph_.memberships) {
          for (const Subsumption& s : graph_.subsumptions) {
            if (s.sub != m.cls) continue;
            propose(Membership{m.individual, s.sup}, {Rule::TypeInheritance, {m, s}, {}});
          }
        }
        break;
      }
      case Rule::DomainTyping: {
        // Links exist only for object properties; domains on datatype
        // properties never see a matching link.
        for (const Axiom& ax : ont_.axioms()) {
          const auto* dom = std::get_if<Domain>(&ax);
          if (!dom) continue;
          for (const Link& l : graph_.links) {
            if (l.prop != dom->prop) continue;
            propose(Membership{l.subject, dom->cls}, {Rule::DomainTyping, {l}, {ax}});
          }
        }
        break;
      }
      case Rule::RangeTyping: {
        for (const Axiom& ax : ont_.axioms()) {
          const auto* rng = std::get_if<Range>(&ax);
          if (!rng) continue;
          const auto* expr = std::get_if<ClassExpression>(&rng->target);
          if (!expr || !expr->is_named()) continue;  // complement ranges only feed clashes
          for (const Link& l : graph_.links) {
            if (l.prop != rng->prop) continue;
            propose(Membership{l.object, expr->cls()}, {Rule::RangeTyping, {l}, {ax}});
          }
        }
        break;
      }
      case Rule::InversePropagation: {
        for (const Axiom& ax : ont_.axioms()) {
          const auto* inv = std::get_if<InverseOf>(&ax);
          if (!inv) continue;
          for (const Link& l : graph_.links) {
            if (l.prop == inv->prop)
              propose(Link{inv->inverse, l.object, l.subject},
                      {Rule::InversePropagation, {l}, {ax}});
            if (l.prop == inv->inverse)
              propose(Link{inv->prop, l.object, l.subject},
                      {Rule::InversePropagation, {l}, {ax}});
          }
        }
        break;
      }
      case Rule::SymmetricPropagation: {
        for (const Axiom& ax : ont_.axioms()) {
          const auto* ch = std::get_if<HasCharacteristic>(&ax);
          if (!ch || ch->characteristic != Characteristic::Symmetric) continue;
          for (const Link& l : graph_.links) {
            if (l.prop != ch->prop) continue;
            propose(Link{l.prop, l.object, l.subject}, {Rule::SymmetricPropagation, {l}, {ax}});
          }
        }
        break;
      }
      case Rule::TransitivePropagation: {
        for (const Axiom& ax : ont_.axioms()) {
          const auto* ch = std::get_if<HasCharacteristic>(&ax);
          if (!ch || ch->characteristic != Characteristic::Transitive) continue;
          for (const Link& xy : graph_.links) {
            if (xy.prop != ch->prop) continue;
            for (const Link& yz : graph_.links) {
              if (yz.prop != ch->prop || yz.subject != xy.object) continue;
              propose(Link{ch->prop, xy.subject, yz.object},
                      {Rule::TransitivePropagation, {xy, yz}, {ax}});
            }
          }
        }
        break;
      }
      case Rule::ReflexiveExpansion: {
        for (const Axiom& ax : ont_.axioms()) {
          const auto* ch = std::get_if<HasCharacteristic>(&ax);
          if (!ch || ch->characteristic != Characteristic::Reflexive) continue;
          for (const Iri& x : ont_.signature().individuals)
            propose(Link{ch->prop, x, x},
                    {Rule::ReflexiveExpansion, {}, {ax, DeclareIndividual{x}}});
        }
        break;
      }
    }
    bool changed = false;
    for (auto& [atom, deriv] : pending_) changed |= insert_atom(atom, std::move(deriv));
    return changed;
  }

  template <typename A>
  void propose(A atom, Derivation deriv) {
    if (!graph_.has(atom)) pending_.emplace_back(Atom(std::move(atom)), std::move(deriv));
  }

  template <typename A>
  bool insert(A atom, Derivation deriv) {
    return insert_atom(Atom(std::move(atom)), std::move(deriv));
  }

  bool insert_atom(const Atom& atom, Derivation deriv) {
    bool added = false;
    if (const auto* m = std::get_if<Membership>(&atom)) added = graph_.memberships.insert(*m).second;
    if (const auto* l = std::get_if<Link>(&atom)) added = graph_.links.insert(*l).second;
    if (const auto* s = std::get_if<Subsumption>(&atom)) added = graph_.subsumptions.insert(*s).second;
    if (added) graph_.derivations.emplace(atom, std::move(deriv));
    return added;
  }

  const Ontology& ont_;
  std::span<const Rule> order_;
  InferredGraph graph_;
  std::vector<std::pair<Atom, Derivation>> pending_;
};

}  // namespace detail

/// Computes the fixpoint of the rule set over the asserted atoms. The result
/// is independent of the rule scheduling; `order` only affects how many
/// rounds it takes.
inline InferredGraph materialize(const Ontology& ont, std::span<const Rule> order) {
  return detail::Materializer(ont, order).run();
}

inline InferredGraph materialize(const Ontology& ont) {
  return materialize(ont, std::span<const Rule>(kDefaultRuleOrder));
}

/// Recomputes an atom from its recorded derivation. Used to audit that every
/// explanation actually supports its conclusion.
inline std::optional<Atom> replay_derivation(const Derivation& d) {
  const auto link_at = [&](std::size_t i) { return std::get_if<Link>(&d.premises[i]); };
  switch (d.rule) {
    case Rule::Asserted: {
      if (d.axioms.size() != 1) return std::nullopt;
      const Axiom& ax = d.axioms.front();
      if (const auto* sc = std::get_if<SubClassOf>(&ax)) {
        if (sc->sub.is_named() && sc->sup.is_named())
          return Atom(Subsumption{sc->sub.cls(), sc->sup.cls()});
      } else if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
        if (ca->cls.is_named()) return Atom(Membership{ca->individual, ca->cls.cls()});
      } else if (const auto* oa = std::get_if<ObjectAssertion>(&ax)) {
        return Atom(Link{oa->prop, oa->subject, oa->object});
      }
      return std::nullopt;
    }
    case Rule::ThingSubsumption: {
      if (d.axioms.size() != 1) return std::nullopt;
      const auto* decl = std::get_if<DeclareClass>(&d.axioms.front());
      if (!decl) return std::nullopt;
      return Atom(Subsumption{decl->cls, vocab::owl_thing()});
    }
    case Rule::SubclassTransitivity: {
      if (d.premises.size() != 2) return std::nullopt;
      const auto* ab = std::get_if<Subsumption>(&d.premises[0]);
      const auto* bc = std::get_if<Subsumption>(&d.premises[1]);
      if (!ab || !bc || ab->sup != bc->sub) return std::nullopt;
      return Atom(Subsumption{ab->sub, bc->sup});
    }
    case Rule::TypeInheritance: {
      if (d.premises.size() != 2) return std::nullopt;
      const auto* m = std::get_if<Membership>(&d.premises[0]);
      const auto* s = std::get_if<Subsumption>(&d.premises[1]);
      if (!m || !s || s->sub != m->cls) return std::nullopt;
      return Atom(Membership{m->individual, s->sup});
    }
    case Rule::DomainTyping: {
      if (d.premises.size() != 1 || d.axioms.size() != 1) return std::nullopt;
      const auto* l = link_at(0);
      const auto* dom = std::get_if<Domain>(&d.axioms.front());
      if (!l || !dom || l->prop != dom->prop) return std::nullopt;
      return Atom(Membership{l->subject, dom->cls});
    }
    case Rule::RangeTyping: {
      if (d.premises.size() != 1 || d.axioms.size() != 1) return std::nullopt;
      const auto* l = link_at(0);
      const auto* rng = std::get_if<Range>(&d.axioms.front());
      if (!l || !rng || l->prop != rng->prop) return std::nullopt;
      const auto* expr = std::get_if<ClassExpression>(&rng->target);
      if (!expr || !expr->is_named()) return std::nullopt;
      return Atom(Membership{l->object, expr->cls()});
    }
    case Rule::InversePropagation: {
      if (d.premises.size() != 1 || d.axioms.size() != 1) return std::nullopt;
      const auto* l = link_at(0);
      const auto* inv = std::get_if<InverseOf>(&d.axioms.front());
      if (!l || !inv) return std::nullopt;
      if (l->prop == inv->prop) return Atom(Link{inv->inverse, l->object, l->subject});
      if (l->prop == inv->inverse) return Atom(Link{inv->prop, l->object, l->subject});
      return std::nullopt;
    }
    case Rule::SymmetricPropagation: {
      if (d.premises.size() != 1 || d.axioms.size() != 1) return std::nullopt;
      const auto* l = link_at(0);
      const auto* ch = std::get_if<HasCharacteristic>(&d.axioms.front());
      if (!l || !ch || ch->characteristic != Characteristic::Symmetric || l->prop != ch->prop)
        return std::nullopt;
      return Atom(Link{l->prop, l->object, l->subject});
    }
    case Rule::TransitivePropagation: {
      if (d.premises.size() != 2 || d.axioms.size() != 1) return std::nullopt;
      const auto* xy = link_at(0);
      const auto* yz = link_at(1);
      const auto* ch = std::get_if<HasCharacteristic>(&d.axioms.front());
      if (!xy || !yz || !ch || ch->characteristic != Characteristic::Transitive) return std::nullopt;
      if (xy->prop != ch->prop || yz->prop != ch->prop || xy->object != yz->subject)
        return std::nullopt;
      return Atom(Link{ch->prop, xy->subject, yz->object});
    }
    case Rule::ReflexiveExpansion: {
      if (d.axioms.size() != 2) return std::nullopt;
      const auto* ch = std::get_if<HasCharacteristic>(&d.axioms[0]);
      const auto* ind = std::get_if<DeclareIndividual>(&d.axioms[1]);
      if (!ch || !ind || ch->characteristic != Characteristic::Reflexive) return std::nullopt;
      return Atom(Link{ch->prop, ind->individual, ind->individual});
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::map<Iri, std::set<Characteristic>> characteristics_by_property(const Ontology& ont) {
  std::map<Iri, std::set<Characteristic>> out;
  for (const Axiom& ax : ont.axioms()) {
    if (const auto* ch = std::get_if<HasCharacteristic>(&ax))
      out[ch->prop].insert(ch->characteristic);
  }
  return out;
}

inline Axiom characteristic_axiom(const Iri& prop, Characteristic ch) {
  return HasCharacteristic{prop, ch};
}

/// Walks an atom's derivation chain down to the asserted axioms it rests on.
inline void collect_supporting_axioms(const InferredGraph& graph, const Atom& atom,
                                      std::set<Atom>& visited, std::vector<Axiom>& out) {
  if (!visited.insert(atom).second) return;
  const auto it = graph.derivations.find(atom);
  if (it == graph.derivations.end()) return;
  for (const Axiom& ax : it->second.axioms) {
    if (std::find(out.begin(), out.end(), ax) == out.end()) out.push_back(ax);
  }
  for (const Atom& premise : it->second.premises)
    collect_supporting_axioms(graph, premise, visited, out);
}

inline std::vector<Axiom> supporting_axioms(const InferredGraph& graph,
                                            std::initializer_list<Atom> atoms,
                                            std::initializer_list<Axiom> extra) {
  std::vector<Axiom> out(extra);
  std::set<Atom> visited;
  for (const Atom& atom : atoms) collect_supporting_axioms(graph, atom, visited, out);
  return out;
}

}  // namespace detail

/// Structural screening of property characteristics, no assertions consulted.
/// Reflexive+Asymmetric and Reflexive+Irreflexive can hold in no interpretation
/// with a non-empty domain: errors. Symmetric+Asymmetric still admits the empty
/// extension: a warning until the property is used.
inline std::vector<Diagnostic> check_characteristic_compatibility(const Ontology& ont) {
  std::vector<Diagnostic> out;
  const auto emit = [&](Severity sev, const Iri& prop, Characteristic a, Characteristic b,
                        const std::string& why) {
    out.push_back(Diagnostic{
        sev,
        DiagnosticKind::CharacteristicConflict,
        {prop},
        "property " + std::string(prop.local_name()) + " is declared " +
            std::string(to_string(a)) + " and " + std::string(to_string(b)) + ": " + why,
        {detail::characteristic_axiom(prop, a), detail::characteristic_axiom(prop, b)}});
  };
  for (const auto& [prop, chars] : detail::characteristics_by_property(ont)) {
    const auto has = [&, &chars = chars](Characteristic c) { return chars.count(c) > 0; };
    if (has(Characteristic::Reflexive) && has(Characteristic::Asymmetric))
      emit(Severity::Error, prop, Characteristic::Reflexive, Characteristic::Asymmetric,
           "a reflexive property relates every individual to itself, which an asymmetric "
           "property forbids");
    if (has(Characteristic::Reflexive) && has(Characteristic::Irreflexive))
      emit(Severity::Error, prop, Characteristic::Reflexive, Characteristic::Irreflexive,
           "no property can both require and forbid self-links");
    if (has(Characteristic::Symmetric) && has(Characteristic::Asymmetric))
      emit(Severity::Warning, prop, Characteristic::Symmetric, Characteristic::Asymmetric,
           "satisfiable only while the property links no individuals");
  }
  return out;
}

/// Full consistency check: structural characteristic screening, then clash
/// detection over the materialized graph.
inline ConsistencyReport check_consistency(const Ontology& ont) {
  ConsistencyReport report;
  report.diagnostics = check_characteristic_compatibility(ont);
  const InferredGraph graph = materialize(ont);

  // A Symmetric+Asymmetric pair turns inconsistent as soon as the property
  // links anything.
  for (Diagnostic& d : report.diagnostics) {
    if (d.kind != DiagnosticKind::CharacteristicConflict || d.severity != Severity::Warning)
      continue;
    const Iri& prop = d.entities.front();
    const bool used = std::any_of(graph.links.begin(), graph.links.end(),
                                  [&](const Link& l) { return l.prop == prop; });
    if (used) {
      d.severity = Severity::Error;
      d.message += " (the property is used)";
    }
  }

  const auto chars = detail::characteristics_by_property(ont);
  const auto has_char = [&](const Iri& p, Characteristic c) {
    const auto it = chars.find(p);
    return it != chars.end() && it->second.count(c) > 0;
  };

  // Irreflexive clash: a self-link on a property that forbids them.
  for (const Link& l : graph.links) {
    if (l.subject != l.object || !has_char(l.prop, Characteristic::Irreflexive)) continue;
    report.diagnostics.push_back(Diagnostic{
        Severity::Error,
        DiagnosticKind::IrreflexiveClash,
        {l.prop, l.subject},
        std::string(l.prop.local_name()) + " is irreflexive but links " +
            std::string(l.subject.local_name()) + " to itself",
        detail::supporting_axioms(
            graph, {Atom(l)},
            {detail::characteristic_axiom(l.prop, Characteristic::Irreflexive)})});
  }

  // Asymmetric clash: both directions present (a self-link counts as both).
  {
    std::set<std::pair<Link, Link>> seen;
    for (const Link& l : graph.links) {
      if (!has_char(l.prop, Characteristic::Asymmetric)) continue;
      const Link reverse{l.prop, l.object, l.subject};
      if (!graph.has(reverse)) continue;
      const auto key = std::minmax(l, reverse);
      if (!seen.insert(key).second) continue;
      report.diagnostics.push_back(Diagnostic{
          Severity::Error,
          DiagnosticKind::AsymmetricClash,
          {l.prop, l.subject, l.object},
          std::string(l.prop.local_name()) + " is asymmetric but holds between " +
              std::string(l.subject.local_name()) + " and " +
              std::string(l.object.local_name()) + " in both directions",
          detail::supporting_axioms(
              graph, {Atom(l), Atom(reverse)},
              {detail::characteristic_axiom(l.prop, Characteristic::Asymmetric)})});
    }
  }

  // Disjointness clash: one individual in two classes declared disjoint.
  for (const Axiom& ax : ont.axioms()) {
    const auto* dj = std::get_if<DisjointClasses>(&ax);
    if (!dj) continue;
    for (const Membership& m : graph.memberships) {
      if (m.cls != dj->first) continue;
      const Membership other{m.individual, dj->second};
      if (!graph.has(other)) continue;
      report.diagnostics.push_back(Diagnostic{
          Severity::Error,
          DiagnosticKind::DisjointnessClash,
          {dj->first, dj->second, m.individual},
          std::string(m.individual.local_name()) + " belongs to both " +
              std::string(dj->first.local_name()) + " and " +
              std::string(dj->second.local_name()) + ", which are disjoint",
          detail::supporting_axioms(graph, {Atom(m), Atom(other)}, {ax})});
    }
  }

  // Complement clash: an individual provably inside a class it is stated to
  // be outside of. Three sources of the negative side: a complement class
  // assertion, a subclass-of-complement axiom, a complement range.
  for (const Axiom& ax : ont.axioms()) {
    if (const auto* ca = std::get_if<ClassAssertion>(&ax); ca && ca->cls.is_complement()) {
      const Membership inside{ca->individual, ca->cls.cls()};
      // Every individual is in Thing, so membership there needs no derivation.
      if (ca->cls.cls() != vocab::owl_thing() && !graph.has(inside)) continue;
      report.diagnostics.push_back(Diagnostic{
          Severity::Error,
          DiagnosticKind::ComplementClash,
          {ca->individual, ca->cls.cls()},
          std::string(ca->individual.local_name()) + " is asserted outside " +
              std::string(ca->cls.cls().local_name()) + " but provably belongs to it",
          detail::supporting_axioms(graph, {Atom(inside)}, {ax})});
    } else if (const auto* sc = std::get_if<SubClassOf>(&ax);
               sc && sc->sub.is_named() && sc->sup.is_complement()) {
      for (const Membership& m : graph.memberships) {
        if (m.cls != sc->sub.cls()) continue;
        const Membership inside{m.individual, sc->sup.cls()};
        if (!graph.has(inside)) continue;
        report.diagnostics.push_back(Diagnostic{
            Severity::Error,
            DiagnosticKind::ComplementClash,
            {m.individual, sc->sub.cls(), sc->sup.cls()},
            std::string(m.individual.local_name()) + " belongs to " +
                std::string(sc->sub.cls().local_name()) + ", which excludes " +
                std::string(sc->sup.cls().local_name()) + ", yet provably belongs to it",
            detail::supporting_axioms(graph, {Atom(m), Atom(inside)}, {ax})});
      }
    } else if (const auto* rng = std::get_if<Range>(&ax)) {
      const auto* expr = std::get_if<ClassExpression>(&rng->target);
      if (!expr || !expr->is_complement()) continue;
      for (const Link& l : graph.links) {
        if (l.prop != rng->prop) continue;
        const Membership inside{l.object, expr->cls()};
        if (expr->cls() != vocab::owl_thing() && !graph.has(inside)) continue;
        report.diagnostics.push_back(Diagnostic{
            Severity::Error,
            DiagnosticKind::ComplementClash,
            {l.object, rng->prop, expr->cls()},
            "range of " + std::string(rng->prop.local_name()) + " excludes " +
                std::string(expr->cls().local_name()) + " but " +
                std::string(l.object.local_name()) + " provably belongs to it",
            detail::supporting_axioms(graph, {Atom(l), Atom(inside)}, {ax})});
      }
    }
  }

  // Functional / inverse-functional clashes. Two distinct fillers are an
  // error only when the fillers are asserted to be different individuals;
  // under the open-world assumption two names may denote one individual,
  // so the default is a warning.
  const auto different = [&](const Iri& a, const Iri& b) {
    return a != b && ont.contains(Axiom(DifferentIndividuals{a, b}));
  };
  const auto scan_functional = [&](Characteristic ch, DiagnosticKind kind, bool by_subject) {
    std::set<std::vector<Iri>> seen;
    for (const Link& l : graph.links) {
      if (!has_char(l.prop, ch)) continue;
      for (const Link& m : graph.links) {
        if (m.prop != l.prop) continue;
        const Iri& shared_l = by_subject ? l.subject : l.object;
        const Iri& shared_m = by_subject ? m.subject : m.object;
        const Iri& filler_l = by_subject ? l.object : l.subject;
        const Iri& filler_m = by_subject ? m.object : m.subject;
        if (shared_l != shared_m || filler_l >= filler_m) continue;
        std::vector<Iri> key{l.prop, shared_l, filler_l, filler_m};
        if (!seen.insert(key).second) continue;
        const bool distinct = different(filler_l, filler_m);
        std::vector<Axiom> prov = detail::supporting_axioms(
            graph, {Atom(l), Atom(m)}, {detail::characteristic_axiom(l.prop, ch)});
        if (distinct) prov.push_back(DifferentIndividuals{filler_l, filler_m});
        report.diagnostics.push_back(Diagnostic{
            distinct ? Severity::Error : Severity::Warning,
            kind,
            std::move(key),
            std::string(l.prop.local_name()) + " is " +
                (by_subject ? "functional" : "inverse-functional") + " but relates " +
                std::string(shared_l.local_name()) + " to both " +
                std::string(filler_l.local_name()) + " and " +
                std::string(filler_m.local_name()) +
                (distinct ? ", which are different individuals"
                          : "; the two names may still denote one individual"),
            std::move(prov)});
      }
    }
  };
  scan_functional(Characteristic::Functional, DiagnosticKind::FunctionalClash, true);
  scan_functional(Characteristic::InverseFunctional, DiagnosticKind::InverseFunctionalClash,
                  false);

  // Functional datatype properties: lexically distinct values are only a
  // warning, lexical difference does not prove value difference.
  {
    std::map<std::pair<Iri, Iri>, std::set<Literal>> values;
    for (const Axiom& ax : ont.axioms()) {
      const auto* da = std::get_if<DataAssertion>(&ax);
      if (!da || !has_char(da->prop, Characteristic::Functional)) continue;
      values[{da->prop, da->subject}].insert(da->value);
    }
    for (const auto& [key, vals] : values) {
      if (vals.size() < 2) continue;
      std::vector<Axiom> prov{detail::characteristic_axiom(key.first, Characteristic::Functional)};
      for (const Literal& v : vals) prov.push_back(DataAssertion{key.first, key.second, v});
      report.diagnostics.push_back(Diagnostic{
          Severity::Warning,
          DiagnosticKind::FunctionalClash,
          {key.first, key.second},
          std::string(key.first.local_name()) + " is functional but " +
              std::string(key.second.local_name()) + " carries " +
              std::to_string(vals.size()) + " values; the lexical forms may still denote one value",
          std::move(prov)});
    }
  }

  report.consistent =
      std::none_of(report.diagnostics.begin(), report.diagnostics.end(),
                   [](const Diagnostic& d) { return d.severity == Severity::Error; });
  return report;
}

/// Transitive reduction of the subsumption closure: the direct-parent edges a
/// hierarchy display needs. Orphan classes attach to owl:Thing.
inline Taxonomy classify(const Ontology& ont) {
  Taxonomy taxonomy;
  taxonomy.consistent = check_consistency(ont).consistent;
  const InferredGraph graph = materialize(ont);
  std::set<Subsumption> closure;
  for (const Subsumption& s : graph.subsumptions) {
    if (s.sub != s.sup) closure.insert(s);
  }
  for (const Subsumption& edge : closure) {
    bool redundant = false;
    for (const Subsumption& mid : closure) {
      if (mid.sub != edge.sub || mid.sup == edge.sup || mid.sup == edge.sub) continue;
      if (closure.count(Subsumption{mid.sup, edge.sup})) {
        redundant = true;
        break;
      }
    }
    if (!redundant) taxonomy.edges.insert(edge);
  }
  return taxonomy;
}

/// OWL-Full constructs the engine rejects: one IRI in several entity roles
/// (metaclass-style punning) and annotation properties inside logical axioms.
inline std::vector<Diagnostic> check_profile(const Ontology& ont) {
  enum RoleBit : unsigned { kClass = 1, kProperty = 2, kIndividual = 4 };
  std::map<Iri, unsigned> roles;
  std::map<Iri, std::vector<Axiom>> witnesses;
  const auto use = [&](const Iri& iri, unsigned bit, const Axiom& ax) {
    roles[iri] |= bit;
    auto& w = witnesses[iri];
    if (std::find(w.begin(), w.end(), ax) == w.end()) w.push_back(ax);
  };

  std::set<Iri> annotation_props;
  for (const Axiom& ax : ont.axioms()) {
    if (const auto* dp = std::get_if<DeclareProperty>(&ax)) {
      if (dp->kind == PropertyKind::Annotation) annotation_props.insert(dp->prop);
    }
  }

  std::vector<Diagnostic> out;
  const auto flag_annotation = [&](const Iri& prop, const Axiom& ax) {
    if (!annotation_props.count(prop)) return;
    out.push_back(Diagnostic{Severity::Error,
                             DiagnosticKind::AnnotationInLogicalAxiom,
                             {prop},
                             "annotation property " + std::string(prop.local_name()) +
                                 " has no formal meaning and cannot appear in a logical axiom",
                             {ax}});
  };

  for (const Axiom& ax : ont.axioms()) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, DeclareClass>) {
            use(a.cls, kClass, ax);
          } else if constexpr (std::is_same_v<T, DeclareProperty>) {
            use(a.prop, kProperty, ax);
          } else if constexpr (std::is_same_v<T, DeclareIndividual>) {
            use(a.individual, kIndividual, ax);
          } else if constexpr (std::is_same_v<T, SubClassOf>) {
            use(a.sub.cls(), kClass, ax);
            use(a.sup.cls(), kClass, ax);
          } else if constexpr (std::is_same_v<T, DisjointClasses>) {
            use(a.first, kClass, ax);
            use(a.second, kClass, ax);
          } else if constexpr (std::is_same_v<T, HasCharacteristic>) {
            use(a.prop, kProperty, ax);
            flag_annotation(a.prop, ax);
          } else if constexpr (std::is_same_v<T, InverseOf>) {
            use(a.prop, kProperty, ax);
            use(a.inverse, kProperty, ax);
            flag_annotation(a.prop, ax);
            flag_annotation(a.inverse, ax);
          } else if constexpr (std::is_same_v<T, Domain>) {
            use(a.prop, kProperty, ax);
            use(a.cls, kClass, ax);
            flag_annotation(a.prop, ax);
          } else if constexpr (std::is_same_v<T, Range>) {
            use(a.prop, kProperty, ax);
            if (const auto* expr = std::get_if<ClassExpression>(&a.target))
              use(expr->cls(), kClass, ax);
            flag_annotation(a.prop, ax);
          } else if constexpr (std::is_same_v<T, ClassAssertion>) {
            use(a.cls.cls(), kClass, ax);
            use(a.individual, kIndividual, ax);
          } else if constexpr (std::is_same_v<T, ObjectAssertion>) {
            use(a.prop, kProperty, ax);
            use(a.subject, kIndividual, ax);
            use(a.object, kIndividual, ax);
            flag_annotation(a.prop, ax);
          } else if constexpr (std::is_same_v<T, DataAssertion>) {
            use(a.prop, kProperty, ax);
            use(a.subject, kIndividual, ax);
            flag_annotation(a.prop, ax);
          } else if constexpr (std::is_same_v<T, DifferentIndividuals>) {
            use(a.first, kIndividual, ax);
            use(a.second, kIndividual, ax);
          } else {
            static_assert(std::is_same_v<T, Annotation>);
            use(a.prop, kProperty, ax);
          }
        },
        ax);
  }

  for (const auto& [iri, bits] : roles) {
    if (iri == vocab::owl_thing()) continue;
    const unsigned count = unsigned(bits & kClass ? 1 : 0) + unsigned(bits & kProperty ? 1 : 0) +
                           unsigned(bits & kIndividual ? 1 : 0);
    if (count < 2) continue;
    std::string desc;
    if (bits & kClass) desc += "class";
    if (bits & kProperty) desc += desc.empty() ? "property" : " and property";
    if (bits & kIndividual) desc += desc.empty() ? "individual" : " and individual";
    out.push_back(Diagnostic{Severity::Error,
                             DiagnosticKind::RoleConflict,
                             {iri},
                             iri.str() + " is used as " + desc +
                                 "; ontologies with punned names cannot be classified",
                             witnesses[iri]});
  }
  return out;
}

// --- Bounded model enumeration (test oracle) ---------------------------------

/// Brute-force satisfiability over universes of up to `max_individuals`
/// elements: every mapping of named individuals into the universe, every
/// property extension, and the least class extents the positive axioms force.
/// Exponential by nature; throws ModelError when the ontology exceeds the
/// supported bounds (at most 3 object properties, 3 individuals, 6 classes,
/// no data assertions, no complement on the left of a subclass axiom).
inline bool enumerate_models(const Ontology& ont, int max_individuals) {
  if (max_individuals < 1 || max_individuals > 3)
    throw ModelError("enumerate_models: max_individuals must be between 1 and 3");

  std::vector<Iri> props;
  for (const auto& [iri, kind] : ont.signature().properties) {
    if (kind == PropertyKind::Object) props.push_back(iri);
  }
  std::vector<Iri> inds(ont.signature().individuals.begin(), ont.signature().individuals.end());
  std::vector<Iri> classes;
  for (const Iri& c : ont.signature().classes) {
    if (c != vocab::owl_thing()) classes.push_back(c);
  }
  if (props.size() > 3) throw ModelError("enumerate_models: size bounds exceeded (properties)");
  if (inds.size() > 3) throw ModelError("enumerate_models: size bounds exceeded (individuals)");
  if (classes.size() > 6) throw ModelError("enumerate_models: size bounds exceeded (classes)");

  for (const Axiom& ax : ont.axioms()) {
    if (std::holds_alternative<DataAssertion>(ax))
      throw ModelError("enumerate_models: data assertions are not supported");
    if (const auto* sc = std::get_if<SubClassOf>(&ax); sc && sc->sub.is_complement())
      throw ModelError("enumerate_models: complement on the left of a subclass axiom");
  }

  const auto prop_index = [&](const Iri& p) {
    return std::size_t(std::find(props.begin(), props.end(), p) - props.begin());
  };
  const auto class_index = [&](const Iri& c) -> std::optional<std::size_t> {
    if (c == vocab::owl_thing()) return std::nullopt;  // extent is the whole universe
    return std::size_t(std::find(classes.begin(), classes.end(), c) - classes.begin());
  };

  for (int n = 1; n <= max_individuals; ++n) {
    const std::size_t pair_bits = std::size_t(n) * std::size_t(n);
    const std::size_t ext_bits = props.size() * pair_bits;
    const std::uint64_t mapping_count = [&] {
      std::uint64_t m = 1;
      for (std::size_t i = 0; i < inds.size(); ++i) m *= std::uint64_t(n);
      return m;
    }();
    if (ext_bits > 27 || mapping_count << ext_bits >> ext_bits != mapping_count ||
        (mapping_count << ext_bits) > (std::uint64_t(1) << 24))
      throw ModelError("enumerate_models: size bounds exceeded (search space)");

    std::vector<int> denote(inds.size(), 0);
    for (std::uint64_t mapping = 0; mapping < mapping_count; ++mapping) {
      std::uint64_t m = mapping;
      for (std::size_t i = 0; i < inds.size(); ++i) {
        denote[i] = int(m % std::uint64_t(n));
        m /= std::uint64_t(n);
      }
      const auto of = [&](const Iri& ind) {
        return denote[std::size_t(std::find(inds.begin(), inds.end(), ind) - inds.begin())];
      };

      bool mapping_ok = true;
      for (const Axiom& ax : ont.axioms()) {
        if (const auto* di = std::get_if<DifferentIndividuals>(&ax)) {
          if (of(di->first) == of(di->second)) {
            mapping_ok = false;
            break;
          }
        }
      }
      if (!mapping_ok) continue;

      for (std::uint64_t ext = 0; ext < (std::uint64_t(1) << ext_bits); ++ext) {
        const auto holds = [&](std::size_t p, int u, int v) {
          return (ext >> (p * pair_bits + std::size_t(u) * std::size_t(n) + std::size_t(v))) & 1u;
        };

        bool ok = true;
        for (const Axiom& ax : ont.axioms()) {
          if (const auto* oa = std::get_if<ObjectAssertion>(&ax)) {
            ok = holds(prop_index(oa->prop), of(oa->subject), of(oa->object));
          } else if (const auto* ch = std::get_if<HasCharacteristic>(&ax)) {
            if (ont.property_kind(ch->prop) != PropertyKind::Object) continue;
            const std::size_t p = prop_index(ch->prop);
            for (int u = 0; ok && u < n; ++u) {
              for (int v = 0; ok && v < n; ++v) {
                switch (ch->characteristic) {
                  case Characteristic::Functional:
                    for (int w = v + 1; ok && w < n; ++w)
                      ok = !(holds(p, u, v) && holds(p, u, w));
                    break;
                  case Characteristic::InverseFunctional:
                    for (int w = v + 1; ok && w < n; ++w)
                      ok = !(holds(p, v, u) && holds(p, w, u));
                    break;
                  case Characteristic::Transitive:
                    for (int w = 0; ok && w < n; ++w)
                      ok = !(holds(p, u, v) && holds(p, v, w)) || holds(p, u, w);
                    break;
                  case Characteristic::Symmetric:
                    ok = !holds(p, u, v) || holds(p, v, u);
                    break;
                  case Characteristic::Asymmetric:
                    ok = !(holds(p, u, v) && holds(p, v, u));
                    break;
                  case Characteristic::Reflexive:
                    ok = v != u || holds(p, u, u);
                    break;
                  case Characteristic::Irreflexive:
                    ok = v != u || !holds(p, u, u);
                    break;
                }
              }
            }
          } else if (const auto* inv = std::get_if<InverseOf>(&ax)) {
            const std::size_t p = prop_index(inv->prop);
            const std::size_t q = prop_index(inv->inverse);
            for (int u = 0; ok && u < n; ++u)
              for (int v = 0; ok && v < n; ++v) ok = holds(p, u, v) == holds(q, v, u);
          }
          if (!ok) break;
        }
        if (!ok) continue;

        // Least class extents the positive axioms force.
        std::vector<std::uint32_t> extent(classes.size(), 0);
        const auto member = [&](std::size_t c, int u) { return (extent[c] >> u) & 1u; };
        for (const Axiom& ax : ont.axioms()) {
          if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
            if (!ca->cls.is_named()) continue;
            if (const auto c = class_index(ca->cls.cls())) extent[*c] |= 1u << of(ca->individual);
          } else if (const auto* sc = std::get_if<SubClassOf>(&ax)) {
            // Thing on the left forces the superclass to cover the universe.
            if (!sc->sub.is_named() || !sc->sup.is_named()) continue;
            if (sc->sub.cls() != vocab::owl_thing()) continue;
            if (const auto c = class_index(sc->sup.cls())) extent[*c] = ~0u >> (32 - n);
          } else if (const auto* dom = std::get_if<Domain>(&ax)) {
            if (ont.property_kind(dom->prop) != PropertyKind::Object) continue;
            const auto c = class_index(dom->cls);
            if (!c) continue;
            const std::size_t p = prop_index(dom->prop);
            for (int u = 0; u < n; ++u)
              for (int v = 0; v < n; ++v)
                if (holds(p, u, v)) extent[*c] |= 1u << u;
          } else if (const auto* rng = std::get_if<Range>(&ax)) {
            const auto* expr = std::get_if<ClassExpression>(&rng->target);
            if (!expr || !expr->is_named()) continue;
            const auto c = class_index(expr->cls());
            if (!c) continue;
            const std::size_t p = prop_index(rng->prop);
            for (int u = 0; u < n; ++u)
              for (int v = 0; v < n; ++v)
                if (holds(p, u, v)) extent[*c] |= 1u << v;
          }
        }
        bool grew = true;
        while (grew) {
          grew = false;
          for (const Axiom& ax : ont.axioms()) {
            const auto* sc = std::get_if<SubClassOf>(&ax);
            if (!sc || !sc->sub.is_named() || !sc->sup.is_named()) continue;
            const auto sub = class_index(sc->sub.cls());
            const auto sup = class_index(sc->sup.cls());
            if (!sub || !sup) continue;  // Thing: subclass edges into it are vacuous
            const std::uint32_t merged = extent[*sup] | extent[*sub];
            if (merged != extent[*sup]) {
              extent[*sup] = merged;
              grew = true;
            }
          }
        }

        // Negative constraints are anti-monotone: the least extents decide.
        for (const Axiom& ax : ont.axioms()) {
          if (const auto* dj = std::get_if<DisjointClasses>(&ax)) {
            const auto a = class_index(dj->first);
            const auto b = class_index(dj->second);
            const std::uint32_t ea = a ? extent[*a] : ~0u >> (32 - n);
            const std::uint32_t eb = b ? extent[*b] : ~0u >> (32 - n);
            ok = (ea & eb) == 0;
          } else if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
            if (!ca->cls.is_complement()) continue;
            const auto c = class_index(ca->cls.cls());
            ok = c ? !member(*c, of(ca->individual)) : false;  // nothing escapes Thing
          } else if (const auto* sc = std::get_if<SubClassOf>(&ax)) {
            if (!sc->sub.is_named() || !sc->sup.is_complement()) continue;
            const auto sub = class_index(sc->sub.cls());
            const auto sup = class_index(sc->sup.cls());
            const std::uint32_t esub = sub ? extent[*sub] : ~0u >> (32 - n);
            const std::uint32_t esup = sup ? extent[*sup] : ~0u >> (32 - n);
            ok = (esub & esup) == 0;
          } else if (const auto* rng = std::get_if<Range>(&ax)) {
            const auto* expr = std::get_if<ClassExpression>(&rng->target);
            if (!expr || !expr->is_complement()) continue;
            const auto c = class_index(expr->cls());
            const std::size_t p = prop_index(rng->prop);
            for (int u = 0; ok && u < n; ++u)
              for (int v = 0; ok && v < n; ++v)
                if (holds(p, u, v)) ok = c ? !member(*c, v) : false;
          }
          if (!ok) break;
        }
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace owlet
