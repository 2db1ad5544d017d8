#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "owlet/errors.hpp"
#include "owlet/model.hpp"

namespace owlet {

/// The named entities an ontology declares, split by role. owl:Thing is a
/// member of `classes` in every ontology and carries no declaration axiom.
struct Signature {
  std::set<Iri> classes;
  std::map<Iri, PropertyKind> properties;
  std::set<Iri> individuals;

  bool knows(const Iri& iri) const {
    return classes.count(iri) || properties.count(iri) || individuals.count(iri);
  }

  std::size_t count_properties(PropertyKind kind) const {
    std::size_t n = 0;
    for (const auto& [iri, k] : properties) {
      (void)iri;
      if (k == kind) ++n;
    }
    return n;
  }
};

/// A validated, deduplicated axiom set plus its derived signature.
///
/// Mutating operations validate structural invariants up front and leave the
/// ontology untouched on failure. Referencing an undeclared name inside an
/// axiom declares it in the role the position demands. Values are plain data:
/// copy freely, share read-only across threads.
class Ontology {
public:
  explicit Ontology(Iri base_iri) : base_(std::move(base_iri)) {
    signature_.classes.insert(vocab::owl_thing());
  }

  /// Builds an ontology without any validation. Intended for diagnostics
  /// tooling that wants to inspect ill-formed axiom sets via check_profile;
  /// everything else should go through add().
  static Ontology unchecked(Iri base_iri, const std::vector<Axiom>& axioms) {
    Ontology ont(std::move(base_iri));
    for (const Axiom& ax : axioms) {
      ont.axioms_.insert(ax);
      ont.record_declaration(ax);
    }
    return ont;
  }

  const Iri& base() const { return base_; }
  const std::set<Axiom>& axioms() const { return axioms_; }
  const Signature& signature() const { return signature_; }

  bool contains(const Axiom& ax) const { return axioms_.count(ax) > 0; }

  /// Adds an axiom plus any implied declarations. Re-adding is a no-op.
  /// Throws ModelError on role conflicts, characteristic/kind mismatches,
  /// or reserved-vocabulary misuse.
  void add(const Axiom& axiom) {
    std::vector<Requirement> reqs = requirements(axiom);
    // Validate everything before mutating anything.
    std::vector<Axiom> implied;
    for (const Requirement& req : reqs) {
      if (auto decl = check_requirement(req)) implied.push_back(*decl);
    }
    for (Axiom& decl : implied) {
      axioms_.insert(decl);
      record_declaration(decl);
    }
    if (!is_noop(axiom)) axioms_.insert(axiom);
  }

  /// Axiom-set union; this ontology's base wins. Throws on role conflicts
  /// between the two signatures.
  void merge(const Ontology& other) {
    for (const Axiom& ax : other.axioms_) add(ax);
  }

  /// Attaches metadata to a known entity. The annotation property is declared
  /// on first use; the target must already exist.
  void annotate(const Iri& target, const Iri& prop, Literal value) {
    if (!signature_.knows(target))
      throw ModelError("annotation target not in signature: " + target.str());
    add(Annotation{target, prop, std::move(value)});
  }

  /// Asserted children of a class. With direct=false, the closure of the
  /// asserted child relation. Classes without any asserted named parent count
  /// as direct children of owl:Thing; owl:Thing itself is never a result.
  std::set<Iri> declared_subclasses(const Iri& cls, bool direct) const {
    if (!signature_.classes.count(cls)) throw ModelError("unknown class: " + cls.str());
    if (direct) return direct_children(cls);
    std::set<Iri> out;
    std::vector<Iri> frontier{cls};
    while (!frontier.empty()) {
      const Iri current = frontier.back();
      frontier.pop_back();
      for (const Iri& child : direct_children(current)) {
        if (out.insert(child).second) frontier.push_back(child);
      }
    }
    return out;
  }

  std::optional<PropertyKind> property_kind(const Iri& prop) const {
    const auto it = signature_.properties.find(prop);
    if (it == signature_.properties.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const Ontology& other) const {
    return base_ == other.base_ && axioms_ == other.axioms_;
  }

private:
  enum class Role { Class, Property, Individual };

  struct Requirement {
    Iri iri;
    Role role;
    // Property requirements only:
    PropertyKind fresh_kind = PropertyKind::Object;  // kind assigned when undeclared
    bool datatype_ok = false;                        // Functional is legal on data properties
    bool annotation_ok = false;
    bool object_ok = true;
    std::string context;  // for error messages
  };

  static Requirement need_class(const Iri& iri) { return {iri, Role::Class, PropertyKind::Object, false, false, true, {}}; }
  static Requirement need_individual(const Iri& iri) { return {iri, Role::Individual, PropertyKind::Object, false, false, true, {}}; }
  static Requirement need_property(const Iri& iri, PropertyKind fresh, bool object_ok,
                                   bool datatype_ok, bool annotation_ok, std::string context) {
    Requirement r{iri, Role::Property, PropertyKind::Object, false, false, true, {}};
    r.fresh_kind = fresh;
    r.object_ok = object_ok;
    r.datatype_ok = datatype_ok;
    r.annotation_ok = annotation_ok;
    r.context = std::move(context);
    return r;
  }

  std::vector<Requirement> requirements(const Axiom& axiom) const {
    std::vector<Requirement> reqs;
    std::visit(
        [&](const auto& ax) {
          using T = std::decay_t<decltype(ax)>;
          if constexpr (std::is_same_v<T, DeclareClass>) {
            reqs.push_back(need_class(ax.cls));
          } else if constexpr (std::is_same_v<T, DeclareProperty>) {
            reqs.push_back(need_property(ax.prop, ax.kind, ax.kind == PropertyKind::Object,
                                         ax.kind == PropertyKind::Datatype,
                                         ax.kind == PropertyKind::Annotation,
                                         "declaration"));
          } else if constexpr (std::is_same_v<T, DeclareIndividual>) {
            reqs.push_back(need_individual(ax.individual));
          } else if constexpr (std::is_same_v<T, SubClassOf>) {
            reqs.push_back(need_class(ax.sub.cls()));
            reqs.push_back(need_class(ax.sup.cls()));
          } else if constexpr (std::is_same_v<T, DisjointClasses>) {
            reqs.push_back(need_class(ax.first));
            reqs.push_back(need_class(ax.second));
          } else if constexpr (std::is_same_v<T, HasCharacteristic>) {
            const bool object_only = requires_object_property(ax.characteristic);
            reqs.push_back(need_property(
                ax.prop, PropertyKind::Object, true, !object_only, false,
                "characteristic requires object property (" +
                    std::string(to_string(ax.characteristic)) + ")"));
          } else if constexpr (std::is_same_v<T, InverseOf>) {
            reqs.push_back(need_property(ax.prop, PropertyKind::Object, true, false, false,
                                         "inverse declaration"));
            reqs.push_back(need_property(ax.inverse, PropertyKind::Object, true, false, false,
                                         "inverse declaration"));
          } else if constexpr (std::is_same_v<T, Domain>) {
            reqs.push_back(
                need_property(ax.prop, PropertyKind::Object, true, true, false, "domain"));
            reqs.push_back(need_class(ax.cls));
          } else if constexpr (std::is_same_v<T, Range>) {
            if (std::holds_alternative<ClassExpression>(ax.target)) {
              reqs.push_back(need_property(ax.prop, PropertyKind::Object, true, false, false,
                                           "class range requires object property"));
              reqs.push_back(need_class(std::get<ClassExpression>(ax.target).cls()));
            } else {
              reqs.push_back(need_property(ax.prop, PropertyKind::Datatype, false, true, false,
                                           "datatype range requires datatype property"));
            }
          } else if constexpr (std::is_same_v<T, ClassAssertion>) {
            reqs.push_back(need_class(ax.cls.cls()));
            reqs.push_back(need_individual(ax.individual));
          } else if constexpr (std::is_same_v<T, ObjectAssertion>) {
            reqs.push_back(need_property(ax.prop, PropertyKind::Object, true, false, false,
                                         "object assertion"));
            reqs.push_back(need_individual(ax.subject));
            reqs.push_back(need_individual(ax.object));
          } else if constexpr (std::is_same_v<T, DataAssertion>) {
            reqs.push_back(need_property(ax.prop, PropertyKind::Datatype, false, true, false,
                                         "data assertion"));
            reqs.push_back(need_individual(ax.subject));
          } else if constexpr (std::is_same_v<T, DifferentIndividuals>) {
            reqs.push_back(need_individual(ax.first));
            reqs.push_back(need_individual(ax.second));
          } else {
            static_assert(std::is_same_v<T, Annotation>);
            // The target is metadata, not a role-bearing position; annotate()
            // additionally insists it is already known.
            reqs.push_back(need_property(ax.prop, PropertyKind::Annotation, false, false, true,
                                         "annotation"));
          }
        },
        axiom);
    merge_duplicate_requirements(reqs);
    return reqs;
  }

  static void merge_duplicate_requirements(std::vector<Requirement>& reqs) {
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      for (std::size_t j = i + 1; j < reqs.size();) {
        if (reqs[j].iri == reqs[i].iri) {
          if (reqs[j].role != reqs[i].role)
            throw ModelError("conflicting roles for " + reqs[i].iri.str() +
                             " within one axiom");
          reqs[i].object_ok = reqs[i].object_ok && reqs[j].object_ok;
          reqs[i].datatype_ok = reqs[i].datatype_ok && reqs[j].datatype_ok;
          reqs[i].annotation_ok = reqs[i].annotation_ok && reqs[j].annotation_ok;
          reqs.erase(reqs.begin() + j);
        } else {
          ++j;
        }
      }
    }
  }

  static bool kind_allowed(const Requirement& req, PropertyKind kind) {
    switch (kind) {
      case PropertyKind::Object: return req.object_ok;
      case PropertyKind::Datatype: return req.datatype_ok;
      case PropertyKind::Annotation: return req.annotation_ok;
    }
    return false;
  }

  /// Predicates with built-in structural meaning can never be declared as
  /// user properties; their triples would be indistinguishable from axioms.
  static bool is_structural_predicate(const Iri& iri) {
    return iri == vocab::rdf_type() || iri == vocab::rdfs_sub_class_of() ||
           iri == vocab::rdfs_domain() || iri == vocab::rdfs_range() ||
           iri == vocab::owl_inverse_of() || iri == vocab::owl_disjoint_with() ||
           iri == vocab::owl_complement_of() || iri == vocab::owl_different_from();
  }

  /// Validates one requirement against the signature. Returns the implied
  /// declaration when the name is fresh.
  std::optional<Axiom> check_requirement(const Requirement& req) const {
    switch (req.role) {
      case Role::Class: {
        if (req.iri == vocab::owl_thing()) return std::nullopt;  // implicit, never declared
        if (vocab::is_reserved(req.iri))
          throw ModelError("reserved vocabulary cannot be a class: " + req.iri.str());
        if (signature_.properties.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is a property and cannot be a class");
        if (signature_.individuals.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is an individual and cannot be a class");
        if (signature_.classes.count(req.iri)) return std::nullopt;
        return Axiom(DeclareClass{req.iri});
      }
      case Role::Individual: {
        if (vocab::is_reserved(req.iri))
          throw ModelError("reserved vocabulary cannot be an individual: " + req.iri.str());
        if (signature_.classes.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is a class and cannot be an individual");
        if (signature_.properties.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is a property and cannot be an individual");
        if (signature_.individuals.count(req.iri)) return std::nullopt;
        return Axiom(DeclareIndividual{req.iri});
      }
      case Role::Property: {
        if (signature_.classes.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is a class and cannot be a property");
        if (signature_.individuals.count(req.iri))
          throw ModelError("role conflict: " + req.iri.str() +
                           " is an individual and cannot be a property");
        const auto it = signature_.properties.find(req.iri);
        const PropertyKind kind = it != signature_.properties.end() ? it->second : req.fresh_kind;
        if (!kind_allowed(req, kind)) {
          if (it != signature_.properties.end() && !req.context.empty() &&
              req.context == "declaration")
            throw ModelError("property redeclared with a different kind: " + req.iri.str());
          throw ModelError(req.context + ": " + req.iri.str() + " is declared as " +
                           std::string(to_string(kind)) + " property");
        }
        if (is_structural_predicate(req.iri))
          throw ModelError("built-in predicate cannot be declared as a property: " +
                           req.iri.str());
        if (vocab::is_reserved(req.iri) && kind != PropertyKind::Annotation)
          throw ModelError("reserved vocabulary can only be an annotation property: " +
                           req.iri.str());
        if (it != signature_.properties.end()) return std::nullopt;
        return Axiom(DeclareProperty{req.iri, kind});
      }
    }
    return std::nullopt;
  }

  /// owl:Thing is implicit; its declaration is accepted but not stored.
  static bool is_noop(const Axiom& axiom) {
    const auto* decl = std::get_if<DeclareClass>(&axiom);
    return decl != nullptr && decl->cls == vocab::owl_thing();
  }

  void record_declaration(const Axiom& axiom) {
    if (const auto* c = std::get_if<DeclareClass>(&axiom)) {
      if (c->cls != vocab::owl_thing()) signature_.classes.insert(c->cls);
    } else if (const auto* p = std::get_if<DeclareProperty>(&axiom)) {
      signature_.properties.emplace(p->prop, p->kind);
    } else if (const auto* i = std::get_if<DeclareIndividual>(&axiom)) {
      signature_.individuals.insert(i->individual);
    }
  }

  std::set<Iri> direct_children(const Iri& cls) const {
    std::set<Iri> out;
    const bool thing = cls == vocab::owl_thing();
    for (const Axiom& ax : axioms_) {
      const auto* sc = std::get_if<SubClassOf>(&ax);
      if (!sc || !sc->sub.is_named() || !sc->sup.is_named()) continue;
      if (sc->sup.cls() == cls && sc->sub.cls() != vocab::owl_thing() && sc->sub.cls() != cls)
        out.insert(sc->sub.cls());
    }
    if (thing) {
      for (const Iri& c : signature_.classes) {
        if (c == vocab::owl_thing()) continue;
        if (!has_named_parent(c)) out.insert(c);
      }
    }
    return out;
  }

  bool has_named_parent(const Iri& cls) const {
    for (const Axiom& ax : axioms_) {
      const auto* sc = std::get_if<SubClassOf>(&ax);
      if (sc && sc->sub.is_named() && sc->sup.is_named() && sc->sub.cls() == cls &&
          sc->sup.cls() != cls)
        return true;
    }
    return false;
  }

  Iri base_;
  std::set<Axiom> axioms_;
  Signature signature_;
};

}  // namespace owlet
