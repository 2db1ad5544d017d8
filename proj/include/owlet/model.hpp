#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "owlet/errors.hpp"
#include "owlet/iri.hpp"

namespace owlet {

enum class PropertyKind { Object, Datatype, Annotation };

inline std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Object: return "object";
    case PropertyKind::Datatype: return "datatype";
    case PropertyKind::Annotation: return "annotation";
  }
  return "?";
}

enum class Characteristic {
  Functional,
  InverseFunctional,
  Transitive,
  Symmetric,
  Asymmetric,
  Reflexive,
  Irreflexive,
};

inline constexpr Characteristic kAllCharacteristics[] = {
    Characteristic::Functional,  Characteristic::InverseFunctional,
    Characteristic::Transitive,  Characteristic::Symmetric,
    Characteristic::Asymmetric,  Characteristic::Reflexive,
    Characteristic::Irreflexive,
};

inline std::string_view to_string(Characteristic ch) {
  switch (ch) {
    case Characteristic::Functional: return "Functional";
    case Characteristic::InverseFunctional: return "InverseFunctional";
    case Characteristic::Transitive: return "Transitive";
    case Characteristic::Symmetric: return "Symmetric";
    case Characteristic::Asymmetric: return "Asymmetric";
    case Characteristic::Reflexive: return "Reflexive";
    case Characteristic::Irreflexive: return "Irreflexive";
  }
  return "?";
}

/// Functional is the only characteristic meaningful on datatype properties;
/// every other one constrains pairs of individuals.
inline bool requires_object_property(Characteristic ch) {
  return ch != Characteristic::Functional;
}

/// A named class or the complement of a named class. Complements never nest.
class ClassExpression {
public:
  enum class Kind { Named, ComplementOf };

  static ClassExpression named(Iri cls) { return ClassExpression(Kind::Named, std::move(cls)); }
  static ClassExpression complement_of(Iri cls) {
    return ClassExpression(Kind::ComplementOf, std::move(cls));
  }

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::Named; }
  bool is_complement() const { return kind_ == Kind::ComplementOf; }

  /// The named class, or the class under the complement.
  const Iri& cls() const { return cls_; }

  auto operator<=>(const ClassExpression&) const = default;

private:
  ClassExpression(Kind kind, Iri cls) : kind_(kind), cls_(std::move(cls)) {}

  Kind kind_;
  Iri cls_;
};

/// A literal value: lexical form, datatype, optional language tag.
/// A language tag is only legal together with xsd:string.
class Literal {
public:
  static Literal str(std::string lexical) {
    return Literal(std::move(lexical), vocab::xsd_string(), std::nullopt);
  }
  static Literal lang_tagged(std::string lexical, std::string lang) {
    if (lang.empty()) throw ModelError("empty language tag");
    return Literal(std::move(lexical), vocab::xsd_string(), std::move(lang));
  }
  static Literal typed(std::string lexical, Iri datatype) {
    return Literal(std::move(lexical), std::move(datatype), std::nullopt);
  }

  const std::string& lexical() const { return lexical_; }
  const Iri& datatype() const { return datatype_; }
  const std::optional<std::string>& lang() const { return lang_; }
  bool is_plain_string() const { return datatype_ == vocab::xsd_string() && !lang_; }

  auto operator<=>(const Literal&) const = default;

private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> lang)
      : lexical_(std::move(lexical)), datatype_(std::move(datatype)), lang_(std::move(lang)) {
    if (lang_ && datatype_ != vocab::xsd_string())
      throw ModelError("language tag requires the xsd:string datatype");
  }

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> lang_;
};

// --- Axiom variants ---------------------------------------------------------

struct DeclareClass {
  Iri cls;
  auto operator<=>(const DeclareClass&) const = default;
};

struct DeclareProperty {
  Iri prop;
  PropertyKind kind;
  auto operator<=>(const DeclareProperty&) const = default;
};

struct DeclareIndividual {
  Iri individual;
  auto operator<=>(const DeclareIndividual&) const = default;
};

struct SubClassOf {
  ClassExpression sub;
  ClassExpression sup;
  auto operator<=>(const SubClassOf&) const = default;
};

/// Stored with the lexicographically smaller class first, so the symmetric
/// statement has a single representation.
struct DisjointClasses {
  DisjointClasses(Iri a, Iri b) : DisjointClasses(normalized(std::move(a), std::move(b))) {}
  Iri first;
  Iri second;
  auto operator<=>(const DisjointClasses&) const = default;

private:
  explicit DisjointClasses(std::pair<Iri, Iri> p)
      : first(std::move(p.first)), second(std::move(p.second)) {}
  static std::pair<Iri, Iri> normalized(Iri a, Iri b) {
    if (a == b) throw ModelError("disjointness between a class and itself: " + a.str());
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }
};

struct HasCharacteristic {
  Iri prop;
  Characteristic characteristic;
  auto operator<=>(const HasCharacteristic&) const = default;
};

struct InverseOf {
  Iri prop;
  Iri inverse;
  auto operator<=>(const InverseOf&) const = default;
};

struct Domain {
  Iri prop;
  Iri cls;
  auto operator<=>(const Domain&) const = default;
};

/// Range of an object property is a class expression; range of a datatype
/// property is a datatype IRI.
using RangeTarget = std::variant<ClassExpression, Iri>;

struct Range {
  Iri prop;
  RangeTarget target;
  auto operator<=>(const Range&) const = default;
};

struct ClassAssertion {
  ClassExpression cls;
  Iri individual;
  auto operator<=>(const ClassAssertion&) const = default;
};

struct ObjectAssertion {
  Iri prop;
  Iri subject;
  Iri object;
  auto operator<=>(const ObjectAssertion&) const = default;
};

struct DataAssertion {
  Iri prop;
  Iri subject;
  Literal value;
  auto operator<=>(const DataAssertion&) const = default;
};

/// Canonically ordered, like DisjointClasses.
struct DifferentIndividuals {
  DifferentIndividuals(Iri a, Iri b) : DifferentIndividuals(normalized(std::move(a), std::move(b))) {}
  Iri first;
  Iri second;
  auto operator<=>(const DifferentIndividuals&) const = default;

private:
  explicit DifferentIndividuals(std::pair<Iri, Iri> p)
      : first(std::move(p.first)), second(std::move(p.second)) {}
  static std::pair<Iri, Iri> normalized(Iri a, Iri b) {
    if (a == b) throw ModelError("individual declared different from itself: " + a.str());
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
  }
};

struct Annotation {
  Iri target;
  Iri prop;
  Literal value;
  auto operator<=>(const Annotation&) const = default;
};

/// Every statement kind the engine understands. The variant order defines the
/// canonical axiom ordering: declarations, class structure, property
/// structure, assertions, then annotations.
using Axiom = std::variant<DeclareClass, DeclareProperty, DeclareIndividual, SubClassOf,
                           DisjointClasses, HasCharacteristic, InverseOf, Domain, Range,
                           ClassAssertion, ObjectAssertion, DataAssertion, DifferentIndividuals,
                           Annotation>;

// --- Rendering, for diagnostics and reports ---------------------------------

inline std::string to_string(const ClassExpression& expr) {
  if (expr.is_named()) return std::string(expr.cls().local_name());
  return "not(" + std::string(expr.cls().local_name()) + ")";
}

inline std::string to_string(const Literal& lit) {
  std::string out = "\"" + lit.lexical() + "\"";
  if (lit.lang()) return out + "@" + *lit.lang();
  if (lit.datatype() != vocab::xsd_string()) out += "^^" + std::string(lit.datatype().local_name());
  return out;
}

inline std::string to_string(const Axiom& axiom) {
  const auto name = [](const Iri& iri) { return std::string(iri.local_name()); };
  return std::visit(
      [&](const auto& ax) -> std::string {
        using T = std::decay_t<decltype(ax)>;
        if constexpr (std::is_same_v<T, DeclareClass>) {
          return "Class(" + name(ax.cls) + ")";
        } else if constexpr (std::is_same_v<T, DeclareProperty>) {
          return std::string(to_string(ax.kind)) + "Property(" + name(ax.prop) + ")";
        } else if constexpr (std::is_same_v<T, DeclareIndividual>) {
          return "Individual(" + name(ax.individual) + ")";
        } else if constexpr (std::is_same_v<T, SubClassOf>) {
          return "SubClassOf(" + to_string(ax.sub) + ", " + to_string(ax.sup) + ")";
        } else if constexpr (std::is_same_v<T, DisjointClasses>) {
          return "DisjointClasses(" + name(ax.first) + ", " + name(ax.second) + ")";
        } else if constexpr (std::is_same_v<T, HasCharacteristic>) {
          return std::string(to_string(ax.characteristic)) + "(" + name(ax.prop) + ")";
        } else if constexpr (std::is_same_v<T, InverseOf>) {
          return "InverseOf(" + name(ax.prop) + ", " + name(ax.inverse) + ")";
        } else if constexpr (std::is_same_v<T, Domain>) {
          return "Domain(" + name(ax.prop) + ", " + name(ax.cls) + ")";
        } else if constexpr (std::is_same_v<T, Range>) {
          const std::string target = std::holds_alternative<Iri>(ax.target)
                                         ? name(std::get<Iri>(ax.target))
                                         : to_string(std::get<ClassExpression>(ax.target));
          return "Range(" + name(ax.prop) + ", " + target + ")";
        } else if constexpr (std::is_same_v<T, ClassAssertion>) {
          return to_string(ax.cls) + "(" + name(ax.individual) + ")";
        } else if constexpr (std::is_same_v<T, ObjectAssertion>) {
          return name(ax.prop) + "(" + name(ax.subject) + ", " + name(ax.object) + ")";
        } else if constexpr (std::is_same_v<T, DataAssertion>) {
          return name(ax.prop) + "(" + name(ax.subject) + ", " + to_string(ax.value) + ")";
        } else if constexpr (std::is_same_v<T, DifferentIndividuals>) {
          return "DifferentIndividuals(" + name(ax.first) + ", " + name(ax.second) + ")";
        } else {
          static_assert(std::is_same_v<T, Annotation>);
          return "Annotation(" + name(ax.target) + ", " + name(ax.prop) + ", " +
                 to_string(ax.value) + ")";
        }
      },
      axiom);
}

}  // namespace owlet
