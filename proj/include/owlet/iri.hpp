#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "owlet/errors.hpp"

namespace owlet {

/// An absolute IRI. The identity of every class, property and individual.
///
/// Validation is syntactic: a scheme, no whitespace or control characters,
/// and none of the ASCII characters RFC 3987 excludes from IRIs. Equality
/// and ordering are byte-wise on the full string.
class Iri {
public:
  explicit Iri(std::string value) : value_(std::move(value)) { validate(value_); }

  const std::string& str() const { return value_; }

  /// Fragment after the last '#' or '/', or the whole IRI when neither occurs.
  std::string_view local_name() const {
    const auto pos = value_.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 == value_.size()) return value_;
    return std::string_view(value_).substr(pos + 1);
  }

  /// Leading part up to and including the last '#' or '/'.
  std::string_view namespace_part() const {
    const auto pos = value_.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 == value_.size()) return {};
    return std::string_view(value_).substr(0, pos + 1);
  }

  bool starts_with(std::string_view prefix) const {
    return std::string_view(value_).substr(0, prefix.size()) == prefix;
  }

  auto operator<=>(const Iri&) const = default;

  static bool is_valid(std::string_view value) {
    if (value.empty()) return false;
    // scheme ":" per RFC 3986: ALPHA *( ALPHA / DIGIT / "+" / "-" / "." )
    std::size_t colon = value.find(':');
    if (colon == 0 || colon == std::string_view::npos) return false;
    if (!is_alpha(value[0])) return false;
    for (std::size_t i = 1; i < colon; ++i) {
      const char c = value[i];
      if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
    }
    for (const char c : value) {
      const auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || u == 0x7f) return false;  // space, control
      switch (c) {
        case '<': case '>': case '"': case '{': case '}':
        case '|': case '^': case '`': case '\\':
          return false;
        default:
          break;
      }
    }
    return true;
  }

private:
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  static void validate(const std::string& value) {
    if (!is_valid(value)) throw ModelError("malformed IRI: \"" + value + "\"");
  }

  std::string value_;
};

inline std::ostream& operator<<(std::ostream& os, const Iri& iri) { return os << iri.str(); }

/// Mints an entity IRI under a base namespace. A base ending in '#' or '/'
/// is concatenated directly, otherwise '#' is inserted.
inline Iri resolve(const Iri& base, std::string_view name) {
  const std::string& b = base.str();
  if (!b.empty() && (b.back() == '#' || b.back() == '/')) return Iri(b + std::string(name));
  return Iri(b + "#" + std::string(name));
}

/// Well-known RDF/RDFS/OWL/XSD vocabulary.
namespace vocab {

inline const std::string kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kOwlNs = "http://www.w3.org/2002/07/owl#";
inline const std::string kXsdNs = "http://www.w3.org/2001/XMLSchema#";

inline const Iri& rdf_type() { static const Iri iri(kRdfNs + "type"); return iri; }

inline const Iri& rdfs_sub_class_of() { static const Iri iri(kRdfsNs + "subClassOf"); return iri; }
inline const Iri& rdfs_domain() { static const Iri iri(kRdfsNs + "domain"); return iri; }
inline const Iri& rdfs_range() { static const Iri iri(kRdfsNs + "range"); return iri; }
inline const Iri& rdfs_label() { static const Iri iri(kRdfsNs + "label"); return iri; }
inline const Iri& rdfs_comment() { static const Iri iri(kRdfsNs + "comment"); return iri; }

inline const Iri& owl_thing() { static const Iri iri(kOwlNs + "Thing"); return iri; }
inline const Iri& owl_class() { static const Iri iri(kOwlNs + "Class"); return iri; }
inline const Iri& owl_ontology() { static const Iri iri(kOwlNs + "Ontology"); return iri; }
inline const Iri& owl_object_property() { static const Iri iri(kOwlNs + "ObjectProperty"); return iri; }
inline const Iri& owl_datatype_property() { static const Iri iri(kOwlNs + "DatatypeProperty"); return iri; }
inline const Iri& owl_annotation_property() { static const Iri iri(kOwlNs + "AnnotationProperty"); return iri; }
inline const Iri& owl_named_individual() { static const Iri iri(kOwlNs + "NamedIndividual"); return iri; }
inline const Iri& owl_functional_property() { static const Iri iri(kOwlNs + "FunctionalProperty"); return iri; }
inline const Iri& owl_inverse_functional_property() { static const Iri iri(kOwlNs + "InverseFunctionalProperty"); return iri; }
inline const Iri& owl_transitive_property() { static const Iri iri(kOwlNs + "TransitiveProperty"); return iri; }
inline const Iri& owl_symmetric_property() { static const Iri iri(kOwlNs + "SymmetricProperty"); return iri; }
inline const Iri& owl_asymmetric_property() { static const Iri iri(kOwlNs + "AsymmetricProperty"); return iri; }
inline const Iri& owl_reflexive_property() { static const Iri iri(kOwlNs + "ReflexiveProperty"); return iri; }
inline const Iri& owl_irreflexive_property() { static const Iri iri(kOwlNs + "IrreflexiveProperty"); return iri; }
inline const Iri& owl_inverse_of() { static const Iri iri(kOwlNs + "inverseOf"); return iri; }
inline const Iri& owl_disjoint_with() { static const Iri iri(kOwlNs + "disjointWith"); return iri; }
inline const Iri& owl_complement_of() { static const Iri iri(kOwlNs + "complementOf"); return iri; }
inline const Iri& owl_different_from() { static const Iri iri(kOwlNs + "differentFrom"); return iri; }

inline const Iri& xsd_string() { static const Iri iri(kXsdNs + "string"); return iri; }

/// Reserved namespaces: entities under these may only be declared as
/// annotation properties (rdfs:label and friends), never as classes,
/// individuals or logical properties.
inline bool is_reserved(const Iri& iri) {
  return iri.starts_with(kRdfNs) || iri.starts_with(kRdfsNs) || iri.starts_with(kOwlNs) ||
         iri.starts_with(kXsdNs);
}

}  // namespace vocab
}  // namespace owlet
