#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "owlet/reasoner.hpp"

namespace owlet {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// One fixed palette; properties pick colors by their position in IRI order,
/// wrapping around when there are more properties than colors.
inline const std::array<const char*, 8>& dot_palette() {
  static const std::array<const char*, 8> colors = {
      "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
      "#66a61e", "#e6ab02", "#a6761d", "#666666",
  };
  return colors;
}

}  // namespace detail

/// GraphViz view of the ontology: classes as boxes, individuals as ellipses,
/// solid subclass edges, one color per object property. With `include_inferred`
/// the materialized-but-unasserted edges appear dashed.
inline std::string export_dot(const Ontology& ont, bool include_inferred = false) {
  std::string out = "digraph ontology {\n";
  out += "  rankdir=BT;\n";
  out += "  node [fontname=\"Helvetica\"];\n";

  const auto node_id = [](const Iri& iri) { return "\"" + detail::dot_escape(iri.str()) + "\""; };
  const auto node_label = [](const Iri& iri) {
    return "\"" + detail::dot_escape(std::string(iri.local_name())) + "\"";
  };

  for (const Iri& cls : ont.signature().classes)
    out += "  " + node_id(cls) + " [shape=box, label=" + node_label(cls) + "];\n";
  for (const Iri& ind : ont.signature().individuals)
    out += "  " + node_id(ind) + " [shape=ellipse, label=" + node_label(ind) + "];\n";

  std::map<Iri, std::string> colors;
  std::size_t color_index = 0;
  for (const auto& [prop, kind] : ont.signature().properties) {
    if (kind != PropertyKind::Object) continue;
    colors[prop] = detail::dot_palette()[color_index++ % detail::dot_palette().size()];
  }

  std::set<Subsumption> asserted_subs;
  std::set<Link> asserted_links;
  std::set<Membership> asserted_types;
  for (const Axiom& ax : ont.axioms()) {
    if (const auto* sc = std::get_if<SubClassOf>(&ax)) {
      if (sc->sub.is_named() && sc->sup.is_named())
        asserted_subs.insert({sc->sub.cls(), sc->sup.cls()});
    } else if (const auto* oa = std::get_if<ObjectAssertion>(&ax)) {
      asserted_links.insert({oa->prop, oa->subject, oa->object});
    } else if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
      if (ca->cls.is_named()) asserted_types.insert({ca->individual, ca->cls.cls()});
    }
  }

  for (const Subsumption& s : asserted_subs)
    out += "  " + node_id(s.sub) + " -> " + node_id(s.sup) + " [label=\"subClassOf\"];\n";
  for (const Membership& m : asserted_types)
    out += "  " + node_id(m.individual) + " -> " + node_id(m.cls) +
           " [label=\"type\", color=\"#999999\"];\n";
  for (const Link& l : asserted_links)
    out += "  " + node_id(l.subject) + " -> " + node_id(l.object) + " [label=\"" +
           detail::dot_escape(std::string(l.prop.local_name())) + "\", color=\"" +
           colors.at(l.prop) + "\"];\n";

  if (include_inferred) {
    const InferredGraph graph = materialize(ont);
    for (const Subsumption& s : graph.subsumptions) {
      if (s.sup == vocab::owl_thing() || s.sub == s.sup || asserted_subs.count(s)) continue;
      out += "  " + node_id(s.sub) + " -> " + node_id(s.sup) +
             " [label=\"subClassOf\", style=dashed];\n";
    }
    for (const Membership& m : graph.memberships) {
      if (m.cls == vocab::owl_thing() || asserted_types.count(m)) continue;
      out += "  " + node_id(m.individual) + " -> " + node_id(m.cls) +
             " [label=\"type\", color=\"#999999\", style=dashed];\n";
    }
    for (const Link& l : graph.links) {
      if (asserted_links.count(l)) continue;
      out += "  " + node_id(l.subject) + " -> " + node_id(l.object) + " [label=\"" +
             detail::dot_escape(std::string(l.prop.local_name())) + "\", color=\"" +
             colors.at(l.prop) + "\", style=dashed];\n";
    }
  }

  out += "}\n";
  return out;
}

}  // namespace owlet
