#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "owlet/model.hpp"

namespace owlet {

enum class Severity { Warning, Error };

inline std::string_view to_string(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

/// Identifies what a diagnostic is about. The clash kinds correspond to the
/// patterns the consistency checker scans for in the materialized graph;
/// the profile kinds to constructs outside the supported DL subset.
enum class DiagnosticKind {
  CharacteristicConflict,   // contradictory characteristic pair on one property
  IrreflexiveClash,         // K1
  AsymmetricClash,          // K2
  DisjointnessClash,        // K3
  ComplementClash,          // K4
  FunctionalClash,          // K5
  InverseFunctionalClash,   // K6
  RoleConflict,             // one IRI used as two kinds of entity
  AnnotationInLogicalAxiom, // annotation property inside a logical statement
};

inline std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::CharacteristicConflict: return "characteristic-conflict";
    case DiagnosticKind::IrreflexiveClash: return "irreflexive-clash";
    case DiagnosticKind::AsymmetricClash: return "asymmetric-clash";
    case DiagnosticKind::DisjointnessClash: return "disjointness-clash";
    case DiagnosticKind::ComplementClash: return "complement-clash";
    case DiagnosticKind::FunctionalClash: return "functional-clash";
    case DiagnosticKind::InverseFunctionalClash: return "inverse-functional-clash";
    case DiagnosticKind::RoleConflict: return "role-conflict";
    case DiagnosticKind::AnnotationInLogicalAxiom: return "annotation-in-logical-axiom";
  }
  return "?";
}

/// One reasoner finding. `entities` names the involved IRIs (never empty),
/// `provenance` the asserted axioms the finding follows from.
struct Diagnostic {
  Severity severity;
  DiagnosticKind kind;
  std::vector<Iri> entities;
  std::string message;
  std::vector<Axiom> provenance;
};

}  // namespace owlet
