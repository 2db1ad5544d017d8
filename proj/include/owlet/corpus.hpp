#pragma once

#include <string>
#include <vector>

#include "owlet/ontology.hpp"
#include "owlet/reasoner.hpp"

namespace owlet {

/// Base IRI of the bundled poultry-farming ontology.
inline const Iri& poultry_base() {
  static const Iri base("http://ex.org/poultry");
  return base;
}

/// IRI of a named entity inside the poultry ontology.
inline Iri poultry(const std::string& local) { return resolve(poultry_base(), local); }

/// The bundled demonstration ontology: poultry-farming classes, four inverse
/// property pairs with their characteristics, and a bacterial-disease example
/// individual pair wired through Causes.
inline Ontology build_poultry_ontology() {
  Ontology ont(poultry_base());

  const char* classes[] = {
      "Bacterial",
      "Bio_security",
      "Breeder_farm_management",
      "Broiler",
      "Fowl_typhoid",
      "Health_monitoring_and_disease_control",
      "Layer",
      "Poultry",
      "Prevention_of_diseases",
      "Rhode_Island_Red",
      "Vaccination",
      "White_Cornish",
      "White_Leghorn",
  };
  for (const char* name : classes) ont.add(DeclareClass{poultry(name)});

  const char* properties[] = {
      "Causes",         "Prevents",
      "hasPeriod",      "hasPreventivemeasure",
      "isCausedBy",     "isPeriodOf",
      "isPreventedBy",  "isPreventivemeasureOf",
  };
  for (const char* name : properties)
    ont.add(DeclareProperty{poultry(name), PropertyKind::Object});

  ont.add(SubClassOf{ClassExpression::named(poultry("Health_monitoring_and_disease_control")),
                     ClassExpression::named(poultry("Breeder_farm_management"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Bio_security")),
                     ClassExpression::named(poultry("Health_monitoring_and_disease_control"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Vaccination")),
                     ClassExpression::named(poultry("Health_monitoring_and_disease_control"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Prevention_of_diseases")),
                     ClassExpression::named(poultry("Vaccination"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Layer")),
                     ClassExpression::named(poultry("Poultry"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Broiler")),
                     ClassExpression::named(poultry("Poultry"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("White_Leghorn")),
                     ClassExpression::named(poultry("Layer"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("Rhode_Island_Red")),
                     ClassExpression::named(poultry("Layer"))});
  ont.add(SubClassOf{ClassExpression::named(poultry("White_Cornish")),
                     ClassExpression::named(poultry("Broiler"))});

  ont.add(InverseOf{poultry("hasPeriod"), poultry("isPeriodOf")});
  ont.add(InverseOf{poultry("hasPreventivemeasure"), poultry("isPreventivemeasureOf")});
  ont.add(InverseOf{poultry("Prevents"), poultry("isPreventedBy")});
  ont.add(InverseOf{poultry("Causes"), poultry("isCausedBy")});

  for (const char* name : {"Prevents", "isPreventedBy", "Causes", "isCausedBy"}) {
    ont.add(HasCharacteristic{poultry(name), Characteristic::Asymmetric});
    ont.add(HasCharacteristic{poultry(name), Characteristic::Irreflexive});
  }

  ont.add(Domain{poultry("Causes"), poultry("Bacterial")});
  ont.add(Range{poultry("Causes"), ClassExpression::named(poultry("Fowl_typhoid"))});
  ont.add(Domain{poultry("isCausedBy"), poultry("Fowl_typhoid")});
  ont.add(Range{poultry("isCausedBy"), ClassExpression::named(poultry("Bacterial"))});
  ont.add(Domain{poultry("Prevents"), poultry("Vaccination")});
  ont.add(Range{poultry("Prevents"), ClassExpression::named(poultry("Bacterial"))});
  ont.add(Domain{poultry("isPreventedBy"), poultry("Bacterial")});
  ont.add(Range{poultry("isPreventedBy"), ClassExpression::named(poultry("Vaccination"))});

  ont.add(DeclareIndividual{poultry("SalmonellaGallinarum")});
  ont.add(DeclareIndividual{poultry("FowlTyphoidCase1")});
  ont.add(ClassAssertion{ClassExpression::named(poultry("Bacterial")),
                         poultry("SalmonellaGallinarum")});
  ont.add(ObjectAssertion{poultry("Causes"), poultry("SalmonellaGallinarum"),
                          poultry("FowlTyphoidCase1")});

  const std::pair<const char*, const char*> labels[] = {
      {"Bacterial", "Bacterial"},
      {"Bio_security", "Bio security"},
      {"Breeder_farm_management", "Breeder farm management"},
      {"Broiler", "Broiler"},
      {"Fowl_typhoid", "Fowl typhoid"},
      {"Health_monitoring_and_disease_control", "Health monitoring and disease control"},
      {"Layer", "Layer"},
      {"Poultry", "Poultry"},
      {"Prevention_of_diseases", "Prevention of diseases"},
      {"Rhode_Island_Red", "Rhode Island Red"},
      {"Vaccination", "Vaccination"},
      {"White_Cornish", "White Cornish"},
      {"White_Leghorn", "White Leghorn"},
      {"Causes", "Causes"},
      {"Prevents", "Prevents"},
      {"hasPeriod", "hasPeriod"},
      {"hasPreventivemeasure", "hasPreventivemeasure"},
      {"isCausedBy", "isCausedBy"},
      {"isPeriodOf", "IsPeriodOf"},
      {"isPreventedBy", "ispreventedBy"},
      {"isPreventivemeasureOf", "isPreventivemeasureOf"},
      {"SalmonellaGallinarum", "Salmonella Gallinarum"},
      {"FowlTyphoidCase1", "Fowl typhoid case 1"},
  };
  for (const auto& [local, text] : labels)
    ont.annotate(poultry(local), vocab::rdfs_label(), Literal::str(text));

  return ont;
}

/// A named mutation of the bundled ontology together with the verdict and the
/// diagnostic kinds check_consistency must produce for it.
struct CorpusFixture {
  std::string name;
  Ontology ontology;
  bool expected_consistent = true;
  std::vector<DiagnosticKind> expected_diagnostic_kinds;
};

/// Ready-made consistency scenarios: the untouched ontology plus one mutation
/// per clash the reasoner can detect.
inline std::vector<CorpusFixture> fixtures() {
  std::vector<CorpusFixture> out;

  out.push_back({"baseline", build_poultry_ontology(), true, {}});

  {
    Ontology ont = build_poultry_ontology();
    ont.add(HasCharacteristic{poultry("Causes"), Characteristic::Reflexive});
    out.push_back({"reflexive_causes", std::move(ont), false,
                   {DiagnosticKind::CharacteristicConflict, DiagnosticKind::IrreflexiveClash,
                    DiagnosticKind::AsymmetricClash}});
  }

  {
    Ontology ont = build_poultry_ontology();
    ont.add(DisjointClasses(poultry("Bio_security"), poultry("Vaccination")));
    ont.add(DeclareIndividual{poultry("CombinedProgram")});
    ont.add(ClassAssertion{ClassExpression::named(poultry("Bio_security")),
                           poultry("CombinedProgram")});
    ont.add(ClassAssertion{ClassExpression::named(poultry("Vaccination")),
                           poultry("CombinedProgram")});
    out.push_back(
        {"disjoint_violation", std::move(ont), false, {DiagnosticKind::DisjointnessClash}});
  }

  {
    Ontology ont = build_poultry_ontology();
    ont.add(ClassAssertion{ClassExpression::complement_of(poultry("Bacterial")),
                           poultry("SalmonellaGallinarum")});
    out.push_back(
        {"complement_clash", std::move(ont), false, {DiagnosticKind::ComplementClash}});
  }

  {
    Ontology ont = build_poultry_ontology();
    ont.add(DeclareIndividual{poultry("ProgramA")});
    ont.add(DeclareIndividual{poultry("ProgramB")});
    ont.add(ObjectAssertion{poultry("Prevents"), poultry("ProgramA"), poultry("ProgramB")});
    ont.add(ObjectAssertion{poultry("Prevents"), poultry("ProgramB"), poultry("ProgramA")});
    out.push_back(
        {"asymmetric_cycle", std::move(ont), false, {DiagnosticKind::AsymmetricClash}});
  }

  {
    Ontology ont = build_poultry_ontology();
    ont.add(HasCharacteristic{poultry("hasPeriod"), Characteristic::Functional});
    ont.add(DeclareIndividual{poultry("BroilerBatch1")});
    ont.add(DeclareIndividual{poultry("GrowthPeriodA")});
    ont.add(DeclareIndividual{poultry("GrowthPeriodB")});
    ont.add(ObjectAssertion{poultry("hasPeriod"), poultry("BroilerBatch1"),
                            poultry("GrowthPeriodA")});
    ont.add(ObjectAssertion{poultry("hasPeriod"), poultry("BroilerBatch1"),
                            poultry("GrowthPeriodB")});
    Ontology distinct = ont;
    out.push_back(
        {"functional_warning", std::move(ont), true, {DiagnosticKind::FunctionalClash}});

    distinct.add(DifferentIndividuals(poultry("GrowthPeriodA"), poultry("GrowthPeriodB")));
    out.push_back(
        {"functional_distinct", std::move(distinct), false, {DiagnosticKind::FunctionalClash}});
  }

  {
    Ontology ont = build_poultry_ontology();
    ont.add(HasCharacteristic{poultry("hasPeriod"), Characteristic::InverseFunctional});
    ont.add(DeclareIndividual{poultry("LayerFlockA")});
    ont.add(DeclareIndividual{poultry("LayerFlockB")});
    ont.add(DeclareIndividual{poultry("LayingPeriod")});
    ont.add(ObjectAssertion{poultry("hasPeriod"), poultry("LayerFlockA"),
                            poultry("LayingPeriod")});
    ont.add(ObjectAssertion{poultry("hasPeriod"), poultry("LayerFlockB"),
                            poultry("LayingPeriod")});
    ont.add(DifferentIndividuals(poultry("LayerFlockA"), poultry("LayerFlockB")));
    out.push_back({"inverse_functional_distinct", std::move(ont), false,
                   {DiagnosticKind::InverseFunctionalClash}});
  }

  return out;
}

/// Look up one fixture by name; throws if no fixture carries it.
inline CorpusFixture fixture(const std::string& name) {
  for (CorpusFixture& f : fixtures()) {
    if (f.name == name) return std::move(f);
  }
  throw ModelError("unknown corpus fixture: " + name);
}

}  // namespace owlet
