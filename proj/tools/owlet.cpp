// Command-line front end for the owlet ontology engine.
//
// Commands:
//   validate     parse the file, run the profile and consistency checks
//   classify     print the inferred class hierarchy as an indented tree
//   materialize  write the ontology enriched with its inferred assertions
//   export       write a Graphviz DOT rendering of the ontology graph
//   stats        print entity, axiom, and triple counts
//
// Exit codes: 0 = success (and consistent, for validate); 1 = inconsistent
// ontology (validate); 2 = parse or usage error.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "owlet/owlet.hpp"

namespace {

using owlet::Iri;
using owlet::Ontology;

enum class Format { RdfXml, NTriples };

std::optional<Format> parse_format_name(const std::string& name) {
  if (name == "rdfxml") return Format::RdfXml;
  if (name == "ntriples") return Format::NTriples;
  return std::nullopt;
}

std::optional<Format> format_from_extension(const std::string& path) {
  const std::size_t dot = path.rfind('.');
  if (dot == std::string::npos) return std::nullopt;
  const std::string ext = path.substr(dot + 1);
  if (ext == "rdf" || ext == "owl") return Format::RdfXml;
  if (ext == "nt") return Format::NTriples;
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw owlet::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

Ontology load_ontology(const std::string& path, const std::string& format_flag,
                       const std::string& base_flag) {
  Format format;
  if (!format_flag.empty()) {
    const std::optional<Format> named = parse_format_name(format_flag);
    if (!named)
      throw owlet::Error("unknown input format '" + format_flag +
                         "' (expected rdfxml or ntriples)");
    format = *named;
  } else {
    const std::optional<Format> inferred = format_from_extension(path);
    if (!inferred)
      throw owlet::Error("cannot infer the format of '" + path +
                         "' from its extension; pass --input-format rdfxml|ntriples");
    format = *inferred;
  }

  std::optional<Iri> base;
  if (!base_flag.empty()) base = Iri(base_flag);

  const std::string text = read_file(path);
  owlet::ParsedOntology parsed = format == Format::RdfXml
                                     ? owlet::parse_rdfxml(text, base)
                                     : owlet::from_triples(owlet::parse_ntriples(text), base);
  if (!parsed.residue.empty())
    std::cerr << "note: ignored " << parsed.residue.size()
              << " triple(s) outside the supported vocabulary\n";
  return std::move(parsed.ontology);
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty() || out_path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw owlet::Error("cannot open " + out_path + " for writing");
  out << bytes;
  out.flush();
  if (!out) throw owlet::Error("failed while writing " + out_path);
}

bool color_enabled() {
  return isatty(fileno(stdout)) != 0 && std::getenv("OWLET_NO_COLOR") == nullptr;
}

int run_validate(const Ontology& ont, bool as_json) {
  std::vector<owlet::Diagnostic> diagnostics = owlet::check_profile(ont);
  const owlet::ConsistencyReport report = owlet::check_consistency(ont);
  diagnostics.insert(diagnostics.end(), report.diagnostics.begin(), report.diagnostics.end());
  const bool consistent =
      std::none_of(diagnostics.begin(), diagnostics.end(), [](const owlet::Diagnostic& d) {
        return d.severity == owlet::Severity::Error;
      });

  if (as_json) {
    nlohmann::json doc;
    doc["consistent"] = consistent;
    doc["diagnostics"] = nlohmann::json::array();
    for (const owlet::Diagnostic& d : diagnostics) {
      nlohmann::json entry;
      entry["severity"] = std::string(to_string(d.severity));
      entry["kind"] = std::string(to_string(d.kind));
      entry["entities"] = nlohmann::json::array();
      for (const Iri& iri : d.entities) entry["entities"].push_back(iri.str());
      entry["message"] = d.message;
      doc["diagnostics"].push_back(std::move(entry));
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    const bool color = color_enabled();
    const char* red = color ? "\x1b[31m" : "";
    const char* yellow = color ? "\x1b[33m" : "";
    const char* green = color ? "\x1b[32m" : "";
    const char* reset = color ? "\x1b[0m" : "";
    std::cout << (consistent ? green : red) << (consistent ? "consistent" : "inconsistent")
              << reset << "\n";
    for (const owlet::Diagnostic& d : diagnostics) {
      const bool is_error = d.severity == owlet::Severity::Error;
      std::cout << (is_error ? red : yellow) << to_string(d.severity) << reset << " "
                << to_string(d.kind) << ": " << d.message << "\n";
      for (const owlet::Axiom& ax : d.provenance)
        std::cout << "  from: " << to_string(ax) << "\n";
    }
  }
  return consistent ? 0 : 1;
}

int run_classify(const Ontology& ont) {
  const owlet::Taxonomy taxonomy = owlet::classify(ont);
  if (!taxonomy.consistent)
    std::cerr << "warning: the ontology is inconsistent; the hierarchy below may be vacuous\n";

  std::map<Iri, std::vector<Iri>> children;
  for (const owlet::Subsumption& edge : taxonomy.edges) children[edge.sup].push_back(edge.sub);
  for (auto& [parent, kids] : children) {
    (void)parent;
    std::sort(kids.begin(), kids.end());
  }

  std::set<Iri> printed;
  std::set<Iri> path;
  const std::function<void(const Iri&, int)> walk = [&](const Iri& cls, int depth) {
    std::cout << std::string(2 * static_cast<std::size_t>(depth), ' ') << cls.local_name()
              << "\n";
    printed.insert(cls);
    const auto it = children.find(cls);
    if (it == children.end()) return;
    path.insert(cls);
    for (const Iri& child : it->second)
      if (!path.count(child)) walk(child, depth + 1);
    path.erase(cls);
  };

  const Iri thing = owlet::vocab::owl_thing();
  std::cout << "owl:Thing\n";
  printed.insert(thing);
  path.insert(thing);
  if (const auto it = children.find(thing); it != children.end())
    for (const Iri& child : it->second) walk(child, 1);
  // Classes inside subsumption cycles have no path from owl:Thing in the
  // reduced taxonomy; list them at the top level so every class appears.
  for (const Iri& cls : ont.signature().classes)
    if (!printed.count(cls)) walk(cls, 1);
  return 0;
}

Ontology enrich_with_inferences(const Ontology& ont) {
  const owlet::InferredGraph graph = owlet::materialize(ont);
  Ontology out = ont;
  for (const owlet::Membership& m : graph.memberships) {
    if (m.cls == owlet::vocab::owl_thing()) continue;
    out.add(owlet::ClassAssertion{owlet::ClassExpression::named(m.cls), m.individual});
  }
  for (const owlet::Link& l : graph.links)
    out.add(owlet::ObjectAssertion{l.prop, l.subject, l.object});
  return out;
}

int run_materialize(const Ontology& ont, const std::string& out_path,
                    const std::string& format_flag) {
  Format format = Format::RdfXml;
  if (!format_flag.empty()) {
    format = *parse_format_name(format_flag);
  } else if (const std::optional<Format> by_ext = format_from_extension(out_path)) {
    format = *by_ext;
  }
  const Ontology enriched = enrich_with_inferences(ont);
  const std::string bytes = format == Format::RdfXml
                                ? owlet::write_rdfxml(enriched)
                                : owlet::write_ntriples(owlet::to_triples(enriched));
  write_output(out_path, bytes);
  return 0;
}

int run_export(const Ontology& ont, bool dot, bool inferred, const std::string& out_path) {
  if (!dot) throw owlet::Error("export needs --dot; DOT is the only supported rendering");
  write_output(out_path, owlet::export_dot(ont, inferred));
  return 0;
}

int run_stats(const Ontology& ont) {
  const owlet::Signature& sig = ont.signature();
  // The serialization always carries one ontology-header triple; report only
  // the content triples so an empty ontology counts zero.
  const std::size_t content_triples = owlet::to_triples(ont).size() - 1;
  std::cout << "classes: " << sig.classes.size() << "\n"
            << "object properties: " << sig.count_properties(owlet::PropertyKind::Object) << "\n"
            << "datatype properties: " << sig.count_properties(owlet::PropertyKind::Datatype)
            << "\n"
            << "annotation properties: " << sig.count_properties(owlet::PropertyKind::Annotation)
            << "\n"
            << "individuals: " << sig.individuals.size() << "\n"
            << "axioms: " << ont.axioms().size() << "\n"
            << "triples: " << content_triples << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"owlet: a small OWL-DL ontology engine"};
  app.require_subcommand(1);

  std::string path;
  std::string base_flag;
  std::string format_flag;
  std::string out_path;
  std::string out_format;
  bool json_flag = false;
  bool dot_flag = false;
  bool inferred_flag = false;

  const auto add_io_flags = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "Ontology file (.rdf/.owl = RDF/XML, .nt = N-Triples)")
        ->required();
    cmd->add_option("--base", base_flag,
                    "Fallback base IRI for inputs without an ontology header");
    cmd->add_option("--input-format", format_flag,
                    "Input format: rdfxml or ntriples (default: by file extension)");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check profile conformance and consistency");
  add_io_flags(validate);
  validate->add_flag("--json", json_flag, "Emit the report as JSON");

  CLI::App* classify = app.add_subcommand("classify", "Print the inferred class hierarchy");
  add_io_flags(classify);

  CLI::App* materialize =
      app.add_subcommand("materialize", "Write the ontology with inferred assertions added");
  add_io_flags(materialize);
  materialize->add_option("-o,--output", out_path, "Output file (default: stdout)");
  materialize->add_option("--format", out_format, "Output format: rdfxml or ntriples")
      ->check(CLI::IsMember({"rdfxml", "ntriples"}));

  CLI::App* export_cmd = app.add_subcommand("export", "Write a Graphviz DOT rendering");
  add_io_flags(export_cmd);
  export_cmd->add_flag("--dot", dot_flag, "Emit Graphviz DOT");
  export_cmd->add_flag("--inferred", inferred_flag, "Overlay inferred edges, dashed");
  export_cmd->add_option("-o,--output", out_path, "Output file (default: stdout)");

  CLI::App* stats = app.add_subcommand("stats", "Print entity, axiom, and triple counts");
  add_io_flags(stats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Ontology ont = load_ontology(path, format_flag, base_flag);
    if (*validate) return run_validate(ont, json_flag);
    if (*classify) return run_classify(ont);
    if (*materialize) return run_materialize(ont, out_path, out_format);
    if (*export_cmd) return run_export(ont, dot_flag, inferred_flag, out_path);
    if (*stats) return run_stats(ont);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
