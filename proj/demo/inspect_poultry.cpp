// Walks the bundled poultry ontology end to end: signature counts, the
// inferred class tree, consistency, and a sample of materialized facts.
// Build and run:  ./inspect_poultry
#include <functional>
#include <iostream>
#include <map>
#include <vector>

#include "owlet/owlet.hpp"

using namespace owlet;

namespace {

void print_tree(const Taxonomy& taxonomy) {
  std::map<Iri, std::vector<Iri>> children;
  for (const Subsumption& edge : taxonomy.edges) children[edge.sup].push_back(edge.sub);

  const std::function<void(const Iri&, int)> walk = [&](const Iri& cls, int depth) {
    std::cout << std::string(2 * static_cast<std::size_t>(depth), ' ') << cls.local_name()
              << "\n";
    for (const Iri& child : children[cls]) walk(child, depth + 1);
  };
  std::cout << "owl:Thing\n";
  for (const Iri& child : children[vocab::owl_thing()]) walk(child, 1);
}

}  // namespace

int main() {
  const Ontology ont = build_poultry_ontology();

  std::cout << "== signature ==\n";
  const Signature& sig = ont.signature();
  std::cout << "classes: " << sig.classes.size() << "  object properties: "
            << sig.count_properties(PropertyKind::Object)
            << "  individuals: " << sig.individuals.size() << "  axioms: " << ont.axioms().size()
            << "\n\n";

  std::cout << "== inferred class hierarchy ==\n";
  print_tree(classify(ont));
  std::cout << "\n";

  std::cout << "== consistency ==\n";
  const ConsistencyReport report = check_consistency(ont);
  std::cout << (report.consistent ? "consistent" : "inconsistent") << ", "
            << report.diagnostics.size() << " diagnostic(s)\n\n";

  std::cout << "== materialized facts about the individuals ==\n";
  const InferredGraph graph = materialize(ont);
  for (const Link& link : graph.links)
    std::cout << link.subject.local_name() << " --" << link.prop.local_name() << "--> "
              << link.object.local_name() << "\n";
  for (const Membership& m : graph.memberships) {
    if (m.cls == vocab::owl_thing()) continue;
    std::cout << m.individual.local_name() << " : " << m.cls.local_name() << "\n";
  }
  std::cout << "(" << graph.rounds << " materialization round(s))\n";
  return 0;
}
