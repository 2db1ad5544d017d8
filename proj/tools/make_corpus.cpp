// Regenerates the bundled poultry-ontology corpus files. The checked-in
// copies under corpus/ are golden bytes the test suite compares against;
// rerun this tool only when the corpus itself is meant to change.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "owlet/owlet.hpp"

namespace {

void write(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << path << " for writing\n";
    std::exit(1);
  }
  out << bytes;
  if (!out) {
    std::cerr << "failed while writing " << path << "\n";
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : "corpus";
  const owlet::Ontology ont = owlet::build_poultry_ontology();
  write(dir + "/poultry.rdf", owlet::write_rdfxml(ont));
  write(dir + "/poultry.nt", owlet::write_ntriples(owlet::to_triples(ont)));
  write(dir + "/poultry.dot", owlet::export_dot(ont));
  std::cout << "wrote poultry.rdf, poultry.nt, poultry.dot to " << dir << "/\n";
  return 0;
}
