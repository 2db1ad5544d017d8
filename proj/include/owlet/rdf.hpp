#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "owlet/errors.hpp"
#include "owlet/ontology.hpp"

namespace owlet {

// --- Terms and triples --------------------------------------------------------

/// One RDF term: a named IRI, a blank node label, or a literal.
class Term {
public:
  enum class Kind { Named, Blank, Lit };

  static Term named(Iri iri) { return Term(std::move(iri)); }
  static Term blank(std::string label) { return Term(Blank{std::move(label)}); }
  static Term lit(Literal l) { return Term(std::move(l)); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_named() const { return kind() == Kind::Named; }
  bool is_blank() const { return kind() == Kind::Blank; }
  bool is_literal() const { return kind() == Kind::Lit; }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const std::string& label() const { return std::get<Blank>(value_).label; }
  const Literal& literal() const { return std::get<Literal>(value_); }

  /// N-Triples rendering; the canonical ordering key. `blank_names` substitutes
  /// relabeled blank identifiers while canonicalizing.
  std::string render(const std::map<std::string, std::string>* blank_names = nullptr) const {
    switch (kind()) {
      case Kind::Named: return "<" + iri().str() + ">";
      case Kind::Blank: {
        if (blank_names) {
          const auto it = blank_names->find(label());
          if (it != blank_names->end()) return "_:" + it->second;
        }
        return "_:" + label();
      }
      case Kind::Lit: {
        const Literal& l = literal();
        std::string out = "\"" + escape_literal(l.lexical()) + "\"";
        if (l.lang()) {
          out += "@" + *l.lang();
        } else if (!l.is_plain_string()) {
          out += "^^<" + l.datatype().str() + ">";
        }
        return out;
      }
    }
    return {};
  }

  bool operator==(const Term& other) const { return value_ == other.value_; }

private:
  struct Blank {
    std::string label;
    auto operator<=>(const Blank&) const = default;
  };

  explicit Term(Iri iri) : value_(std::move(iri)) {}
  explicit Term(Blank b) : value_(std::move(b)) {}
  explicit Term(Literal l) : value_(std::move(l)) {}

  static std::string escape_literal(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            static const char* hex = "0123456789ABCDEF";
            out += "\\u00";
            out += hex[(c >> 4) & 0xF];
            out += hex[c & 0xF];
          } else {
            out += c;
          }
      }
    }
    return out;
  }

  std::variant<Iri, Blank, Literal> value_;
};

struct Triple {
  Term subject;
  Iri predicate;
  Term object;

  Triple(Term s, Iri p, Term o)
      : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.is_literal()) throw ModelError("literal in subject position");
  }

  std::string render(const std::map<std::string, std::string>* blank_names = nullptr) const {
    return subject.render(blank_names) + " <" + predicate.str() + "> " +
           object.render(blank_names) + " .";
  }

  bool operator==(const Triple& other) const {
    return subject == other.subject && predicate == other.predicate && object == other.object;
  }
  // Canonical order: lexicographic on the N-Triples rendering.
  bool operator<(const Triple& other) const { return render() < other.render(); }
};

/// Deduplicated triples in canonical (rendering-lexicographic) order.
class Graph {
public:
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }
  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

private:
  std::set<Triple> triples_;
};

// --- Ontology -> triples -------------------------------------------------------

namespace detail {

inline const Iri& characteristic_type(Characteristic ch) {
  switch (ch) {
    case Characteristic::Functional: return vocab::owl_functional_property();
    case Characteristic::InverseFunctional: return vocab::owl_inverse_functional_property();
    case Characteristic::Transitive: return vocab::owl_transitive_property();
    case Characteristic::Symmetric: return vocab::owl_symmetric_property();
    case Characteristic::Asymmetric: return vocab::owl_asymmetric_property();
    case Characteristic::Reflexive: return vocab::owl_reflexive_property();
    case Characteristic::Irreflexive: return vocab::owl_irreflexive_property();
  }
  return vocab::owl_functional_property();
}

inline std::optional<Characteristic> characteristic_for_type(const Iri& type) {
  for (const Characteristic ch : kAllCharacteristics) {
    if (characteristic_type(ch) == type) return ch;
  }
  return std::nullopt;
}

inline const Iri& property_kind_type(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Object: return vocab::owl_object_property();
    case PropertyKind::Datatype: return vocab::owl_datatype_property();
    case PropertyKind::Annotation: return vocab::owl_annotation_property();
  }
  return vocab::owl_object_property();
}

}  // namespace detail

/// Deterministic axiom-to-triple mapping. Complement expressions become blank
/// nodes carrying a single owl:complementOf arc; owl:Thing is left implicit.
inline Graph to_triples(const Ontology& ont) {
  Graph g;
  std::size_t next_blank = 0;
  const auto named = [](const Iri& iri) { return Term::named(iri); };
  // Blank labels are minted in axiom order; the "c" prefix is reserved for them.
  const auto complement_blank = [&](const Iri& cls) {
    const std::string label = "c" + std::to_string(next_blank++);
    g.insert(Triple(Term::blank(label), vocab::owl_complement_of(), named(cls)));
    return Term::blank(label);
  };
  const auto expr_term = [&](const ClassExpression& e) {
    return e.is_named() ? named(e.cls()) : complement_blank(e.cls());
  };

  g.insert(Triple(named(ont.base()), vocab::rdf_type(), named(vocab::owl_ontology())));
  for (const Axiom& ax : ont.axioms()) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, DeclareClass>) {
            g.insert(Triple(named(a.cls), vocab::rdf_type(), named(vocab::owl_class())));
          } else if constexpr (std::is_same_v<T, DeclareProperty>) {
            g.insert(Triple(named(a.prop), vocab::rdf_type(),
                            named(detail::property_kind_type(a.kind))));
          } else if constexpr (std::is_same_v<T, DeclareIndividual>) {
            g.insert(Triple(named(a.individual), vocab::rdf_type(),
                            named(vocab::owl_named_individual())));
          } else if constexpr (std::is_same_v<T, SubClassOf>) {
            g.insert(Triple(expr_term(a.sub), vocab::rdfs_sub_class_of(), expr_term(a.sup)));
          } else if constexpr (std::is_same_v<T, DisjointClasses>) {
            g.insert(Triple(named(a.first), vocab::owl_disjoint_with(), named(a.second)));
          } else if constexpr (std::is_same_v<T, HasCharacteristic>) {
            g.insert(Triple(named(a.prop), vocab::rdf_type(),
                            named(detail::characteristic_type(a.characteristic))));
          } else if constexpr (std::is_same_v<T, InverseOf>) {
            g.insert(Triple(named(a.prop), vocab::owl_inverse_of(), named(a.inverse)));
          } else if constexpr (std::is_same_v<T, Domain>) {
            g.insert(Triple(named(a.prop), vocab::rdfs_domain(), named(a.cls)));
          } else if constexpr (std::is_same_v<T, Range>) {
            if (const auto* expr = std::get_if<ClassExpression>(&a.target)) {
              g.insert(Triple(named(a.prop), vocab::rdfs_range(), expr_term(*expr)));
            } else {
              g.insert(Triple(named(a.prop), vocab::rdfs_range(), named(std::get<Iri>(a.target))));
            }
          } else if constexpr (std::is_same_v<T, ClassAssertion>) {
            g.insert(Triple(named(a.individual), vocab::rdf_type(), expr_term(a.cls)));
          } else if constexpr (std::is_same_v<T, ObjectAssertion>) {
            g.insert(Triple(named(a.subject), Iri(a.prop), named(a.object)));
          } else if constexpr (std::is_same_v<T, DataAssertion>) {
            g.insert(Triple(named(a.subject), Iri(a.prop), Term::lit(a.value)));
          } else if constexpr (std::is_same_v<T, DifferentIndividuals>) {
            g.insert(Triple(named(a.first), vocab::owl_different_from(), named(a.second)));
          } else {
            static_assert(std::is_same_v<T, Annotation>);
            g.insert(Triple(named(a.target), Iri(a.prop), Term::lit(a.value)));
          }
        },
        ax);
  }
  return g;
}

// --- Triples -> ontology -------------------------------------------------------

/// from_triples output: the reconstructed ontology plus every triple that
/// matched no recognized pattern. Nothing is dropped silently.
struct ParsedOntology {
  Ontology ontology;
  std::vector<Triple> residue;
};

inline ParsedOntology from_triples(const Graph& g, std::optional<Iri> fallback_base = {}) {
  // Complement definitions: blank label -> complemented class.
  std::map<std::string, Iri> complements;
  std::map<std::string, bool> complement_used;
  for (const Triple& t : g) {
    if (t.predicate == vocab::owl_complement_of() && t.subject.is_blank() &&
        t.object.is_named()) {
      if (!complements.emplace(t.subject.label(), t.object.iri()).second)
        throw ModelError("blank node " + t.subject.label() + " carries two complement arcs");
      complement_used[t.subject.label()] = false;
    }
  }
  const auto expr_of = [&](const Term& term) -> std::optional<ClassExpression> {
    if (term.is_named()) return ClassExpression::named(term.iri());
    if (term.is_blank()) {
      const auto it = complements.find(term.label());
      if (it == complements.end()) return std::nullopt;
      return ClassExpression::complement_of(it->second);
    }
    return std::nullopt;
  };
  // Marked only when the construct referencing the blank is accepted.
  const auto mark_used = [&](const Term& term) {
    if (term.is_blank()) complement_used[term.label()] = true;
  };

  std::optional<Iri> base;
  for (const Triple& t : g) {
    if (t.predicate == vocab::rdf_type() && t.subject.is_named() && t.object.is_named() &&
        t.object.iri() == vocab::owl_ontology()) {
      if (!base) base = t.subject.iri();
    }
  }
  if (!base) base = fallback_base;
  if (!base) throw ModelError("no ontology header triple and no base IRI provided");

  // Declared kinds steer range targets and literal-valued predicates.
  std::map<Iri, PropertyKind> declared;
  for (const Triple& t : g) {
    if (t.predicate != vocab::rdf_type() || !t.subject.is_named() || !t.object.is_named())
      continue;
    const Iri& type = t.object.iri();
    if (type == vocab::owl_object_property()) declared[t.subject.iri()] = PropertyKind::Object;
    if (type == vocab::owl_datatype_property()) declared[t.subject.iri()] = PropertyKind::Datatype;
    if (type == vocab::owl_annotation_property())
      declared[t.subject.iri()] = PropertyKind::Annotation;
  }
  const auto kind_of = [&](const Iri& p) -> std::optional<PropertyKind> {
    const auto it = declared.find(p);
    if (it == declared.end()) return std::nullopt;
    return it->second;
  };

  std::set<Axiom> axioms;
  std::vector<Triple> residue;
  bool header_seen = false;
  for (const Triple& t : g) {
    const auto take = [&](Axiom ax) { axioms.insert(std::move(ax)); };
    const auto reject = [&] { residue.push_back(t); };

    if (t.predicate == vocab::owl_complement_of() && t.subject.is_blank() && t.object.is_named())
      continue;  // consumed by the construct that references the blank; audited below

    if (t.predicate == vocab::rdf_type()) {
      if (!t.subject.is_named()) {
        reject();
        continue;
      }
      const Iri& s = t.subject.iri();
      if (t.object.is_blank()) {
        if (const auto expr = expr_of(t.object)) {
          take(ClassAssertion{*expr, s});
          mark_used(t.object);
        } else {
          reject();
        }
        continue;
      }
      if (!t.object.is_named()) {
        reject();
        continue;
      }
      const Iri& type = t.object.iri();
      if (type == vocab::owl_ontology()) {
        if (!header_seen && s == *base) {
          header_seen = true;  // the header triple, re-emitted by to_triples
        } else {
          reject();
        }
      } else if (type == vocab::owl_class()) {
        take(DeclareClass{s});
      } else if (type == vocab::owl_named_individual()) {
        take(DeclareIndividual{s});
      } else if (type == vocab::owl_object_property()) {
        take(DeclareProperty{s, PropertyKind::Object});
      } else if (type == vocab::owl_datatype_property()) {
        take(DeclareProperty{s, PropertyKind::Datatype});
      } else if (type == vocab::owl_annotation_property()) {
        take(DeclareProperty{s, PropertyKind::Annotation});
      } else if (const auto ch = detail::characteristic_for_type(type)) {
        take(HasCharacteristic{s, *ch});
      } else if (type == vocab::owl_thing()) {
        // The one reserved IRI that is a legal assertion target.
        take(ClassAssertion{ClassExpression::named(type), s});
      } else if (!vocab::is_reserved(type)) {
        take(ClassAssertion{ClassExpression::named(type), s});
      } else {
        reject();
      }
      continue;
    }

    if (t.predicate == vocab::rdfs_sub_class_of()) {
      const auto sub = expr_of(t.subject);
      const auto sup = expr_of(t.object);
      if (sub && sup) {
        take(SubClassOf{*sub, *sup});
        mark_used(t.subject);
        mark_used(t.object);
      } else {
        reject();
      }
      continue;
    }
    if (t.predicate == vocab::owl_disjoint_with()) {
      if (t.subject.is_named() && t.object.is_named()) {
        take(DisjointClasses(t.subject.iri(), t.object.iri()));
      } else {
        reject();
      }
      continue;
    }
    if (t.predicate == vocab::owl_inverse_of()) {
      if (t.subject.is_named() && t.object.is_named()) {
        take(InverseOf{t.subject.iri(), t.object.iri()});
      } else {
        reject();
      }
      continue;
    }
    if (t.predicate == vocab::rdfs_domain()) {
      if (t.subject.is_named() && t.object.is_named()) {
        take(Domain{t.subject.iri(), t.object.iri()});
      } else {
        reject();
      }
      continue;
    }
    if (t.predicate == vocab::rdfs_range()) {
      if (!t.subject.is_named()) {
        reject();
        continue;
      }
      const Iri& p = t.subject.iri();
      if (t.object.is_named()) {
        const bool datatype_target = kind_of(p) == PropertyKind::Datatype ||
                                     t.object.iri().starts_with(vocab::kXsdNs);
        if (datatype_target) {
          take(Range{p, RangeTarget(t.object.iri())});
        } else {
          take(Range{p, RangeTarget(ClassExpression::named(t.object.iri()))});
        }
      } else if (const auto expr = expr_of(t.object)) {
        take(Range{p, RangeTarget(*expr)});
        mark_used(t.object);
      } else {
        reject();
      }
      continue;
    }
    if (t.predicate == vocab::owl_different_from()) {
      if (t.subject.is_named() && t.object.is_named()) {
        take(DifferentIndividuals(t.subject.iri(), t.object.iri()));
      } else {
        reject();
      }
      continue;
    }

    if (!t.subject.is_named()) {
      reject();
      continue;
    }
    if (vocab::is_reserved(t.predicate)) {
      // Annotation predicates from the standard namespaces (rdfs:label and
      // friends) carry literal values.
      if (t.object.is_literal()) {
        take(Annotation{t.subject.iri(), t.predicate, t.object.literal()});
      } else {
        reject();
      }
      continue;
    }
    const auto kind = kind_of(t.predicate);
    if (t.object.is_literal()) {
      if (kind == PropertyKind::Annotation) {
        take(Annotation{t.subject.iri(), t.predicate, t.object.literal()});
      } else if (!kind || kind == PropertyKind::Datatype) {
        take(DataAssertion{t.predicate, t.subject.iri(), t.object.literal()});
      } else {
        reject();
      }
    } else if (t.object.is_named()) {
      if (!kind || kind == PropertyKind::Object) {
        take(ObjectAssertion{t.predicate, t.subject.iri(), t.object.iri()});
      } else {
        reject();
      }
    } else {
      reject();
    }
  }

  for (const auto& [label, used] : complement_used) {
    if (!used) throw ModelError("dangling complement node _:" + label);
  }

  Ontology ont(*base);
  for (const Axiom& ax : axioms) ont.add(ax);
  return ParsedOntology{std::move(ont), std::move(residue)};
}

// --- N-Triples ------------------------------------------------------------------

/// Canonical N-Triples: blank nodes relabeled b0, b1, ... ordered by their
/// structural signature (label-blind renderings of the triples touching them),
/// lines sorted lexicographically. Ties in the signature only occur between
/// interchangeable blanks, so the bytes are stable.
inline std::string write_ntriples(const Graph& g) {
  std::map<std::string, std::vector<std::string>> signatures;
  for (const Triple& t : g) {
    // Render with all labels hidden: "_:" is the anonymous placeholder.
    std::string anon = t.subject.is_blank() ? "_:" : t.subject.render();
    anon += " <" + t.predicate.str() + "> ";
    anon += t.object.is_blank() ? "_:" : t.object.render();
    if (t.subject.is_blank()) signatures[t.subject.label()].push_back("S " + anon);
    if (t.object.is_blank()) signatures[t.object.label()].push_back("O " + anon);
  }
  std::vector<std::pair<std::vector<std::string>, std::string>> order;
  for (auto& [label, sig] : signatures) {
    std::sort(sig.begin(), sig.end());
    order.emplace_back(sig, label);
  }
  std::sort(order.begin(), order.end());
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < order.size(); ++i)
    names[order[i].second] = "b" + std::to_string(i);

  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const Triple& t : g) lines.push_back(t.render(&names));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

namespace detail {

class NTriplesParser {
public:
  explicit NTriplesParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const std::size_t eol = std::min(text_.find('\n', pos), text_.size());
      line_ = text_.substr(pos, eol - pos);
      ++line_no;
      col_ = 0;
      line_number_ = line_no;
      skip_ws();
      if (col_ < line_.size() && line_[col_] != '#') {
        Term s = parse_term();
        skip_ws();
        Term p = parse_term();
        if (!p.is_named()) fail("predicate must be an IRI");
        skip_ws();
        Term o = parse_term();
        skip_ws();
        if (col_ >= line_.size() || line_[col_] != '.') fail("expected '.'");
        ++col_;
        skip_ws();
        if (col_ < line_.size() && line_[col_] != '#') fail("trailing content after '.'");
        if (s.is_literal()) fail("literal in subject position");
        g.insert(Triple(std::move(s), p.iri(), std::move(o)));
      }
      if (eol >= text_.size()) break;
      pos = eol + 1;
    }
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_number_, col_ + 1);
  }

  void skip_ws() {
    while (col_ < line_.size() && (line_[col_] == ' ' || line_[col_] == '\t')) ++col_;
  }

  Term parse_term() {
    if (col_ >= line_.size()) fail("unexpected end of line");
    const char c = line_[col_];
    if (c == '<') return Term::named(parse_iri());
    if (c == '_') {
      if (col_ + 1 >= line_.size() || line_[col_ + 1] != ':') fail("expected ':' after '_'");
      col_ += 2;
      const std::size_t start = col_;
      while (col_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[col_])) &&
             line_[col_] != '.')
        ++col_;
      if (col_ == start) fail("empty blank node label");
      return Term::blank(std::string(line_.substr(start, col_ - start)));
    }
    if (c == '"') return parse_literal();
    fail("expected IRI, blank node, or literal");
  }

  Iri parse_iri() {
    ++col_;  // '<'
    const std::size_t start = col_;
    while (col_ < line_.size() && line_[col_] != '>') ++col_;
    if (col_ >= line_.size()) fail("unterminated IRI");
    const std::string raw(line_.substr(start, col_ - start));
    ++col_;
    try {
      return Iri(raw);
    } catch (const ModelError& e) {
      fail(e.what());
    }
  }

  Term parse_literal() {
    ++col_;  // '"'
    std::string value;
    while (true) {
      if (col_ >= line_.size()) fail("unterminated literal");
      const char c = line_[col_];
      if (c == '"') {
        ++col_;
        break;
      }
      if (c == '\\') {
        ++col_;
        if (col_ >= line_.size()) fail("dangling escape");
        const char e = line_[col_++];
        switch (e) {
          case 't': value += '\t'; break;
          case 'n': value += '\n'; break;
          case 'r': value += '\r'; break;
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'u': value += decode_unicode(4); break;
          case 'U': value += decode_unicode(8); break;
          default: fail(std::string("unknown escape \\") + e);
        }
      } else {
        value += c;
        ++col_;
      }
    }
    if (col_ < line_.size() && line_[col_] == '@') {
      ++col_;
      const std::size_t start = col_;
      while (col_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[col_])) || line_[col_] == '-'))
        ++col_;
      if (col_ == start) fail("empty language tag");
      return Term::lit(Literal::lang_tagged(value, std::string(line_.substr(start, col_ - start))));
    }
    if (col_ + 1 < line_.size() && line_[col_] == '^' && line_[col_ + 1] == '^') {
      col_ += 2;
      if (col_ >= line_.size() || line_[col_] != '<') fail("expected datatype IRI");
      return Term::lit(Literal::typed(value, parse_iri()));
    }
    return Term::lit(Literal::str(value));
  }

  std::string decode_unicode(int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (col_ >= line_.size()) fail("truncated unicode escape");
      const char c = line_[col_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= std::uint32_t(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= std::uint32_t(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= std::uint32_t(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    return encode_utf8(cp);
  }

  static std::string encode_utf8(std::uint32_t cp) {
    std::string out;
    if (cp < 0x80) {
      out += char(cp);
    } else if (cp < 0x800) {
      out += char(0xC0 | (cp >> 6));
      out += char(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
      out += char(0xE0 | (cp >> 12));
      out += char(0x80 | ((cp >> 6) & 0x3F));
      out += char(0x80 | (cp & 0x3F));
    } else {
      out += char(0xF0 | (cp >> 18));
      out += char(0x80 | ((cp >> 12) & 0x3F));
      out += char(0x80 | ((cp >> 6) & 0x3F));
      out += char(0x80 | (cp & 0x3F));
    }
    return out;
  }

  std::string_view text_;
  std::string_view line_;
  std::size_t col_ = 0;
  std::size_t line_number_ = 0;
};

}  // namespace detail

inline Graph parse_ntriples(std::string_view text) { return detail::NTriplesParser(text).parse(); }

}  // namespace owlet
