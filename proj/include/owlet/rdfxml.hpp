#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "owlet/rdf.hpp"

namespace owlet {

namespace detail {

inline bool is_ncname(std::string_view s) {
  if (s.empty()) return false;
  const auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  const auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9') || c == '-' || c == '.'; };
  if (!head(s.front())) return false;
  for (const char c : s.substr(1))
    if (!tail(c)) return false;
  return true;
}

/// Splits an IRI into (namespace, NCName local part) for use as an XML name.
inline std::pair<std::string, std::string> split_for_xml(const Iri& iri) {
  const std::string& s = iri.str();
  const std::size_t cut = s.find_last_of("#/");
  if (cut == std::string::npos || cut + 1 >= s.size())
    throw SerializationError("IRI has no local name usable as an XML element: " + s);
  const std::string local = s.substr(cut + 1);
  if (!is_ncname(local))
    throw SerializationError("IRI local name is not a valid XML name: " + s);
  return {s.substr(0, cut + 1), local};
}

inline std::string xml_escape_attr(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string xml_escape_text(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#xD;"; break;  // raw CR would be normalized away on parse
      default:
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n')
          throw SerializationError("control character not representable in XML");
        out += c;
    }
  }
  return out;
}

class RdfXmlWriter {
public:
  explicit RdfXmlWriter(const Ontology& ont) : ont_(ont), graph_(to_triples(ont)) {}

  std::string write() {
    group_subjects();
    assign_prefixes();
    emit_header();
    for (const auto& [iri, triples] : named_subjects_) emit_node(Term::named(iri), triples, 1);
    for (const auto& [label, triples] : blank_subjects_) {
      if (!nested_.count(label)) emit_node(Term::blank(label), triples, 1);
    }
    out_ += "</rdf:RDF>\n";
    return std::move(out_);
  }

private:
  void group_subjects() {
    for (const Triple& t : graph_) {
      if (t.subject.is_named()) {
        named_subjects_[t.subject.iri()].push_back(t);
      } else {
        blank_subjects_[t.subject.label()].push_back(t);
      }
      // Blanks referenced as objects are serialized inline under the referee.
      if (t.object.is_blank()) nested_.insert(t.object.label());
    }
  }

  // Namespaces appearing in element names: the four standard prefixes, the
  // ontology's own namespace as the default, and minted ns1, ns2, ... for the
  // rest, numbered in sorted order so output is construction-independent.
  void assign_prefixes() {
    prefixes_[vocab::kRdfNs] = "rdf";
    prefixes_[vocab::kRdfsNs] = "rdfs";
    prefixes_[vocab::kOwlNs] = "owl";
    prefixes_[vocab::kXsdNs] = "xsd";
    default_ns_ = ont_.base().str();
    if (default_ns_.back() != '#' && default_ns_.back() != '/') default_ns_ += '#';
    prefixes_[default_ns_] = "";

    std::set<std::string> foreign;
    const auto note = [&](const Iri& iri) {
      const std::string ns = split_for_xml(iri).first;
      if (!prefixes_.count(ns)) foreign.insert(ns);
    };
    for (const Triple& t : graph_) {
      if (t.predicate != vocab::rdf_type()) note(t.predicate);
      // Type objects become element names only for the built-in node kinds,
      // which live in the owl namespace; class types stay in attributes.
    }
    std::size_t n = 0;
    for (const std::string& ns : foreign) prefixes_[ns] = "ns" + std::to_string(++n);
  }

  std::string qname(const Iri& iri) const {
    const auto [ns, local] = split_for_xml(iri);
    const auto it = prefixes_.find(ns);
    if (it == prefixes_.end())
      throw SerializationError("no namespace prefix for " + iri.str());
    return it->second.empty() ? local : it->second + ":" + local;
  }

  void emit_header() {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<rdf:RDF xmlns=\"" + xml_escape_attr(default_ns_) + "\"\n";
    std::vector<std::pair<std::string, std::string>> decls;  // prefix -> ns
    for (const auto& [ns, prefix] : prefixes_) {
      if (!prefix.empty()) decls.emplace_back(prefix, ns);
    }
    std::sort(decls.begin(), decls.end());
    for (std::size_t i = 0; i < decls.size(); ++i) {
      out_ += "    xmlns:" + decls[i].first + "=\"" + xml_escape_attr(decls[i].second) + "\"";
      out_ += i + 1 == decls.size() ? ">\n" : "\n";
    }
  }

  static const std::vector<Iri>& node_kind_priority() {
    static const std::vector<Iri> kinds = {
        vocab::owl_ontology(),          vocab::owl_class(),
        vocab::owl_object_property(),   vocab::owl_datatype_property(),
        vocab::owl_annotation_property(), vocab::owl_named_individual(),
    };
    return kinds;
  }

  void emit_node(const Term& subject, const std::vector<Triple>& triples, int depth) {
    std::vector<Iri> types;
    std::vector<Triple> labels, comments, rest;
    for (const Triple& t : triples) {
      if (t.predicate == vocab::rdf_type() && t.object.is_named()) {
        types.push_back(t.object.iri());
      } else if (t.predicate == vocab::rdfs_label()) {
        labels.push_back(t);
      } else if (t.predicate == vocab::rdfs_comment()) {
        comments.push_back(t);
      } else {
        rest.push_back(t);
      }
    }
    std::optional<Iri> primary;
    for (const Iri& kind : node_kind_priority()) {
      if (std::find(types.begin(), types.end(), kind) != types.end()) {
        primary = kind;
        break;
      }
    }
    std::vector<Iri> extra_types;
    for (const Iri& t : types) {
      if (!primary || t != *primary) extra_types.push_back(t);
    }
    std::sort(extra_types.begin(), extra_types.end());

    const std::string element = primary ? qname(*primary) : "rdf:Description";
    const std::string pad(std::size_t(depth) * 2, ' ');
    out_ += pad + "<" + element;
    if (subject.is_named())
      out_ += " rdf:about=\"" + xml_escape_attr(subject.iri().str()) + "\"";
    const bool empty = extra_types.empty() && labels.empty() && comments.empty() && rest.empty();
    if (empty) {
      out_ += "/>\n";
      return;
    }
    out_ += ">\n";
    for (const Iri& t : extra_types)
      out_ += pad + "  <rdf:type rdf:resource=\"" + xml_escape_attr(t.str()) + "\"/>\n";
    for (const Triple& t : labels) emit_property(t, depth + 1);
    for (const Triple& t : comments) emit_property(t, depth + 1);
    // rest arrives in canonical triple order; regroup alphabetically by
    // predicate then object rendering.
    std::sort(rest.begin(), rest.end(), [](const Triple& a, const Triple& b) {
      if (a.predicate != b.predicate) return a.predicate < b.predicate;
      return a.object.render() < b.object.render();
    });
    for (const Triple& t : rest) emit_property(t, depth + 1);
    out_ += pad + "</" + element + ">\n";
  }

  void emit_property(const Triple& t, int depth) {
    const std::string pad(std::size_t(depth) * 2, ' ');
    const std::string name = qname(t.predicate);
    switch (t.object.kind()) {
      case Term::Kind::Named:
        out_ += pad + "<" + name + " rdf:resource=\"" + xml_escape_attr(t.object.iri().str()) +
                "\"/>\n";
        return;
      case Term::Kind::Blank: {
        out_ += pad + "<" + name + ">\n";
        const auto it = blank_subjects_.find(t.object.label());
        static const std::vector<Triple> kNone;
        emit_node(t.object, it == blank_subjects_.end() ? kNone : it->second, depth + 1);
        out_ += pad + "</" + name + ">\n";
        return;
      }
      case Term::Kind::Lit: {
        const Literal& l = t.object.literal();
        out_ += pad + "<" + name;
        if (l.lang()) {
          out_ += " xml:lang=\"" + xml_escape_attr(*l.lang()) + "\"";
        } else if (!l.is_plain_string()) {
          out_ += " rdf:datatype=\"" + xml_escape_attr(l.datatype().str()) + "\"";
        }
        out_ += ">" + xml_escape_text(l.lexical()) + "</" + name + ">\n";
        return;
      }
    }
  }

  const Ontology& ont_;
  Graph graph_;
  std::map<Iri, std::vector<Triple>> named_subjects_;
  std::map<std::string, std::vector<Triple>> blank_subjects_;
  std::set<std::string> nested_;
  std::map<std::string, std::string> prefixes_;  // namespace -> prefix ("" = default)
  std::string default_ns_;
  std::string out_;
};

// --- XML subset parser ----------------------------------------------------------

struct XmlElement {
  std::string raw_name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlElement> children;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Minimal XML reader for the RDF/XML subset the writer produces: elements,
/// attributes, character data, comments, the five predefined entities, and
/// numeric character references. DOCTYPE, CDATA, and processing instructions
/// other than the XML declaration are rejected.
class XmlReader {
public:
  explicit XmlReader(std::string_view text) : text_(text) {}

  XmlElement parse_document() {
    if (text_.substr(0, 3) == "\xEF\xBB\xBF") advance(3);
    skip_misc(true);
    XmlElement root = parse_element();
    skip_misc(false);
    if (pos_ < text_.size()) fail("content after document element");
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < text_.size(); ++i) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  // Whitespace, comments, and (in the prolog) the XML declaration.
  void skip_misc(bool prolog) {
    while (true) {
      skip_ws();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (prolog && starts_with("<?xml")) {
        while (pos_ < text_.size() && !starts_with("?>")) advance();
        if (pos_ >= text_.size()) fail("unterminated XML declaration");
        advance(2);
        prolog = false;  // only one declaration
      } else if (starts_with("<?")) {
        fail("unsupported construct: processing instruction");
      } else if (starts_with("<!DOCTYPE")) {
        fail("unsupported construct: DOCTYPE");
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    advance(4);
    while (pos_ < text_.size() && !starts_with("-->")) advance();
    if (pos_ >= text_.size()) fail("unterminated comment");
    advance(3);
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':' || static_cast<unsigned char>(c) >= 0x80;
  }

  std::string parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) advance();
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  XmlElement parse_element() {
    if (peek() != '<') fail("expected '<'");
    XmlElement el;
    el.line = line_;
    el.column = col_;
    advance();
    el.raw_name = parse_name();
    while (true) {
      skip_ws();
      if (peek() == '/') {
        advance();
        if (peek() != '>') fail("expected '>' after '/'");
        advance();
        return el;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      const std::string attr = parse_name();
      skip_ws();
      if (peek() != '=') fail("expected '=' in attribute");
      advance();
      skip_ws();
      const char quote = peek();
      if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
      advance();
      std::string value;
      while (pos_ < text_.size() && peek() != quote) {
        if (peek() == '<') fail("'<' in attribute value");
        if (peek() == '&') {
          value += parse_entity();
        } else {
          value += peek();
          advance();
        }
      }
      if (pos_ >= text_.size()) fail("unterminated attribute value");
      advance();
      el.attrs.emplace_back(attr, std::move(value));
    }
    // Content.
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated element <" + el.raw_name + ">");
      if (starts_with("<!--")) {
        skip_comment();
        continue;
      }
      if (starts_with("<![CDATA[")) fail("unsupported construct: CDATA");
      if (starts_with("<?")) fail("unsupported construct: processing instruction");
      if (starts_with("</")) {
        advance(2);
        const std::string closing = parse_name();
        if (closing != el.raw_name)
          fail("mismatched close tag </" + closing + "> for <" + el.raw_name + ">");
        skip_ws();
        if (peek() != '>') fail("expected '>' in close tag");
        advance();
        return el;
      }
      if (peek() == '<') {
        el.children.push_back(parse_element());
        continue;
      }
      if (peek() == '&') {
        el.text += parse_entity();
        continue;
      }
      el.text += peek();
      advance();
    }
  }

  std::string parse_entity() {
    advance();  // '&'
    std::string name;
    while (pos_ < text_.size() && peek() != ';') {
      name += peek();
      advance();
    }
    if (pos_ >= text_.size()) fail("unterminated entity reference");
    advance();  // ';'
    if (name == "amp") return "&";
    if (name == "lt") return "<";
    if (name == "gt") return ">";
    if (name == "quot") return "\"";
    if (name == "apos") return "'";
    if (!name.empty() && name[0] == '#') {
      std::uint32_t cp = 0;
      std::size_t i = 1;
      const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      if (hex) i = 2;
      if (i >= name.size()) fail("empty character reference");
      for (; i < name.size(); ++i) {
        const char c = name[i];
        std::uint32_t digit = 0;
        if (c >= '0' && c <= '9') digit = std::uint32_t(c - '0');
        else if (hex && c >= 'a' && c <= 'f') digit = std::uint32_t(c - 'a' + 10);
        else if (hex && c >= 'A' && c <= 'F') digit = std::uint32_t(c - 'A' + 10);
        else fail("bad character reference &" + name + ";");
        cp = cp * (hex ? 16 : 10) + digit;
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
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
    fail("unsupported construct: entity &" + name + ";");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

/// Walks the XML tree and extracts triples. Namespace scopes, xml:lang
/// inheritance, rdf:about/rdf:ID/rdf:nodeID/rdf:resource, nested node
/// elements, rdf:datatype.
class RdfXmlExtractor {
public:
  RdfXmlExtractor(const XmlElement& root, std::optional<Iri> base)
      : root_(root), base_(std::move(base)) {}

  Graph extract() {
    Scope scope;
    scope.prefixes["xml"] = "http://www.w3.org/XML/1998/namespace";
    apply_scope(root_, scope);
    if (expand(root_.raw_name, scope, true) != Iri(vocab::kRdfNs + "RDF"))
      throw ParseError("document element must be rdf:RDF", root_.line, root_.column);
    discover_base();
    collect_node_ids(root_);
    for (const XmlElement& child : root_.children) parse_node(child, scope);
    if (!whitespace_only(root_.text))
      throw ParseError("unsupported construct: mixed content", root_.line, root_.column);
    return std::move(graph_);
  }

private:
  struct Scope {
    std::map<std::string, std::string> prefixes;
    std::optional<std::string> default_ns;
    std::optional<std::string> lang;
  };

  static bool whitespace_only(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  }

  void apply_scope(const XmlElement& el, Scope& scope) const {
    for (const auto& [name, value] : el.attrs) {
      if (name == "xmlns") {
        scope.default_ns = value;
      } else if (name.rfind("xmlns:", 0) == 0) {
        scope.prefixes[name.substr(6)] = value;
      } else if (name == "xml:lang") {
        if (value.empty()) {
          scope.lang.reset();
        } else {
          scope.lang = value;
        }
      } else if (name == "xml:base") {
        throw ParseError("unsupported construct: xml:base", el.line, el.column);
      }
    }
  }

  Iri expand(const std::string& raw, const Scope& scope, bool element,
             const XmlElement* at = nullptr) const {
    const std::size_t line = at ? at->line : root_.line;
    const std::size_t col = at ? at->column : root_.column;
    const std::size_t colon = raw.find(':');
    std::string ns;
    std::string local;
    if (colon == std::string::npos) {
      if (!scope.default_ns)
        throw ParseError("unprefixed name '" + raw + "' with no default namespace", line, col);
      ns = *scope.default_ns;
      local = raw;
    } else {
      const std::string prefix = raw.substr(0, colon);
      const auto it = scope.prefixes.find(prefix);
      if (it == scope.prefixes.end())
        throw ParseError("undeclared namespace prefix '" + prefix + "'", line, col);
      ns = it->second;
      local = raw.substr(colon + 1);
    }
    (void)element;
    try {
      return Iri(ns + local);
    } catch (const ModelError& e) {
      throw ParseError(e.what(), line, col);
    }
  }

  void discover_base() {
    if (base_) return;
    for (const XmlElement& child : root_.children) {
      // A fresh scope per child is wrong for exotic nesting, but the base
      // discovery pass only needs the owl:Ontology node, which the writer
      // emits with plain prefixes.
      Scope scope;
      scope.prefixes["xml"] = "http://www.w3.org/XML/1998/namespace";
      apply_scope(root_, scope);
      apply_scope(child, scope);
      try {
        if (expand(child.raw_name, scope, true, &child) != vocab::owl_ontology()) continue;
        for (const auto& [name, value] : child.attrs) {
          if (rdf_attr_local(name, scope, child) == "about") {
            base_ = Iri(value);
            return;
          }
        }
      } catch (const ParseError&) {
        continue;
      }
    }
  }

  void collect_node_ids(const XmlElement& el) {
    for (const auto& [name, value] : el.attrs) {
      if (name.substr(name.find(':') + 1) == "nodeID") used_labels_.insert(value);
    }
    for (const XmlElement& child : el.children) collect_node_ids(child);
  }

  std::string mint_label() {
    std::string label;
    do {
      label = "g" + std::to_string(next_blank_++);
    } while (used_labels_.count(label));
    return label;
  }

  static bool is_rdf(const Iri& iri, std::string_view local) {
    return iri.str() == vocab::kRdfNs + std::string(local);
  }

  /// Local name of an attribute in the rdf: namespace, nullopt otherwise.
  /// Unprefixed attributes carry no namespace and never match.
  static std::optional<std::string> rdf_attr_local(const std::string& attr, const Scope& scope,
                                                   const XmlElement& el) {
    const std::size_t colon = attr.find(':');
    if (colon == std::string::npos) return std::nullopt;
    const std::string prefix = attr.substr(0, colon);
    const auto it = scope.prefixes.find(prefix);
    if (it == scope.prefixes.end())
      throw ParseError("undeclared namespace prefix '" + prefix + "'", el.line, el.column);
    if (it->second != vocab::kRdfNs) return std::nullopt;
    return attr.substr(colon + 1);
  }

  void reject_containers(const Iri& name, const XmlElement& el) const {
    for (const std::string_view bad : {"li", "Seq", "Bag", "Alt", "List"}) {
      if (is_rdf(name, bad))
        throw ParseError("unsupported construct: rdf:" + std::string(bad) + " containers",
                         el.line, el.column);
    }
  }

  Term parse_node(const XmlElement& el, Scope scope) {
    apply_scope(el, scope);
    const Iri name = expand(el.raw_name, scope, true, &el);
    reject_containers(name, el);
    if (is_rdf(name, "RDF"))
      throw ParseError("unsupported construct: nested rdf:RDF", el.line, el.column);

    std::optional<Term> subject;
    for (const auto& [attr, value] : el.attrs) {
      if (attr == "xmlns" || attr.rfind("xmlns:", 0) == 0 || attr.rfind("xml:", 0) == 0) continue;
      const auto local = rdf_attr_local(attr, scope, el);
      if (local == "about") {
        subject = Term::named(make_iri(value, el));
      } else if (local == "ID") {
        if (!base_)
          throw ParseError("rdf:ID requires a base IRI", el.line, el.column);
        subject = Term::named(resolve(*base_, value));
      } else if (local == "nodeID") {
        subject = Term::blank(value);
      } else if (local == "parseType") {
        throw ParseError("unsupported construct: rdf:parseType", el.line, el.column);
      } else {
        throw ParseError("unsupported construct: attribute " + attr + " on a node element",
                         el.line, el.column);
      }
    }
    if (!subject) subject = Term::blank(mint_label());

    if (!is_rdf(name, "Description"))
      graph_.insert(Triple(*subject, vocab::rdf_type(), Term::named(name)));
    if (!whitespace_only(el.text))
      throw ParseError("unsupported construct: mixed content", el.line, el.column);
    for (const XmlElement& prop : el.children) parse_property(*subject, prop, scope);
    return *subject;
  }

  void parse_property(const Term& subject, const XmlElement& el, Scope scope) {
    apply_scope(el, scope);
    const Iri predicate = expand(el.raw_name, scope, true, &el);
    reject_containers(predicate, el);
    if (is_rdf(predicate, "RDF") || is_rdf(predicate, "Description"))
      throw ParseError("rdf:" + el.raw_name.substr(el.raw_name.find(':') + 1) +
                           " cannot be a property element",
                       el.line, el.column);

    std::optional<Term> object;
    std::optional<Iri> datatype;
    for (const auto& [attr, value] : el.attrs) {
      if (attr == "xmlns" || attr.rfind("xmlns:", 0) == 0 || attr.rfind("xml:", 0) == 0) continue;
      const auto local = rdf_attr_local(attr, scope, el);
      if (local == "resource") {
        object = Term::named(make_iri(value, el));
      } else if (local == "nodeID") {
        object = Term::blank(value);
      } else if (local == "datatype") {
        datatype = make_iri(value, el);
      } else if (local == "parseType") {
        throw ParseError("unsupported construct: rdf:parseType", el.line, el.column);
      } else {
        throw ParseError("unsupported construct: attribute " + attr + " on a property element",
                         el.line, el.column);
      }
    }

    if (object) {
      if (!el.children.empty() || !whitespace_only(el.text))
        throw ParseError("property element with rdf:resource cannot have content", el.line,
                         el.column);
      graph_.insert(Triple(subject, predicate, *object));
      return;
    }
    if (!el.children.empty()) {
      if (el.children.size() > 1)
        throw ParseError("property element with more than one node element", el.line, el.column);
      if (!whitespace_only(el.text))
        throw ParseError("unsupported construct: mixed content", el.line, el.column);
      const Term nested = parse_node(el.children.front(), scope);
      graph_.insert(Triple(subject, predicate, nested));
      return;
    }
    // Literal. Datatype beats language; an empty element is the empty string.
    Literal lit = datatype ? Literal::typed(el.text, *datatype)
                 : scope.lang ? Literal::lang_tagged(el.text, *scope.lang)
                              : Literal::str(el.text);
    graph_.insert(Triple(subject, predicate, Term::lit(std::move(lit))));
  }

  Iri make_iri(const std::string& value, const XmlElement& el) const {
    try {
      return Iri(value);
    } catch (const ModelError& e) {
      throw ParseError(e.what(), el.line, el.column);
    }
  }

  const XmlElement& root_;
  std::optional<Iri> base_;
  Graph graph_;
  std::set<std::string> used_labels_;
  std::size_t next_blank_ = 0;
};

}  // namespace detail

/// Deterministic RDF/XML: subjects sorted by IRI, fixed child order, two-space
/// indentation, byte-identical across runs.
inline std::string write_rdfxml(const Ontology& ont) { return detail::RdfXmlWriter(ont).write(); }

/// Triples from the supported RDF/XML subset. `base` is only needed when the
/// document uses rdf:ID and carries no owl:Ontology node.
inline Graph parse_rdfxml_graph(std::string_view text, std::optional<Iri> base = {}) {
  detail::XmlReader reader(text);
  const detail::XmlElement root = reader.parse_document();
  return detail::RdfXmlExtractor(root, std::move(base)).extract();
}

/// Full pipeline: XML -> triples -> ontology (+ residue).
inline ParsedOntology parse_rdfxml(std::string_view text, std::optional<Iri> fallback_base = {}) {
  return from_triples(parse_rdfxml_graph(text, fallback_base), fallback_base);
}

}  // namespace owlet
