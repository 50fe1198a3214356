#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relcx/complex.hpp"
#include "relcx/poset.hpp"
#include "relcx/relation.hpp"

namespace relcx {

enum class DocumentKind { Poset, Relation, Complex, Space };

std::string to_string(DocumentKind kind);

struct Record {
  std::string keyword;
  std::vector<std::string> args;

  friend bool operator==(const Record&, const Record&) = default;
};

/**
 * Line-based input document:
 *
 *   complex <name>   facet <label>...
 *   relation <name>  xelement <label> | yelement <label> | pair <x> <y>
 *   poset <name>     element <label>  | le <a> <b>
 *   space <name>     point <label>    | open <label>...
 *
 * '#' starts a comment. Labels are whitespace-free tokens compared verbatim.
 */
struct Document {
  DocumentKind kind = DocumentKind::Complex;
  std::string name;
  std::vector<Record> records;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Throws ParseError with the 1-based line and column of the first problem.
/// Unknown keywords, wrong arities, duplicate or undeclared labels are rejected.
Document parse(std::string_view text);

std::string serialize(const Document& document);

/// Complex universes are the facet labels in string order.
SimplicialComplex to_complex(const Document& document);
Relation to_relation(const Document& document);
Poset to_poset(const Document& document);
FiniteTopology to_topology(const Document& document);

/// Facets with labels in string order, facets sorted by label sequence.
Document complex_document(const SimplicialComplex& complex, const std::string& name);
Document relation_document(const Relation& relation, const std::string& name);
/// Elements in universe order, one `le` line per covering pair.
Document poset_document(const Poset& poset, const std::string& name);
Document space_document(const FiniteTopology& space, const std::string& name);

/// Canonical facet listing shared by documents and reports.
std::vector<std::vector<std::string>> sorted_facet_labels(const SimplicialComplex& complex);

std::string read_file(const std::string& path);

}  // namespace relcx
