#include "relcx/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "relcx/errors.hpp"

namespace relcx {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.tokens.push_back({std::string(line.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

struct Grammar {
  std::string keyword;
  std::size_t min_args;
  std::size_t max_args;
};

const std::map<DocumentKind, std::vector<Grammar>>& grammars() {
  static const std::map<DocumentKind, std::vector<Grammar>> table{
      {DocumentKind::Complex, {{"facet", 1, SIZE_MAX}}},
      {DocumentKind::Relation, {{"xelement", 1, 1}, {"yelement", 1, 1}, {"pair", 2, 2}}},
      {DocumentKind::Poset, {{"element", 1, 1}, {"le", 2, 2}}},
      {DocumentKind::Space, {{"point", 1, 1}, {"open", 0, SIZE_MAX}}},
  };
  return table;
}

std::optional<DocumentKind> kind_from(const std::string& word) {
  if (word == "poset") return DocumentKind::Poset;
  if (word == "relation") return DocumentKind::Relation;
  if (word == "complex") return DocumentKind::Complex;
  if (word == "space") return DocumentKind::Space;
  return std::nullopt;
}

// Declared labels per namespace, plus the rules that reference them.
void check_labels(const std::vector<Line>& lines) {
  std::map<std::string, std::set<std::string>> declared;
  const std::map<std::string, std::string> declares{
      {"xelement", "x"}, {"yelement", "y"}, {"element", "e"}, {"point", "p"}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    auto it = declares.find(line.tokens[0].text);
    if (it == declares.end()) continue;
    const Token& label = line.tokens[1];
    if (!declared[it->second].insert(label.text).second)
      throw ParseError(line.number, label.column, "label '" + label.text + "' declared twice");
  }
  auto require = [&](const std::string& space, const Line& line, std::size_t from, std::size_t to) {
    std::set<std::string> seen;
    for (std::size_t t = from; t < to; ++t) {
      const Token& token = line.tokens[t];
      if (!declared[space].count(token.text))
        throw ParseError(line.number, token.column, "undeclared label '" + token.text + "'");
      if (line.tokens[0].text != "le" && line.tokens[0].text != "pair" &&
          !seen.insert(token.text).second)
        throw ParseError(line.number, token.column, "label '" + token.text + "' repeated");
    }
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const std::string& word = line.tokens[0].text;
    if (word == "pair") {
      require("x", line, 1, 2);
      require("y", line, 2, 3);
    } else if (word == "le") {
      require("e", line, 1, 3);
    } else if (word == "open") {
      require("p", line, 1, line.tokens.size());
    } else if (word == "facet") {
      std::set<std::string> seen;
      for (std::size_t t = 1; t < line.tokens.size(); ++t)
        if (!seen.insert(line.tokens[t].text).second)
          throw ParseError(line.number, line.tokens[t].column,
                           "label '" + line.tokens[t].text + "' repeated");
    }
  }
}

void expect_kind(const Document& document, DocumentKind kind) {
  if (document.kind != kind)
    throw PreconditionError("WrongDocument", "expected a " + to_string(kind) + " document, got " +
                                                 to_string(document.kind));
}

std::vector<std::string> args_of(const Document& document, const std::string& keyword) {
  std::vector<std::string> out;
  for (const Record& r : document.records)
    if (r.keyword == keyword) out.push_back(r.args.at(0));
  return out;
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Poset: return "poset";
    case DocumentKind::Relation: return "relation";
    case DocumentKind::Complex: return "complex";
    case DocumentKind::Space: return "space";
  }
  return "complex";
}

Document parse(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing header line");

  const Line& header = lines.front();
  auto kind = kind_from(header.tokens[0].text);
  if (!kind)
    throw ParseError(header.number, header.tokens[0].column,
                     "unknown document kind '" + header.tokens[0].text + "'");
  if (header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens[0].column, "header needs exactly one name");

  Document document{*kind, header.tokens[1].text, {}};
  const auto& grammar = grammars().at(*kind);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    const Token& word = line.tokens[0];
    auto rule = std::find_if(grammar.begin(), grammar.end(),
                             [&](const Grammar& g) { return g.keyword == word.text; });
    if (rule == grammar.end())
      throw ParseError(line.number, word.column,
                       "unknown keyword '" + word.text + "' in a " + to_string(*kind) + " document");
    const std::size_t n = line.tokens.size() - 1;
    if (n < rule->min_args || n > rule->max_args)
      throw ParseError(line.number, word.column, "wrong number of arguments for '" + word.text + "'");
    Record record{word.text, {}};
    for (std::size_t t = 1; t < line.tokens.size(); ++t) record.args.push_back(line.tokens[t].text);
    document.records.push_back(std::move(record));
  }
  check_labels(lines);
  return document;
}

std::string serialize(const Document& document) {
  std::string out = to_string(document.kind) + " " + document.name + "\n";
  for (const Record& r : document.records) {
    out += r.keyword;
    for (const std::string& a : r.args) out += " " + a;
    out += "\n";
  }
  return out;
}

SimplicialComplex to_complex(const Document& document) {
  expect_kind(document, DocumentKind::Complex);
  std::set<std::string> labels;
  std::vector<std::vector<std::string>> facets;
  for (const Record& r : document.records) {
    labels.insert(r.args.begin(), r.args.end());
    facets.push_back(r.args);
  }
  if (facets.empty()) return SimplicialComplex();
  auto universe = make_universe(std::vector<std::string>(labels.begin(), labels.end()));
  return complex_from_facets(universe, facets);
}

Relation to_relation(const Document& document) {
  expect_kind(document, DocumentKind::Relation);
  auto xs = make_universe(args_of(document, "xelement"));
  auto ys = make_universe(args_of(document, "yelement"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Record& r : document.records)
    if (r.keyword == "pair") pairs.emplace_back(r.args[0], r.args[1]);
  return Relation::from_pairs(xs, ys, pairs);
}

Poset to_poset(const Document& document) {
  expect_kind(document, DocumentKind::Poset);
  auto elements = make_universe(args_of(document, "element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Record& r : document.records)
    if (r.keyword == "le") pairs.emplace_back(r.args[0], r.args[1]);
  return poset_from_pairs(elements, pairs);
}

FiniteTopology to_topology(const Document& document) {
  expect_kind(document, DocumentKind::Space);
  auto points = make_universe(args_of(document, "point"));
  if (points->size() > kMaxSpacePoints)
    throw PreconditionError("TooLarge", "finite spaces are limited to 64 points");
  std::vector<PointSet> opens;
  for (const Record& r : document.records)
    if (r.keyword == "open") {
      PointSet set = 0;
      for (const std::string& label : r.args) set |= PointSet{1} << points->index(label);
      opens.push_back(set);
    }
  return FiniteTopology(points, std::move(opens));
}

std::vector<std::vector<std::string>> sorted_facet_labels(const SimplicialComplex& complex) {
  std::vector<std::vector<std::string>> out;
  for (const Simplex& s : complex.facets()) {
    auto labels = simplex_labels(complex.universe(), s);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Document complex_document(const SimplicialComplex& complex, const std::string& name) {
  Document document{DocumentKind::Complex, name, {}};
  for (auto& labels : sorted_facet_labels(complex)) document.records.push_back({"facet", labels});
  return document;
}

Document relation_document(const Relation& relation, const std::string& name) {
  Document document{DocumentKind::Relation, name, {}};
  for (const auto& label : relation.x_universe().labels()) document.records.push_back({"xelement", {label}});
  for (const auto& label : relation.y_universe().labels()) document.records.push_back({"yelement", {label}});
  for (VertexIndex x = 0; x < relation.x_universe().size(); ++x)
    for (VertexIndex y = 0; y < relation.y_universe().size(); ++y)
      if (relation.related(x, y))
        document.records.push_back(
            {"pair", {relation.x_universe().label(x), relation.y_universe().label(y)}});
  return document;
}

Document poset_document(const Poset& poset, const std::string& name) {
  Document document{DocumentKind::Poset, name, {}};
  const Universe& e = poset.elements();
  for (const auto& label : e.labels()) document.records.push_back({"element", {label}});
  for (VertexIndex a = 0; a < poset.size(); ++a)
    for (VertexIndex b = 0; b < poset.size(); ++b) {
      if (!poset.less(a, b)) continue;
      bool cover = true;
      for (VertexIndex c = 0; c < poset.size() && cover; ++c)
        cover = !(poset.less(a, c) && poset.less(c, b));
      if (cover) document.records.push_back({"le", {e.label(a), e.label(b)}});
    }
  return document;
}

Document space_document(const FiniteTopology& space, const std::string& name) {
  Document document{DocumentKind::Space, name, {}};
  for (const auto& label : space.points().labels()) document.records.push_back({"point", {label}});
  std::vector<std::vector<VertexIndex>> opens;
  for (PointSet o : space.opens())
    if (o != 0) opens.push_back(members(o));
  std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& o : opens) {
    Record r{"open", {}};
    for (VertexIndex v : o) r.args.push_back(space.points().label(v));
    document.records.push_back(std::move(r));
  }
  return document;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace relcx
