#include "ribbonkit/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "ribbonkit/error.hpp"

namespace ribbonkit {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

// One non-blank content line split as `key [argument]: values...`; lines without a colon
// keep every token in `values` and leave the key empty.
struct Entry {
  int line = 0;
  int column = 1;
  std::string key;
  std::optional<Token> argument;
  std::vector<Token> values;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& message) {
  throw Error(ErrorKind::kSyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::vector<Token> tokenize(std::string_view text, int first_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back(Token{std::string(text.substr(start, i - start)), first_column + static_cast<int>(start)});
  }
  return out;
}

std::vector<Entry> scan(std::string_view text) {
  std::vector<Entry> entries;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view content = strip_comment(line);
    auto all = tokenize(content, 1);
    if (all.empty()) continue;
    Entry entry;
    entry.line = number;
    entry.column = all.front().column;
    const auto colon = content.find(':');
    if (colon == std::string_view::npos) {
      entry.values = std::move(all);
    } else {
      auto head = tokenize(content.substr(0, colon), 1);
      if (head.empty()) syntax_error(number, static_cast<int>(colon) + 1, "missing key before ':'");
      if (head.size() > 2) syntax_error(number, head[2].column, "unexpected token '" + head[2].text + "'");
      entry.key = head[0].text;
      if (head.size() == 2) entry.argument = head[1];
      entry.values = tokenize(content.substr(colon + 1), static_cast<int>(colon) + 2);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

void reject_argument(const Entry& e) {
  if (e.argument) syntax_error(e.line, e.argument->column, "key '" + e.key + "' takes no name");
}

int parse_int(const Token& t, int line) {
  if (t.text.empty() || t.text.size() > 9 ||
      !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    syntax_error(line, t.column, "expected a nonnegative integer, found '" + t.text + "'");
  }
  return std::stoi(t.text);
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpq_class parse_rational(const Token& t, int line) {
  const auto slash = t.text.find('/');
  const std::string num = t.text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    syntax_error(line, t.column, "expected an integer or p/q, found '" + t.text + "'");
  }
  mpz_class p(num.front() == '+' ? num.substr(1) : num, 10);
  mpz_class q(den, 10);
  if (q == 0) syntax_error(line, t.column, "zero denominator");
  mpq_class value(p, q);
  value.canonicalize();
  return value;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    out += ' ';
    out += s;
  }
  return out;
}

std::string key_line(const std::string& key, const std::vector<std::string>& items) {
  return key + ":" + join(items) + "\n";
}

bool first_occurrence_order(const ChordDiagram& d) {
  int next = 0;
  for (int e : d.word()) {
    if (e == next) ++next;
    else if (e > next) return false;
  }
  return true;
}

Certificate move_certificate(Certificate c, int slots, int shift, bool reflect) {
  if (slots == 0) return c;
  auto wrap = [slots](int g) { return ((g % slots) + slots) % slots; };
  if (!reflect) return Certificate{wrap(c.cut_a - shift), wrap(c.cut_b - shift)};
  return Certificate{wrap(shift - c.cut_b + 1), wrap(shift - c.cut_a + 1)};
}

std::string rational_text(const mpq_class& v) { return v.get_str(10); }

}  // namespace

std::optional<Certificate> BouquetDocument::certificate(std::string_view name) const {
  for (const auto& c : certificates) {
    if (c.name == name) return c.cut;
  }
  return std::nullopt;
}

BouquetDocument parse_bqt(std::string_view text) {
  BouquetDocument doc;
  std::optional<Entry> word;
  std::optional<Entry> twisted;
  std::optional<Entry> edges;
  std::optional<Entry> anchor;
  std::vector<Entry> components;
  std::vector<Entry> certs;
  bool named = false;
  for (auto& e : scan(text)) {
    if (e.key.empty()) {
      if (e.values.size() != 2 || e.values[0].text != "bouquet") {
        syntax_error(e.line, e.column, "expected 'bouquet NAME' or a 'key:' line");
      }
      if (named) syntax_error(e.line, e.column, "repeated bouquet header");
      named = true;
      doc.name = e.values[1].text;
      continue;
    }
    auto once = [&](std::optional<Entry>& slot) {
      reject_argument(e);
      if (slot) syntax_error(e.line, e.column, "repeated key '" + e.key + "'");
      slot = e;
    };
    if (e.key == "word") once(word);
    else if (e.key == "twisted") once(twisted);
    else if (e.key == "edges") once(edges);
    else if (e.key == "anchor") once(anchor);
    else if (e.key == "component") {
      reject_argument(e);
      components.push_back(e);
    } else if (e.key == "cert") {
      certs.push_back(e);
    } else {
      syntax_error(e.line, e.column, "unknown key '" + e.key + "'");
    }
  }
  if (!word) syntax_error(1, 1, "missing 'word:' line");

  ChordDiagram d = ChordDiagram::from_tokens(texts(word->values), twisted ? texts(twisted->values) : std::vector<std::string>{});
  if (edges) {
    const auto order = texts(edges->values);
    std::set<std::string> seen(order.begin(), order.end());
    if (seen.size() != order.size() || static_cast<int>(order.size()) != d.edge_count()) {
      syntax_error(edges->line, edges->column, "'edges:' must list every edge exactly once");
    }
    for (const auto& t : edges->values) {
      if (!d.find(t.text)) syntax_error(edges->line, t.column, "unknown edge '" + t.text + "'");
    }
    d = reorder_edges(d, order);
  }
  auto edge_subset = [&](const Entry& e) {
    EdgeSet out;
    for (const auto& t : e.values) {
      const auto i = d.find(t.text);
      if (!i) throw Error(ErrorKind::kUnknownEdge, "line " + std::to_string(e.line) + ", column " +
                                                       std::to_string(t.column) + ": unknown edge " + t.text);
      out = out.with(*i);
    }
    return out;
  };
  doc.graph.base = d;
  if (anchor) doc.graph.anchor = edge_subset(*anchor);
  if (!components.empty()) {
    EdgeSet covered;
    for (const auto& c : components) {
      const EdgeSet part = edge_subset(c);
      if (part.intersects(covered)) syntax_error(c.line, c.column, "components overlap");
      covered |= part;
      doc.graph.components.push_back(part);
    }
    if (covered != d.edges()) syntax_error(components.front().line, 1, "components must cover every edge");
  }
  const int slots = d.slot_count();
  for (const auto& c : certs) {
    if (c.values.size() != 2) syntax_error(c.line, c.column, "a certificate needs two gap indices");
    Certificate cut{parse_int(c.values[0], c.line), parse_int(c.values[1], c.line)};
    for (int k = 0; k < 2; ++k) {
      const int g = k == 0 ? cut.cut_a : cut.cut_b;
      if (g >= std::max(slots, 1)) {
        syntax_error(c.line, c.values[k].column, "gap index out of range");
      }
    }
    const std::string name = c.argument ? c.argument->text : std::string();
    if (doc.certificate(name)) syntax_error(c.line, c.column, "repeated certificate name");
    doc.certificates.push_back(NamedCertificate{name, cut});
  }
  return doc;
}

std::string serialize_bqt(const BouquetDocument& doc) {
  const ChordDiagram& d = doc.graph.base;
  std::string out;
  if (!doc.name.empty()) out += "bouquet " + doc.name + "\n";
  std::vector<std::string> word;
  for (int e : d.word()) word.push_back(d.label(e));
  out += key_line("word", word);
  out += key_line("twisted", d.names(d.twisted()));
  if (!first_occurrence_order(d)) out += key_line("edges", d.labels());
  if (!doc.graph.anchor.empty()) out += key_line("anchor", d.names(doc.graph.anchor));
  for (EdgeSet c : doc.graph.components) out += key_line("component", d.names(c));
  for (const auto& c : doc.certificates) {
    out += c.name.empty() ? std::string("cert") : "cert " + c.name;
    out += ": " + std::to_string(c.cut.cut_a) + " " + std::to_string(c.cut.cut_b) + "\n";
  }
  return out;
}

BouquetDocument canonical_document(const BouquetDocument& doc) {
  const ChordDiagram& d = doc.graph.base;
  const ChordDiagram canon = canonicalize(d, true);
  BouquetDocument out;
  out.name = doc.name;
  out.graph.base = canon;
  auto carry = [&](EdgeSet s) { return canon.subset(d.names(s)); };
  out.graph.anchor = carry(doc.graph.anchor);
  for (EdgeSet c : doc.graph.components) out.graph.components.push_back(carry(c));
  const int slots = d.slot_count();
  if (doc.certificates.empty() || slots == 0) {
    out.certificates = doc.certificates;
    return out;
  }
  const ChordDiagram relabeled = reorder_edges(d, canon.labels());
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < slots; ++shift) {
      if (rotate_word(relabeled, shift, reflect != 0).word() != canon.word()) continue;
      for (const auto& c : doc.certificates) {
        out.certificates.push_back(NamedCertificate{c.name, move_certificate(c.cut, slots, shift, reflect != 0)});
      }
      return out;
    }
  }
  throw Error(ErrorKind::kOracleDisagreement, "canonical word is not a rotation or reflection of the input");
}

std::string to_bqt(const AnchoredRibbon& g, std::string_view name) {
  BouquetDocument doc;
  doc.name = std::string(name);
  doc.graph = g;
  return serialize_bqt(canonical_document(doc));
}

RotationSystem parse_rgs(std::string_view text) {
  RotationSystem rs;
  bool seen_twisted = false;
  for (const auto& e : scan(text)) {
    if (e.key == "vertex") {
      reject_argument(e);
      rs.vertices.push_back(texts(e.values));
    } else if (e.key == "edge") {
      if (!e.argument) syntax_error(e.line, e.column, "expected 'edge NAME: h_a h_b'");
      if (e.values.size() != 2) syntax_error(e.line, e.column, "an edge needs exactly two half-edges");
      rs.edges.push_back(RotationEdge{e.argument->text, {e.values[0].text, e.values[1].text}});
    } else if (e.key == "twisted") {
      reject_argument(e);
      if (seen_twisted) syntax_error(e.line, e.column, "repeated key 'twisted'");
      seen_twisted = true;
      rs.twisted = texts(e.values);
    } else {
      syntax_error(e.line, e.column, e.key.empty() ? "expected a 'key:' line" : "unknown key '" + e.key + "'");
    }
  }
  validate(rs);
  return rs;
}

std::string serialize_rgs(const RotationSystem& rs) {
  std::string out;
  for (const auto& v : rs.vertices) out += key_line("vertex", v);
  for (const auto& e : rs.edges) out += "edge " + e.label + ": " + e.half_edges[0] + " " + e.half_edges[1] + "\n";
  out += key_line("twisted", rs.twisted);
  return out;
}

SetSystem parse_dsys(std::string_view text) {
  std::optional<std::vector<std::string>> ground;
  std::vector<EdgeSet> sets;
  for (const auto& e : scan(text)) {
    if (e.key == "ground") {
      reject_argument(e);
      if (ground) syntax_error(e.line, e.column, "repeated key 'ground'");
      ground = texts(e.values);
      if (ground->size() > EdgeSet::kCapacity) syntax_error(e.line, e.column, "ground set exceeds 64 elements");
    } else if (e.key == "set") {
      reject_argument(e);
      if (!ground) syntax_error(e.line, e.column, "'set:' before 'ground:'");
      EdgeSet b;
      for (const auto& t : e.values) {
        auto it = std::find(ground->begin(), ground->end(), t.text);
        if (it == ground->end()) {
          throw Error(ErrorKind::kUnknownElement, "line " + std::to_string(e.line) + ", column " +
                                                      std::to_string(t.column) + ": " + t.text + " is not in the ground set");
        }
        b = b.with(static_cast<int>(it - ground->begin()));
      }
      sets.push_back(b);
    } else {
      syntax_error(e.line, e.column, e.key.empty() ? "expected a 'key:' line" : "unknown key '" + e.key + "'");
    }
  }
  if (!ground) syntax_error(1, 1, "missing 'ground:' line");
  return SetSystem(*ground, std::move(sets));
}

std::string serialize_dsys(const SetSystem& s) {
  std::string out = key_line("ground", s.ground());
  for (EdgeSet b : s.feasible()) out += key_line("set", s.names(b));
  return out;
}

MatrixDocument parse_matrix(std::string_view text) {
  MatrixDocument doc;
  std::optional<Ring> declared;
  std::optional<std::vector<std::string>> index;
  std::vector<mpq_class> entries;
  int rows_read = 0;
  for (const auto& e : scan(text)) {
    if (e.key == "ring") {
      reject_argument(e);
      if (declared || index) syntax_error(e.line, e.column, "'ring:' must come once, before 'rows:'");
      if (e.values.size() != 1) syntax_error(e.line, e.column, "expected one ring name");
      const auto& name = e.values[0].text;
      if (name == "integer") declared = Ring::kInteger;
      else if (name == "rational") declared = Ring::kRational;
      else if (name == "gf2") declared = Ring::kGF2;
      else syntax_error(e.line, e.values[0].column, "unknown ring '" + name + "'");
    } else if (e.key == "rows") {
      reject_argument(e);
      if (index) syntax_error(e.line, e.column, "repeated key 'rows'");
      index = texts(e.values);
    } else if (e.key.empty()) {
      if (!index) syntax_error(e.line, e.column, "matrix row before 'rows:'");
      if (e.values.size() != index->size()) {
        syntax_error(e.line, e.column, "row has " + std::to_string(e.values.size()) + " entries, expected " +
                                           std::to_string(index->size()));
      }
      if (rows_read == static_cast<int>(index->size())) syntax_error(e.line, e.column, "too many rows");
      for (const auto& t : e.values) entries.push_back(parse_rational(t, e.line));
      ++rows_read;
    } else {
      syntax_error(e.line, e.column, "unknown key '" + e.key + "'");
    }
  }
  if (!index) syntax_error(1, 1, "missing 'rows:' line");
  if (rows_read != static_cast<int>(index->size())) {
    syntax_error(1, 1, "expected " + std::to_string(index->size()) + " rows, found " + std::to_string(rows_read));
  }
  const bool integral = std::all_of(entries.begin(), entries.end(), [](const mpq_class& v) { return v.get_den() == 1; });
  doc.ring = declared.value_or(integral ? Ring::kInteger : Ring::kRational);
  if (doc.ring == Ring::kInteger && !integral) syntax_error(1, 1, "fractional entry in an integer matrix");
  if (doc.ring == Ring::kGF2) {
    for (const auto& v : entries) {
      if (v != 0 && v != 1) syntax_error(1, 1, "GF(2) entries must be 0 or 1");
    }
  }
  doc.values = RatMatrix(*index, std::move(entries));
  return doc;
}

std::string serialize_matrix(const IntMatrix& m) {
  std::string out = key_line("rows", m.index());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_matrix(const RatMatrix& m) {
  std::string out = "ring: rational\n" + key_line("rows", m.index());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += rational_text(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string serialize_matrix(const GF2Matrix& m) {
  std::string out = "ring: gf2\n" + key_line("rows", m.index());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      if (j > 0) out += ' ';
      out += m.get(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

IntPolynomial parse_poly(std::string_view text) {
  std::optional<std::vector<mpz_class>> coefficients;
  for (const auto& e : scan(text)) {
    if (e.key != "poly") {
      syntax_error(e.line, e.column, e.key.empty() ? "expected 'poly: c0 c1 ...'" : "unknown key '" + e.key + "'");
    }
    reject_argument(e);
    if (coefficients) syntax_error(e.line, e.column, "repeated key 'poly'");
    coefficients.emplace();
    for (const auto& t : e.values) {
      if (!is_integer_text(t.text)) syntax_error(e.line, t.column, "expected an integer, found '" + t.text + "'");
      coefficients->emplace_back(t.text.front() == '+' ? t.text.substr(1) : t.text, 10);
    }
  }
  if (!coefficients) syntax_error(1, 1, "missing 'poly:' line");
  return IntPolynomial(std::move(*coefficients));
}

std::string serialize_poly(const IntPolynomial& p) {
  std::vector<std::string> items;
  for (const auto& c : p.coefficients()) items.push_back(c.get_str());
  return key_line("poly", items);
}

std::uint64_t content_checksum(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](char c) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view content = strip_comment(line);
    while (!content.empty() && std::isspace(static_cast<unsigned char>(content.front()))) content.remove_prefix(1);
    while (!content.empty() && std::isspace(static_cast<unsigned char>(content.back()))) content.remove_suffix(1);
    if (content.empty()) continue;
    for (char c : content) feed(c);
    feed('\n');
  }
  return hash;
}

std::string checksum_hex(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

std::optional<std::uint64_t> recorded_checksum(std::string_view text) {
  constexpr std::string_view kMarker = "# checksum:";
  const auto at = text.find(kMarker);
  if (at == std::string_view::npos) return std::nullopt;
  auto rest = text.substr(at + kMarker.size());
  rest = rest.substr(0, rest.find('\n'));
  const auto tokens = tokenize(rest, 1);
  if (tokens.size() != 1) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto value = std::stoull(tokens[0].text, &used, 16);
    if (used != tokens[0].text.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ribbonkit
