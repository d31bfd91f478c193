#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/pseudo.hpp"

using namespace ribbonkit;

namespace {

// The message of the error thrown by f, which must be of the given kind.
std::string failure(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
    return e.what();
  }
  FAIL("no error thrown");
  return {};
}

}  // namespace

TEST_CASE("bouquet documents round-trip") {
  std::mt19937 gen(81);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 7;
    BouquetDocument doc;
    doc.name = "r" + std::to_string(trial);
    doc.graph = anchored(oracle::random_diagram(gen, n, 0.5), EdgeSet(gen() % (std::uint64_t{1} << n)));
    if (trial % 3 == 0) doc.graph.components = {doc.graph.base.edges()};
    if (auto c = find_certificate(doc.graph.base)) doc.certificates.push_back({trial % 2 ? "S" : "", *c});
    const std::string text = serialize_bqt(doc);
    const BouquetDocument back = parse_bqt(text);
    REQUIRE(back.name == doc.name);
    REQUIRE(back.graph == doc.graph);
    REQUIRE(back.certificates.size() == doc.certificates.size());
    REQUIRE(serialize_bqt(back) == text);
  }
}

TEST_CASE("edge order survives serialization") {
  const BouquetDocument doc = parse_bqt("word: a b a b c c\nedges: c b a\n");
  CHECK(doc.graph.base.labels() == std::vector<std::string>{"c", "b", "a"});
  CHECK(serialize_bqt(doc).find("edges: c b a") != std::string::npos);
  CHECK(parse_bqt(serialize_bqt(doc)).graph.base == doc.graph.base);
}

TEST_CASE("comments and blank lines are ignored") {
  const BouquetDocument doc = parse_bqt("# heading\n\nbouquet x  # trailing\nword: 1 1   \ntwisted: 1\n");
  CHECK(doc.name == "x");
  CHECK(doc.graph.base.twisted() == EdgeSet::single(0));
}

TEST_CASE("syntax errors report line and column") {
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_bqt("bouquet a\nword: 1 1\nfoo: 2\n"); })
            .starts_with("line 3, column 1:"));
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_bqt("word: 1 1\ncert: 0 x\n"); })
            .starts_with("line 2, column 9:"));
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_bqt("word: 1 1\ncert: 0 7\n"); })
            .starts_with("line 2, column 9:"));
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_bqt("twisted: 1\n"); }).find("word") != std::string::npos);
  failure(ErrorKind::kSyntaxError, [] { parse_bqt("word: 1 1\nword: 1 1\n"); });
  failure(ErrorKind::kSyntaxError, [] { parse_bqt("word: 1 1 2 2\ncomponent: 1\n"); });
  failure(ErrorKind::kSyntaxError, [] { parse_bqt("word: 1 1\nedges: 1 1\n"); });
  failure(ErrorKind::kMalformedWord, [] { parse_bqt("word: 1 2 1\n"); });
  failure(ErrorKind::kUnknownTwistLabel, [] { parse_bqt("word: 1 1\ntwisted: 2\n"); });
  CHECK(failure(ErrorKind::kUnknownEdge, [] { parse_bqt("word: 1 1\nanchor: 9\n"); })
            .starts_with("line 2, column 9:"));
}

TEST_CASE("canonical documents ignore rotation and reflection") {
  std::mt19937 gen(82);
  for (int trial = 0; trial < 60; ++trial) {
    const ChordDiagram d = random_pseudo(trial, 2 + trial % 6);
    BouquetDocument doc;
    doc.graph = anchored(d);
    doc.certificates.push_back({"", *find_certificate(d)});
    const int shift = static_cast<int>(gen() % d.slot_count());
    const bool reflect = gen() % 2 == 1;
    BouquetDocument moved;
    moved.graph = anchored(rotate_word(d, shift, reflect));
    const BouquetDocument canon = canonical_document(doc);
    REQUIRE(canonical_document(moved).graph == canon.graph);
    REQUIRE(is_valid_certificate(canon.graph.base, canon.certificates.front().cut));
    REQUIRE(to_bqt(doc.graph) == to_bqt(moved.graph));
  }
}

TEST_CASE("set systems round-trip") {
  const SetSystem s = fixture_system("fig1-delta");
  CHECK(parse_dsys(serialize_dsys(s)) == s);
  CHECK(s.feasible().size() == 4);
  failure(ErrorKind::kSyntaxError, [] { parse_dsys("set: 1\n"); });
  CHECK(failure(ErrorKind::kUnknownElement, [] { parse_dsys("ground: a b\nset: a c\n"); })
            .starts_with("line 2, column 8:"));
}

TEST_CASE("rotation systems round-trip") {
  const std::string text = "vertex: a1 b1\nvertex: a2 b2\nedge a: a1 a2\nedge b: b1 b2\ntwisted: b\n";
  const RotationSystem rs = parse_rgs(text);
  CHECK(rs.vertices.size() == 2);
  CHECK(rs.twisted == std::vector<std::string>{"b"});
  CHECK(serialize_rgs(rs) == text);
  failure(ErrorKind::kSyntaxError, [] { parse_rgs("edge: a1 a2\n"); });
}

TEST_CASE("matrix documents infer their ring") {
  const MatrixDocument plain = parse_matrix("rows: 1 2\n1 -1\n1 0\n");
  CHECK(plain.ring == Ring::kInteger);
  CHECK(plain.values(0, 1) == -1);
  const MatrixDocument frac = parse_matrix("rows: x\n3/6\n");
  CHECK(frac.ring == Ring::kRational);
  CHECK(frac.values(0, 0) == mpq_class(1, 2));
  CHECK(parse_matrix("ring: gf2\nrows: 1\n1\n").ring == Ring::kGF2);
  CHECK(parse_matrix("ring: rational\nrows: 1\n2\n").ring == Ring::kRational);
  failure(ErrorKind::kSyntaxError, [] { parse_matrix("ring: integer\nrows: 1\n1/2\n"); });
  failure(ErrorKind::kSyntaxError, [] { parse_matrix("ring: gf2\nrows: 1\n2\n"); });
  failure(ErrorKind::kSyntaxError, [] { parse_matrix("rows: 1 2\n1 0\n"); });
  failure(ErrorKind::kSyntaxError, [] { parse_matrix("rows: 1\n1/0\n"); });
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_matrix("rows: 1 2\n1 0 0\n0 1\n"); })
            .starts_with("line 2"));

  IntMatrix m({"a", "b"});
  m(0, 1) = 5;
  m(1, 0) = -5;
  const MatrixDocument back = parse_matrix(serialize_matrix(m));
  CHECK(back.values.index() == m.index());
  CHECK(back.values(1, 0) == -5);
  RatMatrix r({"a"});
  r(0, 0) = mpq_class(-2, 3);
  CHECK(parse_matrix(serialize_matrix(r)).values(0, 0) == mpq_class(-2, 3));
  GF2Matrix g({"a", "b"});
  g.set(0, 1, true);
  const MatrixDocument gb = parse_matrix(serialize_matrix(g));
  CHECK(gb.ring == Ring::kGF2);
  CHECK(gb.values(0, 1) == 1);
  CHECK(gb.values(1, 0) == 0);
}

TEST_CASE("polynomial documents") {
  const IntPolynomial p = parse_poly("poly: 1 -2 0 30000000000000000000\n");
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(3) == mpz_class("30000000000000000000"));
  CHECK(parse_poly(serialize_poly(p)) == p);
  CHECK(parse_poly("poly: 0 0\n").is_zero());
  CHECK(serialize_poly(IntPolynomial(std::vector<mpz_class>{1, 1, 2})) == "poly: 1 1 2\n");
  CHECK(failure(ErrorKind::kSyntaxError, [] { parse_poly("poly: 1 x\n"); }).starts_with("line 1, column 9:"));
  failure(ErrorKind::kSyntaxError, [] { parse_poly("\n"); });
}

TEST_CASE("checksums cover content only") {
  const std::string a = "word: 1 1\n";
  const std::string b = "# note\n  word: 1 1   # trailing\n\n";
  CHECK(content_checksum(a) == content_checksum(b));
  CHECK(content_checksum(a) != content_checksum("word: 1 2 1 2\n"));
  CHECK(checksum_hex(0xabcULL) == "0000000000000abc");
  CHECK(recorded_checksum("# checksum: 0000000000000abc\nword: 1 1\n") == 0xabcULL);
  CHECK_FALSE(recorded_checksum(a).has_value());
}
