#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonkit/acceptance.hpp"
#include "ribbonkit/analysis.hpp"
#include "ribbonkit/corpus.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/exact_la.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/interlace.hpp"
#include "ribbonkit/pseudo.hpp"
#include "ribbonkit/rotation.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace ribbonkit;

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 1;
constexpr int kExitNegative = 3;

enum class Format { kDefault, kJson, kTsv };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool has_keyword_line(const std::string& text, std::string_view keyword) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t");
    if (start != std::string::npos && line.compare(start, keyword.size(), keyword) == 0) return true;
  }
  return false;
}

// A .bqt document, or a rotation system presented on a spanning forest.
BouquetDocument load_graph(const std::string& path) {
  const std::string text = read_input(path);
  if (has_keyword_line(text, "vertex")) {
    BouquetDocument doc;
    doc.graph = rotation_to_anchored(parse_rgs(text));
    return doc;
  }
  return parse_bqt(text);
}

ChordDiagram as_bouquet(const AnchoredRibbon& g) {
  if (!g.components.empty()) throw Error(ErrorKind::kDisconnectedInput, "the input ribbon graph is disconnected");
  if (g.anchor.empty()) return g.base;
  if (!is_quasi_tree(g.base, g.anchor)) {
    throw Error(ErrorKind::kInvalidParams, "the input ribbon graph has more than one vertex");
  }
  return partial_dual(g.base, g.anchor);
}

Certificate resolve_certificate(const BouquetDocument& doc, const ChordDiagram& d,
                                const std::vector<std::string>& cert) {
  if (cert.size() == 2) return Certificate{std::stoi(cert[0]), std::stoi(cert[1])};
  const bool plain = doc.graph.anchor.empty();
  if (cert.size() == 1) {
    if (auto named = doc.certificate(cert[0]); named && plain) return *named;
    throw Error(ErrorKind::kInvalidCertificate, "no certificate named " + cert[0]);
  }
  if (auto unnamed = doc.certificate(""); unnamed && plain) return *unnamed;
  if (auto found = find_certificate(d)) return *found;
  throw Error(ErrorKind::kNotPseudoOrientable, "the bouquet has no certificate");
}

Json names_json(const std::vector<std::string>& names) { return Json(names); }

Json big(const mpz_class& v) { return v.get_str(); }
Json big(const mpq_class& v) { return v.get_str(); }

Json big_list(const std::vector<mpz_class>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::string tsv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += " ";
      if (v[i].is_array()) {
        std::string inner;
        for (std::size_t j = 0; j < v[i].size(); ++j) inner += (j ? "," : "") + tsv_cell(v[i][j]);
        out += "{" + inner + "}";
      } else {
        out += tsv_cell(v[i]);
      }
    }
    return out;
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

void emit(const Json& report, Format format) {
  if (format == Format::kTsv) {
    for (const auto& [key, value] : report.items()) std::cout << key << '\t' << tsv_cell(value) << '\n';
  } else {
    std::cout << report.dump() << '\n';
  }
}

Json certificate_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  return Json::array({c->cut_a, c->cut_b});
}

struct Options {
  Format format = Format::kDefault;
  std::string input;
  std::string second_input;
  std::string hat = "hat";
  std::string kind = "m2";
  std::vector<std::string> cert;
  std::vector<std::string> eval;
  std::vector<std::string> anchor;
  std::vector<std::string> at;
  bool anchor_given = false;
  std::string mode = "ulc";
  bool raw = false;
  int n = 5;
  std::string family = "cn";
  std::string fixture;
  std::string filter;
  bool count_only = false;
};

int cmd_quasitrees(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const auto trees = quasi_trees(doc.graph);
  Json report;
  report["count"] = trees.size();
  if (!o.count_only) {
    Json list = Json::array();
    for (EdgeSet q : trees) list.push_back(names_json(doc.graph.base.names(q)));
    report["quasi_trees"] = list;
  }
  emit(report, o.format);
  return 0;
}

int cmd_check_pseudo(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const PseudoReport r = is_pseudo_orientable(doc.graph, o.hat);
  Json report;
  report["pseudo"] = r.pseudo;
  report["certificate"] = certificate_json(r.certificate);
  report["anchor_used"] = names_json(doc.graph.base.names(r.anchor_used));
  report["adjusted"] = r.adjusted ? Json(to_bqt(*r.adjusted)) : Json(nullptr);
  emit(report, o.format);
  return 0;
}

int cmd_adjust(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const ChordDiagram d = as_bouquet(doc.graph);
  const Certificate c = resolve_certificate(doc, d, o.cert);
  const std::string name = doc.name.empty() ? std::string() : doc.name + "-adjusted";
  std::cout << to_bqt(anchored(adjust(d, c, o.hat)), name);
  return 0;
}

int cmd_matrix(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const ChordDiagram d = as_bouquet(doc.graph);
  if (o.kind == "m2") {
    std::cout << serialize_matrix(m2(d));
  } else if (o.kind == "mpm") {
    std::cout << serialize_matrix(mpm(d));
  } else {
    std::cout << serialize_matrix(adjusted_matrix(d, resolve_certificate(doc, d, o.cert)));
  }
  return 0;
}

int cmd_verify_detect(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const ChordDiagram d = as_bouquet(doc.graph);
  const MatrixDocument m = parse_matrix(read_input(o.second_input));
  const DetectionReport r = verify_detection(d, m.values);
  Json report;
  report["detects"] = r.detects;
  report["pu"] = is_pu(m.values);
  report["identity_plus_det"] = big(r.identity_plus_det);
  report["quasi_tree_count"] = r.quasi_tree_count;
  report["witness"] = r.witness ? names_json(d.names(*r.witness)) : Json(nullptr);
  emit(report, o.format);
  return r.detects ? 0 : kExitNegative;
}

std::map<std::string, mpq_class> parse_point(const std::vector<std::string>& assignments) {
  std::map<std::string, mpq_class> point;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--eval expects LABEL=VALUE, got " + a);
    mpq_class value;
    if (value.set_str(a.substr(eq + 1), 10) != 0) throw CLI::ValidationError("not a rational value: " + a);
    value.canonicalize();
    point[a.substr(0, eq)] = value;
  }
  return point;
}

int cmd_poly(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const IntPolynomial p = qt_poly(doc.graph);
  if (o.format == Format::kDefault && o.eval.empty()) {
    std::cout << serialize_poly(p);
    return 0;
  }
  Json report;
  report["coefficients"] = big_list(p.coefficients());
  if (!o.eval.empty()) report["value"] = big(qt_poly_eval(doc.graph, parse_point(o.eval)));
  emit(report, o.format);
  return 0;
}

int cmd_stability(const Options& o) {
  const std::string text = read_input(o.input);
  const IntPolynomial p = has_keyword_line(text, "poly:") ? parse_poly(text) : qt_poly(parse_bqt(text).graph);
  const StabilityReport r = stability_report(p);
  Json report;
  report["stable"] = r.stable;
  report["rhp_count"] = r.rhp_count;
  if (r.witness_root) {
    std::ostringstream re;
    std::ostringstream im;
    re << std::setprecision(17) << r.witness_root->real();
    im << std::setprecision(17) << r.witness_root->imag();
    report["witness_root"] = Json{{"diagnostic", true}, {"re", re.str()}, {"im", im.str()}};
  } else {
    report["witness_root"] = nullptr;
  }
  emit(report, o.format);
  return r.stable ? 0 : kExitNegative;
}

int cmd_logconcavity(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const EdgeSet anchor = o.anchor_given ? doc.graph.base.subset(o.anchor) : doc.graph.anchor;
  const CountSequence s = q_sequence(doc.graph, anchor);
  const ConcavityVerdict v = check_log_concavity(s, o.mode == "lc" ? ConcavityMode::kLC : ConcavityMode::kULC);
  Json report;
  report["anchor"] = names_json(doc.graph.base.names(anchor));
  report["sequence"] = big_list(s.values);
  report["offset"] = s.offset;
  report["mode"] = o.mode;
  report["passes"] = v.passes();
  report["internal_zero"] = v.internal_zero;
  report["first_failure"] = v.first_failure ? Json(*v.first_failure) : Json(nullptr);
  emit(report, o.format);
  return v.passes() ? 0 : kExitNegative;
}

int cmd_lift(const Options& o) {
  const SetSystem s = parse_dsys(read_input(o.input));
  std::cout << serialize_dsys(lift(s, o.hat).inner);
  return 0;
}

int cmd_snf(const Options& o) {
  const MatrixDocument m = parse_matrix(read_input(o.input));
  const auto integral = to_integer(m.values);
  if (!integral) throw Error(ErrorKind::kInvalidParams, "Smith normal form needs an integer matrix");
  const IntMatrix target = o.raw ? *integral : identity_plus(*integral);
  const SnfResult r = smith_normal_form(target);
  Json report;
  report["matrix"] = o.raw ? "M" : "I+M";
  report["diagonal"] = big_list(r.diagonal);
  report["determinant"] = big(det(target));
  emit(report, o.format);
  return 0;
}

int cmd_dual(const Options& o) {
  const BouquetDocument doc = load_graph(o.input);
  const EdgeSet x = doc.graph.base.subset(o.at);
  AnchoredRibbon result = dual_of(doc.graph, x);
  if (result.components.empty() && is_quasi_tree(result.base, result.anchor)) {
    result = anchored(partial_dual(result.base, result.anchor));
  }
  std::cout << to_bqt(result, doc.name);
  return 0;
}

int cmd_family(const Options& o) {
  std::cout << to_bqt(anchored(make_cn(o.n)), "cn-" + std::to_string(o.n));
  return 0;
}

int cmd_fixture(const Options& o) {
  if (o.fixture == "list") {
    for (const auto& info : fixture_catalog()) {
      Json row;
      row["name"] = info.name;
      row["kind"] = info.kind == FixtureKind::kBouquet ? "bouquet" : "set-system";
      row["description"] = info.description;
      if (o.format == Format::kTsv) {
        std::cout << info.name << '\t' << row["kind"].get<std::string>() << '\t' << info.description << '\n';
      } else {
        std::cout << row.dump() << '\n';
      }
    }
    return 0;
  }
  std::cout << fixture_info(o.fixture).source;
  return 0;
}

int cmd_verify_paper(const Options& o) {
  const auto results = run_acceptance(o.filter);
  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    if (o.format == Format::kJson) {
      Json row;
      row["id"] = r.id;
      row["key"] = r.key;
      row["passed"] = r.passed;
      row["title"] = r.title;
      row["detail"] = r.detail;
      std::cout << row.dump() << '\n';
    } else if (o.format == Format::kTsv) {
      std::cout << r.id << '\t' << r.key << '\t' << (r.passed ? "pass" : "fail") << '\t' << r.title << '\t'
                << r.detail << '\n';
    } else {
      std::printf("%s %2d  %-22s %s\n      %s\n", r.passed ? "[PASS]" : "[FAIL]", r.id, r.key.c_str(),
                  r.title.c_str(), r.detail.c_str());
    }
  }
  if (o.format == Format::kDefault) {
    std::printf("%zu checks, %d failed\n", results.size(), failed);
  }
  return failed == 0 ? 0 : kExitFailure;
}

void report_error(std::string_view kind, const std::string& message) {
  Json err;
  err["error"] = kind;
  err["message"] = message;
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbonkit: quasi-trees, pseudo-orientable bouquets and interlacing matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format_name;
  app.add_option("--format", format_name, "Report format")->check(CLI::IsMember({"json", "tsv"}));

  auto input = [&](CLI::App* sub, const char* what = "Input file, or - for stdin") {
    sub->add_option("file", o.input, what)->required();
  };
  auto hat = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--hat", o.hat, "Label of the added loop");
    if (required) opt->required();
  };
  auto cert = [&](CLI::App* sub) {
    sub->add_option("--cert", o.cert, "Certificate as two cuts, or the name of a stored certificate")
        ->expected(1, 2);
  };

  auto* quasitrees = app.add_subcommand("quasitrees", "List the quasi-trees of a ribbon graph");
  input(quasitrees);
  quasitrees->add_flag("--count", o.count_only, "Only report the count");

  auto* check_pseudo = app.add_subcommand("check-pseudo", "Search for a certificate of pseudo-orientability");
  input(check_pseudo);
  hat(check_pseudo, false);

  auto* adjust_cmd = app.add_subcommand("adjust", "Adjust a pseudo-orientable bouquet at a certificate");
  input(adjust_cmd);
  hat(adjust_cmd, true);
  cert(adjust_cmd);

  auto* matrix = app.add_subcommand("matrix", "Interlacing matrix of a bouquet");
  input(matrix);
  matrix->add_option("--kind", o.kind, "m2, mpm or adjusted")->check(CLI::IsMember({"m2", "mpm", "adjusted"}));
  cert(matrix);

  auto* verify_detect = app.add_subcommand("verify-detect", "Check that a matrix detects the quasi-trees");
  input(verify_detect, "Bouquet file, or - for stdin");
  verify_detect->add_option("matrix", o.second_input, "Matrix file")->required();

  auto* poly = app.add_subcommand("poly", "Quasi-tree generating polynomial");
  input(poly);
  poly->add_option("--eval", o.eval, "Evaluate the multivariate polynomial at LABEL=VALUE ...");

  auto* stability = app.add_subcommand("stability", "Exact Hurwitz stability test");
  input(stability, "Polynomial or bouquet file, or - for stdin");

  auto* logconcavity = app.add_subcommand("logconcavity", "Log-concavity of the quasi-tree distance sequence");
  input(logconcavity);
  logconcavity->add_option("--anchor", o.anchor, "Reference quasi-tree (default: the stored anchor)")
      ->expected(0, -1)
      ->each([&](const std::string&) { o.anchor_given = true; })
      ->trigger_on_parse();
  logconcavity->add_option("--mode", o.mode, "ulc or lc")->check(CLI::IsMember({"ulc", "lc"}));

  auto* lift_cmd = app.add_subcommand("lift", "Lift of a set system");
  input(lift_cmd, "Set system file, or - for stdin");
  hat(lift_cmd, true);

  auto* snf = app.add_subcommand("snf", "Smith normal form of I+M for a matrix M");
  input(snf, "Matrix file, or - for stdin");
  snf->add_flag("--raw", o.raw, "Use M itself instead of I+M");

  auto* dual = app.add_subcommand("dual", "Partial dual at a set of edges");
  input(dual);
  dual->add_option("--at", o.at, "Edge labels")->expected(0, -1)->required();

  auto* family = app.add_subcommand("family", "Generate a bouquet family member");
  family->add_option("name", o.family, "Family name")->check(CLI::IsMember({"cn"}))->required();
  family->add_option("--n", o.n, "Number of loops")->required();

  auto* fixture_cmd = app.add_subcommand("fixture", "Print a shipped fixture, or `list`");
  fixture_cmd->add_option("name", o.fixture, "Fixture name or list")->required();

  auto* verify_paper = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify_paper->add_option("--filter", o.filter, "Run checks whose id, key or title matches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (format_name == "json") o.format = Format::kJson;
  if (format_name == "tsv") o.format = Format::kTsv;

  const std::vector<std::pair<CLI::App*, int (*)(const Options&)>> handlers = {
      {quasitrees, cmd_quasitrees},       {check_pseudo, cmd_check_pseudo}, {adjust_cmd, cmd_adjust},
      {matrix, cmd_matrix},               {verify_detect, cmd_verify_detect}, {poly, cmd_poly},
      {stability, cmd_stability},         {logconcavity, cmd_logconcavity}, {lift_cmd, cmd_lift},
      {snf, cmd_snf},                     {dual, cmd_dual},                 {family, cmd_family},
      {fixture_cmd, cmd_fixture},         {verify_paper, cmd_verify_paper},
  };
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    report_error(e.name(), e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    report_error("InternalError", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
