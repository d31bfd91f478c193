#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "ribbonkit/duality.hpp"
#include "ribbonkit/error.hpp"
#include "ribbonkit/formats.hpp"
#include "ribbonkit/rotation.hpp"

using namespace ribbonkit;

namespace {

// Face tracing on a signed rotation system restricted to the kept edges. A state is a dart
// with a direction; crossing an edge flips the direction when the edge is twisted, then the
// walk turns to the neighbouring dart in the current direction. Every face is met twice.
int trace_faces(const RotationSystem& rs, std::uint64_t kept) {
  std::map<std::string, int> edge_of;
  std::map<std::string, std::string> partner;
  for (std::size_t e = 0; e < rs.edges.size(); ++e) {
    const auto& [a, b] = rs.edges[e].half_edges;
    edge_of[a] = edge_of[b] = static_cast<int>(e);
    partner[a] = b;
    partner[b] = a;
  }
  std::set<std::string> twisted(rs.twisted.begin(), rs.twisted.end());
  std::vector<std::vector<std::string>> rotation;
  std::map<std::string, std::pair<int, int>> where;
  int isolated = 0;
  for (const auto& vertex : rs.vertices) {
    std::vector<std::string> darts;
    for (const auto& h : vertex) {
      if ((kept >> edge_of.at(h)) & 1U) darts.push_back(h);
    }
    if (darts.empty()) ++isolated;
    for (std::size_t i = 0; i < darts.size(); ++i) {
      where[darts[i]] = {static_cast<int>(rotation.size()), static_cast<int>(i)};
    }
    rotation.push_back(darts);
  }
  std::set<std::pair<std::string, int>> seen;
  int orbits = 0;
  for (const auto& [dart, place] : where) {
    for (int dir : {1, -1}) {
      if (seen.count({dart, dir})) continue;
      ++orbits;
      std::string d = dart;
      int s = dir;
      while (!seen.count({d, s})) {
        seen.insert({d, s});
        const std::string across = partner.at(d);
        if (twisted.count(rs.edges[edge_of.at(d)].label)) s = -s;
        const auto [v, i] = where.at(across);
        const int k = static_cast<int>(rotation[v].size());
        d = rotation[v][((i + s) % k + k) % k];
      }
    }
  }
  return orbits / 2 + isolated;
}

RotationSystem random_rotation(std::mt19937& gen, int vertices, int edges) {
  RotationSystem rs;
  rs.vertices.resize(vertices);
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  std::bernoulli_distribution coin(0.3);
  for (int e = 0; e < edges; ++e) {
    const std::string label = "e" + std::to_string(e);
    const std::string a = label + "a";
    const std::string b = label + "b";
    rs.edges.push_back(RotationEdge{label, {a, b}});
    rs.vertices[pick(gen)].push_back(a);
    rs.vertices[pick(gen)].push_back(b);
    if (coin(gen)) rs.twisted.push_back(label);
  }
  for (auto& v : rs.vertices) std::shuffle(v.begin(), v.end(), gen);
  return rs;
}

}  // namespace

TEST_CASE("planar and toroidal examples") {
  RotationSystem theta;
  theta.vertices = {{"a1", "b1", "c1"}, {"a2", "c2", "b2"}};
  theta.edges = {{"a", {"a1", "a2"}}, {"b", {"b1", "b2"}}, {"c", {"c1", "c2"}}};
  validate(theta);
  CHECK(connected_components(theta) == 1);
  CHECK(boundary_count(theta, EdgeSet::first(3)) == 3);
  CHECK(boundary_count(theta, EdgeSet{}) == 2);

  RotationSystem torus;
  torus.vertices = {{"x1", "y1", "x2", "y2"}};
  torus.edges = {{"x", {"x1", "x2"}}, {"y", {"y1", "y2"}}};
  CHECK(boundary_count(torus, EdgeSet::first(2)) == 1);
  torus.twisted = {"x"};
  CHECK(boundary_count(torus, EdgeSet::first(2)) == trace_faces(torus, 3));
}

TEST_CASE("malformed rotation systems are rejected") {
  RotationSystem rs;
  rs.vertices = {{"a1", "a1"}};
  rs.edges = {{"a", {"a1", "a2"}}};
  CHECK_THROWS_AS(validate(rs), Error);
  rs.vertices = {{"a1", "a2"}};
  rs.twisted = {"b"};
  CHECK_THROWS_AS(validate(rs), Error);
}

TEST_CASE("boundary counts agree with direct face tracing") {
  std::mt19937 gen(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int vertices = 1 + trial % 4;
    const int edges = 1 + trial % 6;
    const RotationSystem rs = random_rotation(gen, vertices, edges);
    for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << edges); ++kept) {
      REQUIRE(boundary_count(rs, EdgeSet(kept)) == trace_faces(rs, kept));
    }
  }
}

TEST_CASE("bouquet presentations keep the Delta-matroid") {
  std::mt19937 gen(43);
  int disconnected = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const RotationSystem rs = random_rotation(gen, 1 + trial % 4, 1 + trial % 6);
    const SetSystem direct = rotation_delta_matroid(rs);
    const AnchoredRibbon g = rotation_to_anchored(rs);
    REQUIRE(same_system(delta_matroid(g), direct));
    REQUIRE(component_count(g) == connected_components(rs));
    if (connected_components(rs) > 1) {
      ++disconnected;
      CHECK_THROWS_AS(rotation_to_anchored(rs, false), Error);
    }
    REQUIRE(parse_rgs(serialize_rgs(rs)).edges.size() == rs.edges.size());
  }
  CHECK(disconnected > 0);
}
