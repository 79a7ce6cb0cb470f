#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "genusdp/embedded_graph.hpp"
#include "genusdp/errors.hpp"

using namespace genusdp;

namespace {

EmbeddedGraph build(int n, std::vector<EmbeddedEdge> edges,
                    std::vector<std::vector<std::pair<int, int>>> rot) {
  EmbeddedGraph g;
  g.vertex_count = n;
  g.edges = std::move(edges);
  g.rotation.resize(n);
  for (int v = 0; v < n; ++v)
    for (auto [e, end] : rot[v]) g.rotation[v].push_back(EmbeddedGraph::dart_at(e, end));
  return g;
}

// Rotations given as neighbor lists; only for simple graphs.
EmbeddedGraph simple_embedding(int n, std::vector<std::pair<int, int>> edges,
                               std::vector<std::vector<int>> neighbors) {
  EmbeddedGraph g;
  g.vertex_count = n;
  for (auto [u, v] : edges) g.edges.push_back({u, v, 1});
  g.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    for (int w : neighbors[v]) {
      int found = -1;
      for (int e = 0; e < g.edge_count(); ++e)
        if ((g.edges[e].u == v && g.edges[e].v == w) ||
            (g.edges[e].u == w && g.edges[e].v == v))
          found = e;
      REQUIRE(found >= 0);
      g.rotation[v].push_back(EmbeddedGraph::dart_at(found, g.edges[found].u == v ? 0 : 1));
    }
  }
  return g;
}

EmbeddedGraph planar_k4() {
  return simple_embedding(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

EmbeddedGraph crosscap_loop() {
  return build(1, {{0, 0, -1}}, {{{0, 0}, {0, 1}}});
}

EmbeddedGraph disjoint_union(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  EmbeddedGraph g = a;
  const int vshift = a.vertex_count;
  const int eshift = a.edge_count();
  g.vertex_count += b.vertex_count;
  for (const EmbeddedEdge& e : b.edges)
    g.edges.push_back({e.u + vshift, e.v + vshift, e.sign});
  for (const auto& rot : b.rotation) {
    g.rotation.emplace_back();
    for (int d : rot)
      g.rotation.back().push_back(
          EmbeddedGraph::dart_at(EmbeddedGraph::edge_of(d) + eshift, EmbeddedGraph::end_of(d)));
  }
  return g;
}

void check_registry(const EmbeddedGraph& g) {
  const FaceData fd = trace_faces(g);
  int steps = 0;
  for (const FaceWalk& w : fd.faces) steps += w.length();
  CHECK(steps == 2 * g.edge_count());
  for (int c = 0; c < fd.corner_count; ++c) {
    REQUIRE(fd.corner_face[c] >= 0);
    CHECK(fd.faces[fd.corner_face[c]].corners[fd.corner_item[c]] == c);
    CHECK(fd.corner_offset[fd.corner_vertex(c)] + fd.corner_gap(c) == c);
  }
  for (int e = 0; e < g.edge_count(); ++e)
    for (int k = 0; k < 2; ++k) {
      const FaceWalk& w = fd.faces[fd.edge_face[e][k]];
      CHECK(EmbeddedGraph::edge_of(w.darts[fd.edge_item[e][k]]) == e);
    }
}

void check_mirror_inverts_transition(const EmbeddedGraph& g) {
  const auto pos = g.dart_positions();
  for (int s = 0; s < 4 * g.edge_count(); ++s) {
    const int t = mirror_state(g, face_transition(g, pos, mirror_state(g, face_transition(g, pos, s))));
    CHECK(t == s);
  }
}

}  // namespace

TEST_CASE("loop with positive sign lies on the sphere") {
  const EmbeddedGraph g = build(1, {{0, 0, 1}}, {{{0, 0}, {0, 1}}});
  CHECK(total_face_count(g) == 2);
  CHECK(euler_genus(g) == 0);
  CHECK(is_orientable(g));
  check_registry(g);
}

TEST_CASE("loop with negative sign lies on the projective plane") {
  const EmbeddedGraph g = crosscap_loop();
  CHECK(total_face_count(g) == 1);
  CHECK(euler_genus(g) == 1);
  CHECK(!is_orientable(g));
  check_registry(g);
  check_mirror_inverts_transition(g);
}

TEST_CASE("single edge has one face of length two") {
  const EmbeddedGraph g = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  const FaceData fd = trace_faces(g);
  REQUIRE(fd.face_count() == 1);
  CHECK(fd.faces[0].length() == 2);
  CHECK(euler_genus(g) == 0);
  check_registry(g);
}

TEST_CASE("triangle is planar under either cyclic order") {
  const EmbeddedGraph g = simple_embedding(3, {{0, 1}, {1, 2}, {2, 0}},
                                           {{1, 2}, {2, 0}, {0, 1}});
  const EmbeddedGraph h = simple_embedding(3, {{0, 1}, {1, 2}, {2, 0}},
                                           {{2, 1}, {0, 2}, {1, 0}});
  CHECK(total_face_count(g) == 2);
  CHECK(euler_genus(g) == 0);
  CHECK(total_face_count(h) == 2);
  CHECK(euler_genus(h) == 0);
}

TEST_CASE("planar clique on four vertices has four triangular faces") {
  const EmbeddedGraph g = planar_k4();
  const FaceData fd = trace_faces(g);
  REQUIRE(fd.face_count() == 4);
  for (const FaceWalk& w : fd.faces) CHECK(w.length() == 3);
  CHECK(euler_genus(g) == 0);
  CHECK(is_orientable(g));
  check_registry(g);
  check_mirror_inverts_transition(g);
}

TEST_CASE("three aligned parallel edges give a torus") {
  const EmbeddedGraph g = build(2, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}},
                                {{{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 1}, {2, 1}}});
  CHECK(total_face_count(g) == 1);
  CHECK(euler_genus(g) == 2);
  CHECK(is_orientable(g));
  check_registry(g);
  check_mirror_inverts_transition(g);
}

TEST_CASE("three parallel edges with opposite orders are planar") {
  const EmbeddedGraph g = build(2, {{0, 1, 1}, {0, 1, 1}, {0, 1, 1}},
                                {{{0, 0}, {1, 0}, {2, 0}}, {{2, 1}, {1, 1}, {0, 1}}});
  CHECK(total_face_count(g) == 3);
  CHECK(euler_genus(g) == 0);
}

TEST_CASE("genus adds over disjoint components") {
  const EmbeddedGraph tri = simple_embedding(3, {{0, 1}, {1, 2}, {2, 0}},
                                             {{1, 2}, {2, 0}, {0, 1}});
  const EmbeddedGraph g = disjoint_union(crosscap_loop(), tri);
  CHECK(euler_genus(g) == 1);
  CHECK(total_face_count(g) == 3);
  CHECK(!is_orientable(g));
}

TEST_CASE("isolated vertices add spheres") {
  EmbeddedGraph g = simple_embedding(3, {{0, 1}, {1, 2}, {2, 0}},
                                     {{1, 2}, {2, 0}, {0, 1}});
  g.vertex_count += 2;
  g.rotation.resize(5);
  CHECK(euler_genus(g) == 0);
  CHECK(total_face_count(g) == 4);
}

TEST_CASE("empty and edgeless graphs") {
  EmbeddedGraph empty;
  CHECK(euler_genus(empty) == 0);
  EmbeddedGraph one;
  one.vertex_count = 1;
  one.rotation.resize(1);
  CHECK(euler_genus(one) == 0);
  CHECK(total_face_count(one) == 1);
}

TEST_CASE("vertex flips preserve the embedding") {
  for (const EmbeddedGraph& g : {planar_k4(), crosscap_loop()}) {
    for (int v = 0; v < g.vertex_count; ++v) {
      const EmbeddedGraph h = flip_vertex(g, v);
      CHECK(euler_genus(h) == euler_genus(g));
      CHECK(total_face_count(h) == total_face_count(g));
      CHECK(is_orientable(h) == is_orientable(g));
      CHECK(embeddings_equivalent(g, h));
    }
  }
}

TEST_CASE("flipping every vertex is the identity on the embedding") {
  EmbeddedGraph g = planar_k4();
  EmbeddedGraph h = g;
  for (int v = 0; v < g.vertex_count; ++v) h = flip_vertex(h, v);
  CHECK(embeddings_equivalent(g, h));
  for (const EmbeddedEdge& e : h.edges) CHECK(e.sign == 1);
}

TEST_CASE("reversing one rotation without sign flips is a different embedding") {
  const EmbeddedGraph g = planar_k4();
  EmbeddedGraph h = g;
  std::reverse(h.rotation[3].begin(), h.rotation[3].end());
  CHECK(!embeddings_equivalent(g, h));
}

TEST_CASE("equivalence tolerates swapped endpoint order") {
  const EmbeddedGraph g = planar_k4();
  EmbeddedGraph h = g;
  std::swap(h.edges[2].u, h.edges[2].v);
  for (auto& rot : h.rotation)
    for (int& d : rot)
      if (EmbeddedGraph::edge_of(d) == 2) d = EmbeddedGraph::twin(d);
  CHECK(embeddings_equivalent(g, h));
}

TEST_CASE("sign normalization clears removable minus signs") {
  EmbeddedGraph g = planar_k4();
  g = flip_vertex(g, 1);
  bool any_negative = false;
  for (const EmbeddedEdge& e : g.edges) any_negative |= e.sign < 0;
  REQUIRE(any_negative);
  REQUIRE(is_orientable(g));
  const EmbeddedGraph h = normalized_all_positive(g);
  CHECK(embeddings_equivalent(g, h));
  CHECK(euler_genus(h) == 0);
}

TEST_CASE("component split keeps per-part genus") {
  const EmbeddedGraph tri = simple_embedding(3, {{0, 1}, {1, 2}, {2, 0}},
                                             {{1, 2}, {2, 0}, {0, 1}});
  const ComponentSplit split = split_components(disjoint_union(crosscap_loop(), tri));
  REQUIRE(split.parts.size() == 2);
  CHECK(euler_genus(split.parts[0]) == 1);
  CHECK(euler_genus(split.parts[1]) == 0);
  CHECK(split.part_vertices[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("vertex removal keeps the induced rotations") {
  const InducedEmbedding sub = remove_vertices(planar_k4(), {3});
  CHECK(sub.graph.vertex_count == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(euler_genus(sub.graph) == 0);
  CHECK(total_face_count(sub.graph) == 2);
  CHECK(sub.vertex_back == std::vector<int>{0, 1, 2});
}

TEST_CASE("validation rejects malformed rotation systems") {
  EmbeddedGraph missing = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  missing.rotation[1].clear();
  CHECK_THROWS_AS(missing.validate(), EmbeddingError);

  EmbeddedGraph doubled = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  doubled.rotation[1].push_back(doubled.rotation[1][0]);
  CHECK_THROWS_AS(doubled.validate(), EmbeddingError);

  EmbeddedGraph misplaced = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  std::swap(misplaced.rotation[0][0], misplaced.rotation[1][0]);
  CHECK_THROWS_AS(misplaced.validate(), EmbeddingError);

  EmbeddedGraph badsign = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  badsign.edges[0].sign = 0;
  CHECK_THROWS_AS(badsign.validate(), EmbeddingError);

  EmbeddedGraph range = simple_embedding(2, {{0, 1}}, {{1}, {0}});
  range.edges[0].v = 7;
  CHECK_THROWS_AS(range.validate(), EmbeddingError);
}
