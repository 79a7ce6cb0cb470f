#include "genusdp/corpus.hpp"

#include <random>

#include "genusdp/errors.hpp"

namespace genusdp {

EmbeddedGraph build_embedding(int n, std::vector<EmbeddedEdge> edges,
                              std::vector<std::vector<std::pair<int, int>>> slots) {
  EmbeddedGraph g;
  g.vertex_count = n;
  g.edges = std::move(edges);
  g.rotation.resize(n);
  ensure(static_cast<int>(slots.size()) == n, "one slot list per vertex");
  for (int v = 0; v < n; ++v)
    for (auto [e, end] : slots[v]) g.rotation[v].push_back(EmbeddedGraph::dart_at(e, end));
  g.validate();
  return g;
}

EmbeddedGraph embedding_from_neighbors(int n, std::vector<std::pair<int, int>> edges,
                                       std::vector<std::vector<int>> neighbor_order) {
  EmbeddedGraph g;
  g.vertex_count = n;
  for (auto [u, v] : edges) {
    ensure(u != v, "neighbor lists cannot address loops");
    g.edges.push_back({u, v, 1});
  }
  g.rotation.resize(n);
  ensure(static_cast<int>(neighbor_order.size()) == n, "one neighbor list per vertex");
  for (int v = 0; v < n; ++v) {
    for (int w : neighbor_order[v]) {
      int found = -1;
      for (int e = 0; e < g.edge_count(); ++e)
        if ((g.edges[e].u == v && g.edges[e].v == w) ||
            (g.edges[e].u == w && g.edges[e].v == v)) {
          ensure(found < 0, "neighbor lists are ambiguous with parallel edges");
          found = e;
        }
      ensure(found >= 0, "neighbor list names a non-edge");
      g.rotation[v].push_back(EmbeddedGraph::dart_at(found, g.edges[found].u == v ? 0 : 1));
    }
  }
  g.validate();
  return g;
}

EmbeddedGraph single_loop(int sign) {
  ensure(sign == 1 || sign == -1, "loop sign must be +-1");
  return build_embedding(1, {{0, 0, sign}}, {{{0, 0}, {0, 1}}});
}

EmbeddedGraph planar_cycle(int k) {
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> nb(k);
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    nb[i] = {(i + 1) % k, (i + k - 1) % k};
  }
  return embedding_from_neighbors(k, edges, nb);
}

EmbeddedGraph planar_clique(int n) {
  if (n < 1 || n > 4) throw InputError("planar clique supports 1 to 4 vertices");
  if (n == 1) {
    EmbeddedGraph g;
    g.vertex_count = 1;
    g.rotation.resize(1);
    return g;
  }
  if (n == 2) return embedding_from_neighbors(2, {{0, 1}}, {{1}, {0}});
  if (n == 3)
    return embedding_from_neighbors(3, {{0, 1}, {1, 2}, {2, 0}}, {{1, 2}, {2, 0}, {0, 1}});
  return embedding_from_neighbors(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                                  {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

EmbeddedGraph wheel(int rim) {
  if (rim < 3) throw InputError("wheel needs a rim of at least 3");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> nb(rim + 1);
  for (int i = 1; i <= rim; ++i) edges.push_back({0, i});
  for (int i = 1; i <= rim; ++i) edges.push_back({i, i % rim + 1});
  for (int i = 1; i <= rim; ++i) nb[0].push_back(i);
  for (int i = 1; i <= rim; ++i) nb[i] = {i % rim + 1, 0, (i + rim - 2) % rim + 1};
  return embedding_from_neighbors(rim + 1, edges, nb);
}

EmbeddedGraph prism() {
  return embedding_from_neighbors(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}},
      {{1, 3, 2}, {2, 4, 0}, {0, 5, 1}, {5, 0, 4}, {3, 1, 5}, {4, 2, 3}});
}

EmbeddedGraph cube() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({4 + i, 4 + (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({i, 4 + i});
  std::vector<std::vector<int>> nb(8);
  for (int i = 0; i < 4; ++i) nb[i] = {(i + 1) % 4, 4 + i, (i + 3) % 4};
  for (int i = 0; i < 4; ++i) nb[4 + i] = {4 + (i + 3) % 4, i, 4 + (i + 1) % 4};
  return embedding_from_neighbors(8, edges, nb);
}

EmbeddedGraph octahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i) edges.push_back({i, (i + 1) % 4});
  for (int i = 0; i < 4; ++i) edges.push_back({4, i});
  for (int i = 0; i < 4; ++i) edges.push_back({5, i});
  std::vector<std::vector<int>> nb(6);
  for (int i = 0; i < 4; ++i) nb[i] = {(i + 1) % 4, 4, (i + 3) % 4, 5};
  nb[4] = {0, 1, 2, 3};
  nb[5] = {3, 2, 1, 0};
  return embedding_from_neighbors(6, edges, nb);
}

namespace {

enum class Seam { open, straight, reflected };

// Shared grid skeleton: neighbor order up, right, down, left; wrapped
// variants add seam edges in the same slots.  The reflected seam sends the
// right edge of row i to the left edge of row (rows - i) % rows, so that
// together with negative seam signs the quads close up a Klein bottle.
EmbeddedGraph grid_graph(int rows, int cols, Seam seam) {
  const bool wrap = seam != Seam::open;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> nb(rows * cols);
  const auto id = [cols](int i, int j) { return i * cols + j; };
  const auto land = [rows, seam](int i) {
    return seam == Seam::reflected ? (rows - i) % rows : i;
  };
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j + 1 < cols; ++j) edges.push_back({id(i, j), id(i, j + 1)});
  for (int i = 0; i + 1 < rows; ++i)
    for (int j = 0; j < cols; ++j) edges.push_back({id(i, j), id(i + 1, j)});
  if (wrap) {
    for (int i = 0; i < rows; ++i) edges.push_back({id(i, cols - 1), id(land(i), 0)});
    for (int j = 0; j < cols; ++j) edges.push_back({id(rows - 1, j), id(0, j)});
  }
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      auto& order = nb[id(i, j)];
      if (i > 0 || wrap) order.push_back(id((i + rows - 1) % rows, j));
      if (j + 1 < cols)
        order.push_back(id(i, j + 1));
      else if (wrap)
        order.push_back(id(land(i), 0));
      if (i + 1 < rows || wrap) order.push_back(id((i + 1) % rows, j));
      if (j > 0)
        order.push_back(id(i, j - 1));
      else if (wrap)
        order.push_back(id(land(i), cols - 1));
    }
  return embedding_from_neighbors(rows * cols, edges, nb);
}

}  // namespace

EmbeddedGraph planar_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
  return grid_graph(rows, cols, Seam::open);
}

EmbeddedGraph toroidal_grid(int rows, int cols) {
  if (rows < 3 || cols < 3) throw InputError("wrapped grid needs both dimensions at least 3");
  return grid_graph(rows, cols, Seam::straight);
}

EmbeddedGraph klein_grid(int rows, int cols) {
  if (rows < 3 || cols < 3) throw InputError("wrapped grid needs both dimensions at least 3");
  EmbeddedGraph g = grid_graph(rows, cols, Seam::reflected);
  // The column seam glues with a flip; its edges sit right after the open
  // grid's edges, one per row.
  const int base = rows * (cols - 1) + (rows - 1) * cols;
  for (int i = 0; i < rows; ++i) g.edges[base + i].sign = -1;
  return g;
}

EmbeddedGraph toroidal_k5() {
  // Found by rotation search; 5 faces, so the Euler genus is exactly 2.
  return embedding_from_neighbors(
      5,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
      {{3, 2, 4, 1}, {4, 0, 2, 3}, {4, 0, 3, 1}, {1, 2, 0, 4}, {1, 3, 2, 0}});
}

EmbeddedGraph toroidal_k7() {
  // Cyclic rotation v -> v + (1, 3, 2, 6, 4, 5): a 14-face triangulation.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) edges.push_back({u, v});
  std::vector<std::vector<int>> nb(7);
  for (int v = 0; v < 7; ++v)
    for (int o : {1, 3, 2, 6, 4, 5}) nb[v].push_back((v + o) % 7);
  return embedding_from_neighbors(7, edges, nb);
}

EmbeddedGraph stacked_triangulation(int vertices, std::uint32_t seed) {
  if (vertices < 4) throw InputError("stacked triangulation needs at least 4 vertices");
  EmbeddedGraph g = planar_clique(4);
  std::mt19937 rng(seed);
  while (g.vertex_count < vertices) {
    const FaceData fd = trace_faces(g);
    const FaceWalk& f = fd.faces[rng() % fd.face_count()];
    const std::vector<int> pos = g.dart_positions();

    // Walk the face on its positive side so corner order is consistent.
    int s = face_state(f.darts[0], f.sides[0]);
    if (face_state_side(s) < 0) s = mirror_state(g, s);
    std::vector<int> corner_vertex, corner_gap;
    int t = s;
    do {
      const int arrive = EmbeddedGraph::twin(face_state_dart(t));
      corner_vertex.push_back(g.vertex_of(arrive));
      corner_gap.push_back(pos[arrive]);
      t = face_transition(g, pos, t);
    } while (t != s);
    ensure(corner_vertex.size() == 3, "triangulation face is not a triangle");
    ensure(corner_vertex[0] != corner_vertex[1] && corner_vertex[1] != corner_vertex[2] &&
               corner_vertex[0] != corner_vertex[2],
           "triangulation face repeats a vertex");

    const int w = g.vertex_count++;
    g.rotation.emplace_back();
    std::vector<int> new_darts;
    for (size_t i = 0; i < corner_vertex.size(); ++i) {
      const int e = g.edge_count();
      g.edges.push_back({corner_vertex[i], w, 1});
      auto& rot = g.rotation[corner_vertex[i]];
      rot.insert(rot.begin() + corner_gap[i] + 1, EmbeddedGraph::dart_at(e, 0));
      new_darts.push_back(EmbeddedGraph::dart_at(e, 1));
    }
    // The new vertex sees the face boundary with reversed orientation.
    g.rotation[w].assign(new_darts.rbegin(), new_darts.rend());
  }
  ensure(euler_genus(g) == 0, "stacked triangulation left the sphere");
  ensure(is_simple(g.underlying()), "stacked triangulation is not simple");
  return g;
}

}  // namespace genusdp
