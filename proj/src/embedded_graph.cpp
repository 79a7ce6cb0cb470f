#include "genusdp/embedded_graph.hpp"

#include <algorithm>
#include <string>

#include "genusdp/errors.hpp"

namespace genusdp {

std::vector<int> EmbeddedGraph::dart_positions() const {
  std::vector<int> pos(dart_count(), -1);
  for (int v = 0; v < vertex_count; ++v)
    for (int i = 0; i < degree(v); ++i) pos[rotation[v][i]] = i;
  return pos;
}

Graph EmbeddedGraph::underlying() const {
  Graph g;
  g.n = vertex_count;
  g.edges.reserve(edges.size());
  for (const EmbeddedEdge& e : edges) g.edges.emplace_back(e.u, e.v);
  return g;
}

void EmbeddedGraph::validate() const {
  if (vertex_count < 0) throw EmbeddingError("negative vertex count");
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw EmbeddingError("rotation table size differs from vertex count");
  for (int e = 0; e < edge_count(); ++e) {
    const EmbeddedEdge& ed = edges[e];
    if (ed.u < 0 || ed.u >= vertex_count || ed.v < 0 || ed.v >= vertex_count)
      throw EmbeddingError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.sign != 1 && ed.sign != -1)
      throw EmbeddingError("edge " + std::to_string(e) + " has sign outside {+1,-1}");
  }
  std::vector<int> seen(dart_count(), 0);
  for (int v = 0; v < vertex_count; ++v) {
    for (int d : rotation[v]) {
      if (d < 0 || d >= dart_count())
        throw EmbeddingError("rotation of vertex " + std::to_string(v) + " names a bad dart");
      if (vertex_of(d) != v)
        throw EmbeddingError("dart " + std::to_string(d) + " listed at vertex " +
                             std::to_string(v) + " but belongs to vertex " +
                             std::to_string(vertex_of(d)));
      if (seen[d]++)
        throw EmbeddingError("dart " + std::to_string(d) + " occurs more than once");
    }
  }
  for (int d = 0; d < dart_count(); ++d)
    if (!seen[d]) throw EmbeddingError("dart " + std::to_string(d) + " missing from rotations");
}

int face_state(int dart, int side) { return 2 * dart + (side < 0 ? 1 : 0); }
int face_state_dart(int state) { return state >> 1; }
int face_state_side(int state) { return (state & 1) ? -1 : 1; }

int face_transition(const EmbeddedGraph& g, const std::vector<int>& dart_pos, int state) {
  const int d = face_state_dart(state);
  const int side = face_state_side(state) * g.edges[EmbeddedGraph::edge_of(d)].sign;
  const int arrive = EmbeddedGraph::twin(d);
  const auto& rot = g.rotation[g.vertex_of(arrive)];
  const int deg = static_cast<int>(rot.size());
  const int p = dart_pos[arrive];
  const int next = side > 0 ? rot[(p + 1) % deg] : rot[(p + deg - 1) % deg];
  return face_state(next, side);
}

int mirror_state(const EmbeddedGraph& g, int state) {
  const int d = face_state_dart(state);
  const int side = -face_state_side(state) * g.edges[EmbeddedGraph::edge_of(d)].sign;
  return face_state(EmbeddedGraph::twin(d), side);
}

int FaceData::corner_vertex(int corner) const {
  // corner_offset is nondecreasing; find the vertex whose range contains it.
  auto it = std::upper_bound(corner_offset.begin(), corner_offset.end(), corner);
  return static_cast<int>(it - corner_offset.begin()) - 1;
}

FaceData trace_faces(const EmbeddedGraph& g) {
  g.validate();
  FaceData fd;
  const std::vector<int> pos = g.dart_positions();

  fd.corner_offset.assign(g.vertex_count + 1, 0);
  for (int v = 0; v < g.vertex_count; ++v)
    fd.corner_offset[v + 1] = fd.corner_offset[v] + g.degree(v);
  fd.corner_count = fd.corner_offset[g.vertex_count];

  const int states = 4 * g.edge_count();
  std::vector<int> orbit_of(states, -1);
  std::vector<int> orbit_start;  // minimal state of each orbit, in increasing order
  for (int s = 0; s < states; ++s) {
    if (orbit_of[s] >= 0) continue;
    const int id = static_cast<int>(orbit_start.size());
    orbit_start.push_back(s);
    for (int t = s; orbit_of[t] < 0; t = face_transition(g, pos, t)) orbit_of[t] = id;
  }

  // Each face is covered by exactly two orbits, swapped by the mirror map.
  // Keep the one with the smaller start state.
  fd.corner_face.assign(fd.corner_count, -1);
  fd.corner_item.assign(fd.corner_count, -1);
  fd.edge_face.assign(g.edge_count(), {-1, -1});
  fd.edge_item.assign(g.edge_count(), {-1, -1});
  std::vector<int> edge_seen(g.edge_count(), 0);

  for (size_t id = 0; id < orbit_start.size(); ++id) {
    const int s = orbit_start[id];
    const int partner = orbit_of[mirror_state(g, s)];
    ensure(partner != static_cast<int>(id), "face orbit equals its own mirror");
    if (orbit_start[partner] < s) continue;

    const int f = fd.face_count();
    FaceWalk walk;
    int t = s;
    do {
      const int d = face_state_dart(t);
      walk.darts.push_back(d);
      walk.sides.push_back(face_state_side(t));

      const int e = EmbeddedGraph::edge_of(d);
      ensure(edge_seen[e] < 2, "edge traversed more than twice across kept walks");
      fd.edge_face[e][edge_seen[e]] = f;
      fd.edge_item[e][edge_seen[e]] = walk.length() - 1;
      ++edge_seen[e];

      const int next = face_transition(g, pos, t);
      const int arrive = EmbeddedGraph::twin(d);
      const int v = g.vertex_of(arrive);
      const int gap = face_state_side(next) > 0 ? pos[arrive] : pos[face_state_dart(next)];
      const int corner = fd.corner_id(v, gap);
      ensure(fd.corner_face[corner] < 0, "corner crossed by two kept walks");
      fd.corner_face[corner] = f;
      fd.corner_item[corner] = walk.length() - 1;
      walk.corners.push_back(corner);

      t = next;
    } while (t != s);
    fd.faces.push_back(std::move(walk));
  }

  for (int e = 0; e < g.edge_count(); ++e)
    ensure(edge_seen[e] == 2, "edge not traversed exactly twice");
  for (int c = 0; c < fd.corner_count; ++c)
    ensure(fd.corner_face[c] >= 0, "corner missed by every kept walk");
  return fd;
}

int total_face_count(const EmbeddedGraph& g) {
  const FaceData fd = trace_faces(g);
  int isolated = 0;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) == 0) ++isolated;
  return fd.face_count() + isolated;
}

int euler_genus(const EmbeddedGraph& g) {
  const int c = component_count(g.underlying());
  const int chi = g.vertex_count - g.edge_count() + total_face_count(g);
  const int genus = 2 * c - chi;
  ensure(genus >= 0, "negative Euler genus");
  return genus;
}

bool is_orientable(const EmbeddedGraph& g) {
  // Orientable iff signs admit a potential: sign(uv) == w(u)*w(v) for some
  // w : V -> {+1,-1}. Loops therefore need sign +1.
  std::vector<int> w(g.vertex_count, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    const EmbeddedEdge& ed = g.edges[e];
    if (ed.u == ed.v) {
      if (ed.sign != 1) return false;
      continue;
    }
    adj[ed.u].push_back({ed.v, ed.sign});
    adj[ed.v].push_back({ed.u, ed.sign});
  }
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (w[s] != 0) continue;
    w[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [v, sign] : adj[u]) {
        if (w[v] == 0) {
          w[v] = w[u] * sign;
          stack.push_back(v);
        } else if (w[v] != w[u] * sign) {
          return false;
        }
      }
    }
  }
  return true;
}

EmbeddedGraph flip_vertex(const EmbeddedGraph& g, int v) {
  EmbeddedGraph h = g;
  std::reverse(h.rotation[v].begin(), h.rotation[v].end());
  for (EmbeddedEdge& e : h.edges)
    if ((e.u == v) != (e.v == v)) e.sign = -e.sign;
  return h;
}

EmbeddedGraph normalized_all_positive(const EmbeddedGraph& g) {
  ensure(is_orientable(g), "cannot normalize signs of a non-orientable embedding");
  std::vector<int> w(g.vertex_count, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (const EmbeddedEdge& e : g.edges) {
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, e.sign});
    adj[e.v].push_back({e.u, e.sign});
  }
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count; ++s) {
    if (w[s] != 0) continue;
    w[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [x, sign] : adj[u])
        if (w[x] == 0) {
          w[x] = w[u] * sign;
          stack.push_back(x);
        }
    }
  }
  EmbeddedGraph h = g;
  for (int v = 0; v < g.vertex_count; ++v)
    if (w[v] < 0) h = flip_vertex(h, v);
  for (const EmbeddedEdge& e : h.edges) ensure(e.sign == 1, "sign normalization left a -1");
  return h;
}

namespace {

// Maps darts of b onto a's dart numbering. Edge ids must agree; endpoint
// order per edge may be swapped, which swaps the two darts.
bool dart_translation(const EmbeddedGraph& a, const EmbeddedGraph& b, std::vector<int>& b_to_a) {
  if (a.vertex_count != b.vertex_count) return false;
  if (a.edge_count() != b.edge_count()) return false;
  b_to_a.assign(b.dart_count(), -1);
  for (int e = 0; e < a.edge_count(); ++e) {
    const EmbeddedEdge& ea = a.edges[e];
    const EmbeddedEdge& eb = b.edges[e];
    if (eb.u == ea.u && eb.v == ea.v) {
      b_to_a[2 * e] = 2 * e;
      b_to_a[2 * e + 1] = 2 * e + 1;
    } else if (eb.u == ea.v && eb.v == ea.u) {
      b_to_a[2 * e] = 2 * e + 1;
      b_to_a[2 * e + 1] = 2 * e;
    } else {
      return false;
    }
  }
  return true;
}

bool cyclically_equal(const std::vector<int>& x, const std::vector<int>& y) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  auto it = std::find(y.begin(), y.end(), x[0]);
  if (it == y.end()) return false;
  const size_t shift = it - y.begin();
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[(shift + i) % y.size()]) return false;
  return true;
}

}  // namespace

bool embeddings_equivalent(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  std::vector<int> b_to_a;
  if (!dart_translation(a, b, b_to_a)) return false;

  // Flip assignments propagate along edges: flipping exactly one endpoint of
  // a non-loop edge negates its sign, so f(v) = f(u) xor (signs differ).
  // Loops pin nothing but their signs must match outright.
  for (int e = 0; e < a.edge_count(); ++e)
    if (a.is_loop(e) && a.edges[e].sign != b.edges[e].sign) return false;

  std::vector<std::vector<std::pair<int, int>>> adj(a.vertex_count);
  for (int e = 0; e < a.edge_count(); ++e) {
    if (a.is_loop(e)) continue;
    const int diff = a.edges[e].sign != b.edges[e].sign ? 1 : 0;
    adj[a.edges[e].u].push_back({a.edges[e].v, diff});
    adj[a.edges[e].v].push_back({a.edges[e].u, diff});
  }

  auto rotation_matches = [&](int v, int flip) {
    std::vector<int> expect = a.rotation[v];
    if (flip) std::reverse(expect.begin(), expect.end());
    std::vector<int> got;
    got.reserve(b.rotation[v].size());
    for (int d : b.rotation[v]) got.push_back(b_to_a[d]);
    return cyclically_equal(expect, got);
  };

  std::vector<int> flip(a.vertex_count, -1);
  std::vector<int> stack;
  for (int s = 0; s < a.vertex_count; ++s) {
    if (flip[s] >= 0) continue;
    // Try both flip values for the component root. With no sign constraints
    // broken, rotations decide.
    bool ok = false;
    for (int root_flip = 0; root_flip <= 1 && !ok; ++root_flip) {
      std::vector<int> trial = flip;
      trial[s] = root_flip;
      stack.assign(1, s);
      bool consistent = true;
      std::vector<int> visited;
      while (!stack.empty() && consistent) {
        int u = stack.back();
        stack.pop_back();
        visited.push_back(u);
        for (auto [v, diff] : adj[u]) {
          int want = trial[u] ^ diff;
          if (trial[v] < 0) {
            trial[v] = want;
            stack.push_back(v);
          } else if (trial[v] != want) {
            consistent = false;
            break;
          }
        }
      }
      if (!consistent) continue;
      bool rotations_ok = true;
      for (int v : visited)
        if (!rotation_matches(v, trial[v])) {
          rotations_ok = false;
          break;
        }
      if (!rotations_ok) continue;
      flip = trial;
      ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

void check_bijection(const std::vector<int>& new_id, int n, const char* what) {
  ensure(static_cast<int>(new_id.size()) == n, what);
  std::vector<char> seen(n, 0);
  for (int x : new_id) {
    ensure(x >= 0 && x < n && !seen[x], what);
    seen[x] = 1;
  }
}

}  // namespace

EmbeddedGraph rename_vertices(const EmbeddedGraph& g, const std::vector<int>& new_id) {
  check_bijection(new_id, g.vertex_count, "vertex renaming is not a bijection");
  EmbeddedGraph h;
  h.vertex_count = g.vertex_count;
  h.rotation.resize(g.vertex_count);
  for (const EmbeddedEdge& e : g.edges) h.edges.push_back({new_id[e.u], new_id[e.v], e.sign});
  for (int v = 0; v < g.vertex_count; ++v) h.rotation[new_id[v]] = g.rotation[v];
  return h;
}

EmbeddedGraph reorder_edges(const EmbeddedGraph& g, const std::vector<int>& new_id) {
  check_bijection(new_id, g.edge_count(), "edge renumbering is not a bijection");
  EmbeddedGraph h;
  h.vertex_count = g.vertex_count;
  h.edges.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) h.edges[new_id[e]] = g.edges[e];
  h.rotation = g.rotation;
  for (auto& rot : h.rotation)
    for (int& d : rot)
      d = EmbeddedGraph::dart_at(new_id[EmbeddedGraph::edge_of(d)], EmbeddedGraph::end_of(d));
  return h;
}

ComponentSplit split_components(const EmbeddedGraph& g) {
  const std::vector<int> label = component_labels(g.underlying());
  int parts = 0;
  for (int l : label) parts = std::max(parts, l + 1);

  ComponentSplit out;
  out.parts.resize(parts);
  out.vertex_part = label;
  out.vertex_local.assign(g.vertex_count, -1);
  out.edge_part.assign(g.edge_count(), -1);
  out.edge_local.assign(g.edge_count(), -1);
  out.part_vertices.resize(parts);
  out.part_edges.resize(parts);

  for (int v = 0; v < g.vertex_count; ++v) {
    const int p = label[v];
    out.vertex_local[v] = static_cast<int>(out.part_vertices[p].size());
    out.part_vertices[p].push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const int p = label[g.edges[e].u];
    out.edge_part[e] = p;
    out.edge_local[e] = static_cast<int>(out.part_edges[p].size());
    out.part_edges[p].push_back(e);
  }
  for (int p = 0; p < parts; ++p) {
    EmbeddedGraph& part = out.parts[p];
    part.vertex_count = static_cast<int>(out.part_vertices[p].size());
    part.rotation.resize(part.vertex_count);
    for (int e : out.part_edges[p]) {
      const EmbeddedEdge& ed = g.edges[e];
      part.edges.push_back({out.vertex_local[ed.u], out.vertex_local[ed.v], ed.sign});
    }
    for (int i = 0; i < part.vertex_count; ++i) {
      const int v = out.part_vertices[p][i];
      for (int d : g.rotation[v]) {
        const int e = EmbeddedGraph::edge_of(d);
        part.rotation[i].push_back(EmbeddedGraph::dart_at(out.edge_local[e],
                                                          EmbeddedGraph::end_of(d)));
      }
    }
  }
  return out;
}

InducedEmbedding remove_vertices(const EmbeddedGraph& g, const std::vector<int>& vs) {
  std::vector<char> gone(g.vertex_count, 0);
  for (int v : vs) gone[v] = 1;

  InducedEmbedding out;
  out.vertex_map.assign(g.vertex_count, -1);
  out.edge_map.assign(g.edge_count(), -1);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (gone[v]) continue;
    out.vertex_map[v] = static_cast<int>(out.vertex_back.size());
    out.vertex_back.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    if (gone[g.edges[e].u] || gone[g.edges[e].v]) continue;
    out.edge_map[e] = static_cast<int>(out.edge_back.size());
    out.edge_back.push_back(e);
  }

  EmbeddedGraph& h = out.graph;
  h.vertex_count = static_cast<int>(out.vertex_back.size());
  h.rotation.resize(h.vertex_count);
  for (int e : out.edge_back) {
    const EmbeddedEdge& ed = g.edges[e];
    h.edges.push_back({out.vertex_map[ed.u], out.vertex_map[ed.v], ed.sign});
  }
  for (int v = 0; v < h.vertex_count; ++v) {
    for (int d : g.rotation[out.vertex_back[v]]) {
      const int e = EmbeddedGraph::edge_of(d);
      if (out.edge_map[e] < 0) continue;
      h.rotation[v].push_back(EmbeddedGraph::dart_at(out.edge_map[e], EmbeddedGraph::end_of(d)));
    }
  }
  return out;
}

}  // namespace genusdp
