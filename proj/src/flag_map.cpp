#include "genusdp/flag_map.hpp"

#include <algorithm>
#include <limits>

#include "genusdp/errors.hpp"

namespace genusdp {

void FlagMap::validate() const {
  const int n = flag_count;
  ensure(static_cast<int>(s0.size()) == n && static_cast<int>(s1.size()) == n &&
             static_cast<int>(s2.size()) == n,
         "involution tables sized differently from the flag count");
  for (const std::vector<int>* s : {&s0, &s1, &s2})
    for (int x = 0; x < n; ++x) {
      const int y = (*s)[x];
      ensure(y >= 0 && y < n, "involution leaves the flag range");
      ensure((*s)[y] == x, "not an involution");
    }
  for (int x = 0; x < n; ++x) {
    ensure(s0[x] != x && s2[x] != x, "s0 and s2 must move every flag");
    ensure(s0[s2[x]] == s2[s0[x]], "s0 and s2 must commute");
    ensure(s0[s2[x]] != x, "s0 s2 must move every flag");
  }
}

FlagMap to_flags(const EmbeddedGraph& g) {
  g.validate();
  const std::vector<int> pos = g.dart_positions();
  const int n = 4 * g.edge_count();
  std::vector<int> fwd(n), inv(n);
  for (int x = 0; x < n; ++x) fwd[x] = face_transition(g, pos, x);
  for (int x = 0; x < n; ++x) inv[fwd[x]] = x;

  FlagMap f;
  f.flag_count = n;
  f.s0.resize(n);
  f.s1.resize(n);
  f.s2.resize(n);
  for (int x = 0; x < n; ++x) {
    f.s0[x] = mirror_state(g, x);
    f.s1[x] = mirror_state(g, inv[x]);
    f.s2[x] = x ^ 1;
  }
  f.validate();
  return f;
}

FlagMap dual_flags(const FlagMap& f) {
  FlagMap d = f;
  std::swap(d.s0, d.s2);
  return d;
}

FlagMap radial_flags(const FlagMap& f) {
  FlagMap r;
  r.flag_count = 2 * f.flag_count;
  r.s0.resize(r.flag_count);
  r.s1.resize(r.flag_count);
  r.s2.resize(r.flag_count);
  for (int phi = 0; phi < f.flag_count; ++phi) {
    // j = 0 keeps the primal vertex, j = 1 keeps the primal face. The new
    // edge unit is the corner {phi, s1(phi)}.
    r.s0[2 * phi] = 2 * phi + 1;
    r.s0[2 * phi + 1] = 2 * phi;
    r.s2[2 * phi] = 2 * f.s1[phi];
    r.s2[2 * phi + 1] = 2 * f.s1[phi] + 1;
    r.s1[2 * phi] = 2 * f.s2[phi];
    r.s1[2 * phi + 1] = 2 * f.s0[phi] + 1;
  }
  r.validate();
  return r;
}

std::vector<int> orbit_ids(const std::vector<int>& a, const std::vector<int>& b) {
  ensure(a.size() == b.size(), "orbit generators over different flag ranges");
  const int n = static_cast<int>(a.size());
  std::vector<int> id(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (id[s] >= 0) continue;
    id[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : {a[x], b[x]})
        if (id[y] < 0) {
          id[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return id;
}

int corner_of_flag(const EmbeddedGraph& g, const FaceData& fd, const std::vector<int>& dart_pos,
                   const FlagMap& f, int flag) {
  const int d = face_state_dart(flag);
  const int v = g.vertex_of(d);
  const int other = face_state_dart(f.s1[flag]);
  ensure(g.vertex_of(other) == v, "s1 left the vertex");
  const int gap = face_state_side(flag) > 0 ? dart_pos[other] : dart_pos[d];
  return fd.corner_id(v, gap);
}

FromFlags from_flags(const FlagMap& f) {
  f.validate();
  const int n = f.flag_count;
  FromFlags out;
  out.flag_vertex = orbit_ids(f.s1, f.s2);
  out.flag_edge = orbit_ids(f.s0, f.s2);
  int V = 0, E = 0;
  for (int x = 0; x < n; ++x) {
    V = std::max(V, out.flag_vertex[x] + 1);
    E = std::max(E, out.flag_edge[x] + 1);
  }

  const int none = std::numeric_limits<int>::max();
  std::vector<int> vertex_min(V, none), edge_min(E, none), edge_size(E, 0);
  for (int x = 0; x < n; ++x) {
    vertex_min[out.flag_vertex[x]] = std::min(vertex_min[out.flag_vertex[x]], x);
    edge_min[out.flag_edge[x]] = std::min(edge_min[out.flag_edge[x]], x);
    ++edge_size[out.flag_edge[x]];
  }
  for (int e = 0; e < E; ++e) ensure(edge_size[e] == 4, "edge orbit must have four flags");

  // End 0 of edge e is the side pair {x, s2 x} of its minimal flag x.
  out.flag_end.assign(n, -1);
  for (int e = 0; e < E; ++e) {
    const int x = edge_min[e];
    out.flag_end[x] = 0;
    out.flag_end[f.s2[x]] = 0;
    out.flag_end[f.s0[x]] = 1;
    out.flag_end[f.s2[f.s0[x]]] = 1;
  }
  for (int x = 0; x < n; ++x) ensure(out.flag_end[x] >= 0, "flag missing from its edge's ends");

  EmbeddedGraph& g = out.graph;
  g.vertex_count = V;
  g.rotation.resize(V);
  g.edges.resize(E);
  for (int e = 0; e < E; ++e) {
    g.edges[e].u = out.flag_vertex[edge_min[e]];
    g.edges[e].v = out.flag_vertex[f.s0[edge_min[e]]];
  }

  // Rotation at a vertex: hop edge ends with s1 s2 starting from the minimal
  // flag. The first flag met at each end decides the sign convention below.
  std::vector<std::array<int, 2>> first_flag(E, {-1, -1});
  for (int v = 0; v < V; ++v) {
    int phi = vertex_min[v];
    do {
      const int e = out.flag_edge[phi];
      const int end = out.flag_end[phi];
      ensure(first_flag[e][end] < 0, "edge end visited twice in a vertex walk");
      first_flag[e][end] = phi;
      g.rotation[v].push_back(EmbeddedGraph::dart_at(e, end));
      phi = f.s1[f.s2[phi]];
    } while (phi != vertex_min[v]);
  }

  // The s0 gluing runs first flag to second flag exactly when the two vertex
  // walks traverse the edge compatibly; then the sign is +1.
  for (int e = 0; e < E; ++e) {
    const int x0 = first_flag[e][0];
    const int x1 = first_flag[e][1];
    ensure(x0 >= 0 && x1 >= 0, "edge end never visited");
    if (f.s0[x0] == f.s2[x1]) {
      g.edges[e].sign = 1;
    } else {
      ensure(f.s0[x0] == x1, "s0 gluing matches neither flag of the far end");
      g.edges[e].sign = -1;
    }
  }
  g.validate();
  return out;
}

EmbeddedGraph dual(const EmbeddedGraph& g) {
  const FlagMap f = to_flags(g);
  const FromFlags raw = from_flags(dual_flags(f));

  // Primal edge orbits and dual edge orbits coincide, so ids carry over.
  for (int x = 0; x < f.flag_count; ++x)
    ensure(raw.flag_edge[x] == EmbeddedGraph::edge_of(face_state_dart(x)),
           "dual edge ids drifted from primal edge ids");

  EmbeddedGraph d = raw.graph;
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) == 0) {
      ++d.vertex_count;
      d.rotation.emplace_back();
    }
  return d;
}

RadialResult radial(const EmbeddedGraph& g) {
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) == 0)
      throw EmbeddingError("radial graph requires every vertex to lie on an edge");

  const FaceData fd = trace_faces(g);
  const FlagMap f = to_flags(g);
  const std::vector<int> face_id = orbit_ids(f.s0, f.s1);
  const std::vector<int> pos = g.dart_positions();
  const FromFlags raw = from_flags(radial_flags(f));

  const int n = g.vertex_count;
  ensure(raw.graph.vertex_count == n + fd.face_count(),
         "radial vertex count differs from primal vertices plus faces");

  std::vector<int> new_vid(raw.graph.vertex_count, -1);
  auto assign = [&](int orbit, int label) {
    ensure(new_vid[orbit] < 0 || new_vid[orbit] == label, "conflicting radial vertex label");
    new_vid[orbit] = label;
  };
  for (int phi = 0; phi < f.flag_count; ++phi) {
    assign(raw.flag_vertex[2 * phi], g.vertex_of(face_state_dart(phi)));
    assign(raw.flag_vertex[2 * phi + 1], n + face_id[phi]);
  }

  std::vector<int> new_eid(raw.graph.edge_count(), -1);
  for (int phi = 0; phi < f.flag_count; ++phi) {
    const int corner = corner_of_flag(g, fd, pos, f, phi);
    const int e = raw.flag_edge[2 * phi];
    ensure(new_eid[e] < 0 || new_eid[e] == corner, "conflicting radial edge corner");
    new_eid[e] = corner;
  }
  ensure(raw.graph.edge_count() == fd.corner_count, "radial edges out of bijection with corners");

  RadialResult out;
  out.graph = reorder_edges(rename_vertices(raw.graph, new_vid), new_eid);
  out.primal_vertex_count = n;
  out.face_count = fd.face_count();
  for (const EmbeddedEdge& e : out.graph.edges)
    ensure((e.u < n) != (e.v < n), "radial edge fails to join a vertex node to a face node");
  return out;
}

EmbeddedGraph medial(const EmbeddedGraph& g) {
  for (int v = 0; v < g.vertex_count; ++v)
    if (g.degree(v) == 0)
      throw EmbeddingError("medial graph requires every vertex to lie on an edge");

  const FaceData fd = trace_faces(g);
  const FlagMap f = to_flags(g);
  const std::vector<int> pos = g.dart_positions();
  const FromFlags raw = from_flags(dual_flags(radial_flags(f)));

  ensure(raw.graph.vertex_count == g.edge_count(),
         "medial vertices out of bijection with primal edges");

  std::vector<int> new_vid(raw.graph.vertex_count, -1);
  std::vector<int> new_eid(raw.graph.edge_count(), -1);
  for (int phi = 0; phi < f.flag_count; ++phi) {
    const int tile = raw.flag_vertex[2 * phi];
    const int label = EmbeddedGraph::edge_of(face_state_dart(phi));
    ensure(new_vid[tile] < 0 || new_vid[tile] == label, "tile spans two primal edges");
    new_vid[tile] = label;

    const int corner = corner_of_flag(g, fd, pos, f, phi);
    const int e = raw.flag_edge[2 * phi];
    ensure(new_eid[e] < 0 || new_eid[e] == corner, "conflicting medial edge corner");
    new_eid[e] = corner;
  }
  ensure(raw.graph.edge_count() == fd.corner_count, "medial edges out of bijection with corners");

  EmbeddedGraph m = reorder_edges(rename_vertices(raw.graph, new_vid), new_eid);
  for (int v = 0; v < m.vertex_count; ++v)
    ensure(m.degree(v) == 4, "medial graph must be 4-regular");
  return m;
}

}  // namespace genusdp
