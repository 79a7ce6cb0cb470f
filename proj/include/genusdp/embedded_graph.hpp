#pragma once

#include <array>
#include <vector>

#include "genusdp/graph.hpp"

namespace genusdp {

struct EmbeddedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;  // +1 orientation-preserving, -1 orientation-reversing
};

// Graph embedded in a surface, given as a signed rotation system: a cyclic
// order of edge ends around every vertex plus a sign per edge. This determines
// the embedding surface up to homeomorphism.
//
// Edge ends are addressed as darts: dart 2*e is edge e at its `u` end, dart
// 2*e+1 at its `v` end. A loop contributes both darts to the same rotation.
struct EmbeddedGraph {
  int vertex_count = 0;
  std::vector<EmbeddedEdge> edges;
  std::vector<std::vector<int>> rotation;  // rotation[v]: darts at v, cyclic

  int edge_count() const { return static_cast<int>(edges.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  bool is_loop(int e) const { return edges[e].u == edges[e].v; }

  static int twin(int dart) { return dart ^ 1; }
  static int edge_of(int dart) { return dart >> 1; }
  static int end_of(int dart) { return dart & 1; }
  static int dart_at(int e, int end) { return 2 * e + end; }
  int vertex_of(int dart) const {
    const EmbeddedEdge& e = edges[edge_of(dart)];
    return end_of(dart) == 0 ? e.u : e.v;
  }

  // Position of every dart inside its vertex rotation.
  std::vector<int> dart_positions() const;

  Graph underlying() const;

  // Throws EmbeddingError unless every dart occurs exactly once in the
  // rotation of its own vertex and all signs are +-1.
  void validate() const;
};

// Face walks are traced on states (dart, side). The side flips whenever the
// walk crosses an orientation-reversing edge. Each face is traced once in
// each direction; the two traversals are exchanged by `mirror_state`, and
// trace_faces keeps one walk per face.
int face_state(int dart, int side);
int face_state_dart(int state);
int face_state_side(int state);
int face_transition(const EmbeddedGraph& g, const std::vector<int>& dart_pos, int state);
int mirror_state(const EmbeddedGraph& g, int state);

// One kept traversal of a face. darts[i] with sides[i] is the i-th edge side
// on the walk; corners[i] is the corner crossed between steps i and i+1.
struct FaceWalk {
  std::vector<int> darts;
  std::vector<int> sides;
  std::vector<int> corners;

  int length() const { return static_cast<int>(darts.size()); }
};

// A corner is an angular sector at a vertex: corner (v, p) sits between
// rotation[v][p] and rotation[v][p+1], cyclically. Corner ids are global,
// corner_offset[v] + p. Every corner is crossed by exactly one kept walk,
// and every edge carries exactly two side items across the kept walks.
struct FaceData {
  std::vector<FaceWalk> faces;
  std::vector<int> corner_offset;  // size vertex_count + 1
  int corner_count = 0;

  std::vector<int> corner_face;  // corner -> face containing it
  std::vector<int> corner_item;  // corner -> index i with faces[f].corners[i] == corner

  std::vector<std::array<int, 2>> edge_face;  // edge -> faces of its two traversals
  std::vector<std::array<int, 2>> edge_item;  // edge -> step index within those faces

  int corner_id(int v, int gap) const { return corner_offset[v] + gap; }
  int corner_vertex(int corner) const;
  int corner_gap(int corner) const { return corner - corner_offset[corner_vertex(corner)]; }
  int face_count() const { return static_cast<int>(faces.size()); }
};

FaceData trace_faces(const EmbeddedGraph& g);

// Faces including one per isolated vertex (a vertex alone on a sphere).
int total_face_count(const EmbeddedGraph& g);

// Euler genus of the disjoint union: sum of (2 - chi) over components, chi
// evaluated from the traced faces. 0 means every component is planar(ly
// embedded), 1 a projective plane, 2 a torus or Klein bottle, and so on.
int euler_genus(const EmbeddedGraph& g);

// True when no cycle has negative sign product (loops count as cycles).
bool is_orientable(const EmbeddedGraph& g);

// Reverses rotation[v] and negates the sign of every non-loop edge at v.
// The embedding this describes is unchanged.
EmbeddedGraph flip_vertex(const EmbeddedGraph& g, int v);

// Flips a vertex set so every sign becomes +1. Requires is_orientable.
EmbeddedGraph normalized_all_positive(const EmbeddedGraph& g);

// Same embedding up to per-vertex flips. Edge ids must correspond; an edge
// may have its endpoints listed in either order.
bool embeddings_equivalent(const EmbeddedGraph& a, const EmbeddedGraph& b);

// Renames vertices by a bijection old -> new. Edge and dart ids stay put.
EmbeddedGraph rename_vertices(const EmbeddedGraph& g, const std::vector<int>& new_id);

// Renumbers edges by a bijection old -> new; darts follow their edges.
EmbeddedGraph reorder_edges(const EmbeddedGraph& g, const std::vector<int>& new_id);

struct ComponentSplit {
  std::vector<EmbeddedGraph> parts;
  std::vector<int> vertex_part, vertex_local;  // original vertex -> part, local id
  std::vector<int> edge_part, edge_local;
  std::vector<std::vector<int>> part_vertices;  // part -> original ids, ascending
  std::vector<std::vector<int>> part_edges;
};

// Connected components with their induced embeddings. Parts are ordered by
// smallest original vertex; ids inside a part keep ascending original order.
ComponentSplit split_components(const EmbeddedGraph& g);

struct InducedEmbedding {
  EmbeddedGraph graph;
  std::vector<int> vertex_map;  // old -> new, -1 if removed
  std::vector<int> edge_map;
  std::vector<int> vertex_back;  // new -> old
  std::vector<int> edge_back;
};

// Deletes the given vertices and all edges touching them. Surviving rotations
// keep their cyclic order, so the result is the induced sub-embedding.
InducedEmbedding remove_vertices(const EmbeddedGraph& g, const std::vector<int>& vs);

}  // namespace genusdp
