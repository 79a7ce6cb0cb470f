#pragma once

#include <vector>

#include "genusdp/embedded_graph.hpp"

namespace genusdp {

// Map on a surface given by three involutions on flags. A flag stands for a
// mutually incident (vertex, edge, face) triple; s0 changes only the vertex,
// s1 only the edge, s2 only the face. Vertices are the orbits of <s1,s2>,
// edges the orbits of <s0,s2> (always 4 flags), faces the orbits of <s0,s1>.
//
// Flags of an embedded graph are its face-tracing states, so flag 2*d + b is
// dart d on its positive (b=0) or negative (b=1) side.
struct FlagMap {
  int flag_count = 0;
  std::vector<int> s0, s1, s2;

  // Checks the involution axioms and that s0 s2 is a fixed-point-free
  // involution. Throws InternalError on failure.
  void validate() const;
};

FlagMap to_flags(const EmbeddedGraph& g);

// Swapping the roles of vertices and faces. An involution.
FlagMap dual_flags(const FlagMap& f);

// Vertex-face incidence map on the same surface: every flag doubles, primal
// vertices and faces both become vertices, corners become the edges, and the
// faces are quadrangular tiles in bijection with the primal edges.
FlagMap radial_flags(const FlagMap& f);

// Orbit index per flag under the group generated by two permutations,
// numbered in increasing order of each orbit's minimal flag.
std::vector<int> orbit_ids(const std::vector<int>& a, const std::vector<int>& b);

// The corner crossed between the face steps s1(flag) and flag; constant on
// {flag, s1(flag)}, and every corner is hit by exactly two such pairs' worth
// of flags (one pair).
int corner_of_flag(const EmbeddedGraph& g, const FaceData& fd, const std::vector<int>& dart_pos,
                   const FlagMap& f, int flag);

struct FromFlags {
  EmbeddedGraph graph;
  std::vector<int> flag_vertex;  // flag -> vertex of graph
  std::vector<int> flag_edge;    // flag -> edge of graph
  std::vector<int> flag_end;     // flag -> end 0/1 of that edge
};

// Rebuilds a signed rotation system from a flag map. Vertices and edges are
// numbered by their orbits' minimal flags; each vertex's rotation direction
// is the s1 s2 walk from its minimal flag, and signs record whether the two
// chosen directions disagree across an edge.
FromFlags from_flags(const FlagMap& f);

// Geometric dual of a connected or disconnected embedding. Dual vertex i is
// face i of trace_faces, continuing with one vertex per isolated primal
// vertex; dual edge ids equal primal edge ids.
EmbeddedGraph dual(const EmbeddedGraph& g);

struct RadialResult {
  EmbeddedGraph graph;
  int primal_vertex_count = 0;  // radial vertices [0, n) are the primal vertices
  int face_count = 0;           // radial vertex n + f is primal face f
  // Radial edge ids equal primal corner ids, so radial edge c joins
  // corner_vertex(c) and n + corner_face(c).
};

// Requires a graph without isolated vertices. Same surface as g.
RadialResult radial(const EmbeddedGraph& g);

// Dual of the radial: 4-regular, on the same surface. Medial vertex i is
// primal edge i; medial edge ids equal primal corner ids.
EmbeddedGraph medial(const EmbeddedGraph& g);

}  // namespace genusdp
