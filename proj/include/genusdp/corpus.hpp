#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "genusdp/embedded_graph.hpp"

namespace genusdp {

// Hand-assembled embeddings and deterministic generator families shared by
// the CLI, the benchmarks and the tests.

// Rotations as (edge, end) slots per vertex.
EmbeddedGraph build_embedding(int n, std::vector<EmbeddedEdge> edges,
                              std::vector<std::vector<std::pair<int, int>>> slots);

// Rotations as neighbor lists; simple graphs only.
EmbeddedGraph embedding_from_neighbors(int n, std::vector<std::pair<int, int>> edges,
                                       std::vector<std::vector<int>> neighbor_order);

EmbeddedGraph single_loop(int sign);
EmbeddedGraph planar_cycle(int k);   // k >= 3
EmbeddedGraph planar_clique(int n);  // n in 1..4
EmbeddedGraph wheel(int rim);        // rim >= 3; vertex 0 is the hub
EmbeddedGraph prism();
EmbeddedGraph cube();
EmbeddedGraph octahedron();

// Grid embeddings; vertex (i, j) has id i*cols + j. The open grid is planar;
// the wrapped ones live on the torus and the Klein bottle (rows, cols >= 3).
EmbeddedGraph planar_grid(int rows, int cols);
EmbeddedGraph toroidal_grid(int rows, int cols);
EmbeddedGraph klein_grid(int rows, int cols);

// Complete graphs embedded on the torus with all faces counted: K5 with 5
// faces, K7 with 14 (a triangulation).
EmbeddedGraph toroidal_k5();
EmbeddedGraph toroidal_k7();

// Uniformly stacked planar triangulation: planar clique on four vertices,
// then vertices inserted into faces picked by the seeded generator. Simple,
// maximal planar, 3 vertices short of 3 * vertices edges.
EmbeddedGraph stacked_triangulation(int vertices, std::uint32_t seed);

}  // namespace genusdp
