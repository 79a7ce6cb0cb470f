#pragma once

#include <utility>
#include <vector>

namespace genusdp {

// Plain multigraph. Edge ids are positions in `edges`; loops and parallel
// edges are allowed everywhere unless a function says otherwise.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<int>> adjacency(const Graph& g);

// Component label per vertex, numbered by first occurrence.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

bool is_simple(const Graph& g);
bool is_clique(const Graph& g, const std::vector<int>& vs);

// Labels after deleting the given vertices; deleted vertices get -1.
std::vector<int> component_labels_without(const Graph& g, const std::vector<int>& removed);
int component_count_without(const Graph& g, const std::vector<int>& removed);

// Connectivity in Menger's sense: more than k vertices and no separating set
// of fewer than k vertices. Tests deletion of every small subset, so only
// sensible for small k.
bool is_k_connected(const Graph& g, int k);

}  // namespace genusdp
