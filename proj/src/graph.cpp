#include "genusdp/graph.hpp"

#include <algorithm>
#include <set>

#include "genusdp/errors.hpp"

namespace genusdp {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  return adj;
}

std::vector<int> component_labels(const Graph& g) {
  return component_labels_without(g, {});
}

std::vector<int> component_labels_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<int> label(g.n, -2);
  for (int v : removed) label[v] = -1;
  const auto adj = adjacency(g);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] != -2) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (label[w] != -2) continue;
        label[w] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  const auto label = component_labels(g);
  int c = 0;
  for (int l : label) c = std::max(c, l + 1);
  return c;
}

int component_count_without(const Graph& g, const std::vector<int>& removed) {
  const auto label = component_labels_without(g, removed);
  int c = 0;
  for (int l : label) c = std::max(c, l + 1);
  return c;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  std::set<std::pair<int, int>> present;
  for (auto [u, v] : g.edges) {
    if (u > v) std::swap(u, v);
    present.insert({u, v});
  }
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      int a = std::min(vs[i], vs[j]), b = std::max(vs[i], vs[j]);
      if (a == b || !present.count({a, b})) return false;
    }
  return true;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.n <= k) return false;
  // Every deletion set of size below k must leave the rest connected. Sizes
  // under k-1 matter too: a small separator is not always extendable when one
  // side is tiny.
  std::vector<int> pick;
  auto rec = [&](auto&& self, int first, int left) -> bool {
    if (left == 0) return component_count_without(g, pick) == 1;
    for (int v = first; v < g.n; ++v) {
      pick.push_back(v);
      bool ok = self(self, v + 1, left - 1);
      pick.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (int size = 0; size < k; ++size)
    if (!rec(rec, 0, size)) return false;
  return true;
}

}  // namespace genusdp
