#include "cra/tree.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "cra/error.h"

namespace cra {
namespace {

std::vector<Edge> Canonical(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

int Find(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool IsSpanningTree(int n, const std::vector<Edge>& edges) {
  if (n <= 0 || static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) return false;
    const int ru = Find(uf, u), rv = Find(uf, v);
    if (ru == rv) return false;
    uf[ru] = rv;
  }
  return true;
}

ConnectivityTree::ConnectivityTree(int n, std::vector<Edge> edges, int root)
    : n_(n), edges_(Canonical(std::move(edges))), root_(root) {
  if (!IsSpanningTree(n_, edges_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edges do not form a spanning tree on " + std::to_string(n) +
                    " points");
  }
  if (root_ < 0 || root_ >= n_) {
    throw Error(ErrorCode::kInvalidArgument, "tree root out of range");
  }
}

std::vector<int> ConnectivityTree::Degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<bool> ConnectivityTree::Leaves() const {
  const std::vector<int> deg = Degrees();
  std::vector<bool> leaves(n_);
  for (int i = 0; i < n_; ++i) leaves[i] = deg[i] == 1;
  return leaves;
}

RootedTree Root(int n, const std::vector<Edge>& edges, int root) {
  std::vector<int> start(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++start[u + 1];
    ++start[v + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<int> adj(2 * edges.size());
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (const auto& [u, v] : edges) {
    adj[fill[u]++] = v;
    adj[fill[v]++] = u;
  }
  RootedTree t;
  t.parent.assign(n, -1);
  t.order.reserve(n);
  t.order.push_back(root);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const int v = t.order[head];
    for (int k = start[v]; k < start[v + 1]; ++k) {
      const int w = adj[k];
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.order.push_back(w);
    }
  }
  return t;
}

}  // namespace cra
