#ifndef CRA_TREE_H_
#define CRA_TREE_H_

#include <compare>
#include <utility>
#include <vector>

namespace cra {

using Edge = std::pair<int, int>;

// Spanning tree over point indices {0, ..., n-1}. Edges are kept in
// canonical form (u < v, sorted) so trees compare lexicographically.
class ConnectivityTree {
 public:
  ConnectivityTree() = default;
  // Throws kInvalidArgument unless the edges form a spanning tree on n.
  ConnectivityTree(int n, std::vector<Edge> edges, int root = 0);

  int size() const { return n_; }
  int root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> Degrees() const;
  std::vector<bool> Leaves() const;

  friend bool operator==(const ConnectivityTree& a, const ConnectivityTree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend std::strong_ordering operator<=>(const ConnectivityTree& a,
                                          const ConnectivityTree& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  int root_ = 0;
};

bool IsSpanningTree(int n, const std::vector<Edge>& edges);

// Parent pointers plus a BFS order (root first) for bottom-up passes.
struct RootedTree {
  std::vector<int> parent;  // parent[root] == -1
  std::vector<int> order;
};

RootedTree Root(int n, const std::vector<Edge>& edges, int root);

}  // namespace cra

#endif  // CRA_TREE_H_
