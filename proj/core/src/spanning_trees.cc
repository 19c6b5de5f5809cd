#include <string>

#include "cra/error.h"
#include "cra/exact_solver.h"

namespace cra {

std::int64_t CountSpanningTrees(int n) {
  if (n <= 2) return 1;
  std::int64_t count = 1;
  for (int i = 0; i < n - 2; ++i) count *= n;
  return count;
}

std::vector<Edge> PruferDecode(std::span<const int> sequence, int n) {
  std::vector<int> degree(n, 1);
  for (int a : sequence) ++degree[a];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int a : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
      break;
    }
  }
  return edges;
}

std::int64_t EnumerateSpanningTrees(
    int n, const std::function<void(const ConnectivityTree&)>& visit,
    int max_n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "spanning tree enumeration needs at least 2 points");
  }
  if (n > max_n) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration too large: n=" + std::to_string(n) + " has " +
                    std::to_string(CountSpanningTrees(n)) +
                    " spanning trees (cap n=" + std::to_string(max_n) + ")");
  }
  std::vector<int> sequence(n - 2, 0);
  std::int64_t count = 0;
  while (true) {
    visit(ConnectivityTree(n, PruferDecode(sequence, n)));
    ++count;
    int pos = n - 3;
    while (pos >= 0 && ++sequence[pos] == n) sequence[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace cra
