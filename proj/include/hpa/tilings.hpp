#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hpa/budget.hpp"
#include "hpa/hopf.hpp"
#include "hpa/tangle.hpp"

namespace hpa {

/// A tiling of the convex 2k-gon by quadrilaterals, vertices 1..2k clockwise,
/// stored as its sorted set of diagonals (a < b).
struct Tiling {
  int k = 2;
  std::vector<std::pair<int, int>> diagonals;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

std::string to_string(const Tiling& t);

/// Faces of the subdivision, each as its vertex list in clockwise order.
std::vector<std::vector<int>> faces(const Tiling& t);

/// Non-crossing, k − 2 diagonals, every face a quadrilateral.
bool is_valid(const Tiling& t);

/// All tilings in lexicographic order.  Throws BudgetExceeded above the cap.
std::vector<Tiling> enumerate_tilings(int k, const Budget& budget = {});

std::vector<Tiling> hexagon_neighbors(const Tiling& t);

struct FlipGraph {
  int k = 2;
  std::vector<Tiling> vertices;
  std::vector<std::pair<int, int>> edges;
  /// BFS tree from vertex 0; it spans the graph exactly when connected.
  std::vector<std::pair<int, int>> spanning_tree;
  int components = 0;
  bool connected() const { return components == 1; }
};

FlipGraph flip_graph(int k, const Budget& budget = {});
std::string to_dot(const FlipGraph& g);

/// The tiling with every diagonal at vertex 1.
Tiling fan_tiling(int k);

/// Skeleton with one box per face, faces taken in lexicographic order of
/// their vertex lists.  stars[f] is the white (odd) vertex carrying the * of
/// face f; by default the smallest one.
Tangle tiling_tangle(const Tiling& t, const std::vector<int>& stars = {});

/// tiling_tangle restricted to k ≤ 4.
Tangle tiling_to_tangle(const Tiling& t, const std::vector<int>& stars = {});

struct SurjectivityResult {
  std::size_t rank = 0;
  std::size_t expected = 0;
  bool full_rank() const { return rank == expected; }
};

/// Rank of δ^{-k}·Z(skeleton(e_𝐢) · X_k*(e^𝐣)) over all basis multi-indices.
SurjectivityResult surjectivity_gram(const HopfAlgebra& h, const Tangle& skeleton, const Budget& budget = {});

}  // namespace hpa
