#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpa/hopf.hpp"
#include "hpa/io.hpp"

namespace hpa::test {

inline std::string data_path(const std::string& rel) { return std::string(HPA_DATA_DIR) + "/" + rel; }

struct Case {
  std::string name;
  HopfAlgebra h;
};

// ℚ[ℤ/2], ℚ[ℤ/2×ℤ/2], ℚ[S₃] and their duals, loaded once.
inline const std::vector<Case>& family() {
  static const std::vector<Case> all = [] {
    std::vector<Case> v;
    for (const char* name : {"z2", "z2xz2", "s3", "z2_dual", "z2xz2_dual", "s3_dual"})
      v.push_back({name, load_hopf(data_path(std::string(name) + ".json"))});
    return v;
  }();
  return all;
}

inline const HopfAlgebra& algebra(const std::string& name) {
  for (const auto& c : family())
    if (c.name == name) return c.h;
  throw std::out_of_range(name);
}

// Permutations of {0,1,2} in lexicographic order, composed as (a∘b)(i) = a(b(i)).
inline GroupTable s3_table_by_composition() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

}  // namespace hpa::test

#include "hpa/network.hpp"
#include "hpa/tangle.hpp"

namespace hpa::test {

// Sum of genera over the connected pieces of a network, read off its
// rotation system: χ = V − E + F on each piece.
inline int total_genus(const LabeledNetwork& n) {
  const Tangle t = from_network(n);
  const int v = t.boxes();
  if (v == 0) return 0;
  std::vector<int> comp(v, -1);
  int pieces = 0;
  for (int r = 0; r < v; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<int> stack{r};
    comp[r] = pieces;
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        const int c = t.box_of(t.partner(t.endpoint(b, p)));
        if (comp[c] < 0) comp[c] = pieces, stack.push_back(c);
      }
    }
    ++pieces;
  }
  int faces = 0;
  std::vector<bool> seen(4 * v, false);
  for (int e = 0; e < 4 * v; ++e) {
    if (seen[e]) continue;
    ++faces;
    for (int x = e; !seen[x];) {
      seen[x] = true;
      const int y = t.partner(x);
      x = t.endpoint(t.box_of(y), (t.pos_of(y) + 1) % 4);
    }
  }
  // Σ (2 − 2g) = V − 2V + F.
  return (2 * pieces - (faces - v)) / 2;
}

}  // namespace hpa::test

namespace hpa::test {

inline bool diagonals_cross(const std::pair<int, int>& d, const std::pair<int, int>& e) {
  const auto [a, b] = d;
  const auto [c, f] = e;
  if (a == c || a == f || b == c || b == f) return false;
  return (a < c && c < b) != (a < f && f < b);
}

// Brute force: quadrangulations of the 2k-gon are the sets of k − 2 pairwise
// non-crossing diagonals joining vertices an odd distance apart.
inline std::set<std::vector<std::pair<int, int>>> tiling_oracle(int k) {
  std::vector<std::pair<int, int>> cand;
  for (int a = 1; a <= 2 * k; ++a)
    for (int b = a + 3; b <= 2 * k; b += 2)
      if (!(a == 1 && b == 2 * k)) cand.emplace_back(a, b);
  std::set<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == k - 2) {
      out.insert(chosen);
      return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      bool ok = true;
      for (const auto& d : chosen) ok = ok && !diagonals_cross(d, cand[i]);
      if (!ok) continue;
      chosen.push_back(cand[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace hpa::test
