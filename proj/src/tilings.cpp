#include "hpa/tilings.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "hpa/pairing.hpp"

namespace hpa {

namespace {

using Diagonal = std::pair<int, int>;

Diagonal ordered(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

// All diagonal sets tiling the polygon with the given clockwise vertex list.
std::vector<std::vector<Diagonal>> tile(const std::vector<int>& poly) {
  const std::size_t m = poly.size();
  if (m <= 4) return {{}};
  std::vector<std::vector<Diagonal>> out;
  // The quadrilateral on edge (poly[0], poly[1]) has its other corners at i and j.
  for (std::size_t i = 2; i + 2 <= m; i += 2)
    for (std::size_t j = i + 1; j < m; j += 2) {
      std::vector<Diagonal> own;
      if (i != 2) own.push_back(ordered(poly[1], poly[i]));
      if (j != i + 1) own.push_back(ordered(poly[i], poly[j]));
      if (j != m - 1) own.push_back(ordered(poly[j], poly[0]));
      const std::vector<int> p1(poly.begin() + 1, poly.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      const std::vector<int> p2(poly.begin() + static_cast<std::ptrdiff_t>(i), poly.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      std::vector<int> p3(poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end());
      p3.push_back(poly[0]);
      for (const auto& a : tile(p1))
        for (const auto& b : tile(p2))
          for (const auto& c : tile(p3)) {
            std::vector<Diagonal> all = own;
            all.insert(all.end(), a.begin(), a.end());
            all.insert(all.end(), b.begin(), b.end());
            all.insert(all.end(), c.begin(), c.end());
            std::sort(all.begin(), all.end());
            out.push_back(std::move(all));
          }
    }
  return out;
}

bool crosses(const Diagonal& d, const Diagonal& e) {
  auto strictly_inside = [](int x, const Diagonal& f) { return f.first < x && x < f.second; };
  if (d.first == e.first || d.first == e.second || d.second == e.first || d.second == e.second) return false;
  return strictly_inside(e.first, d) != strictly_inside(e.second, d);
}

void split_faces(const std::vector<int>& poly, const std::vector<Diagonal>& diags, std::vector<std::vector<int>>& out) {
  if (diags.empty()) {
    out.push_back(poly);
    return;
  }
  const Diagonal d = diags.front();
  const auto ia = std::find(poly.begin(), poly.end(), d.first) - poly.begin();
  const auto ib = std::find(poly.begin(), poly.end(), d.second) - poly.begin();
  std::vector<int> left(poly.begin() + ia, poly.begin() + ib + 1);
  std::vector<int> right(poly.begin() + ib, poly.end());
  right.insert(right.end(), poly.begin(), poly.begin() + ia + 1);
  std::sort(right.begin(), right.end());
  auto within = [](const std::vector<int>& p, const Diagonal& e) {
    return std::binary_search(p.begin(), p.end(), e.first) && std::binary_search(p.begin(), p.end(), e.second);
  };
  std::vector<Diagonal> dl, dr;
  for (std::size_t t = 1; t < diags.size(); ++t) (within(left, diags[t]) ? dl : dr).push_back(diags[t]);
  split_faces(left, dl, out);
  split_faces(right, dr, out);
}

void check_k(int k, const Budget& budget) {
  if (k < 2) throw std::invalid_argument("tilings need k >= 2");
  if (k > budget.tiling_k)
    throw BudgetExceeded("k = " + std::to_string(k) + " exceeds the tiling cap " + std::to_string(budget.tiling_k));
}

}  // namespace

std::string to_string(const Tiling& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(t.diagonals[i].first) + "," + std::to_string(t.diagonals[i].second) + ")";
  }
  return s + "}";
}

std::vector<std::vector<int>> faces(const Tiling& t) {
  std::vector<int> poly(2 * t.k);
  for (int v = 0; v < 2 * t.k; ++v) poly[v] = v + 1;
  std::vector<std::vector<int>> out;
  split_faces(poly, t.diagonals, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_valid(const Tiling& t) {
  if (t.k < 2 || static_cast<int>(t.diagonals.size()) != t.k - 2) return false;
  std::set<Diagonal> seen;
  for (const auto& d : t.diagonals) {
    if (d.first < 1 || d.second > 2 * t.k || d.first >= d.second) return false;
    if (d.second - d.first == 1 || (d.first == 1 && d.second == 2 * t.k)) return false;
    if (!seen.insert(d).second) return false;
  }
  for (std::size_t i = 0; i < t.diagonals.size(); ++i)
    for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
      if (crosses(t.diagonals[i], t.diagonals[j])) return false;
  for (const auto& f : faces(t))
    if (f.size() != 4) return false;
  return true;
}

std::vector<Tiling> enumerate_tilings(int k, const Budget& budget) {
  check_k(k, budget);
  std::vector<int> poly(2 * k);
  for (int v = 0; v < 2 * k; ++v) poly[v] = v + 1;
  std::vector<Tiling> out;
  for (auto& d : tile(poly)) out.push_back({k, std::move(d)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tiling> hexagon_neighbors(const Tiling& t) {
  const auto fs = faces(t);
  std::vector<Tiling> out;
  for (const auto& d : t.diagonals) {
    std::set<int> hex;
    for (const auto& f : fs)
      if (std::count(f.begin(), f.end(), d.first) && std::count(f.begin(), f.end(), d.second)) hex.insert(f.begin(), f.end());
    const std::vector<int> h(hex.begin(), hex.end());
    if (h.size() != 6) throw std::logic_error("hexagon move: diagonal does not separate two quadrilaterals");
    for (int p = 0; p < 3; ++p) {
      const Diagonal e{h[p], h[p + 3]};
      if (e == d) continue;
      Tiling n = t;
      std::replace(n.diagonals.begin(), n.diagonals.end(), d, e);
      std::sort(n.diagonals.begin(), n.diagonals.end());
      out.push_back(std::move(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlipGraph flip_graph(int k, const Budget& budget) {
  FlipGraph g;
  g.k = k;
  g.vertices = enumerate_tilings(k, budget);
  std::map<Tiling, int> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (const auto& nb : hexagon_neighbors(g.vertices[i])) {
      const int j = index.at(nb);
      adj[i].push_back(j);
      if (static_cast<int>(i) < j) g.edges.emplace_back(static_cast<int>(i), j);
    }
  std::vector<bool> seen(g.vertices.size(), false);
  for (std::size_t root = 0; root < g.vertices.size(); ++root) {
    if (seen[root]) continue;
    ++g.components;
    std::queue<int> q;
    q.push(static_cast<int>(root));
    seen[root] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          if (root == 0) g.spanning_tree.emplace_back(v, w);
          q.push(w);
        }
    }
  }
  return g;
}

std::string to_dot(const FlipGraph& g) {
  std::ostringstream os;
  os << "graph flips_k" << g.k << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "  t" << i << " [label=\"" << to_string(g.vertices[i]) << "\"];\n";
  std::set<std::pair<int, int>> tree(g.spanning_tree.begin(), g.spanning_tree.end());
  for (const auto& [a, b] : g.edges) {
    os << "  t" << a << " -- t" << b;
    if (tree.count({a, b}) || tree.count({b, a})) os << " [style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

Tiling fan_tiling(int k) {
  Tiling t{k, {}};
  for (int m = 1; m <= k - 2; ++m) t.diagonals.emplace_back(1, 2 * m + 2);
  return t;
}

Tangle tiling_tangle(const Tiling& t, const std::vector<int>& stars) {
  if (!is_valid(t)) throw std::invalid_argument("tiling " + to_string(t) + " is not a quadrilateral tiling");
  const auto fs = faces(t);
  if (!stars.empty() && stars.size() != fs.size()) throw std::invalid_argument("tiling: one * per face required");
  const int k2 = 2 * t.k;
  Tangle tangle(static_cast<int>(fs.size()), t.k);
  std::map<Diagonal, int> pending;
  for (std::size_t b = 0; b < fs.size(); ++b) {
    std::vector<int> f = fs[b];
    const int star = stars.empty() ? (f[0] % 2 == 1 ? f[0] : f[1]) : stars[b];
    const auto it = std::find(f.begin(), f.end(), star);
    if (it == f.end() || star % 2 == 0)
      throw std::invalid_argument("tiling: * of face " + std::to_string(b) + " must be one of its odd vertices");
    std::rotate(f.begin(), it, f.end());
    for (int side = 0; side < 4; ++side) {
      const int u = f[side] - 1;
      const int v = f[(side + 1) % 4] - 1;
      const int e = tangle.endpoint(static_cast<int>(b), side);
      if (v == (u + 1) % k2) {
        tangle.connect(e, tangle.boundary(u));
        continue;
      }
      const Diagonal d = ordered(u, v);
      auto p = pending.find(d);
      if (p == pending.end()) {
        pending[d] = e;
      } else {
        tangle.connect(e, p->second);
        pending.erase(p);
      }
    }
  }
  return tangle;
}

Tangle tiling_to_tangle(const Tiling& t, const std::vector<int>& stars) {
  if (t.k > 4) throw std::invalid_argument("tiling_to_tangle is limited to k <= 4");
  return tiling_tangle(t, stars);
}

SurjectivityResult surjectivity_gram(const HopfAlgebra& h, const Tangle& skeleton, const Budget& budget) {
  SurjectivityResult r;
  r.rank = rank(pairing_matrix(h, skeleton, budget));
  std::size_t expected = 1;
  for (int i = 0; i < skeleton.colour() - 1; ++i) expected *= h.dim();
  r.expected = expected;
  return r;
}

}  // namespace hpa
