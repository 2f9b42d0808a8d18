#include "hpa/random_network.hpp"

#include <algorithm>
#include <stdexcept>

#include "hpa/tangle.hpp"

namespace hpa {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string fresh_name(const LabeledNetwork& n) {
  for (std::size_t i = n.boxes.size() + 1;; ++i) {
    std::string name = "b" + std::to_string(i);
    if (!n.boxes.count(name)) return name;
  }
}

// Box endpoints 4b + p, p clockwise, joined by a perfect matching.
struct PlaneMap {
  int boxes = 0;
  std::vector<int> partner;

  void join(int a, int b) {
    partner[a] = b;
    partner[b] = a;
  }

  // Orbits of e -> next(partner(e)); each lists the segments bounding one region.
  std::vector<std::vector<int>> regions() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(partner.size(), false);
    for (int e = 0; e < static_cast<int>(partner.size()); ++e) {
      if (seen[e]) continue;
      out.emplace_back();
      for (int x = e; !seen[x];) {
        seen[x] = true;
        out.back().push_back(x);
        const int y = partner[x];
        x = 4 * (y / 4) + (y % 4 + 1) % 4;
      }
    }
    return out;
  }

  // Connected maps only: genus zero iff F = V + 2.
  bool planar() const { return static_cast<int>(regions().size()) == boxes + 2; }
};

PlaneMap random_plane_map(int boxes, std::mt19937_64& rng) {
  PlaneMap m;
  m.boxes = 1;
  m.partner.assign(4, 0);
  if (chance(rng, 0.5)) {
    m.join(0, 1);
    m.join(2, 3);
  } else {
    m.join(0, 3);
    m.join(1, 2);
  }
  while (m.boxes < boxes) {
    const auto regions = m.regions();
    const auto& region = regions[uniform(rng, 0, static_cast<int>(regions.size()) - 1)];
    const int x1 = region[uniform(rng, 0, static_cast<int>(region.size()) - 1)];
    const int x2 = region[uniform(rng, 0, static_cast<int>(region.size()) - 1)];
    const int y1 = m.partner[x1], y2 = m.partner[x2];
    const bool same = x2 == x1 || x2 == y1;
    const int b = 4 * m.boxes;

    std::vector<PlaneMap> options;
    int perm[4] = {0, 1, 2, 3};
    do {
      PlaneMap next = m;
      next.boxes += 1;
      next.partner.resize(b + 4);
      if (same) {
        next.join(x1, b + perm[0]);
        next.join(b + perm[1], b + perm[2]);
        next.join(b + perm[3], y1);
      } else {
        next.join(x1, b + perm[0]);
        next.join(b + perm[1], y1);
        next.join(x2, b + perm[2]);
        next.join(b + perm[3], y2);
      }
      if (next.planar()) options.push_back(std::move(next));
    } while (std::next_permutation(perm, perm + 4));
    m = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
  }
  return m;
}

// Turns each box so every strand runs from an exit to an entry, then by a
// random half turn.
Tangle orient(const PlaneMap& m, std::mt19937_64& rng) {
  std::vector<int> turn(m.boxes, -1);
  std::vector<int> stack;
  for (int root = 0; root < m.boxes; ++root) {
    if (turn[root] >= 0) continue;
    turn[root] = uniform(rng, 0, 1);
    stack.push_back(root);
    while (!stack.empty()) {
      const int b = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        const int e = m.partner[4 * b + p];
        const int c = e / 4, want = (p + turn[b] + 1 + e % 4) % 2;
        if (turn[c] < 0) {
          turn[c] = want;
          stack.push_back(c);
        } else if (turn[c] != want) {
          throw std::logic_error("random network: strands cannot be oriented");
        }
      }
    }
  }
  for (auto& t : turn) t += 2 * uniform(rng, 0, 1);
  Tangle t(m.boxes, 0);
  auto moved = [&](int e) { return 4 * (e / 4) + (e % 4 + turn[e / 4]) % 4; };
  for (int e = 0; e < 4 * m.boxes; ++e)
    if (e < m.partner[e]) t.connect(moved(e), moved(m.partner[e]));
  return t;
}

// Inserts p before position `at` of a loop, or starts a loop when none has passes.
void insert_pass(LabeledNetwork& n, std::vector<Pass> passes, std::mt19937_64& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t l = 0; l < n.loops.size(); ++l) candidates.push_back(l);
  if (candidates.empty()) {
    n.loops.push_back(std::move(passes));
    return;
  }
  Loop& loop = n.loops[candidates[uniform(rng, 0, static_cast<int>(candidates.size()) - 1)]];
  const int at = uniform(rng, 0, static_cast<int>(loop.size()));
  loop.insert(loop.begin() + at, passes.begin(), passes.end());
}

}  // namespace

Element random_label(const HopfAlgebra& h, std::mt19937_64& rng) {
  const int n = static_cast<int>(h.dim());
  const int kind = uniform(rng, 0, 9);
  if (kind == 0) return h.one();
  if (kind == 1) return h.integral();
  if (kind == 2) return h.antipode(h.basis(uniform(rng, 0, n - 1)));
  if (kind == 3) {
    Element e(h.dim());
    for (int t = 0; t < 2; ++t) e[uniform(rng, 0, n - 1)] += Scalar(Rational(uniform(rng, -3, 3), uniform(rng, 1, 2)));
    if (!e.is_zero()) return e;
  }
  return h.basis(uniform(rng, 0, n - 1));
}

void add_kink(LabeledNetwork& n, const Element& label, std::mt19937_64& rng) {
  const std::string name = fresh_name(n);
  n.boxes.emplace(name, label);
  insert_pass(n, {{name, Side::other}, {name, Side::star}}, rng);
}

void add_closed_pass(LabeledNetwork& n, const Element& label, std::mt19937_64& rng) {
  const std::string name = fresh_name(n);
  const Side closed = chance(rng, 0.5) ? Side::star : Side::other;
  n.boxes.emplace(name, label);
  insert_pass(n, {{name, opposite(closed)}}, rng);
  n.loops.push_back({{name, closed}});
}

LabeledNetwork random_planar_network(const HopfAlgebra& h, std::mt19937_64& rng, const RandomNetworkOptions& opt) {
  const int boxes = uniform(rng, 0, static_cast<int>(opt.max_boxes));
  Tangle t(0, 0);
  if (boxes == 0)
    t.add_free_loops(1);
  else
    t = orient(random_plane_map(boxes, rng), rng);

  std::vector<Element> labels;
  for (int b = 0; b < t.boxes(); ++b) labels.push_back(random_label(h, rng));
  LabeledNetwork n = to_network(t, labels, chance(rng, 0.5) ? Shading::plus : Shading::minus);

  if (n.boxes.size() < opt.max_boxes && chance(rng, opt.decoration)) add_kink(n, random_label(h, rng), rng);
  if (n.boxes.size() < opt.max_boxes && chance(rng, opt.decoration)) add_closed_pass(n, random_label(h, rng), rng);
  if (chance(rng, opt.decoration)) n.loops.emplace_back();
  return n;
}

InvarianceTally check_move_invariance(const HopfAlgebra& h, Move move, std::size_t count, std::mt19937_64& rng,
                                      const RandomNetworkOptions& opt) {
  InvarianceTally tally;
  std::size_t attempts = 0;
  while (tally.applied < count) {
    if (++attempts > 100 * count + 100) throw std::runtime_error("no " + to_string(move) + " sites found in random networks");
    LabeledNetwork n = random_planar_network(h, rng, opt);
    auto pick_box = [&]() -> std::string {
      if (n.boxes.empty()) add_kink(n, random_label(h, rng), rng);
      auto it = n.boxes.begin();
      std::advance(it, uniform(rng, 0, static_cast<int>(n.boxes.size()) - 1));
      return it->first;
    };
    std::vector<Site> sites = find_sites(n, h, move);
    if (sites.empty()) {
      switch (move) {
        case Move::M: n.loops.emplace_back(); break;
        case Move::U: n.boxes[pick_box()] = h.one(); break;
        case Move::I: n.boxes[pick_box()] = h.integral(); break;
        case Move::C: add_kink(n, random_label(h, rng), rng); break;
        case Move::T: add_closed_pass(n, random_label(h, rng), rng); break;
        case Move::A: pick_box(); break;
        case Move::E: continue;
      }
      sites = find_sites(n, h, move);
    }
    const Site& site = sites[uniform(rng, 0, static_cast<int>(sites.size()) - 1)];
    const Scalar before = evaluate(n, h);
    const Scalar after = evaluate(apply_move(n, h, site), h);
    ++tally.applied;
    if (before != after) {
      if (tally.failures++ == 0)
        tally.first_failure = to_string(move) + " at box " + site.box + ": " + before.to_string() + " became " + after.to_string();
    }
  }
  return tally;
}

}  // namespace hpa
