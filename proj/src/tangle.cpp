#include "hpa/tangle.hpp"

#include <algorithm>

namespace hpa {

namespace {

constexpr int entry_pos(Side s) { return s == Side::star ? 0 : 2; }
constexpr int exit_pos(Side s) { return s == Side::star ? 3 : 1; }

}  // namespace

Tangle::Tangle(int boxes, int colour) : boxes_(boxes), colour_(colour) {
  if (boxes < 0 || colour < 0) throw std::invalid_argument("tangle: negative size");
  partner_.assign(endpoint_count(), unmatched);
}

void Tangle::connect(int a, int b) {
  if (a == b) throw std::invalid_argument("tangle: endpoint joined to itself");
  if (partner_.at(a) != unmatched || partner_.at(b) != unmatched)
    throw std::invalid_argument("tangle: endpoint already joined");
  partner_[a] = b;
  partner_[b] = a;
}

bool Tangle::complete() const {
  return std::none_of(partner_.begin(), partner_.end(), [](int p) { return p == unmatched; });
}

Tangle Tangle::mirror() const {
  Tangle t(boxes_, colour_);
  t.free_loops_ = free_loops_;
  auto image = [&](int e) {
    return is_boundary(e) ? boundary(2 * colour_ - 1 - boundary_index(e)) : endpoint(box_of(e), 3 - pos_of(e));
  };
  for (int e = 0; e < endpoint_count(); ++e)
    if (partner_[e] != unmatched) t.partner_[image(e)] = image(partner_[e]);
  return t;
}

Tangle Tangle::rotate_box(int box, int turns) const {
  Tangle t(boxes_, colour_);
  t.free_loops_ = free_loops_;
  auto image = [&](int e) {
    if (is_boundary(e) || box_of(e) != box) return e;
    return endpoint(box, ((pos_of(e) + turns) % 4 + 4) % 4);
  };
  for (int e = 0; e < endpoint_count(); ++e)
    if (partner_[e] != unmatched) t.partner_[image(e)] = image(partner_[e]);
  return t;
}

Tangle Tangle::rotate_boxes(int turns) const {
  Tangle t = *this;
  for (int b = 0; b < boxes_; ++b) t = t.rotate_box(b, turns);
  return t;
}

Tangle Tangle::fill_box(int box, Fill fill) const {
  if (box < 0 || box >= boxes_) throw std::out_of_range("tangle: no such box");
  if (!complete()) throw std::logic_error("tangle: fill_box needs a complete matching");
  static constexpr int identity_pair[4] = {3, 2, 1, 0};
  static constexpr int cup_cap_pair[4] = {1, 0, 3, 2};
  const int* inner = fill == Fill::identity ? identity_pair : cup_cap_pair;
  auto inside = [&](int e) { return !is_boundary(e) && box_of(e) == box; };
  auto renumber = [&](int e) { return !is_boundary(e) && box_of(e) < box ? e : e - 4; };

  Tangle t(boxes_ - 1, colour_);
  t.free_loops_ = free_loops_;
  std::vector<bool> seen(4, false);
  for (int e = 0; e < endpoint_count(); ++e) {
    if (inside(e)) continue;
    int p = partner_[e];
    while (inside(p)) {
      seen[pos_of(p)] = true;
      const int q = endpoint(box, inner[pos_of(p)]);
      seen[pos_of(q)] = true;
      p = partner_[q];
    }
    t.partner_[renumber(e)] = renumber(p);
  }
  for (int j = 0; j < 4; ++j) {
    if (seen[j]) continue;
    ++t.free_loops_;
    int p = endpoint(box, j);
    do {
      seen[pos_of(p)] = true;
      const int q = partner_[endpoint(box, inner[pos_of(p)])];
      seen[inner[pos_of(p)]] = true;
      p = q;
    } while (!seen[pos_of(p)]);
  }
  return t;
}

Tangle glue(const Tangle& x, const Tangle& y) {
  if (x.colour() != y.colour()) throw std::invalid_argument("glue: colours differ");
  if (!x.complete() || !y.complete()) throw std::invalid_argument("glue: incomplete tangle");
  const int k2 = 2 * x.colour();
  const int offset = 4 * x.boxes();
  Tangle out(x.boxes() + y.boxes(), 0);
  out.add_free_loops(x.free_loops() + y.free_loops());

  std::vector<bool> seen_x(k2, false), seen_y(k2, false);
  // Follows a strand from a box endpoint of `from` until it reaches a box endpoint.
  auto follow = [&](const Tangle* from, int e) {
    int p = from->partner(e);
    while (from->is_boundary(p)) {
      const int b = from->boundary_index(p);
      const Tangle* to = from == &x ? &y : &x;
      (from == &x ? seen_x : seen_y)[b] = true;
      (to == &x ? seen_x : seen_y)[k2 - 1 - b] = true;
      p = to->partner(to->boundary(k2 - 1 - b));
      from = to;
    }
    return from == &x ? p : p + offset;
  };
  for (int e = 0; e < offset; ++e)
    if (out.partner(e) == Tangle::unmatched) out.connect(e, follow(&x, e));
  for (int e = 0; e < 4 * y.boxes(); ++e)
    if (out.partner(e + offset) == Tangle::unmatched) out.connect(e + offset, follow(&y, e));

  for (int b = 0; b < k2; ++b) {
    if (seen_x[b]) continue;
    out.add_free_loops(1);
    int cur = b;
    while (!seen_x[cur]) {
      seen_x[cur] = true;
      const int across = x.boundary_index(x.partner(x.boundary(cur)));
      seen_x[across] = true;
      const int yb = k2 - 1 - across;
      const int ny = y.boundary_index(y.partner(y.boundary(yb)));
      cur = k2 - 1 - ny;
    }
  }
  return out;
}

LabeledNetwork to_network(const Tangle& closed, const std::vector<Element>& labels, Shading shading,
                          const std::vector<std::string>& names) {
  const int g = closed.boxes();
  if (static_cast<int>(labels.size()) != g) throw std::invalid_argument("to_network: one label per box required");
  if (!names.empty() && static_cast<int>(names.size()) != g) throw std::invalid_argument("to_network: one name per box required");
  if (closed.colour() != 0 || !closed.complete()) throw std::logic_error("to_network: tangle is not closed");

  LabeledNetwork n;
  n.shading = shading;
  std::vector<std::string> name(g);
  for (int b = 0; b < g; ++b) {
    name[b] = names.empty() ? "b" + std::to_string(b + 1) : names[b];
    if (!n.boxes.emplace(name[b], labels[b]).second) throw std::invalid_argument("to_network: duplicate box name");
  }

  std::vector<bool> used(4 * g, false);
  for (int start = 0; start < 4 * g; ++start) {
    const int pos = closed.pos_of(start);
    if ((pos != 0 && pos != 2) || used[start]) continue;
    Loop loop;
    int e = start;
    do {
      used[e] = true;
      const Side side = closed.pos_of(e) == 0 ? Side::star : Side::other;
      loop.push_back({name[closed.box_of(e)], side});
      const int next = closed.partner(closed.endpoint(closed.box_of(e), exit_pos(side)));
      const int np = closed.pos_of(next);
      if (np != 0 && np != 2)
        throw InconsistentShading("strand joins two exits at box " + name[closed.box_of(next)]);
      e = next;
    } while (e != start);
    n.loops.push_back(std::move(loop));
  }
  for (int i = 0; i < closed.free_loops(); ++i) n.loops.emplace_back();
  return n;
}

Tangle from_network(const LabeledNetwork& n, std::vector<std::string>* names) {
  validate(n);
  std::map<std::string, int> index;
  std::vector<std::string> order;
  for (const auto& [name, label] : n.boxes) {
    index[name] = static_cast<int>(order.size());
    order.push_back(name);
  }
  Tangle t(static_cast<int>(order.size()), 0);
  for (const auto& loop : n.loops) {
    if (loop.empty()) {
      t.add_free_loops(1);
      continue;
    }
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const Pass& cur = loop[i];
      const Pass& next = loop[(i + 1) % loop.size()];
      t.connect(t.endpoint(index[cur.box], exit_pos(cur.side)), t.endpoint(index[next.box], entry_pos(next.side)));
    }
  }
  if (names) *names = std::move(order);
  return t;
}

Tangle identity_tangle() {
  Tangle t(1, 2);
  for (int j = 0; j < 4; ++j) t.connect(t.endpoint(0, j), t.boundary(j));
  return t;
}

}  // namespace hpa
