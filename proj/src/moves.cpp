#include "hpa/moves.hpp"

#include <algorithm>

namespace hpa {

namespace {

struct Location {
  std::size_t loop;
  std::size_t pos;
};

Location locate(const LabeledNetwork& n, const std::string& box, Side side) {
  for (std::size_t l = 0; l < n.loops.size(); ++l)
    for (std::size_t p = 0; p < n.loops[l].size(); ++p)
      if (n.loops[l][p].box == box && n.loops[l][p].side == side) return {l, p};
  throw InvalidNetwork("no " + to_string(side) + " pass for box '" + box + "'");
}

const Element& label_of(const LabeledNetwork& n, const std::string& box) {
  auto it = n.boxes.find(box);
  if (it == n.boxes.end()) throw MoveMismatch("no box named '" + box + "'");
  return it->second;
}

// Passes of `loop` after position p, cyclically, excluding p itself.
Loop after(const Loop& loop, std::size_t p) {
  Loop out;
  for (std::size_t i = 1; i < loop.size(); ++i) out.push_back(loop[(p + i) % loop.size()]);
  return out;
}

void erase_box(LabeledNetwork& n, const std::string& box) {
  for (auto& loop : n.loops) std::erase_if(loop, [&](const Pass& p) { return p.box == box; });
  n.boxes.erase(box);
}

NetworkSum single(Scalar c, LabeledNetwork n) {
  NetworkSum s;
  s.terms.push_back({std::move(c), std::move(n)});
  return s;
}

const Loop& loop_at(const LabeledNetwork& n, std::size_t l) {
  if (l >= n.loops.size()) throw MoveMismatch("no loop " + std::to_string(l));
  return n.loops[l];
}

bool is_c_site(const Loop& loop, std::size_t p) {
  if (loop.size() < 2 || p >= loop.size()) return false;
  const Pass& a = loop[p];
  const Pass& b = loop[(p + 1) % loop.size()];
  return a.side == Side::other && b.side == Side::star && a.box == b.box;
}

bool is_e_site(const Loop& loop, std::size_t p) {
  if (loop.size() < 2 || p >= loop.size()) return false;
  const Pass& a = loop[p];
  const Pass& b = loop[(p + 1) % loop.size()];
  return a.side == Side::other && b.side == Side::other && a.box != b.box;
}

}  // namespace

std::string to_string(Move m) {
  static const char* names[] = {"M", "U", "I", "C", "T", "E", "A"};
  return names[static_cast<int>(m)];
}

Move parse_move(const std::string& s) {
  for (Move m : all_moves)
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown move '" + s + "'");
}

std::vector<Site> find_sites(const LabeledNetwork& n, const HopfAlgebra& h, Move move) {
  std::vector<Site> sites;
  switch (move) {
    case Move::M:
      for (std::size_t l = 0; l < n.loops.size(); ++l)
        if (n.loops[l].empty()) sites.push_back({move, l, 0, {}});
      break;
    case Move::U:
    case Move::I: {
      const Element target = move == Move::U ? h.one() : h.integral();
      for (const auto& [name, label] : n.boxes)
        if (label == target) sites.push_back({move, 0, 0, name});
      break;
    }
    case Move::A:
      for (const auto& [name, label] : n.boxes) sites.push_back({move, 0, 0, name});
      break;
    case Move::C:
    case Move::E:
      for (std::size_t l = 0; l < n.loops.size(); ++l)
        for (std::size_t p = 0; p < n.loops[l].size(); ++p)
          if (move == Move::C ? is_c_site(n.loops[l], p) : is_e_site(n.loops[l], p))
            sites.push_back({move, l, p, n.loops[l][p].box});
      break;
    case Move::T:
      for (std::size_t l = 0; l < n.loops.size(); ++l)
        if (n.loops[l].size() == 1) sites.push_back({move, l, 0, n.loops[l][0].box});
      break;
  }
  return sites;
}

NetworkSum apply_move(const LabeledNetwork& n, const HopfAlgebra& h, const Site& site) {
  LabeledNetwork out = n;
  switch (site.move) {
    case Move::M: {
      if (!loop_at(n, site.loop).empty()) throw MoveMismatch("M: loop is not empty");
      out.loops.erase(out.loops.begin() + static_cast<std::ptrdiff_t>(site.loop));
      return single(h.delta(), std::move(out));
    }
    case Move::U: {
      if (label_of(n, site.box) != h.one()) throw MoveMismatch("U: box is not labelled 1");
      erase_box(out, site.box);
      return single(Scalar(1), std::move(out));
    }
    case Move::I: {
      if (label_of(n, site.box) != h.integral()) throw MoveMismatch("I: box is not labelled h");
      const Location s = locate(n, site.box, Side::star);
      const Location o = locate(n, site.box, Side::other);
      std::vector<Loop> fresh;
      if (s.loop != o.loop) {
        Loop merged = after(n.loops[s.loop], s.pos);
        const Loop b = after(n.loops[o.loop], o.pos);
        merged.insert(merged.end(), b.begin(), b.end());
        fresh.push_back(std::move(merged));
      } else {
        const Loop rest = after(n.loops[s.loop], s.pos);
        const std::size_t m = n.loops[s.loop].size();
        const std::size_t split = (o.pos + m - s.pos) % m - 1;
        fresh.emplace_back(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(split));
        fresh.emplace_back(rest.begin() + static_cast<std::ptrdiff_t>(split) + 1, rest.end());
      }
      out.loops.clear();
      for (std::size_t l = 0; l < n.loops.size(); ++l)
        if (l != s.loop && l != o.loop) out.loops.push_back(n.loops[l]);
      for (auto& l : fresh) out.loops.push_back(std::move(l));
      out.boxes.erase(site.box);
      return single(h.delta(), std::move(out));
    }
    case Move::C: {
      if (!is_c_site(loop_at(n, site.loop), site.pos)) throw MoveMismatch("C: passes are not (other, star) of one box");
      const std::string box = n.loops[site.loop][site.pos].box;
      const Scalar eps = h.counit(n.boxes.at(box));
      erase_box(out, box);
      return single(eps, std::move(out));
    }
    case Move::T: {
      const Loop& loop = loop_at(n, site.loop);
      if (loop.size() != 1) throw MoveMismatch("T: loop does not hold exactly one pass");
      const std::string box = loop[0].box;
      const Scalar c = h.delta().inverse() * h.phi(n.boxes.at(box));
      out.loops.erase(out.loops.begin() + static_cast<std::ptrdiff_t>(site.loop));
      erase_box(out, box);
      return single(c, std::move(out));
    }
    case Move::E: {
      const Loop& loop = loop_at(n, site.loop);
      if (!is_e_site(loop, site.pos)) throw MoveMismatch("E: passes are not (a.other, b.other) of two boxes");
      const std::size_t m = loop.size();
      const std::string a = loop[site.pos].box;
      const std::string b = loop[(site.pos + 1) % m].box;

      LabeledNetwork wired = n;
      wired.loops.clear();
      for (std::size_t l = 0; l < n.loops.size(); ++l) {
        Loop fresh;
        for (std::size_t p = 0; p < n.loops[l].size(); ++p) {
          const Pass& q = n.loops[l][p];
          if (l == site.loop && p == site.pos) continue;
          if (q.box == b && q.side == Side::star) {
            fresh.push_back(q);
            fresh.push_back({a, Side::other});
          } else {
            fresh.push_back(q);
          }
        }
        wired.loops.push_back(std::move(fresh));
      }

      const Matrix da = h.comultiply(n.boxes.at(a));
      const Element& lb = n.boxes.at(b);
      NetworkSum result;
      for (std::size_t p = 0; p < h.dim(); ++p) {
        Element right(h.dim());
        for (std::size_t q = 0; q < h.dim(); ++q)
          if (!da(p, q).is_zero()) right += da(p, q) * h.basis(q);
        if (right.is_zero()) continue;
        LabeledNetwork term = wired;
        term.boxes[a] = h.basis(p);
        term.boxes[b] = h.multiply(right, lb);
        result.terms.push_back({Scalar(1), std::move(term)});
      }
      return result;
    }
    case Move::A: {
      const Element& label = label_of(n, site.box);
      for (auto& loop : out.loops)
        for (auto& p : loop)
          if (p.box == site.box) p.side = opposite(p.side);
      out.boxes[site.box] = h.antipode(label);
      return single(Scalar(1), std::move(out));
    }
  }
  throw MoveMismatch("unknown move");
}

NetworkSum apply_move(const NetworkSum& sum, const HopfAlgebra& h, std::size_t term, const Site& site) {
  if (term >= sum.terms.size()) throw MoveMismatch("no term " + std::to_string(term));
  NetworkSum out;
  for (std::size_t t = 0; t < sum.terms.size(); ++t) {
    if (t != term) {
      out.terms.push_back(sum.terms[t]);
      continue;
    }
    for (auto& r : apply_move(sum.terms[t].network, h, site).terms)
      out.terms.push_back({sum.terms[t].coeff * r.coeff, std::move(r.network)});
  }
  return out;
}

}  // namespace hpa
