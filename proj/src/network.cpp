#include "hpa/network.hpp"

#include <algorithm>
#include <functional>

#include "hpa/tangle.hpp"

namespace hpa {

std::string to_string(Side s) { return s == Side::star ? "star" : "other"; }
std::string to_string(Shading s) { return s == Shading::plus ? "plus" : "minus"; }

void validate(const LabeledNetwork& n, std::size_t dim) {
  std::map<std::string, int> star_seen, other_seen;
  for (const auto& loop : n.loops)
    for (const auto& p : loop) {
      if (!n.boxes.count(p.box)) throw InvalidNetwork("loop references unlabeled box '" + p.box + "'");
      auto& seen = p.side == Side::star ? star_seen : other_seen;
      if (++seen[p.box] > 1) throw InvalidNetwork("box '" + p.box + "' has more than one " + to_string(p.side) + " pass");
    }
  for (const auto& [name, label] : n.boxes) {
    if (!star_seen.count(name)) throw InvalidNetwork("box '" + name + "' has no star pass");
    if (!other_seen.count(name)) throw InvalidNetwork("box '" + name + "' has no other pass");
    if (dim != 0 && label.dim() != dim)
      throw InvalidNetwork("label of box '" + name + "' has dimension " + std::to_string(label.dim()) +
                           ", expected " + std::to_string(dim));
  }
}

Scalar evaluate(const LabeledNetwork& n, const HopfAlgebra& h, Evaluator how) {
  return how == Evaluator::naive ? evaluate_naive(n, h) : evaluate_contraction(n, h);
}

Scalar evaluate(const NetworkSum& s, const HopfAlgebra& h, Evaluator how) {
  Scalar total;
  for (const auto& t : s.terms)
    if (!t.coeff.is_zero()) total += t.coeff * evaluate(t.network, h, how);
  return total;
}

Scalar evaluate_naive(const LabeledNetwork& n, const HopfAlgebra& h) {
  validate(n, h.dim());
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  std::vector<SweedlerExpansion> expansions;
  for (const auto& [name, label] : n.boxes) {
    index[name] = names.size();
    names.push_back(name);
    expansions.push_back(sweedler_expand(h, label, 2));
  }
  std::vector<Element> s_basis;
  for (std::size_t i = 0; i < h.dim(); ++i) s_basis.push_back(h.antipode(h.basis(i)));

  const Scalar inv_delta = h.delta().inverse();
  std::vector<const SweedlerTerm*> choice(names.size());
  Scalar total;

  auto symbol = [&](const Pass& p) -> Element {
    const SweedlerTerm* t = choice[index[p.box]];
    return p.side == Side::star ? h.basis(t->indices[0]) : s_basis[t->indices[1]];
  };

  std::function<void(std::size_t, const Scalar&)> assign = [&](std::size_t b, const Scalar& coeff) {
    if (b == names.size()) {
      Scalar value = coeff;
      for (const auto& loop : n.loops) {
        if (loop.empty()) {
          value *= h.delta();
          continue;
        }
        Element prod = h.one();
        for (const auto& p : loop) prod = h.multiply(symbol(p), prod);
        value *= inv_delta * h.phi(prod);
        if (value.is_zero()) return;
      }
      total += value;
      return;
    }
    for (const auto& t : expansions[b].terms) {
      choice[b] = &t;
      assign(b + 1, coeff * t.coeff);
    }
  };
  assign(0, Scalar(1));
  return total;
}

LabeledNetwork disjoint_union(const LabeledNetwork& a, const LabeledNetwork& b) {
  LabeledNetwork out = a;
  std::map<std::string, std::string> rename;
  for (const auto& [name, label] : b.boxes) {
    std::string fresh = name;
    for (int i = 1; out.boxes.count(fresh); ++i) fresh = name + "_" + std::to_string(i);
    rename[name] = fresh;
    out.boxes.emplace(fresh, label);
  }
  for (auto loop : b.loops) {
    for (auto& p : loop) p.box = rename.at(p.box);
    out.loops.push_back(std::move(loop));
  }
  return out;
}

LabeledNetwork rotate_loop(const LabeledNetwork& n, std::size_t loop, std::size_t by) {
  LabeledNetwork out = n;
  auto& l = out.loops.at(loop);
  if (!l.empty()) std::rotate(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(by % l.size()), l.end());
  return out;
}

LabeledNetwork minus_transform(const LabeledNetwork& n) {
  std::vector<std::string> names;
  const Tangle t = from_network(n, &names);
  std::vector<Element> labels;
  for (const auto& name : names) labels.push_back(n.boxes.at(name));
  // The endpoint numbering is the mirror image of the drawn convention, so
  // moving the * back is a turn of -1 here.
  return to_network(t.rotate_boxes(-1), labels, opposite(n.shading), names);
}

LabeledNetwork swap_all_sides(const LabeledNetwork& n) {
  LabeledNetwork out = n;
  for (auto& loop : out.loops)
    for (auto& p : loop) p.side = opposite(p.side);
  return out;
}

}  // namespace hpa
