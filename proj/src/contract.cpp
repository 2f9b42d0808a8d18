#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "hpa/network.hpp"

namespace hpa {

namespace {

// Sparse tensor over basis indices; all legs have dimension n and entry keys
// pack the indices `bits` apart, leg 0 in the lowest bits.
struct SparseTensor {
  std::vector<int> legs;
  std::vector<std::pair<std::uint64_t, Scalar>> entries;
};

struct Packing {
  unsigned bits;
  std::uint64_t mask;

  explicit Packing(std::size_t n) {
    bits = 1;
    while ((std::size_t{1} << bits) < n) ++bits;
    mask = (std::uint64_t{1} << bits) - 1;
  }

  std::uint64_t extract(std::uint64_t key, const std::vector<int>& positions) const {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < positions.size(); ++t) out |= ((key >> (bits * positions[t])) & mask) << (bits * t);
    return out;
  }

  void check_rank(std::size_t rank) const {
    if (rank * bits > 64) throw std::length_error("contraction: intermediate tensor has too many legs");
  }
};

SparseTensor contract(const SparseTensor& a, const SparseTensor& b, const Packing& pk) {
  std::vector<int> shared_a, shared_b, rest_a, rest_b;
  SparseTensor out;
  for (std::size_t i = 0; i < a.legs.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.legs.size(); ++j)
      if (a.legs[i] == b.legs[j]) {
        shared_a.push_back(static_cast<int>(i));
        shared_b.push_back(static_cast<int>(j));
        found = true;
      }
    if (!found) {
      rest_a.push_back(static_cast<int>(i));
      out.legs.push_back(a.legs[i]);
    }
  }
  for (std::size_t j = 0; j < b.legs.size(); ++j) {
    bool found = false;
    for (int s : shared_b) found = found || s == static_cast<int>(j);
    if (!found) {
      rest_b.push_back(static_cast<int>(j));
      out.legs.push_back(b.legs[j]);
    }
  }
  pk.check_rank(out.legs.size());

  const unsigned shift = pk.bits * static_cast<unsigned>(rest_a.size());
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, const Scalar*>>> by_shared;
  for (const auto& [key, value] : b.entries)
    by_shared[pk.extract(key, shared_b)].emplace_back(shift >= 64 ? 0 : pk.extract(key, rest_b) << shift, &value);

  std::unordered_map<std::uint64_t, Scalar> acc;
  for (const auto& [key, value] : a.entries) {
    auto it = by_shared.find(pk.extract(key, shared_a));
    if (it == by_shared.end()) continue;
    const std::uint64_t ra = pk.extract(key, rest_a);
    for (const auto& [rb, vb] : it->second) acc[ra | rb].add_product(value, *vb);
  }
  for (auto& [key, value] : acc)
    if (!value.is_zero()) out.entries.emplace_back(key, std::move(value));
  return out;
}

std::size_t shared_count(const SparseTensor& a, const SparseTensor& b) {
  std::size_t c = 0;
  for (int x : a.legs)
    for (int y : b.legs) c += x == y;
  return c;
}

}  // namespace

Scalar evaluate_contraction(const LabeledNetwork& n, const HopfAlgebra& h) {
  validate(n, h.dim());
  const std::size_t dim = h.dim();
  const Packing pk(dim);

  std::map<std::string, int> index;
  for (const auto& [name, label] : n.boxes) index.emplace(name, static_cast<int>(index.size()));

  std::vector<SparseTensor> tensors;
  for (const auto& [name, label] : n.boxes) {
    const int b = index[name];
    SparseTensor k{{2 * b, 2 * b + 1}, {}};
    const Matrix c = h.comultiply(label);
    std::vector<Scalar> row(dim);
    for (std::size_t s = 0; s < dim; ++s) {
      std::fill(row.begin(), row.end(), Scalar());
      for (std::size_t q = 0; q < dim; ++q) {
        if (c(s, q).is_zero()) continue;
        for (const auto& t : h.antipode_terms(static_cast<int>(q))) row[t.index].add_product(c(s, q), t.coeff);
      }
      for (std::size_t o = 0; o < dim; ++o)
        if (!row[o].is_zero()) k.entries.emplace_back(s | (std::uint64_t{o} << pk.bits), row[o]);
    }
    tensors.push_back(std::move(k));
  }

  // L_u[out][in] = m[u][in][out]; a loop contributes tr(L_{u_m} ⋯ L_{u_1}).
  std::vector<std::pair<std::uint64_t, Scalar>> pass_entries;
  for (std::size_t u = 0; u < dim; ++u)
    for (std::size_t in = 0; in < dim; ++in)
      for (const auto& t : h.product_terms(static_cast<int>(u), static_cast<int>(in)))
        pass_entries.emplace_back(u | (std::uint64_t(t.index) << pk.bits) | (std::uint64_t(in) << (2 * pk.bits)), t.coeff);
  std::vector<std::pair<std::uint64_t, Scalar>> phi_entries;
  for (std::size_t u = 0; u < dim; ++u)
    if (!h.regular_trace()[u].is_zero()) phi_entries.emplace_back(u, h.regular_trace()[u]);

  Scalar factor(1);
  const Scalar inv_delta = h.delta().inverse();
  int next_leg = 2 * static_cast<int>(n.boxes.size());
  auto leg_of = [&](const Pass& p) { return 2 * index[p.box] + (p.side == Side::star ? 0 : 1); };
  for (const auto& loop : n.loops) {
    if (loop.empty()) {
      factor *= h.delta();
      continue;
    }
    factor *= inv_delta;
    if (loop.size() == 1) {
      tensors.push_back({{leg_of(loop[0])}, phi_entries});
      continue;
    }
    const int first_bond = next_leg;
    const int m = static_cast<int>(loop.size());
    next_leg += m;
    for (int t = 0; t < m; ++t) {
      const int out = first_bond + t;
      const int in = first_bond + (t + m - 1) % m;
      tensors.push_back({{leg_of(loop[t]), out, in}, pass_entries});
    }
  }

  Scalar value(1);
  while (!tensors.empty()) {
    for (const auto& t : tensors)
      if (t.entries.empty()) return Scalar();
    std::size_t bi = 0, bj = 0;
    bool found = false;
    std::size_t best_rank = 0, best_cost = 0;
    for (std::size_t i = 0; i < tensors.size(); ++i)
      for (std::size_t j = i + 1; j < tensors.size(); ++j) {
        const std::size_t s = shared_count(tensors[i], tensors[j]);
        if (s == 0) continue;
        const std::size_t r = tensors[i].legs.size() + tensors[j].legs.size() - 2 * s;
        const std::size_t cost = tensors[i].entries.size() * tensors[j].entries.size();
        if (!found || r < best_rank || (r == best_rank && cost < best_cost)) {
          found = true;
          bi = i;
          bj = j;
          best_rank = r;
          best_cost = cost;
        }
      }
    if (!found) {
      // Remaining tensors are closed components.
      for (const auto& t : tensors) {
        if (!t.legs.empty()) throw std::logic_error("contraction: dangling leg");
        value *= t.entries.front().second;
      }
      break;
    }
    SparseTensor merged = contract(tensors[bi], tensors[bj], pk);
    tensors.erase(tensors.begin() + static_cast<std::ptrdiff_t>(bj));
    tensors[bi] = std::move(merged);
  }
  return value * factor;
}

}  // namespace hpa
