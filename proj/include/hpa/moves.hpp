#pragma once

#include <string>
#include <vector>

#include "hpa/network.hpp"

namespace hpa {

/// Local relations, each an exact identity of evaluate once the output
/// coefficient is included.
///   M  drop an empty loop, ×δ
///   U  drop a box labelled 1_H, its strands pass through
///   I  replace a box labelled h by a cup-cap, ×δ
///   C  drop a box whose passes run (other, star) in a row, ×ε(b)
///   T  drop a box with one pass closed on itself, ×δ⁻¹φ(b)
///   E  (a.other, b.other) in a row: exchange over Δ(a), labels (a₁, a₂b)
///   A  swap the sides of a box and relabel it S(a)
enum class Move { M, U, I, C, T, E, A };

inline constexpr Move all_moves[] = {Move::M, Move::U, Move::I, Move::C, Move::T, Move::E, Move::A};

std::string to_string(Move m);
/// Throws std::invalid_argument.
Move parse_move(const std::string& s);

/// Where a move applies.  Loop and position refer to the stored loop order;
/// box names the box the move removes or rewrites.
struct Site {
  Move move = Move::M;
  std::size_t loop = 0;
  std::size_t pos = 0;
  std::string box;
  friend bool operator==(const Site&, const Site&) = default;
};

class MoveMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Site> find_sites(const LabeledNetwork& n, const HopfAlgebra& h, Move move);

/// Throws MoveMismatch when the site does not carry the move's pattern.
NetworkSum apply_move(const LabeledNetwork& n, const HopfAlgebra& h, const Site& site);

/// Rewrites one term of a sum, scaling the result by that term's coefficient.
NetworkSum apply_move(const NetworkSum& sum, const HopfAlgebra& h, std::size_t term, const Site& site);

}  // namespace hpa
