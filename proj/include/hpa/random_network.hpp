#pragma once

#include <random>

#include "hpa/hopf.hpp"
#include "hpa/moves.hpp"
#include "hpa/network.hpp"

namespace hpa {

struct RandomNetworkOptions {
  /// Boxes in the connected part, drawn from 0..max_boxes before decorations.
  std::size_t max_boxes = 6;
  /// Chance of each decoration: kink, closed pass, free loop.
  double decoration = 0.3;
};

/// Mostly basis elements, sometimes 1, h, S(e_i) or a short combination.
Element random_label(const HopfAlgebra& h, std::mt19937_64& rng);

/// A connected planar network grown one box at a time, each new box placed
/// inside a random region and spliced into one or two of its boundary
/// strands, plus local decorations.  Every connected 4-valent plane graph
/// can arise.
LabeledNetwork random_planar_network(const HopfAlgebra& h, std::mt19937_64& rng, const RandomNetworkOptions& opt = {});

/// Insert a box whose passes run (other, star) into a loop.
void add_kink(LabeledNetwork& n, const Element& label, std::mt19937_64& rng);
/// Insert a box with one pass closed on itself and the other on a loop.
void add_closed_pass(LabeledNetwork& n, const Element& label, std::mt19937_64& rng);

struct InvarianceTally {
  std::size_t applied = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Applies `count` moves of one kind at random sites of random planar
/// networks, comparing evaluate before and after.  Networks lacking a site
/// get one: an empty loop, a box relabelled 1 or h, a kink or a closed pass.
InvarianceTally check_move_invariance(const HopfAlgebra& h, Move move, std::size_t count, std::mt19937_64& rng,
                                      const RandomNetworkOptions& opt = {});

}  // namespace hpa
