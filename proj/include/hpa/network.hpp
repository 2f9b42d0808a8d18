#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpa/hopf.hpp"
#include "hpa/scalar.hpp"

namespace hpa {

enum class Side { star, other };
enum class Shading { plus, minus };

inline Side opposite(Side s) { return s == Side::star ? Side::other : Side::star; }
inline Shading opposite(Shading s) { return s == Shading::plus ? Shading::minus : Shading::plus; }

struct Pass {
  std::string box;
  Side side = Side::star;
  friend bool operator==(const Pass&, const Pass&) = default;
};

using Loop = std::vector<Pass>;

/// Closed network after box removal: each box contributes a star pass and an
/// other pass, and each loop lists its passes in orientation order.
struct LabeledNetwork {
  Shading shading = Shading::plus;
  std::map<std::string, Element> boxes;
  std::vector<Loop> loops;

  std::size_t box_count() const { return boxes.size(); }
  friend bool operator==(const LabeledNetwork&, const LabeledNetwork&) = default;
};

struct SumTerm {
  Scalar coeff;
  LabeledNetwork network;
};

struct NetworkSum {
  std::vector<SumTerm> terms;

  NetworkSum() = default;
  explicit NetworkSum(LabeledNetwork n) { terms.push_back({Scalar(1), std::move(n)}); }
};

class InvalidNetwork : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pass coverage and label membership; dim = 0 skips the label dimension check.
/// Throws InvalidNetwork.
void validate(const LabeledNetwork& n, std::size_t dim = 0);

enum class Evaluator { contraction, naive };

/// The loop-trace state sum.  Each box label is expanded as a₁⊗a₂, the star
/// pass carries a₁ and the other pass S(a₂), and each loop contributes
/// δ⁻¹φ of its symbols multiplied against the stored orientation.
Scalar evaluate(const LabeledNetwork& n, const HopfAlgebra& h, Evaluator how = Evaluator::contraction);
Scalar evaluate(const NetworkSum& s, const HopfAlgebra& h, Evaluator how = Evaluator::contraction);

/// Reference path: explicit sum over joint Sweedler assignments.
Scalar evaluate_naive(const LabeledNetwork& n, const HopfAlgebra& h);
/// Sparse tensor contraction with a greedy pairwise order.
Scalar evaluate_contraction(const LabeledNetwork& n, const HopfAlgebra& h);

/// Boxes of b are renamed where they collide with boxes of a.
LabeledNetwork disjoint_union(const LabeledNetwork& a, const LabeledNetwork& b);

LabeledNetwork rotate_loop(const LabeledNetwork& n, std::size_t loop, std::size_t by);

/// Moves the * of every box back by one position and inverts the shading.
LabeledNetwork minus_transform(const LabeledNetwork& n);

/// Swaps star and other passes of every box, labels untouched.
LabeledNetwork swap_all_sides(const LabeledNetwork& n);

std::string to_string(Side s);
std::string to_string(Shading s);

}  // namespace hpa
