#pragma once

#include <string>
#include <vector>

#include "hpa/network.hpp"

namespace hpa {

/// Skeleton of a planar tangle with 2-box slots.  Box b has endpoints
/// p1..p4 at positions 0..3, numbered clockwise from its *; the star pass
/// enters at p1 and leaves at p4, the other pass enters at p3 and leaves at
/// p2.  A tangle of colour k has 2k boundary points numbered clockwise from
/// the external *.  Strands are stored as a perfect matching on endpoints.
class Tangle {
 public:
  static constexpr int unmatched = -1;

  Tangle(int boxes, int colour);

  int boxes() const { return boxes_; }
  int colour() const { return colour_; }
  int free_loops() const { return free_loops_; }
  int endpoint_count() const { return 4 * boxes_ + 2 * colour_; }

  int endpoint(int box, int pos) const { return 4 * box + pos; }
  int boundary(int b) const { return 4 * boxes_ + b; }
  bool is_boundary(int e) const { return e >= 4 * boxes_; }
  int box_of(int e) const { return e / 4; }
  int pos_of(int e) const { return e % 4; }
  int boundary_index(int e) const { return e - 4 * boxes_; }

  int partner(int e) const { return partner_.at(e); }
  void connect(int a, int b);
  void add_free_loops(int c) { free_loops_ += c; }
  bool complete() const;

  /// Reflection: box position j becomes 3 − j and boundary b becomes 2k − 1 − b.
  Tangle mirror() const;

  /// Every box endpoint (b, j) becomes (b, j + turns mod 4).
  Tangle rotate_boxes(int turns) const;
  Tangle rotate_box(int box, int turns) const;

  /// Removes a box, joining its endpoints pairwise: identity joins p1–p4 and
  /// p3–p2, cup_cap joins p1–p2 and p3–p4.
  enum class Fill { identity, cup_cap };
  Tangle fill_box(int box, Fill fill) const;

  friend bool operator==(const Tangle&, const Tangle&) = default;

 private:
  int boxes_;
  int colour_;
  int free_loops_ = 0;
  std::vector<int> partner_;
};

class InconsistentShading : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Tr(k)(x·y): boundary b of x is joined to boundary 2k − 1 − b of y.  Boxes of
/// y follow those of x.  Strands running only between boundaries close up
/// into free loops.
Tangle glue(const Tangle& x, const Tangle& y);

/// Traces the strands of a closed tangle into loops.  Box i is named names[i],
/// or "b<i+1>" when names is empty.  Throws InconsistentShading if a strand
/// joins two entries or two exits.
LabeledNetwork to_network(const Tangle& closed, const std::vector<Element>& labels, Shading shading = Shading::plus,
                          const std::vector<std::string>& names = {});

/// Inverse of to_network; names receives the box order used.
Tangle from_network(const LabeledNetwork& n, std::vector<std::string>* names = nullptr);

/// The single-box identity k = 2 tangle.
Tangle identity_tangle();

}  // namespace hpa
