#pragma once

#include <vector>

#include "hpa/budget.hpp"
#include "hpa/hopf.hpp"
#include "hpa/linalg.hpp"
#include "hpa/network.hpp"
#include "hpa/report.hpp"
#include "hpa/tangle.hpp"

namespace hpa {

struct DualBasisPair {
  std::vector<Element> primal;
  std::vector<Element> dual;
};

/// Standard basis and its dual for the form δ⁻²φ(xy).
DualBasisPair dual_bases(const HopfAlgebra& h);

/// X_k: the fan of k − 1 boxes with every * at the external *.
Tangle x_tangle(int k);
/// X_k*: the reflection of X_k.
Tangle x_star_tangle(int k);

/// Tr(k)[X_k(left) · X_k*(right)], box m of X_k facing box m of X_k*.
struct PairingTemplate {
  int k = 2;
  Tangle closed{0, 0};

  /// left[m] fills slot m of X_k, right[m] the facing slot of X_k*.
  LabeledNetwork instantiate(const std::vector<Element>& left, const std::vector<Element>& right) const;
};

PairingTemplate build_pairing_template(int k);

/// Entry (𝐢, 𝐣) = δ^{-k}·Z(skeleton(e_𝐢) · X_k*(e^𝐣)), multi-indices in
/// lexicographic order with slot 0 most significant.  The skeleton has colour
/// k and any number of boxes.  Throws BudgetExceeded.
Matrix pairing_matrix(const HopfAlgebra& h, const Tangle& skeleton, const Budget& budget = {});

/// pairing_matrix for X_k itself; the identity when the family is dual.
Matrix gram(const HopfAlgebra& h, int k, const Budget& budget = {});

/// Colour-3 tangles: W joins two slots across a shared strand, F is the
/// one-box tangle with Z_F(a) = Z_W(Δa), corrupted W is F beside a closed box.
Tangle w_tangle();
Tangle f_tangle();
Tangle corrupted_w_tangle();
/// The identity box turned by two positions.
Tangle r2_tangle();
/// The single-box closure with passes (other, star).
LabeledNetwork closure_network(const Element& a);

/// Rows Z_W(e_p ⊗ e_q) paired against the X_3* dual family.
Matrix depth_two_gram(const HopfAlgebra& h, const Tangle& w = w_tangle(), const Budget& budget = {});

struct ReconstructedStructure {
  std::vector<Matrix> comult;
  std::vector<Scalar> counit;
  std::vector<Element> antipode;
};

/// Δ from the W system, ε from the closure, S from the turned box.
/// Throws SingularMatrix if the W system is singular.
ReconstructedStructure reconstruct(const HopfAlgebra& h, const Budget& budget = {});

/// reconstruct() compared with the input maps, one check per map and basis element.
Report reconstruct_structure(const HopfAlgebra& h, const Budget& budget = {});

}  // namespace hpa
