#pragma once

#include "hpa/hopf.hpp"
#include "hpa/network.hpp"
#include "hpa/report.hpp"

namespace hpa {

/// Checks, in H*: SF(1) = δ⁻¹φ, SF(h) = δε, δ⁻¹SF(a)(h) = ε(a),
/// F(a)(1) = δ⁻¹φ(a) and SFS = F, each on every basis element.
Report verify_generator_map(const HopfAlgebra& h);

/// N⁻ with every label a replaced by F(a), read as a network over H*.
LabeledNetwork fourier_network(const HopfAlgebra& h, const LabeledNetwork& n);

struct DualityResult {
  Scalar lhs;
  Scalar rhs;
  bool equal() const { return lhs == rhs; }
};

/// Z_N over H against Z_{N⁻}∘F^{⊗g} over h_star.
DualityResult verify_duality_on_network(const HopfAlgebra& h, const HopfAlgebra& h_star, const LabeledNetwork& n);

}  // namespace hpa
