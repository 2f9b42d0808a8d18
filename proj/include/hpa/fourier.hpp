#pragma once

#include "hpa/hopf.hpp"
#include "hpa/linalg.hpp"
#include "hpa/report.hpp"

namespace hpa {

/// F(a) = δ⁻¹φ(a ·), as coordinates against the dual basis.
Functional fourier(const HopfAlgebra& h, const Element& a);

/// The same construction on H*, using the regular trace of H*, read back in H ≅ H**.
/// Coordinate j is δ⁻¹ψ(h₁)·(h₂)_j.
Element fourier_dual(const HopfAlgebra& h, const Functional& psi);

/// ψ ↦ ψ∘S, the antipode of H*.
Functional dual_antipode(const HopfAlgebra& h, const Functional& psi);

/// Matrices acting on coordinate columns, column i the image of the i-th basis vector.
Matrix fourier_matrix(const HopfAlgebra& h);
Matrix fourier_dual_matrix(const HopfAlgebra& h);
Matrix antipode_matrix(const HopfAlgebra& h);
Matrix dual_antipode_matrix(const HopfAlgebra& h);

/// Checks "F^2 = S", "FS = SF", "F(SF) = id", "(SF)F = id" on the basis.
Report verify_fourier_laws(const HopfAlgebra& h);

/// Same, with the transform on H* taken from an explicitly built dual algebra,
/// whose δ may have been chosen independently.
Report verify_fourier_laws(const HopfAlgebra& h, const HopfAlgebra& dual);

}  // namespace hpa
