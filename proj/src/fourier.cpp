#include "hpa/fourier.hpp"

namespace hpa {

namespace {

Matrix columns(std::size_t n, auto&& image_of_basis) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = image_of_basis(i);
    for (std::size_t j = 0; j < n; ++j) m(j, i) = col[j];
  }
  return m;
}

Report laws(const HopfAlgebra& h, const Matrix& f, const Matrix& f_dual) {
  const Matrix s = antipode_matrix(h);
  const Matrix s_dual = dual_antipode_matrix(h);
  const Matrix id = Matrix::identity(h.dim());
  Report r;
  r.add("F^2 = S", f_dual * f == s);
  r.add("FS = SF", f * s == s_dual * f);
  r.add("F(SF) = id", f_dual * (s_dual * f) == id);
  r.add("(SF)F = id", (s_dual * f) * f_dual == id);
  return r;
}

}  // namespace

Functional fourier(const HopfAlgebra& h, const Element& a) {
  const Scalar inv_delta = h.delta().inverse();
  Functional out(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j) out[j] = inv_delta * h.phi(h.multiply(a, h.basis(j)));
  return out;
}

Element fourier_dual(const HopfAlgebra& h, const Functional& psi) {
  const Scalar inv_delta = h.delta().inverse();
  const Matrix dh = h.comultiply(h.integral());
  Element out(h.dim());
  for (std::size_t p = 0; p < h.dim(); ++p) {
    if (psi[p].is_zero()) continue;
    for (std::size_t q = 0; q < h.dim(); ++q)
      if (!dh(p, q).is_zero()) out[q].add_product(psi[p], dh(p, q));
  }
  return inv_delta * out;
}

Functional dual_antipode(const HopfAlgebra& h, const Functional& psi) {
  Functional out(h.dim());
  for (std::size_t j = 0; j < h.dim(); ++j)
    for (const auto& t : h.antipode_terms(static_cast<int>(j))) out[j].add_product(t.coeff, psi[t.index]);
  return out;
}

Matrix fourier_matrix(const HopfAlgebra& h) {
  return columns(h.dim(), [&](std::size_t i) { return fourier(h, h.basis(i)); });
}

Matrix fourier_dual_matrix(const HopfAlgebra& h) {
  return columns(h.dim(), [&](std::size_t i) { return fourier_dual(h, Functional::unit_vector(h.dim(), i)); });
}

Matrix antipode_matrix(const HopfAlgebra& h) {
  return columns(h.dim(), [&](std::size_t i) { return h.antipode(h.basis(i)); });
}

Matrix dual_antipode_matrix(const HopfAlgebra& h) {
  return columns(h.dim(), [&](std::size_t i) { return dual_antipode(h, Functional::unit_vector(h.dim(), i)); });
}

Report verify_fourier_laws(const HopfAlgebra& h) { return laws(h, fourier_matrix(h), fourier_dual_matrix(h)); }

Report verify_fourier_laws(const HopfAlgebra& h, const HopfAlgebra& dual) {
  if (dual.dim() != h.dim()) throw std::invalid_argument("dual algebra has the wrong dimension");
  return laws(h, fourier_matrix(h), fourier_matrix(dual));
}

}  // namespace hpa
