#include "hpa/duality.hpp"

#include "hpa/fourier.hpp"

namespace hpa {

namespace {

Functional counit_functional(const HopfAlgebra& h) {
  Functional e(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) e[i] = Scalar(h.constants().counit[i]);
  return e;
}

Functional sf(const HopfAlgebra& h, const Element& a) { return dual_antipode(h, fourier(h, a)); }

}  // namespace

Report verify_generator_map(const HopfAlgebra& h) {
  Report r;
  const std::size_t n = h.dim();
  const Scalar d = h.delta();
  const Scalar inv_d = d.inverse();
  r.add("SF(1) = δ⁻¹φ", sf(h, h.one()) == inv_d * h.regular_trace());
  r.add("SF(h) = δε", sf(h, h.integral()) == d * counit_functional(h));

  std::string bad_pair, bad_unit, bad_sfs;
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = h.basis(i);
    const std::string& name = h.basis_names()[i];
    if (inv_d * h.pair(sf(h, a), h.integral()) != h.counit(a)) bad_pair += (bad_pair.empty() ? "" : ", ") + name;
    if (h.pair(fourier(h, a), h.one()) != inv_d * h.phi(a)) bad_unit += (bad_unit.empty() ? "" : ", ") + name;
    if (sf(h, h.antipode(a)) != fourier(h, a)) bad_sfs += (bad_sfs.empty() ? "" : ", ") + name;
  }
  r.add("δ⁻¹SF(a)(h) = ε(a)", bad_pair.empty(), bad_pair);
  r.add("F(a)(1) = δ⁻¹φ(a)", bad_unit.empty(), bad_unit);
  r.add("SFS = F", bad_sfs.empty(), bad_sfs);
  return r;
}

LabeledNetwork fourier_network(const HopfAlgebra& h, const LabeledNetwork& n) {
  LabeledNetwork out = minus_transform(n);
  for (auto& [name, label] : out.boxes) label = Element(fourier(h, label).coeffs);
  return out;
}

DualityResult verify_duality_on_network(const HopfAlgebra& h, const HopfAlgebra& h_star, const LabeledNetwork& n) {
  if (h_star.dim() != h.dim()) throw std::invalid_argument("duality: algebras differ in dimension");
  return {evaluate(n, h), evaluate(fourier_network(h, n), h_star)};
}

}  // namespace hpa
