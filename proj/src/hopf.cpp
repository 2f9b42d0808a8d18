#include "hpa/hopf.hpp"

#include <map>
#include <sstream>

namespace hpa {

namespace {

using Cube = std::vector<std::vector<std::vector<Rational>>>;

void require_shape(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("structure constants: " + what);
}

void check_cube(const Cube& c, std::size_t n, const std::string& name) {
  require_shape(c.size() == n, name + " has wrong outer dimension");
  for (const auto& plane : c) {
    require_shape(plane.size() == n, name + " has wrong middle dimension");
    for (const auto& row : plane) require_shape(row.size() == n, name + " has wrong inner dimension");
  }
}

// Dense tensor in H^{⊗r}, row-major over basis indices.
struct Tensor {
  std::size_t n = 0;
  std::vector<Scalar> data;
  Tensor(std::size_t n_, int rank) : n(n_), data(pow_size(n_, rank)) {}
  static std::size_t pow_size(std::size_t n, int r) {
    std::size_t s = 1;
    for (int i = 0; i < r; ++i) s *= n;
    return s;
  }
  void add(std::initializer_list<std::size_t> idx, const Scalar& c) {
    std::size_t flat = 0;
    for (auto i : idx) flat = flat * n + i;
    data[flat] += c;
  }
  void add_element_slot(std::size_t prefix, const Element& x, const Scalar& c) {
    for (std::size_t k = 0; k < n; ++k)
      if (!x[k].is_zero()) data[prefix * n + k].add_product(c, x[k]);
  }
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

std::string basis_label(const HopfAlgebra& h, std::size_t i) { return h.basis_names()[i]; }

}  // namespace

// ---------------------------------------------------------------------------
// construction

HopfAlgebra HopfAlgebra::assemble(StructureConstants sc, int delta_sign) {
  const std::size_t n = sc.basis.size();
  require_shape(n >= 1, "basis must be non-empty");
  check_cube(sc.mult, n, "mult");
  check_cube(sc.comult, n, "comult");
  require_shape(sc.unit.size() == n, "unit has wrong length");
  require_shape(sc.counit.size() == n, "counit has wrong length");
  require_shape(sc.antipode.size() == n, "antipode has wrong row count");
  for (const auto& row : sc.antipode) require_shape(row.size() == n, "antipode has wrong column count");

  HopfAlgebra h;
  h.sc_ = std::move(sc);
  h.delta_sign_ = delta_sign;
  h.delta_ = Scalar::delta(static_cast<long>(n), delta_sign);
  h.index_constants();
  return h;
}

void HopfAlgebra::index_constants() {
  const std::size_t n = dim();
  mult_terms_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(sc_.mult[i][j][k]) != 0)
          mult_terms_[i * n + j].push_back({static_cast<int>(k), Scalar(sc_.mult[i][j][k])});

  comult_terms_.assign(n, {});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(sc_.comult[k][i][j]) != 0)
          comult_terms_[k].push_back({static_cast<int>(i), static_cast<int>(j), Scalar(sc_.comult[k][i][j])});

  antipode_terms_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(sc_.antipode[i][j]) != 0)
        antipode_terms_[i].push_back({static_cast<int>(j), Scalar(sc_.antipode[i][j])});

  // φ(e_i) = tr(L_{e_i}) = Σ_j mult[i][j][j]
  phi_ = Functional(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = 0;
    for (std::size_t j = 0; j < n; ++j) t += sc_.mult[i][j][j];
    phi_[i] = Scalar(t);
  }

  // e*_i(h) = tr(L_{e*_i}) on H*, where e*_i e*_j = Σ_k comult[k][i][j] e*_k
  h_ = Element(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational t = 0;
    for (std::size_t j = 0; j < n; ++j) t += sc_.comult[j][i][j];
    h_[i] = Scalar(t);
  }

  gram_ = Matrix(n, n);
  const Scalar inv_n = Scalar(Rational(1, static_cast<long>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v;
      for (const auto& t : product_terms(static_cast<int>(i), static_cast<int>(j))) v.add_product(t.coeff, phi_[t.index]);
      gram_(i, j) = v * inv_n;
    }
  gram_invertible_ = rank(gram_) == n;
}

HopfAlgebra HopfAlgebra::from_constants(StructureConstants sc, int delta_sign) {
  HopfAlgebra h = assemble(std::move(sc), delta_sign);
  Report r = verify_axioms(h);
  for (const auto& c : r.checks)
    if (!c.passed) {
      if (c.name == "semisimple") throw HopfError("semisimple", "not semisimple over ℚ(δ): " + c.detail);
      throw HopfError(c.name, c.detail);
    }
  return h;
}

HopfAlgebra HopfAlgebra::group_algebra(const GroupTable& table, int delta_sign, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw HopfError("closure", "empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw HopfError("closure", "table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw HopfError("closure", "entry " + std::to_string(v) + " out of range");
  }
  int identity = -1;
  for (std::size_t e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      ok = table[e][g] == static_cast<int>(g) && table[g][e] == static_cast<int>(g);
    if (ok) identity = static_cast<int>(e);
  }
  if (identity < 0) throw HopfError("identity", "no two-sided identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw HopfError("associativity", "(g" + std::to_string(a) + "·g" + std::to_string(b) + ")·g" +
                                               std::to_string(c) + " differs from g" + std::to_string(a) +
                                               "·(g" + std::to_string(b) + "·g" + std::to_string(c) + ")");
  std::vector<int> inverse(n, -1);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t x = 0; x < n; ++x)
      if (table[g][x] == identity && table[x][g] == identity) inverse[g] = static_cast<int>(x);
    if (inverse[g] < 0) throw HopfError("inverses", "g" + std::to_string(g) + " has no inverse");
  }

  if (names.empty()) {
    for (std::size_t g = 0; g < n; ++g)
      names.push_back(static_cast<int>(g) == identity ? std::string("e") : "g" + std::to_string(g));
  }
  if (names.size() != n) throw std::invalid_argument("group element names do not match table size");

  StructureConstants sc;
  sc.basis = std::move(names);
  sc.mult.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, 0)));
  sc.comult = sc.mult;
  sc.antipode.assign(n, std::vector<Rational>(n, 0));
  sc.unit.assign(n, 0);
  sc.counit.assign(n, 1);
  sc.unit[identity] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) sc.mult[a][b][table[a][b]] = 1;
    sc.comult[a][a][a] = 1;
    sc.antipode[a][inverse[a]] = 1;
  }
  return from_constants(std::move(sc), delta_sign);
}

// ---------------------------------------------------------------------------
// operations

Element HopfAlgebra::one() const {
  Element u(dim());
  for (std::size_t i = 0; i < dim(); ++i) u[i] = Scalar(sc_.unit[i]);
  return u;
}

Element HopfAlgebra::multiply(const Element& a, const Element& b) const {
  const std::size_t n = dim();
  if (a.dim() != n || b.dim() != n) throw std::invalid_argument("multiply: label dimension mismatch");
  Element out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : product_terms(static_cast<int>(i), static_cast<int>(j))) out[t.index].add_product(ab, t.coeff);
    }
  }
  return out;
}

Scalar HopfAlgebra::counit(const Element& a) const {
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!a[i].is_zero()) s.add_product(a[i], Scalar(sc_.counit[i]));
  return s;
}

Element HopfAlgebra::antipode(const Element& a) const {
  Element out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : antipode_terms(static_cast<int>(i))) out[t.index].add_product(a[i], t.coeff);
  }
  return out;
}

Matrix HopfAlgebra::comultiply(const Element& a) const {
  Matrix out(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& t : coproduct_terms(static_cast<int>(k))) out(t.left, t.right).add_product(a[k], t.coeff);
  }
  return out;
}

Scalar HopfAlgebra::pair(const Functional& f, const Element& a) const {
  if (f.dim() != dim() || a.dim() != dim()) throw std::invalid_argument("pairing: dimension mismatch");
  Scalar s;
  for (std::size_t i = 0; i < dim(); ++i) s.add_product(f[i], a[i]);
  return s;
}

// ---------------------------------------------------------------------------
// verification

Report verify_axioms(const HopfAlgebra& h) {
  Report report;
  const std::size_t n = h.dim();
  const Element one = h.one();

  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      for (std::size_t j = 0; j < n && bad.empty(); ++j) {
        const Element ij = h.multiply(h.basis(i), h.basis(j));
        for (std::size_t k = 0; k < n && bad.empty(); ++k)
          if (h.multiply(ij, h.basis(k)) != h.multiply(h.basis(i), h.multiply(h.basis(j), h.basis(k))))
            bad = "(" + basis_label(h, i) + "," + basis_label(h, j) + "," + basis_label(h, k) + ")";
      }
    report.add("associativity", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      if (h.multiply(one, h.basis(i)) != h.basis(i) || h.multiply(h.basis(i), one) != h.basis(i))
        bad = basis_label(h, i);
    report.add("unit", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t k = 0; k < n && bad.empty(); ++k)
      if (sweedler_expand(h, h.basis(k), 3, SplitFrom::last) != sweedler_expand(h, h.basis(k), 3, SplitFrom::first))
        bad = basis_label(h, k);
    report.add("coassociativity", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t k = 0; k < n && bad.empty(); ++k) {
      Element left(n), right(n);
      for (const auto& t : h.coproduct_terms(static_cast<int>(k))) {
        left[t.right].add_product(t.coeff, Scalar(h.constants().counit[t.left]));
        right[t.left].add_product(t.coeff, Scalar(h.constants().counit[t.right]));
      }
      if (left != h.basis(k) || right != h.basis(k)) bad = basis_label(h, k);
    }
    report.add("counit", bad.empty(), bad);
  }
  {
    std::string bad;
    Matrix one_one(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) one_one(i, j) = one[i] * one[j];
    if (h.comultiply(one) != one_one) bad = "Δ(1) ≠ 1⊗1";
    if (bad.empty() && h.counit(one) != Scalar(1)) bad = "ε(1) ≠ 1";
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      for (std::size_t j = 0; j < n && bad.empty(); ++j) {
        const Element ij = h.multiply(h.basis(i), h.basis(j));
        if (h.counit(ij) != h.counit(h.basis(i)) * h.counit(h.basis(j))) {
          bad = "ε not multiplicative at (" + basis_label(h, i) + "," + basis_label(h, j) + ")";
          break;
        }
        Matrix prod(n, n);
        for (const auto& x : h.coproduct_terms(static_cast<int>(i)))
          for (const auto& y : h.coproduct_terms(static_cast<int>(j))) {
            const Scalar c = x.coeff * y.coeff;
            for (const auto& l : h.product_terms(x.left, y.left))
              for (const auto& r : h.product_terms(x.right, y.right)) prod(l.index, r.index) += c * l.coeff * r.coeff;
          }
        if (prod != h.comultiply(ij)) bad = "Δ not multiplicative at (" + basis_label(h, i) + "," + basis_label(h, j) + ")";
      }
    report.add("bialgebra", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t k = 0; k < n && bad.empty(); ++k) {
      Element left(n), right(n);
      for (const auto& t : h.coproduct_terms(static_cast<int>(k))) {
        left += t.coeff * h.multiply(h.antipode(h.basis(t.left)), h.basis(t.right));
        right += t.coeff * h.multiply(h.basis(t.left), h.antipode(h.basis(t.right)));
      }
      const Element expected = h.counit(h.basis(k)) * one;
      if (left != expected || right != expected) bad = basis_label(h, k);
    }
    report.add("antipode", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      if (h.antipode(h.antipode(h.basis(i))) != h.basis(i)) bad = basis_label(h, i);
    report.add("involutive antipode", bad.empty(), bad);
  }
  report.add("semisimple", h.gram_invertible(), h.gram_invertible() ? "" : "trace Gram matrix is singular");
  return report;
}

Report verify_integrals(const HopfAlgebra& h) {
  Report report;
  const Scalar n(static_cast<long>(h.dim()));
  const Element& hi = h.integral();
  report.add("ε(h) = n", h.counit(hi) == n, h.counit(hi).to_string());
  report.add("φ(h) = n", h.phi(hi) == n, h.phi(hi).to_string());
  report.add("φ(1) = n", h.phi(h.one()) == n, h.phi(h.one()).to_string());
  std::string bad_law, bad_trace;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Element x = h.basis(i);
    const Element scaled = h.counit(x) * hi;
    if (h.multiply(hi, x) != scaled || h.multiply(x, hi) != scaled) bad_law += (bad_law.empty() ? "" : ", ") + basis_label(h, i);
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (h.phi(h.multiply(x, h.basis(j))) != h.phi(h.multiply(h.basis(j), x)))
        bad_trace += (bad_trace.empty() ? "(" : ", (") + basis_label(h, i) + "," + basis_label(h, j) + ")";
  }
  report.add("hx = ε(x)h = xh", bad_law.empty(), bad_law);
  report.add("φ tracial", bad_trace.empty(), bad_trace);
  return report;
}

HopfAlgebra build_dual(const HopfAlgebra& h) { return build_dual(h, h.delta_sign()); }

HopfAlgebra build_dual(const HopfAlgebra& h, int delta_sign) {
  const auto& sc = h.constants();
  const std::size_t n = h.dim();
  StructureConstants d;
  for (const auto& name : sc.basis) {
    // δ_δ_x reads back as x so that dual(dual(H)) has the same labels as H.
    d.basis.push_back(name.rfind("δ_", 0) == 0 ? name.substr(std::string("δ_").size()) : "δ_" + name);
  }
  d.mult.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  d.comult = d.mult;
  d.antipode.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d.antipode[i][j] = sc.antipode[j][i];
      for (std::size_t k = 0; k < n; ++k) {
        d.mult[i][j][k] = sc.comult[k][i][j];
        d.comult[k][i][j] = sc.mult[i][j][k];
      }
    }
  d.unit = sc.counit;
  d.counit = sc.unit;
  return HopfAlgebra::from_constants(std::move(d), delta_sign);
}

SweedlerExpansion sweedler_expand(const HopfAlgebra& h, const Element& a, int order, SplitFrom split) {
  if (order < 0) throw std::invalid_argument("Sweedler order must be non-negative");
  if (a.dim() != h.dim()) throw std::invalid_argument("sweedler_expand: dimension mismatch");
  SweedlerExpansion out;
  out.order = order;
  if (order == 0) {
    Scalar e = h.counit(a);
    if (!e.is_zero()) out.terms.push_back({e, {}});
    return out;
  }
  std::map<std::vector<int>, Scalar> current;
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!a[i].is_zero()) current[{static_cast<int>(i)}] = a[i];
  for (int r = 1; r < order; ++r) {
    std::map<std::vector<int>, Scalar> next;
    for (const auto& [idx, c] : current) {
      const int pos = split == SplitFrom::last ? static_cast<int>(idx.size()) - 1 : 0;
      for (const auto& t : h.coproduct_terms(idx[pos])) {
        std::vector<int> grown;
        grown.reserve(idx.size() + 1);
        grown.insert(grown.end(), idx.begin(), idx.begin() + pos);
        grown.push_back(t.left);
        grown.push_back(t.right);
        grown.insert(grown.end(), idx.begin() + pos + 1, idx.end());
        next[std::move(grown)].add_product(c, t.coeff);
      }
    }
    current = std::move(next);
  }
  for (auto& [idx, c] : current)
    if (!c.is_zero()) out.terms.push_back({c, idx});
  return out;
}

Report verify_relation_identities(const HopfAlgebra& h) {
  Report report;
  const std::size_t n = h.dim();
  const Element one = h.one();
  std::vector<Element> s_basis;
  for (std::size_t i = 0; i < n; ++i) s_basis.push_back(h.antipode(h.basis(i)));

  // (C) a₁ S(a₂) = ε(a)·1
  {
    std::string bad;
    for (std::size_t a = 0; a < n; ++a) {
      Element lhs(n);
      for (const auto& t : h.coproduct_terms(static_cast<int>(a))) lhs += t.coeff * h.multiply(h.basis(t.left), s_basis[t.right]);
      if (lhs != h.counit(h.basis(a)) * one) bad += (bad.empty() ? "" : ", ") + basis_label(h, a);
    }
    report.add("C", bad.empty(), bad);
  }
  // (T) a₁ φ(S a₂) = φ(a)·1
  {
    std::string bad;
    for (std::size_t a = 0; a < n; ++a) {
      Element lhs(n);
      for (const auto& t : h.coproduct_terms(static_cast<int>(a))) lhs += (t.coeff * h.phi(s_basis[t.right])) * h.basis(t.left);
      if (lhs != h.phi(h.basis(a)) * one) bad += (bad.empty() ? "" : ", ") + basis_label(h, a);
    }
    report.add("T", bad.empty(), bad);
  }
  // (E) a₁ ⊗ b₁ ⊗ S b₂ S a₂ = a₁ ⊗ S a₂ (a₃ b₁) ⊗ S(a₄ b₂)
  {
    std::string bad;
    for (std::size_t a = 0; a < n; ++a) {
      const SweedlerExpansion a4 = sweedler_expand(h, h.basis(a), 4);
      for (std::size_t b = 0; b < n; ++b) {
        Tensor lhs(n, 3), rhs(n, 3);
        for (const auto& x : h.coproduct_terms(static_cast<int>(a)))
          for (const auto& y : h.coproduct_terms(static_cast<int>(b)))
            lhs.add_element_slot(static_cast<std::size_t>(x.left) * n + y.left, h.multiply(s_basis[y.right], s_basis[x.right]),
                                 x.coeff * y.coeff);
        for (const auto& t : a4.terms) {
          const Element sa2 = s_basis[t.indices[1]];
          for (const auto& y : h.coproduct_terms(static_cast<int>(b))) {
            const Element mid = h.multiply(sa2, h.multiply(h.basis(t.indices[2]), h.basis(y.left)));
            const Element last = h.antipode(h.multiply(h.basis(t.indices[3]), h.basis(y.right)));
            const Scalar c = t.coeff * y.coeff;
            for (std::size_t m = 0; m < n; ++m) {
              if (mid[m].is_zero()) continue;
              rhs.add_element_slot(static_cast<std::size_t>(t.indices[0]) * n + m, last, c * mid[m]);
            }
          }
        }
        if (!(lhs == rhs)) bad += (bad.empty() ? "(" : ", (") + basis_label(h, a) + "," + basis_label(h, b) + ")";
      }
    }
    report.add("E", bad.empty(), bad);
  }
  // (A) (Sa)₁ ⊗ S(Sa)₂ = S a₂ ⊗ a₁
  {
    std::string bad;
    for (std::size_t a = 0; a < n; ++a) {
      Matrix lhs(n, n), rhs(n, n);
      const Matrix sa = h.comultiply(s_basis[a]);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          if (sa(p, q).is_zero()) continue;
          for (const auto& t : h.antipode_terms(static_cast<int>(q))) lhs(p, t.index).add_product(sa(p, q), t.coeff);
        }
      for (const auto& t : h.coproduct_terms(static_cast<int>(a)))
        for (const auto& s : h.antipode_terms(t.right)) rhs(s.index, t.left).add_product(t.coeff, s.coeff);
      if (lhs != rhs) bad += (bad.empty() ? "" : ", ") + basis_label(h, a);
    }
    report.add("A", bad.empty(), bad);
  }
  return report;
}

}  // namespace hpa
