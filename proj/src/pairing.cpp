#include "hpa/pairing.hpp"

namespace hpa {

namespace {

std::size_t power(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of idx in base n, most significant first.
std::vector<std::size_t> digits(std::size_t idx, std::size_t n, int count) {
  std::vector<std::size_t> d(count);
  for (int t = count - 1; t >= 0; --t) {
    d[t] = idx % n;
    idx /= n;
  }
  return d;
}

}  // namespace

DualBasisPair dual_bases(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Matrix inv = inverse(h.trace_gram());
  DualBasisPair p;
  for (std::size_t j = 0; j < n; ++j) {
    p.primal.push_back(h.basis(j));
    Element d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = inv(i, j);
    p.dual.push_back(std::move(d));
  }
  return p;
}

Tangle x_tangle(int k) {
  if (k < 2) throw std::invalid_argument("X_k needs k >= 2");
  Tangle t(k - 1, k);
  for (int m = 0; m <= k - 2; ++m) {
    if (m == 0) t.connect(t.endpoint(0, 0), t.boundary(0));
    else t.connect(t.endpoint(m, 0), t.endpoint(m - 1, 3));
    t.connect(t.endpoint(m, 1), t.boundary(2 * m + 1));
    t.connect(t.endpoint(m, 2), t.boundary(2 * m + 2));
  }
  t.connect(t.endpoint(k - 2, 3), t.boundary(2 * k - 1));
  return t;
}

Tangle x_star_tangle(int k) { return x_tangle(k).mirror(); }

LabeledNetwork PairingTemplate::instantiate(const std::vector<Element>& left, const std::vector<Element>& right) const {
  if (static_cast<int>(left.size()) != k - 1 || static_cast<int>(right.size()) != k - 1)
    throw std::invalid_argument("pairing template: expected k - 1 labels on each side");
  std::vector<Element> labels = left;
  labels.insert(labels.end(), right.begin(), right.end());
  return to_network(closed, labels);
}

PairingTemplate build_pairing_template(int k) { return {k, glue(x_tangle(k), x_star_tangle(k))}; }

Matrix pairing_matrix(const HopfAlgebra& h, const Tangle& skeleton, const Budget& budget) {
  const int k = skeleton.colour();
  if (k < 2) throw std::invalid_argument("pairing: colour must be at least 2");
  const std::size_t n = h.dim();
  const int g = skeleton.boxes();
  const std::size_t rows = power(n, g);
  const std::size_t cols = power(n, k - 1);
  if (rows * cols > budget.gram_entries)
    throw BudgetExceeded("pairing matrix has " + std::to_string(rows * cols) + " entries, cap is " +
                         std::to_string(budget.gram_entries));
  if (static_cast<std::size_t>(g + k - 1) > budget.max_boxes)
    throw BudgetExceeded("pairing network has " + std::to_string(g + k - 1) + " boxes, cap is " +
                         std::to_string(budget.max_boxes));

  const DualBasisPair bases = dual_bases(h);
  const Tangle closed = glue(skeleton, x_star_tangle(k));
  const int total = g + k - 1;
  std::vector<std::string> names;
  for (int b = 0; b < total; ++b) names.push_back("b" + std::to_string(b + 1));
  LabeledNetwork net = to_network(closed, std::vector<Element>(total, h.one()), Shading::plus, names);

  const Scalar scale = pow(h.delta(), -k);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto ri = digits(r, n, g);
    for (int b = 0; b < g; ++b) net.boxes[names[b]] = bases.primal[ri[b]];
    for (std::size_t c = 0; c < cols; ++c) {
      const auto ci = digits(c, n, k - 1);
      for (int b = 0; b < k - 1; ++b) net.boxes[names[g + b]] = bases.dual[ci[b]];
      m(r, c) = scale * evaluate(net, h);
    }
  }
  return m;
}

Matrix gram(const HopfAlgebra& h, int k, const Budget& budget) { return pairing_matrix(h, x_tangle(k), budget); }

Tangle w_tangle() {
  Tangle t(2, 3);
  t.connect(t.endpoint(0, 0), t.boundary(2));
  t.connect(t.endpoint(0, 1), t.boundary(3));
  t.connect(t.endpoint(0, 3), t.boundary(1));
  t.connect(t.endpoint(0, 2), t.endpoint(1, 3));
  t.connect(t.endpoint(1, 0), t.boundary(4));
  t.connect(t.endpoint(1, 1), t.boundary(5));
  t.connect(t.endpoint(1, 2), t.boundary(0));
  return t;
}

Tangle f_tangle() {
  Tangle t(1, 3);
  t.connect(t.endpoint(0, 0), t.boundary(2));
  t.connect(t.endpoint(0, 1), t.boundary(5));
  t.connect(t.endpoint(0, 2), t.boundary(0));
  t.connect(t.endpoint(0, 3), t.boundary(1));
  t.connect(t.boundary(3), t.boundary(4));
  return t;
}

Tangle corrupted_w_tangle() {
  Tangle t(2, 3);
  t.connect(t.endpoint(0, 0), t.boundary(2));
  t.connect(t.endpoint(0, 1), t.boundary(5));
  t.connect(t.endpoint(0, 2), t.boundary(0));
  t.connect(t.endpoint(0, 3), t.boundary(1));
  t.connect(t.boundary(3), t.boundary(4));
  t.connect(t.endpoint(1, 1), t.endpoint(1, 0));
  t.connect(t.endpoint(1, 3), t.endpoint(1, 2));
  return t;
}

Tangle r2_tangle() { return identity_tangle().rotate_box(0, 2); }

LabeledNetwork closure_network(const Element& a) {
  LabeledNetwork n;
  n.boxes.emplace("a", a);
  n.loops.push_back({{"a", Side::other}, {"a", Side::star}});
  return n;
}

Matrix depth_two_gram(const HopfAlgebra& h, const Tangle& w, const Budget& budget) {
  if (w.colour() != 3 || w.boxes() != 2) throw std::invalid_argument("depth two: expected a two-box tangle of colour 3");
  return pairing_matrix(h, w, budget);
}

ReconstructedStructure reconstruct(const HopfAlgebra& h, const Budget& budget) {
  const std::size_t n = h.dim();
  const Matrix w = depth_two_gram(h, w_tangle(), budget);
  const Matrix f = pairing_matrix(h, f_tangle(), budget);
  const Matrix r2 = pairing_matrix(h, r2_tangle(), budget);
  // Z_F(a) = Σ D_pq Z_W(e_p⊗e_q), so the pairing rows satisfy f_a = Σ D_pq w_(p,q).
  const Matrix solve_w = inverse(w.transpose());

  ReconstructedStructure out;
  const Scalar inv_delta = h.delta().inverse();
  for (std::size_t a = 0; a < n; ++a) {
    Matrix d(n, n);
    for (std::size_t pq = 0; pq < n * n; ++pq) {
      Scalar v;
      for (std::size_t j = 0; j < n * n; ++j)
        if (!solve_w(pq, j).is_zero()) v.add_product(solve_w(pq, j), f(a, j));
      d(pq / n, pq % n) = v;
    }
    out.comult.push_back(std::move(d));
    out.counit.push_back(inv_delta * evaluate(closure_network(h.basis(a)), h));
    Element s(n);
    for (std::size_t j = 0; j < n; ++j) s[j] = r2(a, j);
    out.antipode.push_back(std::move(s));
  }
  return out;
}

Report reconstruct_structure(const HopfAlgebra& h, const Budget& budget) {
  const ReconstructedStructure r = reconstruct(h, budget);
  Report report;
  for (std::size_t a = 0; a < h.dim(); ++a) {
    const std::string& name = h.basis_names()[a];
    report.add("Δ(" + name + ")", r.comult[a] == h.comultiply(h.basis(a)));
    report.add("ε(" + name + ")", r.counit[a] == h.counit(h.basis(a)));
    report.add("S(" + name + ")", r.antipode[a] == h.antipode(h.basis(a)));
  }
  return report;
}

}  // namespace hpa
