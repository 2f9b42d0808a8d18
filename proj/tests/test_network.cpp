#include <doctest.h>

#include <random>

#include "hpa/network.hpp"
#include "hpa/pairing.hpp"
#include "hpa/random_network.hpp"
#include "support.hpp"

using namespace hpa;
using hpa::test::algebra;
using hpa::test::data_path;
using hpa::test::family;

namespace {

LabeledNetwork empty_loop() {
  LabeledNetwork n;
  n.loops.emplace_back();
  return n;
}

// Star passes of h and a on one loop, other passes on another.
LabeledNetwork h_with(const HopfAlgebra& h, const Element& a) {
  LabeledNetwork n;
  n.boxes.emplace("h", h.integral());
  n.boxes.emplace("a", a);
  n.loops.push_back({{"a", Side::star}, {"h", Side::star}});
  n.loops.push_back({{"h", Side::other}, {"a", Side::other}});
  return n;
}

LabeledNetwork h_cap(const HopfAlgebra& h) {
  LabeledNetwork n;
  n.boxes.emplace("h", h.integral());
  n.loops.push_back({{"h", Side::star}, {"h", Side::other}});
  return n;
}

// δ⁻³φ(a₁(Sd₂)c₁)φ((Sc₂)(Sb₂)(Sa₂))φ(b₁d₁), summed term by term.
Scalar four_box_formula(const HopfAlgebra& h, const Element& a, const Element& b, const Element& c, const Element& d) {
  const auto ea = sweedler_expand(h, a, 2), eb = sweedler_expand(h, b, 2);
  const auto ec = sweedler_expand(h, c, 2), ed = sweedler_expand(h, d, 2);
  auto e = [&](int i) { return h.basis(i); };
  auto s = [&](int i) { return h.antipode(h.basis(i)); };
  Scalar total;
  for (const auto& ta : ea.terms)
    for (const auto& tb : eb.terms)
      for (const auto& tc : ec.terms)
        for (const auto& td : ed.terms) {
          const Scalar x = h.phi(h.multiply(h.multiply(e(ta.indices[0]), s(td.indices[1])), e(tc.indices[0])));
          if (x.is_zero()) continue;
          const Scalar y = h.phi(h.multiply(h.multiply(s(tc.indices[1]), s(tb.indices[1])), s(ta.indices[1])));
          const Scalar z = h.phi(h.multiply(e(tb.indices[0]), e(td.indices[0])));
          total += ta.coeff * tb.coeff * tc.coeff * td.coeff * x * y * z;
        }
  return pow(h.delta(), -3) * total;
}

Element generic(const HopfAlgebra& h, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Element a(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) a[i] = Scalar(d(rng));
  return a;
}

}  // namespace

TEST_SUITE("network") {
  TEST_CASE("validate") {
    CHECK_NOTHROW(validate(empty_loop()));
    LabeledNetwork twice;
    twice.boxes.emplace("b", Element(2));
    twice.loops.push_back({{"b", Side::star}, {"b", Side::star}});
    CHECK_THROWS_AS(validate(twice), InvalidNetwork);
    LabeledNetwork unknown;
    unknown.loops.push_back({{"c", Side::star}});
    CHECK_THROWS_AS(validate(unknown), InvalidNetwork);
    LabeledNetwork missing;
    missing.boxes.emplace("b", Element(2));
    missing.loops.push_back({{"b", Side::star}});
    CHECK_THROWS_AS(validate(missing), InvalidNetwork);
    CHECK_THROWS_AS(validate(closure_network(Element(3)), 2), InvalidNetwork);
  }

  TEST_CASE("golden values on the whole family") {
    for (const auto& c : family()) {
      CAPTURE(c.name);
      const HopfAlgebra& h = c.h;
      const Scalar d = h.delta();
      CHECK(evaluate(empty_loop(), h) == d);
      CHECK(evaluate(LabeledNetwork{}, h) == Scalar(1));
      CHECK(evaluate(h_cap(h), h) == d * d * d);
      for (std::size_t i = 0; i < h.dim(); ++i) {
        const Element a = h.basis(i);
        CHECK(evaluate(closure_network(a), h) == d * h.counit(a));
        CHECK(evaluate(h_with(h, a), h) == d * d * h.counit(a));
      }
    }
  }

  TEST_CASE("single box closure over ℚ[ℤ/2]") {
    const HopfAlgebra& h = algebra("z2");
    CHECK(evaluate(load_network(data_path("networks/single_box.json"), h), h) == h.delta());
    CHECK(evaluate(load_network(data_path("networks/h_cap.json"), h), h) == pow(h.delta(), 3));
  }

  TEST_CASE("four-box network matches the hand formula") {
    const HopfAlgebra& s3 = algebra("s3");
    const LabeledNetwork file = load_network(data_path("networks/four_box_s3.json"), s3);
    CHECK(evaluate(file, s3) == Scalar(6) * s3.delta());
    std::mt19937_64 rng(3);
    for (const auto& c : family()) {
      CAPTURE(c.name);
      const HopfAlgebra& h = c.h;
      LabeledNetwork n = file;
      // Generic labels on the 6-dimensional algebras would cost up to 36⁴ terms.
      const int trials = h.dim() == 6 ? 6 : 12;
      for (int trial = 0; trial < trials; ++trial) {
        std::vector<Element> l;
        for (int i = 0; i < 4; ++i)
          l.push_back(trial < 6 ? h.basis(std::uniform_int_distribution<std::size_t>(0, h.dim() - 1)(rng)) : generic(h, rng));
        if (trial == 0 && c.name == "z2") l.assign(4, h.basis(1));
        n.boxes["a"] = l[0], n.boxes["b"] = l[1], n.boxes["c"] = l[2], n.boxes["d"] = l[3];
        const Scalar expected = four_box_formula(h, l[0], l[1], l[2], l[3]);
        CHECK(evaluate(n, h, Evaluator::naive) == expected);
        CHECK(evaluate(n, h, Evaluator::contraction) == expected);
      }
    }
  }

  TEST_CASE("naive and contraction agree on random planar networks") {
    std::mt19937_64 rng(5);
    for (const auto& c : family()) {
      RandomNetworkOptions opt;
      opt.max_boxes = c.h.dim() == 6 ? 4 : 5;
      for (int i = 0; i < 25; ++i) {
        const LabeledNetwork n = random_planar_network(c.h, rng, opt);
        CHECK(evaluate_naive(n, c.h) == evaluate_contraction(n, c.h));
      }
    }
  }

  TEST_CASE("random networks are planar") {
    std::mt19937_64 rng(8);
    const HopfAlgebra& h = algebra("z2");
    RandomNetworkOptions opt;
    opt.max_boxes = 9;
    opt.decoration = 0.5;
    std::size_t largest = 0;
    for (int i = 0; i < 300; ++i) {
      const LabeledNetwork n = random_planar_network(h, rng, opt);
      CHECK_NOTHROW(validate(n, h.dim()));
      CHECK(test::total_genus(n) == 0);
      largest = std::max(largest, n.box_count());
    }
    CHECK(largest >= 8);
    CHECK(test::total_genus(load_network(data_path("networks/four_box_s3.json"), algebra("s3"))) == 0);
  }

  TEST_CASE("genus oracle sees a non-planar network") {
    // Two boxes whose passes cross each other twice: a torus picture.
    LabeledNetwork n;
    n.boxes.emplace("a", algebra("z2").basis(1));
    n.boxes.emplace("b", algebra("z2").basis(1));
    n.loops.push_back({{"a", Side::star}, {"b", Side::star}, {"a", Side::other}, {"b", Side::other}});
    CHECK(test::total_genus(n) == 1);
  }

  TEST_CASE("base point, shading, linearity and disjoint unions") {
    std::mt19937_64 rng(9);
    for (const auto& c : family()) {
      const HopfAlgebra& h = c.h;
      RandomNetworkOptions opt;
      opt.max_boxes = 4;
      for (int i = 0; i < 10; ++i) {
        const LabeledNetwork x = random_planar_network(h, rng, opt);
        const LabeledNetwork y = random_planar_network(h, rng, opt);
        const Scalar vx = evaluate(x, h), vy = evaluate(y, h);
        for (std::size_t l = 0; l < x.loops.size(); ++l)
          for (std::size_t by = 1; by < x.loops[l].size(); ++by) CHECK(evaluate(rotate_loop(x, l, by), h) == vx);
        LabeledNetwork toggled = x;
        toggled.shading = opposite(x.shading);
        CHECK(evaluate(toggled, h) == vx);
        CHECK(evaluate(disjoint_union(x, y), h) == vx * vy);
        NetworkSum s;
        s.terms.push_back({Scalar(3), x});
        s.terms.push_back({h.delta() - Scalar(Rational(1, 2)), y});
        CHECK(evaluate(s, h) == Scalar(3) * vx + (h.delta() - Scalar(Rational(1, 2))) * vy);
      }
    }
  }

  TEST_CASE("minus transform") {
    const HopfAlgebra& h = algebra("s3");
    const LabeledNetwork e = empty_loop();
    const LabeledNetwork em = minus_transform(e);
    CHECK(em.shading == Shading::minus);
    CHECK(em.loops == e.loops);
    CHECK(evaluate(em, h) == h.delta());

    for (std::size_t i = 0; i < h.dim(); ++i) {
      const LabeledNetwork n = closure_network(h.basis(i));
      const LabeledNetwork mm = minus_transform(minus_transform(n));
      CHECK(mm.loops.size() == 1);
      CHECK(evaluate(mm, h) == evaluate(swap_all_sides(n), h));
      CHECK(evaluate(swap_all_sides(n), h) == evaluate(closure_network(h.antipode(h.basis(i))), h));
    }

    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
      const LabeledNetwork n = random_planar_network(h, rng);
      const LabeledNetwork mm = minus_transform(minus_transform(n));
      CHECK(mm.shading == n.shading);
      CHECK(evaluate(mm, h) == evaluate(swap_all_sides(n), h));
      CHECK(test::total_genus(minus_transform(n)) == 0);
      LabeledNetwork relabelled = n;
      for (auto& [name, label] : relabelled.boxes) label = h.antipode(label);
      CHECK(evaluate(swap_all_sides(n), h) == evaluate(relabelled, h));
    }
  }
}
