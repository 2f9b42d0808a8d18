#include <doctest.h>

#include "hpa/hopf.hpp"
#include "hpa/io.hpp"
#include "support.hpp"

using namespace hpa;
using hpa::test::algebra;
using hpa::test::data_path;
using hpa::test::family;

namespace {

std::string failed_axiom(const StructureConstants& sc) {
  try {
    HopfAlgebra::from_constants(sc);
  } catch (const HopfError& e) {
    return e.axiom();
  }
  return "";
}

std::string failed_group_axiom(const GroupTable& t) {
  try {
    HopfAlgebra::group_algebra(t);
  } catch (const HopfError& e) {
    return e.axiom();
  }
  return "";
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("every algebra of the family passes all axioms and integral laws") {
    for (const auto& c : family()) {
      CAPTURE(c.name);
      const Report axioms = verify_axioms(c.h);
      for (const char* name : {"associativity", "unit", "coassociativity", "counit", "bialgebra", "antipode",
                               "involutive antipode", "semisimple"}) {
        CAPTURE(name);
        REQUIRE(axioms.find(name));
        CHECK(axioms.find(name)->passed);
      }
      CHECK(verify_integrals(c.h).passed());
      CHECK(c.h.delta() * c.h.delta() == Scalar(static_cast<long>(c.h.dim())));
    }
  }

  TEST_CASE("ℚ[ℤ/2] from raw constants") {
    const HopfAlgebra h = HopfAlgebra::from_constants(constants_from_json(read_json_file(data_path("z2_constants.json"))));
    CHECK(h.dim() == 2);
    CHECK(verify_axioms(h).passed());
  }

  TEST_CASE("broken associativity is named") {
    const StructureConstants sc = constants_from_json(read_json_file(data_path("z2xz2_broken_assoc.json")));
    CHECK(failed_axiom(sc) == "associativity");
    const Report r = verify_axioms(HopfAlgebra::assemble(sc));
    CHECK_FALSE(r.find("associativity")->passed);
  }

  TEST_CASE("shape errors") {
    StructureConstants sc = algebra("z2").constants();
    sc.unit.pop_back();
    CHECK_THROWS_AS(HopfAlgebra::assemble(sc), std::invalid_argument);
  }

  TEST_CASE("S₃ group algebra agrees with the permutation oracle") {
    const GroupTable t = test::s3_table_by_composition();
    const HopfAlgebra& h = algebra("s3");
    REQUIRE(h.dim() == 6);
    const StructureConstants& sc = h.constants();
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
          CHECK(sc.mult[i][j][k] == (t[i][j] == k ? 1 : 0));
          CHECK(sc.comult[k][i][j] == (i == j && j == k ? 1 : 0));
        }
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(sc.antipode[i][j] == (t[i][j] == 0 ? 1 : 0));
    CHECK(HopfAlgebra::group_algebra(t).constants().mult == sc.mult);
  }

  TEST_CASE("group algebra antipodes") {
    const HopfAlgebra z2 = HopfAlgebra::group_algebra({{0, 1}, {1, 0}});
    for (std::size_t i = 0; i < 2; ++i) CHECK(z2.antipode(z2.basis(i)) == z2.basis(i));
    CHECK(z2.basis_names() == std::vector<std::string>{"e", "g1"});
  }

  TEST_CASE("group table failures are named") {
    CHECK(failed_group_axiom({{0, 1, 2}, {1, 1, 0}, {2, 0, 2}}) == "associativity");
    CHECK(failed_group_axiom({{0, 1}, {1, 1}}) == "inverses");
    CHECK(failed_group_axiom({{1, 0}, {1, 1}}) == "identity");
    CHECK(failed_group_axiom({{0, 2}, {1, 0}}) == "closure");
  }

  TEST_CASE("dual of ℚ[ℤ/2] is ℚ[ℤ/2] after the Fourier basis change") {
    const HopfAlgebra& d = algebra("z2_dual");
    CHECK(d.basis_names() == std::vector<std::string>{"δ_e", "δ_x"});
    Element u(2), v(2);
    u[0] = 1, u[1] = 1;
    v[0] = 1, v[1] = -1;
    CHECK(d.one() == u);
    CHECK(d.multiply(v, v) == u);
    Matrix vv(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) vv(i, j) = v[i] * v[j];
    CHECK(d.comultiply(v) == vv);
    CHECK(d.counit(v) == Scalar(1));
    CHECK(d.antipode(v) == v);
  }

  TEST_CASE("double dual returns the original constants") {
    for (const char* name : {"z2", "z2xz2", "s3"}) {
      const HopfAlgebra& h = algebra(name);
      const HopfAlgebra dd = build_dual(build_dual(h));
      CHECK(dd.constants().mult == h.constants().mult);
      CHECK(dd.constants().comult == h.constants().comult);
      CHECK(dd.constants().antipode == h.constants().antipode);
      CHECK(dd.basis_names() == h.basis_names());
    }
  }

  TEST_CASE("dual of ℚ[S₃] is commutative and not cocommutative") {
    const StructureConstants& sc = algebra("s3_dual").constants();
    bool commutative = true, cocommutative = true;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) {
          commutative = commutative && sc.mult[i][j][k] == sc.mult[j][i][k];
          cocommutative = cocommutative && sc.comult[k][i][j] == sc.comult[k][j][i];
        }
    CHECK(commutative);
    CHECK_FALSE(cocommutative);
  }

  TEST_CASE("regular trace") {
    const HopfAlgebra& z2 = algebra("z2");
    CHECK(z2.regular_trace()[0] == Scalar(2));
    CHECK(z2.regular_trace()[1] == Scalar(0));
    const HopfAlgebra& s3 = algebra("s3");
    for (std::size_t g = 1; g < 6; ++g) CHECK(s3.phi(s3.basis(g)) == Scalar(0));
    for (const auto& c : family()) CHECK(c.h.phi(c.h.one()) == Scalar(static_cast<long>(c.h.dim())));
  }

  TEST_CASE("dual integral") {
    for (const char* name : {"z2", "z2xz2", "s3"}) {
      const HopfAlgebra& h = algebra(name);
      for (std::size_t g = 0; g < h.dim(); ++g) CHECK(h.integral()[g] == Scalar(1));
    }
    // Oracle: h_i is the trace of multiplication by δ^i on H*, computed from Δ.
    for (const auto& c : family()) {
      const auto& cm = c.h.constants().comult;
      for (std::size_t i = 0; i < c.h.dim(); ++i) {
        Rational tr = 0;
        for (std::size_t j = 0; j < c.h.dim(); ++j) tr += cm[j][i][j];
        CHECK(c.h.integral()[i] == Scalar(tr));
      }
      CHECK(c.h.counit(c.h.integral()) == Scalar(static_cast<long>(c.h.dim())));
      CHECK(c.h.phi(c.h.integral()) == Scalar(static_cast<long>(c.h.dim())));
    }
  }

  TEST_CASE("Sweedler expansions") {
    const HopfAlgebra& z2 = algebra("z2");
    const SweedlerExpansion x2 = sweedler_expand(z2, z2.basis(1), 2);
    REQUIRE(x2.terms.size() == 1);
    CHECK(x2.terms[0].coeff == Scalar(1));
    CHECK(x2.terms[0].indices == std::vector<int>{1, 1});

    const SweedlerExpansion x0 = sweedler_expand(z2, z2.basis(1), 0);
    REQUIRE(x0.terms.size() == 1);
    CHECK(x0.terms[0].coeff == Scalar(1));
    CHECK(x0.terms[0].indices.empty());

    const HopfAlgebra& d = algebra("z2_dual");
    const SweedlerExpansion dx = sweedler_expand(d, d.basis(1), 2);
    REQUIRE(dx.terms.size() == 2);
    CHECK(dx.terms[0].indices == std::vector<int>{0, 1});
    CHECK(dx.terms[1].indices == std::vector<int>{1, 0});
    for (const auto& t : dx.terms) CHECK(t.coeff == Scalar(1));

    for (const auto& c : family()) {
      Element a(c.h.dim());
      for (std::size_t i = 0; i < c.h.dim(); ++i) a[i] = Scalar(static_cast<long>(i + 1));
      CHECK(sweedler_expand(c.h, a, 3, SplitFrom::last) == sweedler_expand(c.h, a, 3, SplitFrom::first));
      CHECK(sweedler_expand(c.h, a, 1).terms.size() == c.h.dim());
    }
    CHECK_THROWS_AS(sweedler_expand(z2, z2.one(), -1), std::invalid_argument);
  }

  TEST_CASE("relation identities hold on the family") {
    for (const auto& c : family()) {
      CAPTURE(c.name);
      const Report r = verify_relation_identities(c.h);
      for (const char* name : {"C", "T", "E", "A"}) {
        REQUIRE(r.find(name));
        CHECK(r.find(name)->passed);
      }
    }
  }

  TEST_CASE("corrupted antipode breaks C") {
    const HopfAlgebra bad = HopfAlgebra::assemble(constants_from_json(read_json_file(data_path("z2_bad_antipode.json"))));
    CHECK_FALSE(verify_axioms(bad).find("antipode")->passed);
    CHECK_FALSE(verify_relation_identities(bad).find("C")->passed);
  }

  TEST_CASE("trace Gram matrix") {
    for (const auto& c : family()) {
      CHECK(c.h.gram_invertible());
      const Matrix& g = c.h.trace_gram();
      for (std::size_t i = 0; i < c.h.dim(); ++i)
        for (std::size_t j = 0; j < c.h.dim(); ++j)
          CHECK(g(i, j) == c.h.phi(c.h.multiply(c.h.basis(i), c.h.basis(j))) / Scalar(static_cast<long>(c.h.dim())));
    }
  }
}
