#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hpa/linalg.hpp"
#include "hpa/report.hpp"
#include "hpa/scalar.hpp"

namespace hpa {

/// Coefficient vector over a fixed basis.  The tag keeps elements of H and
/// functionals on H (coordinates against the dual basis) apart.
template <class Tag>
struct Coefficients {
  std::vector<Scalar> coeffs;

  Coefficients() = default;
  explicit Coefficients(std::size_t n) : coeffs(n) {}
  explicit Coefficients(std::vector<Scalar> c) : coeffs(std::move(c)) {}

  static Coefficients unit_vector(std::size_t n, std::size_t i) {
    Coefficients v(n);
    v.coeffs.at(i) = 1;
    return v;
  }

  std::size_t dim() const { return coeffs.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs[i]; }
  Scalar& operator[](std::size_t i) { return coeffs[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  Coefficients& operator+=(const Coefficients& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Coefficients& operator-=(const Coefficients& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  Coefficients& operator*=(const Scalar& s) {
    for (auto& c : coeffs) c *= s;
    return *this;
  }

  friend Coefficients operator+(Coefficients a, const Coefficients& b) { return a += b; }
  friend Coefficients operator-(Coefficients a, const Coefficients& b) { return a -= b; }
  friend Coefficients operator*(const Scalar& s, Coefficients a) { return a *= s; }
  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  void check(const Coefficients& o) const {
    if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("dimension mismatch");
  }
};

struct ElementTag {};
struct FunctionalTag {};
using Element = Coefficients<ElementTag>;
using Functional = Coefficients<FunctionalTag>;

/// Raw structure constants in basis order.
///   mult[i][j][k]   coefficient of e_k in e_i·e_j
///   comult[k][i][j] coefficient of e_i⊗e_j in Δ(e_k)
///   antipode[i][j]  coefficient of e_j in S(e_i)
struct StructureConstants {
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Rational>>> mult;
  std::vector<Rational> unit;
  std::vector<std::vector<std::vector<Rational>>> comult;
  std::vector<Rational> counit;
  std::vector<std::vector<Rational>> antipode;
};

using GroupTable = std::vector<std::vector<int>>;

/// A failed Hopf or group axiom.  axiom() is the stable name used in reports.
class HopfError : public std::runtime_error {
 public:
  HopfError(std::string axiom, const std::string& detail)
      : std::runtime_error(axiom + ": " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

struct SweedlerTerm {
  Scalar coeff;
  std::vector<int> indices;
  friend bool operator==(const SweedlerTerm&, const SweedlerTerm&) = default;
};

/// Δ_k(a) as a normalized list of terms: sorted by index tuple, merged, zero-free.
struct SweedlerExpansion {
  int order = 0;
  std::vector<SweedlerTerm> terms;
  friend bool operator==(const SweedlerExpansion&, const SweedlerExpansion&) = default;
};

enum class SplitFrom { last, first };

/// Finite-dimensional Hopf algebra over ℚ(δ) given by rational structure
/// constants.  Immutable after construction.
class HopfAlgebra {
 public:
  struct Term {
    int index;
    Scalar coeff;
  };
  struct PairTerm {
    int left;
    int right;
    Scalar coeff;
  };

  /// Shape checks only; axioms are left to verify_axioms().  Intended for
  /// diagnostics on inputs that may be broken.
  static HopfAlgebra assemble(StructureConstants sc, int delta_sign = +1);

  /// assemble() followed by verify_axioms(); throws HopfError on the first failure.
  static HopfAlgebra from_constants(StructureConstants sc, int delta_sign = +1);

  /// ℚ[G] from a multiplication table (table[i][j] = index of g_i·g_j).
  static HopfAlgebra group_algebra(const GroupTable& table, int delta_sign = +1,
                                   std::vector<std::string> names = {});

  std::size_t dim() const { return sc_.basis.size(); }
  const std::vector<std::string>& basis_names() const { return sc_.basis; }
  const StructureConstants& constants() const { return sc_; }
  const Scalar& delta() const { return delta_; }
  int delta_sign() const { return delta_sign_; }

  Element basis(std::size_t i) const { return Element::unit_vector(dim(), i); }
  Element one() const;
  Element multiply(const Element& a, const Element& b) const;
  Scalar counit(const Element& a) const;
  Element antipode(const Element& a) const;
  /// Δ(a) as an n×n coefficient matrix, entry (i, j) for e_i⊗e_j.
  Matrix comultiply(const Element& a) const;

  /// φ, the trace of the left regular representation of H.
  const Functional& regular_trace() const { return phi_; }
  /// h, the trace of the regular representation of H* read back in H ≅ H**.
  const Element& integral() const { return h_; }
  Scalar phi(const Element& a) const { return pair(phi_, a); }
  Scalar pair(const Functional& f, const Element& a) const;

  /// [δ⁻²φ(e_i e_j)]; invertible exactly when H passes the semisimplicity test.
  const Matrix& trace_gram() const { return gram_; }
  bool gram_invertible() const { return gram_invertible_; }

  const std::vector<Term>& product_terms(int i, int j) const { return mult_terms_[i * dim() + j]; }
  const std::vector<PairTerm>& coproduct_terms(int k) const { return comult_terms_[k]; }
  const std::vector<Term>& antipode_terms(int i) const { return antipode_terms_[i]; }

 private:
  HopfAlgebra() = default;
  void index_constants();

  StructureConstants sc_;
  int delta_sign_ = 1;
  Scalar delta_;
  std::vector<std::vector<Term>> mult_terms_;
  std::vector<std::vector<PairTerm>> comult_terms_;
  std::vector<std::vector<Term>> antipode_terms_;
  Functional phi_;
  Element h_;
  Matrix gram_;
  bool gram_invertible_ = false;
};

/// Checks every Hopf axiom plus S² = id and the trace-Gram criterion.
/// Check names: associativity, unit, coassociativity, counit, bialgebra,
/// antipode, involutive antipode, semisimple.
Report verify_axioms(const HopfAlgebra& h);

/// ε(h) = φ(h) = φ(1) = n, the integral laws hx = ε(x)h = xh, and traciality
/// of φ, on basis elements.
Report verify_integrals(const HopfAlgebra& h);

/// H*: multiplication is the transpose of Δ, comultiplication the transpose
/// of μ, unit ε, counit evaluation at 1_H, antipode the transpose of S.
/// Shares the δ sign of H.  Throws HopfError if the result fails verification.
HopfAlgebra build_dual(const HopfAlgebra& h);
/// Same, with an explicit δ sign for the dual.
HopfAlgebra build_dual(const HopfAlgebra& h, int delta_sign);

SweedlerExpansion sweedler_expand(const HopfAlgebra& h, const Element& a, int order,
                                  SplitFrom split = SplitFrom::last);

/// The identities behind the C, T, E and A relations, checked on basis
/// elements (pairs of basis elements for E).
Report verify_relation_identities(const HopfAlgebra& h);

}  // namespace hpa
