// Vectors over the group algebra and the irreducible bases built from the
// four projector families, the five-fold class operator, and the reference
// representation matrices. Reproduces the published coefficient table and
// extends every basis to the direct product with inversion parity.
#pragma once

#include <array>
#include <cstddef>

#include "icosa/irreps.hpp"

namespace icosa {

// Dense vector over the 120 group elements; index = element index.
struct AlgebraVec {
  std::vector<Cyclo> c;

  AlgebraVec() : c(120, Cyclo::zero(1)) {}
  static AlgebraVec unit(int element);

  Cyclo& operator[](int element) { return c[static_cast<std::size_t>(element)]; }
  const Cyclo& operator[](int element) const {
    return c[static_cast<std::size_t>(element)];
  }

  bool is_zero() const;
  AlgebraVec operator+(const AlgebraVec& o) const;
  AlgebraVec operator-(const AlgebraVec& o) const;
  AlgebraVec scaled(const Cyclo& s) const;
  // g . v and v . g, exact permutation actions
  AlgebraVec left_mul(int element) const;
  AlgebraVec right_mul(int element) const;
  // full algebra product (convolution over the multiplication table)
  AlgebraVec product(const AlgebraVec& o) const;
  // <this, o> = sum conj(this_g) o_g
  Cyclo inner(const AlgebraVec& o) const;
  Rational norm2() const;
  bool operator==(const AlgebraVec& o) const;
  bool operator!=(const AlgebraVec& o) const { return !(*this == o); }
};

// P_mu = (1/10) sum_a eta^{-mu a} (E + eta^{-5 mu} E') T0^a; doubled mu.
AlgebraVec projector(long two_mu);

// The four basis families; i in 1..4. Families 1 and 2 require
// nu = mu (mod 5) and nu = -mu (mod 5) respectively; mismatched parity of
// 2mu, 2nu is always an error.
AlgebraVec phi_basis(int i, long two_mu, long two_nu);

// Which of the four families exist at (mu, nu).
std::array<bool, 4> phi_available(long two_mu, long two_nu);

// W = sum_j (T_j + E' T_j^4) over the six five-fold axes.
const AlgebraVec& class_operator();

// Matrix of left multiplication by W on the available Phi family at
// (mu, nu); dimension 2, 3 or 4.
MatN class_operator_matrix(long two_mu, long two_nu);

struct IrreducibleBasis {
  IrrepName gamma;
  long two_mu, two_nu;
  AlgebraVec vector;              // unit norm, phases pinned to the D matrices
  std::array<Cyclo, 4> coeffs;    // c_i; zero where the family is unavailable
  std::array<bool, 4> available;
  long normsq;                    // N with vector = sum c_i Phi_i / sqrt(N)
};

// All cells of one representation, rows-major over its row labels.
const std::vector<IrreducibleBasis>& irreducible_family(IrrepName g);
const IrreducibleBasis& irreducible_basis(IrrepName g, long two_mu, long two_nu);

// Independent construction (d/120) sum_R conj(D_{mu nu}(R)) R from the
// extended matrices; proportional to the matching irreducible basis.
AlgebraVec canonical_basis(IrrepName g, long two_mu, long two_nu);

// Vector over the 240-element algebra of the direct product with the
// inversion; components [0,120) carry E, [120,240) carry P.
struct IhVector {
  std::vector<Cyclo> c;

  IhVector() : c(240, Cyclo::zero(1)) {}
  Cyclo inner(const IhVector& o) const;
  Rational norm2() const;
  // inversion action P . v
  IhVector parity_flipped() const;
  bool operator==(const IhVector& o) const;
};

// 2^{-1/2} (E + P) psi for parity 'g', 2^{-1/2} (E - P) psi for 'u'.
IhVector to_Ih(const IrreducibleBasis& b, char parity);

}  // namespace icosa
