// The nine unitary irreducible representations of the binary icosahedral
// group: A, T1, T2, G, H on the single-valued side and E1', E2', G', I'
// on the double-valued side. Matrices are exact, with the five-fold
// generator diagonal and rows labelled by its exponents.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icosa/group.hpp"
#include "icosa/radsum.hpp"

namespace icosa {

enum class IrrepName { A, T1, T2, G, H, E1p, E2p, Gp, Ip };

inline constexpr std::array<IrrepName, 9> kIrrepOrder = {
    IrrepName::A,   IrrepName::T1,  IrrepName::T2,
    IrrepName::G,   IrrepName::H,   IrrepName::E1p,
    IrrepName::E2p, IrrepName::Gp,  IrrepName::Ip};

// ASCII name used on the command line and in file output: "A", "T1", ...,
// "E1p", "Gp".
std::string irrep_ascii(IrrepName g);
// Display name with primes: "E1'", "G'".
std::string irrep_display(IrrepName g);
std::string irrep_latex(IrrepName g);
std::optional<IrrepName> irrep_from_string(const std::string& s);

// Dense square matrix over one cyclotomic field.
struct MatN {
  int n = 0;
  std::vector<Cyclo> a;  // row-major, n*n entries

  static MatN identity(int n);
  static MatN zero(int n);
  Cyclo& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
  const Cyclo& at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
  MatN operator*(const MatN& o) const;
  MatN operator+(const MatN& o) const;
  MatN operator-() const;
  MatN scaled(const Rational& r) const;
  MatN adjoint() const;
  Cyclo trace() const;
  bool operator==(const MatN& o) const;
  bool operator!=(const MatN& o) const { return !(*this == o); }
};

// Exact matrices for the three generators of a representation.
struct IrrepGenerators {
  int dim = 0;
  MatN t0, s1, ep;
};

// The pinned generator matrices of each irreducible representation.
IrrepGenerators reference_generators(IrrepName g);

// Extends generator matrices along the group's closure tree; index i of
// the result represents element i of group().
std::vector<MatN> extend_to_all(const IrrepGenerators& gens);

struct IrrepSpec {
  IrrepName name;
  int dim;
  bool double_valued;
  long conductor;           // least common field of all matrix entries
  std::vector<int> rows;    // doubled row labels, descending
  std::vector<MatN> mats;   // per group element

  const MatN& at(int element) const { return mats[static_cast<size_t>(element)]; }
  Cyclo character(int element) const { return mats[static_cast<size_t>(element)].trace(); }
};

// Built once per name and cached.
const IrrepSpec& irrep(IrrepName g);

// chi[irrep][class] over the canonical irrep order and group() class order.
struct CharacterTable {
  std::vector<std::vector<Cyclo>> chi;
};
const CharacterTable& character_table();

// Exact character of the spin-j rotation matrix of a group element
// (doubled spin label; sensitive to the binary lift, so chi(E') alternates
// in sign with the parity of twoj).
Cyclo su2_character(long twoj, int element);

// Multiplicity of each irreducible in the spin-j representation restricted
// to the group.
std::map<IrrepName, long> multiplicities(long twoj);

// Scalar by which the sum over the five-fold class acts within an irrep.
Cyclo class_operator_eigenvalue(IrrepName g);

// Spin-j matrix of a group element, rows and columns in descending doubled
// label order (twoj, twoj-2, ..., -twoj); entry (r, c) carries row label
// nu and column label mu, acting as u|j,mu> = sum_nu D_{nu,mu} |j,nu>.
std::vector<std::vector<RadSum>> subduced_Dj(long twoj, int element);

}  // namespace icosa
