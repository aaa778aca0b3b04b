// Symmetry-adapted combinations of angular momentum states: the closed-form
// evaluation against the published coefficient table, an oracle comparing it
// with direct group-algebra application, and complete orthonormal adapted
// bases per representation and spin.
#pragma once

#include "icosa/angmom.hpp"
#include "icosa/groupspace.hpp"

namespace icosa {

// 1 when (lambda - rho)/5 is an integer, else 0. Labels are doubled and
// must agree in parity.
int delta5(long two_lambda, long two_rho);

// <a, b> = sum over nu of conj(a_nu) b_nu.
RadSum state_inner(const SpinState& a, const SpinState& b);

// The closed-form combination for row mu seeded at (lambda, rho); may be
// the zero state. Throws when mu or lambda is not a row of gamma, or the
// parities of the labels and twoj disagree.
SpinState combine(IrrepName gamma, long two_mu, long two_lambda, long twoj,
                  long two_rho);

// True when the closed form and the termwise application of the group
// algebra vector agree up to a positive rational factor (both zero counts).
bool combine_equals_application_oracle(IrrepName gamma, long two_mu,
                                       long two_lambda, long twoj,
                                       long two_rho);

struct AdaptedFamily {
  long two_lambda, two_rho;      // the seed
  RadSum rawscale;               // orthogonalized family = rawscale * rows
  std::vector<SpinState> rows;   // indexed like irrep(gamma).rows
};

struct AdaptedBasis {
  IrrepName gamma;
  long twoj;
  std::vector<AdaptedFamily> copies;  // as many as the multiplicity
};

// Scans seeds (rho descending, lambda over the row set), keeps independent
// families, orthonormalizes them in scan order, and checks the
// transformation law on every generator. Throws if the seeds run out
// before the multiplicity is reached.
AdaptedBasis basis_set(IrrepName gamma, long twoj);

enum class Parity { even, odd };

// Name of the parity-extended representation, e.g. "T2_u".
std::string parity_label(IrrepName gamma, Parity p);

}  // namespace icosa
