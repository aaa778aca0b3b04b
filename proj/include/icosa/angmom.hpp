// Exact angular momentum machinery: rotation matrices d^j at the two
// icosahedral tilt angles, the group action on |j, mu> kets, and the
// closed-form actions of the five distinguished generators.
#pragma once

#include <map>

#include "icosa/group.hpp"
#include "icosa/radsum.hpp"

namespace icosa {

// Exact sines and cosines of the polar tilts of the first and second
// two-fold axis rings.
struct IcosaAngles {
  Cyclo cos4, sin4, cos5, sin5;
};
IcosaAngles angle_constants();

// A finite ket sum_mu amp[mu] |j, mu>, keyed by doubled mu; amplitudes of
// zero are dropped.
struct SpinState {
  long twoj = 0;
  std::map<long, RadSum> amp;

  static SpinState basis(long twoj, long twomu);  // |j, mu>
  void add(long twomu, const RadSum& x);
  RadSum at(long twomu) const;
  SpinState scaled_by(const RadSum& x) const;
  SpinState operator+(const SpinState& o) const;
  SpinState operator-(const SpinState& o) const;
  // sum over mu of |amp|^2; must come out rational
  Rational norm2() const;
  bool operator==(const SpinState& o) const;
  bool operator!=(const SpinState& o) const { return !(*this == o); }
};

// d^j(beta) from exact (cos(beta/2), sin(beta/2)); rows and columns run
// over descending doubled labels, entry (r, c) = d^j_{nu mu}.
std::vector<std::vector<RadSum>> small_d_rad(long twoj, const Cyclo& cos_half,
                                             const Cyclo& sin_half);
// Same matrix with every radical materialized as a cyclotomic value.
std::vector<std::vector<Cyclo>> wigner_small_d(long twoj, const Cyclo& cos_half,
                                               const Cyclo& sin_half);

// u|j, mu> = sum_nu D^j_{nu mu}(u) |j, nu>, exactly.
SpinState act(const Mat2& u, const SpinState& s);
SpinState act(int element, const SpinState& s);

// The five generators with published closed-form actions.
enum class GenLabel { T0, Ep, S5, S10, S11 };
// Index of the generator inside group().
int generator_element(GenLabel which);
// Closed-form action on |j, mu>, written independently of act() so the two
// can be compared; they must agree exactly.
SpinState generator_action_closed_form(GenLabel which, long twoj, long twomu);

}  // namespace icosa
