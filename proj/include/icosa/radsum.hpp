// Exact scalars of the form sum_k sqrt(s_k) * c_k with s_k distinct
// squarefree positive integers and c_k cyclotomic. Closed under ring
// operations because sqrt(s)*sqrt(t) = g*sqrt((s/g)(t/g)) for g = gcd(s,t).
//
// This is the natural home for rotation-matrix entries of half-integer
// spin: the factorial prefactors contribute one square root each, and the
// remaining factor stays in a fixed cyclotomic field.
#pragma once

#include "icosa/cyclo.hpp"

namespace icosa {

// m = g^2 * sf with sf squarefree, m >= 1. Throws when a cofactor resists
// classification (composite with no prime factor below the trial bound).
std::pair<Int, Int> sqrt_reduce(const Int& m);

class RadSum {
 public:
  RadSum() = default;  // zero
  RadSum(const Cyclo& c);
  explicit RadSum(const Rational& r);

  // sqrt(r) for rational r > 0.
  static RadSum sqrt_rational(const Rational& r);
  // sqrt(sf) * c for squarefree sf >= 1 (caller guarantees squarefree).
  static RadSum radical_term(const Int& sf, const Cyclo& c);

  bool is_zero() const;
  // True when the value lies in the plain cyclotomic field (no radical).
  bool is_cyclo() const;
  Cyclo cyclo_part() const;  // requires is_cyclo()
  bool is_rational() const;
  Rational as_rational() const;  // requires is_rational()

  RadSum operator-() const;
  RadSum operator+(const RadSum& o) const;
  RadSum operator-(const RadSum& o) const;
  RadSum operator*(const RadSum& o) const;
  RadSum& operator+=(const RadSum& o) { return *this = *this + o; }
  RadSum& operator-=(const RadSum& o) { return *this = *this - o; }
  RadSum& operator*=(const RadSum& o) { return *this = *this * o; }
  RadSum scaled(const Rational& r) const;
  RadSum conj() const;
  // conj(this) * this; rational for the values this code exchanges.
  RadSum norm2() const { return conj() * *this; }

  // Value equality. The stored form is not unique: a coefficient's own
  // cyclotomic field can contain square roots (sqrt(5) at conductor 20,
  // say), so the same number may sit under different radicands. Comparison
  // reduces both sides over their joint field first.
  bool operator==(const RadSum& o) const;
  bool operator!=(const RadSum& o) const { return !(*this == o); }

  // Materialize every sqrt(s_k) as its cyclotomic Gauss-sum value; the
  // conductor grows to the lcm of the pieces.
  Cyclo to_cyclo() const;

  std::pair<double, double> to_complex() const;

  // "sqrt(s)*z<n>{...} + z<n>{...}", terms by ascending s, the radical
  // factor omitted when s = 1. parse() round-trips it.
  std::string exact_string() const;
  static RadSum parse(const std::string& s);

  const std::vector<std::pair<Int, Cyclo>>& terms() const { return terms_; }

 private:
  void push_term(const Int& sf, const Cyclo& c);
  // Canonical form over the joint cyclotomic field of the coefficients:
  // radicands representable there are folded into the coefficients, and
  // radicands in the same square class are merged. The result has pairwise
  // independent radicands, so the value is zero iff the list is empty.
  std::vector<std::pair<Int, Cyclo>> reduced_terms() const;
  // sorted by radicand, no zero coefficients, radicands distinct squarefree
  std::vector<std::pair<Int, Cyclo>> terms_;
};

inline RadSum operator*(const Rational& r, const RadSum& x) { return x.scaled(r); }

// Rotation-matrix entry for doubled spin twoj and doubled row/column
// indices (row twonu, column twomu), evaluated on the 2x2 unitary
// [[a, b], [c, d]]. Indices run over {-twoj, -twoj+2, ..., twoj}.
RadSum rotation_entry(long twoj, long twonu, long twomu, const Cyclo& a,
                      const Cyclo& b, const Cyclo& c, const Cyclo& d);

}  // namespace icosa
