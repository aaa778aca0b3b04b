// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Values are stored in the power basis {1, z, ..., z^(phi(n)-1)} with z a
// primitive n-th root of unity, reduced modulo the n-th cyclotomic
// polynomial, as an integer coefficient vector over one shared positive
// denominator. The representation is canonical (content 1, den > 0), so
// equality at a common conductor is coefficient equality.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace icosa {

using Int = mpz_class;
using Rational = mpq_class;

long phi_euler(long n);
long lcm_long(long a, long b);

// Per-conductor data: the cyclotomic polynomial and its degree.
struct CycloCtx {
  long n = 1;
  long deg = 1;
  std::vector<Int> phi_poly;  // monic, length deg + 1, integer coefficients

  static const CycloCtx& get(long n);
};

class Cyclo {
 public:
  Cyclo() : n_(1), num_(1, 0), den_(1) {}

  static Cyclo zero(long n = 1);
  static Cyclo one();
  static Cyclo from_int(long v);
  static Cyclo from_rational(const Rational& r);
  // zeta_n^k, any integer k (reduced mod n), at conductor n.
  static Cyclo zeta(long n, long k = 1);
  // Positive square root of m >= 1, built from quadratic Gauss sums.
  // Conductor is the least one the construction supports.
  static Cyclo sqrt_int(unsigned long m);

  long conductor() const { return n_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;  // requires is_rational()

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo scaled(const Rational& r) const;  // r * this, cheap path
  Cyclo inv() const;                      // throws on zero
  Cyclo operator/(const Cyclo& o) const { return *this * o.inv(); }

  // Complex conjugation (zeta -> zeta^-1).
  Cyclo conj() const;
  // Galois action zeta -> zeta^k, requires gcd(k, n) = 1.
  Cyclo galois(long k) const;
  // |this|^2 = this * conj(this); always fixed by conjugation.
  Cyclo norm2() const { return *this * conj(); }

  // Same value at conductor m, n | m.
  Cyclo embedded(long m) const;
  // Same value at conductor m, m | n; throws if the value does not lie in
  // the smaller field.
  Cyclo reduced_to(long m) const;

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // Canonical string "z<n>{k:c;k:c;...}" with reduced rational c per
  // exponent, zero coefficients omitted. parse() round-trips it.
  std::string exact_string() const;
  static Cyclo parse(const std::string& s);

  // Decimal evaluation at zeta_n = exp(2*pi*i/n), absolute error below
  // 10^-digits in each component.
  std::pair<std::string, std::string> to_decimal(int digits) const;
  std::pair<double, double> to_complex() const;

  // Sign of a conjugation-fixed (real) value: -1, 0, +1.
  int sign_real() const;

  const std::vector<Int>& coeff_num() const { return num_; }
  const Int& coeff_den() const { return den_; }

 private:
  Cyclo(long n, std::vector<Int> num, Int den);
  void normalize();

  long n_;
  std::vector<Int> num_;  // length phi(n)
  Int den_;               // > 0
};

inline Cyclo operator*(const Rational& r, const Cyclo& c) { return c.scaled(r); }

// Rewrites c at conductor m, embedding or reducing as needed; throws if the
// value does not lie in Q(zeta_m).
Cyclo to_conductor(const Cyclo& c, long m);

// Common scalars of the icosahedral conventions, all at conductor 20:
// eta = exp(-2*pi*i/5), p = eta + eta^-1 = (sqrt5 - 1)/2, q = 2 sin(2*pi/5),
// i the imaginary unit.
namespace consts {
Cyclo eta();
Cyclo p();
Cyclo p_inv();
Cyclo q();
Cyclo im();
Cyclo sqrt5();
// eta^(two_k / 2); half-integer exponents allowed via doubled argument.
Cyclo eta_pow(long two_k);
// exp(i * pi * two_k / 2) = i^two_k.
Cyclo exp_ipi(long two_k);
// p^k for any integer k (p is a unit).
Cyclo p_pow(long k);
}  // namespace consts

}  // namespace icosa
