#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "icosa/cyclo.hpp"

using icosa::Cyclo;
using icosa::Rational;

namespace {

Cyclo rand_cyclo(std::mt19937& rng, long n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Cyclo acc = Cyclo::zero(n);
  long deg = icosa::phi_euler(n);
  for (long k = 0; k < deg; ++k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    acc += Cyclo::zeta(n, k).scaled(c);
  }
  return acc;
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(Cyclo::zeta(1, 0) == Cyclo::one());
  Cyclo s = Cyclo::one();
  for (long k = 1; k <= 4; ++k) s += Cyclo::zeta(5, k);
  CHECK(s.is_zero());
  CHECK(Cyclo::zeta(4, 1) * Cyclo::zeta(4, 1) == Cyclo::from_int(-1));
  CHECK(Cyclo::zeta(7, 3) * Cyclo::zeta(7, 4) == Cyclo::one());
}

TEST_CASE("golden ratio constants") {
  Cyclo eta = icosa::consts::eta();
  Cyclo p = icosa::consts::p();
  Cyclo pi = icosa::consts::p_inv();
  Cyclo q = icosa::consts::q();
  Cyclo s5 = icosa::consts::sqrt5();

  CHECK(eta * eta.conj() == Cyclo::one());
  CHECK(p * pi == Cyclo::one());
  CHECK(pi == Cyclo::one() + eta + eta.conj());
  CHECK(q * q == s5 * pi);
  CHECK(s5 * s5 == Cyclo::from_int(5));
  CHECK(p * p == Cyclo::one() - p);
  CHECK(pi * pi == Cyclo::from_int(2) + p);
  CHECK(s5 == Cyclo::from_int(2) * p + Cyclo::one());
  // 2 sin(pi/5) = q p, whose square is sqrt5 * p
  Cyclo qt = q * p;
  CHECK(qt * qt == s5 * p);
  CHECK(icosa::consts::q() == icosa::consts::im() * (eta - eta.conj()));
}

TEST_CASE("inversion") {
  CHECK(Cyclo::one().inv() == Cyclo::one());
  CHECK(icosa::consts::p().inv() == icosa::consts::p_inv());
  Cyclo s5 = icosa::consts::sqrt5();
  CHECK(s5.inv() * s5 == Cyclo::one());
  CHECK(s5.inv() == s5.scaled(Rational(1, 5)));
  CHECK_THROWS(Cyclo::zero(20).inv());

  std::mt19937 rng(7001);
  for (int t = 0; t < 20; ++t) {
    Cyclo a = rand_cyclo(rng, 20);
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == Cyclo::one());
  }
}

TEST_CASE("embedding") {
  CHECK(Cyclo::zeta(5, 1).embedded(20) == Cyclo::zeta(20, 4));
  CHECK(Cyclo::one().embedded(120) == Cyclo::one());
  auto [re, im] = icosa::consts::p().embedded(120).to_decimal(10);
  CHECK(re == "0.6180339887");
  CHECK(im == "0.0000000000");
  CHECK_THROWS(Cyclo::zeta(20, 1).embedded(30));

  std::mt19937 rng(7002);
  for (int t = 0; t < 15; ++t) {
    Cyclo a = rand_cyclo(rng, 20), b = rand_cyclo(rng, 20);
    CHECK((a * b).embedded(120) == a.embedded(120) * b.embedded(120));
    CHECK((a + b).embedded(120) == a.embedded(120) + b.embedded(120));
  }
}

TEST_CASE("reduction to a subfield") {
  Cyclo p20 = icosa::consts::p();
  Cyclo p5 = p20.reduced_to(5);
  CHECK(p5.conductor() == 5);
  CHECK(p5.embedded(20) == p20);
  CHECK_THROWS(Cyclo::zeta(20, 1).reduced_to(5));
  CHECK_THROWS(Cyclo::zeta(20, 1).reduced_to(7));

  std::mt19937 rng(7003);
  for (int t = 0; t < 10; ++t) {
    Cyclo a = rand_cyclo(rng, 12);
    CHECK(a.embedded(60).reduced_to(12) == a);
  }
}

TEST_CASE("integer square roots") {
  CHECK(Cyclo::sqrt_int(1) == Cyclo::one());
  Cyclo eta = icosa::consts::eta();
  CHECK(Cyclo::sqrt_int(5).embedded(20) ==
        Cyclo::one() + Cyclo::from_int(2) * (eta + eta.conj()));
  for (unsigned long m : {2ul, 3ul, 5ul, 6ul, 10ul, 14ul, 15ul, 30ul, 360ul}) {
    Cyclo r = Cyclo::sqrt_int(m);
    CHECK(r * r == Cyclo::from_int(static_cast<long>(m)));
    CHECK(r.sign_real() == 1);
  }
  auto [re, im] = Cyclo::sqrt_int(6).to_decimal(6);
  CHECK(re == "2.449490");
  CHECK(im == "0.000000");
}

TEST_CASE("numeric export") {
  auto [er, ei] = icosa::consts::eta().to_decimal(12);
  CHECK(er == "0.309016994375");
  CHECK(ei == "-0.951056516295");
  auto [qr, qi] = icosa::consts::q().to_decimal(12);
  CHECK(qr == "1.902113032590");
  CHECK(qi == "0.000000000000");
  auto [zr, zi] = Cyclo::zero(20).to_decimal(12);
  CHECK(zr == "0.000000000000");
  CHECK(zi == "0.000000000000");

  auto qc = icosa::consts::q().to_complex();
  CHECK(qc.first == doctest::Approx(1.9021130325903071).epsilon(1e-14));
  CHECK(qc.second == doctest::Approx(0.0).epsilon(1e-14));

  // identity collapses to zero numerically as well as exactly
  Cyclo q = icosa::consts::q();
  Cyclo resid = q * q - icosa::consts::sqrt5() * icosa::consts::p_inv();
  CHECK(resid.is_zero());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7004);
  for (int t = 0; t < 12; ++t) {
    Cyclo a = rand_cyclo(rng, 20), b = rand_cyclo(rng, 20),
          c = rand_cyclo(rng, 20);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclo::zero(20));
  }
}

TEST_CASE("conjugation and sign") {
  Cyclo eta = icosa::consts::eta();
  CHECK(eta.conj() == Cyclo::zeta(5, 1).embedded(20));
  CHECK(icosa::consts::q().conj() == icosa::consts::q());
  CHECK(eta.norm2() == Cyclo::one());
  CHECK(icosa::consts::p().sign_real() == 1);
  CHECK((-icosa::consts::sqrt5()).sign_real() == -1);
  CHECK(Cyclo::zero(20).sign_real() == 0);
  CHECK_THROWS(icosa::consts::eta().sign_real());
  CHECK_THROWS(icosa::consts::eta().as_rational());
  CHECK(Cyclo::from_rational(Rational(-3, 7)).as_rational() == Rational(-3, 7));
}

TEST_CASE("galois action permutes roots") {
  Cyclo a = Cyclo::zeta(20, 3);
  CHECK(a.galois(7) == Cyclo::zeta(20, 21 % 20));
  CHECK_THROWS(a.galois(5));
  std::mt19937 rng(7005);
  for (int t = 0; t < 8; ++t) {
    Cyclo x = rand_cyclo(rng, 20), y = rand_cyclo(rng, 20);
    CHECK((x * y).galois(3) == x.galois(3) * y.galois(3));
  }
}

TEST_CASE("exact string round trip") {
  std::mt19937 rng(7006);
  for (int t = 0; t < 25; ++t) {
    Cyclo a = rand_cyclo(rng, t % 2 ? 20 : 24);
    CHECK(Cyclo::parse(a.exact_string()) == a);
  }
  CHECK(Cyclo::parse("z20{}").is_zero());
  CHECK(Cyclo::parse("z1{0:5/3}").as_rational() == Rational(5, 3));
  CHECK_THROWS(Cyclo::parse("nonsense"));
  CHECK_THROWS(Cyclo::parse("z20{99:1}"));
}

TEST_CASE("half integer phase helpers") {
  using namespace icosa::consts;
  CHECK(eta_pow(2) == eta());
  CHECK(eta_pow(1) * eta_pow(1) == eta());
  CHECK(eta_pow(-3) == eta_pow(3).conj());
  CHECK(exp_ipi(2) == -Cyclo::one());
  CHECK(exp_ipi(1) == im());
  CHECK(p_pow(-3) == Cyclo::from_int(3) + Cyclo::from_int(2) * p());
  CHECK(p_pow(4) == Cyclo::from_int(2) - Cyclo::from_int(3) * p());
}
