#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icosa/group.hpp"
#include "icosa/radsum.hpp"

using namespace icosa;

namespace {

RadSum rand_radsum(std::mt19937& rng) {
  std::uniform_int_distribution<int> sfs(0, 3);
  std::uniform_int_distribution<long> coef(-4, 4);
  const long radicands[4] = {1, 2, 3, 5};
  RadSum x;
  for (int t = 0; t < 3; ++t) {
    Cyclo c = Cyclo::zero(12);
    for (long k = 0; k < 4; ++k)
      c += Cyclo::zeta(12, k).scaled(Rational(coef(rng), 1 + (t == 1)));
    x += RadSum::radical_term(radicands[sfs(rng)], c);
  }
  return x;
}

}  // namespace

TEST_CASE("square root reduction") {
  auto check = [](long m, long g, long sf) {
    auto [gg, ss] = sqrt_reduce(Int(m));
    CHECK(gg == g);
    CHECK(ss == sf);
  };
  check(1, 1, 1);
  check(2, 1, 2);
  check(12, 2, 3);
  check(49, 7, 1);
  check(720, 12, 5);
  check(3628800, 720, 7);  // 10!
  CHECK_THROWS(sqrt_reduce(Int(0)));
  CHECK_THROWS(sqrt_reduce(Int(-3)));

  Int big = 1;
  for (int i = 2; i <= 20; ++i) big *= i;  // 20! = 2^18 3^8 5^4 7^2 11 13 17 19
  auto [g, sf] = sqrt_reduce(big);
  CHECK(sf == 11 * 13 * 17 * 19);
  CHECK(g * g * sf == big);
}

TEST_CASE("radical arithmetic") {
  RadSum r2 = RadSum::sqrt_rational(Rational(2));
  RadSum r3 = RadSum::sqrt_rational(Rational(3));
  RadSum s = r2 + r3;
  CHECK((s * s) == RadSum(Rational(5)) + RadSum::sqrt_rational(Rational(6)).scaled(2));
  CHECK((r2 + r3) * (r2 - r3) == RadSum(Rational(-1)));
  CHECK(RadSum::sqrt_rational(Rational(8)) == r2.scaled(2));
  CHECK(RadSum::sqrt_rational(Rational(3, 2)) ==
        RadSum::sqrt_rational(Rational(6)).scaled(Rational(1, 2)));
  CHECK((r2 * r2).as_rational() == 2);
  CHECK(RadSum().is_zero());
  CHECK((r2 - r2).is_zero());
  CHECK_FALSE(s.is_cyclo());
  CHECK_THROWS(s.as_rational());
}

TEST_CASE("radical ring axioms on random values") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    RadSum a = rand_radsum(rng), b = rand_radsum(rng), c = rand_radsum(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("materialization agrees with root-of-unity square roots") {
  RadSum r2 = RadSum::sqrt_rational(Rational(2));
  CHECK(r2.to_cyclo() == Cyclo::sqrt_int(2));
  RadSum mix = RadSum(consts::p()) + RadSum::radical_term(10, consts::im());
  CHECK(mix.to_cyclo() == consts::p() + Cyclo::sqrt_int(10) * consts::im());
  auto [re, im] = mix.to_complex();
  CHECK(re == doctest::Approx(0.6180339887).epsilon(1e-9));
  CHECK(im == doctest::Approx(3.1622776602).epsilon(1e-9));
}

TEST_CASE("exact string round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    RadSum x = rand_radsum(rng);
    CHECK(RadSum::parse(x.exact_string()) == x);
  }
  CHECK(RadSum::parse("0").is_zero());
  RadSum v = RadSum::parse("sqrt(6)*z1{0:1/2} + z4{1:-2}");
  CHECK(v == RadSum::sqrt_rational(Rational(6)).scaled(Rational(1, 2)) -
                 RadSum(consts::im()).scaled(2));
  CHECK_THROWS(RadSum::parse("sqrt(6*z1{0:1}"));
}

namespace {

std::vector<std::vector<RadSum>> rot_matrix(long twoj, const Mat2& u) {
  size_t n = static_cast<size_t>(twoj) + 1;
  std::vector<std::vector<RadSum>> d(n, std::vector<RadSum>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      d[r][c] = rotation_entry(twoj, twoj - 2 * static_cast<long>(r),
                               twoj - 2 * static_cast<long>(c), u.m[0], u.m[1],
                               u.m[2], u.m[3]);
  return d;
}

}  // namespace

TEST_CASE("rotation entries at doubled spin 1 reproduce the matrix") {
  const GroupTable& G = group();
  for (int e : {G.idx_t0, G.idx_s1, G.idx_ep, G.index_of("R7"), G.index_of("E'T3^2")}) {
    const Mat2& u = G.elements[static_cast<size_t>(e)].mat;
    auto d = rot_matrix(1, u);
    CHECK(d[0][0] == RadSum(u.m[0]));
    CHECK(d[0][1] == RadSum(u.m[1]));
    CHECK(d[1][0] == RadSum(u.m[2]));
    CHECK(d[1][1] == RadSum(u.m[3]));
  }
}

TEST_CASE("rotation matrices are unitary and diagonal on the axis ring") {
  const GroupTable& G = group();
  const Mat2& t0 = G.elements[static_cast<size_t>(G.idx_t0)].mat;
  auto d = rot_matrix(4, t0);
  for (size_t r = 0; r < 5; ++r)
    for (size_t c = 0; c < 5; ++c)
      if (r != c) CHECK(d[r][c].is_zero());
  // column norms at doubled spin 3 for a generic element
  const Mat2& s = G.elements[static_cast<size_t>(G.index_of("S7"))].mat;
  auto d3 = rot_matrix(3, s);
  for (size_t c = 0; c < 4; ++c) {
    RadSum acc;
    for (size_t r = 0; r < 4; ++r) acc += d3[r][c].conj() * d3[r][c];
    CHECK(acc == RadSum(Rational(1)));
  }
}

TEST_CASE("rotation matrices compose like the group") {
  const GroupTable& G = group();
  const long twoj = 2;
  const size_t n = static_cast<size_t>(twoj) + 1;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  for (int trial = 0; trial < 4; ++trial) {
    int i = pick(rng), j = pick(rng);
    auto a = rot_matrix(twoj, G.elements[static_cast<size_t>(i)].mat);
    auto b = rot_matrix(twoj, G.elements[static_cast<size_t>(j)].mat);
    auto ab = rot_matrix(twoj, G.elements[static_cast<size_t>(G.mul(i, j))].mat);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        RadSum acc;
        for (size_t k = 0; k < n; ++k) acc += a[r][k] * b[k][c];
        CHECK(acc == ab[r][c]);
      }
  }
}
