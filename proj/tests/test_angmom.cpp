#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icosa/angmom.hpp"
#include "icosa/irreps.hpp"

using namespace icosa;
using namespace icosa::consts;

TEST_CASE("tilt angle constants") {
  IcosaAngles a = angle_constants();
  CHECK(a.cos4 == a.sin5);
  CHECK(a.cos5 == a.sin4);
  CHECK(a.cos4 * a.cos4 + a.sin4 * a.sin4 == Cyclo::one());
  CHECK(a.cos5 * a.cos5 + a.sin5 * a.sin5 == Cyclo::one());
  CHECK(a.cos4 == q() * sqrt5().scaled(Rational(1, 5)));

  auto [c4, c4i] = a.cos4.to_complex();
  auto [s4, s4i] = a.sin4.to_complex();
  CHECK(c4 == doctest::Approx(0.8506508084).epsilon(1e-9));
  CHECK(s4 == doctest::Approx(0.5257311121).epsilon(1e-9));
  CHECK(c4i == doctest::Approx(0.0));
  CHECK(s4i == doctest::Approx(0.0));
}

TEST_CASE("rotation profile matrices") {
  IcosaAngles a = angle_constants();

  // doubled spin 1 is the plain rotation block
  auto d1 = small_d_rad(1, a.cos4, a.sin4);
  CHECK(d1[0][0] == RadSum(a.cos4));
  CHECK(d1[0][1] == RadSum(-a.sin4));
  CHECK(d1[1][0] == RadSum(a.sin4));
  CHECK(d1[1][1] == RadSum(a.cos4));

  // zero angle gives the identity
  auto d0 = small_d_rad(4, Cyclo::one(), Cyclo::zero(1));
  for (size_t r = 0; r < 5; ++r)
    for (size_t c = 0; c < 5; ++c)
      CHECK(d0[r][c] == (r == c ? RadSum(Cyclo::one()) : RadSum()));

  CHECK_THROWS(small_d_rad(2, consts::p(), consts::p()));

  // entries are real and the matrix is orthogonal, both tilts
  for (long twoj = 0; twoj <= 7; ++twoj) {
    for (int which = 0; which < 2; ++which) {
      const Cyclo& ch = which ? a.cos5 : a.cos4;
      const Cyclo& sh = which ? a.sin5 : a.sin4;
      auto d = small_d_rad(twoj, ch, sh);
      size_t n = static_cast<size_t>(twoj) + 1;
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) CHECK(d[r][c].conj() == d[r][c]);
      for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
          RadSum acc;
          for (size_t k = 0; k < n; ++k) acc += d[r][k] * d[c][k];
          CHECK(acc == (r == c ? RadSum(Rational(1)) : RadSum()));
        }
    }
  }

  // materialized form agrees with the radical form
  auto dr = small_d_rad(3, a.cos4, a.sin4);
  auto dm = wigner_small_d(3, a.cos4, a.sin4);
  for (size_t r = 0; r < 4; ++r)
    for (size_t c = 0; c < 4; ++c) CHECK(dm[r][c] == dr[r][c].to_cyclo());
}

TEST_CASE("ket states") {
  SpinState s = SpinState::basis(3, 1);
  CHECK(s.norm2() == 1);
  CHECK(s.at(1) == RadSum(Cyclo::one()));
  CHECK(s.at(3).is_zero());
  CHECK_THROWS(SpinState::basis(3, 2));
  CHECK_THROWS(SpinState::basis(3, 5));

  SpinState t = s.scaled_by(RadSum::sqrt_rational(Rational(2)));
  CHECK(t.norm2() == 2);
  CHECK((t - t).norm2() == 0);
  SpinState u = SpinState::basis(3, -1) + s;
  CHECK(u.norm2() == 2);
  CHECK(u != s);
}

TEST_CASE("generator actions on kets") {
  const GroupTable& G = group();

  // the five-fold generator is diagonal with phase eta^mu
  for (long twomu = -4; twomu <= 4; twomu += 2) {
    SpinState out = act(G.idx_t0, SpinState::basis(4, twomu));
    CHECK(out == SpinState::basis(4, twomu).scaled_by(RadSum(eta_pow(twomu))));
  }

  // the center acts by (-1)^{2j}
  CHECK(act(G.idx_ep, SpinState::basis(3, 1)) ==
        SpinState::basis(3, 1).scaled_by(RadSum(Cyclo::from_int(-1))));
  CHECK(act(G.idx_ep, SpinState::basis(4, 0)) == SpinState::basis(4, 0));

  // the equatorial two-fold flips mu with a fixed phase
  SpinState s11 = act(generator_element(GenLabel::S11), SpinState::basis(6, 6));
  CHECK(s11 == SpinState::basis(6, -6).scaled_by(RadSum(eta())));
}

TEST_CASE("closed forms match the matrix action") {
  const GenLabel gens[] = {GenLabel::T0, GenLabel::Ep, GenLabel::S5,
                           GenLabel::S10, GenLabel::S11};
  for (long twoj = 0; twoj <= 7; ++twoj)
    for (GenLabel g : gens) {
      int e = generator_element(g);
      for (long twomu = -twoj; twomu <= twoj; twomu += 2) {
        SpinState direct = act(e, SpinState::basis(twoj, twomu));
        SpinState closed = generator_action_closed_form(g, twoj, twomu);
        CHECK(direct == closed);
      }
    }
}

TEST_CASE("action composes like the group") {
  const GroupTable& G = group();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, G.size() - 1);
  for (long twoj : {2l, 3l, 5l}) {
    SpinState s = SpinState::basis(twoj, twoj);
    s.add(-twoj + 2, RadSum(consts::im()));
    for (int trial = 0; trial < 5; ++trial) {
      int i = pick(rng), j = pick(rng);
      CHECK(act(i, act(j, s)) == act(G.mul(i, j), s));
      CHECK(act(i, s).norm2() == s.norm2());
    }
  }
}
