#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "icosa/group.hpp"
#include "icosa/groupspace.hpp"
#include "icosa/notation.hpp"

using namespace icosa;
using namespace icosa::consts;

namespace {

Cyclo cyc(long num, long den = 1) { return Cyclo::from_rational(Rational(num, den)); }

struct TableRow {
  IrrepName gamma;
  long two_mu, two_nu;
  std::array<std::string, 4> coeff;
  long normsq;
};

std::vector<TableRow> load_table() {
  std::ifstream in(testdata::fixture_path("table1.txt"));
  REQUIRE(in.good());
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string name;
    TableRow r;
    ss >> name >> r.two_mu >> r.two_nu >> r.coeff[0] >> r.coeff[1] >> r.coeff[2] >> r.coeff[3] >>
        r.normsq;
    REQUIRE(!ss.fail());
    auto g = irrep_from_string(name);
    REQUIRE(g.has_value());
    r.gamma = *g;
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

TEST_CASE("projectors: coefficients, idempotence, orthogonality, completeness") {
  const GroupTable& g = group();
  const AlgebraVec p0 = projector(0);
  CHECK(p0[g.idx_e] == cyc(1, 10));
  CHECK(p0[g.idx_ep] == cyc(1, 10));
  const AlgebraVec ph = projector(1);  // label 1/2
  CHECK(ph[g.idx_e] == cyc(1, 10));
  CHECK(ph[g.idx_ep] == cyc(-1, 10));

  for (long two : {0L, 2L, 1L, 5L}) {
    const AlgebraVec p = projector(two);
    CHECK(p.product(p) == p);
  }
  CHECK(projector(0).product(projector(2)).is_zero());
  CHECK(projector(1).product(projector(3)).is_zero());
  CHECK(projector(1).product(projector(2)).is_zero());
  // label is periodic with period 5
  CHECK(projector(1) == projector(11));
  CHECK(projector(-2) == projector(8));

  AlgebraVec sum;
  for (long two = 0; two < 10; ++two) sum = sum + projector(two);
  CHECK(sum == AlgebraVec::unit(g.idx_e));
}

TEST_CASE("class operator: support and centrality") {
  const GroupTable& g = group();
  const AlgebraVec& w = class_operator();
  int support = 0;
  for (int e = 0; e < g.size(); ++e)
    if (!w[e].is_zero()) {
      CHECK(w[e] == Cyclo::one());
      ++support;
    }
  CHECK(support == 12);

  // the twelve elements are the five-fold axis rotations and the primed
  // fourth powers
  AlgebraVec expl;
  for (int axis = 1; axis <= 5; ++axis) {
    const std::string base = "T" + std::to_string(axis);
    expl[g.index_of(base)] += Cyclo::one();
    expl[g.mul(g.idx_ep, g.index_of(base + "^4"))] += Cyclo::one();
  }
  expl[g.index_of("T0")] += Cyclo::one();
  expl[g.mul(g.idx_ep, g.index_of("T0^4"))] += Cyclo::one();
  CHECK(expl == w);

  const AlgebraVec x = AlgebraVec::unit(g.idx_s1);
  CHECK(w.product(x) == x.product(w));
  const AlgebraVec y = phi_basis(3, 1, 3);
  CHECK(w.product(y) == y.product(w));
}

TEST_CASE("basis families: norms, projector sandwich, generator action") {
  const GroupTable& g = group();

  const AlgebraVec f1 = phi_basis(1, 0, 0);
  CHECK(f1[g.idx_e] == Cyclo::sqrt_int(10).inv());
  int support = 0;
  for (int e = 0; e < g.size(); ++e)
    if (!f1[e].is_zero()) ++support;
  CHECK(support == 10);

  // the second family lives on the coset of S11
  const AlgebraVec f2 = phi_basis(2, 2, -2);
  const int s11 = g.index_of("S11");
  CHECK(f2[s11] == Cyclo::sqrt_int(10).inv());
  int t0a = g.idx_e;
  for (int a = 0; a < 5; ++a) {
    CHECK(f2[g.mul(t0a, s11)] == eta_pow(-2 * a) * f2[s11]);
    t0a = g.mul(t0a, g.idx_t0);
  }

  const std::array<std::pair<long, long>, 3> labels = {
      std::make_pair(0L, 0L), std::make_pair(2L, 2L), std::make_pair(1L, 3L)};
  for (const auto& [tm, tn] : labels) {
    const auto avail = phi_available(tm, tn);
    std::vector<AlgebraVec> fams;
    for (int i = 1; i <= 4; ++i)
      if (avail[static_cast<size_t>(i - 1)]) fams.push_back(phi_basis(i, tm, tn));
    for (size_t a = 0; a < fams.size(); ++a)
      for (size_t b = 0; b < fams.size(); ++b)
        CHECK(fams[a].inner(fams[b]) == (a == b ? Cyclo::one() : Cyclo::zero(1)));
    for (const auto& f : fams) {
      CHECK(projector(tm).product(f) == f);
      CHECK(f.product(projector(tn)) == f);
      CHECK(f.left_mul(g.idx_t0) == f.scaled(eta_pow(tm)));
      CHECK(f.right_mul(g.idx_t0) == f.scaled(eta_pow(tn)));
      CHECK(f.left_mul(g.idx_ep) == f.scaled(eta_pow(5 * tm)));
    }
  }

  CHECK_THROWS_AS(phi_basis(1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi_basis(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_basis(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi_basis(5, 0, 0), std::invalid_argument);
}

TEST_CASE("class operator matrices have the catalogued spectra") {
  // integer labels (1,1): three irreps meet this block
  {
    MatN m = class_operator_matrix(2, 2);
    REQUIRE(m.n == 3);
    const std::array<Cyclo, 3> ev = {cyc(4) * p_inv(), cyc(-3), Cyclo::zero(1)};
    MatN prod = MatN::identity(3);
    Cyclo tr = Cyclo::zero(1);
    for (const Cyclo& l : ev) {
      MatN shift = m;
      for (int k = 0; k < 3; ++k) shift.at(k, k) -= l;
      prod = prod * shift;
      tr += l;
    }
    CHECK(prod == MatN::zero(3));
    CHECK(m.trace() == tr);
  }
  // integer labels (0,0): four irreps, all four families present
  {
    MatN m = class_operator_matrix(0, 0);
    REQUIRE(m.n == 4);
    const std::array<Cyclo, 4> ev = {cyc(12), cyc(4) * p_inv(), cyc(-4) * p(), Cyclo::zero(1)};
    MatN prod = MatN::identity(4);
    Cyclo tr = Cyclo::zero(1);
    for (const Cyclo& l : ev) {
      MatN shift = m;
      for (int k = 0; k < 4; ++k) shift.at(k, k) -= l;
      prod = prod * shift;
      tr += l;
    }
    CHECK(prod == MatN::zero(4));
    CHECK(m.trace() == tr);
  }
  CHECK_THROWS_AS(class_operator_matrix(0, 1), std::invalid_argument);
}

TEST_CASE("irreducible bases: catalogued sample cells") {
  {
    const IrreducibleBasis& b = irreducible_basis(IrrepName::A, 0, 0);
    CHECK(b.coeffs[0] == Cyclo::one());
    CHECK(b.coeffs[1] == Cyclo::one());
    CHECK(b.coeffs[2] == sqrt5());
    CHECK(b.coeffs[3] == sqrt5());
    CHECK(b.normsq == 12);
    for (bool a : b.available) CHECK(a);
  }
  {
    const IrreducibleBasis& b = irreducible_basis(IrrepName::T1, 0, 2);
    CHECK_FALSE(b.available[0]);
    CHECK_FALSE(b.available[1]);
    CHECK(b.coeffs[0].is_zero());
    CHECK(b.coeffs[1].is_zero());
    CHECK(b.coeffs[2] == -eta_pow(-2));
    CHECK(b.coeffs[3] == eta_pow(4));
    CHECK(b.normsq == 2);
  }
  {
    const IrreducibleBasis& b = irreducible_basis(IrrepName::Ip, 5, 5);
    CHECK(b.available[0]);
    CHECK(b.available[1]);
    CHECK(b.coeffs[0] == cyc(-5) * im());
    CHECK(b.coeffs[1].is_zero());
    CHECK(b.coeffs[2] == q() * p_pow(-2));
    CHECK(b.coeffs[3] == q() * p_pow(3));
    CHECK(b.normsq == 50);
  }
  CHECK_THROWS_AS(irreducible_basis(IrrepName::A, 2, 0), std::invalid_argument);
}

TEST_CASE("irreducible bases reproduce the published table") {
  const std::vector<TableRow> rows = load_table();
  CHECK(rows.size() == 120);
  std::map<IrrepName, int> per;
  for (const TableRow& r : rows) {
    ++per[r.gamma];
    const IrreducibleBasis& b = irreducible_basis(r.gamma, r.two_mu, r.two_nu);
    for (int i = 0; i < 4; ++i) {
      const Cyclo want = parse_coeff_token(r.coeff[static_cast<size_t>(i)]);
      if (!b.available[static_cast<size_t>(i)]) {
        CHECK(want.is_zero());
        CHECK(b.coeffs[static_cast<size_t>(i)].is_zero());
      } else {
        CHECK(b.coeffs[static_cast<size_t>(i)] == want);
      }
    }
    CHECK(b.normsq == r.normsq);
  }
  for (IrrepName g : kIrrepOrder) {
    const int d = irrep(g).dim;
    CHECK(per[g] == d * d);
    CHECK(irreducible_family(g).size() == static_cast<size_t>(d * d));
  }
}

TEST_CASE("coefficient tokens render back exactly") {
  for (const TableRow& r : load_table())
    for (const auto& tok : r.coeff) CHECK(coeff_token(parse_coeff_token(tok)) == tok);
  CHECK(coeff_token_latex("-e^-2*q*p^2") == "-\\eta^{-2}\\,q\\,p^{2}");
  CHECK(coeff_token_latex("i*sqrt5") == "i\\,\\sqrt{5}");
  CHECK(coeff_token_latex("0") == "0");
  CHECK_THROWS_AS(parse_coeff_token("x^2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coeff_token(""), std::invalid_argument);
}

TEST_CASE("both transformation laws hold on random elements") {
  const GroupTable& g = group();
  std::mt19937 rng(20231108);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  for (IrrepName gamma : kIrrepOrder) {
    const IrrepSpec& spec = irrep(gamma);
    const auto& fam = irreducible_family(gamma);
    const int d = spec.dim;
    for (int trial = 0; trial < 4; ++trial) {
      const int e = pick(rng);
      const MatN& dm = spec.at(e);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const AlgebraVec& v = fam[static_cast<size_t>(r * d + c)].vector;
          AlgebraVec left;
          for (int m = 0; m < d; ++m)
            left = left + fam[static_cast<size_t>(m * d + c)].vector.scaled(dm.at(m, r));
          CHECK(v.left_mul(e) == left);
          AlgebraVec right;
          for (int m = 0; m < d; ++m)
            right = right + fam[static_cast<size_t>(r * d + m)].vector.scaled(dm.at(c, m));
          CHECK(v.right_mul(e) == right);
        }
    }
  }
}

TEST_CASE("the 120 basis vectors are orthonormal") {
  std::vector<const AlgebraVec*> all;
  for (IrrepName g : kIrrepOrder)
    for (const auto& b : irreducible_family(g)) all.push_back(&b.vector);
  REQUIRE(all.size() == 120);
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i; j < all.size(); ++j) {
      const Cyclo ip = all[i]->inner(*all[j]);
      if (i == j)
        CHECK(ip == Cyclo::one());
      else
        CHECK(ip.is_zero());
    }
}

TEST_CASE("canonical matrix-element vectors are unit rescalings") {
  for (IrrepName g : kIrrepOrder) {
    const IrrepSpec& spec = irrep(g);
    Cyclo s = Cyclo::sqrt_int(static_cast<unsigned long>(120 / spec.dim)).inv();
    if (g == IrrepName::E1p || g == IrrepName::E2p || g == IrrepName::Ip) s = s * im();
    if (g == IrrepName::Gp) s = s * (-im());
    for (const auto& b : irreducible_family(g))
      CHECK(canonical_basis(g, b.two_mu, b.two_nu) == b.vector.scaled(s));
  }
  // squared length of a matrix-element vector is dim/order
  const AlgebraVec can = canonical_basis(IrrepName::H, 4, -2);
  CHECK(can.norm2() == Rational(1, 24));
}

TEST_CASE("inversion doubling") {
  const IrreducibleBasis& b = irreducible_basis(IrrepName::T1, 2, 2);
  const IhVector vg = to_Ih(b, 'g');
  const IhVector vu = to_Ih(b, 'u');
  CHECK(vg.norm2() == Rational(1));
  CHECK(vu.norm2() == Rational(1));
  CHECK(vg.inner(vu).is_zero());
  CHECK(vg.parity_flipped() == vg);
  const IhVector flipped = vu.parity_flipped();
  for (size_t i = 0; i < flipped.c.size(); ++i) CHECK(flipped.c[i] == -vu.c[i]);
  const Cyclo half = Cyclo::sqrt_int(2).inv();
  for (size_t i = 0; i < 120; ++i) CHECK(vg.c[i] == b.vector.c[i] * half);
  CHECK_THROWS_AS(to_Ih(b, 'x'), std::invalid_argument);
}
