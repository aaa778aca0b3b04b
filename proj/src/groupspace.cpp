// Group algebra vectors, the projector and basis families, and the exact
// construction of the irreducible bases with phases pinned to the reference
// representation matrices.
#include "icosa/groupspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "icosa/group.hpp"

namespace icosa {

namespace {

int pclass(long two) { return static_cast<int>(((two % 10) + 10) % 10); }

void check_parity(long two_mu, long two_nu) {
  if ((two_mu - two_nu) % 2 != 0)
    throw std::invalid_argument("row labels differ in parity");
}

AlgebraVec build_phi(int i, long two_mu, long two_nu) {
  const GroupTable& g = group();
  AlgebraVec v;
  const Cyclo par = consts::eta_pow(-5 * two_mu);
  if (i == 1 || i == 2) {
    const int right = (i == 1) ? g.idx_e : g.index_of("S11");
    const Cyclo s = Cyclo::sqrt_int(10).inv();
    int t0a = g.idx_e;
    for (int a = 0; a < 5; ++a) {
      const Cyclo w = consts::eta_pow(-two_mu * a) * s;
      const int base = g.mul(t0a, right);
      v[base] += w;
      v[g.mul(g.idx_ep, base)] += w * par;
      t0a = g.mul(t0a, g.idx_t0);
    }
  } else {
    const int center = g.index_of(i == 3 ? "S5" : "S10");
    const Cyclo s = (Cyclo::from_int(5) * Cyclo::sqrt_int(2)).inv();
    int t0a = g.idx_e;
    for (int a = 0; a < 5; ++a) {
      const int left = g.mul(t0a, center);
      int t0b = g.idx_e;
      for (int b = 0; b < 5; ++b) {
        const int base = g.mul(left, t0b);
        const Cyclo w = consts::eta_pow(-two_mu * a - two_nu * b) * s;
        v[base] += w;
        v[g.mul(g.idx_ep, base)] += w * par;
        t0b = g.mul(t0b, g.idx_t0);
      }
      t0a = g.mul(t0a, g.idx_t0);
    }
  }
  return v;
}

// The families depend on the labels only through their residues mod 5
// (doubled: mod 10), so they are cached per residue pair.
const AlgebraVec& cached_phi(int i, long two_mu, long two_nu) {
  static std::mutex guard;
  static std::map<std::tuple<int, int, int>, AlgebraVec> cache;
  std::lock_guard<std::mutex> lock(guard);
  const auto key = std::make_tuple(i, pclass(two_mu), pclass(two_nu));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_phi(i, pclass(two_mu), pclass(two_nu))).first;
  return it->second;
}

// Reduced row echelon form over the exact field, pivots normalized to 1;
// only the first `width` columns are eligible as pivots. Returns the pivot
// columns in elimination order.
std::vector<int> rref(std::vector<std::vector<Cyclo>>& m, int width) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < width && r < m.size(); ++col) {
    std::size_t pr = m.size();
    for (std::size_t i = r; i < m.size(); ++i)
      if (!m[i][static_cast<std::size_t>(col)].is_zero()) {
        pr = i;
        break;
      }
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    const Cyclo piv = m[r][static_cast<std::size_t>(col)].inv();
    for (auto& x : m[r]) x *= piv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r) continue;
      const Cyclo f = m[i][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Cyclo>> nullspace(const MatN& a) {
  std::vector<std::vector<Cyclo>> m(static_cast<std::size_t>(a.n));
  for (int r = 0; r < a.n; ++r)
    for (int c = 0; c < a.n; ++c) m[static_cast<std::size_t>(r)].push_back(a.at(r, c));
  const std::vector<int> piv = rref(m, a.n);
  std::vector<bool> is_piv(static_cast<std::size_t>(a.n), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Cyclo>> basis;
  for (int f = 0; f < a.n; ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<Cyclo> v(static_cast<std::size_t>(a.n), Cyclo::zero(1));
    v[static_cast<std::size_t>(f)] = Cyclo::one();
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = -m[i][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Rows carry nunk coefficients and one right hand side. Throws when the
// solution is not unique or the system is inconsistent.
std::vector<Cyclo> solve_unique(std::vector<std::vector<Cyclo>> aug, int nunk) {
  const std::vector<int> piv = rref(aug, nunk);
  if (static_cast<int>(piv.size()) != nunk)
    throw std::logic_error("linear system is rank deficient");
  for (std::size_t i = piv.size(); i < aug.size(); ++i)
    if (!aug[i][static_cast<std::size_t>(nunk)].is_zero())
      throw std::logic_error("linear system is inconsistent");
  std::vector<Cyclo> x(static_cast<std::size_t>(nunk), Cyclo::zero(1));
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[static_cast<std::size_t>(piv[i])] = aug[i][static_cast<std::size_t>(nunk)];
  return x;
}

struct Block {
  std::vector<int> fam;                    // 1-based family indices present
  std::vector<AlgebraVec> phi;             // same order
  std::vector<std::vector<Cyclo>> nullb;   // eigenspace of W, family coordinates
};

std::vector<Cyclo> coords_in(const Block& b, const AlgebraVec& v) {
  std::vector<Cyclo> r;
  r.reserve(b.phi.size());
  for (const auto& f : b.phi) r.push_back(f.inner(v));
  return r;
}

AlgebraVec from_coords(const Block& b, const std::vector<Cyclo>& y) {
  AlgebraVec v;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!y[k].is_zero()) v = v + b.phi[k].scaled(y[k]);
  return v;
}

// Positive rational rescaling to coordinate-wise integral form with unit
// content.
void make_primitive(std::vector<Cyclo>& y) {
  Int den = 1;
  for (const auto& yi : y) den = lcm(den, yi.coeff_den());
  Int content = 0;
  for (const auto& yi : y) {
    const Int f = den / yi.coeff_den();
    for (const auto& nu : yi.coeff_num()) content = gcd(content, nu * f);
  }
  if (content == 0) throw std::logic_error("basis cell vanished");
  Rational rs(den, content);
  rs.canonicalize();
  for (auto& yi : y) yi = yi.scaled(rs);
}

// Rewrites the solved coordinates of one cell as the minimal integral
// coefficient set: a product of unit and radical factors times a positive
// rational, chosen so that every coefficient is an algebraic integer at
// conductor 20 with unit content and integer squared length.
std::pair<std::vector<Cyclo>, long> minimal_integral(std::vector<Cyclo> y) {
  Cyclo base = Cyclo::zero(1);
  for (const auto& yi : y) base += yi.norm2();
  // unique unit q^h p^k making the squared length rational
  constexpr int kmax = 40;
  const Cyclo p2 = consts::p_pow(2);
  int kf = kmax + 1, hf = -1;
  for (int h = 0; h <= 1; ++h) {
    Cyclo cur = base;
    if (h == 1) cur *= consts::q() * consts::q();
    cur *= consts::p_pow(-2 * kmax);
    for (int k = -kmax; k <= kmax; ++k) {
      if (cur.is_rational()) {
        if (kf != kmax + 1) throw std::logic_error("unit scaling is ambiguous");
        kf = k;
        hf = h;
      }
      cur *= p2;
    }
  }
  if (kf == kmax + 1) throw std::logic_error("no unit scaling gives a rational norm");
  const Cyclo u = (hf == 0 ? Cyclo::one() : consts::q()) * consts::p_pow(kf);
  for (auto& yi : y) yi *= u;
  make_primitive(y);
  // strip a residual radical: at least one squarefree class lands in the
  // conductor-20 ring, ties broken by the smaller squared length
  std::optional<std::pair<std::vector<Cyclo>, long>> best;
  for (unsigned long rad : {1ul, 2ul, 3ul, 5ul, 6ul, 10ul, 15ul, 30ul}) {
    std::vector<Cyclo> z = y;
    if (rad != 1) {
      const Cyclo w = Cyclo::sqrt_int(rad).inv();
      for (auto& zi : z) zi *= w;
    }
    try {
      for (auto& zi : z) zi = to_conductor(zi, 20);
    } catch (const std::invalid_argument&) {
      continue;
    } catch (const std::logic_error&) {
      continue;
    }
    make_primitive(z);
    Cyclo n2 = Cyclo::zero(1);
    for (const auto& zi : z) n2 += zi.norm2();
    if (!n2.is_rational()) continue;
    const Rational nr = n2.as_rational();
    if (nr <= 0 || nr.get_den() != 1 || !nr.get_num().fits_slong_p()) continue;
    const long n = nr.get_num().get_si();
    if (!best || n < best->second) best = std::make_pair(std::move(z), n);
  }
  if (!best) throw std::logic_error("no radical class gives integral coefficients");
  return *best;
}

}  // namespace

AlgebraVec AlgebraVec::unit(int element) {
  AlgebraVec v;
  v[element] = Cyclo::one();
  return v;
}

bool AlgebraVec::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

AlgebraVec AlgebraVec::operator+(const AlgebraVec& o) const {
  AlgebraVec r;
  for (std::size_t g = 0; g < c.size(); ++g) r.c[g] = c[g] + o.c[g];
  return r;
}

AlgebraVec AlgebraVec::operator-(const AlgebraVec& o) const {
  AlgebraVec r;
  for (std::size_t g = 0; g < c.size(); ++g) r.c[g] = c[g] - o.c[g];
  return r;
}

AlgebraVec AlgebraVec::scaled(const Cyclo& s) const {
  AlgebraVec r;
  for (std::size_t g = 0; g < c.size(); ++g)
    if (!c[g].is_zero()) r.c[g] = c[g] * s;
  return r;
}

AlgebraVec AlgebraVec::left_mul(int element) const {
  const GroupTable& g = group();
  AlgebraVec r;
  for (int j = 0; j < g.size(); ++j)
    if (!(*this)[j].is_zero()) r[g.mul(element, j)] = (*this)[j];
  return r;
}

AlgebraVec AlgebraVec::right_mul(int element) const {
  const GroupTable& g = group();
  AlgebraVec r;
  for (int j = 0; j < g.size(); ++j)
    if (!(*this)[j].is_zero()) r[g.mul(j, element)] = (*this)[j];
  return r;
}

AlgebraVec AlgebraVec::product(const AlgebraVec& o) const {
  const GroupTable& g = group();
  AlgebraVec r;
  for (int i = 0; i < g.size(); ++i) {
    if ((*this)[i].is_zero()) continue;
    for (int j = 0; j < g.size(); ++j) {
      if (o[j].is_zero()) continue;
      r[g.mul(i, j)] += (*this)[i] * o[j];
    }
  }
  return r;
}

Cyclo AlgebraVec::inner(const AlgebraVec& o) const {
  Cyclo r = Cyclo::zero(1);
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (c[g].is_zero() || o.c[g].is_zero()) continue;
    r += c[g].conj() * o.c[g];
  }
  return r;
}

Rational AlgebraVec::norm2() const {
  const Cyclo r = inner(*this);
  if (!r.is_rational()) throw std::logic_error("squared norm is not rational");
  return r.as_rational();
}

bool AlgebraVec::operator==(const AlgebraVec& o) const {
  for (std::size_t g = 0; g < c.size(); ++g)
    if (c[g] != o.c[g]) return false;
  return true;
}

AlgebraVec projector(long two_mu) {
  const GroupTable& g = group();
  AlgebraVec v;
  const Cyclo par = consts::eta_pow(-5 * two_mu);
  const Rational tenth(1, 10);
  int t0a = g.idx_e;
  for (int a = 0; a < 5; ++a) {
    const Cyclo w = consts::eta_pow(-two_mu * a).scaled(tenth);
    v[t0a] += w;
    v[g.mul(g.idx_ep, t0a)] += w * par;
    t0a = g.mul(t0a, g.idx_t0);
  }
  return v;
}

std::array<bool, 4> phi_available(long two_mu, long two_nu) {
  check_parity(two_mu, two_nu);
  return {(two_mu - two_nu) % 10 == 0, (two_mu + two_nu) % 10 == 0, true, true};
}

AlgebraVec phi_basis(int i, long two_mu, long two_nu) {
  if (i < 1 || i > 4) throw std::invalid_argument("family index must be 1..4");
  const auto avail = phi_available(two_mu, two_nu);
  if (!avail[static_cast<std::size_t>(i - 1)])
    throw std::invalid_argument(i == 1 ? "family 1 needs nu = mu (mod 5)"
                                       : "family 2 needs nu = -mu (mod 5)");
  return cached_phi(i, two_mu, two_nu);
}

const AlgebraVec& class_operator() {
  static const AlgebraVec w = [] {
    const GroupTable& g = group();
    AlgebraVec v;
    for (int e : g.classes[static_cast<std::size_t>(g.class_of[static_cast<std::size_t>(g.idx_t0)])])
      v[e] = Cyclo::one();
    return v;
  }();
  return w;
}

MatN class_operator_matrix(long two_mu, long two_nu) {
  const auto avail = phi_available(two_mu, two_nu);
  std::vector<const AlgebraVec*> phis;
  for (int i = 1; i <= 4; ++i)
    if (avail[static_cast<std::size_t>(i - 1)]) phis.push_back(&cached_phi(i, two_mu, two_nu));
  const int k = static_cast<int>(phis.size());
  MatN m = MatN::zero(k);
  for (int i = 0; i < k; ++i) {
    const AlgebraVec w = class_operator().product(*phis[static_cast<std::size_t>(i)]);
    AlgebraVec resid = w;
    for (int j = 0; j < k; ++j) {
      m.at(j, i) = phis[static_cast<std::size_t>(j)]->inner(w);
      resid = resid - phis[static_cast<std::size_t>(j)]->scaled(m.at(j, i));
    }
    if (!resid.is_zero())
      throw std::logic_error("class operator leaves the family span");
  }
  return m;
}

namespace {

std::vector<IrreducibleBasis> build_family(IrrepName g) {
  const GroupTable& tbl = group();
  const IrrepSpec& spec = irrep(g);
  const std::vector<int>& rows = spec.rows;
  const int d = spec.dim;
  const Cyclo alpha = class_operator_eigenvalue(g);
  const IrrepGenerators gens = reference_generators(g);

  const auto members_of = [&](int pc) {
    std::vector<int> r;
    for (int i = 0; i < d; ++i)
      if (pclass(rows[static_cast<std::size_t>(i)]) == pc) r.push_back(i);
    return r;
  };

  // one block per residue pair; holds the family vectors and the
  // eigenspace of the class operator at this representation's eigenvalue
  std::map<std::pair<int, int>, Block> blocks;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      const long tm = rows[static_cast<std::size_t>(r)];
      const long tn = rows[static_cast<std::size_t>(c)];
      const std::pair<int, int> key{pclass(tm), pclass(tn)};
      if (blocks.count(key)) continue;
      Block b;
      const auto avail = phi_available(tm, tn);
      for (int i = 1; i <= 4; ++i)
        if (avail[static_cast<std::size_t>(i - 1)]) {
          b.fam.push_back(i);
          b.phi.push_back(cached_phi(i, tm, tn));
        }
      MatN m = class_operator_matrix(tm, tn);
      for (int k = 0; k < m.n; ++k) m.at(k, k) -= alpha;
      b.nullb = nullspace(m);
      const std::size_t expect = members_of(key.first).size() * members_of(key.second).size();
      if (b.nullb.size() != expect)
        throw std::logic_error("eigenspace dimension differs from the row multiplicity");
      blocks.emplace(key, std::move(b));
    }
  const auto blk = [&](int r, int c) -> Block& {
    return blocks.at({pclass(rows[static_cast<std::size_t>(r)]),
                      pclass(rows[static_cast<std::size_t>(c)])});
  };

  std::vector<std::optional<std::vector<Cyclo>>> sol(static_cast<std::size_t>(d * d));
  std::vector<std::optional<AlgebraVec>> vecs(static_cast<std::size_t>(d * d));
  const auto install = [&](int cell, std::vector<Cyclo> y) {
    vecs[static_cast<std::size_t>(cell)] = from_coords(blk(cell / d, cell % d), y);
    if (vecs[static_cast<std::size_t>(cell)]->is_zero())
      throw std::logic_error("a basis cell collapsed to zero");
    sol[static_cast<std::size_t>(cell)] = std::move(y);
  };

  // seed: the first cell whose residue pair determines it up to scale
  int seed = -1;
  for (int cell = 0; cell < d * d && seed < 0; ++cell)
    if (members_of(pclass(rows[static_cast<std::size_t>(cell / d)])).size() == 1 &&
        members_of(pclass(rows[static_cast<std::size_t>(cell % d)])).size() == 1)
      seed = cell;
  if (seed < 0) throw std::logic_error("no cell is pinned by its residues alone");
  install(seed, blk(seed / d, seed % d).nullb[0]);

  // Propagate along the two-sided transformation law of the two-fold
  // generator; cells in a merged residue class are pinned jointly.
  const auto solve_group = [&](bool left_side, int fixed, int pc) -> bool {
    const std::vector<int> members = members_of(pc);
    for (int m : members)
      if (sol[static_cast<std::size_t>(left_side ? m * d + fixed : fixed * d + m)]) return false;
    std::vector<int> sources;
    for (int s = 0; s < d; ++s)
      if (sol[static_cast<std::size_t>(left_side ? s * d + fixed : fixed * d + s)])
        sources.push_back(s);
    Block& b = left_side ? blk(members[0], fixed) : blk(fixed, members[0]);
    const int bd = static_cast<int>(b.phi.size());
    const int per = static_cast<int>(b.nullb.size());
    const int nunk = static_cast<int>(members.size()) * per;
    if (static_cast<int>(sources.size()) * bd < nunk) return false;
    std::vector<std::vector<Cyclo>> aug;
    for (int s : sources) {
      const int scell = left_side ? s * d + fixed : fixed * d + s;
      const AlgebraVec lhs = left_side
                                 ? vecs[static_cast<std::size_t>(scell)]->left_mul(tbl.idx_s1)
                                 : vecs[static_cast<std::size_t>(scell)]->right_mul(tbl.idx_s1);
      const std::vector<Cyclo> proj = coords_in(b, lhs);
      for (int k = 0; k < bd; ++k) {
        std::vector<Cyclo> row;
        row.reserve(static_cast<std::size_t>(nunk) + 1);
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
          const Cyclo dcoef = left_side ? gens.s1.at(members[mi], s) : gens.s1.at(s, members[mi]);
          for (int t = 0; t < per; ++t)
            row.push_back(dcoef * b.nullb[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)]);
        }
        row.push_back(proj[static_cast<std::size_t>(k)]);
        aug.push_back(std::move(row));
      }
    }
    std::vector<Cyclo> x;
    try {
      x = solve_unique(std::move(aug), nunk);
    } catch (const std::logic_error&) {
      return false;  // not enough independent sources yet
    }
    for (std::size_t mi = 0; mi < members.size(); ++mi) {
      std::vector<Cyclo> y(static_cast<std::size_t>(bd), Cyclo::zero(1));
      for (int t = 0; t < per; ++t) {
        const Cyclo& xv = x[mi * static_cast<std::size_t>(per) + static_cast<std::size_t>(t)];
        if (xv.is_zero()) continue;
        for (int k = 0; k < bd; ++k)
          y[static_cast<std::size_t>(k)] +=
              xv * b.nullb[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
      }
      install(left_side ? members[mi] * d + fixed : fixed * d + members[mi], std::move(y));
    }
    return true;
  };

  int remaining = d * d - 1;
  while (remaining > 0) {
    bool progress = false;
    for (int side = 0; side < 2; ++side)
      for (int fixed = 0; fixed < d; ++fixed) {
        std::vector<int> seen;
        for (int r = 0; r < d; ++r) {
          const int pc = pclass(rows[static_cast<std::size_t>(r)]);
          if (std::find(seen.begin(), seen.end(), pc) != seen.end()) continue;
          seen.push_back(pc);
          if (solve_group(side == 0, fixed, pc)) {
            remaining -= static_cast<int>(members_of(pc).size());
            progress = true;
          }
        }
      }
    if (!progress)
      throw std::logic_error("transformation law did not pin the remaining cells");
  }

  // global phase: the anchor coefficient of the leading cell becomes its
  // own squared modulus, a positive real
  Block& lead = blk(0, 0);
  const int want = spec.double_valued ? 3 : 1;
  int slot = -1;
  for (std::size_t k = 0; k < lead.fam.size(); ++k)
    if (lead.fam[k] == want) slot = static_cast<int>(k);
  if (slot < 0) throw std::logic_error("leading cell lacks the anchor family");
  const Cyclo anchor = (*sol[0])[static_cast<std::size_t>(slot)];
  if (anchor.is_zero()) throw std::logic_error("anchor coefficient vanished");
  const Cyclo lam = anchor.conj();
  for (auto& y : sol)
    for (auto& yi : *y) yi *= lam;

  // per-cell minimal integral coefficients, then the unit vector
  std::vector<IrreducibleBasis> fam;
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      Block& b = blk(r, c);
      auto [y, n] = minimal_integral(*sol[static_cast<std::size_t>(r * d + c)]);
      IrreducibleBasis ib;
      ib.gamma = g;
      ib.two_mu = rows[static_cast<std::size_t>(r)];
      ib.two_nu = rows[static_cast<std::size_t>(c)];
      ib.normsq = n;
      ib.available = phi_available(ib.two_mu, ib.two_nu);
      for (std::size_t k = 0; k < b.fam.size(); ++k)
        ib.coeffs[static_cast<std::size_t>(b.fam[k] - 1)] = y[k];
      const Cyclo rn = Cyclo::sqrt_int(static_cast<unsigned long>(n)).inv();
      ib.vector = from_coords(b, y).scaled(rn);
      if (ib.vector.norm2() != Rational(1))
        throw std::logic_error("basis cell did not normalize to one");
      fam.push_back(std::move(ib));
    }

  // the minimal forms must still obey both laws with the pinned matrices
  const std::array<std::pair<int, const MatN*>, 3> checks = {
      std::make_pair(tbl.idx_t0, &gens.t0), std::make_pair(tbl.idx_s1, &gens.s1),
      std::make_pair(tbl.idx_ep, &gens.ep)};
  for (const auto& [ei, dm] : checks)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        const AlgebraVec& v = fam[static_cast<std::size_t>(r * d + c)].vector;
        AlgebraVec acc;
        for (int m = 0; m < d; ++m)
          acc = acc + fam[static_cast<std::size_t>(m * d + c)].vector.scaled(dm->at(m, r));
        if (v.left_mul(ei) != acc)
          throw std::logic_error("left transformation law failed");
        acc = AlgebraVec();
        for (int m = 0; m < d; ++m)
          acc = acc + fam[static_cast<std::size_t>(r * d + m)].vector.scaled(dm->at(c, m));
        if (v.right_mul(ei) != acc)
          throw std::logic_error("right transformation law failed");
      }

  return fam;
}

}  // namespace

const std::vector<IrreducibleBasis>& irreducible_family(IrrepName g) {
  static std::mutex guard;
  static std::map<IrrepName, std::vector<IrreducibleBasis>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, build_family(g)).first;
  return it->second;
}

const IrreducibleBasis& irreducible_basis(IrrepName g, long two_mu, long two_nu) {
  for (const auto& b : irreducible_family(g))
    if (b.two_mu == two_mu && b.two_nu == two_nu) return b;
  throw std::invalid_argument("labels are not rows of the representation");
}

AlgebraVec canonical_basis(IrrepName g, long two_mu, long two_nu) {
  const IrrepSpec& spec = irrep(g);
  int r = -1, c = -1;
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    if (spec.rows[i] == two_mu) r = static_cast<int>(i);
    if (spec.rows[i] == two_nu) c = static_cast<int>(i);
  }
  if (r < 0 || c < 0)
    throw std::invalid_argument("labels are not rows of the representation");
  Rational w(spec.dim, 120);
  w.canonicalize();
  AlgebraVec v;
  for (int e = 0; e < group().size(); ++e)
    v[e] = spec.at(e).at(r, c).conj().scaled(w);
  return v;
}

Cyclo IhVector::inner(const IhVector& o) const {
  Cyclo r = Cyclo::zero(1);
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (c[g].is_zero() || o.c[g].is_zero()) continue;
    r += c[g].conj() * o.c[g];
  }
  return r;
}

Rational IhVector::norm2() const {
  const Cyclo r = inner(*this);
  if (!r.is_rational()) throw std::logic_error("squared norm is not rational");
  return r.as_rational();
}

IhVector IhVector::parity_flipped() const {
  IhVector r;
  for (std::size_t g = 0; g < 120; ++g) {
    r.c[g] = c[g + 120];
    r.c[g + 120] = c[g];
  }
  return r;
}

bool IhVector::operator==(const IhVector& o) const {
  for (std::size_t g = 0; g < c.size(); ++g)
    if (c[g] != o.c[g]) return false;
  return true;
}

IhVector to_Ih(const IrreducibleBasis& b, char parity) {
  if (parity != 'g' && parity != 'u')
    throw std::invalid_argument("parity must be 'g' or 'u'");
  const Cyclo h = Cyclo::sqrt_int(2).inv();
  IhVector v;
  for (std::size_t g = 0; g < 120; ++g) {
    const Cyclo x = b.vector.c[g] * h;
    v.c[g] = x;
    v.c[g + 120] = (parity == 'g') ? x : -x;
  }
  return v;
}

}  // namespace icosa
