#include "icosa/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "icosa/groupspace.hpp"
#include "icosa/notation.hpp"

#ifndef ICOSA_TABLE1_PATH
#define ICOSA_TABLE1_PATH ""
#endif

namespace icosa {

namespace {

using Clock = std::chrono::steady_clock;

RadSum rt(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return RadSum::sqrt_rational(r);
}

RadSum irt(long num, long den = 1) { return RadSum(consts::im()) * rt(num, den); }

template <typename F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult r;
  r.name = name;
  const auto start = Clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

// ---- integer fast path for the all-pairs representation checks ----
//
// Matrix entries of one representation live in a single cyclotomic field.
// Over a common denominator the numerator vectors are small integers, so
// products reduce to int64 convolutions plus a precomputed power-reduction
// table. Bounds are checked at build time; on overflow risk this throws
// rather than degrade.

struct FastRep {
  int dim = 0;
  long n = 1;    // conductor
  long m = 1;    // degree
  long long den = 1;
  // mats[e][(r*dim+c)*m + k], adj likewise for the conjugate transpose
  std::vector<std::vector<long long>> mats, adj;
  std::vector<std::vector<long long>> red;  // zeta^(m+i) reduced, i in [0, m-1)
};

long long to_ll(const Int& v, const char* what) {
  if (!v.fits_slong_p()) fail(std::string("integer overflow packing ") + what);
  return v.get_si();
}

FastRep pack_rep(const IrrepSpec& spec) {
  FastRep f;
  f.dim = spec.dim;
  f.n = spec.conductor;
  f.m = CycloCtx::get(f.n).deg;
  const GroupTable& g = group();

  std::vector<std::vector<Cyclo>> plain(static_cast<size_t>(g.size()));
  std::vector<std::vector<Cyclo>> conj(static_cast<size_t>(g.size()));
  Int den = 1;
  for (int e = 0; e < g.size(); ++e) {
    for (int r = 0; r < f.dim; ++r)
      for (int c = 0; c < f.dim; ++c) {
        Cyclo x = to_conductor(spec.at(e).at(r, c), f.n);
        Cyclo xc = to_conductor(spec.at(e).at(c, r).conj(), f.n);
        den = lcm(den, x.coeff_den());
        den = lcm(den, xc.coeff_den());
        plain[static_cast<size_t>(e)].push_back(std::move(x));
        conj[static_cast<size_t>(e)].push_back(std::move(xc));
      }
  }
  f.den = to_ll(den, "denominator");

  long long maxnum = 1;
  auto pack = [&](const std::vector<Cyclo>& src) {
    std::vector<long long> out(src.size() * static_cast<size_t>(f.m), 0);
    for (size_t i = 0; i < src.size(); ++i) {
      const Int scale = den / src[i].coeff_den();
      const auto& num = src[i].coeff_num();
      for (size_t k = 0; k < num.size(); ++k) {
        out[i * static_cast<size_t>(f.m) + k] = to_ll(num[k] * scale, "numerator");
        maxnum = std::max(maxnum, std::abs(out[i * static_cast<size_t>(f.m) + k]));
      }
    }
    return out;
  };
  for (int e = 0; e < g.size(); ++e) {
    f.mats.push_back(pack(plain[static_cast<size_t>(e)]));
    f.adj.push_back(pack(conj[static_cast<size_t>(e)]));
  }

  // power-reduction rows: zeta^(m+i) as integer combinations of the basis
  const auto& ctx = CycloCtx::get(f.n);
  std::vector<Int> cur(static_cast<size_t>(f.m), 0);
  long long maxred = 1;
  // strip of zeta^m = -phi_poly[0..m-1] (monic modulus)
  for (long k = 0; k < f.m; ++k) cur[static_cast<size_t>(k)] = -ctx.phi_poly[static_cast<size_t>(k)];
  for (long i = 0; i + 1 < f.m; ++i) {
    std::vector<long long> row(static_cast<size_t>(f.m));
    for (long k = 0; k < f.m; ++k) {
      row[static_cast<size_t>(k)] = to_ll(cur[static_cast<size_t>(k)], "reduction");
      maxred = std::max(maxred, std::abs(row[static_cast<size_t>(k)]));
    }
    f.red.push_back(std::move(row));
    // multiply by zeta
    Int top = cur[static_cast<size_t>(f.m - 1)];
    for (long k = f.m - 1; k > 0; --k) cur[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)];
    cur[0] = 0;
    for (long k = 0; k < f.m; ++k) cur[static_cast<size_t>(k)] -= top * ctx.phi_poly[static_cast<size_t>(k)];
  }

  // worst case: 120-element sums of reduced products
  const long double bound = 120.0L * f.m * f.m * static_cast<long double>(maxnum) *
                            static_cast<long double>(maxnum) *
                            (1.0L + static_cast<long double>(maxred) * f.m);
  if (bound > 4.0e18L) fail("int64 bound exceeded in the representation fast path");
  return f;
}

// c (length 2m-1) reduced in place to length m
void reduce_poly(const FastRep& f, std::vector<long long>& c) {
  for (long k = 2 * f.m - 2; k >= f.m; --k) {
    const long long v = c[static_cast<size_t>(k)];
    if (v == 0) continue;
    c[static_cast<size_t>(k)] = 0;
    const auto& row = f.red[static_cast<size_t>(k - f.m)];
    for (long j = 0; j < f.m; ++j) c[static_cast<size_t>(j)] += v * row[static_cast<size_t>(j)];
  }
  c.resize(static_cast<size_t>(f.m));
}

const long long* entry(const FastRep& f, const std::vector<long long>& mat, int r, int c) {
  return mat.data() + (static_cast<size_t>(r) * f.dim + c) * static_cast<size_t>(f.m);
}

std::string rep_property_suite() {
  const GroupTable& g = group();
  for (IrrepName name : kIrrepOrder) {
    const IrrepSpec& spec = irrep(name);
    const FastRep f = pack_rep(spec);
    const long m = f.m;
    std::vector<long long> acc(static_cast<size_t>(2 * m - 1));
    std::vector<long long> want(static_cast<size_t>(m));

    // homomorphism over all pairs: entries of D(a)D(b) at denominator den^2
    // must equal den * entries of D(ab)
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b) {
        const int ab = g.mul(a, b);
        for (int r = 0; r < f.dim; ++r)
          for (int c = 0; c < f.dim; ++c) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int k = 0; k < f.dim; ++k) {
              const long long* x = entry(f, f.mats[static_cast<size_t>(a)], r, k);
              const long long* y = entry(f, f.mats[static_cast<size_t>(b)], k, c);
              for (long i = 0; i < m; ++i) {
                if (x[i] == 0) continue;
                for (long j = 0; j < m; ++j) acc[static_cast<size_t>(i + j)] += x[i] * y[j];
              }
            }
            reduce_poly(f, acc);
            const long long* z = entry(f, f.mats[static_cast<size_t>(ab)], r, c);
            for (long i = 0; i < m; ++i)
              if (acc[static_cast<size_t>(i)] != z[i] * f.den)
                fail("homomorphism fails for " + irrep_ascii(name) + " at pair (" +
                     std::to_string(a) + ", " + std::to_string(b) + ")");
            acc.resize(static_cast<size_t>(2 * m - 1));
          }
      }

    // unitarity: D(e) D(e)^dagger = identity
    for (int e = 0; e < g.size(); ++e)
      for (int r = 0; r < f.dim; ++r)
        for (int c = 0; c < f.dim; ++c) {
          std::fill(acc.begin(), acc.end(), 0);
          for (int k = 0; k < f.dim; ++k) {
            const long long* x = entry(f, f.mats[static_cast<size_t>(e)], r, k);
            const long long* y = entry(f, f.adj[static_cast<size_t>(e)], k, c);
            for (long i = 0; i < m; ++i) {
              if (x[i] == 0) continue;
              for (long j = 0; j < m; ++j) acc[static_cast<size_t>(i + j)] += x[i] * y[j];
            }
          }
          reduce_poly(f, acc);
          const long long target = r == c ? f.den * f.den : 0;
          if (acc[0] != target) fail("unitarity fails for " + irrep_ascii(name));
          for (long i = 1; i < m; ++i)
            if (acc[static_cast<size_t>(i)] != 0) fail("unitarity fails for " + irrep_ascii(name));
          acc.resize(static_cast<size_t>(2 * m - 1));
        }

    // great orthogonality: sum_e D_{r1c1}(e) conj(D_{r2c2}(e)) =
    // (|G|/dim) delta delta
    for (int r1 = 0; r1 < f.dim; ++r1)
      for (int c1 = 0; c1 < f.dim; ++c1)
        for (int r2 = 0; r2 < f.dim; ++r2)
          for (int c2 = 0; c2 < f.dim; ++c2) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int e = 0; e < g.size(); ++e) {
              const long long* x = entry(f, f.mats[static_cast<size_t>(e)], r1, c1);
              // adj holds conj transposed: conj(D_{r2c2}) = adj_{c2r2}
              const long long* y = entry(f, f.adj[static_cast<size_t>(e)], c2, r2);
              for (long i = 0; i < m; ++i) {
                if (x[i] == 0) continue;
                for (long j = 0; j < m; ++j) acc[static_cast<size_t>(i + j)] += x[i] * y[j];
              }
            }
            reduce_poly(f, acc);
            const bool diag = r1 == r2 && c1 == c2;
            const long long target = diag ? (120 / f.dim) * f.den * f.den : 0;
            if (acc[0] != target) fail("orthogonality fails for " + irrep_ascii(name));
            for (long i = 1; i < m; ++i)
              if (acc[static_cast<size_t>(i)] != 0)
                fail("orthogonality fails for " + irrep_ascii(name));
            acc.resize(static_cast<size_t>(2 * m - 1));
          }
  }
  return "14400 pairs, unitarity and orthogonality, all nine representations";
}

struct TableRow {
  IrrepName gamma;
  long two_mu, two_nu;
  std::array<Cyclo, 4> c;
  long normsq;
};

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open the coefficient table fixture at " + path);
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string name, t1, t2, t3, t4;
    TableRow r;
    if (!(is >> name >> r.two_mu >> r.two_nu >> t1 >> t2 >> t3 >> t4 >> r.normsq))
      fail("malformed fixture line: " + line);
    auto g = irrep_from_string(name);
    if (!g) fail("unknown representation in fixture: " + name);
    r.gamma = *g;
    r.c = {parse_coeff_token(t1), parse_coeff_token(t2), parse_coeff_token(t3),
           parse_coeff_token(t4)};
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string check_group_structure() {
  const GroupTable& g = group();
  if (g.size() != 120) fail("group order is " + std::to_string(g.size()));
  if (g.classes.size() != 9)
    fail("class count is " + std::to_string(g.classes.size()));
  std::vector<size_t> sizes;
  for (const auto& cl : g.classes) sizes.push_back(cl.size());
  std::sort(sizes.begin(), sizes.end());
  const std::vector<size_t> want = {1, 1, 12, 12, 12, 12, 20, 20, 30};
  if (sizes != want) fail("class sizes differ from {1,1,12,12,12,12,20,20,30}");

  // brute-force conjugacy against the stored partition
  for (int x = 0; x < g.size(); ++x)
    for (int h = 0; h < g.size(); ++h) {
      const int y = g.mul(g.mul(h, x), g.inverse[static_cast<size_t>(h)]);
      if (g.class_of[static_cast<size_t>(y)] != g.class_of[static_cast<size_t>(x)])
        fail("conjugacy partition is wrong at element " + std::to_string(x));
    }
  if (g.classes[static_cast<size_t>(g.class_of[static_cast<size_t>(g.idx_ep)])].size() != 1)
    fail("the 2pi rotation is not central");
  return "order 120, nine classes, brute-force conjugacy agrees";
}

std::string check_generator_level() {
  const GroupTable& g = group();
  const std::array<int, 3> gens = {g.idx_t0, g.idx_s1, g.idx_ep};
  for (IrrepName name : kIrrepOrder) {
    const IrrepSpec& spec = irrep(name);
    const MatN id = MatN::identity(spec.dim);
    for (int e : gens)
      if (spec.at(e) * spec.at(e).adjoint() != id)
        fail("generator image is not unitary in " + irrep_ascii(name));
    for (int a : gens)
      for (int b : gens)
        if (spec.at(a) * spec.at(b) != spec.at(g.mul(a, b)))
          fail("generator products misrepresent in " + irrep_ascii(name));
    const MatN& ep = spec.at(g.idx_ep);
    if (ep != (spec.double_valued ? -id : id))
      fail("2pi image disagrees with the valuedness of " + irrep_ascii(name));
  }
  return "unitary generator images, products, and 2pi signs, all representations";
}

std::string check_class_operator_scalars() {
  using consts::p;
  using consts::p_inv;
  const Cyclo four = Cyclo::from_int(4), six = Cyclo::from_int(6);
  const std::array<Cyclo, 9> want = {
      Cyclo::from_int(12), four * p_inv(),      -(four * p()),
      Cyclo::from_int(-3), Cyclo::zero(1),      six * p_inv(),
      -(six * p()),        Cyclo::from_int(3),  Cyclo::from_int(-2)};
  const AlgebraVec& w = class_operator();
  for (size_t gi = 0; gi < kIrrepOrder.size(); ++gi) {
    const IrrepName name = kIrrepOrder[gi];
    if (class_operator_eigenvalue(name) != want[gi])
      fail("catalogued scalar differs for " + irrep_ascii(name));
    const IrreducibleBasis& b = irreducible_family(name).front();
    if (w.product(b.vector) != b.vector.scaled(want[gi]))
      fail("class operator does not act as the scalar on " + irrep_ascii(name));
  }
  return "scalars {12, 4/p, -4p, -3, 0, 6/p, -6p, 3, -2} act exactly";
}

std::string check_coefficient_table() {
  const auto rows = load_table(table_fixture_path());
  if (rows.size() != 120) fail("fixture holds " + std::to_string(rows.size()) + " rows");
  for (const TableRow& r : rows) {
    const IrreducibleBasis& b = irreducible_basis(r.gamma, r.two_mu, r.two_nu);
    const std::string cell = "cell (" + irrep_ascii(r.gamma) + ", " +
                             std::to_string(r.two_mu) + ", " +
                             std::to_string(r.two_nu) + ")";
    for (int i = 0; i < 4; ++i)
      if (b.coeffs[static_cast<size_t>(i)] != r.c[static_cast<size_t>(i)])
        fail(cell + ": c" + std::to_string(i + 1) + " mismatch");
    if (b.normsq != r.normsq) fail(cell + ": norm constant mismatch");
  }
  return "all 120 table cells regenerate exactly";
}

std::string check_closed_forms() {
  const GenLabel gens[] = {GenLabel::T0, GenLabel::Ep, GenLabel::S5,
                           GenLabel::S10, GenLabel::S11};
  for (long twoj = 0; twoj <= 7; ++twoj)
    for (GenLabel which : gens) {
      const int e = generator_element(which);
      for (long twomu = -twoj; twomu <= twoj; twomu += 2)
        if (act(e, SpinState::basis(twoj, twomu)) !=
            generator_action_closed_form(which, twoj, twomu))
          fail("closed form differs from the matrix action at 2j = " +
               std::to_string(twoj));
    }
  return "five generators, every basis state with 2j <= 7";
}

std::string check_subduction() {
  const std::vector<std::pair<long, IrrepName>> pairs = {
      {0, IrrepName::A},   {2, IrrepName::T1}, {4, IrrepName::H},
      {1, IrrepName::E1p}, {3, IrrepName::Gp}, {5, IrrepName::Ip}};
  const GroupTable& g = group();
  for (auto [twoj, name] : pairs) {
    const IrrepSpec& spec = irrep(name);
    for (int e = 0; e < g.size(); ++e) {
      const auto d = subduced_Dj(twoj, e);
      const MatN& m = spec.at(e);
      for (int r = 0; r < spec.dim; ++r)
        for (int c = 0; c < spec.dim; ++c)
          if (d[static_cast<size_t>(r)][static_cast<size_t>(c)].to_cyclo() != m.at(r, c))
            fail("spin matrix does not restrict to " + irrep_ascii(name) +
                 " at element " + std::to_string(e));
    }
  }
  return "six spin/representation pairs, all 120 elements";
}

std::string check_catalogue() {
  for (const CataloguedProjection& e : catalogued_projections())
    if (combine(e.gamma, e.two_mu, e.two_lambda, e.twoj, e.two_rho) != e.expected)
      fail("projection differs at (" + irrep_ascii(e.gamma) + ", " +
           std::to_string(e.two_mu) + ", " + std::to_string(e.two_lambda) +
           ", 2j=" + std::to_string(e.twoj) + ")");
  return std::to_string(catalogued_projections().size()) +
         " catalogued projections hold exactly";
}

std::string check_oracle() {
  for (const CataloguedProjection& e : catalogued_projections())
    if (!combine_equals_application_oracle(e.gamma, e.two_mu, e.two_lambda,
                                           e.twoj, e.two_rho))
      fail("oracle fails at a catalogued tuple (" + irrep_ascii(e.gamma) + ")");
  std::mt19937 rng(20260819);
  int done = 0;
  while (done < 100) {
    const IrrepName g = kIrrepOrder[rng() % kIrrepOrder.size()];
    const IrrepSpec& spec = irrep(g);
    const long twoj = static_cast<long>(rng() % 12);
    if (((twoj ^ spec.rows[0]) & 1) != 0) continue;
    const long mu = spec.rows[rng() % spec.rows.size()];
    const long lam = spec.rows[rng() % spec.rows.size()];
    const long rho = twoj - 2 * static_cast<long>(rng() % (twoj + 1));
    if (!combine_equals_application_oracle(g, mu, lam, twoj, rho))
      fail("oracle fails at (" + irrep_ascii(g) + ", " + std::to_string(mu) +
           ", " + std::to_string(lam) + ", 2j=" + std::to_string(twoj) +
           ", " + std::to_string(rho) + ")");
    ++done;
  }
  return "catalogued tuples plus 100 randomized tuples with 2j <= 11";
}

std::string check_label_identities() {
  const GroupTable& g = group();
  auto t0pow = [&](int a) {
    int e = g.idx_e;
    for (int i = 0; i < a; ++i) e = g.mul(e, g.idx_t0);
    return e;
  };
  for (const ProductIdentity& id : product_identities()) {
    const int center = g.index_of(id.center);
    const int target = g.index_of(id.label);
    if (center < 0 || target < 0) fail(std::string("unknown label ") + id.label);
    const int got = g.mul(t0pow(id.a), g.mul(center, t0pow(id.b)));
    if (got != target && got != g.mul(g.idx_ep, target))
      fail(std::string("product identity fails: T0^") + std::to_string(id.a) +
           " " + id.center + " T0^" + std::to_string(id.b) + " != " + id.label);
  }
  return std::to_string(product_identities().size()) +
         " double-coset product identities hold up to the 2pi factor";
}

}  // namespace

const std::vector<CataloguedProjection>& catalogued_projections() {
  static const std::vector<CataloguedProjection> v = [] {
    std::vector<CataloguedProjection> c;
    auto state = [](long twoj, std::vector<std::pair<long, RadSum>> amps) {
      SpinState s;
      s.twoj = twoj;
      for (const auto& [nu, a] : amps) s.add(nu, a);
      return s;
    };
    auto diag = [&](IrrepName g, long lam, long tj, const RadSum& a) {
      for (int mu : irrep(g).rows)
        c.push_back({g, mu, lam, tj, tj, state(tj, {{mu, a}})});
    };
    diag(IrrepName::A, 0, 0, rt(120));
    diag(IrrepName::T1, 2, 2, rt(40));
    diag(IrrepName::H, 4, 4, rt(24));
    diag(IrrepName::E1p, 1, 1, -irt(60));
    diag(IrrepName::Gp, 3, 3, irt(30));
    diag(IrrepName::Ip, 5, 5, -irt(20));
    using I = IrrepName;
    c.push_back({I::T2, 4, -4, 6, 6, state(6, {{4, -rt(48, 5)}, {-6, -rt(32, 5)}})});
    c.push_back({I::T2, 0, -4, 6, 6, state(6, {{0, RadSum(Rational(-4))}})});
    c.push_back({I::T2, -4, -4, 6, 6, state(6, {{6, rt(32, 5)}, {-4, -rt(48, 5)}})});
    c.push_back({I::G, 4, -4, 6, 6, state(6, {{4, -rt(36, 5)}, {-6, rt(54, 5)}})});
    c.push_back({I::G, 2, -4, 6, 6, state(6, {{2, rt(18)}})});
    c.push_back({I::G, -2, -4, 6, 6, state(6, {{-2, rt(18)}})});
    c.push_back({I::G, -4, -4, 6, 6, state(6, {{6, rt(54, 5)}, {-4, rt(36, 5)}})});
    c.push_back({I::E2p, 3, -3, 7, 7, state(7, {{3, irt(63, 5)}, {-7, -irt(27, 5)}})});
    c.push_back({I::E2p, -3, -3, 7, 7, state(7, {{7, -irt(27, 5)}, {-3, -irt(63, 5)}})});
    c.push_back({I::Ip, 5, -3, 7, 7, state(7, {{5, irt(7, 25)}, {-5, irt(343, 25)}})});
    c.push_back({I::Ip, 3, -3, 7, 7, state(7, {{3, -irt(21, 5)}, {-7, -irt(49, 5)}})});
    c.push_back({I::Ip, 1, -3, 7, 7, state(7, {{1, irt(14)}})});
    c.push_back({I::Ip, -1, -3, 7, 7, state(7, {{-1, -irt(14)}})});
    c.push_back({I::Ip, -3, -3, 7, 7, state(7, {{7, -irt(49, 5)}, {-3, irt(21, 5)}})});
    c.push_back({I::Ip, -5, -3, 7, 7, state(7, {{5, irt(343, 25)}, {-5, -irt(7, 25)}})});
    return c;
  }();
  return v;
}

const std::vector<ProductIdentity>& product_identities() {
  static const std::vector<ProductIdentity> v = {
      {0, 0, "S5", "S5"},    {1, 0, "S5", "R5^2"},  {2, 0, "S5", "T1^4"},
      {3, 0, "S5", "T4"},    {4, 0, "S5", "R4"},    {4, 1, "S5", "S4"},
      {0, 1, "S5", "R4^2"},  {1, 1, "S5", "T5^4"},  {2, 1, "S5", "T3"},
      {3, 1, "S5", "R3"},    {3, 2, "S5", "S3"},    {4, 2, "S5", "R3^2"},
      {0, 2, "S5", "T4^4"},  {1, 2, "S5", "T2"},    {2, 2, "S5", "R2"},
      {2, 3, "S5", "S2"},    {3, 3, "S5", "R2^2"},  {4, 3, "S5", "T3^4"},
      {0, 3, "S5", "T1"},    {1, 3, "S5", "R1"},    {1, 4, "S5", "S1"},
      {2, 4, "S5", "R1^2"},  {3, 4, "S5", "T2^4"},  {4, 4, "S5", "T5"},
      {0, 4, "S5", "R5"},
      {0, 0, "S10", "S10"},  {1, 0, "S10", "T1^3"}, {2, 0, "S10", "R6^2"},
      {3, 0, "S10", "R9"},   {4, 0, "S10", "T5^2"}, {4, 1, "S10", "S9"},
      {0, 1, "S10", "T5^3"}, {1, 1, "S10", "R10^2"},{2, 1, "S10", "R8"},
      {3, 1, "S10", "T4^2"}, {3, 2, "S10", "S8"},   {4, 2, "S10", "T4^3"},
      {0, 2, "S10", "R9^2"}, {1, 2, "S10", "R7"},   {2, 2, "S10", "T3^2"},
      {2, 3, "S10", "S7"},   {3, 3, "S10", "T3^3"}, {4, 3, "S10", "R8^2"},
      {0, 3, "S10", "R6"},   {1, 3, "S10", "T2^2"}, {1, 4, "S10", "S6"},
      {2, 4, "S10", "T2^3"}, {3, 4, "S10", "R7^2"}, {4, 4, "S10", "R10"},
      {0, 4, "S10", "T1^2"},
      {1, 0, "S11", "S14"},  {2, 0, "S11", "S12"},  {3, 0, "S11", "S15"},
      {4, 0, "S11", "S13"}};
  return v;
}

std::string table_fixture_path() {
  if (const char* env = std::getenv("ICOSA_TABLE1")) return env;
  return ICOSA_TABLE1_PATH;
}

std::vector<CheckResult> verify_fast() {
  std::vector<CheckResult> out;
  out.push_back(run_check("group closure and classes", check_group_structure));
  out.push_back(run_check("generator images", check_generator_level));
  out.push_back(run_check("class operator scalars", check_class_operator_scalars));
  out.push_back(run_check("coefficient table", check_coefficient_table));
  return out;
}

std::vector<CheckResult> verify_full() {
  std::vector<CheckResult> out = verify_fast();
  out.push_back(run_check("representation properties", rep_property_suite));
  out.push_back(run_check("closed-form generator actions", check_closed_forms));
  out.push_back(run_check("spin subduction", check_subduction));
  out.push_back(run_check("projection catalogue", check_catalogue));
  out.push_back(run_check("application oracle", check_oracle));
  out.push_back(run_check("double-coset label identities", check_label_identities));
  return out;
}

}  // namespace icosa
