#include "icosa/cyclo.hpp"

#include <cstdio>  // before mpfr.h so mpfr_asprintf is declared

#include <mpfr.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace icosa {

long phi_euler(long n) {
  long result = n, m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Int>;  // coefficient vector, index = exponent

// Exact division of integer polynomials, divisor monic. Remainder must be 0.
Poly poly_div_exact(const Poly& a, const Poly& b) {
  Poly rem = a;
  long db = static_cast<long>(b.size()) - 1;
  long da = static_cast<long>(rem.size()) - 1;
  if (da < db) throw std::logic_error("poly_div_exact: degree underflow");
  Poly quot(da - db + 1, 0);
  for (long k = da - db; k >= 0; --k) {
    Int c = rem[k + db];
    if (c == 0) continue;
    quot[k] = c;
    for (long j = 0; j <= db; ++j) rem[k + j] -= c * b[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::mutex g_ctx_mutex;

const Poly& cyclotomic_poly(long n) {
  static std::map<long, Poly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // Ascending over divisors keeps every dependency already computed.
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || memo.count(d)) continue;
    Poly num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;  // x^d - 1
    Poly acc = num;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) acc = poly_div_exact(acc, memo.at(e));
    memo.emplace(d, std::move(acc));
  }
  return memo.at(n);
}

// Reduce an integer polynomial modulo the (monic) n-th cyclotomic
// polynomial, in place; shrinks to length phi(n).
void poly_mod_phi(Poly& a, const CycloCtx& ctx) {
  const Poly& phi = ctx.phi_poly;
  long deg = ctx.deg;
  long da = static_cast<long>(a.size()) - 1;
  for (long k = da - deg; k >= 0; --k) {
    Int c = a[k + deg];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j) a[k + j] -= c * phi[j];
  }
  a.resize(deg);
}

Int content_with(const std::vector<Int>& v, const Int& extra) {
  Int g = extra;
  for (const Int& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

int legendre_symbol(long a, long p) {
  // p odd prime; returns -1, 0, 1
  Int base = a % p;
  Int mod = p;
  Int r;
  mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(),
              static_cast<unsigned long>((p - 1) / 2), mod.get_mpz_t());
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

}  // namespace

const CycloCtx& CycloCtx::get(long n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  static std::map<long, std::unique_ptr<CycloCtx>> registry;
  auto it = registry.find(n);
  if (it == registry.end()) {
    auto ctx = std::make_unique<CycloCtx>();
    ctx->n = n;
    ctx->deg = phi_euler(n);
    ctx->phi_poly = cyclotomic_poly(n);
    it = registry.emplace(n, std::move(ctx)).first;
  }
  return *it->second;
}

Cyclo::Cyclo(long n, std::vector<Int> num, Int den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclo::normalize() {
  if (den_ == 0) throw std::logic_error("zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (Int& x : num_) x = -x;
  }
  bool all_zero = true;
  for (const Int& x : num_)
    if (x != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    den_ = 1;
    return;
  }
  Int g = content_with(num_, den_);
  if (g > 1) {
    den_ /= g;
    for (Int& x : num_) x /= g;
  }
}

Cyclo Cyclo::zero(long n) {
  const CycloCtx& ctx = CycloCtx::get(n);
  return Cyclo(n, std::vector<Int>(ctx.deg, 0), 1);
}

Cyclo Cyclo::one() { return from_int(1); }

Cyclo Cyclo::from_int(long v) {
  Cyclo c = zero(1);
  c.num_[0] = v;
  return c;
}

Cyclo Cyclo::from_rational(const Rational& r) {
  Cyclo c = zero(1);
  c.num_[0] = r.get_num();
  c.den_ = r.get_den();
  c.normalize();
  return c;
}

Cyclo Cyclo::zeta(long n, long k) {
  const CycloCtx& ctx = CycloCtx::get(n);
  k %= n;
  if (k < 0) k += n;
  Poly a(k + 1, 0);
  a[k] = 1;
  if (static_cast<long>(a.size()) > ctx.deg)
    poly_mod_phi(a, ctx);
  else
    a.resize(ctx.deg, 0);
  return Cyclo(n, std::move(a), 1);
}

bool Cyclo::is_zero() const {
  for (const Int& x : num_)
    if (x != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

Rational Cyclo::as_rational() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo c = *this;
  for (Int& x : c.num_) x = -x;
  return c;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  if (n_ != o.n_) {
    long m = lcm_long(n_, o.n_);
    return embedded(m) + o.embedded(m);
  }
  Int g = gcd(den_, o.den_);
  Int la = o.den_ / g, lb = den_ / g;
  std::vector<Int> num(num_.size());
  for (size_t k = 0; k < num.size(); ++k) num[k] = num_[k] * la + o.num_[k] * lb;
  return Cyclo(n_, std::move(num), den_ * la);
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (n_ != o.n_) {
    long m = lcm_long(n_, o.n_);
    return embedded(m) * o.embedded(m);
  }
  const CycloCtx& ctx = CycloCtx::get(n_);
  Poly prod(2 * ctx.deg - 1, 0);
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    for (size_t j = 0; j < o.num_.size(); ++j) {
      if (o.num_[j] == 0) continue;
      prod[i + j] += num_[i] * o.num_[j];
    }
  }
  poly_mod_phi(prod, ctx);
  return Cyclo(n_, std::move(prod), den_ * o.den_);
}

Cyclo Cyclo::scaled(const Rational& r) const {
  Cyclo c = *this;
  for (Int& x : c.num_) x *= r.get_num();
  c.den_ *= r.get_den();
  c.normalize();
  return c;
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // Extended Euclid over Q[x] against the cyclotomic polynomial.
  const CycloCtx& ctx = CycloCtx::get(n_);
  using QPoly = std::vector<Rational>;
  auto deg_of = [](const QPoly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
  };
  QPoly r0(ctx.phi_poly.size()), r1(num_.size());
  for (size_t i = 0; i < ctx.phi_poly.size(); ++i)
    r0[i] = Rational(ctx.phi_poly[i]);
  for (size_t i = 0; i < num_.size(); ++i)
    r1[i] = Rational(num_[i], den_);
  QPoly s0(1, 0), s1(1, 1);  // trail only the coefficient of *this
  while (true) {
    long d1 = deg_of(r1);
    if (d1 <= 0) break;
    long d0 = deg_of(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // one division step: r0 -= (lead0/lead1) x^(d0-d1) r1
    Rational f = r0[d0] / r1[d1];
    long shift = d0 - d1;
    if (static_cast<long>(s0.size()) < static_cast<long>(s1.size()) + shift)
      s0.resize(s1.size() + shift, 0);
    for (long j = 0; j <= d1; ++j) r0[j + shift] -= f * r1[j];
    for (size_t j = 0; j < s1.size(); ++j) s0[j + shift] -= f * s1[j];
  }
  long d1 = deg_of(r1);
  if (d1 != 0) throw std::logic_error("cyclotomic inverse: gcd not constant");
  Rational g = r1[0];
  // inverse = s1 / g, reduced mod phi
  Int den = 1;
  for (const Rational& c : s1) den = den / gcd(den, c.get_den()) * c.get_den();
  den *= g.get_num() < 0 ? -g.get_num() : g.get_num();
  Poly num(s1.size(), 0);
  for (size_t i = 0; i < s1.size(); ++i) {
    Rational c = s1[i] / g;
    num[i] = c.get_num() * (den / c.get_den());
  }
  if (static_cast<long>(num.size()) > ctx.deg)
    poly_mod_phi(num, ctx);
  else
    num.resize(ctx.deg, 0);
  Cyclo result(n_, std::move(num), den);
  return result;
}

Cyclo Cyclo::galois(long k) const {
  long kk = k % n_;
  if (kk < 0) kk += n_;
  if (n_ == 1) return *this;
  if (std::gcd(kk, n_) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  const CycloCtx& ctx = CycloCtx::get(n_);
  Poly a(n_, 0);
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    a[(j * kk) % n_] += num_[j];
  }
  poly_mod_phi(a, ctx);
  return Cyclo(n_, std::move(a), den_);
}

Cyclo Cyclo::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

Cyclo Cyclo::embedded(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0)
    throw std::invalid_argument("embed: conductor must be a multiple");
  const CycloCtx& ctx = CycloCtx::get(m);
  long step = m / n_;
  Poly a(static_cast<size_t>((num_.size() - 1) * step + 1), 0);
  for (size_t j = 0; j < num_.size(); ++j) a[j * step] = num_[j];
  if (static_cast<long>(a.size()) > ctx.deg)
    poly_mod_phi(a, ctx);
  else
    a.resize(ctx.deg, 0);
  return Cyclo(m, std::move(a), den_);
}

Cyclo Cyclo::reduced_to(long m) const {
  if (m == n_) return *this;
  if (n_ % m != 0)
    throw std::invalid_argument("reduce: conductor must be a divisor");
  const CycloCtx& big = CycloCtx::get(n_);
  const CycloCtx& small = CycloCtx::get(m);
  // Solve sum_j x_j * embed(zeta_m^j) = this over Q by elimination.
  long rows = big.deg, cols = small.deg;
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols + 1));
  for (long j = 0; j < cols; ++j) {
    Cyclo basis = Cyclo::zeta(m, j).embedded(n_);
    for (long i = 0; i < rows; ++i)
      A[i][j] = Rational(basis.num_[i], basis.den_);
  }
  for (long i = 0; i < rows; ++i) A[i][cols] = Rational(num_[i], den_);
  std::vector<long> pivot_col_of_row(rows, -1);
  long rank = 0;
  for (long c = 0; c < cols && rank < rows; ++c) {
    long piv = -1;
    for (long r = rank; r < rows; ++r)
      if (A[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[piv], A[rank]);
    Rational inv_p = 1 / A[rank][c];
    for (long j = c; j <= cols; ++j) A[rank][j] *= inv_p;
    for (long r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (long j = c; j <= cols; ++j) A[r][j] -= f * A[rank][j];
    }
    pivot_col_of_row[rank] = c;
    ++rank;
  }
  for (long r = rank; r < rows; ++r)
    if (A[r][cols] != 0)
      throw std::domain_error("value does not lie in the requested subfield");
  std::vector<Rational> x(cols, 0);
  for (long r = 0; r < rank; ++r) x[pivot_col_of_row[r]] = A[r][cols];
  Int den = 1;
  for (const Rational& c : x) den = den / gcd(den, c.get_den()) * c.get_den();
  Poly num(cols, 0);
  for (long j = 0; j < cols; ++j)
    num[j] = x[j].get_num() * (den / x[j].get_den());
  return Cyclo(m, std::move(num), den);
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (n_ != o.n_) {
    long m = lcm_long(n_, o.n_);
    return embedded(m) == o.embedded(m);
  }
  return den_ == o.den_ && num_ == o.num_;
}

Cyclo Cyclo::sqrt_int(unsigned long m) {
  if (m == 0) throw std::invalid_argument("sqrt_int of zero");
  // factor m = s^2 * product of distinct primes
  unsigned long s = 1;
  std::vector<unsigned long> primes;
  unsigned long rest = m;
  for (unsigned long d = 2; d <= 1000000 && d * d <= rest; ++d) {
    if (rest % d) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= d;
    if (e % 2) primes.push_back(d);
  }
  if (rest > 1) {
    unsigned long r = static_cast<unsigned long>(std::sqrt(double(rest)));
    while (r * r > rest) --r;
    while ((r + 1) * (r + 1) <= rest) ++r;
    if (r * r == rest) {
      s *= r;
      rest = 1;
    } else {
      Int probe(static_cast<unsigned long>(rest));
      if (mpz_probab_prime_p(probe.get_mpz_t(), 40) == 0)
        throw std::domain_error("sqrt_int: cannot factor argument");
      primes.push_back(rest);
    }
  }
  Cyclo out = from_int(static_cast<long>(s));
  for (unsigned long p : primes) {
    Cyclo root;
    if (p == 2) {
      root = zeta(8, 1) + zeta(8, 7);  // sqrt 2
    } else {
      // quadratic Gauss sum: sum_k (k|p) zeta_p^k equals sqrt(p) for
      // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4
      Cyclo g = zero(p);
      for (unsigned long k = 1; k < p; ++k) {
        int ls = legendre_symbol(static_cast<long>(k), static_cast<long>(p));
        if (ls == 1)
          g += zeta(p, static_cast<long>(k));
        else
          g -= zeta(p, static_cast<long>(k));
      }
      if (p % 4 == 1)
        root = g;
      else
        root = g * zeta(4, 3);  // -i * (i sqrt p)
    }
    out = out * root;
  }
  return out;
}

std::string Cyclo::exact_string() const {
  std::ostringstream os;
  os << "z" << n_ << "{";
  bool first = true;
  for (size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    if (!first) os << ";";
    first = false;
    Rational c(num_[k], den_);
    c.canonicalize();
    os << k << ":" << c.get_str();
  }
  os << "}";
  return os.str();
}

Cyclo Cyclo::parse(const std::string& s) {
  if (s.size() < 4 || s[0] != 'z')
    throw std::invalid_argument("bad cyclotomic literal: " + s);
  size_t brace = s.find('{');
  if (brace == std::string::npos || s.back() != '}')
    throw std::invalid_argument("bad cyclotomic literal: " + s);
  long n = std::stol(s.substr(1, brace - 1));
  const CycloCtx& ctx = CycloCtx::get(n);
  std::vector<Rational> coeffs(ctx.deg, Rational(0));
  std::string body = s.substr(brace + 1, s.size() - brace - 2);
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ';')) {
    if (item.empty()) continue;
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("bad cyclotomic term: " + item);
    long k = std::stol(item.substr(0, colon));
    if (k < 0 || k >= ctx.deg)
      throw std::invalid_argument("cyclotomic exponent out of range: " + item);
    Rational c;
    if (c.set_str(item.substr(colon + 1), 10) != 0)
      throw std::invalid_argument("bad rational: " + item);
    c.canonicalize();
    coeffs[k] = c;
  }
  Int den = 1;
  for (const Rational& c : coeffs)
    den = den / gcd(den, c.get_den()) * c.get_den();
  Poly num(ctx.deg, 0);
  for (long k = 0; k < ctx.deg; ++k)
    num[k] = coeffs[k].get_num() * (den / coeffs[k].get_den());
  return Cyclo(n, std::move(num), den);
}

namespace {

// Evaluate into re/im at the given binary precision.
void mpfr_eval(const std::vector<Int>& num, const Int& den, long n,
               mpfr_prec_t prec, mpfr_t re, mpfr_t im) {
  mpfr_t two_pi, angle, c, s, t;
  mpfr_inits2(prec, two_pi, angle, c, s, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  mpfr_set_ui(re, 0, MPFR_RNDN);
  mpfr_set_ui(im, 0, MPFR_RNDN);
  for (size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    mpfr_mul_ui(angle, two_pi, static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_cos(c, angle, MPFR_RNDN);
    mpfr_sin(s, angle, MPFR_RNDN);
    mpfr_mul_z(t, c, num[k].get_mpz_t(), MPFR_RNDN);
    mpfr_add(re, re, t, MPFR_RNDN);
    mpfr_mul_z(t, s, num[k].get_mpz_t(), MPFR_RNDN);
    mpfr_add(im, im, t, MPFR_RNDN);
  }
  mpfr_div_z(re, re, den.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(im, im, den.get_mpz_t(), MPFR_RNDN);
  mpfr_clears(two_pi, angle, c, s, t, static_cast<mpfr_ptr>(nullptr));
}

size_t max_coeff_bits(const std::vector<Int>& num) {
  size_t b = 1;
  for (const Int& x : num)
    b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

}  // namespace

std::pair<std::string, std::string> Cyclo::to_decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      64 + max_coeff_bits(num_) + static_cast<size_t>(3.4 * (digits + 4)));
  mpfr_t re, im;
  mpfr_inits2(prec, re, im, static_cast<mpfr_ptr>(nullptr));
  mpfr_eval(num_, den_, n_, prec, re, im);
  char* rs = nullptr;
  char* is = nullptr;
  mpfr_asprintf(&rs, "%.*Rf", digits, re);
  mpfr_asprintf(&is, "%.*Rf", digits, im);
  std::pair<std::string, std::string> out(rs, is);
  mpfr_free_str(rs);
  mpfr_free_str(is);
  mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::pair<double, double> Cyclo::to_complex() const {
  // enough precision that cancellation noise lands below the smallest
  // double, so components that are exactly zero convert to a clean 0.0
  const mpfr_prec_t prec =
      static_cast<mpfr_prec_t>(1200 + max_coeff_bits(num_));
  mpfr_t re, im;
  mpfr_inits2(prec, re, im, static_cast<mpfr_ptr>(nullptr));
  mpfr_eval(num_, den_, n_, prec, re, im);
  std::pair<double, double> out(mpfr_get_d(re, MPFR_RNDN),
                                mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
  return out;
}

int Cyclo::sign_real() const {
  if (is_zero()) return 0;
  if (*this != conj()) throw std::domain_error("sign of a non-real value");
  for (mpfr_prec_t prec = 128; prec <= 1 << 14; prec *= 2) {
    mpfr_t re, im, margin;
    mpfr_inits2(prec, re, im, margin, static_cast<mpfr_ptr>(nullptr));
    mpfr_eval(num_, den_, n_, prec, re, im);
    mpfr_set_ui_2exp(margin, 1, -(prec / 2), MPFR_RNDN);
    int decided = 0;
    if (mpfr_cmpabs(re, margin) > 0) decided = mpfr_sgn(re) > 0 ? 1 : -1;
    mpfr_clears(re, im, margin, static_cast<mpfr_ptr>(nullptr));
    if (decided) return decided;
  }
  throw std::logic_error("sign of real value did not resolve");
}

Cyclo to_conductor(const Cyclo& c, long m) {
  long n = c.conductor();
  if (n == m) return c;
  if (m % n == 0) return c.embedded(m);
  if (n % m == 0) return c.reduced_to(m);
  return c.embedded(lcm_long(n, m)).reduced_to(m);
}

namespace consts {

Cyclo eta() { return Cyclo::zeta(5, -1).embedded(20); }

Cyclo p() { return eta() + eta().conj(); }

Cyclo p_inv() { return Cyclo::one().embedded(20) + p(); }

Cyclo q() { return im() * (eta() - eta().conj()); }

Cyclo im() { return Cyclo::zeta(4, 1).embedded(20); }

Cyclo sqrt5() { return Cyclo::from_int(2).embedded(20) * p() + Cyclo::one().embedded(20); }

Cyclo eta_pow(long two_k) { return Cyclo::zeta(10, -two_k).embedded(20); }

Cyclo exp_ipi(long two_k) { return Cyclo::zeta(4, two_k).embedded(20); }

Cyclo p_pow(long k) {
  Cyclo base = k >= 0 ? p() : p_inv();
  long reps = k >= 0 ? k : -k;
  Cyclo out = Cyclo::one().embedded(20);
  for (long i = 0; i < reps; ++i) out *= base;
  return out;
}

}  // namespace consts

}  // namespace icosa
