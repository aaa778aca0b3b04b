#include "icosa/radsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <cmath>

namespace icosa {

namespace {

// conductor of sqrt(v) for squarefree v >= 1
long radical_conductor(long v) { return v % 4 == 1 ? v : 4 * v; }

const Cyclo& cached_sqrt(unsigned long v) {
  static std::mutex mu;
  static std::map<unsigned long, Cyclo> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(v);
  if (it == cache.end()) it = cache.emplace(v, Cyclo::sqrt_int(v)).first;
  return it->second;
}

}  // namespace

std::pair<Int, Int> sqrt_reduce(const Int& m) {
  if (m < 1) throw std::invalid_argument("sqrt_reduce requires a positive integer");
  Int r = m, g = 1, sf = 1;
  for (unsigned long d = 2; d <= 1000000ul; ++d) {
    if (r == 1) break;
    Int dd(d);
    if (dd * dd > r) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(r.get_mpz_t(), d)) {
      mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), d);
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) g *= dd;
    if (e % 2) sf *= dd;
  }
  if (r > 1) {
    if (mpz_perfect_square_p(r.get_mpz_t())) {
      Int s;
      mpz_sqrt(s.get_mpz_t(), r.get_mpz_t());
      g *= s;
    } else if (mpz_probab_prime_p(r.get_mpz_t(), 40)) {
      sf *= r;
    } else {
      throw std::domain_error("sqrt_reduce: cofactor too hard to factor");
    }
  }
  return {g, sf};
}

void RadSum::push_term(const Int& sf, const Cyclo& c) {
  if (c.is_zero()) return;
  size_t lo = 0;
  while (lo < terms_.size() && terms_[lo].first < sf) ++lo;
  if (lo < terms_.size() && terms_[lo].first == sf) {
    Cyclo s = terms_[lo].second + c;
    if (s.is_zero())
      terms_.erase(terms_.begin() + static_cast<long>(lo));
    else
      terms_[lo].second = std::move(s);
  } else {
    terms_.insert(terms_.begin() + static_cast<long>(lo), {sf, c});
  }
}

RadSum::RadSum(const Cyclo& c) { push_term(1, c); }

RadSum::RadSum(const Rational& r) { push_term(1, Cyclo::from_rational(r)); }

RadSum RadSum::sqrt_rational(const Rational& r) {
  if (sgn(r) <= 0) throw std::invalid_argument("sqrt_rational requires r > 0");
  Int xy = r.get_num() * r.get_den();
  auto [g, sf] = sqrt_reduce(xy);
  RadSum out;
  out.push_term(sf, Cyclo::from_rational(Rational(g, r.get_den())));
  return out;
}

RadSum RadSum::radical_term(const Int& sf, const Cyclo& c) {
  if (sf < 1) throw std::invalid_argument("radical_term requires sf >= 1");
  RadSum out;
  out.push_term(sf, c);
  return out;
}

std::vector<std::pair<Int, Cyclo>> RadSum::reduced_terms() const {
  long n = 1;
  for (const auto& [sf, c] : terms_) n = std::lcm(n, c.conductor());
  std::vector<std::pair<Int, Cyclo>> out;
  for (const auto& [sf, c] : terms_) {
    // largest divisor of the radicand whose square root lies in the joint
    // field; any such divisor also divides the conductor
    const long cap = static_cast<long>(Int(gcd(sf, Int(n))).get_si());
    long best = 1;
    for (long v = 2; v <= cap; ++v)
      if (cap % v == 0 && n % radical_conductor(v) == 0) best = v;
    Int u = sf / best;
    Cyclo cc = best == 1 ? c : c * cached_sqrt(static_cast<unsigned long>(best));
    bool placed = false;
    for (auto& [u0, c0] : out) {
      Int g = gcd(u, u0);
      Int w = (u / g) * (u0 / g);
      if (!w.fits_slong_p()) continue;
      const long wl = w.get_si();
      if (wl > n || n % radical_conductor(wl) != 0) continue;
      // sqrt(u) = (g/u0) sqrt(w) sqrt(u0)
      Rational scale(g, u0);
      scale.canonicalize();
      c0 += cc * cached_sqrt(static_cast<unsigned long>(wl)).scaled(scale);
      placed = true;
      break;
    }
    if (!placed) out.emplace_back(std::move(u), std::move(cc));
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool RadSum::is_zero() const {
  if (terms_.empty()) return true;
  if (terms_.size() == 1) return false;
  return reduced_terms().empty();
}

bool RadSum::is_cyclo() const {
  if (terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1))
    return true;
  auto red = reduced_terms();
  return red.empty() || (red.size() == 1 && red[0].first == 1);
}

Cyclo RadSum::cyclo_part() const {
  if (terms_.empty()) return Cyclo::zero(1);
  if (terms_.size() == 1 && terms_[0].first == 1) return terms_[0].second;
  auto red = reduced_terms();
  if (red.empty()) return Cyclo::zero(1);
  if (red.size() == 1 && red[0].first == 1) return red[0].second;
  throw std::domain_error("value carries an irrational radical");
}

bool RadSum::is_rational() const {
  if (!is_cyclo()) return false;
  return cyclo_part().is_rational();
}

Rational RadSum::as_rational() const {
  return cyclo_part().as_rational();
}

RadSum RadSum::operator-() const {
  RadSum out = *this;
  for (auto& [sf, c] : out.terms_) c = -c;
  return out;
}

RadSum RadSum::operator+(const RadSum& o) const {
  RadSum out = *this;
  for (const auto& [sf, c] : o.terms_) out.push_term(sf, c);
  return out;
}

RadSum RadSum::operator-(const RadSum& o) const { return *this + (-o); }

RadSum RadSum::operator*(const RadSum& o) const {
  RadSum out;
  for (const auto& [sa, x] : terms_) {
    for (const auto& [sb, y] : o.terms_) {
      Int g = gcd(sa, sb);
      Int sf = (sa / g) * (sb / g);
      out.push_term(sf, (x * y).scaled(Rational(g)));
    }
  }
  return out;
}

RadSum RadSum::scaled(const Rational& r) const {
  RadSum out;
  if (sgn(r) == 0) return out;
  out = *this;
  for (auto& [sf, c] : out.terms_) c = c.scaled(r);
  return out;
}

RadSum RadSum::conj() const {
  RadSum out = *this;
  for (auto& [sf, c] : out.terms_) c = c.conj();
  return out;
}

bool RadSum::operator==(const RadSum& o) const {
  if (terms_.size() == o.terms_.size()) {
    bool same = true;
    for (size_t k = 0; same && k < terms_.size(); ++k)
      same = terms_[k].first == o.terms_[k].first &&
             terms_[k].second == o.terms_[k].second;
    if (same) return true;
  }
  return (*this - o).is_zero();
}

Cyclo RadSum::to_cyclo() const {
  Cyclo acc = Cyclo::zero(1);
  for (const auto& [sf, c] : terms_) {
    if (!sf.fits_ulong_p())
      throw std::domain_error("radicand too large to materialize");
    acc += Cyclo::sqrt_int(sf.get_ui()) * c;
  }
  return acc;
}

std::pair<double, double> RadSum::to_complex() const {
  double re = 0, im = 0;
  for (const auto& [sf, c] : terms_) {
    double w = std::sqrt(sf.get_d());
    auto [x, y] = c.to_complex();
    re += w * x;
    im += w * y;
  }
  return {re, im};
}

std::string RadSum::exact_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [sf, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (sf != 1) os << "sqrt(" << sf.get_str() << ")*";
    os << c.exact_string();
  }
  return os.str();
}

RadSum RadSum::parse(const std::string& s) {
  auto trim = [](std::string t) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return t.substr(b, e - b + 1);
  };
  std::string body = trim(s);
  if (body == "0") return RadSum();
  RadSum out;
  size_t pos = 0;
  while (pos != std::string::npos) {
    size_t next = body.find('+', pos);
    std::string term = trim(body.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos));
    pos = next == std::string::npos ? next : next + 1;
    if (term.empty()) throw std::invalid_argument("empty radical term");
    Int sf = 1;
    if (term.rfind("sqrt(", 0) == 0) {
      size_t close = term.find(")*");
      if (close == std::string::npos)
        throw std::invalid_argument("malformed radical factor: " + term);
      sf = Int(term.substr(5, close - 5));
      term = term.substr(close + 2);
    }
    out.push_term(sf, Cyclo::parse(term));
  }
  return out;
}

RadSum rotation_entry(long twoj, long twonu, long twomu, const Cyclo& a,
                      const Cyclo& b, const Cyclo& c, const Cyclo& d) {
  if (twoj < 0 || std::abs(twonu) > twoj || std::abs(twomu) > twoj ||
      (twoj + twonu) % 2 != 0 || (twoj + twomu) % 2 != 0)
    throw std::invalid_argument("rotation_entry: bad doubled indices");
  long jpm = (twoj + twomu) / 2, jmn = (twoj - twonu) / 2;
  long jpn = (twoj + twonu) / 2, jmm = (twoj - twomu) / 2;
  long shift = (twonu - twomu) / 2;  // exponent offset of b
  long kmin = std::max(0l, -shift), kmax = std::min(jpm, jmn);
  if (kmin > kmax) return RadSum();

  auto fact = [](long n) {
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
  };
  Int pre = fact(jpn) * fact(jmn) * fact(jpm) * fact(jmm);
  auto [g, sf] = sqrt_reduce(pre);

  // power tables up to the largest exponent in play
  auto powers = [&](const Cyclo& base) {
    std::vector<Cyclo> p(static_cast<size_t>(twoj) + 1, Cyclo::one());
    for (long e = 1; e <= twoj; ++e)
      p[static_cast<size_t>(e)] = p[static_cast<size_t>(e - 1)] * base;
    return p;
  };
  std::vector<Cyclo> pa = powers(a), pb = powers(b), pc = powers(c), pd = powers(d);

  Cyclo sum = Cyclo::zero(1);
  for (long k = kmin; k <= kmax; ++k) {
    Rational coeff(g, fact(k) * fact(jpm - k) * fact(jmn - k) * fact(shift + k));
    Cyclo mono = pa[static_cast<size_t>(jpm - k)] * pc[static_cast<size_t>(k)] *
                 pb[static_cast<size_t>(shift + k)] * pd[static_cast<size_t>(jmn - k)];
    sum += mono.scaled(coeff);
  }
  return RadSum::radical_term(sf, sum);
}

}  // namespace icosa
