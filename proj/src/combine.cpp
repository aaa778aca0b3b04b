#include "icosa/combine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace icosa {

namespace {

using DMat = std::vector<std::vector<RadSum>>;

// combine() is called many times at the same spin, so the two rotation
// matrices are cached
const std::pair<DMat, DMat>& tilt_matrices(long twoj) {
  static std::mutex mu;
  static std::map<long, std::pair<DMat, DMat>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(twoj);
  if (it == cache.end()) {
    const IcosaAngles ang = angle_constants();
    it = cache.emplace(twoj,
                       std::make_pair(small_d_rad(twoj, ang.cos4, ang.sin4),
                                      small_d_rad(twoj, ang.cos5, ang.sin5)))
             .first;
  }
  return it->second;
}

bool is_row(const IrrepSpec& spec, long v) {
  return std::find(spec.rows.begin(), spec.rows.end(), static_cast<int>(v)) != spec.rows.end();
}

// sign of a real value; the float filter avoids materializing large
// radicands and is backed by an exact zero test
int sign_of_real(const RadSum& x) {
  const auto [re, im] = x.to_complex();
  (void)im;
  if (re > 1e-9) return 1;
  if (re < -1e-9) return -1;
  if (x.is_zero()) return 0;
  throw std::logic_error("sign of a near-zero amplitude is not resolved");
}

}  // namespace

int delta5(long two_lambda, long two_rho) {
  if ((two_lambda - two_rho) % 2 != 0)
    throw std::invalid_argument("labels differ in parity");
  return (two_lambda - two_rho) % 10 == 0 ? 1 : 0;
}

RadSum state_inner(const SpinState& a, const SpinState& b) {
  if (a.twoj != b.twoj) throw std::invalid_argument("states carry different spins");
  RadSum r;
  for (const auto& [nu, amp] : b.amp) {
    const RadSum x = a.at(nu);
    if (!x.is_zero()) r += x.conj() * amp;
  }
  return r;
}

SpinState combine(IrrepName gamma, long two_mu, long two_lambda, long twoj,
                  long two_rho) {
  const IrrepSpec& spec = irrep(gamma);
  if (!is_row(spec, two_mu) || !is_row(spec, two_lambda))
    throw std::invalid_argument("labels are not rows of the representation");
  if (((twoj ^ two_mu) & 1) != 0)
    throw std::invalid_argument("spin and row labels differ in parity");
  if (two_rho < -twoj || two_rho > twoj || ((two_rho ^ twoj) & 1) != 0)
    throw std::invalid_argument("rho is not a magnetic label of the spin");

  SpinState out;
  out.twoj = twoj;
  if (!delta5(two_lambda, two_rho)) return out;

  const IrreducibleBasis& b = irreducible_basis(gamma, two_mu, two_lambda);
  Rational ten_over_n(10, b.normsq);
  ten_over_n.canonicalize();
  const RadSum pref = RadSum::sqrt_rational(ten_over_n);

  const auto& [d4, d5] = tilt_matrices(twoj);
  const auto idx = [twoj](long v) { return static_cast<size_t>((twoj - v) / 2); };

  const Cyclo c3 = consts::sqrt5() * b.coeffs[2] * consts::exp_ipi(-two_rho);
  const Cyclo c4 = consts::sqrt5() * b.coeffs[3];
  for (long two_nu = twoj; two_nu >= -twoj; two_nu -= 2) {
    if ((two_mu - two_nu) % 10 != 0) continue;
    RadSum amp;
    if (two_nu == two_rho && !b.coeffs[0].is_zero()) amp += RadSum(b.coeffs[0]);
    if (two_nu == -two_rho && !b.coeffs[1].is_zero())
      amp += RadSum(b.coeffs[1] * consts::exp_ipi(twoj - two_rho) *
                    consts::eta_pow(2 * two_rho));
    if (!c3.is_zero())
      amp += RadSum(c3 * consts::eta_pow(two_rho - two_nu)) *
             d4[idx(two_nu)][idx(two_rho)];
    if (!c4.is_zero())
      amp += RadSum(c4 * consts::exp_ipi(two_nu) *
                    consts::eta_pow(3 * two_rho + 2 * two_nu)) *
             d5[idx(two_nu)][idx(two_rho)];
    if (!amp.is_zero()) out.add(two_nu, pref * amp);
  }
  return out;
}

bool combine_equals_application_oracle(IrrepName gamma, long two_mu,
                                       long two_lambda, long twoj,
                                       long two_rho) {
  const SpinState eq = combine(gamma, two_mu, two_lambda, twoj, two_rho);
  const IrreducibleBasis& b = irreducible_basis(gamma, two_mu, two_lambda);
  const SpinState seed = SpinState::basis(twoj, two_rho);
  SpinState direct;
  direct.twoj = twoj;
  for (int e = 0; e < group().size(); ++e) {
    const Cyclo& c = b.vector.c[static_cast<size_t>(e)];
    if (c.is_zero()) continue;
    direct = direct + act(e, seed).scaled_by(RadSum(c));
  }
  if (direct == eq) return true;
  if (eq.amp.empty() || direct.amp.empty()) return false;
  const auto& [nu, lead] = *eq.amp.begin();
  const RadSum cross = direct.at(nu) * lead.conj();
  if (!cross.is_rational()) return false;
  const Rational ratio = cross.as_rational() / lead.norm2().as_rational();
  if (ratio <= 0) return false;
  return direct == eq.scaled_by(RadSum(ratio));
}

AdaptedBasis basis_set(IrrepName gamma, long twoj) {
  const IrrepSpec& spec = irrep(gamma);
  const int d = spec.dim;
  AdaptedBasis out;
  out.gamma = gamma;
  out.twoj = twoj;
  const long want = multiplicities(twoj)[gamma];
  if (want == 0) return out;

  for (long two_rho = twoj; two_rho >= -twoj; two_rho -= 2) {
    for (int li = 0; li < d; ++li) {
      if (static_cast<long>(out.copies.size()) == want) break;
      const long two_lambda = spec.rows[static_cast<size_t>(li)];
      if (!delta5(two_lambda, two_rho)) continue;
      std::vector<SpinState> rows(static_cast<size_t>(d));
      bool all_zero = true;
      for (int mi = 0; mi < d; ++mi) {
        rows[static_cast<size_t>(mi)] =
            combine(gamma, spec.rows[static_cast<size_t>(mi)], two_lambda, twoj, two_rho);
        if (!rows[static_cast<size_t>(mi)].amp.empty()) all_zero = false;
      }
      if (all_zero) continue;

      // remove the kept copies; the projection coefficient must not depend
      // on the row
      for (const AdaptedFamily& kept : out.copies) {
        const RadSum c = state_inner(kept.rows[0], rows[0]);
        for (int mi = 1; mi < d; ++mi)
          if (state_inner(kept.rows[static_cast<size_t>(mi)], rows[static_cast<size_t>(mi)]) != c)
            throw std::logic_error("projection coefficient varies across rows");
        if (c.is_zero()) continue;
        for (int mi = 0; mi < d; ++mi)
          rows[static_cast<size_t>(mi)] =
              rows[static_cast<size_t>(mi)] - kept.rows[static_cast<size_t>(mi)].scaled_by(c);
      }
      bool rem_zero = true;
      for (const SpinState& s : rows)
        if (!s.amp.empty()) rem_zero = false;
      if (rem_zero) continue;  // dependent on the kept copies
      for (const SpinState& s : rows)
        if (s.amp.empty()) throw std::logic_error("family lost a row");

      const Rational n2 = rows[0].norm2();
      for (const SpinState& s : rows)
        if (s.norm2() != n2) throw std::logic_error("row norms differ within a family");
      Rational inv = Rational(1) / n2;
      const RadSum unit = RadSum::sqrt_rational(inv);
      for (SpinState& s : rows) s = s.scaled_by(unit);

      // sign convention: highest-nu amplitude of the first row has positive
      // real part, or positive imaginary part when purely imaginary
      const RadSum& lead = rows[0].amp.rbegin()->second;
      const RadSum re = (lead + lead.conj()).scaled(Rational(1, 2));
      int sgn = sign_of_real(re);
      if (sgn == 0) sgn = sign_of_real((lead - lead.conj()) * RadSum(-consts::im()));
      if (sgn == 0) throw std::logic_error("leading amplitude has no sign");
      if (sgn < 0)
        for (SpinState& s : rows) s = s.scaled_by(RadSum(Rational(-1)));

      AdaptedFamily fam;
      fam.two_lambda = two_lambda;
      fam.two_rho = two_rho;
      fam.rawscale = RadSum::sqrt_rational(n2).scaled(Rational(sgn));
      fam.rows = std::move(rows);
      out.copies.push_back(std::move(fam));
    }
    if (static_cast<long>(out.copies.size()) == want) break;
  }
  if (static_cast<long>(out.copies.size()) != want)
    throw std::runtime_error("seed scan exhausted before the multiplicity was reached");

  // every family must transform by the representation matrices under the
  // generating elements
  const GroupTable& g = group();
  for (const int e : {g.idx_t0, g.idx_s1, g.idx_ep}) {
    const MatN& dm = spec.at(e);
    for (const AdaptedFamily& fam : out.copies)
      for (int mi = 0; mi < d; ++mi) {
        SpinState rhs;
        rhs.twoj = twoj;
        for (int ti = 0; ti < d; ++ti)
          rhs = rhs + fam.rows[static_cast<size_t>(ti)].scaled_by(RadSum(dm.at(ti, mi)));
        if (act(e, fam.rows[static_cast<size_t>(mi)]) != rhs)
          throw std::logic_error("family violates the transformation law");
      }
  }
  return out;
}

std::string parity_label(IrrepName gamma, Parity p) {
  return irrep_ascii(gamma) + (p == Parity::even ? "_g" : "_u");
}

}  // namespace icosa
