#include "icosa/angmom.hpp"

#include <stdexcept>

namespace icosa {

IcosaAngles angle_constants() {
  using namespace consts;
  const Cyclo s5i = sqrt5().scaled(Rational(1, 5));
  IcosaAngles a;
  a.cos4 = q() * s5i;
  a.sin4 = q() * p() * s5i;
  a.cos5 = a.sin4;
  a.sin5 = a.cos4;
  if (a.cos4 * a.cos4 + a.sin4 * a.sin4 != Cyclo::one())
    throw std::logic_error("tilt angle constants are inconsistent");
  return a;
}

namespace {

void check_label(long twoj, long twomu) {
  if (twoj < 0 || std::abs(twomu) > twoj || (twoj - twomu) % 2 != 0)
    throw std::invalid_argument("bad doubled spin labels");
}

}  // namespace

SpinState SpinState::basis(long twoj, long twomu) {
  check_label(twoj, twomu);
  SpinState s;
  s.twoj = twoj;
  s.add(twomu, RadSum(Cyclo::one()));
  return s;
}

void SpinState::add(long twomu, const RadSum& x) {
  check_label(twoj, twomu);
  if (x.is_zero()) return;
  auto it = amp.find(twomu);
  if (it == amp.end()) {
    amp.emplace(twomu, x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) amp.erase(it);
}

RadSum SpinState::at(long twomu) const {
  auto it = amp.find(twomu);
  return it == amp.end() ? RadSum() : it->second;
}

SpinState SpinState::scaled_by(const RadSum& x) const {
  SpinState out;
  out.twoj = twoj;
  if (x.is_zero()) return out;
  for (const auto& [mu, a] : amp) out.add(mu, a * x);
  return out;
}

SpinState SpinState::operator+(const SpinState& o) const {
  if (twoj != o.twoj) throw std::invalid_argument("spin mismatch");
  SpinState out = *this;
  for (const auto& [mu, a] : o.amp) out.add(mu, a);
  return out;
}

SpinState SpinState::operator-(const SpinState& o) const {
  if (twoj != o.twoj) throw std::invalid_argument("spin mismatch");
  SpinState out = *this;
  for (const auto& [mu, a] : o.amp) out.add(mu, -a);
  return out;
}

Rational SpinState::norm2() const {
  RadSum acc;
  for (const auto& [mu, a] : amp) acc += a.conj() * a;
  if (acc != acc.conj())
    throw std::logic_error("norm was not conjugation invariant");
  return acc.is_zero() ? Rational(0) : acc.as_rational();
}

bool SpinState::operator==(const SpinState& o) const {
  if (twoj != o.twoj || amp.size() != o.amp.size()) return false;
  auto it = o.amp.begin();
  for (const auto& [mu, a] : amp) {
    if (mu != it->first || a != it->second) return false;
    ++it;
  }
  return true;
}

std::vector<std::vector<RadSum>> small_d_rad(long twoj, const Cyclo& cos_half,
                                             const Cyclo& sin_half) {
  if (cos_half * cos_half + sin_half * sin_half != Cyclo::one())
    throw std::invalid_argument("half angle does not lie on the unit circle");
  size_t n = static_cast<size_t>(twoj) + 1;
  std::vector<std::vector<RadSum>> d(n, std::vector<RadSum>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      d[r][c] = rotation_entry(twoj, twoj - 2 * static_cast<long>(r),
                               twoj - 2 * static_cast<long>(c), cos_half,
                               -sin_half, sin_half, cos_half);
  return d;
}

std::vector<std::vector<Cyclo>> wigner_small_d(long twoj, const Cyclo& cos_half,
                                               const Cyclo& sin_half) {
  auto rad = small_d_rad(twoj, cos_half, sin_half);
  size_t n = rad.size();
  std::vector<std::vector<Cyclo>> d(n, std::vector<Cyclo>(n, Cyclo::zero(1)));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) d[r][c] = rad[r][c].to_cyclo();
  return d;
}

SpinState act(const Mat2& u, const SpinState& s) {
  SpinState out;
  out.twoj = s.twoj;
  for (const auto& [twomu, x] : s.amp) {
    for (long twonu = -s.twoj; twonu <= s.twoj; twonu += 2) {
      RadSum e = rotation_entry(s.twoj, twonu, twomu, u.m[0], u.m[1], u.m[2], u.m[3]);
      if (!e.is_zero()) out.add(twonu, e * x);
    }
  }
  return out;
}

SpinState act(int element, const SpinState& s) {
  return act(group().elements[static_cast<size_t>(element)].mat, s);
}

int generator_element(GenLabel which) {
  const GroupTable& G = group();
  switch (which) {
    case GenLabel::T0: return G.idx_t0;
    case GenLabel::Ep: return G.idx_ep;
    case GenLabel::S5: return G.index_of("S5");
    case GenLabel::S10: return G.index_of("S10");
    case GenLabel::S11: return G.index_of("S11");
  }
  throw std::logic_error("unreachable");
}

SpinState generator_action_closed_form(GenLabel which, long twoj, long twomu) {
  using namespace consts;
  check_label(twoj, twomu);
  SpinState out;
  out.twoj = twoj;
  const IcosaAngles ang = angle_constants();

  switch (which) {
    case GenLabel::T0:
      out.add(twomu, RadSum(eta_pow(twomu)));
      break;
    case GenLabel::Ep:
      out.add(twomu, RadSum(exp_ipi(2 * twoj)));
      break;
    case GenLabel::S5: {
      auto d = small_d_rad(twoj, ang.cos4, ang.sin4);
      size_t c = static_cast<size_t>((twoj - twomu) / 2);
      for (long twonu = twoj; twonu >= -twoj; twonu -= 2) {
        size_t r = static_cast<size_t>((twoj - twonu) / 2);
        Cyclo phase = exp_ipi(-twomu) * eta_pow(twomu - twonu);
        out.add(twonu, RadSum(phase) * d[r][c]);
      }
      break;
    }
    case GenLabel::S10: {
      auto d = small_d_rad(twoj, ang.cos5, ang.sin5);
      size_t c = static_cast<size_t>((twoj - twomu) / 2);
      for (long twonu = twoj; twonu >= -twoj; twonu -= 2) {
        size_t r = static_cast<size_t>((twoj - twonu) / 2);
        Cyclo phase = exp_ipi(twonu) * eta_pow(3 * twomu + 2 * twonu);
        out.add(twonu, RadSum(phase) * d[r][c]);
      }
      break;
    }
    case GenLabel::S11:
      out.add(-twomu, RadSum(exp_ipi(twoj - twomu) * eta_pow(2 * twomu)));
      break;
  }
  return out;
}

}  // namespace icosa
