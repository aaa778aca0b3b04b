#include "icosa/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace icosa {

Mat2 Mat2::identity() {
  Mat2 r;
  r.m = {Cyclo::one(), Cyclo(), Cyclo(), Cyclo::one()};
  return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  Mat2 r;
  r.m[0] = m[0] * o.m[0] + m[1] * o.m[2];
  r.m[1] = m[0] * o.m[1] + m[1] * o.m[3];
  r.m[2] = m[2] * o.m[0] + m[3] * o.m[2];
  r.m[3] = m[2] * o.m[1] + m[3] * o.m[3];
  return r;
}

Mat2 Mat2::operator-() const {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = -m[i];
  return r;
}

Mat2 Mat2::adjoint() const {
  Mat2 r;
  r.m[0] = m[0].conj();
  r.m[1] = m[2].conj();
  r.m[2] = m[1].conj();
  r.m[3] = m[3].conj();
  return r;
}

Cyclo Mat2::det() const { return m[0] * m[3] - m[1] * m[2]; }

bool Mat2::operator==(const Mat2& o) const {
  for (int i = 0; i < 4; ++i)
    if (m[i] != o.m[i]) return false;
  return true;
}

bool Mat2::is_special_unitary() const {
  if (det() != Cyclo::one()) return false;
  Mat2 u = *this * adjoint();
  return u == Mat2::identity();
}

std::string Mat2::key() const {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    s += m[i].exact_string();
    s += '|';
  }
  return s;
}

namespace {

std::vector<Axis> build_axes_impl() {
  std::vector<Axis> out;
  const long nc = 60;
  Cyclo one = Cyclo::one().embedded(nc);
  Cyclo zero = Cyclo::zero(nc);
  Cyclo s5 = Cyclo::sqrt_int(5).embedded(nc);
  Cyclo inv_s5 = s5.scaled(Rational(1, 5));           // 1/sqrt5
  Cyclo inv_s15 = Cyclo::sqrt_int(15).embedded(nc).scaled(Rational(1, 15));
  Cyclo q = consts::q().embedded(nc);
  Cyclo p = consts::p().embedded(nc);
  Cyclo pi1 = consts::p_inv().embedded(nc);
  Cyclo two = Cyclo::from_int(2).embedded(nc);

  auto fifth = [&](long k) { return Cyclo::zeta(5, k).embedded(nc); };
  auto tenth = [&](long k) { return Cyclo::zeta(10, k).embedded(nc); };
  auto twentieth = [&](long k) { return Cyclo::zeta(20, k).embedded(nc); };

  // five-fold: axis 0 is the z axis, axes 1..5 at polar theta1 with
  // cos theta1 = 1/sqrt5, azimuths 2(j-1)pi/5
  out.push_back({AxisFamily::five_fold, 0, one, zero, one});
  for (int j = 1; j <= 5; ++j)
    out.push_back({AxisFamily::five_fold, j, inv_s5, two * inv_s5,
                   fifth(j - 1)});

  // three-fold: tan theta2 = 3 - sqrt5, tan theta3 = 3 + sqrt5,
  // azimuths (2j-1)pi/5 for both rings
  Cyclo cos2 = q * pi1 * inv_s15, sin2 = two * q * p * inv_s15;
  Cyclo cos3 = q * p * p * inv_s15, sin3 = two * q * inv_s15;
  for (int j = 1; j <= 5; ++j)
    out.push_back({AxisFamily::three_fold, j, cos2, sin2, tenth(2 * j - 1)});
  for (int j = 1; j <= 5; ++j)
    out.push_back(
        {AxisFamily::three_fold, j + 5, cos3, sin3, tenth(2 * j - 1)});

  // two-fold: ring at theta4, ring at theta5 (the swapped pair), and the
  // equatorial ring at polar pi/2 with azimuths (4j-3)pi/10
  Cyclo cos4 = q * inv_s5, sin4 = q * p * inv_s5;
  for (int j = 1; j <= 5; ++j)
    out.push_back({AxisFamily::two_fold, j, cos4, sin4, fifth(j - 1)});
  for (int j = 1; j <= 5; ++j)
    out.push_back(
        {AxisFamily::two_fold, j + 5, sin4, cos4, tenth(2 * j - 1)});
  for (int j = 1; j <= 5; ++j)
    out.push_back(
        {AxisFamily::two_fold, j + 10, zero, one, twentieth(4 * j - 3)});

  for (const Axis& ax : out) {
    if (ax.cos_polar * ax.cos_polar + ax.sin_polar * ax.sin_polar !=
        Cyclo::one())
      throw std::logic_error("axis polar angle is not normalized");
    if (ax.azimuth.norm2() != Cyclo::one())
      throw std::logic_error("axis azimuth is not a phase");
  }
  return out;
}

}  // namespace

const std::vector<Axis>& axes() {
  static const std::vector<Axis> a = build_axes_impl();
  return a;
}

Mat2 su2_from_axis_angle(const Axis& axis, const Cyclo& cos_half,
                         const Cyclo& sin_half) {
  if (cos_half * cos_half + sin_half * sin_half != Cyclo::one())
    throw std::invalid_argument("half angle is not normalized");
  Cyclo i = consts::im();
  Mat2 r;
  r.m[0] = cos_half - i * sin_half * axis.cos_polar;
  r.m[1] = -(i * sin_half * axis.sin_polar * axis.azimuth.conj());
  r.m[2] = -(i * sin_half * axis.sin_polar * axis.azimuth);
  r.m[3] = cos_half + i * sin_half * axis.cos_polar;
  return r;
}

std::string ElementLabel::str() const {
  std::string s = primed ? "E'" : "";
  if (kind == 'E') return primed ? "E'" : "E";
  s += kind;
  s += std::to_string(axis);
  if ((kind == 'T' || kind == 'R') && power > 1)
    s += "^" + std::to_string(power);
  return s;
}

std::optional<ElementLabel> ElementLabel::parse(const std::string& in) {
  ElementLabel lab;
  std::string s = in;
  if (s.rfind("E'", 0) == 0) {
    lab.primed = true;
    s = s.substr(2);
    if (s.empty()) {
      lab.kind = 'E';
      return lab;
    }
  } else if (s == "E") {
    lab.kind = 'E';
    return lab;
  }
  if (s.empty()) return std::nullopt;
  char k = s[0];
  if (k != 'T' && k != 'R' && k != 'S') return std::nullopt;
  size_t caret = s.find('^');
  std::string axis_part = s.substr(1, caret == std::string::npos
                                          ? std::string::npos
                                          : caret - 1);
  if (axis_part.empty() ||
      axis_part.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  lab.kind = k;
  lab.axis = std::stoi(axis_part);
  lab.power = 1;
  if (caret != std::string::npos) {
    std::string pow_part = s.substr(caret + 1);
    if (pow_part.empty() ||
        pow_part.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    lab.power = std::stoi(pow_part);
  }
  bool ok = false;
  if (k == 'T') ok = lab.axis >= 0 && lab.axis <= 5 && lab.power >= 1 && lab.power <= 4;
  if (k == 'R') ok = lab.axis >= 1 && lab.axis <= 10 && lab.power >= 1 && lab.power <= 2;
  if (k == 'S') ok = lab.axis >= 1 && lab.axis <= 15 && lab.power == 1;
  return ok ? std::optional<ElementLabel>(lab) : std::nullopt;
}

int GroupTable::index_of(const ElementLabel& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i].label == label) return i;
  return -1;
}

int GroupTable::index_of(const std::string& label) const {
  auto parsed = ElementLabel::parse(label);
  if (!parsed) return -1;
  return index_of(*parsed);
}

Mat2 GroupTable::eval_word(const std::vector<int>& word) const {
  Mat2 acc = elements[idx_e].mat;
  for (int letter : word) {
    int g = letter == letter_t0 ? idx_t0 : letter == letter_s1 ? idx_s1 : idx_ep;
    acc = acc * elements[g].mat;
  }
  return acc;
}

namespace {

Mat2 reduce_mat(const Mat2& m, long conductor) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = m.m[i].reduced_to(conductor);
  return r;
}

Mat2 identity_at(long conductor) {
  Mat2 r;
  r.m = {Cyclo::one().embedded(conductor), Cyclo::zero(conductor),
         Cyclo::zero(conductor), Cyclo::one().embedded(conductor)};
  return r;
}

GroupTable build_group() {
  const std::vector<Axis>& ax = axes();
  auto axis_at = [&](AxisFamily fam, int index) -> const Axis& {
    for (const Axis& a : ax)
      if (a.family == fam && a.index == index) return a;
    throw std::logic_error("axis lookup failed");
  };

  // exact half-angle pairs for the three rotation orders
  Cyclo cos5 = consts::p_inv().scaled(Rational(1, 2));       // cos(pi/5)
  Cyclo sin5 = (consts::q() * consts::p()).scaled(Rational(1, 2));
  Cyclo cos3 = Cyclo::from_rational(Rational(1, 2));         // cos(pi/3)
  Cyclo sin3 = Cyclo::sqrt_int(3).scaled(Rational(1, 2));
  Cyclo cos2 = Cyclo::zero(1);                               // cos(pi/2)
  Cyclo sin2 = Cyclo::one();

  // every labeled matrix, reduced to the group conductor
  std::map<std::string, ElementLabel> label_of_key;
  auto put = [&](const Mat2& m, ElementLabel lab) {
    auto [it, fresh] = label_of_key.emplace(m.key(), lab);
    if (!fresh)
      throw std::logic_error("duplicate labeled matrix: " + lab.str() +
                             " vs " + it->second.str());
  };

  Mat2 ident = identity_at(20);
  put(ident, {'E', 0, 0, false});
  put(-ident, {'E', 0, 0, true});
  for (int j = 0; j <= 5; ++j) {
    Mat2 t = reduce_mat(
        su2_from_axis_angle(axis_at(AxisFamily::five_fold, j), cos5, sin5),
        20);
    Mat2 acc = t;
    for (int a = 1; a <= 4; ++a) {
      put(acc, {'T', j, a, false});
      put(-acc, {'T', j, a, true});
      if (a < 4) acc = acc * t;
    }
  }
  for (int j = 1; j <= 10; ++j) {
    Mat2 r = reduce_mat(
        su2_from_axis_angle(axis_at(AxisFamily::three_fold, j), cos3, sin3),
        20);
    Mat2 r2 = r * r;
    put(r, {'R', j, 1, false});
    put(-r, {'R', j, 1, true});
    put(r2, {'R', j, 2, false});
    put(-r2, {'R', j, 2, true});
  }
  for (int j = 1; j <= 15; ++j) {
    Mat2 s = reduce_mat(
        su2_from_axis_angle(axis_at(AxisFamily::two_fold, j), cos2, sin2), 20);
    put(s, {'S', j, 1, false});
    put(-s, {'S', j, 1, true});
  }
  if (label_of_key.size() != 120)
    throw std::logic_error("labeled matrix set is not 120 elements");

  GroupTable g;
  Mat2 t0 = reduce_mat(
      su2_from_axis_angle(axis_at(AxisFamily::five_fold, 0), cos5, sin5), 20);
  Mat2 s1 = reduce_mat(
      su2_from_axis_angle(axis_at(AxisFamily::two_fold, 1), cos2, sin2), 20);
  std::array<Mat2, 3> gen = {t0, s1, -ident};

  // breadth-first closure
  std::map<std::string, int> index_of_key;
  g.elements.push_back({ident, {}});
  g.words.push_back({});
  g.parent.push_back(-1);
  g.parent_letter.push_back(-1);
  index_of_key[ident.key()] = 0;
  for (size_t head = 0; head < g.elements.size(); ++head) {
    Mat2 base = g.elements[head].mat;  // copy: vector may reallocate
    std::vector<int> base_word = g.words[head];
    for (int letter = 0; letter < 3; ++letter) {
      Mat2 next = base * gen[letter];
      std::string key = next.key();
      if (index_of_key.count(key)) continue;
      if (g.elements.size() >= 120)
        throw std::logic_error("closure exceeded 120 elements");
      index_of_key[key] = static_cast<int>(g.elements.size());
      g.elements.push_back({next, {}});
      g.parent.push_back(static_cast<int>(head));
      g.parent_letter.push_back(letter);
      std::vector<int> w = base_word;
      w.push_back(letter);
      g.words.push_back(std::move(w));
    }
  }
  if (g.elements.size() != 120)
    throw std::logic_error("closure did not reach 120 elements");

  // labels
  for (GroupElement& e : g.elements) {
    auto it = label_of_key.find(e.mat.key());
    if (it == label_of_key.end())
      throw std::logic_error("element without a label");
    e.label = it->second;
  }

  g.idx_e = 0;
  g.idx_ep = index_of_key.at((-ident).key());
  g.idx_t0 = index_of_key.at(t0.key());
  g.idx_s1 = index_of_key.at(s1.key());

  // multiplication table
  g.product.assign(120, std::vector<int>(120, -1));
  for (int i = 0; i < 120; ++i)
    for (int j = 0; j < 120; ++j) {
      Mat2 pr = g.elements[i].mat * g.elements[j].mat;
      auto it = index_of_key.find(pr.key());
      if (it == index_of_key.end())
        throw std::logic_error("product fell outside the closure");
      g.product[i][j] = it->second;
    }

  g.inverse.assign(120, -1);
  for (int i = 0; i < 120; ++i)
    for (int j = 0; j < 120; ++j)
      if (g.product[i][j] == g.idx_e) {
        g.inverse[i] = j;
        break;
      }

  // conjugacy classes, ordered by least member index
  g.class_of.assign(120, -1);
  for (int i = 0; i < 120; ++i) {
    if (g.class_of[i] >= 0) continue;
    int id = static_cast<int>(g.classes.size());
    std::vector<int> members;
    for (int h = 0; h < 120; ++h) {
      int c = g.product[g.product[h][i]][g.inverse[h]];
      if (g.class_of[c] < 0) {
        g.class_of[c] = id;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    g.classes.push_back(std::move(members));
  }

  return g;
}

}  // namespace

const GroupTable& group() {
  static const GroupTable g = build_group();
  return g;
}

}  // namespace icosa
