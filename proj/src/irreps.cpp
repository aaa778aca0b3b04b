#include "icosa/irreps.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace icosa {

MatN MatN::identity(int n) {
  MatN m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo::one();
  return m;
}

MatN MatN::zero(int n) {
  MatN m;
  m.n = n;
  m.a.assign(static_cast<size_t>(n) * n, Cyclo::zero(1));
  return m;
}

MatN MatN::operator*(const MatN& o) const {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  MatN r = zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Cyclo& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Cyclo& y = o.at(k, j);
        if (y.is_zero()) continue;
        r.at(i, j) += x * y;
      }
    }
  return r;
}

MatN MatN::operator+(const MatN& o) const {
  if (n != o.n) throw std::invalid_argument("matrix size mismatch");
  MatN r = *this;
  for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
  return r;
}

MatN MatN::operator-() const {
  MatN r = *this;
  for (Cyclo& x : r.a) x = -x;
  return r;
}

MatN MatN::scaled(const Rational& s) const {
  MatN r = *this;
  for (Cyclo& x : r.a) x = x.scaled(s);
  return r;
}

MatN MatN::adjoint() const {
  MatN r = zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i).conj();
  return r;
}

Cyclo MatN::trace() const {
  Cyclo t = Cyclo::zero(1);
  for (int i = 0; i < n; ++i) t += at(i, i);
  return t;
}

bool MatN::operator==(const MatN& o) const {
  if (n != o.n) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != o.a[k]) return false;
  return true;
}

std::string irrep_ascii(IrrepName g) {
  switch (g) {
    case IrrepName::A: return "A";
    case IrrepName::T1: return "T1";
    case IrrepName::T2: return "T2";
    case IrrepName::G: return "G";
    case IrrepName::H: return "H";
    case IrrepName::E1p: return "E1p";
    case IrrepName::E2p: return "E2p";
    case IrrepName::Gp: return "Gp";
    case IrrepName::Ip: return "Ip";
  }
  throw std::logic_error("unreachable");
}

std::string irrep_display(IrrepName g) {
  switch (g) {
    case IrrepName::E1p: return "E1'";
    case IrrepName::E2p: return "E2'";
    case IrrepName::Gp: return "G'";
    case IrrepName::Ip: return "I'";
    default: return irrep_ascii(g);
  }
}

std::string irrep_latex(IrrepName g) {
  switch (g) {
    case IrrepName::A: return "A";
    case IrrepName::T1: return "T_1";
    case IrrepName::T2: return "T_2";
    case IrrepName::G: return "G";
    case IrrepName::H: return "H";
    case IrrepName::E1p: return "E_1'";
    case IrrepName::E2p: return "E_2'";
    case IrrepName::Gp: return "G'";
    case IrrepName::Ip: return "I'";
  }
  throw std::logic_error("unreachable");
}

std::optional<IrrepName> irrep_from_string(const std::string& s) {
  for (IrrepName g : kIrrepOrder)
    if (s == irrep_ascii(g) || s == irrep_display(g)) return g;
  return std::nullopt;
}

namespace {

struct Meta {
  int dim;
  bool double_valued;
  long conductor;
  std::vector<int> rows;  // doubled, descending
};

const Meta& meta(IrrepName g) {
  static const std::map<IrrepName, Meta> table = {
      {IrrepName::A, {1, false, 1, {0}}},
      {IrrepName::T1, {3, false, 40, {2, 0, -2}}},
      {IrrepName::T2, {3, false, 40, {4, 0, -4}}},
      {IrrepName::G, {4, false, 5, {4, 2, -2, -4}}},
      {IrrepName::H, {5, false, 120, {4, 2, 0, -2, -4}}},
      {IrrepName::E1p, {2, true, 20, {1, -1}}},
      {IrrepName::E2p, {2, true, 20, {3, -3}}},
      {IrrepName::Gp, {4, true, 60, {3, 1, -1, -3}}},
      {IrrepName::Ip, {6, true, 40, {5, 3, 1, -1, -3, -5}}},
  };
  return table.at(g);
}

MatN with_conductor(MatN m, long cond) {
  for (Cyclo& x : m.a) x = to_conductor(x, cond);
  return m;
}

MatN diag_eta(const Meta& mt) {
  MatN t = MatN::zero(mt.dim);
  for (int i = 0; i < mt.dim; ++i)
    t.at(i, i) = consts::eta_pow(mt.rows[static_cast<size_t>(i)]);
  return with_conductor(std::move(t), mt.conductor);
}

MatN from_list(int n, std::vector<Cyclo> entries, const Cyclo& scale, long cond) {
  MatN m;
  m.n = n;
  m.a.reserve(entries.size());
  for (const Cyclo& e : entries) m.a.push_back(to_conductor(e * scale, cond));
  return m;
}

}  // namespace

IrrepGenerators reference_generators(IrrepName g) {
  using namespace consts;
  const Meta& mt = meta(g);
  const Cyclo one = Cyclo::one();
  const Cyclo r2 = Cyclo::sqrt_int(2);
  const Cyclo r3 = Cyclo::sqrt_int(3);
  const Cyclo r6 = Cyclo::sqrt_int(6);
  const Cyclo r10 = Cyclo::sqrt_int(10);
  const Cyclo s5i = sqrt5().scaled(Rational(1, 5));  // 1/sqrt5
  const Cyclo iq = im() * q();

  IrrepGenerators out;
  out.dim = mt.dim;
  out.t0 = diag_eta(mt);
  out.ep = MatN::identity(mt.dim);
  if (mt.double_valued) out.ep = -out.ep;

  switch (g) {
    case IrrepName::A:
      out.s1 = MatN::identity(1);
      break;
    case IrrepName::T1:
      out.s1 = from_list(3,
          {-p_inv(), -r2, -p(),
           -r2, one, r2,
           -p(), r2, -p_inv()},
          s5i, mt.conductor);
      break;
    case IrrepName::T2:
      out.s1 = from_list(3,
          {-p(), r2, p_inv(),
           r2, -one, r2,
           p_inv(), r2, -p()},
          s5i, mt.conductor);
      break;
    case IrrepName::G:
      out.s1 = from_list(4,
          {-one, -p(), -p_inv(), one,
           -p(), one, -one, -p_inv(),
           -p_inv(), -one, one, -p(),
           one, -p_inv(), -p(), -one},
          s5i, mt.conductor);
      break;
    case IrrepName::H:
      out.s1 = from_list(5,
          {p_pow(-2), p_inv().scaled(2), r6, p().scaled(2), p_pow(2),
           p_inv().scaled(2), p_pow(2), -r6, -p_pow(-2), -p().scaled(2),
           r6, -r6, -one, r6, r6,
           p().scaled(2), -p_pow(-2), r6, p_pow(2), -p_inv().scaled(2),
           p_pow(2), -p().scaled(2), r6, -p_inv().scaled(2), p_pow(-2)},
          Cyclo::from_rational(Rational(1, 5)), mt.conductor);
      break;
    case IrrepName::E1p:
      out.s1 = from_list(2,
          {-one, -p(),
           -p(), one},
          iq * s5i, mt.conductor);
      break;
    case IrrepName::E2p:
      out.s1 = from_list(2,
          {-p(), -one,
           -one, p()},
          iq * s5i, mt.conductor);
      break;
    case IrrepName::Gp:
      out.s1 = from_list(4,
          {p_inv(), r3, r3 * p(), p_pow(2),
           r3, -p_pow(2), -p_inv(), -r3 * p(),
           r3 * p(), -p_inv(), p_pow(2), r3,
           p_pow(2), -r3 * p(), r3, -p_inv()},
          iq.scaled(Rational(1, 5)), mt.conductor);
      break;
    case IrrepName::Ip: {
      const Cyclo r5 = sqrt5();
      out.s1 = from_list(6,
          {-p_pow(-2), -r5 * p_inv(), -r10, -r10 * p(), -r5 * p_pow(2), -p_pow(3),
           -r5 * p_inv(), -r5 * p(), r10 * p(), r10, r5, r5 * p_pow(2),
           -r10, r10 * p(), r5, -r5 * p(), -r10, -r10 * p(),
           -r10 * p(), r10, -r5 * p(), -r5, r10 * p(), r10,
           -r5 * p_pow(2), r5, -r10, r10 * p(), r5 * p(), -r5 * p_inv(),
           -p_pow(3), r5 * p_pow(2), -r10 * p(), r10, -r5 * p_inv(), p_pow(-2)},
          (iq * r5).scaled(Rational(1, 25)), mt.conductor);
      break;
    }
  }
  return out;
}

std::vector<MatN> extend_to_all(const IrrepGenerators& gens) {
  const GroupTable& G = group();
  std::array<const MatN*, 3> gen = {&gens.t0, &gens.s1, &gens.ep};
  std::vector<MatN> mats;
  mats.reserve(static_cast<size_t>(G.size()));
  for (size_t i = 0; i < static_cast<size_t>(G.size()); ++i) {
    if (G.parent[i] < 0) {
      mats.push_back(MatN::identity(gens.dim));
      continue;
    }
    mats.push_back(mats[static_cast<size_t>(G.parent[i])] *
                   *gen[static_cast<size_t>(G.parent_letter[i])]);
  }
  return mats;
}

const IrrepSpec& irrep(IrrepName g) {
  static std::mutex mu;
  static std::map<IrrepName, std::unique_ptr<IrrepSpec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g);
  if (it != cache.end()) return *it->second;

  const Meta& mt = meta(g);
  auto spec = std::make_unique<IrrepSpec>();
  spec->name = g;
  spec->dim = mt.dim;
  spec->double_valued = mt.double_valued;
  spec->conductor = mt.conductor;
  spec->rows = mt.rows;
  spec->mats = extend_to_all(reference_generators(g));
  for (MatN& m : spec->mats) m = with_conductor(std::move(m), mt.conductor);
  const IrrepSpec& ref = *spec;
  cache[g] = std::move(spec);
  return ref;
}

const CharacterTable& character_table() {
  static CharacterTable table = [] {
    const GroupTable& G = group();
    CharacterTable t;
    for (IrrepName g : kIrrepOrder) {
      const IrrepSpec& spec = irrep(g);
      std::vector<Cyclo> row;
      row.reserve(G.classes.size());
      for (const std::vector<int>& cls : G.classes)
        row.push_back(spec.character(cls.front()));
      t.chi.push_back(std::move(row));
    }
    return t;
  }();
  return table;
}

Cyclo su2_character(long twoj, int element) {
  if (twoj < 0) throw std::invalid_argument("negative spin label");
  const Mat2& u = group().elements[static_cast<size_t>(element)].mat;
  const Cyclo t = u.m[0] + u.m[3];
  Cyclo prev = Cyclo::one().embedded(20);  // chi for twoj = 0
  if (twoj == 0) return prev;
  Cyclo cur = t;  // twoj = 1
  for (long k = 2; k <= twoj; ++k) {
    Cyclo next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::map<IrrepName, long> multiplicities(long twoj) {
  const GroupTable& G = group();
  std::map<IrrepName, long> out;
  std::vector<Cyclo> chi_j;
  chi_j.reserve(G.classes.size());
  for (const std::vector<int>& cls : G.classes)
    chi_j.push_back(su2_character(twoj, cls.front()));
  const CharacterTable& ct = character_table();
  for (size_t gi = 0; gi < kIrrepOrder.size(); ++gi) {
    Cyclo acc = Cyclo::zero(1);
    for (size_t c = 0; c < G.classes.size(); ++c) {
      Rational size(static_cast<long>(G.classes[c].size()));
      acc += (chi_j[c] * ct.chi[gi][c].conj()).scaled(size);
    }
    acc = acc.scaled(Rational(1, 120));
    if (!acc.is_rational())
      throw std::logic_error("multiplicity came out irrational");
    Rational r = acc.as_rational();
    if (r.get_den() != 1 || sgn(r) < 0)
      throw std::logic_error("multiplicity came out non-integral");
    out[kIrrepOrder[gi]] = r.get_num().get_si();
  }
  return out;
}

Cyclo class_operator_eigenvalue(IrrepName g) {
  const GroupTable& G = group();
  const IrrepSpec& spec = irrep(g);
  int cls = G.class_of[static_cast<size_t>(G.idx_t0)];
  Cyclo acc = Cyclo::zero(1);
  for (int e : G.classes[static_cast<size_t>(cls)]) acc += spec.character(e);
  return acc.scaled(Rational(1, spec.dim));
}

std::vector<std::vector<RadSum>> subduced_Dj(long twoj, int element) {
  const Mat2& u = group().elements[static_cast<size_t>(element)].mat;
  size_t n = static_cast<size_t>(twoj) + 1;
  std::vector<std::vector<RadSum>> out(n, std::vector<RadSum>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      out[r][c] = rotation_entry(twoj, twoj - 2 * static_cast<long>(r),
                                 twoj - 2 * static_cast<long>(c), u.m[0], u.m[1],
                                 u.m[2], u.m[3]);
  return out;
}

}  // namespace icosa
