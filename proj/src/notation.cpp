#include "icosa/notation.hpp"

#include <stdexcept>
#include <vector>

namespace icosa {

namespace {

long parse_exponent(const std::string& s, std::size_t from) {
  if (from >= s.size()) throw std::invalid_argument("missing exponent in '" + s + "'");
  std::size_t used = 0;
  long k = 0;
  try {
    k = std::stol(s.substr(from), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad exponent in '" + s + "'");
  }
  if (from + used != s.size()) throw std::invalid_argument("bad exponent in '" + s + "'");
  return k;
}

Cyclo parse_factor(const std::string& f) {
  if (f == "i") return consts::im();
  if (f == "q") return consts::q();
  if (f == "sqrt5") return consts::sqrt5();
  if (f == "p") return consts::p();
  if (f.rfind("p^", 0) == 0) return consts::p_pow(parse_exponent(f, 2));
  if (f.rfind("e^", 0) == 0) return consts::eta_pow(2 * parse_exponent(f, 2));
  if (!f.empty() && f.find_first_not_of("0123456789") == std::string::npos) {
    std::size_t used = 0;
    const long v = std::stol(f, &used);
    if (used == f.size()) return Cyclo::from_int(v);
  }
  throw std::invalid_argument("bad coefficient factor '" + f + "'");
}

}  // namespace

Cyclo parse_coeff_token(const std::string& s) {
  if (s == "0") return Cyclo::zero(1);
  std::string body = s;
  bool neg = false;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body.erase(0, 1);
  }
  if (body.empty()) throw std::invalid_argument("empty coefficient token");
  Cyclo v = Cyclo::one();
  std::size_t start = 0;
  while (true) {
    const std::size_t star = body.find('*', start);
    const std::string f =
        (star == std::string::npos) ? body.substr(start) : body.substr(start, star - start);
    v *= parse_factor(f);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return neg ? -v : v;
}

std::string coeff_token(const Cyclo& v) {
  if (v.is_zero()) return "0";
  const Cyclo minus_i = -consts::im();
  const Cyclo inv_sqrt5 = consts::sqrt5().scaled(Rational(1, 5));
  // q^-1 = q p / sqrt5
  const Cyclo inv_q = consts::q() * consts::p() * inv_sqrt5;
  for (int e = 0; e <= 1; ++e) {
    const Cyclo w1 = e ? v * minus_i : v;
    for (int f = 0; f <= 1; ++f) {
      const Cyclo w2 = f ? w1 * inv_sqrt5 : w1;
      for (int k = -2; k <= 2; ++k) {
        const Cyclo w3 = w2 * consts::eta_pow(-2 * k);
        for (int h = 0; h <= 1; ++h) {
          Cyclo w4 = h ? w3 * inv_q : w3;
          w4 *= consts::p_pow(8);
          const Cyclo pinv = consts::p_inv();
          for (int m = -8; m <= 8; ++m) {
            if (w4.is_rational()) {
              Rational r = w4.as_rational();
              const bool neg = r < 0;
              if (neg) r = -r;
              if (r.get_den() != 1)
                throw std::invalid_argument("coefficient has a rational part that is not integral");
              std::vector<std::string> parts;
              if (e) parts.push_back("i");
              if (r != 1) parts.push_back(r.get_num().get_str());
              if (f) parts.push_back("sqrt5");
              if (k != 0) parts.push_back("e^" + std::to_string(k));
              if (h) parts.push_back("q");
              if (m == 1)
                parts.push_back("p");
              else if (m != 0)
                parts.push_back("p^" + std::to_string(m));
              std::string out = neg ? "-" : "";
              if (parts.empty()) return out + "1";
              for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) out += '*';
                out += parts[i];
              }
              return out;
            }
            w4 *= pinv;
          }
        }
      }
    }
  }
  throw std::invalid_argument("value is not a monomial in the table alphabet");
}

std::string coeff_token_latex(const std::string& token) {
  if (token == "0") return "0";
  std::string body = token;
  std::string out;
  if (!body.empty() && body[0] == '-') {
    out += '-';
    body.erase(0, 1);
  }
  std::size_t start = 0;
  bool first = true;
  while (start <= body.size()) {
    const std::size_t star = body.find('*', start);
    const std::string f =
        (star == std::string::npos) ? body.substr(start) : body.substr(start, star - start);
    if (!first) out += "\\,";
    first = false;
    if (f == "sqrt5")
      out += "\\sqrt{5}";
    else if (f.rfind("e^", 0) == 0)
      out += "\\eta^{" + f.substr(2) + "}";
    else if (f.rfind("p^", 0) == 0)
      out += "p^{" + f.substr(2) + "}";
    else
      out += f;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return out;
}

}  // namespace icosa
