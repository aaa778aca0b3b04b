#include "icosa/cliapp.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "icosa/groupspace.hpp"
#include "icosa/notation.hpp"
#include "icosa/verify.hpp"

namespace icosa {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr long kConductor = 20;

struct OutputCfg {
  std::string format = "text";
  std::string mode = "exact";
  int digits = 12;
  std::string output;  // empty = stdout

  bool exact() const { return mode == "exact"; }
  int effective_digits() const { return exact() ? 12 : digits; }
};

// ---- deterministic number and value rendering ----

std::string fmt_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

double rounded(double v, int digits) {
  return std::strtod(fmt_double(v, digits).c_str(), nullptr);
}

std::string fmt_complex(std::pair<double, double> z, int digits) {
  const std::string re = fmt_double(z.first, digits);
  const std::string im = fmt_double(z.second, digits);
  if (im == "0") return re;
  std::string out = re == "0" ? "" : re;
  if (!out.empty() && im[0] != '-') out += '+';
  return out + im + "i";
}

std::string cyclo_cell(const Cyclo& v, const OutputCfg& cfg) {
  if (!cfg.exact()) return fmt_complex(v.to_complex(), cfg.digits);
  try {
    return coeff_token(v);
  } catch (const std::exception&) {
    return v.exact_string();
  }
}

// latex sticks to the token vocabulary and falls back to decimals, so the
// cells stay typesettable
std::string cyclo_cell_latex(const Cyclo& v, const OutputCfg& cfg) {
  try {
    return "$" + coeff_token_latex(coeff_token(v)) + "$";
  } catch (const std::exception&) {
    return "$" + fmt_complex(v.to_complex(), cfg.effective_digits()) + "$";
  }
}

std::string rad_cell(const RadSum& v, const OutputCfg& cfg) {
  if (cfg.exact()) return v.exact_string();
  return fmt_complex(v.to_complex(), cfg.digits);
}

std::string rad_cell_latex(const RadSum& v, const OutputCfg& cfg) {
  return "$" + fmt_complex(v.to_complex(), cfg.effective_digits()) + "$";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '#' || c == '%' || c == '&' || c == '$') out += '\\';
    out += c;
  }
  return out;
}

// ---- run manifest ----

struct Manifest {
  std::string fingerprint;
  std::string command;
};

std::string convention_fingerprint() {
  static const std::string hex = [] {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
    };
    const GroupTable& g = group();
    for (IrrepName name : kIrrepOrder) {
      const IrrepSpec& spec = irrep(name);
      feed(irrep_ascii(name));
      feed(std::to_string(spec.dim));
      for (int e : {g.idx_t0, g.idx_s1, g.idx_ep})
        for (int r = 0; r < spec.dim; ++r)
          for (int c = 0; c < spec.dim; ++c) feed(spec.at(e).at(r, c).exact_string());
    }
    for (const Axis& a : axes()) {
      feed(std::to_string(static_cast<int>(a.family)));
      feed(std::to_string(a.index));
      feed(a.cos_polar.exact_string());
      feed(a.sin_polar.exact_string());
      feed(a.azimuth.exact_string());
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
  }();
  return hex;
}

Manifest make_manifest(int argc, char** argv) {
  Manifest m;
  m.fingerprint = convention_fingerprint();
  m.command = "icosa";
  for (int i = 1; i < argc; ++i) m.command += std::string(" ") + argv[i];
  return m;
}

ordered_json manifest_json(const Manifest& m) {
  return ordered_json{{"tool", "icosa"},
                      {"version", kVersion},
                      {"conductor", kConductor},
                      {"fingerprint", m.fingerprint},
                      {"command", m.command}};
}

void manifest_comments(std::ostream& os, const Manifest& m, const char* lead) {
  os << lead << " icosa " << kVersion << '\n';
  os << lead << " conductor " << kConductor << '\n';
  os << lead << " fingerprint " << m.fingerprint << '\n';
  os << lead << " command " << m.command << '\n';
}

// ---- tabular emission ----

struct TableOut {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
};

void emit_csv(std::ostream& os, const Manifest& m, const TableOut& t) {
  manifest_comments(os, m, "#");
  for (size_t i = 0; i < t.cols.size(); ++i) os << (i ? "," : "") << t.cols[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
}

void emit_text(std::ostream& os, const Manifest& m, const TableOut& t) {
  manifest_comments(os, m, "#");
  std::vector<size_t> w(t.cols.size());
  for (size_t i = 0; i < t.cols.size(); ++i) w[i] = t.cols[i].size();
  for (const auto& row : t.rows)
    for (size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << cells[i];
      if (i + 1 < cells.size())
        os << std::string(w[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(t.cols);
  for (const auto& row : t.rows) line(row);
}

void emit_latex(std::ostream& os, const Manifest& m, const TableOut& t) {
  manifest_comments(os, m, "%");
  os << "\\begin{tabular}{" << std::string(t.cols.size(), 'l') << "}\n";
  for (size_t i = 0; i < t.cols.size(); ++i)
    os << (i ? " & " : "") << latex_escape(t.cols[i]);
  os << " \\\\\n\\hline\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << row[i];
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
}

void emit(std::ostream& os, const OutputCfg& cfg, const Manifest& m,
          const TableOut& t, const ordered_json& data) {
  if (cfg.format == "json") {
    ordered_json root;
    root["manifest"] = manifest_json(m);
    root.update(data);
    os << root.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    emit_csv(os, m, t);
  } else if (cfg.format == "latex") {
    emit_latex(os, m, t);
  } else {
    emit_text(os, m, t);
  }
}

// ---- doubled spin labels across the interface ----

std::string j_string(long twoj) {
  if (twoj % 2 == 0) return std::to_string(twoj / 2);
  return std::to_string(twoj) + "/2";
}

struct SpinArg {
  long twoj = -1;
  long j = -1;
  bool half = false;

  // doubled label from whichever flag was supplied; -1 on a bad combination
  long resolve(std::string& err) const {
    if (twoj >= 0 && j >= 0) {
      err = "--twoj and --j are mutually exclusive";
      return -1;
    }
    if (twoj >= 0) {
      if (half) {
        err = "--half applies to --j, not --twoj";
        return -1;
      }
      return twoj;
    }
    if (j >= 0) return half ? j : 2 * j;
    err = "one of --twoj or --j is required";
    return -1;
  }
};

void add_spin_options(CLI::App* sub, SpinArg& s) {
  sub->add_option("--twoj", s.twoj, "doubled spin label (7 means j = 7/2)");
  sub->add_option("--j", s.j, "spin; doubled when --half is set");
  sub->add_flag("--half", s.half, "read --j as a doubled half-integer label");
}

// ---- subcommand bodies ----

int cmd_elements(std::ostream& os, const OutputCfg& cfg, const Manifest& man) {
  const GroupTable& g = group();
  TableOut t{{"index", "label", "class"}, {}};
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < g.size(); ++i) {
    const std::string label = g.elements[static_cast<size_t>(i)].label.str();
    const int cls = g.class_of[static_cast<size_t>(i)];
    t.rows.push_back({std::to_string(i),
                      cfg.format == "latex" ? latex_escape(label) : label,
                      std::to_string(cls)});
    arr.push_back({{"index", i}, {"label", label}, {"class", cls}});
  }
  emit(os, cfg, man, t, {{"elements", arr}});
  return 0;
}

int cmd_classes(std::ostream& os, const OutputCfg& cfg, const Manifest& man) {
  const GroupTable& g = group();
  TableOut t{{"index", "size", "representative"}, {}};
  ordered_json arr = ordered_json::array();
  for (size_t k = 0; k < g.classes.size(); ++k) {
    const auto& cls = g.classes[k];
    const std::string rep = g.elements[static_cast<size_t>(cls[0])].label.str();
    t.rows.push_back({std::to_string(k), std::to_string(cls.size()),
                      cfg.format == "latex" ? latex_escape(rep) : rep});
    ordered_json members = ordered_json::array();
    for (int e : cls) members.push_back(g.elements[static_cast<size_t>(e)].label.str());
    arr.push_back({{"index", k},
                   {"size", cls.size()},
                   {"representative", rep},
                   {"elements", members}});
  }
  emit(os, cfg, man, t, {{"classes", arr}});
  return 0;
}

int cmd_irreps(std::ostream& os, const OutputCfg& cfg, const Manifest& man,
               IrrepName gamma) {
  const GroupTable& g = group();
  const IrrepSpec& spec = irrep(gamma);
  TableOut t{{"element", "label", "row", "col", "value"}, {}};
  ordered_json mats = ordered_json::array();
  for (int e = 0; e < g.size(); ++e) {
    const std::string label = g.elements[static_cast<size_t>(e)].label.str();
    ordered_json entries = ordered_json::array();
    for (int r = 0; r < spec.dim; ++r) {
      ordered_json jrow = ordered_json::array();
      for (int c = 0; c < spec.dim; ++c) {
        const Cyclo& v = spec.at(e).at(r, c);
        t.rows.push_back({std::to_string(e),
                          cfg.format == "latex" ? latex_escape(label) : label,
                          std::to_string(spec.rows[static_cast<size_t>(r)]),
                          std::to_string(spec.rows[static_cast<size_t>(c)]),
                          cfg.format == "latex" ? cyclo_cell_latex(v, cfg)
                                                : cyclo_cell(v, cfg)});
        if (cfg.exact())
          jrow.push_back(cyclo_cell(v, cfg));
        else {
          auto [re, im] = v.to_complex();
          jrow.push_back({rounded(re, cfg.digits), rounded(im, cfg.digits)});
        }
      }
      entries.push_back(jrow);
    }
    mats.push_back({{"element", e}, {"label", label}, {"entries", entries}});
  }
  ordered_json data{{"irrep",
                     {{"name", irrep_ascii(gamma)},
                      {"dim", spec.dim},
                      {"double_valued", spec.double_valued},
                      {"conductor", spec.conductor},
                      {"rows", spec.rows},
                      {"matrices", mats}}}};
  emit(os, cfg, man, t, data);
  return 0;
}

int cmd_charactertable(std::ostream& os, const OutputCfg& cfg,
                       const Manifest& man) {
  const GroupTable& g = group();
  const CharacterTable& ct = character_table();
  TableOut t;
  t.cols.push_back("irrep");
  ordered_json classes = ordered_json::array();
  for (size_t k = 0; k < g.classes.size(); ++k) {
    const std::string rep = g.elements[static_cast<size_t>(g.classes[k][0])].label.str();
    t.cols.push_back(rep);
    classes.push_back(
        {{"index", k}, {"size", g.classes[k].size()}, {"representative", rep}});
  }
  ordered_json rows = ordered_json::array();
  for (size_t gi = 0; gi < kIrrepOrder.size(); ++gi) {
    std::vector<std::string> cells{irrep_ascii(kIrrepOrder[gi])};
    ordered_json vals = ordered_json::array();
    for (size_t k = 0; k < g.classes.size(); ++k) {
      const Cyclo& v = ct.chi[gi][k];
      cells.push_back(cfg.format == "latex" ? cyclo_cell_latex(v, cfg)
                                            : cyclo_cell(v, cfg));
      vals.push_back(cyclo_cell(v, cfg));
    }
    if (cfg.format == "latex") cells[0] = latex_escape(cells[0]);
    t.rows.push_back(cells);
    rows.push_back({{"irrep", irrep_ascii(kIrrepOrder[gi])}, {"values", vals}});
  }
  emit(os, cfg, man, t, {{"classes", classes}, {"characters", rows}});
  return 0;
}

int cmd_table1(std::ostream& os, const OutputCfg& cfg, const Manifest& man,
               std::optional<IrrepName> only) {
  TableOut t{{"gamma", "two_mu", "two_nu", "c1", "c2", "c3", "c4", "N"}, {}};
  ordered_json arr = ordered_json::array();
  for (IrrepName gamma : kIrrepOrder) {
    if (only && *only != gamma) continue;
    for (const IrreducibleBasis& b : irreducible_family(gamma)) {
      std::vector<std::string> cells{irrep_ascii(gamma), std::to_string(b.two_mu),
                                     std::to_string(b.two_nu)};
      ordered_json c = ordered_json::array();
      for (int i = 0; i < 4; ++i) {
        const Cyclo& v = b.coeffs[static_cast<size_t>(i)];
        cells.push_back(cfg.format == "latex" ? cyclo_cell_latex(v, cfg)
                                              : cyclo_cell(v, cfg));
        c.push_back(cyclo_cell(v, cfg));
      }
      cells.push_back(std::to_string(b.normsq));
      if (cfg.format == "latex") cells[0] = latex_escape(cells[0]);
      t.rows.push_back(cells);
      arr.push_back({{"gamma", irrep_ascii(gamma)},
                     {"two_mu", b.two_mu},
                     {"two_nu", b.two_nu},
                     {"c", c},
                     {"N", b.normsq}});
    }
  }
  emit(os, cfg, man, t, {{"table", arr}});
  return 0;
}

int cmd_multiplicity(std::ostream& os, const OutputCfg& cfg,
                     const Manifest& man, long twoj) {
  const auto counts = multiplicities(twoj);
  TableOut t{{"gamma", "count"}, {}};
  ordered_json arr = ordered_json::array();
  long total = 0;
  for (IrrepName gamma : kIrrepOrder) {
    const auto it = counts.find(gamma);
    if (it == counts.end() || it->second == 0) continue;
    t.rows.push_back({irrep_ascii(gamma), std::to_string(it->second)});
    arr.push_back({{"gamma", irrep_ascii(gamma)}, {"count", it->second}});
    total += it->second * irrep(gamma).dim;
  }
  ordered_json data{{"j", j_string(twoj)},
                    {"two_j", twoj},
                    {"multiplicities", arr},
                    {"dimension", total}};
  emit(os, cfg, man, t, data);
  return 0;
}

int cmd_djmatrix(std::ostream& os, const OutputCfg& cfg, const Manifest& man,
                 long twoj, const std::string& element) {
  const GroupTable& g = group();
  const int e = g.index_of(element);
  if (e < 0) {
    std::cerr << "error: unknown element label '" << element << "'\n";
    return 2;
  }
  const auto d = subduced_Dj(twoj, e);
  TableOut t{{"two_nu", "two_mu", "value"}, {}};
  ordered_json entries = ordered_json::array();
  for (size_t r = 0; r < d.size(); ++r)
    for (size_t c = 0; c < d[r].size(); ++c) {
      const long nu = twoj - 2 * static_cast<long>(r);
      const long mu = twoj - 2 * static_cast<long>(c);
      t.rows.push_back({std::to_string(nu), std::to_string(mu),
                        cfg.format == "latex" ? rad_cell_latex(d[r][c], cfg)
                                              : rad_cell(d[r][c], cfg)});
      ordered_json cell{{"two_nu", nu}, {"two_mu", mu}};
      if (cfg.exact()) cell["exact"] = d[r][c].exact_string();
      auto [re, im] = d[r][c].to_complex();
      cell["re"] = rounded(re, cfg.effective_digits());
      cell["im"] = rounded(im, cfg.effective_digits());
      entries.push_back(cell);
    }
  ordered_json data{{"j", j_string(twoj)},
                    {"two_j", twoj},
                    {"element", {{"index", e}, {"label", element}}},
                    {"entries", entries}};
  emit(os, cfg, man, t, data);
  return 0;
}

ordered_json amp_json(long nu, const RadSum& v, const OutputCfg& cfg) {
  ordered_json a{{"nu", nu}};
  if (cfg.exact()) a["exact"] = v.exact_string();
  auto [re, im] = v.to_complex();
  a["re"] = rounded(re, cfg.effective_digits());
  a["im"] = rounded(im, cfg.effective_digits());
  return a;
}

// amplitudes descending in nu, matching the printed table convention
std::vector<std::pair<long, RadSum>> state_amps(const SpinState& s) {
  std::vector<std::pair<long, RadSum>> out(s.amp.begin(), s.amp.end());
  std::reverse(out.begin(), out.end());
  return out;
}

int cmd_combine(std::ostream& os, const OutputCfg& cfg, const Manifest& man,
                IrrepName gamma, long twoj, const std::string& parity,
                std::optional<long> mu, std::optional<long> lambda,
                std::optional<long> rho) {
  std::string name = irrep_ascii(gamma);
  if (parity == "even")
    name = parity_label(gamma, Parity::even);
  else if (parity == "odd")
    name = parity_label(gamma, Parity::odd);

  const bool single = mu.has_value() || lambda.has_value() || rho.has_value();
  if (single && !(mu && lambda && rho)) {
    std::cerr << "error: --mu, --lambda, and --rho must be given together\n";
    return 2;
  }

  if (single) {
    const SpinState state = combine(gamma, *mu, *lambda, twoj, *rho);
    TableOut t{{"two_nu", "amplitude"}, {}};
    ordered_json amps = ordered_json::array();
    for (const auto& [nu, a] : state_amps(state)) {
      t.rows.push_back({std::to_string(nu),
                        cfg.format == "latex" ? rad_cell_latex(a, cfg)
                                              : rad_cell(a, cfg)});
      amps.push_back(amp_json(nu, a, cfg));
    }
    ordered_json data{{"gamma", name},     {"j", j_string(twoj)},
                      {"two_j", twoj},     {"mu", *mu},
                      {"lambda", *lambda}, {"rho", *rho},
                      {"amplitudes", amps}};
    emit(os, cfg, man, t, data);
    return 0;
  }

  const AdaptedBasis basis = basis_set(gamma, twoj);
  const IrrepSpec& spec = irrep(gamma);
  TableOut t{{"copy", "two_lambda", "two_rho", "two_mu", "two_nu", "amplitude",
              "rawscale"},
             {}};
  ordered_json copies = ordered_json::array();
  for (size_t ci = 0; ci < basis.copies.size(); ++ci) {
    const AdaptedFamily& fam = basis.copies[ci];
    const std::string scale = cfg.format == "latex"
                                  ? rad_cell_latex(fam.rawscale, cfg)
                                  : rad_cell(fam.rawscale, cfg);
    ordered_json rows = ordered_json::array();
    for (size_t ri = 0; ri < fam.rows.size(); ++ri) {
      const long mulab = spec.rows[ri];
      ordered_json amps = ordered_json::array();
      for (const auto& [nu, a] : state_amps(fam.rows[ri])) {
        t.rows.push_back({std::to_string(ci), std::to_string(fam.two_lambda),
                          std::to_string(fam.two_rho), std::to_string(mulab),
                          std::to_string(nu),
                          cfg.format == "latex" ? rad_cell_latex(a, cfg)
                                                : rad_cell(a, cfg),
                          scale});
        amps.push_back(amp_json(nu, a, cfg));
      }
      rows.push_back({{"mu", mulab}, {"amplitudes", amps}});
    }
    ordered_json rawscale;
    if (cfg.exact()) rawscale["exact"] = fam.rawscale.exact_string();
    auto [re, im] = fam.rawscale.to_complex();
    rawscale["re"] = rounded(re, cfg.effective_digits());
    rawscale["im"] = rounded(im, cfg.effective_digits());
    copies.push_back({{"rows", rows},
                      {"seed", {{"lambda", fam.two_lambda}, {"rho", fam.two_rho}}},
                      {"rawscale", rawscale}});
  }
  ordered_json data{{"gamma", name},
                    {"j", j_string(twoj)},
                    {"two_j", twoj},
                    {"copies", copies}};
  emit(os, cfg, man, t, data);
  return 0;
}

int cmd_verify(std::ostream& os, const OutputCfg& cfg, const Manifest& man,
               const std::string& level) {
  const auto results = level == "full" ? verify_full() : verify_fast();
  bool ok = true;
  for (const CheckResult& r : results) {
    ok = ok && r.pass;
    std::fprintf(stderr, "# %s: %.2fs\n", r.name.c_str(), r.seconds);
  }
  if (cfg.format == "json") {
    ordered_json root;
    root["manifest"] = manifest_json(man);
    root["level"] = level;
    ordered_json checks = ordered_json::array();
    for (const CheckResult& r : results)
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    root["checks"] = checks;
    root["ok"] = ok;
    os << root.dump(2) << '\n';
  } else {
    TableOut t{{"status", "name", "detail"}, {}};
    for (const CheckResult& r : results)
      t.rows.push_back({r.pass ? "pass" : "FAIL", r.name, r.detail});
    if (cfg.format == "csv")
      emit_csv(os, man, t);
    else if (cfg.format == "latex")
      emit_latex(os, man, t);
    else
      emit_text(os, man, t);
  }
  return ok ? 0 : 1;
}

std::optional<IrrepName> parse_gamma(const std::string& s, bool required) {
  if (s.empty()) {
    if (required) std::cerr << "error: --gamma is required\n";
    return std::nullopt;
  }
  auto g = irrep_from_string(s);
  if (!g) std::cerr << "error: unknown representation '" << s << "'\n";
  return g;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exact tables and symmetry-adapted spin combinations for the "
               "binary icosahedral group"};
  app.require_subcommand(1);

  OutputCfg cfg;
  SpinArg spin_mult, spin_dj, spin_comb;
  std::string gamma_irreps, gamma_table, gamma_comb;
  std::string element, parity, level = "fast";
  long opt_mu = 0, opt_lambda = 0, opt_rho = 0;
  bool has_mu = false, has_lambda = false, has_rho = false;

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex", "text"}))
        ->envname("ICOSA_FORMAT");
    sub->add_option("--mode", cfg.mode, "exact strings or decimal values")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--digits", cfg.digits, "significant digits in float mode")
        ->check(CLI::PositiveNumber);
    sub->add_option("--output", cfg.output, "write to a file instead of stdout");
  };

  CLI::App* sc_elements = app.add_subcommand("elements", "list the 120 group elements");
  CLI::App* sc_classes = app.add_subcommand("classes", "list the conjugacy classes");
  CLI::App* sc_irreps =
      app.add_subcommand("irreps", "matrices of one irreducible representation");
  sc_irreps->add_option("--gamma", gamma_irreps, "representation name")->required();
  CLI::App* sc_chartab =
      app.add_subcommand("charactertable", "characters by class");
  CLI::App* sc_table1 =
      app.add_subcommand("table1", "coefficients of the irreducible bases");
  sc_table1->add_option("--gamma", gamma_table, "restrict to one representation");
  CLI::App* sc_mult = app.add_subcommand(
      "multiplicity", "irreducible content of a spin representation");
  add_spin_options(sc_mult, spin_mult);
  CLI::App* sc_dj =
      app.add_subcommand("djmatrix", "spin-j matrix of a group element");
  add_spin_options(sc_dj, spin_dj);
  sc_dj->add_option("--element", element, "element label, e.g. T1^2 or S5'")
      ->required();
  CLI::App* sc_comb = app.add_subcommand(
      "combine", "symmetry-adapted combinations of spin states");
  sc_comb->add_option("--gamma", gamma_comb, "representation name")->required();
  add_spin_options(sc_comb, spin_comb);
  sc_comb->add_option("--mu", opt_mu, "doubled row label");
  sc_comb->add_option("--lambda", opt_lambda, "doubled projector label");
  sc_comb->add_option("--rho", opt_rho, "doubled magnetic label of the seed");
  sc_comb->add_option("--parity", parity, "decorate the name for the parity double")
      ->check(CLI::IsMember({"even", "odd"}));
  CLI::App* sc_verify = app.add_subcommand("verify", "run the self-check suites");
  sc_verify->add_option("level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));

  for (CLI::App* sub : {sc_elements, sc_classes, sc_irreps, sc_chartab, sc_table1,
                        sc_mult, sc_dj, sc_comb, sc_verify})
    add_output(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  has_mu = sc_comb->count("--mu") > 0;
  has_lambda = sc_comb->count("--lambda") > 0;
  has_rho = sc_comb->count("--rho") > 0;

  const Manifest man = make_manifest(argc, argv);
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      std::cerr << "error: cannot open output file '" << cfg.output << "'\n";
      return 2;
    }
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;

  try {
    if (app.got_subcommand(sc_elements)) return cmd_elements(os, cfg, man);
    if (app.got_subcommand(sc_classes)) return cmd_classes(os, cfg, man);
    if (app.got_subcommand(sc_irreps)) {
      auto g = parse_gamma(gamma_irreps, true);
      return g ? cmd_irreps(os, cfg, man, *g) : 2;
    }
    if (app.got_subcommand(sc_chartab)) return cmd_charactertable(os, cfg, man);
    if (app.got_subcommand(sc_table1)) {
      std::optional<IrrepName> only;
      if (!gamma_table.empty()) {
        only = parse_gamma(gamma_table, false);
        if (!only) return 2;
      }
      return cmd_table1(os, cfg, man, only);
    }
    if (app.got_subcommand(sc_mult)) {
      std::string err;
      const long twoj = spin_mult.resolve(err);
      if (twoj < 0) {
        std::cerr << "error: " << err << '\n';
        return 2;
      }
      return cmd_multiplicity(os, cfg, man, twoj);
    }
    if (app.got_subcommand(sc_dj)) {
      std::string err;
      const long twoj = spin_dj.resolve(err);
      if (twoj < 0) {
        std::cerr << "error: " << err << '\n';
        return 2;
      }
      return cmd_djmatrix(os, cfg, man, twoj, element);
    }
    if (app.got_subcommand(sc_comb)) {
      auto g = parse_gamma(gamma_comb, true);
      if (!g) return 2;
      std::string err;
      const long twoj = spin_comb.resolve(err);
      if (twoj < 0) {
        std::cerr << "error: " << err << '\n';
        return 2;
      }
      return cmd_combine(os, cfg, man, *g, twoj, parity,
                         has_mu ? std::optional<long>(opt_mu) : std::nullopt,
                         has_lambda ? std::optional<long>(opt_lambda) : std::nullopt,
                         has_rho ? std::optional<long>(opt_rho) : std::nullopt);
    }
    if (app.got_subcommand(sc_verify)) return cmd_verify(os, cfg, man, level);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace icosa
