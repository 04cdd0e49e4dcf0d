#pragma once

// Command dispatch for the toolkit driver: configuration validation, one
// runner per command (verify-bound, scan, extremal, sample, revert, cases),
// and rendering to JSON, CSV or plain text. Every runner fills a Report whose
// assertions decide the process exit code: zero iff every assertion passed.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/bound_search.hpp"
#include "hankel/caratheodory.hpp"
#include "hankel/extremal.hpp"
#include "hankel/functionals.hpp"
#include "hankel/report.hpp"
#include "hankel/sampling.hpp"
#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

enum class Command { verify_bound, scan, extremal, sample, revert, cases };
enum class OutputFormat { json, csv, text };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::verify_bound:
      return "verify-bound";
    case Command::scan:
      return "scan";
    case Command::extremal:
      return "extremal";
    case Command::sample:
      return "sample";
    case Command::revert:
      return "revert";
    default:
      return "cases";
  }
}

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    default:
      return "text";
  }
}

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format: '" + std::string(s) + "'");
}

struct RunConfig {
  Command command = Command::verify_bound;
  double grid_step = 0.01;
  bool refine = false;
  uint64_t samples = 10000;
  uint64_t seed = 1;
  int atoms = 3;
  OutputFormat output_format = OutputFormat::json;
  bool exact = false;
  double tolerance = 1e-9;
  int workers = 0;
  std::string coeffs;  // revert input: "a2,a3,a4,a5"

  void validate() const {
    if (!(grid_step > 0.0) || grid_step > 0.05)
      throw std::invalid_argument("invalid grid step: must lie in (0, 0.05]");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (atoms < 1 || atoms > 64) throw std::invalid_argument("atoms must lie in [1, 64]");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (workers < 0 || workers > 64) throw std::invalid_argument("workers must lie in [0, 64]");
  }
};

namespace detail {

inline std::string format_complex(const std::complex<double>& z) {
  std::string s = format_double(z.real());
  s += z.imag() < 0 ? '-' : '+';
  s += format_double(std::abs(z.imag()));
  s += 'i';
  return s;
}

inline JsonValue certificate_json(const BoundCertificate& cert) {
  JsonValue j = JsonValue::object();
  j["form"] = to_string(cert.form);
  j["observed_max"] = cert.observed_max;
  JsonValue at = JsonValue::array();
  for (double v : cert.argmax) at.push_back(v);
  j["argmax"] = std::move(at);
  j["sup_m"] = cert.sup_m;
  j["grid_step"] = cert.grid_step;
  j["lipschitz_slack"] = cert.lipschitz_slack;
  j["induced_h3_bound"] = cert.induced_h3_bound;
  j["grad_norm_bound"] = cert.grad_norm_bound;
  j["grid_points"] = cert.grid_points;
  j["cells"] = cert.cells;
  j["refined"] = cert.refined;
  j["refined_cells"] = cert.refined_cells;
  j["unresolved_cells"] = cert.unresolved_cells;
  return j;
}

inline JsonValue exclusion_json(const ExclusionReport& r) {
  JsonValue j = JsonValue::object();
  j["face"] = to_string(r.face);
  j["mode"] = r.mode == ExclusionMode::floating ? "floating" : "interval";
  j["resolution"] = r.resolution;
  j["cells"] = r.cells;
  j["cells_excluded"] = r.cells_excluded;
  j["cells_undecided"] = r.cells_undecided;
  j["min_margin"] = r.min_margin;
  j["min_margin_normalized"] = r.min_margin_normalized;
  if (r.face == ExclusionFace::interior) {
    j["y_critical_max"] = r.y_critical_max;
    j["y_critical_all_negative"] = r.y_critical_all_negative;
    j["factor_signs_ok"] = r.factor_signs_ok;
  }
  j["pass"] = r.pass;
  return j;
}

inline JsonValue dominance_json(const DominanceReport& d) {
  JsonValue j = JsonValue::object();
  j["samples"] = d.samples;
  j["seed"] = d.seed;
  j["hankel_chain_violations"] = d.hankel_chain_violations;
  j["chain_majorant_violations"] = d.chain_majorant_violations;
  j["chain_grouped_exceedances"] = d.chain_grouped_exceedances;
  j["flat_sum_exceedances"] = d.flat_sum_exceedances;
  j["worst_chain_margin"] = d.worst_chain_margin;
  j["worst_majorant_margin"] = d.worst_majorant_margin;
  j["max_residual"] = d.max_residual;
  j["max_h3_magnitude"] = d.max_h3_magnitude;
  j["pass"] = d.pass;
  return j;
}

inline std::vector<std::string> split_csv_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

// --- verify-bound -----------------------------------------------------------

inline Report run_verify_bound(const RunConfig& cfg) {
  Report rep;
  rep.command = to_string(Command::verify_bound);
  rep.config["grid_step"] = cfg.grid_step;
  rep.config["samples"] = cfg.samples;
  rep.config["seed"] = cfg.seed;
  rep.config["exact"] = cfg.exact;
  rep.config["tolerance"] = cfg.tolerance;
  rep.config["workers"] = cfg.workers;

  VerifyOptions opt;
  opt.grid_step = cfg.grid_step;
  opt.dominance_samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.workers = cfg.workers;
  opt.tolerance = cfg.tolerance;
  const VerifyReport v = verify_bound(opt);

  const double ninth = 1.0 / 9.0;
  const double witness = to_double(abs(v.extremal.h3_of_inverse));
  rep.results["bound"] = v.h3_bound;
  if (cfg.exact)
    rep.results["witness"] = fraction_string(abs(v.extremal.h3_of_inverse));
  else
    rep.results["witness"] = witness;
  rep.results["status"] = v.status;
  rep.results["certificate_grouped"] = detail::certificate_json(v.certificate);
  rep.results["certificate_absolute"] = detail::certificate_json(v.certificate_absolute);
  rep.results["interior_exclusion"] = detail::exclusion_json(v.interior_exclusion);
  rep.results["face_y0_exclusion"] = detail::exclusion_json(v.face_y0_exclusion);
  rep.results["face_y1_exclusion"] = detail::exclusion_json(v.face_y1_exclusion);
  rep.results["dominance"] = detail::dominance_json(v.dominance);
  rep.results["face_edge_overall_max"] = v.faces.overall_max;

  rep.check("face and edge table maximum", v.faces.pass, v.faces.overall_max, 1024.0, 1e-9);
  rep.check("interior critical values stay negative", v.interior_exclusion.pass,
            v.interior_exclusion.y_critical_max, 0.0, 0.0);
  rep.check("gradient system excluded on the y=0 face", v.face_y0_exclusion.pass,
            v.face_y0_exclusion.min_margin, 0.0, cfg.tolerance);
  rep.check("gradient system excluded on the y=1 face", v.face_y1_exclusion.pass,
            v.face_y1_exclusion.min_margin, 0.0, cfg.tolerance);
  const double cap = 1024.0 * (1.0 + 1e-3);
  rep.check("certified scan of the grouped surface", v.certificate.sup_m <= cap,
            v.certificate.sup_m, cap, 0.0);
  rep.check("certified scan of the absolute surface", v.certificate_absolute.sup_m <= cap,
            v.certificate_absolute.sup_m, cap, 0.0);
  const auto& c = v.certificate_absolute;
  rep.check("certificate arithmetic is consistent",
            c.sup_m == c.observed_max + c.lipschitz_slack * c.grid_step && c.observed_max <= c.sup_m,
            c.sup_m, c.observed_max + c.lipschitz_slack * c.grid_step, 0.0);
  rep.check("induced bound stays within the ninth plus certificate slack",
            c.induced_h3_bound >= ninth && c.induced_h3_bound <= ninth + 1.2e-4,
            c.induced_h3_bound, ninth + 1.2e-4, 0.0);
  rep.check("sampled dominance chain holds", v.dominance.pass,
            static_cast<double>(v.dominance.hankel_chain_violations +
                                v.dominance.chain_majorant_violations),
            0.0, 0.0);
  const bool witness_exact = abs(v.extremal.h3_of_inverse) == Rational(1, 9) &&
                             abs(v.extremal.h3_of_f) == Rational(1, 9);
  if (cfg.exact)
    rep.check("witness attains the bound exactly", witness_exact, witness, ninth, 0.0,
              fraction_string(abs(v.extremal.h3_of_inverse)) + " = 1/9");
  else
    rep.check("witness attains the bound", std::abs(witness - ninth) <= 1e-12 && witness_exact,
              witness, ninth, 1e-12);
  rep.check("witness construction routes agree",
            v.extremal.construction_routes_agree && v.extremal.inverse_routes_agree, 1.0, 1.0,
            0.0);
  return rep;
}

// --- scan ---------------------------------------------------------------------

inline Report run_scan(const RunConfig& cfg) {
  Report rep;
  rep.command = to_string(Command::scan);
  rep.config["grid_step"] = cfg.grid_step;
  rep.config["refine"] = cfg.refine;
  rep.config["workers"] = cfg.workers;

  ScanOptions opt;
  opt.grid_step = cfg.grid_step;
  opt.refine = cfg.refine;
  opt.workers = cfg.workers;
  const BoundCertificate cert = scan_cuboid(opt);

  rep.results["certificate"] = detail::certificate_json(cert);
  rep.results["bound"] = cert.induced_h3_bound;

  rep.check("observed maximum does not exceed the certificate", cert.observed_max <= cert.sup_m,
            cert.observed_max, cert.sup_m, 0.0);
  rep.check("certificate arithmetic is consistent",
            cert.sup_m == cert.observed_max + cert.lipschitz_slack * cert.grid_step, cert.sup_m,
            cert.observed_max + cert.lipschitz_slack * cert.grid_step, 0.0);
  rep.check("grid maximum found at the upper corner",
            std::abs(cert.observed_max - 1024.0) <= 1e-9 &&
                cert.argmax == std::array<double, 3>{0.0, 0.0, 1.0},
            cert.observed_max, 1024.0, 1e-9);
  rep.check("no unresolved cells", cert.unresolved_cells == 0,
            static_cast<double>(cert.unresolved_cells), 0.0, 0.0);
  return rep;
}

// --- extremal -------------------------------------------------------------------

inline Report run_extremal(const RunConfig& cfg) {
  Report rep;
  rep.command = to_string(Command::extremal);
  rep.config["exact"] = cfg.exact;

  const ExtremalReport ex = extremal_report(8);
  const auto f = extremal_series(8);

  JsonValue a = JsonValue::object();
  a["a2"] = fraction_string(ex.a.a2);
  a["a3"] = fraction_string(ex.a.a3);
  a["a4"] = fraction_string(ex.a.a4);
  a["a5"] = fraction_string(ex.a.a5);
  a["a7"] = fraction_string(f[7]);
  rep.results["coefficients"] = std::move(a);
  JsonValue big = JsonValue::object();
  big["A2"] = fraction_string(ex.big_a.A2);
  big["A3"] = fraction_string(ex.big_a.A3);
  big["A4"] = fraction_string(ex.big_a.A4);
  big["A5"] = fraction_string(ex.big_a.A5);
  rep.results["inverse_coefficients"] = std::move(big);
  rep.results["h3_of_f"] = fraction_string(ex.h3_of_f);
  rep.results["h3_of_inverse"] = fraction_string(ex.h3_of_inverse);

  rep.check("construction routes agree to order 8", ex.construction_routes_agree, 1.0, 1.0, 0.0);
  rep.check("inverse routes agree to order 8", ex.inverse_routes_agree, 1.0, 1.0, 0.0);
  rep.check("coefficients are (0, 0, 1/3, 0)",
            ex.a.a2 == 0 && ex.a.a3 == 0 && ex.a.a4 == Rational(1, 3) && ex.a.a5 == 0,
            to_double(ex.a.a4), 1.0 / 3.0, 0.0, "a4 = " + fraction_string(ex.a.a4));
  rep.check("seventh coefficient is 2/9", f[7] == Rational(2, 9), to_double(f[7]), 2.0 / 9.0, 0.0,
            "a7 = " + fraction_string(f[7]));
  rep.check("both Hankel determinants attain 1/9 in magnitude", ex.attains_one_ninth,
            to_double(abs(ex.h3_of_inverse)), 1.0 / 9.0, 0.0,
            fraction_string(ex.h3_of_f) + " and " + fraction_string(ex.h3_of_inverse));
  return rep;
}

// --- sample --------------------------------------------------------------------

// Draws Herglotz measures, builds the order-1/2 starlike functions they
// drive, and checks both Hankel magnitudes against the ninth. When csv_out is
// set, one CSV row per draw is streamed as it is computed.
inline Report run_sample(const RunConfig& cfg, std::ostream* csv_out = nullptr) {
  Report rep;
  rep.command = to_string(Command::sample);
  rep.config["samples"] = cfg.samples;
  rep.config["seed"] = cfg.seed;
  rep.config["atoms"] = cfg.atoms;
  rep.config["tolerance"] = cfg.tolerance;

  if (csv_out) {
    *csv_out << "index,seed";
    for (int k = 1; k <= cfg.atoms; ++k) *csv_out << ",w" << k << ",theta" << k;
    *csv_out << ",a2,a3,a4,a5,A2,A3,A4,A5,h3_direct,h3_inverse\n";
  }

  const double ninth = 1.0 / 9.0;
  const double cap = ninth + cfg.tolerance;
  double max_direct = 0.0, max_inverse = 0.0;
  uint64_t direct_violations = 0, inverse_violations = 0;

  for (uint64_t i = 0; i < cfg.samples; ++i) {
    const HerglotzMeasure m = sample_measure(cfg.seed, i, cfg.atoms);
    const auto p = p_from_measure(m, 8);
    const auto f = starlike_from_p(p, 1, 2, 8);
    const auto a = coefficients_of(f);
    const auto big = inverse_from_direct(a);
    const double hd = std::abs(h3_direct(a));
    const double hi = std::abs(h3_inverse(big));
    max_direct = std::max(max_direct, hd);
    max_inverse = std::max(max_inverse, hi);
    if (hd > cap) ++direct_violations;
    if (hi > cap) ++inverse_violations;
    if (csv_out) {
      *csv_out << i << ',' << mix_seed(cfg.seed, i);
      for (const auto& atom : m.atoms())
        *csv_out << ',' << format_double(atom.weight) << ','
                 << format_double(std::arg(atom.point));
      *csv_out << ',' << detail::format_complex(a.a2) << ',' << detail::format_complex(a.a3)
               << ',' << detail::format_complex(a.a4) << ',' << detail::format_complex(a.a5)
               << ',' << detail::format_complex(big.A2) << ',' << detail::format_complex(big.A3)
               << ',' << detail::format_complex(big.A4) << ',' << detail::format_complex(big.A5)
               << ',' << format_double(hd) << ',' << format_double(hi) << '\n';
    }
  }

  // reference measures with known values: the third-roots-of-unity measure
  // attains the ninth for both functionals; the single atom at 1 drives the
  // half-plane kernel z/(1-z), whose Hankel determinants vanish.
  const auto eval_measure = [](const HerglotzMeasure& m) {
    const auto f = starlike_from_p(p_from_measure(m, 8), 1, 2, 8);
    const auto a = coefficients_of(f);
    return std::array<double, 2>{std::abs(h3_direct(a)),
                                 std::abs(h3_inverse(inverse_from_direct(a)))};
  };
  const double turn = 2.0 * 3.14159265358979323846 / 3.0;
  const HerglotzMeasure roots(std::vector<HerglotzAtom>{{1.0 / 3.0, std::polar(1.0, 0.0)},
                                                        {1.0 / 3.0, std::polar(1.0, turn)},
                                                        {1.0 / 3.0, std::polar(1.0, 2.0 * turn)}});
  const auto at_roots = eval_measure(roots);
  const HerglotzMeasure point_mass(std::vector<HerglotzAtom>{{1.0, {1.0, 0.0}}});
  const auto at_one = eval_measure(point_mass);

  rep.results["max_h3_direct"] = max_direct;
  rep.results["max_h3_inverse"] = max_inverse;
  rep.results["direct_violations"] = direct_violations;
  rep.results["inverse_violations"] = inverse_violations;
  rep.results["roots_of_unity_h3_direct"] = at_roots[0];
  rep.results["roots_of_unity_h3_inverse"] = at_roots[1];
  rep.results["point_mass_h3_direct"] = at_one[0];
  rep.results["point_mass_h3_inverse"] = at_one[1];

  rep.check("sampled direct Hankel magnitudes stay within the ninth", direct_violations == 0,
            max_direct, cap, cfg.tolerance);
  rep.check("sampled inverse Hankel magnitudes stay within the ninth", inverse_violations == 0,
            max_inverse, cap, cfg.tolerance);
  rep.check("third-roots-of-unity measure attains the ninth for f",
            std::abs(at_roots[0] - ninth) <= 1e-12, at_roots[0], ninth, 1e-12);
  rep.check("third-roots-of-unity measure attains the ninth for the inverse",
            std::abs(at_roots[1] - ninth) <= 1e-12, at_roots[1], ninth, 1e-12);
  rep.check("point mass at 1 gives vanishing determinants",
            at_one[0] <= 1e-12 && at_one[1] <= 1e-12, std::max(at_one[0], at_one[1]), 0.0, 1e-12);
  return rep;
}

// --- revert --------------------------------------------------------------------

inline Report run_revert(const RunConfig& cfg) {
  Report rep;
  rep.command = to_string(Command::revert);
  rep.config["coeffs"] = cfg.coeffs;
  rep.config["exact"] = cfg.exact;

  const auto parts = detail::split_csv_list(cfg.coeffs);
  if (parts.size() != 4)
    throw std::invalid_argument("revert needs exactly four coefficients: a2,a3,a4,a5");

  if (cfg.exact) {
    std::array<Rational, 4> a{};
    for (size_t k = 0; k < 4; ++k) a[k] = parse_rational(parts[k]);
    const SchlichtCoefficients<Rational> coeffs{a[0], a[1], a[2], a[3]};
    const auto big = inverse_from_direct(coeffs);

    // cross-check the closed-form map against series reversion
    auto f = TruncatedSeries<Rational>::identity(5);
    f[2] = a[0];
    f[3] = a[1];
    f[4] = a[2];
    f[5] = a[3];
    const auto g = inverse_coefficients_of(revert(f));
    const bool agree =
        big.A2 == g.A2 && big.A3 == g.A3 && big.A4 == g.A4 && big.A5 == g.A5;

    JsonValue out = JsonValue::object();
    out["A2"] = fraction_string(big.A2);
    out["A3"] = fraction_string(big.A3);
    out["A4"] = fraction_string(big.A4);
    out["A5"] = fraction_string(big.A5);
    rep.results["inverse_coefficients"] = std::move(out);
    rep.check("coefficient map agrees with series reversion", agree, 1.0, 1.0, 0.0);
    rep.check("inverse Hankel magnitude", true, to_double(abs(h3_inverse(big))), 0.0, 0.0,
              fraction_string(h3_inverse(big)));
    return rep;
  }

  std::array<double, 4> a{};
  for (size_t k = 0; k < 4; ++k) {
    // accept rational literals in float mode too
    if (parts[k].find('/') != std::string::npos)
      a[k] = to_double(parse_rational(parts[k]));
    else
      a[k] = std::stod(parts[k]);
  }
  const SchlichtCoefficients<double> coeffs{a[0], a[1], a[2], a[3]};
  const auto big = inverse_from_direct(coeffs);
  auto f = TruncatedSeries<double>::identity(5);
  f[2] = a[0];
  f[3] = a[1];
  f[4] = a[2];
  f[5] = a[3];
  const auto g = inverse_coefficients_of(revert(f));
  const double drift = std::max(std::max(std::abs(big.A2 - g.A2), std::abs(big.A3 - g.A3)),
                                std::max(std::abs(big.A4 - g.A4), std::abs(big.A5 - g.A5)));

  JsonValue out = JsonValue::object();
  out["A2"] = big.A2;
  out["A3"] = big.A3;
  out["A4"] = big.A4;
  out["A5"] = big.A5;
  rep.results["inverse_coefficients"] = std::move(out);
  rep.results["h3_inverse"] = h3_inverse(big);
  rep.check("coefficient map agrees with series reversion", drift <= cfg.tolerance, drift, 0.0,
            cfg.tolerance);
  return rep;
}

// --- cases ----------------------------------------------------------------------

inline Report run_cases(const RunConfig& cfg) {
  Report rep;
  rep.command = to_string(Command::cases);
  rep.config["tolerance"] = cfg.tolerance;

  const FaceEdgeReport table = face_edge_values();

  // claimed maxima per region label; rows without a claim are informational
  const auto claimed_of = [](const std::string& region) -> double {
    if (region == "vertex (0,0,1)") return 1024.0;
    if (region == "vertex (0,1,0)" || region == "vertex (0,1,1)") return 576.0;
    if (region == "vertex (0,0,0)") return 0.0;
    if (region == "edge c=0, y=0" || region == "edge c=0, y=0, interior peak" ||
        region == "face y=0")
      return 256.0 * std::sqrt(6.0);
    if (region == "edge c=0, y=1" || region == "face c=0" || region == "face x=0" ||
        region == "face y=1")
      return 1024.0;
    if (region == "edge c=0, x=0") return 1024.0;  // attained at y = 1
    if (region.rfind("edge x=1", 0) == 0 || region == "face x=1" || region == "edge c=0, x=1")
      return 576.0;
    if (region == "face c=2") return 0.0;
    return -1.0;
  };

  JsonValue rows = JsonValue::array();
  bool all_match = true;
  for (const auto& row : table.rows) {
    const double claimed = claimed_of(row.region);
    // grid rows sample below an interior analytic maximum; accept a one-sided
    // gap there but never an exceedance
    const bool mismatch =
        claimed >= 0.0 && !(row.value <= claimed + 1e-9 && row.value >= claimed - 1e-2);
    all_match = all_match && !mismatch;
    JsonValue j = JsonValue::object();
    j["region"] = row.region;
    j["claimed"] = claimed;
    j["observed"] = row.value;
    JsonValue at = JsonValue::array();
    for (double v : row.at) at.push_back(v);
    j["at"] = std::move(at);
    j["mismatch"] = mismatch;
    j["note"] = row.note;
    rows.push_back(std::move(j));
  }

  // pointwise disagreements between the closed-form readings, reported as
  // explicit mismatch rows rather than silently reconciled
  struct Disagreement {
    const char* region;
    double lhs, rhs;
    const char* note;
  };
  const double t1 = 4.0 - 1.0;  // 4 - c^2 at c = 1
  const std::vector<Disagreement> diffs = {
      {"edge x=1 at c=1: grouped surface vs (4-c^2)^2(36-13c^2)", 9.0 * t1 * t1 * t1,
       t1 * t1 * (36.0 - 13.0), "forms differ pointwise; maxima agree at c=0"},
      {"edge x=1 at c=1: grouped surface vs (4-c^2)^2(36-c^2)", 9.0 * t1 * t1 * t1,
       t1 * t1 * (36.0 - 1.0), "forms differ pointwise; maxima agree at c=0"},
      {"h1 at (2, 1/2): grouped vs detached tail", majorant_m(2.0, 0.5, 0.0),
       majorant_h1(2.0, 0.5, MajorantForm::detached),
       "detached tail keeps 2c^2 x^2 outside the vanishing prefactor"},
  };
  JsonValue dj = JsonValue::array();
  for (const auto& d : diffs) {
    JsonValue j = JsonValue::object();
    j["region"] = d.region;
    j["lhs"] = d.lhs;
    j["rhs"] = d.rhs;
    j["mismatch"] = std::abs(d.lhs - d.rhs) > cfg.tolerance;
    j["note"] = d.note;
    dj.push_back(std::move(j));
  }

  rep.results["rows"] = std::move(rows);
  rep.results["reading_disagreements"] = std::move(dj);
  rep.results["overall_max"] = table.overall_max;

  rep.check("every region maximum matches its closed form", all_match, table.overall_max, 1024.0,
            1e-9);
  rep.check("face and edge table passes", table.pass, table.overall_max, 1024.0, 1e-9);
  return rep;
}

// --- dispatch ---------------------------------------------------------------------

// Runs the configured command, writes the rendered report (and, for the
// sample command in CSV mode, the streamed rows) to out, and returns the
// process exit code: 0 iff every assertion passed.
inline int run(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  Report rep;
  switch (cfg.command) {
    case Command::verify_bound:
      rep = run_verify_bound(cfg);
      break;
    case Command::scan:
      rep = run_scan(cfg);
      break;
    case Command::extremal:
      rep = run_extremal(cfg);
      break;
    case Command::sample:
      // CSV mode streams one row per draw; the assertion outcome is carried
      // by the exit code alone so the table stays machine-readable
      if (cfg.output_format == OutputFormat::csv) {
        rep = run_sample(cfg, &out);
        return rep.all_passed() ? 0 : 1;
      }
      rep = run_sample(cfg);
      break;
    case Command::revert:
      rep = run_revert(cfg);
      break;
    case Command::cases:
      rep = run_cases(cfg);
      break;
  }
  switch (cfg.output_format) {
    case OutputFormat::json:
      out << rep.to_json().dump() << "\n";
      break;
    case OutputFormat::csv:
      out << rep.to_csv();
      break;
    case OutputFormat::text:
      out << rep.to_text();
      break;
  }
  return rep.all_passed() ? 0 : 1;
}

}  // namespace hankel
