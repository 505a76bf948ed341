/*
 * Copyright 2026 The hypst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hypst_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypst/errors.hpp"
#include "hypst/ffield.hpp"
#include "hypst/groupid.hpp"
#include "hypst/ntheory.hpp"
#include "hypst/pointcount.hpp"
#include "hypst/splitjac.hpp"
#include "hypst/stmatrix.hpp"

namespace hypst::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string family = "additive";
  int d = 0;
  std::string c = "1";
  std::string curve;
  std::int64_t p = 0;
  std::int64_t pmin = 3;
  std::int64_t pmax = 0;
  std::size_t num_primes = 3;
  std::string format = "text";
  std::string out_path;
  bool oracle = false;
  bool refine = false;
  int g = 0;
  int i = -1;
  int trials = 20;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool c_given = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

CurveSpec resolve_curve(const Options& o) {
  const Rational c = Rational::parse(o.c);
  if (!o.curve.empty()) return parse_curve(o.curve, c);
  if (o.d == 0) throw UsageError("--d or --curve is required");
  return CurveSpec::make(parse_family(o.family), o.d, c);
}

void require_format(const Options& o, std::initializer_list<std::string_view> allowed,
                    std::string_view command) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end()) {
    throw UsageError(o.format + " output is not available for " + std::string(command));
  }
}

json curve_json(const CurveSpec& curve) {
  return {{"equation", curve.equation()},
          {"family", std::string(to_string(curve.family()))},
          {"d", curve.d()},
          {"c", curve.c().to_string()},
          {"genus", curve.genus()}};
}

json int_vector_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

json relation_json(const RelationResult& r) {
  json out = {{"kind", std::string(to_string(r.kind))}};
  out["order"] = r.order ? json(*r.order) : json(nullptr);
  return out;
}

std::string relation_text(const RelationResult& r) {
  if (r.kind == RelationKind::Torsion) return "Torsion(" + std::to_string(*r.order) + ")";
  return std::string(to_string(r.kind));
}

json matrix_json(const CarryMatrix& m, const std::vector<std::string>& violations) {
  json cols = json::array();
  for (const auto& c : m.cols) cols.push_back({{"index", c.index}, {"exponent", c.exponent}});
  return {{"p", m.p},
          {"d", m.d},
          {"family", std::string(to_string(m.family))},
          {"generic", m.is_generic},
          {"rows", m.rows},
          {"columns", cols},
          {"entries", m.entries},
          {"violations", violations}};
}

std::string matrix_text(const CarryMatrix& m) {
  std::size_t width = 1;
  for (const auto& c : m.cols) width = std::max(width, std::to_string(c.index).size());
  for (auto k : m.rows) width = std::max(width, std::to_string(k).size());
  std::ostringstream out;
  out << std::setw(static_cast<int>(width) + 4) << (m.family == Family::LinearTwist ? "t:" : "m:");
  for (const auto& c : m.cols) out << ' ' << std::setw(static_cast<int>(width)) << c.index;
  out << '\n';
  for (std::size_t i = 0; i < m.num_rows(); ++i) {
    out << "k = " << std::setw(static_cast<int>(width)) << m.rows[i] << ':';
    for (auto e : m.entries[i]) out << ' ' << std::setw(static_cast<int>(width)) << int(e);
    out << '\n';
  }
  return out.str();
}

json factorization_json(const IsogenyFactorization& f, bool symbolic);

json factor_json(const IsogenyFactor& factor, bool symbolic) {
  json out;
  if (const auto* spec = std::get_if<CurveSpec>(&factor.curve)) {
    out["kind"] = spec->family() == Family::LinearTwist && spec->d() == 3 ? "elliptic" : "curve";
    out["curve"] = spec->equation(symbolic);
  } else {
    const auto& lower = std::get<LowerGenusCurve>(factor.curve);
    out["kind"] = "lower_genus";
    out["curve"] = lower.to_string(false);
    out["g"] = lower.g;
    out["i"] = lower.i;
    json terms = json::array();
    for (const auto& t : lower.terms) {
      terms.push_back({{"x_exponent", t.x_exponent},
                       {"coefficient", t.coefficient.get_si()},
                       {"zeta_exponent", t.zeta_exponent},
                       {"c_exponent", t.c_exponent.to_string()}});
    }
    out["terms"] = terms;
  }
  out["genus"] = factor.genus();
  out["exponent"] = factor.exponent;
  json refinement = json::array();
  for (const auto& r : factor.refinement) refinement.push_back(factorization_json(r, symbolic));
  out["refinement"] = refinement;
  return out;
}

json factorization_json(const IsogenyFactorization& f, bool symbolic) {
  json factors = json::array();
  for (const auto& factor : f.factors) factors.push_back(factor_json(factor, symbolic));
  return {{"source", f.source.equation(symbolic)},
          {"genus", f.source.genus()},
          {"factor_genus", f.total_genus()},
          {"factors", factors}};
}

json torus_json(const TorusId& id) {
  json classes = json::array();
  for (const auto& c : id.classes) {
    classes.push_back({{"weight", c.weight},
                       {"plus", c.plus},
                       {"minus", c.minus},
                       {"plus_exponents", c.plus_exponents},
                       {"minus_exponents", c.minus_exponents}});
  }
  json reports = json::array();
  for (const auto& r : id.reports) {
    json rel = json::array();
    for (const auto& x : r.relations) rel.push_back(relation_json(x));
    reports.push_back({{"p", r.p},
                       {"columns", r.columns},
                       {"kernel_rank", r.kernel_rank},
                       {"dimension", r.dimension},
                       {"multiplicities", r.multiplicities},
                       {"relations", rel}});
  }
  return {{"name", id.name},
          {"dimension", id.dimension},
          {"classes", classes},
          {"primes_used", id.primes_used},
          {"weight_matrix", id.weight_matrix},
          {"reports", reports}};
}

json summary_json(const MomentSummary& s) {
  json classes = json::object();
  for (const auto& [r, n] : s.class_counts) classes[std::to_string(r)] = n;
  return {{"samples", s.samples},     {"mean", s.mean},       {"moment2", s.moment2},
          {"moment4", s.moment4},     {"moment6", s.moment6}, {"modulus", s.modulus},
          {"class_counts", classes}};
}

void summary_text(const MomentSummary& s, std::ostream& os) {
  os << "# samples " << s.samples << '\n'
     << "# mean " << fmt12(s.mean) << '\n'
     << "# moment2 " << fmt12(s.moment2) << '\n'
     << "# moment4 " << fmt12(s.moment4) << '\n'
     << "# moment6 " << fmt12(s.moment6) << '\n';
  os << "# p mod " << s.modulus << ':';
  for (const auto& [r, n] : s.class_counts) os << ' ' << r << "=" << n;
  os << '\n';
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "json", "csv"}, "count");
  const auto curve = resolve_curve(o);
  std::vector<std::int64_t> primes;
  if (o.p != 0) {
    primes.push_back(o.p);
  } else if (o.pmax != 0) {
    if (o.pmin < 3 || o.pmax < o.pmin) throw UsageError("need 3 <= --pmin <= --pmax");
    for (auto p : odd_primes_in(o.pmin, o.pmax)) {
      if (has_good_reduction(curve, p)) primes.push_back(p);
    }
  } else {
    throw UsageError("count needs --p or --pmax");
  }

  bool mismatch = false;
  json results = json::array();
  if (o.format == "csv") out << "p,count,t_p,x_p" << (o.oracle ? ",bruteforce" : "") << '\n';
  for (auto p : primes) {
    const auto field = make_field(p);
    // A single requested prime of bad reduction is counted by enumeration.
    const bool bad = !has_good_reduction(curve, p);
    if (bad) {
      err << "warning: " << curve.equation() << " has bad reduction at p = " << p
          << "; counting by enumeration\n";
    }
    const std::int64_t count = bad ? count_bruteforce(field, curve) : count_formula(field, curve);
    const std::int64_t trace = p + 1 - smooth_count(curve, count);
    const double x = static_cast<double>(trace) / std::sqrt(static_cast<double>(p));
    std::optional<std::int64_t> brute;
    if (o.oracle) {
      brute = count_bruteforce(field, curve);
      if (*brute != count) mismatch = true;
    }
    if (o.format == "csv") {
      out << p << ',' << count << ',' << trace << ',' << fmt12(x);
      if (brute) out << ',' << *brute;
      out << '\n';
    } else if (o.format == "json") {
      json r = {{"p", p}, {"count", count}, {"t_p", trace}, {"x_p", x}, {"bad_reduction", bad}};
      if (brute) {
        r["bruteforce"] = *brute;
        r["agree"] = *brute == count;
      }
      results.push_back(r);
    } else {
      out << "p = " << p << ": count = " << count << (bad ? " (bad reduction, enumerated)" : "");
      if (brute) out << ", bruteforce = " << *brute << (*brute == count ? " (agree)" : " (MISMATCH)");
      out << '\n';
    }
  }
  if (o.format == "json") out << json{{"curve", curve_json(curve)}, {"results", results}}.dump(2) << '\n';
  if (mismatch) {
    err << "error: formula and brute-force counts disagree\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

CarryMatrix matrix_for(const Options& o, const CurveSpec& curve, std::ostream& err) {
  if (o.p == 0) throw UsageError("--p is required");
  if (!is_prime(o.p) || o.p < 3) {
    throw Error(ErrorKind::NotPrime, std::to_string(o.p) + " is not an odd prime");
  }
  auto m = build_matrix(o.p, curve.d(), curve.family());
  if (!m.is_generic) {
    err << "warning: p = " << o.p << " is not generic for " << curve.equation(true) << " ("
        << m.num_cols() << " of " << 2 * m.genus << " columns)\n";
  }
  return m;
}

int cmd_matrix(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "json", "csv"}, "matrix");
  const auto curve = resolve_curve(o);
  const auto m = matrix_for(o, curve, err);
  const auto violations = validate_matrix(m);
  if (o.format == "json") {
    out << matrix_json(m, violations).dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "k";
    for (const auto& c : m.cols) out << ",a" << c.exponent;
    out << '\n';
    for (std::size_t i = 0; i < m.num_rows(); ++i) {
      out << m.rows[i];
      for (auto e : m.entries[i]) out << ',' << int(e);
      out << '\n';
    }
  } else {
    out << curve.equation(true) << ", p = " << m.p << ": " << m.num_rows() << " x " << m.num_cols()
        << (m.is_generic ? "" : " (not generic)") << '\n'
        << matrix_text(m);
    out << "validation: " << (violations.empty() ? "ok" : "FAILED") << '\n';
  }
  for (const auto& v : violations) err << "error: matrix check failed: " << v << '\n';
  return violations.empty() ? kExitOk : kExitInconsistent;
}

int cmd_kernel(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "json"}, "kernel");
  const auto curve = resolve_curve(o);
  const auto m = matrix_for(o, curve, err);
  const auto violations = validate_matrix(m);
  const auto kernel = right_kernel(m);
  const auto field = make_field(o.p);
  bool failed = !violations.empty();
  std::vector<RelationResult> relations;
  for (const auto& v : kernel.basis) {
    relations.push_back(verify_relation(field, m, v, curve.c()));
    if (relations.back().kind == RelationKind::Fail) failed = true;
  }
  if (o.format == "json") {
    json basis = json::array();
    for (std::size_t j = 0; j < kernel.basis.size(); ++j) {
      basis.push_back({{"vector", int_vector_json(kernel.basis[j])},
                       {"relation", relation_json(relations[j])}});
    }
    out << json{{"curve", curve_json(curve)},
                {"p", o.p},
                {"columns", m.num_cols()},
                {"rank", kernel.rank},
                {"saturated", kernel.saturated},
                {"basis", basis},
                {"violations", violations}}
               .dump(2)
        << '\n';
  } else {
    out << curve.equation() << ", p = " << o.p << ": kernel rank " << kernel.rank << " of "
        << m.num_cols() << " columns" << (kernel.saturated ? ", saturated" : ", NOT saturated")
        << '\n';
    for (std::size_t j = 0; j < kernel.basis.size(); ++j) {
      out << "  (";
      for (std::size_t i = 0; i < kernel.basis[j].size(); ++i) {
        out << (i ? ", " : "") << kernel.basis[j][i].get_str();
      }
      out << ")  " << relation_text(relations[j]) << '\n';
    }
  }
  for (const auto& v : violations) err << "error: matrix check failed: " << v << '\n';
  if (failed) {
    err << "error: kernel relation verification failed\n";
    return kExitInconsistent;
  }
  return kExitOk;
}

int cmd_st0(const Options& o, std::ostream& out, std::ostream&) {
  require_format(o, {"text", "json"}, "st0");
  const auto curve = resolve_curve(o);
  const auto id = identify_st0(curve, o.num_primes);
  if (o.format == "json") {
    json j = torus_json(id);
    j["curve"] = curve_json(curve);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << id.name << '\n';
  out << "dimension: " << id.dimension << '\n';
  out << "primes:";
  for (auto p : id.primes_used) out << ' ' << p;
  out << '\n';
  for (const auto& c : id.classes) {
    out << "class (";
    for (std::size_t i = 0; i < c.weight.size(); ++i) out << (i ? " " : "") << int(c.weight[i]);
    out << "): plus " << c.plus << ", minus " << c.minus << '\n';
  }
  for (const auto& r : id.reports) {
    out << "p = " << r.p << ": kernel rank " << r.kernel_rank << ", relations";
    for (const auto& x : r.relations) out << ' ' << relation_text(x);
    out << '\n';
  }
  return kExitOk;
}

int cmd_split(const Options& o, std::ostream& out, std::ostream&) {
  require_format(o, {"text", "json"}, "split");
  if (o.g == 0) throw UsageError("--g is required");
  const Rational c = Rational::parse(o.c);
  auto f = split_full(o.g, c);
  if (o.refine) f = refine(std::move(f));
  const bool symbolic = !o.c_given;
  if (o.format == "json") {
    out << factorization_json(f, symbolic).dump(2) << '\n';
  } else {
    out << "Jac(" << f.source.equation(symbolic) << ") ~ " << f.to_string(symbolic) << '\n';
    out << "genus " << f.source.genus() << " = " << f.total_genus() << '\n';
  }
  if (f.total_genus() != f.source.genus()) return kExitInconsistent;
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"text", "json", "csv"}, "sweep");
  const auto curve = resolve_curve(o);
  if (o.pmax == 0) throw UsageError("--pmax is required");
  const auto result = trace_sweep(curve, o.pmin, o.pmax, o.threads);
  std::vector<std::int64_t> violations;
  for (const auto& s : result.samples) {
    if (std::abs(s.normalized) > 2.0 * curve.genus() + 1e-12) violations.push_back(s.p);
  }
  if (o.format == "json") {
    json samples = json::array();
    for (const auto& s : result.samples) {
      samples.push_back({{"p", s.p}, {"count", s.count}, {"t_p", s.trace}, {"x_p", s.normalized}});
    }
    out << json{{"curve", curve_json(curve)},
                {"samples", samples},
                {"summary", summary_json(result.summary)}}
               .dump(2)
        << '\n';
  } else {
    out << "p,count,t_p,x_p\n";
    for (const auto& s : result.samples) {
      out << s.p << ',' << s.count << ',' << s.trace << ',' << fmt12(s.normalized) << '\n';
    }
    summary_text(result.summary, o.format == "csv" ? err : out);
  }
  for (auto p : violations) err << "error: Weil bound violated at p = " << p << '\n';
  return violations.empty() ? kExitOk : kExitInconsistent;
}

int cmd_lockwood(const Options& o, std::ostream& out, std::ostream&) {
  require_format(o, {"text", "json"}, "lockwood");
  if (o.g == 0) throw UsageError("--g is required");
  const Rational c = Rational::parse(o.c);
  std::vector<int> branches = o.i < 0 ? std::vector<int>{0, 1} : std::vector<int>{o.i};
  bool all = true;
  json results = json::array();
  for (int i : branches) {
    const auto curve = lower_genus_curve(o.g, i, c);
    const bool pass = lockwood_check(o.g, i, c, o.trials, o.tol, o.seed);
    all = all && pass;
    if (o.format == "json") {
      results.push_back({{"g", o.g}, {"i", i}, {"c", c.to_string()}, {"curve", curve.to_string()}, {"pass", pass}});
    } else {
      out << "C_" << i << ": " << curve.to_string() << "  " << (pass ? "pass" : "FAIL") << '\n';
    }
  }
  if (o.format == "json") {
    out << json{{"trials", o.trials}, {"tol", o.tol}, {"seed", o.seed}, {"results", results}}.dump(2)
        << '\n';
  }
  return all ? kExitOk : kExitInconsistent;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegerResult:
    case ErrorKind::InconsistentAcrossPrimes:
    case ErrorKind::RelationVerificationFailed:
      return kExitInconsistent;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Point counts, carry matrices and Sato-Tate identity components for y^2 = x^d + c "
               "and y^2 = x^d + cx",
               "hypst"};
  app.require_subcommand(1, 1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
  };
  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "additive (y^2 = x^d + c) or linear (y^2 = x^d + cx)")
        ->check(CLI::IsMember({"additive", "linear"}));
    sub->add_option("--d", o.d, "Degree d");
    sub->add_option("--c", o.c, "Rational coefficient c, e.g. 2 or -3/5");
    sub->add_option("--curve", o.curve, "Shorthand such as x^10+c or x^7+cx");
    add_output(sub);
  };

  auto* count = app.add_subcommand("count", "Point counts via Jacobi sums");
  add_curve(count);
  count->add_option("--p", o.p, "Prime");
  count->add_option("--pmin", o.pmin, "Smallest prime of a range");
  count->add_option("--pmax", o.pmax, "Largest prime of a range");
  count->add_flag("--oracle", o.oracle, "Also count by enumeration and compare");

  auto* matrix = app.add_subcommand("matrix", "Carry matrix at a prime");
  add_curve(matrix);
  matrix->add_option("--p", o.p, "Prime")->required();

  auto* kernel = app.add_subcommand("kernel", "Integer kernel of the carry matrix with relation checks");
  add_curve(kernel);
  kernel->add_option("--p", o.p, "Prime")->required();

  auto* st0 = app.add_subcommand("st0", "Identity component of the Sato-Tate group");
  add_curve(st0);
  st0->add_option("--num-primes", o.num_primes, "Number of generic primes to compare");

  auto* split = app.add_subcommand("split", "Jacobian splitting of y^2 = x^{2g+2} + c");
  split->add_option("--g", o.g, "Genus")->required();
  auto* split_c = split->add_option("--c", o.c, "Coefficient c (symbolic when omitted)");
  split->add_flag("--refine", o.refine, "Split linear-twist factors of odd genus further");
  add_output(split);

  auto* sweep = app.add_subcommand("sweep", "Traces of Frobenius over a prime range");
  add_curve(sweep);
  sweep->add_option("--pmin", o.pmin, "Smallest prime");
  sweep->add_option("--pmax", o.pmax, "Largest prime")->required();
  sweep->add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)");

  auto* lockwood = app.add_subcommand("lockwood", "Numerical check of the Lockwood expansion");
  lockwood->add_option("--g", o.g, "Odd genus >= 3")->required();
  lockwood->add_option("--i", o.i, "Branch 0 or 1 (both when omitted)")->check(CLI::Range(0, 1));
  lockwood->add_option("--c", o.c, "Coefficient c");
  lockwood->add_option("--trials", o.trials, "Random evaluation points");
  lockwood->add_option("--tol", o.tol, "Relative tolerance");
  lockwood->add_option("--seed", o.seed, "RNG seed");
  add_output(lockwood);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.c_given = split_c->count() > 0;

  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot open " << o.out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  const std::map<std::string, std::function<int(const Options&, std::ostream&, std::ostream&)>>
      commands = {{"count", cmd_count},   {"matrix", cmd_matrix}, {"kernel", cmd_kernel},
                  {"st0", cmd_st0},       {"split", cmd_split},   {"sweep", cmd_sweep},
                  {"lockwood", cmd_lockwood}};
  try {
    const auto* sub = app.get_subcommands().front();
    return commands.at(sub->get_name())(o, sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hypst::cli
