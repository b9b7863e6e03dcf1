#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critline/elem.hpp"
#include "critline/errors.hpp"
#include "critline/gamma.hpp"
#include "critline/parallel.hpp"
#include "critline/report_json.hpp"
#include "critline/rootscan.hpp"
#include "critline/verify.hpp"
#include "critline/xi.hpp"
#include "critline/zeta.hpp"

namespace {

using critline::ojson;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // verification or convergence failure
constexpr int kExitUsage = 2;  // bad config / domain error / pole

struct OutputOptions {
  std::string format = "json";
  std::string path;
  bool timestamps = false;
};

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&tt));
  return buf;
}

void write_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw critline::DomainError("cannot open output file: " + out.path);
  file << text;
}

void emit_json(const OutputOptions& out, ojson j) {
  if (out.timestamps) j["timestamp"] = timestamp_now();
  write_text(out, j.dump(2) + "\n");
}

std::string g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw critline::DomainError(std::string(flag) + ": expected lo:hi, got '" + text + "'");
  }
  try {
    const double lo = std::stod(text.substr(0, colon));
    const double hi = std::stod(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw critline::DomainError(std::string(flag) + ": expected lo:hi, got '" + text + "'");
  }
}

unsigned resolve_threads(unsigned flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CRITLINE_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 0;  // hardware concurrency
}

critline::EvalReport run_eval(const std::string& fn, critline::Complex z) {
  using namespace critline;
  if (fn == "exp") {
    const Complex v = cexp(z);
    return {fn, z, v, 4.4e-16 * abs(v), 1};
  }
  if (fn == "cos") {
    const Complex v = ccos(z);
    return {fn, z, v, 4.4e-16 * abs(v), 1};
  }
  if (fn == "gamma") {
    const EvalResult r = cgamma(z);
    return {fn, z, r.value, r.abs_error_estimate, r.terms_used};
  }
  if (fn == "zeta") {
    const EvalResult r = zeta_strip(z);
    return {fn, z, r.value, r.abs_error_estimate, r.terms_used};
  }
  if (fn == "xi") {
    const EvalResult r = xi_eval(z);
    return {fn, z, r.value, r.abs_error_estimate, r.terms_used};
  }
  throw critline::DomainError("eval: unknown function '" + fn + "'");
}

critline::SuiteResult run_suite(const std::string& suite, long samples, std::uint64_t seed,
                                double t_max) {
  using namespace critline;
  if (suite == "functional-eq") return verify_functional_eq(samples, seed);
  if (suite == "reflection") return verify_reflection(samples, seed);
  if (suite == "line-real") return verify_line_real(t_max);
  if (suite == "symmetry") return verify_symmetry();
  throw DomainError("verify: unknown suite '" + suite + "'");
}

critline::ScanFunction curve_function(const std::string& name) {
  using critline::ScanFunction;
  if (name == "exp") return ScanFunction::EXP;
  if (name == "cos") return ScanFunction::COS;
  if (name == "gamma") return ScanFunction::GAMMA;
  if (name == "xi") return ScanFunction::XI;
  throw critline::DomainError("curves: unknown function '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critline: critical-strip numerics for zeta, gamma and the completed xi"};
  app.require_subcommand(1);

  OutputOptions out;
  unsigned threads_flag = 0;
  app.add_option("--format", out.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", out.path, "Write the report to this file instead of stdout");
  app.add_option("--threads", threads_flag, "Worker threads (0 = all available)");
  app.add_flag("--timestamps", out.timestamps, "Include a timestamp field in JSON reports");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a function at one point");
  std::string eval_fn;
  double eval_re = 0.0, eval_im = 0.0;
  eval->add_option("--fn", eval_fn, "Function: exp, cos, gamma, zeta, xi")->required();
  eval->add_option("--re", eval_re, "Real part")->required();
  eval->add_option("--im", eval_im, "Imaginary part");

  // verify
  auto* verify = app.add_subcommand("verify", "Run an identity-residual suite");
  std::string verify_suite;
  long verify_samples = 1000;
  std::uint64_t verify_seed = 1729;
  double verify_tmax = 50.0;
  verify->add_option("--suite", verify_suite,
                     "Suite: functional-eq, reflection, line-real, symmetry")
      ->required();
  verify->add_option("--samples", verify_samples, "Random sample count");
  verify->add_option("--seed", verify_seed, "RNG seed");
  verify->add_option("--t-max", verify_tmax, "Ordinate limit for line-real");

  // zeros
  auto* zeros = app.add_subcommand("zeros", "Locate critical-line zeros by bracketing");
  double z_tlo = 0.0, z_thi = 0.0, z_step = 0.25;
  zeros->add_option("--t-lo", z_tlo, "Interval start")->required();
  zeros->add_option("--t-hi", z_thi, "Interval end")->required();
  zeros->add_option("--step", z_step, "Sampling step (<= 0.5)");

  // scan
  auto* scan = app.add_subcommand("scan", "Scan the critical strip for near-zeros");
  std::string scan_re = "0.05:0.95", scan_t = "0:30";
  double scan_step = 0.05, scan_margin = 0.05;
  scan->add_option("--re", scan_re, "Real range lo:hi (inside (0,1))");
  scan->add_option("--t", scan_t, "Ordinate range lo:hi (inside [0,60])");
  scan->add_option("--step", scan_step, "Grid step (<= 0.1)");
  scan->add_option("--margin", scan_margin, "Off-line margin |re-0.5| >= margin");

  // curves
  auto* curves = app.add_subcommand("curves", "Extract v=0, w=0, v-w=0 level curves");
  std::string curves_fn, curves_re, curves_im;
  double curves_step = 0.02;
  curves->add_option("--fn", curves_fn, "Function: exp, cos, gamma, xi")->required();
  curves->add_option("--re", curves_re, "Real range lo:hi")->required();
  curves->add_option("--im", curves_im, "Imaginary range lo:hi")->required();
  curves->add_option("--step", curves_step, "Grid step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  const unsigned threads = resolve_threads(threads_flag);

  try {
    if (*eval) {
      if (out.format != "json") throw critline::DomainError("eval: only json output");
      emit_json(out, to_json(run_eval(eval_fn, {eval_re, eval_im})));
      return kExitOk;
    }

    if (*verify) {
      if (out.format != "json") throw critline::DomainError("verify: only json output");
      const critline::SuiteResult r = run_suite(verify_suite, verify_samples, verify_seed,
                                                verify_tmax);
      emit_json(out, to_json(critline::VerifySummary{r.suite, r.samples, r.max_residual,
                                                     r.pass}));
      return r.pass ? kExitOk : kExitFail;
    }

    if (*zeros) {
      const std::vector<critline::Bracket> brackets = critline::bracket_line(z_tlo, z_thi, z_step);
      std::vector<critline::ZeroRecord> records(brackets.size());
      critline::detail::parallel_for(brackets.size(), threads,
                                     [&](std::size_t i) { records[i] = refine(brackets[i]); });
      if (out.format == "csv") {
        std::ostringstream csv;
        csv << "t,residual,iterations\n";
        for (const auto& r : records) {
          csv << g15(r.t) << "," << g15(r.residual) << "," << r.iterations << "\n";
        }
        write_text(out, csv.str());
      } else {
        ojson arr = ojson::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        emit_json(out, arr);
      }
      return kExitOk;
    }

    if (*scan) {
      const auto [re_lo, re_hi] = parse_range(scan_re, "--re");
      const auto [t_lo, t_hi] = parse_range(scan_t, "--t");
      const critline::Region region{re_lo, re_hi, t_lo, t_hi};
      std::vector<double> raster;
      const critline::GridReport report = critline::scan_strip(
          region, scan_step, scan_margin, threads, out.format == "csv" ? &raster : nullptr);
      if (out.format == "csv") {
        std::ostringstream csv;
        csv << "re_lo,re_hi,t_lo,t_hi,step\n"
            << g15(re_lo) << "," << g15(re_hi) << "," << g15(t_lo) << "," << g15(t_hi) << ","
            << g15(scan_step) << "\n";
        const std::size_t cols =
            static_cast<std::size_t>(std::floor((re_hi - re_lo) / scan_step + 1e-9)) + 1;
        for (std::size_t k = 0; k < raster.size(); ++k) {
          csv << g15(raster[k]) << (((k + 1) % cols == 0) ? "\n" : ",");
        }
        write_text(out, csv.str());
      } else {
        emit_json(out, to_json(report));
      }
      return kExitOk;
    }

    if (*curves) {
      if (out.format != "json") {
        throw critline::DomainError("curves: csv output is only offered for grids and zero tables");
      }
      const auto [re_lo, re_hi] = parse_range(curves_re, "--re");
      const auto [im_lo, im_hi] = parse_range(curves_im, "--im");
      const critline::Region region{re_lo, re_hi, im_lo, im_hi};
      emit_json(out, to_json(critline::extract_curves(curve_function(curves_fn), region,
                                                      curves_step)));
      return kExitOk;
    }
  } catch (const critline::ConvergenceError& e) {
    emit_json(out, ojson{{"error", ojson{{"kind", e.kind()}, {"message", e.what()}}}});
    return kExitFail;
  } catch (const critline::Error& e) {
    emit_json(out, ojson{{"error", ojson{{"kind", e.kind()}, {"message", e.what()}}}});
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
