#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padicres/csv.hpp"
#include "padicres/errors.hpp"
#include "padicres/experiments.hpp"
#include "padicres/poly_text.hpp"
#include "padicres/prs.hpp"

using namespace padicres;

namespace {

struct TraceRow {
  int j;
  int64_t prec;
  int64_t lead_val;
  int64_t gauss_val;
};

void write_trace(const std::string& path, const std::vector<TraceRow>& rows) {
  std::vector<SummaryRow> out;
  for (const auto& r : rows) {
    SummaryRow s;
    s.set("j", r.j).set("N_j", SummaryRow::Value(r.prec)).set("V_j", SummaryRow::Value(r.lead_val));
    s.set("W_j", SummaryRow::Value(r.gauss_val)).set("delta_j", SummaryRow::Value(r.lead_val - r.gauss_val));
    out.push_back(std::move(s));
  }
  if (path == "-") {
    write_csv(std::cout, out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  write_csv(f, out);
}

int cmd_euclid(const std::string& file, const std::string& trace) {
  const Fixture fx = load_fixture(file);
  const auto res = extended_euclid(fx.ball_poly("A"), fx.ball_poly("B"));
  std::vector<TraceRow> rows;
  for (size_t k = 0; k < res.trace.size(); ++k) {
    const BallPoly& s = res.trace[k].s;
    std::cout << "S_" << k + 1 << " = " << (s.empty() ? std::string("0") : to_string(s)) << '\n';
    if (!s.empty()) rows.push_back({s.degree(), min_abs_prec(s), s.lc().valuation(), gauss_valuation(s)});
  }
  std::cout << "U = " << (res.u.empty() ? std::string("0") : to_string(res.u)) << '\n';
  std::cout << "V = " << (res.v.empty() ? std::string("0") : to_string(res.v)) << '\n';
  if (!trace.empty()) write_trace(trace, rows);
  return 0;
}

std::vector<TraceRow> print_transcript(const SubresTranscript& t) {
  std::vector<TraceRow> rows;
  for (int j = t.degree - 1; j >= 0; --j) {
    if (!t.has_step(j)) continue;
    const auto& s = t.step(j);
    std::cout << "R_" << j << " = " << to_string(s.r) << '\n';
    rows.push_back({j, s.prec, s.lead_val, s.gauss_val});
  }
  if (t.failure) std::cout << "stopped at j = " << t.failure->index << ": " << t.failure->reason << '\n';
  return rows;
}

int cmd_subres(const std::string& file, bool flat, const std::string& method, const std::string& trace) {
  const Fixture fx = load_fixture(file);
  const BallPoly a = fx.ball_poly("A");
  const BallPoly b = fx.ball_poly("B");
  PremMethod m = PremMethod::FractionFree;
  if (method == "euclidean") m = PremMethod::Euclidean;
  else if (method == "steps") m = PremMethod::FlatSteps;
  else if (method == "default") m = flat ? PremMethod::FlatSteps : PremMethod::FractionFree;
  const auto t = flat ? prs_flat(flatten(a), flatten(b), m) : prs_ball(a, b, m);
  const auto rows = print_transcript(t);
  if (!trace.empty()) write_trace(trace, rows);
  return t.complete() ? 0 : 1;
}

int cmd_subres_stable(const std::string& file, int64_t prec, bool unit_leading, const std::string& trace) {
  const Fixture fx = load_fixture(file);
  StabilizedOptions opts;
  opts.allow_unit_leading = unit_leading;
  const auto res = stabilized_prs(fx.ball_poly("A"), fx.ball_poly("B"), prec, opts);
  std::vector<TraceRow> rows;
  for (int j = res.degree - 1; j >= 0; --j) {
    const BallPoly& r = res.r[static_cast<size_t>(j)];
    std::cout << "R_" << j << " = " << to_string(r) << '\n';
    rows.push_back({j, min_abs_prec(r), res.lead_val[static_cast<size_t>(j)], gauss_valuation(r)});
  }
  std::cout << "max working precision = " << res.max_working_prec << '\n';
  if (res.shortfall) std::cout << "warning: an intermediate fell below the target precision\n";
  if (!trace.empty()) write_trace(trace, rows);
  return 0;
}

int cmd_experiment(const ExperimentConfig& cfg, const std::string& out) {
  const auto res = run_experiment(cfg);
  if (out.empty() || out == "-") {
    write_csv(std::cout, res.rows);
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out);
    write_csv(f, res.rows);
  }
  for (const auto& v : res.violations) std::cerr << "violation: " << v << '\n';
  return res.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic subresultant toolkit"};
  app.require_subcommand(1);

  std::string file, trace, method = "default", out;
  bool flat = false, unit_leading = false;
  int64_t stable_prec = 0;

  auto* euclid = app.add_subcommand("euclid", "extended Euclidean algorithm on a fixture");
  euclid->add_option("file", file, "fixture with p, A, B")->required()->check(CLI::ExistingFile);
  euclid->add_option("--trace", trace, "per-step CSV (path or -)");

  auto* subres = app.add_subcommand("subres", "subresultant PRS over balls");
  subres->add_option("file", file, "fixture with p, A, B")->required()->check(CLI::ExistingFile);
  subres->add_flag("--flat", flat, "flat precision model");
  subres->add_option("--method", method, "pseudo-remainder: default, fraction-free, euclidean, steps")
      ->check(CLI::IsMember({"default", "fraction-free", "euclidean", "steps"}));
  subres->add_option("--trace", trace, "per-step CSV (path or -)");

  auto* stable = app.add_subcommand("subres-stable", "stabilized subresultant PRS");
  stable->add_option("file", file, "fixture with p, A, B")->required()->check(CLI::ExistingFile);
  stable->add_option("--prec", stable_prec, "target absolute precision")->required()->check(CLI::PositiveNumber);
  stable->add_flag("--unit-leading", unit_leading, "allow B with unit leading coefficient and deg A >= deg B");
  stable->add_option("--trace", trace, "per-step CSV (path or -)");

  ExperimentConfig cfg;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo experiment; exit 2 on a tolerance violation");
  exp->add_option("name", cfg.name, "experiment")->required()->check(CLI::IsMember(experiment_names()));
  exp->add_option("--p", cfg.p, "prime")->default_val(2);
  exp->add_option("--deg", cfg.degrees, "degrees, comma separated")->delimiter(',')->default_str("5");
  exp->add_option("--prec", cfg.prec, "input precision")->default_val(32);
  exp->add_option("--trials", cfg.trials, "trials per degree")->default_val(1000)->check(CLI::PositiveNumber);
  exp->add_option("--seed", cfg.seed, "seed")->default_val(1);
  exp->add_option("--jobs", cfg.jobs, "worker threads")->default_val(1)->check(CLI::PositiveNumber);
  exp->add_option("--max-m", cfg.max_m, "largest m for deltaj")->default_val(4);
  exp->add_option("--out", out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*euclid) return cmd_euclid(file, trace);
    if (*subres) return cmd_subres(file, flat, method, trace);
    if (*stable) return cmd_subres_stable(file, stable_prec, unit_leading, trace);
    if (*exp) return cmd_experiment(cfg, out);
  } catch (const HypothesisHViolated& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
