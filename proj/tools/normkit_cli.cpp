// SPDX-License-Identifier: Apache-2.0
//
// Command-line front door: compute function-space norms, run theorem
// verification sweeps, dump Littlewood-Paley decompositions, and emit the
// test corpus.  Every value this tool prints is discretization-dependent, so
// reports always carry the full parameter set and grid metadata.
//
// Exit codes: 0 all pass, 1 inequality violation, 2 configuration error,
// 3 numeric/domain error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normkit/expr.hpp"
#include "normkit/findiff.hpp"
#include "normkit/interp.hpp"
#include "normkit/lpaley.hpp"
#include "normkit/pvar.hpp"
#include "normkit/sampled.hpp"
#include "normkit/verify.hpp"

using json = nlohmann::ordered_json;
using namespace normkit;

namespace {

constexpr int kSchemaVersion = 1;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NORMKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("NORMKIT_SEED is not an unsigned integer");
    }
  }
  return 0;
}

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return kInf;
  return std::stod(text);
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << text;
}

json report_to_json(const InequalityReport& r) {
  return json{{"theorem", r.theorem}, {"lhs", r.lhs},     {"rhs", r.rhs},
              {"ratio", r.ratio},     {"holds", r.holds}, {"slack", r.slack},
              {"inputs_digest", r.inputs_digest},         {"seed", r.seed},
              {"note", r.note}};
}

struct FunctionSource {
  std::string expr_text;
  std::string csv_path;

  SampledFunction load(Interval interval, std::size_t n) const {
    if (!csv_path.empty()) return read_csv_file(csv_path);
    if (expr_text.empty())
      throw std::invalid_argument("need --fn or --csv to define the function");
    return sample(parse_expr(expr_text), interval, n);
  }
};

// --- norm ------------------------------------------------------------------

int cmd_norm(const std::string& kind, const FunctionSource& src, Interval interval,
             std::size_t n, double p, double q, double s, double alpha, int M,
             double K, double theta, const std::string& format,
             const std::string& out_path) {
  const auto t_start = std::chrono::steady_clock::now();
  json j{{"schema", kSchemaVersion}, {"command", "norm"}, {"kind", kind}};
  j["params"] = {{"p", p},         {"q", q},     {"s", s}, {"alpha", alpha},
                 {"M", M},         {"K", K},     {"theta", theta},
                 {"interval", {interval.lo, interval.hi}}, {"n", n}};

  double value = 0.0;
  std::size_t grid_size = 0;
  if (kind == "besov-lp") {
    if (src.expr_text.empty())
      throw std::invalid_argument("besov-lp needs --fn (periodic sampling)");
    const Expr e = parse_expr(src.expr_text);
    const UniformGrid grid = UniformGrid::make(n, interval.length());
    const PeriodicSignal f = sample_periodic(
        [&](double x) { return e(interval.lo + x); }, grid);
    const PartitionOfUnity pou = build_partition(K, grid);
    const NormValue nv = lp_besov_norm(f, pou, s, p, q, /*homogeneous=*/true);
    value = nv.value;
    grid_size = nv.grid_size;
    j["levels"] = {{"j_min", pou.j_min}, {"j_max", pou.j_max}};
  } else {
    const SampledFunction f = src.load(interval, n);
    grid_size = f.size();
    if (kind == "vp" || kind == "vp-alpha") {
      // the Banach norm plus its two pieces, since both get asked for
      const double a = (kind == "vp") ? 0.0 : alpha;
      const VariationResult nu = pvar_dp(f, p, a);
      value = f.sup_abs() + nu.value;
      j["nu"] = nu.value;
      j["sup"] = f.sup_abs();
      j["partition_size"] = nu.partition.size();
    } else if (kind == "bvp1") {
      if (src.expr_text.empty()) throw std::invalid_argument("bvp1 needs --fn");
      const Expr e = parse_expr(src.expr_text);
      const SampledFunction d = sample(e.derivative(), f.interval, f.size());
      value = bvp1_norm(d, e(f.interval.lo), p);
    } else if (kind == "up") {
      value = up_seminorm(f, p);
    } else if (kind == "besov-fd") {
      BesovParams bp;
      bp.s = s;
      bp.p = p;
      bp.q = q;
      bp.M = M;
      const NormValue nv = besov_fd_seminorm(f, bp);
      value = nv.value;
      j["quadrature_nodes"] = nv.quadrature_nodes;
      j["difference_order"] = nv.order;
    } else if (kind == "holder-zygmund") {
      value = holder_zygmund_seminorm(f, s);
    } else if (kind == "sobolev-fd") {
      value = sobolev_fd_norm(f, p);
    } else if (kind == "interp") {
      value = interp_norm(f.ys, theta, p);
    } else if (kind == "bvp-alpha") {
      value = bvp_alpha_norm(f, p, alpha);
    } else {
      throw std::invalid_argument("unknown norm kind '" + kind + "'");
    }
  }
  const auto t_end = std::chrono::steady_clock::now();
  j["value"] = value;
  j["grid_size"] = grid_size;
  j["wall_time_s"] =
      std::chrono::duration_cast<std::chrono::duration<double>>(t_end - t_start).count();
  if (format == "csv") {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "kind,p,q,s,alpha,interval_lo,interval_hi,n,grid_size,value\n"
                  "%s,%g,%g,%g,%g,%g,%g,%zu,%zu,%.17g\n",
                  kind.c_str(), p, q, s, alpha, interval.lo, interval.hi, n, grid_size,
                  value);
    emit_text(buf, out_path);
    return 0;
  }
  if (format != "json") throw std::invalid_argument("unknown output format '" + format + "'");
  emit(j, out_path);
  return 0;
}

// --- verify ----------------------------------------------------------------

struct SweepOutcome {
  std::vector<InequalityReport> reports;
  json extra;
};

SweepOutcome sweep_banach(int trials, double p, double alpha, std::uint64_t seed) {
  SweepOutcome out;
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    const Interval window(0.0, 1.0);
    const SampledFunction f = make_family_sample(fams[s % 4], s, window, 257);
    const SampledFunction g = make_family_sample(fams[(s + 1) % 4], s ^ 0x5bd1u, window, 257);
    out.reports.push_back(check_banach_algebra(f, g, p, alpha, s));
  }
  return out;
}

SweepOutcome sweep_basic(int trials, double p, std::uint64_t seed) {
  SweepOutcome out;
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    Rng rng(s * 17 + 3);
    const SampledFunction h = make_family_sample(fams[s % 4], s, Interval(0.0, 1.0), 257);
    const double alpha0 = rng.uniform(-1.0, 1.0);
    const double t0 = rng.uniform(0.0, 1.0);
    const SampledFunction g = cumulative_integral(h, alpha0, t0);
    const SampledFunction f =
        make_family_sample(fams[(s + 1) % 4], s ^ 0x777u, image_interval(g).interval, 257);
    auto [a, b] = check_basic_inequality(f, h, p, alpha0, t0, s);
    out.reports.push_back(std::move(a));
    out.reports.push_back(std::move(b));
  }
  return out;
}

SweepOutcome sweep_bvp1(int trials, double p, std::uint64_t seed) {
  SweepOutcome out;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    Rng rng(s * 29 + 11);
    const Expr f = make_kink_expr(rng);
    const Expr g = make_kink_expr(rng);
    out.reports.push_back(check_composition_bvp1(f, g, p, Interval(-1.0, 1.0), 513, s));
  }
  return out;
}

SweepOutcome sweep_nfold(int trials, int nchain, double p, std::uint64_t seed) {
  SweepOutcome out;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    Rng rng(s * 41 + 5);
    std::vector<Expr> gs;
    for (int i = 0; i < nchain; ++i) gs.push_back(make_smooth_chain_expr(rng));
    const Expr f = make_smooth_chain_expr(rng);
    NfoldReport rep = check_nfold(gs, &f, p, Interval(-1.0, 1.0), 257, s);
    out.reports.push_back(rep.side_i);
    out.reports.push_back(*rep.side_ii);
  }
  return out;
}

SweepOutcome sweep_mult_support(int trials, double p, std::uint64_t seed) {
  SweepOutcome out;
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    const GeneratedFunction f = make_family_function(fams[s % 3], 1000 + (s % 300));
    const GeneratedFunction g =
        make_family_function(fams[(s + 1) % 3], (1000 + (s % 300)) ^ 0xabcdu);
    out.reports.push_back(check_mult_support(f, g, p, Interval(-2.0, 2.0),
                                             Interval(-1.0, 1.0), 513, s));
  }
  return out;
}

SweepOutcome sweep_sobolev_chain(int trials, double p, std::uint64_t seed) {
  SweepOutcome out;
  const Expr x = Expr::variable();
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    Rng rng(s * 53 + 7);
    // G(0) = 0 family: a y^2 + b sin(y) + c (y^3/9) + d abspow(y, 1.5)
    const Expr G = Expr::constant(rng.uniform(-1.0, 1.0)) * Expr::pow(x, 2.0) +
                   Expr::constant(rng.uniform(-1.0, 1.0)) * Expr::sin(x) +
                   Expr::constant(rng.uniform(-0.3, 0.3)) * Expr::pow(x, 3.0);
    const Expr u = make_smooth_chain_expr(rng);
    SobolevChainReport rep =
        check_sobolev_chain(G, u, p, Interval(-1.0, 1.0), 10001, 1e-3, s);
    InequalityReport res = rep.norm_bound;
    res.note += " residual=" + std::to_string(rep.residual);
    res.holds = res.holds && rep.residual_ok;
    out.reports.push_back(std::move(res));
  }
  return out;
}

SweepOutcome sweep_chain_embed(int trials, double p, double alpha, std::uint64_t seed) {
  SweepOutcome out;
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + std::uint64_t(t);
    const SampledFunction f = make_family_sample(fams[s % 4], s, Interval(0.0, 1.0), 256);
    const EmbeddingChainReport rep = embedding_chain_report(f, p, alpha, s);
    const std::vector<double> dig{double(s), p, alpha};
    InequalityReport linf = make_report("embed-linf", rep.incr_linf, rep.bound_linf_rhs,
                                        digest_values(dig), s);
    InequalityReport l1 =
        make_report("embed-l1", rep.incr_l1, rep.bound_l1_rhs, digest_values(dig), s);
    InequalityReport up =
        make_report("embed-up", rep.up, rep.up_rhs, digest_values(dig), s);
    out.reports.push_back(std::move(linf));
    out.reports.push_back(std::move(l1));
    out.reports.push_back(std::move(up));
  }
  return out;
}

int cmd_verify(const std::string& theorem, int trials, int nchain, double p,
               double alpha, double beta, const std::string& family_name_arg,
               const std::string& fn_text, int levels, std::uint64_t seed,
               const std::string& out_path) {
  json j{{"schema", kSchemaVersion}, {"command", "verify"}, {"theorem", theorem}};
  j["params"] = {{"p", p},       {"alpha", alpha}, {"beta", beta},
                 {"trials", trials}, {"nchain", nchain}, {"seed", seed}};

  SweepOutcome outcome;
  bool all_hold = true;
  if (theorem == "banach") {
    outcome = sweep_banach(trials, p, alpha, seed);
  } else if (theorem == "basic") {
    outcome = sweep_basic(trials, p, seed);
  } else if (theorem == "bvp1") {
    outcome = sweep_bvp1(trials, p, seed);
  } else if (theorem == "nfold") {
    outcome = sweep_nfold(trials, nchain, p, seed);
  } else if (theorem == "mult-support") {
    outcome = sweep_mult_support(trials, p, seed);
  } else if (theorem == "sobolev-chain") {
    outcome = sweep_sobolev_chain(trials, p, seed);
  } else if (theorem == "chain-embed") {
    outcome = sweep_chain_embed(trials, p, alpha, seed);
  } else if (theorem == "norm-property") {
    const auto fam = family_from_name(family_name_arg);
    if (!fam) throw std::invalid_argument("unknown family '" + family_name_arg + "'");
    GeneratedFunction f;
    if (!fn_text.empty()) {
      const Expr e = parse_expr(fn_text);
      const Expr de = e.derivative();
      f.name = fn_text;
      f.f = [e](double y) { return e(y); };
      f.df = [de](double y) { return de(y); };
      f.has_derivative = true;
    } else {
      f.name = "abs";
      f.f = [](double y) { return std::abs(y); };
      f.df = [](double y) { return y > 0 ? 1.0 : (y < 0 ? -1.0 : 0.0); };
      f.has_derivative = true;
    }
    const NormPropertyEstimate est = check_norm_property(
        f, *fam, NormSelector::Vp, trials, p, Interval(0.0, 1.0), 257, seed);
    j["estimate_c"] = est.c;
    j["argmax_digest"] = est.argmax_digest;
    j["per_trial"] = est.per_trial;
    emit(j, out_path);
    return 0;
  } else if (theorem == "example4") {
    const Example4Report rep = scan_example4(alpha, beta, p, levels);
    j["classification"] = classification_name(rep.cls);
    j["expected_convergent"] = rep.expected_convergent;
    j["matches_criterion"] = rep.matches_criterion;
    j["grid_sizes"] = rep.grid_sizes;
    j["values"] = rep.values;
    j["partition_sums"] = rep.sum_values;
    emit(j, out_path);
    return rep.matches_criterion ? 0 : 1;
  } else {
    throw std::invalid_argument("unknown theorem selector '" + theorem + "'");
  }

  json reports = json::array();
  double worst_ratio = 0.0;
  std::string worst_digest;
  int passed = 0;
  for (const InequalityReport& r : outcome.reports) {
    reports.push_back(report_to_json(r));
    if (r.holds) ++passed;
    else all_hold = false;
    if (r.ratio > worst_ratio) {
      worst_ratio = r.ratio;
      worst_digest = r.inputs_digest;
    }
  }
  j["summary"] = {{"reports", outcome.reports.size()},
                  {"passed", passed},
                  {"failed", outcome.reports.size() - std::size_t(passed)},
                  {"worst_ratio", worst_ratio},
                  {"worst_digest", worst_digest}};
  j["reports"] = std::move(reports);
  emit(j, out_path);
  return all_hold ? 0 : 1;
}

// --- lp --------------------------------------------------------------------

int cmd_lp(const std::string& fn_text, std::size_t n, double K, double s, double p,
           double q, bool do_scaling, int m, const std::string& out_path) {
  if (fn_text.empty()) throw std::invalid_argument("lp needs --fn");
  const Expr e = parse_expr(fn_text);
  const UniformGrid grid = UniformGrid::make(n, 1.0);
  const PeriodicSignal f = sample_periodic([&](double x) { return e(x); }, grid);
  const PartitionOfUnity pou = build_partition(K, grid);

  std::ostringstream csv;
  csv << "# normkit lp dump; schema " << kSchemaVersion << "; n=" << n << " K=" << K
      << " s=" << s << " p=" << p << " q=" << q << "\n";
  csv << "level,block_l2_energy,weighted_lp_norm\n";
  char buf[96];
  for (int j = pou.j_min; j <= pou.j_max; ++j) {
    const PeriodicSignal block = dyadic_block(f, pou, j);
    double energy = 0.0;
    for (double y : block.ys) energy += y * y * grid.spacing();
    const double weighted = std::pow(2.0, s * j) * periodic_lp_norm(block, p);
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", j, energy, weighted);
    csv << buf;
  }
  {
    const PeriodicSignal low = low_block(f, pou);
    double energy = 0.0;
    for (double y : low.ys) energy += y * y * grid.spacing();
    std::snprintf(buf, sizeof buf, "# low_part_l2_energy,%.17g\n", energy);
    csv << buf;
  }
  double dev = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    double acc = 0.0;
    for (int j = pou.j_min; j <= pou.j_max; ++j) acc += pou.phi_level(j)[k];
    dev = std::max(dev, std::abs(acc - 1.0));
  }
  std::snprintf(buf, sizeof buf, "# partition_sum_deviation,%.3e\n", dev);
  csv << buf;
  if (do_scaling) {
    const ScalingReport rep = scaling_check(f, K, s, p, q, m);
    std::snprintf(buf, sizeof buf, "# scaling_check m=%d,ratio,%.17g,lp_ratio,%.17g\n",
                  m, rep.ratio, rep.lp_ratio);
    csv << buf;
  }
  emit_text(csv.str(), out_path);
  return 0;
}

// --- corpus ----------------------------------------------------------------

int cmd_corpus_list(const std::string& out_path) {
  json j{{"schema", kSchemaVersion}, {"command", "corpus list"}};
  j["families"] = json::array({
      {{"id", "smooth-poly"}, {"description", "random polynomials, degree 2..4"}},
      {{"id", "trig"}, {"description", "two-tone trigonometric functions"}},
      {{"id", "abs-kink"}, {"description", "sums of |x - a| kinks plus a linear part"}},
      {{"id", "step"}, {"description", "piecewise-constant with 3..10 jumps"}},
      {{"id", "corpus-psi"},
       {"description", "psi(t) = |t| rho(t) / log|t|; convergent corpus member"}},
      {{"id", "corpus-u-alpha"},
       {"description", "u_alpha(x) = |x + alpha| - |alpha|; Lipschitz kink family"}},
      {{"id", "corpus-psi-ab"},
       {"description",
        "psi_ab(t) = |t|^{alpha+1} rho(t) sin(|t|^-beta); in BV_p^1 iff 1/p < alpha/beta - 1"}},
  });
  emit(j, out_path);
  return 0;
}

int cmd_corpus_emit(const std::string& family, double alpha, double beta, std::size_t n,
                    std::uint64_t seed, const std::string& out_path) {
  std::ostringstream csv;
  csv << "# normkit corpus; schema " << kSchemaVersion << "; family=" << family
      << " alpha=" << alpha << " beta=" << beta << " n=" << n << " seed=" << seed
      << "\n";
  std::function<double(double)> f;
  Interval window(-0.5, 0.5);
  if (family == "psi-ab" || family == "corpus-psi-ab") {
    const CorpusFunction c = corpus_psi_ab(alpha, beta);
    f = c.f;
    window = c.window;
  } else if (family == "psi" || family == "corpus-psi") {
    const CorpusFunction c = corpus_psi();
    f = c.f;
    window = c.window;
  } else if (family == "u-alpha" || family == "corpus-u-alpha") {
    const CorpusFunction c = corpus_u_alpha(alpha);
    f = c.f;
    window = c.window;
  } else {
    const auto fam = family_from_name(family);
    if (!fam) throw std::invalid_argument("unknown corpus family '" + family + "'");
    const GeneratedFunction g = make_family_function(*fam, seed);
    f = g.f;
    window = Interval(0.0, 1.0);
  }
  // midpoint grid: the singular-oscillation members must never see t = 0
  csv << "x,y\n";
  char buf[80];
  for (std::size_t i = 0; i < n; ++i) {
    const double x = window.lo + (double(i) + 0.5) * window.length() / double(n);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, f(x));
    csv << buf;
  }
  emit_text(csv.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normkit: p-variation and Besov-type norms with theorem verifiers"};
  app.require_subcommand(1);

  // shared options
  std::string fn_text, csv_path, out_path;
  std::vector<double> interval_args{0.0, 1.0};
  std::size_t n = 1024;
  std::string p_text = "2";
  double q = 2.0, s = 0.5, alpha = 0.0, beta = 0.5, K = 2.0, theta = 0.5;
  std::string format = "json";
  int M = 0, m = 1, trials = 50, nchain = 2, levels = 14;
  std::uint64_t seed = 0;
  bool have_seed_flag = false;
  std::string kind = "vp", theorem = "banach", family = "trig";
  bool scaling = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--fn", fn_text, "function expression in x");
    cmd->add_option("--csv", csv_path, "two-column x,y input file");
    cmd->add_option("--interval", interval_args, "domain endpoints")->expected(2);
    cmd->add_option("--n", n, "grid size");
    cmd->add_option("--p", p_text, "integrability exponent (number or 'inf')");
    cmd->add_option("--q", q, "summability exponent");
    cmd->add_option("--s", s, "smoothness");
    cmd->add_option("--alpha", alpha, "variation order / corpus alpha");
    cmd->add_option("--beta", beta, "corpus beta");
    cmd->add_option("--M", M, "difference-order parameter override");
    cmd->add_option("--K", K, "annulus parameter");
    cmd->add_option("--theta", theta, "interpolation parameter");
    cmd->add_option("--format", format, "output format: json|csv");
    cmd->add_option("--out", out_path, "output path (stdout when omitted)");
    cmd->add_option("--seed", seed, "sweep seed")->each([&](const std::string&) {
      have_seed_flag = true;
    });
  };

  CLI::App* norm = app.add_subcommand("norm", "compute one norm");
  norm->add_option("--kind", kind,
                   "vp|vp-alpha|bvp-alpha|bvp1|up|besov-fd|holder-zygmund|sobolev-fd|"
                   "besov-lp|interp");
  add_common(norm);

  CLI::App* verify = app.add_subcommand("verify", "run a theorem sweep");
  verify->add_option("--theorem", theorem,
                     "banach|basic|bvp1|nfold|norm-property|mult-support|"
                     "sobolev-chain|example4|chain-embed");
  verify->add_option("--trials", trials, "number of seeded trials");
  verify->add_option("--nchain", nchain, "chain length for nfold");
  verify->add_option("--levels", levels, "max refinement exponent for example4");
  verify->add_option("--family", family, "function family for norm-property");
  add_common(verify);

  CLI::App* lp = app.add_subcommand("lp", "Littlewood-Paley block dump");
  lp->add_flag("--scaling-check", scaling, "append a dilation-law row");
  lp->add_option("--m", m, "dyadic dilation exponent");
  add_common(lp);

  CLI::App* corpus = app.add_subcommand("corpus", "corpus listing and emission");
  CLI::App* corpus_list = corpus->add_subcommand("list", "list corpus families");
  corpus_list->add_option("--out", out_path, "output path");
  CLI::App* corpus_emit = corpus->add_subcommand("emit", "emit a corpus CSV");
  corpus_emit->add_option("--family", family, "family id");
  corpus_emit->add_option("--alpha", alpha, "corpus alpha");
  corpus_emit->add_option("--beta", beta, "corpus beta");
  corpus_emit->add_option("--n", n, "sample count");
  corpus_emit->add_option("--seed", seed, "family seed");
  corpus_emit->add_option("--out", out_path, "output path");
  corpus->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!have_seed_flag) seed = default_seed();
    const double p = parse_p(p_text);
    if (norm->parsed()) {
      return cmd_norm(kind, FunctionSource{fn_text, csv_path},
                      Interval(interval_args[0], interval_args[1]), n, p, q, s, alpha,
                      M, K, theta, format, out_path);
    }
    if (verify->parsed()) {
      return cmd_verify(theorem, trials, nchain, p, alpha, beta, family, fn_text,
                        levels, seed, out_path);
    }
    if (lp->parsed()) {
      return cmd_lp(fn_text, n, K, s, p, q, scaling, m, out_path);
    }
    if (corpus->parsed()) {
      if (corpus_list->parsed()) return cmd_corpus_list(out_path);
      return cmd_corpus_emit(family, alpha, beta, n, seed, out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
