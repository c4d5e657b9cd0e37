// SPDX-License-Identifier: Apache-2.0
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normkit/corpus.hpp"
#include "normkit/expr.hpp"
#include "normkit/findiff.hpp"
#include "normkit/interp.hpp"
#include "normkit/lpaley.hpp"
#include "normkit/pvar.hpp"
#include "normkit/sampled.hpp"
#include "normkit/verify.hpp"

namespace py = pybind11;
using namespace normkit;

namespace {

SampledFunction make_sampled(const std::vector<double>& xs, const std::vector<double>& ys) {
  return SampledFunction(xs, ys);
}

py::dict variation_to_dict(const VariationResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["partition"] = r.partition;
  d["p"] = r.p;
  d["alpha"] = r.alpha;
  return d;
}

py::dict norm_to_dict(const NormValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["kind"] = v.kind;
  d["grid_size"] = v.grid_size;
  d["quadrature_nodes"] = v.quadrature_nodes;
  d["p"] = v.p;
  d["q"] = v.q;
  d["s"] = v.s;
  d["order"] = v.order;
  return d;
}

py::dict report_to_dict(const InequalityReport& r) {
  py::dict d;
  d["theorem"] = r.theorem;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["ratio"] = r.ratio;
  d["holds"] = r.holds;
  d["slack"] = r.slack;
  d["inputs_digest"] = r.inputs_digest;
  d["seed"] = r.seed;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "p-variation, Besov and interpolation norms on sampled functions, "
            "with composition-operator inequality verifiers";

  py::register_exception<DomainError>(m, "DomainError");

  py::class_<Expr>(m, "Expr")
      .def("__call__", [](const Expr& e, double x) { return e(x); })
      .def("derivative", &Expr::derivative)
      .def("__str__", &Expr::str)
      .def("str", &Expr::str);

  m.def("parse_expr", [](const std::string& text) { return parse_expr(text); },
        py::arg("text"));

  m.def(
      "sample_expr",
      [](const Expr& e, double lo, double hi, std::size_t n) {
        const SampledFunction f = sample(e, Interval(lo, hi), n);
        return py::make_tuple(f.xs, f.ys);
      },
      py::arg("expr"), py::arg("lo"), py::arg("hi"), py::arg("n"));

  m.def(
      "chain_derivative_values",
      [](const std::vector<std::string>& texts, const std::vector<double>& xs) {
        std::vector<Expr> gs;
        for (const auto& t : texts) gs.push_back(parse_expr(t));
        const ChainProduct cp = chain_derivative(gs);
        std::vector<double> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(cp(x));
        return out;
      },
      py::arg("chain"), py::arg("xs"),
      "Evaluate the n-fold chain-rule product of the given expressions.");

  // p-variation engine
  m.def(
      "pvar_dp",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p,
         double alpha) { return variation_to_dict(pvar_dp(make_sampled(xs, ys), p, alpha)); },
      py::arg("xs"), py::arg("ys"), py::arg("p"), py::arg("alpha") = 0.0);
  m.def(
      "pvar_bruteforce",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p,
         double alpha) {
        return variation_to_dict(pvar_bruteforce(make_sampled(xs, ys), p, alpha));
      },
      py::arg("xs"), py::arg("ys"), py::arg("p"), py::arg("alpha") = 0.0);
  m.def(
      "vp_norm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p,
         double alpha) { return vp_norm(make_sampled(xs, ys), p, alpha); },
      py::arg("xs"), py::arg("ys"), py::arg("p"), py::arg("alpha") = 0.0);
  m.def(
      "bvp1_norm",
      [](const std::vector<double>& xs, const std::vector<double>& dys, double f_at_x0,
         double p) { return bvp1_norm(make_sampled(xs, dys), f_at_x0, p); },
      py::arg("xs"), py::arg("fprime_ys"), py::arg("f_at_x0"), py::arg("p"));
  m.def(
      "bvp_alpha_norm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p,
         double alpha) { return bvp_alpha_norm(make_sampled(xs, ys), p, alpha); },
      py::arg("xs"), py::arg("ys"), py::arg("p"), py::arg("alpha"));
  m.def(
      "up_seminorm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p) {
        return up_seminorm(make_sampled(xs, ys), p);
      },
      py::arg("xs"), py::arg("ys"), py::arg("p"));

  // finite differences
  m.def(
      "finite_difference",
      [](const std::vector<double>& xs, const std::vector<double>& ys, int order,
         double step) {
        const SampledFunction d = finite_difference(make_sampled(xs, ys), DiffSpec{order, step});
        return py::make_tuple(d.xs, d.ys);
      },
      py::arg("xs"), py::arg("ys"), py::arg("order"), py::arg("step"));
  m.def(
      "modulus",
      [](const std::vector<double>& xs, const std::vector<double>& ys, int order, double t,
         double p) { return modulus(make_sampled(xs, ys), order, t, p); },
      py::arg("xs"), py::arg("ys"), py::arg("order"), py::arg("t"), py::arg("p"));
  m.def(
      "besov_fd_seminorm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double s, double p,
         double q, int M) {
        BesovParams bp;
        bp.s = s;
        bp.p = p;
        bp.q = q;
        bp.M = M;
        return norm_to_dict(besov_fd_seminorm(make_sampled(xs, ys), bp));
      },
      py::arg("xs"), py::arg("ys"), py::arg("s"), py::arg("p"), py::arg("q"),
      py::arg("M") = 0);
  m.def(
      "holder_zygmund_seminorm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double s) {
        return holder_zygmund_seminorm(make_sampled(xs, ys), s);
      },
      py::arg("xs"), py::arg("ys"), py::arg("s"));
  m.def(
      "sobolev_fd_norm",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p) {
        return sobolev_fd_norm(make_sampled(xs, ys), p);
      },
      py::arg("xs"), py::arg("ys"), py::arg("p"));

  // Littlewood-Paley
  m.def(
      "lp_besov_norm",
      [](const std::vector<double>& ys, double length, double K, double s, double p,
         double q, bool homogeneous) {
        const UniformGrid grid = UniformGrid::make(ys.size(), length);
        const PartitionOfUnity pou = build_partition(K, grid);
        return norm_to_dict(
            lp_besov_norm(PeriodicSignal(grid, ys), pou, s, p, q, homogeneous));
      },
      py::arg("ys"), py::arg("length") = 1.0, py::arg("K") = 2.0, py::arg("s") = 0.5,
      py::arg("p") = 2.0, py::arg("q") = 2.0, py::arg("homogeneous") = true);
  m.def(
      "block_energies",
      [](const std::vector<double>& ys, double length, double K) {
        const UniformGrid grid = UniformGrid::make(ys.size(), length);
        const PartitionOfUnity pou = build_partition(K, grid);
        const PeriodicSignal f(grid, ys);
        py::dict d;
        std::vector<double> energies;
        std::vector<int> levels;
        for (int j = pou.j_min; j <= pou.j_max; ++j) {
          const PeriodicSignal b = dyadic_block(f, pou, j);
          double e = 0.0;
          for (double y : b.ys) e += y * y * grid.spacing();
          levels.push_back(j);
          energies.push_back(e);
        }
        d["levels"] = levels;
        d["energies"] = energies;
        d["reconstruction_residual"] = decompose(f, pou).residual_rel_l2;
        return d;
      },
      py::arg("ys"), py::arg("length") = 1.0, py::arg("K") = 2.0);
  m.def(
      "scaling_check",
      [](const std::vector<double>& ys, double length, double K, double s, double p,
         double q, int m_exp) {
        const UniformGrid grid = UniformGrid::make(ys.size(), length);
        const ScalingReport r = scaling_check(PeriodicSignal(grid, ys), K, s, p, q, m_exp);
        py::dict d;
        d["ratio"] = r.ratio;
        d["lp_ratio"] = r.lp_ratio;
        d["norm_orig"] = r.norm_orig;
        d["norm_dilated"] = r.norm_dilated;
        return d;
      },
      py::arg("ys"), py::arg("length"), py::arg("K"), py::arg("s"), py::arg("p"),
      py::arg("q"), py::arg("m"));
  m.def(
      "paraproduct_residual",
      [](const std::vector<double>& f_ys, const std::vector<double>& g_ys, double length,
         double K, int k) {
        const UniformGrid grid = UniformGrid::make(f_ys.size(), length);
        const PartitionOfUnity pou = build_partition(K, grid);
        return paraproduct_split(PeriodicSignal(grid, f_ys), PeriodicSignal(grid, g_ys),
                                 pou, k)
            .sum_residual_rel;
      },
      py::arg("f_ys"), py::arg("g_ys"), py::arg("length"), py::arg("K"), py::arg("k"));

  // interpolation
  m.def("kfunctional_sup_l1",
        [](const std::vector<double>& a, double t) { return kfunctional_sup_l1(a, t); },
        py::arg("a"), py::arg("t"));
  m.def("j_functional",
        [](const std::vector<double>& a, double t) { return j_functional(a, t); },
        py::arg("a"), py::arg("t"));
  m.def("interp_norm",
        [](const std::vector<double>& a, double theta, double p) {
          return interp_norm(a, theta, p);
        },
        py::arg("a"), py::arg("theta"), py::arg("p"));
  m.def(
      "embedding_chain_report",
      [](const std::vector<double>& xs, const std::vector<double>& ys, double p,
         double alpha, std::uint64_t seed) {
        const EmbeddingChainReport r =
            embedding_chain_report(make_sampled(xs, ys), p, alpha, seed);
        py::dict d;
        d["besov_q1"] = r.besov_q1;
        d["interp_mid"] = r.interp_mid;
        d["bvp_alpha"] = r.bvp_alpha;
        d["up"] = r.up;
        d["besov_qinf"] = r.besov_qinf;
        d["incr_linf"] = r.incr_linf;
        d["incr_l1"] = r.incr_l1;
        d["bound_linf_rhs"] = r.bound_linf_rhs;
        d["bound_l1_rhs"] = r.bound_l1_rhs;
        d["up_rhs"] = r.up_rhs;
        d["linf_ok"] = r.linf_ok;
        d["l1_ok"] = r.l1_ok;
        d["up_ok"] = r.up_ok;
        return d;
      },
      py::arg("xs"), py::arg("ys"), py::arg("p"), py::arg("alpha") = 0.0,
      py::arg("seed") = 0);

  // verifiers
  m.def(
      "check_banach_algebra",
      [](const std::vector<double>& xs, const std::vector<double>& f_ys,
         const std::vector<double>& g_ys, double p, double alpha, std::uint64_t seed) {
        return report_to_dict(check_banach_algebra(make_sampled(xs, f_ys),
                                                   make_sampled(xs, g_ys), p, alpha, seed));
      },
      py::arg("xs"), py::arg("f_ys"), py::arg("g_ys"), py::arg("p"),
      py::arg("alpha") = 0.0, py::arg("seed") = 0);
  m.def(
      "check_basic_inequality",
      [](const std::vector<double>& f_xs, const std::vector<double>& f_ys,
         const std::vector<double>& h_xs, const std::vector<double>& h_ys, double p,
         double alpha0, double t0, std::uint64_t seed) {
        auto [a, b] = check_basic_inequality(make_sampled(f_xs, f_ys),
                                             make_sampled(h_xs, h_ys), p, alpha0, t0, seed);
        return py::make_tuple(report_to_dict(a), report_to_dict(b));
      },
      py::arg("f_xs"), py::arg("f_ys"), py::arg("h_xs"), py::arg("h_ys"), py::arg("p"),
      py::arg("alpha0"), py::arg("t0"), py::arg("seed") = 0);
  m.def(
      "check_composition_bvp1",
      [](const std::string& f, const std::string& g, double p, double lo, double hi,
         std::size_t n, std::uint64_t seed) {
        return report_to_dict(
            check_composition_bvp1(parse_expr(f), parse_expr(g), p, Interval(lo, hi), n, seed));
      },
      py::arg("f"), py::arg("g"), py::arg("p"), py::arg("lo") = -1.0, py::arg("hi") = 1.0,
      py::arg("n") = 513, py::arg("seed") = 0);
  m.def(
      "check_nfold",
      [](const std::vector<std::string>& chain, const std::string& f, double p, double lo,
         double hi, std::size_t n, std::uint64_t seed) {
        std::vector<Expr> gs;
        for (const auto& t : chain) gs.push_back(parse_expr(t));
        std::optional<Expr> outer;
        if (!f.empty()) outer = parse_expr(f);
        const NfoldReport r =
            check_nfold(gs, outer ? &*outer : nullptr, p, Interval(lo, hi), n, seed);
        py::dict d;
        d["side_i"] = report_to_dict(r.side_i);
        if (r.side_ii) d["side_ii"] = report_to_dict(*r.side_ii);
        d["prefactor_i"] = r.prefactor_i;
        d["prefactor_ii"] = r.prefactor_ii;
        d["factor_norms"] = r.factor_norms;
        d["degenerate_tail"] = r.degenerate_tail;
        return d;
      },
      py::arg("chain"), py::arg("f") = std::string(), py::arg("p") = 2.0,
      py::arg("lo") = -1.0, py::arg("hi") = 1.0, py::arg("n") = 257, py::arg("seed") = 0);
  m.def(
      "check_sobolev_chain",
      [](const std::string& G, const std::string& u, double p, double lo, double hi,
         std::size_t n, double tol) {
        const SobolevChainReport r =
            check_sobolev_chain(parse_expr(G), parse_expr(u), p, Interval(lo, hi), n, tol);
        py::dict d;
        d["residual"] = r.residual;
        d["residual_ok"] = r.residual_ok;
        d["norm_bound"] = report_to_dict(r.norm_bound);
        return d;
      },
      py::arg("G"), py::arg("u"), py::arg("p") = 2.0, py::arg("lo") = -1.0,
      py::arg("hi") = 1.0, py::arg("n") = 10001, py::arg("tol") = 1e-3);
  m.def(
      "scan_example4",
      [](double alpha, double beta, double p, int max_level) {
        const Example4Report r = scan_example4(alpha, beta, p, max_level);
        py::dict d;
        d["classification"] = classification_name(r.cls);
        d["expected_convergent"] = r.expected_convergent;
        d["matches_criterion"] = r.matches_criterion;
        d["grid_sizes"] = r.grid_sizes;
        d["values"] = r.values;
        d["partition_sums"] = r.sum_values;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("max_level") = 14);

  // corpus
  m.def("smooth_bump", &smooth_bump, py::arg("t"));
  m.def(
      "corpus_values",
      [](const std::string& family, double alpha, double beta,
         const std::vector<double>& ts, bool derivative) {
        CorpusFunction c = family == "psi"      ? corpus_psi()
                           : family == "psi-ab" ? corpus_psi_ab(alpha, beta)
                                                : corpus_u_alpha(alpha);
        std::vector<double> out;
        out.reserve(ts.size());
        for (double t : ts) out.push_back(derivative ? c.df(t) : c.f(t));
        return out;
      },
      py::arg("family"), py::arg("alpha"), py::arg("beta"), py::arg("ts"),
      py::arg("derivative") = false);

  m.attr("inf") = kInf;
#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "0.1.0";
#endif
}
