// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "normkit/corpus.hpp"
#include "normkit/expr.hpp"
#include "normkit/pvar.hpp"
#include "normkit/verify.hpp"

using namespace normkit;

TEST_CASE("banach algebra: multiplying by one and by itself") {
  const SampledFunction one = sample([](double) { return 1.0; }, Interval(0.0, 1.0), 65);
  const SampledFunction id = sample(parse_expr("x"), Interval(0.0, 1.0), 65);
  const InequalityReport unit = check_banach_algebra(id, one, 2.0);
  CHECK(unit.holds);
  CHECK(unit.lhs == doctest::Approx(vp_norm(id, 2.0)));

  const InequalityReport sq = check_banach_algebra(id, id, 1.0);
  CHECK(sq.holds);
  CHECK(sq.lhs == doctest::Approx(2.0).epsilon(1e-12));  // ||x^2|| = 1 + 1
  CHECK(sq.rhs == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("banach algebra: seeded sweep over families, plain and alpha") {
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (std::uint64_t s = 0; s < 60; ++s) {
    const SampledFunction f = make_family_sample(fams[s % 4], s, Interval(0.0, 1.0), 129);
    const SampledFunction g =
        make_family_sample(fams[(s + 1) % 4], s ^ 0xf0f0u, Interval(0.0, 1.0), 129);
    for (double p : {1.0, 2.0, 3.0})
      for (double alpha : {0.0, 0.4}) {
        const InequalityReport rep = check_banach_algebra(f, g, p, alpha, s);
        CHECK(rep.holds);
      }
  }
}

TEST_CASE("basic inequality: zero integrand is trivial, identity closed form") {
  const SampledFunction zero = sample([](double) { return 0.0; }, Interval(0.0, 1.0), 65);
  const SampledFunction f0 = sample(parse_expr("x^2"), Interval(-1.0, 1.0), 65);
  auto [za, zb] = check_basic_inequality(f0, zero, 2.0, 0.5, 0.0);
  CHECK(za.holds);
  CHECK(za.lhs == 0.0);
  CHECK(zb.holds);

  // h = 1, alpha0 = 0, t0 = 0 gives g = id; f = id.  Closed forms:
  // ||id . 1||_{V_p} = 2, ||id|| = 2, ||1|| = 1
  const SampledFunction one = sample([](double) { return 1.0; }, Interval(0.0, 1.0), 65);
  const SampledFunction id = sample(parse_expr("x"), Interval(0.0, 1.0), 65);
  auto [a, b] = check_basic_inequality(id, one, 2.0, 0.0, 0.0);
  CHECK(a.holds);
  CHECK(b.lhs == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b.rhs == doctest::Approx(std::pow(2.0, 0.5) * 2.0 * 1.0).epsilon(1e-12));
  CHECK(b.holds);
}

TEST_CASE("basic inequality: seeded sweep; (a) holds implies (b) holds") {
  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                           FamilyId::Step};
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s * 17 + 3);
    const SampledFunction h = make_family_sample(fams[s % 4], s, Interval(0.0, 1.0), 129);
    const double alpha0 = rng.uniform(-1.0, 1.0);
    const double t0 = rng.uniform(0.0, 1.0);
    const SampledFunction g = cumulative_integral(h, alpha0, t0);
    const SampledFunction f =
        make_family_sample(fams[(s + 1) % 4], s ^ 0x777u, image_interval(g).interval, 129);
    for (double p : {1.0, 2.0, 3.0}) {
      auto [a, b] = check_basic_inequality(f, h, p, alpha0, t0, s);
      CHECK(a.holds);
      CHECK(b.holds);  // (b) follows from (a) plus norm algebra
    }
  }
}

TEST_CASE("composition bvp1: identity outer is safely dominated") {
  const Expr id = parse_expr("x");
  const Expr g = parse_expr("sin(2*x) + 0.2*x");
  const InequalityReport rep = check_composition_bvp1(id, g, 2.0, Interval(-1.0, 1.0));
  CHECK(rep.holds);
}

TEST_CASE("composition bvp1: the absolute-value operator acts boundedly") {
  const Expr av = parse_expr("abs(x)");
  Rng rng(3);
  for (int t = 0; t < 25; ++t) {
    const Expr g = make_smooth_chain_expr(rng);
    const InequalityReport rep =
        check_composition_bvp1(av, g, 2.0, Interval(-1.0, 1.0), 513, std::uint64_t(t));
    CHECK(rep.holds);
  }
}

TEST_CASE("composition bvp1: smooth and kinked sweep") {
  Rng rng(91);
  for (int t = 0; t < 60; ++t) {
    const Expr f = make_kink_expr(rng);
    const Expr g = make_kink_expr(rng);
    for (double p : {1.0, 2.0}) {
      const InequalityReport rep =
          check_composition_bvp1(f, g, p, Interval(-1.0, 1.0), 257, std::uint64_t(t));
      CHECK(rep.holds);
    }
  }
}

TEST_CASE("nfold: identity chains make the ratio exactly 2^{-(n-1)/p}") {
  const double p = 2.0;
  double prev_ratio = -1.0;
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    std::vector<Expr> gs(n, parse_expr("x"));
    const NfoldReport rep = check_nfold(gs, nullptr, p, Interval(0.0, 1.0), 65);
    CHECK(rep.side_i.holds);
    CHECK(rep.side_i.lhs == 1.0);
    CHECK(rep.side_i.ratio ==
          doctest::Approx(std::pow(2.0, -double(n - 1) / p)).epsilon(1e-12));
    if (prev_ratio > 0.0)
      CHECK(rep.side_i.ratio / prev_ratio ==
            doctest::Approx(std::pow(2.0, -1.0 / p)).epsilon(1e-12));
    prev_ratio = rep.side_i.ratio;
  }
}

TEST_CASE("nfold: n = 2 and n = 3 right-hand sides reproduce the expanded"
          " two- and three-factor formulas") {
  Rng rng(1234);
  const Interval window(-1.0, 1.0);
  const std::size_t n = 257;
  for (int t = 0; t < 10; ++t) {
    const Expr g1 = make_smooth_chain_expr(rng);
    const Expr g2 = make_smooth_chain_expr(rng);
    const Expr g3 = make_smooth_chain_expr(rng);
    const Expr f = make_smooth_chain_expr(rng);
    const double p = (t % 2 == 0) ? 2.0 : 1.5;

    {  // n = 2: rhs(i) = 2^{1/p} ||g1'||_{V_p(g2(I))} ||g2'||_{V_p(I)}
      const std::vector<Expr> gs{g1, g2};
      const NfoldReport rep = check_nfold(gs, &f, p, window, n);
      const Interval img2 = image_interval(sample(g2, window, n)).interval;
      const double expect_i = std::pow(2.0, 1.0 / p) *
                              vp_norm(sample(g1.derivative(), img2, n), p) *
                              vp_norm(sample(g2.derivative(), window, n), p);
      CHECK(rep.side_i.rhs == doctest::Approx(expect_i).epsilon(1e-12));
      const Interval img12 =
          image_interval(sample(Expr::compose(g1, g2), window, n)).interval;
      const double expect_ii =
          std::pow(2.0, 2.0 / p) * vp_norm(sample(f, img12, n), p) *
          vp_norm(sample(g1.derivative(), img2, n), p) *
          vp_norm(sample(g2.derivative(), window, n), p);
      CHECK(rep.side_ii->rhs == doctest::Approx(expect_ii).epsilon(1e-12));
    }
    {  // n = 3 carries 2^{2/p} and the factors over I, g3(I), g2 o g3(I)
      const std::vector<Expr> gs{g1, g2, g3};
      const NfoldReport rep = check_nfold(gs, &f, p, window, n);
      const Interval img3 = image_interval(sample(g3, window, n)).interval;
      const Interval img23 =
          image_interval(sample(Expr::compose(g2, g3), window, n)).interval;
      const double expect_i = std::pow(2.0, 2.0 / p) *
                              vp_norm(sample(g3.derivative(), window, n), p) *
                              vp_norm(sample(g1.derivative(), img23, n), p) *
                              vp_norm(sample(g2.derivative(), img3, n), p);
      CHECK(rep.side_i.rhs == doctest::Approx(expect_i).epsilon(1e-12));
      CHECK(rep.prefactor_ii == doctest::Approx(std::pow(2.0, 3.0 / p)));
    }
  }
}

TEST_CASE("nfold: seeded chain sweep holds on both sides") {
  Rng rng(7);
  for (std::uint64_t s = 0; s < 40; ++s) {
    const std::size_t n = 2 + s % 3;  // chains of length 2, 3, 4
    std::vector<Expr> gs;
    for (std::size_t i = 0; i < n; ++i) gs.push_back(make_smooth_chain_expr(rng));
    const Expr f = make_smooth_chain_expr(rng);
    const NfoldReport rep = check_nfold(gs, &f, 2.0, Interval(-1.0, 1.0), 257, s);
    CHECK(rep.side_i.holds);
    CHECK(rep.side_ii->holds);
  }
}

TEST_CASE("norm property: identity gives c <= 1, affine stays finite") {
  GeneratedFunction id;
  id.name = "id";
  id.f = [](double y) { return y; };
  id.df = [](double) { return 1.0; };
  id.has_derivative = true;
  for (FamilyId fam : {FamilyId::Trig, FamilyId::Step}) {
    const NormPropertyEstimate est =
        check_norm_property(id, fam, NormSelector::Vp, 20, 2.0, Interval(0.0, 1.0), 129, 5);
    CHECK(est.c <= 1.0 + 1e-12);
  }

  GeneratedFunction affine;
  affine.name = "affine";
  affine.f = [](double y) { return 2.0 * y - 1.0; };
  affine.df = [](double) { return 2.0; };
  affine.has_derivative = true;
  const NormPropertyEstimate est = check_norm_property(
      affine, FamilyId::SmoothPoly, NormSelector::Vp, 30, 2.0, Interval(0.0, 1.0), 129, 5);
  CHECK(est.c > 0.0);
  CHECK(est.c <= 2.0 + 1.0 + 1e-9);
}

TEST_CASE("norm property: a subcritical psi_ab estimate grows under refinement") {
  // 1/p = 0.5 > alpha/beta - 1 = 0.2: psi is outside BV_p^1, so the BV_p^1
  // operator constant cannot stabilize as the grid resolves the oscillation
  const CorpusFunction psi = corpus_psi_ab(1.2, 1.0);
  GeneratedFunction f;
  f.name = psi.name;
  f.f = psi.f;
  f.df = psi.df;
  f.has_derivative = true;
  std::vector<double> c_est;
  for (std::size_t n : {257u, 4097u}) {
    const NormPropertyEstimate est = check_norm_property(
        f, FamilyId::SmoothPoly, NormSelector::BVp1, 6, 2.0, Interval(-1.0, 1.0), n, 3);
    c_est.push_back(est.c);
  }
  CHECK(c_est[1] > 1.15 * c_est[0]);
}

TEST_CASE("mult support: zero factor, bump factor, frozen-constant sweep") {
  const Interval window(-2.0, 2.0);
  const Interval support(-1.0, 1.0);
  GeneratedFunction one;
  one.name = "one";
  one.f = [](double) { return 1.0; };
  one.df = [](double) { return 0.0; };
  one.has_derivative = true;
  GeneratedFunction zero;
  zero.name = "zero";
  zero.f = [](double) { return 0.0; };
  zero.df = [](double) { return 0.0; };
  zero.has_derivative = true;

  const InequalityReport z = check_mult_support(one, zero, 2.0, window, support);
  CHECK(z.holds);
  CHECK(z.lhs == 0.0);

  const FamilyId fams[] = {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink};
  for (std::uint64_t s = 0; s < 50; ++s) {
    const GeneratedFunction f = make_family_function(fams[s % 3], 1000 + s);
    const GeneratedFunction g = make_family_function(fams[(s + 1) % 3], (1000 + s) ^ 0xabcdu);
    const InequalityReport rep = check_mult_support(f, g, 2.0, window, support, 513, s);
    CHECK(rep.holds);  // no exceedance of the frozen constant
  }
}

TEST_CASE("sobolev chain: identity, smooth pair, abspow kink") {
  const Expr id = parse_expr("x");
  const Expr u = parse_expr("sin(x)");
  const SobolevChainReport a = check_sobolev_chain(id, u, 2.0, Interval(-1.0, 1.0), 10001);
  CHECK(a.residual_ok);
  CHECK(a.norm_bound.holds);

  const SobolevChainReport b =
      check_sobolev_chain(parse_expr("x^2"), u, 2.0, Interval(-1.0, 1.0), 10001, 1e-3);
  CHECK(b.residual <= 1e-3);
  CHECK(b.norm_bound.holds);

  // G' continuous but not differentiable at 0; u crosses zero
  const Expr g15 = Expr::abspow(Expr::variable(), 1.5);
  const Expr u2 = parse_expr("x - 0.1");
  const SobolevChainReport c =
      check_sobolev_chain(g15, u2, 2.0, Interval(-1.0, 1.0), 10001, 1e-2);
  CHECK(c.residual <= 1e-2);
  CHECK(c.norm_bound.holds);

  CHECK_THROWS_AS(check_sobolev_chain(parse_expr("x + 1"), u, 2.0, Interval(-1.0, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("example4: the three pinned threshold cases") {
  const Example4Report conv = scan_example4(2.0, 0.5, 2.0, 12);
  CHECK(conv.cls == Classification::Convergent);
  CHECK(conv.matches_criterion);

  const Example4Report div = scan_example4(1.2, 1.0, 2.0, 12);
  CHECK(div.cls == Classification::Divergent);
  CHECK(div.matches_criterion);

  const Example4Report conv2 = scan_example4(1.0, 0.5, 16.0, 12);
  CHECK(conv2.cls == Classification::Convergent);
  CHECK(conv2.matches_criterion);

  CHECK_THROWS_AS(scan_example4(0.5, 0.9, 2.0, 12), std::invalid_argument);
}

TEST_CASE("example3: psi is a convergent corpus member") {
  const CorpusFunction psi = corpus_psi();
  std::vector<double> sums;
  for (int level = 8; level <= 12; ++level) {
    const std::size_t n = std::size_t(1) << level;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = -0.5 + (double(i) + 0.5) / double(n);
      ys[i] = psi.df(xs[i]);
    }
    sums.push_back(std::pow(pvar_dp_pruned(SampledFunction(xs, ys), 2.0).value, 2.0));
  }
  CHECK(std::abs(sums.back() / sums[sums.size() - 2] - 1.0) < 0.05);
}

TEST_CASE("reports are deterministic functions of inputs and seed") {
  const SampledFunction f = make_family_sample(FamilyId::Trig, 11, Interval(0.0, 1.0), 65);
  const SampledFunction g = make_family_sample(FamilyId::Step, 12, Interval(0.0, 1.0), 65);
  const InequalityReport a = check_banach_algebra(f, g, 2.0, 0.0, 99);
  const InequalityReport b = check_banach_algebra(f, g, 2.0, 0.0, 99);
  CHECK(a.lhs == b.lhs);
  CHECK(a.rhs == b.rhs);
  CHECK(a.inputs_digest == b.inputs_digest);
  CHECK(a.holds == b.holds);
}

TEST_CASE("families: deterministic in the seed and of finite vp_norm") {
  for (FamilyId id : {FamilyId::SmoothPoly, FamilyId::Trig, FamilyId::AbsKink,
                      FamilyId::Step, FamilyId::CorpusPsi, FamilyId::CorpusUAlpha,
                      FamilyId::CorpusPsiAB}) {
    for (std::uint64_t seed : {0ull, 7ull, 123ull}) {
      const FunctionFamily fam{id, seed, 129};
      const Interval window =
          (id == FamilyId::CorpusPsi || id == FamilyId::CorpusPsiAB)
              ? Interval(-0.5 + 1e-3, 0.5 - 1e-3)
              : Interval(0.0, 1.0);
      const SampledFunction a = make_family_sample(fam, window);
      const SampledFunction b = make_family_sample(fam, window);
      CHECK(a.ys == b.ys);
      const double norm = vp_norm(a, 2.0);
      CHECK(std::isfinite(norm));
    }
  }
}

TEST_CASE("corpus bump: plateau, support, and derivative consistency") {
  CHECK(smooth_bump(0.0) == 1.0);
  CHECK(smooth_bump(1.0 / std::exp(1.0)) == 1.0);
  CHECK(smooth_bump(0.5) == 0.0);
  CHECK(smooth_bump(0.7) == 0.0);
  for (double t : {-0.45, -0.4, 0.42, 0.48}) {
    const double fd = (smooth_bump(t + 1e-7) - smooth_bump(t - 1e-7)) / 2e-7;
    CHECK(smooth_bump_deriv(t) == doctest::Approx(fd).epsilon(1e-5));
  }
}
