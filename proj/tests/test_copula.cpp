#include <doctest.h>

#include <cmath>
#include <vector>

#include "amo/copula.hpp"
#include "amo/numerics.hpp"

using namespace amo;

namespace {

AmoCopula table1_pair(GeneratorTag tag, double theta) {
  return AmoCopula(make_generator(tag, theta),
                   make_distortion(DistortionTag::table1),
                   make_distortion(DistortionTag::table1));
}

AmoCopula linear_pair(GeneratorTag tag, double theta, double a1, double a2) {
  return AmoCopula(make_generator(tag, theta),
                   make_distortion(DistortionTag::linear, a1),
                   make_distortion(DistortionTag::linear, a2));
}

}  // namespace

TEST_CASE("margins, groundedness and Frechet bounds") {
  AmoCopula c = linear_pair(GeneratorTag::exponential, 0.0, 0.3, 0.6);
  for (int i = 1; i <= 9; ++i) {
    double u = i / 10.0;
    CHECK(c.evaluate(u, 1.0) == u);
    CHECK(c.evaluate(1.0, u) == u);
    CHECK(c.evaluate(u, 0.0) == 0.0);
    CHECK(c.evaluate(0.0, u) == 0.0);
    for (int j = 1; j <= 9; ++j) {
      double v = j / 10.0;
      double val = c.evaluate(u, v);
      CHECK(val >= std::max(u + v - 1.0, 0.0) - 1e-12);
      CHECK(val <= std::min(u, v) + 1e-12);
    }
  }
  CHECK_THROWS_AS(c.evaluate(1.5, 0.5), BadParameter);
  CHECK_THROWS_AS(c.evaluate(0.5, -0.1), BadParameter);
}

TEST_CASE("hand-evaluated copula values") {
  // classical Marshall-Olkin diagonal: C(u,u) = u^(1+a)
  AmoCopula mo = linear_pair(GeneratorTag::exponential, 0.0, 0.4, 0.4);
  for (double u : {0.2, 0.5, 0.8})
    CHECK(mo.evaluate(u, u) == doctest::Approx(std::pow(u, 1.4)).epsilon(1e-12));
  // off the diagonal: min(u^(1-a) v, u v^(1-a)) at a = 0.5
  AmoCopula half = linear_pair(GeneratorTag::exponential, 0.0, 0.5, 0.5);
  CHECK(half.evaluate(0.3, 0.7) ==
        doctest::Approx(0.3 * std::sqrt(0.7)).epsilon(1e-12));

  AmoCopula c1 = linear_pair(GeneratorTag::clayton, 1.0, 0.5, 0.5);
  CHECK(c1.evaluate(0.5, 0.5) == doctest::Approx(0.4).epsilon(1e-12));

  // frozen 30-digit references for the asymmetric workhorse
  AmoCopula c2 = table1_pair(GeneratorTag::clayton, 2.0);
  CHECK(c2.evaluate(0.3, 0.6) ==
        doctest::Approx(0.2916739603764559).epsilon(1e-12));
  CHECK(c2.evaluate(0.5, 0.5) ==
        doctest::Approx(0.4321661334033271).epsilon(1e-12));
}

TEST_CASE("copula dominates the plain Archimedean one") {
  AmoCopula c = table1_pair(GeneratorTag::frank, 4.0);
  const Generator& g = c.generator();
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      double u = i / 10.0, v = j / 10.0;
      CHECK(c.evaluate(u, v) >= g(g.inverse(u) + g.inverse(v)) - 1e-12);
    }
}

TEST_CASE("two-increasing on probe rectangles") {
  AmoCopula c = AmoCopula(make_generator(GeneratorTag::gumbel, 2.0),
                          make_distortion(DistortionTag::linear, 0.3),
                          make_distortion(DistortionTag::linear, 0.6));
  const int n = 20;
  std::vector<std::vector<double>> grid(n + 1, std::vector<double>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      grid[i][j] = c.evaluate(static_cast<double>(i) / n,
                              static_cast<double>(j) / n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(grid[i + 1][j + 1] - grid[i + 1][j] - grid[i][j + 1] +
                grid[i][j] >=
            -1e-12);
}

TEST_CASE("exchangeable iff the distortions match") {
  AmoCopula sym = table1_pair(GeneratorTag::clayton, 2.0);
  for (double u : {0.2, 0.5, 0.7})
    for (double v : {0.3, 0.6, 0.9})
      CHECK(sym.evaluate(u, v) ==
            doctest::Approx(sym.evaluate(v, u)).epsilon(1e-12));
  AmoCopula asym = linear_pair(GeneratorTag::exponential, 0.0, 0.3, 0.6);
  CHECK(std::fabs(asym.evaluate(0.3, 0.7) - asym.evaluate(0.7, 0.3)) > 1e-3);
}

TEST_CASE("frontier curve") {
  // exponential G with Linear(0.3, 0.6): h(u) = u^(0.7/0.4)
  AmoCopula c = linear_pair(GeneratorTag::exponential, 0.0, 0.3, 0.6);
  for (double u : {0.1, 0.4, 0.8})
    CHECK(c.frontier(u) == doctest::Approx(std::pow(u, 1.75)).epsilon(1e-10));
  CHECK(c.frontier(1.0) == 1.0);
  CHECK(c.frontier(0.0) == 0.0);
  CHECK_THROWS_AS(c.frontier(1.2), BadParameter);

  // equal distortions collapse the frontier to the diagonal
  AmoCopula sym = table1_pair(GeneratorTag::frank, 4.0);
  for (double u : {0.15, 0.5, 0.85})
    CHECK(sym.frontier(u) == doctest::Approx(u).epsilon(1e-10));

  // both branch formulas agree on the frontier itself
  const Generator& g = c.generator();
  for (double u : {0.2, 0.5, 0.9}) {
    double v = c.frontier(u);
    double xu = g.inverse(u), xv = g.inverse(v);
    double branch1 = g(c.d1()(xu) + xv);
    double branch2 = g(xu + c.d2()(xv));
    CHECK(branch1 == doctest::Approx(branch2).epsilon(1e-9));
  }
}

TEST_CASE("case tag records the dominating distortion") {
  CHECK(linear_pair(GeneratorTag::exponential, 0.0, 0.6, 0.3).case_tag() ==
        CaseTag::case1);
  CHECK(linear_pair(GeneratorTag::exponential, 0.0, 0.3, 0.6).case_tag() ==
        CaseTag::case2);
  // ties resolve to case1
  CHECK(table1_pair(GeneratorTag::clayton, 2.0).case_tag() == CaseTag::case1);
}

TEST_CASE("domain guard rejects short distortions") {
  Generator neg = make_generator(GeneratorTag::clayton, -0.25);  // x_G = 4
  CHECK_THROWS_AS(AmoCopula(neg, make_distortion(DistortionTag::linear, 0.5, 2.0),
                            make_distortion(DistortionTag::linear, 0.5, 2.0)),
                  DomainMismatch);
}

TEST_CASE("singular mass closed cases") {
  // clayton theta=2 with the Table1 pair integrates to exactly 1/3
  CHECK(table1_pair(GeneratorTag::clayton, 2.0).singular_mass() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  // proportional case: equal Linear(a) gives (1-a)/(1+a) for any generator
  CHECK(linear_pair(GeneratorTag::exponential, 0.0, 0.5, 0.5).singular_mass() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  CHECK(linear_pair(GeneratorTag::frank, 4.0, 1.0 / 3.0, 1.0 / 3.0)
            .singular_mass() == doctest::Approx(0.5).epsilon(1e-9));
  // exponential G with the Table1 pair: e^(1/4) sqrt(pi)/2 erfc(1/2)
  double closed = std::exp(0.25) * std::sqrt(std::acos(-1.0)) / 2.0 *
                  std::erfc(0.5);
  CHECK(table1_pair(GeneratorTag::exponential, 0.0).singular_mass() ==
        doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("joint model closed values") {
  HazardFn id = identity_hazard();
  JointModel m1(make_generator(GeneratorTag::clayton, 1.0), {id, id, id});
  CHECK(m1.joint_survival(1.0, 2.0) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(m1.joint_survival(0.0, 0.0) == 1.0);

  JointModel m2(make_generator(GeneratorTag::clayton, 2.0), {id, id, id});
  CHECK(m2.margin_survival(1, 3.0) ==
        doctest::Approx(1.0 / std::sqrt(7.0)).epsilon(1e-12));
  CHECK(m2.margin_survival(2, 0.0) == 1.0);
  CHECK_THROWS_AS(m2.margin_survival(3, 1.0), BadParameter);
  CHECK_THROWS_AS(m2.joint_survival(-1.0, 1.0), BadParameter);

  JointModel m3(make_generator(GeneratorTag::exponential), {id, id, id});
  CHECK(m3.both_failed_by(0.0) == 0.0);
  CHECK(m3.both_failed_by(1.0) ==
        doctest::Approx(1.0 + std::exp(-3.0) - 2.0 * std::exp(-2.0))
            .epsilon(1e-12));
}

TEST_CASE("singular component curves") {
  HazardFn id = identity_hazard();
  // H3 = c(H1+H2) with c = 1/2: F^s(t) = (1/3) P(min <= t)
  JointModel m(make_generator(GeneratorTag::exponential), {id, id, id});
  for (double t : {0.5, 1.0, 2.0}) {
    double p_min = 1.0 - m.joint_survival(t, t);
    CHECK(m.singular_component(t) ==
          doctest::Approx(p_min / 3.0).epsilon(1e-9));
  }
  CHECK(m.singular_mass() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  // clayton with H1+H2 = H3^2 + H3: F^s(t) = (1-(1+t)^(-2/theta-1))/(2+theta)
  double theta = 2.0;
  HazardFn half_quad = make_hazard(
      [](double x) { return 0.5 * (x * x + x); },
      [](double y) { return 0.5 * (std::sqrt(1.0 + 8.0 * y) - 1.0); },
      [](double x) { return x + 0.5; });
  JointModel mc(make_generator(GeneratorTag::clayton, theta),
                {half_quad, half_quad, id});
  for (double t : {0.5, 1.0, 3.0}) {
    double expect =
        (1.0 - std::pow(1.0 + t, -2.0 / theta - 1.0)) / (2.0 + theta);
    CHECK(mc.singular_component(t) == doctest::Approx(expect).epsilon(1e-9));
  }
  CHECK(mc.singular_mass() == doctest::Approx(0.25).epsilon(1e-9));

  // the absolutely continuous remainder is itself a sub-distribution
  double prev = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    double ac = mc.both_failed_by(t) - mc.singular_component(t);
    CHECK(ac >= prev - 1e-10);
    prev = ac;
  }
}

TEST_CASE("hazard-triple and copula views agree") {
  HazardFn id = identity_hazard();
  JointModel m(make_generator(GeneratorTag::exponential), {id, id, id});
  AmoCopula c = copula_from_hazards(m.generator(), m.hazards());
  // equal unit rates mean Linear(1/2) distortions
  CHECK(c.evaluate(0.3, 0.7) ==
        doctest::Approx(0.3 * std::sqrt(0.7)).epsilon(1e-9));
  CHECK(c.singular_mass() == doctest::Approx(1.0 / 3.0).epsilon(1e-8));

  AmoCopula direct = table1_pair(GeneratorTag::clayton, 2.0);
  JointModel rep = representative_joint_model(direct);
  CHECK(rep.singular_mass() ==
        doctest::Approx(direct.singular_mass()).epsilon(1e-8));
  // representative choice: H3 = id, so u = G(K1(t)) matches G(Dhat1^{-1}(t))
  CHECK(rep.k1(2.0) == doctest::Approx(direct.d1().hat_inverse(2.0)).epsilon(1e-9));

  Generator neg = make_generator(GeneratorTag::clayton, -0.25);
  AmoCopula cneg(neg, make_distortion(DistortionTag::linear, 0.5, 4.0),
                 make_distortion(DistortionTag::linear, 0.5, 4.0));
  CHECK_THROWS_AS(representative_joint_model(cneg), DomainMismatch);
}

TEST_CASE("equivalence detects a planted rescale") {
  AmoCopula a = linear_pair(GeneratorTag::clayton, 2.0, 0.5, 0.5);
  AmoCopula b(scale_generator(make_generator(GeneratorTag::clayton, 2.0), 3.0),
              make_distortion(DistortionTag::linear, 0.5),
              make_distortion(DistortionTag::linear, 0.5));
  EquivalenceResult r = equivalence_check(a, b);
  CHECK(r.equivalent);
  CHECK(r.scale == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(r.max_copula_gap <= 1e-8);

  EquivalenceResult same = equivalence_check(a, a);
  CHECK(same.equivalent);
  CHECK(same.scale == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("equivalence reports a witness for distinct families") {
  AmoCopula a = linear_pair(GeneratorTag::clayton, 2.0, 0.5, 0.5);
  AmoCopula b = linear_pair(GeneratorTag::frank, 4.0, 0.5, 0.5);
  EquivalenceResult r = equivalence_check(a, b);
  CHECK_FALSE(r.equivalent);
  CHECK(r.witness_gap > 1e-8);
  CHECK(std::fabs(a.evaluate(r.witness_u, r.witness_v) -
                  b.evaluate(r.witness_u, r.witness_v)) ==
        doctest::Approx(r.witness_gap).epsilon(1e-12));
  CHECK_THROWS_AS(equivalence_check(a, b, 2), BadParameter);
}
