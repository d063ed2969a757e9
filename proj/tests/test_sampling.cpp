#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "amo/dependence.hpp"
#include "amo/hazard.hpp"
#include "amo/sampling.hpp"

using namespace amo;

namespace {

HazardTriple identity_triple() {
  return {identity_hazard(), identity_hazard(), identity_hazard()};
}

double ks_distance(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double hi = (i + 1.0) / n - x[i];
    double lo = x[i] - i / n;
    d = std::max(d, std::max(hi, lo));
  }
  return d;
}

}  // namespace

TEST_CASE("frailty Laplace transform reproduces each generator") {
  double xs[] = {0.1, 0.5, 1.0, 2.0, 5.0};
  Generator e = make_generator(GeneratorTag::exponential, 0.0);
  Generator c = make_generator(GeneratorTag::clayton, 2.0);
  Generator g = make_generator(GeneratorTag::gumbel, 2.0);
  Generator f = make_generator(GeneratorTag::frank, 4.0);
  for (double x : xs) {
    CHECK(frailty_laplace(*e.frailty(), x) == e(x));
    CHECK(frailty_laplace(*c.frailty(), x) == c(x));
    CHECK(frailty_laplace(*g.frailty(), x) == g(x));
    CHECK(frailty_laplace(*f.frailty(), x) == doctest::Approx(f(x)).epsilon(1e-14));
  }
  CHECK(frailty_laplace({FrailtyKind::degenerate, 2.0}, 1.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(frailty_laplace({FrailtyKind::gamma, 0.5}, -0.1), BadParameter);
}

TEST_CASE("rng streams are deterministic and separated") {
  RngStream a(123, 5);
  RngStream b(123, 5);
  for (int i = 0; i < 50; ++i) CHECK(a.uniform01() == b.uniform01());

  RngStream s0(42, 0);
  RngStream s1(42, 1);
  bool differ = false;
  for (int i = 0; i < 20; ++i)
    if (s0.uniform01() != s1.uniform01()) differ = true;
  CHECK(differ);
  CHECK(s0.seed() == 42);
  CHECK(s1.stream() == 1);

  RngStream u(7);
  for (int i = 0; i < 1000; ++i) {
    double x = u.uniform01();
    CHECK(x > 0.0);
    CHECK(x < 1.0);
    CHECK(u.exponential() > 0.0);
  }
}

TEST_CASE("frailty draws match their transforms") {
  RngStream rng(2024);

  CHECK(sample_frailty({FrailtyKind::degenerate, 3.5}, rng) == 3.5);
  // index 1 collapses the stable law onto the point mass at 1
  CHECK(sample_frailty({FrailtyKind::positive_stable, 1.0}, rng) == 1.0);

  const int n = 100000;
  double mean = 0.0;
  for (int i = 0; i < n; ++i)
    mean += sample_frailty({FrailtyKind::gamma, 1.0}, rng);
  CHECK(mean / n == doctest::Approx(1.0).epsilon(0.01));

  // empirical Laplace at x = 1 against the closed transform, ~10 sigma margins
  FrailtySpec specs[] = {
      {FrailtyKind::gamma, 0.5},           // exercises the shape < 1 boost
      {FrailtyKind::positive_stable, 0.5},
      {FrailtyKind::log_series, -std::expm1(-4.0)},
  };
  for (const FrailtySpec& spec : specs) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += std::exp(-sample_frailty(spec, rng));
    CHECK(acc / n == doctest::Approx(frailty_laplace(spec, 1.0)).epsilon(0.005));
  }

  CHECK_THROWS_AS(sample_frailty({FrailtyKind::gamma, 0.0}, rng), BadParameter);
  CHECK_THROWS_AS(sample_frailty({FrailtyKind::positive_stable, 1.5}, rng),
                  BadParameter);
  CHECK_THROWS_AS(sample_frailty({FrailtyKind::log_series, 1.0}, rng),
                  BadParameter);
}

TEST_CASE("classical shock model statistics") {
  JointModel m(make_generator(GeneratorTag::exponential, 0.0), identity_triple());
  RngStream rng(11);
  auto batch = sample_batch(m, 20000, rng);
  REQUIRE(batch.size() == 20000);

  int ties = 0;
  double mean_u = 0.0;
  for (const SamplePair& s : batch) {
    ties += s.simultaneous ? 1 : 0;
    mean_u += s.u;
    CHECK(s.m1 > 0.0);
    CHECK(s.u > 0.0);
    CHECK(s.u < 1.0);
    if (s.simultaneous) CHECK(s.m1 == s.m2);
  }
  // equal rates: P(X3 first) = 1/3, SE ~ 3.3e-3
  CHECK(ties / 20000.0 == doctest::Approx(1.0 / 3.0).epsilon(0.012));
  CHECK(mean_u / 20000.0 == doctest::Approx(0.5).epsilon(0.008));
}

TEST_CASE("sampling is reproducible and size-exact") {
  JointModel m(make_generator(GeneratorTag::clayton, 2.0), identity_triple());
  RngStream r1(99), r2(99);
  auto a = sample_batch(m, 200, r1);
  auto b = sample_batch(m, 200, r2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].m1 == b[i].m1);
    CHECK(a[i].v == b[i].v);
    CHECK(a[i].simultaneous == b[i].simultaneous);
  }
  RngStream r3(1);
  CHECK(sample_batch(m, 0, r3).empty());
}

TEST_CASE("ties respect the frontier and mass of the copula") {
  AmoCopula c(make_generator(GeneratorTag::clayton, 2.0),
              make_distortion(DistortionTag::table1),
              make_distortion(DistortionTag::linear, 0.5));
  JointModel m = representative_joint_model(c);
  RngStream rng(314);
  auto batch = sample_batch(m, 20000, rng);

  const Generator& g = c.generator();
  int ties = 0;
  for (const SamplePair& s : batch) {
    if (!s.simultaneous) continue;
    ++ties;
    // a systemic shock lands the pair exactly on the singular curve
    double xu = g.inverse(s.u);
    double xv = g.inverse(s.v);
    double mapped = c.d2().hat_inverse(c.d1().hat(xu));
    CHECK(std::fabs(xv - mapped) <= 1e-9 * std::max(1.0, std::fabs(xv)));
  }
  CHECK(ties / 20000.0 ==
        doctest::Approx(c.singular_mass()).epsilon(0.012));
}

TEST_CASE("sampled margins are uniform") {
  AmoCopula c(make_generator(GeneratorTag::clayton, 2.0),
              make_distortion(DistortionTag::table1),
              make_distortion(DistortionTag::table1));
  JointModel m = representative_joint_model(c);
  RngStream rng(555);
  auto batch = sample_batch(m, 10000, rng);
  std::vector<double> us, vs;
  us.reserve(batch.size());
  vs.reserve(batch.size());
  for (const SamplePair& s : batch) {
    us.push_back(s.u);
    vs.push_back(s.v);
  }
  double crit = 1.94947 / std::sqrt(10000.0);  // alpha = 0.001
  CHECK(ks_distance(std::move(us)) < crit);
  CHECK(ks_distance(std::move(vs)) < crit);
}

TEST_CASE("sampling rejects generators without a mixing law") {
  RngStream rng(1);
  JointModel neg(make_generator(GeneratorTag::clayton, -0.25), identity_triple());
  CHECK_THROWS_AS(sample_pair(neg, rng), UnsupportedGenerator);
  // scaling drops the frailty spec on purpose
  JointModel scaled(
      scale_generator(make_generator(GeneratorTag::clayton, 2.0), 2.0),
      identity_triple());
  CHECK_THROWS_AS(sample_pair(scaled, rng), UnsupportedGenerator);
}
