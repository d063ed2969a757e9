#include "amo/sampling.hpp"

#include <cmath>

namespace amo {

double frailty_laplace(const FrailtySpec& spec, double x) {
  if (x < 0.0) throw BadParameter("frailty_laplace: negative argument");
  switch (spec.kind) {
    case FrailtyKind::degenerate:
      return std::exp(-x * spec.parameter);
    case FrailtyKind::gamma:
      return std::pow(1.0 + x, -spec.parameter);
    case FrailtyKind::positive_stable:
      return std::exp(-std::pow(x, spec.parameter));
    case FrailtyKind::log_series: {
      // ln(1 - p e^{-x}) / ln(1 - p)
      double p = spec.parameter;
      return std::log1p(-p * std::exp(-x)) / std::log1p(-p);
    }
  }
  throw BadParameter("frailty_laplace: unknown kind");
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      eng_(splitmix64(seed ^ splitmix64(stream))) {}

double RngStream::uniform01() {
  // 53-bit mantissa draw shifted into the open interval.
  return ((eng_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::exponential() { return -std::log(uniform01()); }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform01() - 1.0;
    v = 2.0 * uniform01() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double r = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * r;
  has_spare_ = true;
  return u * r;
}

namespace {

// Marsaglia-Tsang; shape < 1 boosted through shape+1.
double gamma_draw(double shape, RngStream& rng) {
  if (shape < 1.0) {
    double u = rng.uniform01();
    return gamma_draw(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rng.normal();
    double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    double v = t * t * t;
    double u = rng.uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Kanter representation of the one-sided stable law with transform
// exp(-s^a): S = (A(Theta)/W)^((1-a)/a),
// A(t) = sin((1-a)t) sin(at)^(a/(1-a)) / sin(t)^(1/(1-a)).
double stable_draw(double a, RngStream& rng) {
  if (a >= 1.0) return 1.0;  // index 1 degenerates to Y = 1
  double th = 3.14159265358979323846 * rng.uniform01();
  double w = rng.exponential();
  double A = std::sin((1.0 - a) * th) *
             std::pow(std::sin(a * th), a / (1.0 - a)) /
             std::pow(std::sin(th), 1.0 / (1.0 - a));
  return std::pow(A / w, (1.0 - a) / a);
}

// Sequential inversion of P(k) = -p^k / (k ln(1-p)).
double log_series_draw(double p, RngStream& rng) {
  double u = rng.uniform01();
  double term = -p / std::log1p(-p);
  double cum = term;
  double k = 1.0;
  while (u > cum && k < 1e7) {
    term *= p * k / (k + 1.0);
    k += 1.0;
    cum += term;
  }
  return k;
}

}  // namespace

double sample_frailty(const FrailtySpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case FrailtyKind::degenerate:
      return spec.parameter;
    case FrailtyKind::gamma:
      if (!(spec.parameter > 0.0))
        throw BadParameter("gamma frailty: shape must be > 0");
      return gamma_draw(spec.parameter, rng);
    case FrailtyKind::positive_stable:
      if (!(spec.parameter > 0.0 && spec.parameter <= 1.0))
        throw BadParameter("stable frailty: index must be in (0,1]");
      return stable_draw(spec.parameter, rng);
    case FrailtyKind::log_series:
      if (!(spec.parameter > 0.0 && spec.parameter < 1.0))
        throw BadParameter("log series frailty: p must be in (0,1)");
      return log_series_draw(spec.parameter, rng);
  }
  throw BadParameter("sample_frailty: unknown kind");
}

SamplePair sample_pair(const JointModel& m, RngStream& rng) {
  const Generator& g = m.generator();
  if (!g.frailty() || !g.completely_monotone() ||
      std::isfinite(g.domain_end()))
    throw UnsupportedGenerator(
        "sampling needs a completely monotone generator with a frailty "
        "representation");
  double y = sample_frailty(*g.frailty(), rng);
  double x1 = m.hazards().h1.inv(rng.exponential() / y);
  double x2 = m.hazards().h2.inv(rng.exponential() / y);
  double x3 = m.hazards().h3.inv(rng.exponential() / y);
  SamplePair s{};
  s.m1 = std::min(x1, x3);
  s.m2 = std::min(x2, x3);
  s.simultaneous = x3 <= x1 && x3 <= x2;
  s.u = g(m.k1(s.m1));
  s.v = g(m.k2(s.m2));
  return s;
}

std::vector<SamplePair> sample_batch(const JointModel& m, std::size_t n,
                                     RngStream& rng) {
  std::vector<SamplePair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_pair(m, rng));
  return out;
}

}  // namespace amo
