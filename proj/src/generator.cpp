#include "amo/generator.hpp"

#include <cmath>
#include <utility>

namespace amo {

Generator::Generator(Parts parts)
    : eval_(std::move(parts.eval)),
      inverse_(std::move(parts.inverse)),
      deriv_(std::move(parts.deriv)),
      domain_end_(parts.domain_end),
      completely_monotone_(parts.completely_monotone),
      infinity_decay_(parts.infinity_decay),
      zero_expansion_(parts.zero_expansion),
      frailty_(parts.frailty),
      tag_(parts.tag),
      parameter_(parts.parameter) {
  if (!eval_ || !inverse_ || !deriv_)
    throw BadParameter("generator: eval, inverse and deriv are required");
  if (!(domain_end_ > 0.0))
    throw BadParameter("generator: domain_end must be positive");
}

namespace {

Generator make_exponential() {
  Generator::Parts p;
  p.eval = [](double x) { return std::exp(-x); };
  p.inverse = [](double u) { return -std::log(u); };
  p.deriv = [](double x) { return -std::exp(-x); };
  p.completely_monotone = true;
  p.infinity_decay = {DecayKind::exponential, 1.0, 1.0, 1.0};
  p.zero_expansion = ZeroExpansion{1.0, 1.0};
  p.frailty = FrailtySpec{FrailtyKind::degenerate, 1.0};
  p.tag = GeneratorTag::exponential;
  p.parameter = 0.0;
  return Generator(std::move(p));
}

Generator make_clayton(double theta) {
  if (theta == 0.0 || theta <= -0.5)
    throw BadParameter("clayton: theta must be in (-1/2,0) or (0,inf)");
  Generator::Parts p;
  p.tag = GeneratorTag::clayton;
  p.parameter = theta;
  if (theta > 0.0) {
    p.eval = [theta](double x) { return std::pow(1.0 + x, -1.0 / theta); };
    p.inverse = [theta](double u) {
      if (u <= 0.0) return kInf;
      return std::pow(u, -theta) - 1.0;
    };
    p.deriv = [theta](double x) {
      return -(1.0 / theta) * std::pow(1.0 + x, -1.0 / theta - 1.0);
    };
    p.completely_monotone = true;
    p.infinity_decay = {DecayKind::polynomial, 0.0, 1.0, 1.0 / theta};
    p.zero_expansion = ZeroExpansion{1.0 / theta, 1.0};
    p.frailty = FrailtySpec{FrailtyKind::gamma, 1.0 / theta};
  } else {
    // G(x) = (1 + theta x)^(-1/theta), hits zero at -1/theta. The exponent
    // -1/theta exceeds 2, which keeps G' concave on the whole domain.
    double end = -1.0 / theta;
    p.domain_end = end;
    p.eval = [theta, end](double x) {
      if (x >= end) return 0.0;
      return std::pow(1.0 + theta * x, -1.0 / theta);
    };
    p.inverse = [theta, end](double u) {
      if (u <= 0.0) return end;
      return (std::pow(u, -theta) - 1.0) / theta;
    };
    p.deriv = [theta, end](double x) {
      if (x >= end) return 0.0;
      return -std::pow(1.0 + theta * x, -1.0 / theta - 1.0);
    };
    p.completely_monotone = false;
    p.zero_expansion = ZeroExpansion{1.0, 1.0};
  }
  return Generator(std::move(p));
}

Generator make_gumbel(double theta) {
  if (theta < 1.0) throw BadParameter("gumbel: theta must be >= 1");
  Generator::Parts p;
  p.eval = [theta](double x) { return std::exp(-std::pow(x, 1.0 / theta)); };
  p.inverse = [theta](double u) {
    if (u <= 0.0) return kInf;
    return std::pow(-std::log(u), theta);
  };
  p.deriv = [theta](double x) {
    double r = std::pow(x, 1.0 / theta);
    return -(1.0 / theta) * std::pow(x, 1.0 / theta - 1.0) * std::exp(-r);
  };
  p.completely_monotone = true;
  p.infinity_decay = {DecayKind::exponential, 1.0, 1.0, 1.0 / theta};
  p.zero_expansion = ZeroExpansion{1.0, 1.0 / theta};
  p.frailty = FrailtySpec{FrailtyKind::positive_stable, 1.0 / theta};
  p.tag = GeneratorTag::gumbel;
  p.parameter = theta;
  return Generator(std::move(p));
}

Generator make_frank(double theta) {
  if (theta <= 0.0) throw BadParameter("frank: theta must be > 0");
  double em = std::expm1(-theta);  // e^{-theta} - 1, negative
  Generator::Parts p;
  p.eval = [theta, em](double x) {
    return -std::log1p(std::exp(-x) * em) / theta;
  };
  p.inverse = [theta, em](double u) {
    if (u <= 0.0) return kInf;
    return -std::log(std::expm1(-theta * u) / em);
  };
  p.deriv = [theta, em](double x) {
    double q = std::exp(-x) * em;
    return q / (theta * (1.0 + q));
  };
  p.completely_monotone = true;
  p.infinity_decay = {DecayKind::exponential, 1.0, -em / theta, 1.0};
  p.zero_expansion = ZeroExpansion{std::expm1(theta) / theta, 1.0};
  p.frailty = FrailtySpec{FrailtyKind::log_series, -em};
  p.tag = GeneratorTag::frank;
  p.parameter = theta;
  return Generator(std::move(p));
}

}  // namespace

Generator make_generator(GeneratorTag family, double parameter) {
  switch (family) {
    case GeneratorTag::exponential:
      return make_exponential();
    case GeneratorTag::clayton:
      return make_clayton(parameter);
    case GeneratorTag::gumbel:
      return make_gumbel(parameter);
    case GeneratorTag::frank:
      return make_frank(parameter);
    case GeneratorTag::custom:
      break;
  }
  throw BadParameter("make_generator: custom generators are built directly");
}

Generator scale_generator(const Generator& g, double m) {
  if (!(m > 0.0)) throw BadParameter("scale_generator: m must be > 0");
  Generator::Parts p;
  p.eval = [g, m](double z) { return g(m * z); };
  p.inverse = [g, m](double u) { return g.inverse(u) / m; };
  p.deriv = [g, m](double z) { return m * g.deriv(m * z); };
  p.domain_end = g.domain_end() / m;
  p.completely_monotone = g.completely_monotone();
  InfinityDecay d = g.infinity_decay();
  if (d.kind == DecayKind::polynomial) {
    d.c *= std::pow(m, -d.gamma);
  } else if (d.kind == DecayKind::exponential) {
    d.a *= std::pow(m, d.gamma);
  }
  p.infinity_decay = d;
  if (g.zero_expansion()) {
    auto z = *g.zero_expansion();
    p.zero_expansion = ZeroExpansion{z.c * std::pow(m, z.gamma), z.gamma};
  }
  p.tag = GeneratorTag::custom;
  p.parameter = g.parameter();
  return Generator(std::move(p));
}

std::vector<GeneratorViolation> validate_generator(const Generator& g,
                                                   int probes) {
  std::vector<GeneratorViolation> out;
  if (probes < 8) throw BadParameter("validate_generator: too few probes");

  double g0 = g(0.0);
  if (std::fabs(g0 - 1.0) > 1e-9) out.push_back({"G(0)=1", 0.0});

  // Log grid over (0, x_G), capped at 1e8 for strict generators.
  double hi = std::isinf(g.domain_end())
                  ? 1e8
                  : g.domain_end() * (1.0 - 1e-9);
  double lo = std::min(1e-8, hi * 1e-6);
  std::vector<double> xs(probes);
  double ratio = std::pow(hi / lo, 1.0 / (probes - 1));
  double x = lo;
  for (int i = 0; i < probes; ++i, x *= ratio) xs[i] = x;

  std::vector<double> gv(probes), dv(probes);
  for (int i = 0; i < probes; ++i) {
    gv[i] = g(xs[i]);
    dv[i] = g.deriv(xs[i]);
  }

  for (int i = 0; i < probes; ++i) {
    if (dv[i] > 1e-12) out.push_back({"G' <= 0", xs[i]});
    if (i > 0 && gv[i] >= gv[i - 1] && gv[i - 1] > 0.0)
      out.push_back({"strict decrease", xs[i]});
    if (i > 0 && dv[i] < dv[i - 1] - 1e-12 * (1.0 + std::fabs(dv[i - 1])))
      out.push_back({"G' non-decreasing", xs[i]});
  }
  // Concavity of G' on consecutive (unevenly spaced) triples: the middle
  // value must not fall below the chord.
  for (int i = 0; i + 2 < probes; ++i) {
    double chord = dv[i] + (dv[i + 2] - dv[i]) * (xs[i + 1] - xs[i]) /
                               (xs[i + 2] - xs[i]);
    double scale = 1.0 + std::fabs(dv[i]) + std::fabs(dv[i + 2]);
    if (dv[i + 1] < chord - 1e-9 * scale)
      out.push_back({"G' concavity", xs[i + 1]});
  }
  return out;
}

double kendall_function_base(const Generator& g, double t) {
  if (t < 0.0 || t > 1.0)
    throw BadParameter("kendall_function: t outside [0,1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  double w = g.inverse(t);
  return t - g.deriv(w) * w;
}

double kendall_tau_base(const Generator& g) {
  switch (g.tag()) {
    case GeneratorTag::exponential:
      return 0.0;
    case GeneratorTag::clayton:
      return g.parameter() / (g.parameter() + 2.0);
    case GeneratorTag::gumbel:
      return 1.0 - 1.0 / g.parameter();
    default:
      break;
  }
  double integral = integrate(
      [&g](double t) { return kendall_function_base(g, t); }, {0.0, 1.0},
      1e-10);
  return 3.0 - 4.0 * integral;
}

}  // namespace amo
