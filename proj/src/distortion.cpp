#include "amo/distortion.hpp"

#include <cmath>
#include <utility>

namespace amo {

Distortion::Distortion(Parts parts)
    : eval_(std::move(parts.eval)),
      inverse_(std::move(parts.inverse)),
      hat_eval_(std::move(parts.hat_eval)),
      hat_inverse_(std::move(parts.hat_inverse)),
      domain_end_(parts.domain_end),
      beta_zero_(parts.beta_zero),
      beta_inf_(parts.beta_inf),
      sub_linear_limit_(std::move(parts.sub_linear_limit)),
      hat_inverse_quadratic_(parts.hat_inverse_quadratic),
      tag_(parts.tag),
      parameter_(parts.parameter) {
  if (!eval_ || !inverse_ || !hat_eval_ || !hat_inverse_)
    throw BadParameter("distortion: all four maps are required");
}

double Distortion::sub_linear_limit(double gamma) const {
  if (!sub_linear_limit_)
    throw BadParameter("distortion: sub_linear_limit not available");
  return (*sub_linear_limit_)(gamma);
}

namespace {

Distortion make_linear(double alpha, double domain_end) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw BadParameter("linear distortion: alpha must be in (0,1)");
  Distortion::Parts p;
  p.eval = [alpha](double x) { return alpha * x; };
  p.inverse = [alpha](double y) { return y / alpha; };
  p.hat_eval = [alpha](double x) { return (1.0 - alpha) * x; };
  p.hat_inverse = [alpha](double y) { return y / (1.0 - alpha); };
  p.domain_end = domain_end;
  p.beta_zero = alpha;
  p.beta_inf = alpha;
  p.hat_inverse_quadratic = QuadraticMap{0.0, 1.0 / (1.0 - alpha)};
  p.tag = DistortionTag::linear;
  p.parameter = alpha;
  return Distortion(std::move(p));
}

Distortion make_log_shift(double alpha, double domain_end) {
  if (!(alpha > 0.0))
    throw BadParameter("log_shift distortion: alpha must be > 0");
  Distortion::Parts p;
  p.eval = [alpha](double x) { return x - std::log1p(alpha * x) / alpha; };
  p.hat_eval = [alpha](double x) { return std::log1p(alpha * x) / alpha; };
  p.hat_inverse = [alpha](double y) { return std::expm1(alpha * y) / alpha; };
  // No closed inverse for D itself; D is strictly increasing with D(y) <= y,
  // so [y, inf) brackets the root.
  auto eval = p.eval;
  p.inverse = [eval](double y) {
    if (y == 0.0) return 0.0;
    return invert_monotone(eval, y, {y, kInf});
  };
  p.domain_end = domain_end;
  p.beta_zero = 0.0;
  p.beta_inf = 1.0;
  p.tag = DistortionTag::log_shift;
  p.parameter = alpha;
  return Distortion(std::move(p));
}

Distortion make_sqrt_complement(double alpha, double domain_end) {
  if (!(alpha > 0.0))
    throw BadParameter("sqrt_complement distortion: alpha must be > 0");
  Distortion::Parts p;
  p.eval = [alpha](double x) {
    return x - (std::sqrt(alpha * x + 1.0) - 1.0) / alpha;
  };
  p.inverse = [alpha](double y) {
    double s = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha * y));
    return (s * s - 1.0) / alpha;
  };
  p.hat_eval = [alpha](double x) {
    return (std::sqrt(alpha * x + 1.0) - 1.0) / alpha;
  };
  p.hat_inverse = [alpha](double y) { return y * (alpha * y + 2.0); };
  p.domain_end = domain_end;
  p.beta_zero = 0.5;
  p.beta_inf = 1.0;
  p.hat_inverse_quadratic = QuadraticMap{alpha, 2.0};
  p.tag = DistortionTag::sqrt_complement;
  p.parameter = alpha;
  return Distortion(std::move(p));
}

Distortion make_sqrt_simple(double alpha, double domain_end) {
  if (!(alpha > 0.0))
    throw BadParameter("sqrt_simple distortion: alpha must be > 0");
  Distortion::Parts p;
  p.eval = [alpha](double x) {
    return (std::sqrt(alpha * x + 1.0) - 1.0) / alpha;
  };
  p.inverse = [alpha](double y) { return y * (alpha * y + 2.0); };
  p.hat_eval = [alpha](double x) {
    return x - (std::sqrt(alpha * x + 1.0) - 1.0) / alpha;
  };
  p.hat_inverse = [alpha](double y) {
    double s = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * alpha * y));
    return (s * s - 1.0) / alpha;
  };
  p.domain_end = domain_end;
  p.beta_zero = 0.5;
  p.beta_inf = 0.0;
  // D(x)/x^(1-gamma) -> sqrt(x/alpha)/x^(1-gamma): 0 below gamma=1/2,
  // 1/sqrt(alpha) at it, unbounded above it.
  p.sub_linear_limit = RealFn([alpha](double gamma) {
    if (gamma < 0.5) return 0.0;
    if (gamma == 0.5) return 1.0 / std::sqrt(alpha);
    return kInf;
  });
  p.tag = DistortionTag::sqrt_simple;
  p.parameter = alpha;
  return Distortion(std::move(p));
}

Distortion make_table1(double domain_end) {
  Distortion::Parts p;
  p.eval = [](double x) { return 1.0 + x - std::sqrt(1.0 + 2.0 * x); };
  p.inverse = [](double y) { return y + std::sqrt(2.0 * y); };
  p.hat_eval = [](double x) { return std::sqrt(1.0 + 2.0 * x) - 1.0; };
  p.hat_inverse = [](double y) { return 0.5 * y * (y + 2.0); };
  p.domain_end = domain_end;
  p.beta_zero = 0.0;
  p.beta_inf = 1.0;
  p.hat_inverse_quadratic = QuadraticMap{0.5, 1.0};
  p.tag = DistortionTag::table1;
  p.parameter = 0.0;
  return Distortion(std::move(p));
}

}  // namespace

Distortion make_distortion(DistortionTag family, std::optional<double> alpha,
                           double domain_end) {
  if (family == DistortionTag::table1) {
    if (alpha)
      throw BadParameter("table1 distortion takes no parameter");
    return make_table1(domain_end);
  }
  if (family == DistortionTag::custom)
    throw BadParameter("make_distortion: custom distortions are built directly");
  if (!alpha)
    throw BadParameter("distortion: alpha is required for this family");
  switch (family) {
    case DistortionTag::linear:
      return make_linear(*alpha, domain_end);
    case DistortionTag::log_shift:
      return make_log_shift(*alpha, domain_end);
    case DistortionTag::sqrt_complement:
      return make_sqrt_complement(*alpha, domain_end);
    case DistortionTag::sqrt_simple:
      return make_sqrt_simple(*alpha, domain_end);
    default:
      throw BadParameter("make_distortion: unknown family");
  }
}

Distortion scale_distortion(const Distortion& d, double m) {
  if (!(m > 0.0)) throw BadParameter("scale_distortion: m must be > 0");
  Distortion::Parts p;
  p.eval = [d, m](double z) { return d(m * z) / m; };
  p.inverse = [d, m](double y) { return d.inverse(m * y) / m; };
  p.hat_eval = [d, m](double z) { return d.hat(m * z) / m; };
  p.hat_inverse = [d, m](double y) { return d.hat_inverse(m * y) / m; };
  p.domain_end = d.domain_end() / m;
  p.beta_zero = d.beta_zero();
  p.beta_inf = d.beta_inf();
  if (d.has_sub_linear_limit()) {
    p.sub_linear_limit = RealFn([d, m](double gamma) {
      return d.sub_linear_limit(gamma) * std::pow(m, -gamma);
    });
  }
  if (d.hat_inverse_quadratic()) {
    auto q = *d.hat_inverse_quadratic();
    p.hat_inverse_quadratic = QuadraticMap{q.a * m, q.b};
  }
  p.tag = DistortionTag::custom;
  p.parameter = d.parameter();
  return Distortion(std::move(p));
}

TFunction::TFunction(const Distortion& d1, const Distortion& d2) {
  auto h1 = [d1](double x) { return d1.hat_inverse(x); };
  auto h2 = [d2](double x) { return d2.hat_inverse(x); };
  eval_ = [h1, h2](double x) { return h1(x) + h2(x) - x; };
  if (d1.hat_inverse_quadratic() && d2.hat_inverse_quadratic()) {
    auto q1 = *d1.hat_inverse_quadratic();
    auto q2 = *d2.hat_inverse_quadratic();
    quad_ = QuadraticMap{q1.a + q2.a, q1.b + q2.b - 1.0};
  } else {
    auto ev = eval_;
    numeric_inverse_ = [ev](double y) {
      if (y == 0.0) return 0.0;
      // T(x) >= x, so the root lies in [0, y].
      return invert_monotone(ev, y, {0.0, y});
    };
  }
}

double TFunction::operator()(double x) const {
  if (x < 0.0) throw BadParameter("t_function: negative argument");
  if (quad_) return x * (quad_->a * x + quad_->b);
  return eval_(x);
}

double TFunction::inverse(double y) const {
  if (y < 0.0) throw BadParameter("t_inverse: negative argument");
  if (std::isinf(y)) return kInf;
  if (quad_) {
    // a x^2 + b x = y, b >= 1: stable positive root.
    double a = quad_->a, b = quad_->b;
    return 2.0 * y / (b + std::sqrt(b * b + 4.0 * a * y));
  }
  return numeric_inverse_(y);
}

}  // namespace amo
