#ifndef AMO_DISTORTION_HPP
#define AMO_DISTORTION_HPP

#include <optional>

#include "amo/numerics.hpp"

namespace amo {

enum class DistortionTag {
  linear,           // D = alpha x, alpha in (0,1)
  log_shift,        // D = x - ln(alpha x + 1)/alpha
  sqrt_complement,  // D = x - (sqrt(alpha x + 1) - 1)/alpha
  sqrt_simple,      // D = (sqrt(alpha x + 1) - 1)/alpha
  table1,           // D = 1 + x - sqrt(1 + 2x), parameter-free
  custom,
};

// y -> a y^2 + b y. When both distortions of a pair carry one of these for
// Dhat^{-1}, the aggregate T is a quadratic with a closed-form inverse.
struct QuadraticMap {
  double a;
  double b;
};

// Strictly increasing D with D(0)=0 and D(x) < x; the complement
// Dhat = id - D is strictly increasing as well. Deforms an Archimedean
// copula asymmetrically on either side of the frontier.
class Distortion {
 public:
  struct Parts {
    RealFn eval;
    RealFn inverse;
    RealFn hat_eval;
    RealFn hat_inverse;
    double domain_end = kInf;  // x_G of the paired generator
    std::optional<double> beta_zero;  // lim_{x->0+} D(x)/x
    std::optional<double> beta_inf;   // lim_{x->inf} D(x)/x
    // gamma -> lim_{x->inf} D(x)/x^(1-gamma); needed only when beta_inf = 0
    // under an exponentially decaying generator.
    std::optional<RealFn> sub_linear_limit;
    std::optional<QuadraticMap> hat_inverse_quadratic;
    DistortionTag tag = DistortionTag::custom;
    double parameter = 0.0;
  };

  explicit Distortion(Parts parts);

  double operator()(double x) const { return eval_(x); }
  double inverse(double y) const { return inverse_(y); }
  double hat(double x) const { return hat_eval_(x); }
  double hat_inverse(double y) const { return hat_inverse_(y); }

  double domain_end() const { return domain_end_; }
  const std::optional<double>& beta_zero() const { return beta_zero_; }
  const std::optional<double>& beta_inf() const { return beta_inf_; }
  double sub_linear_limit(double gamma) const;  // throws if not available
  bool has_sub_linear_limit() const { return sub_linear_limit_.has_value(); }
  const std::optional<QuadraticMap>& hat_inverse_quadratic() const {
    return hat_inverse_quadratic_;
  }
  DistortionTag tag() const { return tag_; }
  double parameter() const { return parameter_; }

 private:
  RealFn eval_, inverse_, hat_eval_, hat_inverse_;
  double domain_end_;
  std::optional<double> beta_zero_, beta_inf_;
  std::optional<RealFn> sub_linear_limit_;
  std::optional<QuadraticMap> hat_inverse_quadratic_;
  DistortionTag tag_;
  double parameter_;
};

// Built-in families, all with closed-form inverses on both sides.
// table1 takes no parameter; pass nothing.
Distortion make_distortion(DistortionTag family,
                           std::optional<double> alpha = std::nullopt,
                           double domain_end = kInf);

// B(z) = A(m z)/m, the distortion rescaling matched to scale_generator.
Distortion scale_distortion(const Distortion& d, double m);

// Aggregate T(x) = Dhat1^{-1}(x) + Dhat2^{-1}(x) - x. Strictly increasing,
// T(0)=0, T(x) >= x. Closed-form inverse when both hat inverses are
// quadratic, numeric inversion otherwise.
class TFunction {
 public:
  TFunction(const Distortion& d1, const Distortion& d2);

  double operator()(double x) const;
  double inverse(double y) const;
  bool closed_form() const { return quad_.has_value(); }

 private:
  RealFn eval_;
  RealFn numeric_inverse_;
  std::optional<QuadraticMap> quad_;  // T itself, when available
};

}  // namespace amo

#endif
