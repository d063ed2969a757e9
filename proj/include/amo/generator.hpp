#ifndef AMO_GENERATOR_HPP
#define AMO_GENERATOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "amo/frailty.hpp"
#include "amo/numerics.hpp"

namespace amo {

enum class GeneratorTag { exponential, clayton, gumbel, frank, custom };

enum class DecayKind { polynomial, exponential, unclassified };

// How G behaves as x -> inf (meaningful only when domain_end is infinite):
//   polynomial:  G(x) ~ c * x^(-gamma)         (a unused)
//   exponential: G(x) ~ c * exp(-a * x^gamma)
// Stored, never estimated: the tail-dependence formulas consume exact values.
struct InfinityDecay {
  DecayKind kind = DecayKind::unclassified;
  double a = 0.0;
  double c = 0.0;
  double gamma = 0.0;
};

// 1 - G(x) ~ c * x^gamma as x -> 0+.
struct ZeroExpansion {
  double c;
  double gamma;
};

// Archimedean generator: decreasing, G(0)=1, G(x_G)=0, C1, with G' <= 0,
// non-decreasing and concave (enough for a valid trivariate model).
class Generator {
 public:
  struct Parts {
    RealFn eval;
    RealFn inverse;
    RealFn deriv;
    double domain_end = kInf;  // x_G, first zero of G
    bool completely_monotone = false;
    InfinityDecay infinity_decay{};
    std::optional<ZeroExpansion> zero_expansion;
    std::optional<FrailtySpec> frailty;
    GeneratorTag tag = GeneratorTag::custom;
    double parameter = 0.0;
  };

  explicit Generator(Parts parts);

  double operator()(double x) const { return eval_(x); }
  double inverse(double u) const { return inverse_(u); }
  double deriv(double x) const { return deriv_(x); }

  double domain_end() const { return domain_end_; }
  bool completely_monotone() const { return completely_monotone_; }
  const InfinityDecay& infinity_decay() const { return infinity_decay_; }
  const std::optional<ZeroExpansion>& zero_expansion() const {
    return zero_expansion_;
  }
  const std::optional<FrailtySpec>& frailty() const { return frailty_; }
  GeneratorTag tag() const { return tag_; }
  double parameter() const { return parameter_; }

 private:
  RealFn eval_, inverse_, deriv_;
  double domain_end_;
  bool completely_monotone_;
  InfinityDecay infinity_decay_;
  std::optional<ZeroExpansion> zero_expansion_;
  std::optional<FrailtySpec> frailty_;
  GeneratorTag tag_;
  double parameter_;
};

// Built-in families. Parameter ranges: clayton theta in (-1/2,0) u (0,inf)
// (negative range has finite domain_end=-1/theta and no frailty), gumbel
// theta >= 1, frank theta > 0. exponential ignores the parameter.
Generator make_generator(GeneratorTag family, double parameter = 0.0);

// G_m(z) = G(m z): same copula family member under the equivalence theorem.
// Decay metadata is rescaled; the frailty spec is dropped (m*Y leaves the
// built-in frailty families).
Generator scale_generator(const Generator& g, double m);

struct GeneratorViolation {
  std::string check;  // which property failed
  double x;           // probe location
};

// Probe G(0)=1, strict decrease, G' <= 0, G' non-decreasing, G' midpoint
// concavity on a log grid. Returns the violations found (empty = passed).
std::vector<GeneratorViolation> validate_generator(const Generator& g,
                                                   int probes = 200);

// Kendall distribution function of the plain Archimedean copula:
// K_G(t) = t - G'(G^{-1}(t)) * G^{-1}(t), with K_G(0)=0, K_G(1)=1.
double kendall_function_base(const Generator& g, double t);

// tau = 3 - 4 * Int_0^1 K_G; closed form for exponential (0),
// clayton (theta/(theta+2)) and gumbel (1-1/theta), quadrature otherwise.
double kendall_tau_base(const Generator& g);

}  // namespace amo

#endif
