#ifndef AMO_FRAILTY_HPP
#define AMO_FRAILTY_HPP

#include "amo/errors.hpp"

namespace amo {

// Positive mixing variable whose Laplace transform is the generator.
enum class FrailtyKind {
  degenerate,       // Y = 1
  gamma,            // shape = parameter, rate 1
  positive_stable,  // one-sided stable, index = parameter in (0,1]
  log_series,       // logarithmic series on {1,2,...}, p = parameter
};

struct FrailtySpec {
  FrailtyKind kind;
  double parameter;
};

// Closed-form Laplace transform E[exp(-x Y)].
double frailty_laplace(const FrailtySpec& spec, double x);

}  // namespace amo

#endif
