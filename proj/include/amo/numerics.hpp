#ifndef AMO_NUMERICS_HPP
#define AMO_NUMERICS_HPP

#include <functional>
#include <limits>

#include "amo/errors.hpp"

namespace amo {

using RealFn = std::function<double(double)>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tolerance {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_iter = 200;
};

// Default absolute error target for the adaptive quadrature.
inline constexpr double kQuadTarget = 1e-8;

// Closed interval; hi may be +inf.
struct Interval {
  double lo = 0.0;
  double hi = kInf;
};

// Solve f(x) = target for continuous strictly monotone f on the bracket.
// Direction is detected from the endpoints. An infinite hi is handled by
// geometric expansion until the target is enclosed. Bisection with a secant
// step whenever the secant point falls inside the current bracket.
// Throws NoBracket if the target cannot be enclosed, MaxIterExceeded if the
// iteration budget runs out before |f(x)-target| <= abs_tol or the bracket
// shrinks below rel_tol * |x| + abs_tol.
double invert_monotone(const RealFn& f, double target, Interval bracket = {},
                       Tolerance tol = {});

// Adaptive Simpson with interval halving; error estimate |S2-S1|/15.
// Infinite hi is mapped through x = lo + t/(1-t); the transformed integrand
// is forced to 0 at t=1 (the improper integrals used here are all
// convergent, so the limit is 0). Leaves still over budget at the recursion
// depth cap are absorbed into a deferred-error tally; NonConvergent is
// thrown when that tally exceeds abs_target.
double integrate(const RealFn& f, Interval range,
                 double abs_target = kQuadTarget);

// Central difference, step max(|x|,1) * cbrt(rel_tol).
double derivative(const RealFn& f, double x, Tolerance tol = {});

struct DerivativeResult {
  double value;
  bool one_sided;  // set when x is within one step of a domain edge
};

// Domain-aware variant: falls back to a second-order one-sided difference
// near the edges of `domain` and flags that it did.
DerivativeResult derivative_on(const RealFn& f, double x, Interval domain,
                               Tolerance tol = {});

}  // namespace amo

#endif
