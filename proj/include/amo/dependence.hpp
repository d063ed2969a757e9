#ifndef AMO_DEPENDENCE_HPP
#define AMO_DEPENDENCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amo/copula.hpp"
#include "amo/sampling.hpp"

namespace amo {

// Kendall distribution function of the AMO copula:
// K(t) = K_G(t) + G'(w) * T^{-1}(w), w = G^{-1}(t).
// Satisfies t <= K(t) <= K_G(t).
double kendall_function(const AmoCopula& c, double t);

enum class TauMethod { closed_form, quadrature };

struct TauResult {
  double value;
  TauMethod method;
};

// tau = tau_G + 4 * Int_0^{x_G} G'(x)^2 * T^{-1}(x) dx. Closed form for a
// clayton generator with a linear distortion pair (proportional hazards),
// quadrature otherwise.
TauResult kendall_tau(const AmoCopula& c);

// Diagonal tail limits. A missing value means the inputs do not determine
// the limit (unclassified decay or absent beta metadata); the branch strings
// record which formula fired or why none did.
struct TailReport {
  std::optional<double> lower;
  std::optional<double> upper;
  std::string lower_branch;
  std::string upper_branch;
};

TailReport tail_parameters(const AmoCopula& c);

// Sample-concordance tau: 2(C - D)/(n(n-1)), ties counted as neither.
// Merge-sort inversion counting, O(n log n).
double empirical_tau(const std::vector<std::pair<double, double>>& uv);
double empirical_tau(const std::vector<SamplePair>& samples);

enum class TailSide { lower, upper };

// Diagonal ratio estimates: lower #(U<=u, V<=u)/(n u) at each level u;
// upper 2 - (1 - Chat(u,u))/(1 - u).
std::vector<double> empirical_tail(const std::vector<SamplePair>& samples,
                                   TailSide side,
                                   const std::vector<double>& levels);

}  // namespace amo

#endif
