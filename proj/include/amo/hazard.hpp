#ifndef AMO_HAZARD_HPP
#define AMO_HAZARD_HPP

#include <utility>

#include "amo/distortion.hpp"
#include "amo/numerics.hpp"

namespace amo {

// Cumulative hazard: continuous, strictly increasing, H(0)=0.
struct HazardFn {
  RealFn fwd;
  RealFn inv;
  RealFn deriv;
};

// Shock hazards: H1, H2 idiosyncratic, H3 systemic. The observable pair is
// M_i = min(X_i, X3), so the margins see K_i = H_i + H3 and the diagonal
// sees Hsum = H1 + H2 + H3.
struct HazardTriple {
  HazardFn h1;
  HazardFn h2;
  HazardFn h3;
};

HazardFn identity_hazard();
HazardFn scaled_hazard(double lambda);

// Wrap a forward map with numeric inverse (expanding-bracket inversion) and
// numeric derivative.
HazardFn make_hazard(RealFn fwd);
HazardFn make_hazard(RealFn fwd, RealFn inv, RealFn deriv);

// Bridge, forward direction: the unique triple with the given systemic
// hazard reproducing (d1, d2): H_i = Dhat_i^{-1}(H3) - H3. Inverses come out
// closed-form via H_i^{-1} = H3^{-1}((D_i^{-1} - id)(.)).
HazardTriple hazards_from_distortions(const Distortion& d1,
                                      const Distortion& d2,
                                      const HazardFn& h3);

// Bridge, inverse direction: D_i = H_i o (H_i + H3)^{-1}. Recovered
// distortions carry no beta metadata (betas are never estimated).
std::pair<Distortion, Distortion> distortions_from_hazards(
    const HazardTriple& h, double domain_end = kInf);

}  // namespace amo

#endif
