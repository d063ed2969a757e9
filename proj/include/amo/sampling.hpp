#ifndef AMO_SAMPLING_HPP
#define AMO_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "amo/copula.hpp"
#include "amo/frailty.hpp"

namespace amo {

// Deterministic stream: mt19937_64 (sequence fixed by the standard), one
// engine per (seed, stream) pair. Identical construction gives bit-identical
// draws on any platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  double uniform01();   // open (0,1)
  double exponential(); // rate 1
  double normal();      // standard, Marsaglia polar with cached spare

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// One draw of the mixing variable. gamma: Marsaglia-Tsang; positive stable:
// Kanter representation; log series: sequential inversion.
double sample_frailty(const FrailtySpec& spec, RngStream& rng);

struct SamplePair {
  double m1, m2;      // event-time scale
  double u, v;        // copula scale (survival margins applied)
  bool simultaneous;  // systemic shock arrived first: M1 = M2 structurally
};

// Exact sampler: Y frailty, E_i unit exponentials, X_i = H_i^{-1}(E_i/Y),
// M1 = min(X1,X3), M2 = min(X2,X3), u = G(K1(M1)), v = G(K2(M2)).
// Requires a completely monotone generator with a frailty spec and infinite
// domain_end; throws UnsupportedGenerator otherwise.
SamplePair sample_pair(const JointModel& m, RngStream& rng);

std::vector<SamplePair> sample_batch(const JointModel& m, std::size_t n,
                                     RngStream& rng);

}  // namespace amo

#endif
