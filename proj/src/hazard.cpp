#include "amo/hazard.hpp"

#include <cmath>
#include <utility>

namespace amo {

HazardFn identity_hazard() {
  return {[](double x) { return x; }, [](double y) { return y; },
          [](double) { return 1.0; }};
}

HazardFn scaled_hazard(double lambda) {
  if (!(lambda > 0.0)) throw BadParameter("scaled_hazard: lambda must be > 0");
  return {[lambda](double x) { return lambda * x; },
          [lambda](double y) { return y / lambda; },
          [lambda](double) { return lambda; }};
}

HazardFn make_hazard(RealFn fwd) {
  RealFn inv = [fwd](double y) {
    if (y == 0.0) return 0.0;
    return invert_monotone(fwd, y, {0.0, kInf});
  };
  RealFn deriv = [fwd](double x) {
    if (x <= 0.0)
      return derivative_on(fwd, x, {0.0, kInf}).value;
    return derivative(fwd, x);
  };
  return {std::move(fwd), std::move(inv), std::move(deriv)};
}

HazardFn make_hazard(RealFn fwd, RealFn inv, RealFn deriv) {
  return {std::move(fwd), std::move(inv), std::move(deriv)};
}

namespace {

// Pointwise derivative of Dhat^{-1}: closed when the quadratic form is
// stored, numeric otherwise.
RealFn hat_inverse_deriv(const Distortion& d) {
  if (d.hat_inverse_quadratic()) {
    auto q = *d.hat_inverse_quadratic();
    return [q](double y) { return 2.0 * q.a * y + q.b; };
  }
  return [d](double y) {
    if (y <= 0.0)
      return derivative_on([d](double t) { return d.hat_inverse(t); }, y,
                           {0.0, kInf})
          .value;
    return derivative([d](double t) { return d.hat_inverse(t); }, y);
  };
}

HazardFn hazard_from_one(const Distortion& d, const HazardFn& h3) {
  auto fwd = [d, h3](double x) {
    double z = h3.fwd(x);
    return d.hat_inverse(z) - z;
  };
  // (Dhat^{-1} - id)^{-1} = D^{-1} - id, so H^{-1} = H3^{-1} o (D^{-1} - id).
  auto inv = [d, h3](double y) {
    return h3.inv(d.inverse(y) - y);
  };
  auto hd = hat_inverse_deriv(d);
  auto deriv = [hd, h3](double x) {
    double z = h3.fwd(x);
    return (hd(z) - 1.0) * h3.deriv(x);
  };
  return {fwd, inv, deriv};
}

}  // namespace

HazardTriple hazards_from_distortions(const Distortion& d1,
                                      const Distortion& d2,
                                      const HazardFn& h3) {
  if (!h3.fwd || !h3.inv || !h3.deriv)
    throw BadParameter("hazards_from_distortions: incomplete h3");
  if (std::fabs(h3.fwd(0.0)) > 1e-12)
    throw DomainMismatch("hazards_from_distortions: h3(0) != 0");
  return {hazard_from_one(d1, h3), hazard_from_one(d2, h3), h3};
}

namespace {

Distortion distortion_from_pair(const HazardFn& hi, const HazardFn& h3,
                                double domain_end) {
  auto k = [hi, h3](double t) { return hi.fwd(t) + h3.fwd(t); };
  auto k_inv = [k](double y) {
    if (y == 0.0) return 0.0;
    return invert_monotone(k, y, {0.0, kInf});
  };
  Distortion::Parts p;
  p.eval = [hi, k_inv](double x) { return hi.fwd(k_inv(x)); };
  p.hat_eval = [h3, k_inv](double x) { return h3.fwd(k_inv(x)); };
  // D = H o K^{-1}  =>  D^{-1} = K o H^{-1}, and likewise through H3 for
  // the complement.
  p.inverse = [hi, k](double y) { return k(hi.inv(y)); };
  p.hat_inverse = [h3, k](double y) { return k(h3.inv(y)); };
  p.domain_end = domain_end;
  // Betas deliberately absent: they are family metadata, never estimated.
  return Distortion(std::move(p));
}

}  // namespace

std::pair<Distortion, Distortion> distortions_from_hazards(
    const HazardTriple& h, double domain_end) {
  return {distortion_from_pair(h.h1, h.h3, domain_end),
          distortion_from_pair(h.h2, h.h3, domain_end)};
}

}  // namespace amo
