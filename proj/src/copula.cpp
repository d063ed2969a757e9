#include "amo/copula.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace amo {

namespace {

CaseTag decide_case(const Generator& g, const Distortion& d1,
                    const Distortion& d2) {
  double xg = g.domain_end();
  if (std::isfinite(xg)) {
    return d1(xg) >= d2(xg) ? CaseTag::case1 : CaseTag::case2;
  }
  // Unbounded domain: both frontier representations coincide; the tag just
  // records which distortion dominates at a large probe. Ties go to case1.
  double x = 1e6;
  double f = d2.hat_inverse(d1.hat(x));
  if (f > x * (1.0 + 1e-9)) return CaseTag::case2;
  return CaseTag::case1;
}

}  // namespace

AmoCopula::AmoCopula(Generator g, Distortion d1, Distortion d2)
    : g_(std::move(g)),
      d1_(std::move(d1)),
      d2_(std::move(d2)),
      t_(d1_, d2_),
      case_(decide_case(g_, d1_, d2_)) {
  if (d1_.domain_end() < g_.domain_end() ||
      d2_.domain_end() < g_.domain_end())
    throw DomainMismatch(
        "copula: distortion domain shorter than the generator domain");
}

double AmoCopula::evaluate(double u, double v) const {
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
    throw BadParameter("evaluate: u,v must lie in [0,1]");
  if (u == 0.0 || v == 0.0) return 0.0;
  if (u == 1.0) return v;
  if (v == 1.0) return u;
  double xu = g_.inverse(u);
  double xv = g_.inverse(v);
  // The D1 branch holds iff Dhat1(x_u) <= Dhat2(x_v); this is v <= h(u)
  // in case1 and u >= hhat(v) in case2, with exact agreement on the
  // frontier itself.
  if (d1_.hat(xu) <= d2_.hat(xv)) return g_(d1_(xu) + xv);
  return g_(xu + d2_(xv));
}

double AmoCopula::frontier(double u) const {
  if (!(u >= 0.0 && u <= 1.0))
    throw BadParameter("frontier: u must lie in [0,1]");
  if (u == 1.0) return 1.0;
  double xg = g_.domain_end();
  if (u == 0.0 && std::isinf(xg)) return 0.0;
  double xu = g_.inverse(u);
  double y = d1_.hat(xu);
  if (std::isfinite(xg)) {
    double cap = d2_.hat(xg);
    if (y > cap) return 0.0;  // frontier exits through v=0 at this u
  }
  return g_(d2_.hat_inverse(y));
}

double AmoCopula::singular_mass() const {
  double xg = g_.domain_end();
  double upper = std::isfinite(xg) ? t_.inverse(xg) : kInf;
  return integrate([this](double x) { return -g_.deriv(t_(x)); },
                   {0.0, upper}, 1e-10);
}

JointModel::JointModel(Generator g, HazardTriple h)
    : g_(std::move(g)), h_(std::move(h)) {
  for (const HazardFn* hz : {&h_.h1, &h_.h2, &h_.h3}) {
    if (!hz->fwd || !hz->inv || !hz->deriv)
      throw BadParameter("joint model: incomplete hazard");
    if (std::fabs(hz->fwd(0.0)) > 1e-12)
      throw DomainMismatch("joint model: hazard does not vanish at 0");
  }
}

double JointModel::k1(double t) const { return h_.h1.fwd(t) + h_.h3.fwd(t); }
double JointModel::k2(double t) const { return h_.h2.fwd(t) + h_.h3.fwd(t); }
double JointModel::hsum(double t) const {
  return h_.h1.fwd(t) + h_.h2.fwd(t) + h_.h3.fwd(t);
}

double JointModel::joint_survival(double t1, double t2) const {
  if (t1 < 0.0 || t2 < 0.0)
    throw BadParameter("joint_survival: negative time");
  return g_(h_.h1.fwd(t1) + h_.h2.fwd(t2) + h_.h3.fwd(std::max(t1, t2)));
}

double JointModel::margin_survival(int which, double t) const {
  if (t < 0.0) throw BadParameter("margin_survival: negative time");
  if (which == 1) return g_(k1(t));
  if (which == 2) return g_(k2(t));
  throw BadParameter("margin_survival: which must be 1 or 2");
}

double JointModel::both_failed_by(double t) const {
  if (t < 0.0) throw BadParameter("both_failed_by: negative time");
  return 1.0 - g_(k1(t)) - g_(k2(t)) + g_(hsum(t));
}

double JointModel::singular_component(double t) const {
  if (t < 0.0) throw BadParameter("singular_component: negative time");
  return integrate(
      [this](double x) { return -h_.h3.deriv(x) * g_.deriv(hsum(x)); },
      {0.0, t}, 1e-10);
}

double JointModel::singular_mass() const {
  return integrate(
      [this](double x) { return -h_.h3.deriv(x) * g_.deriv(hsum(x)); },
      {0.0, kInf}, 1e-10);
}

AmoCopula copula_from_hazards(const Generator& g, const HazardTriple& h) {
  auto [d1, d2] = distortions_from_hazards(h, g.domain_end());
  return AmoCopula(g, std::move(d1), std::move(d2));
}

JointModel representative_joint_model(const AmoCopula& c) {
  if (std::isfinite(c.generator().domain_end()))
    throw DomainMismatch(
        "representative hazards need an unbounded generator domain");
  HazardTriple h =
      hazards_from_distortions(c.d1(), c.d2(), identity_hazard());
  return JointModel(c.generator(), std::move(h));
}

EquivalenceResult equivalence_check(const AmoCopula& a, const AmoCopula& b,
                                    int grid) {
  if (grid < 3) throw BadParameter("equivalence_check: grid too small");
  const Generator& ga = a.generator();
  const Generator& gb = b.generator();
  double m = ga.inverse(0.5) / gb.inverse(0.5);

  bool structural = m > 0.0 && std::isfinite(m);
  auto rel_ok = [](double x, double y, double tol) {
    return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(y));
  };
  for (int j = 1; j <= grid && structural; ++j) {
    double u = static_cast<double>(j) / (grid + 1);
    double z = gb.inverse(u);
    if (std::fabs(gb(z) - ga(m * z)) > 1e-9) structural = false;
    if (!rel_ok(b.d1()(z), a.d1()(m * z) / m, 1e-9)) structural = false;
    if (!rel_ok(b.d2()(z), a.d2()(m * z) / m, 1e-9)) structural = false;
  }

  // Copula-level gap over a fixed probe grid, both as a certificate for the
  // equivalent verdict and as the witness search for the distinct one.
  double max_gap = 0.0, wu = 0.0, wv = 0.0;
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      double u = i / 10.0, v = j / 10.0;
      double gap = std::fabs(a.evaluate(u, v) - b.evaluate(u, v));
      if (gap > max_gap) {
        max_gap = gap;
        wu = u;
        wv = v;
      }
    }
  }

  EquivalenceResult r{};
  r.equivalent = structural;
  r.scale = structural ? m : 0.0;
  r.max_copula_gap = max_gap;
  r.witness_u = wu;
  r.witness_v = wv;
  r.witness_gap = max_gap;
  return r;
}

}  // namespace amo
