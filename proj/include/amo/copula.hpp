#ifndef AMO_COPULA_HPP
#define AMO_COPULA_HPP

#include <optional>

#include "amo/distortion.hpp"
#include "amo/generator.hpp"
#include "amo/hazard.hpp"

namespace amo {

// Which branch layout holds: case1 when D1 dominates D2 at the end of the
// domain (h(u) is the natural frontier), case2 when D2 dominates. With
// domain_end infinite the two frontier representations coincide and the tag
// is informational; ties resolve to case1.
enum class CaseTag { case1, case2 };

// Survival copula of (M1, M2) = (min(X1,X3), min(X2,X3)) built from an
// Archimedean generator and a distortion pair. Absolutely continuous off the
// frontier curve, with an atom-carrying singular component on it.
class AmoCopula {
 public:
  AmoCopula(Generator g, Distortion d1, Distortion d2);

  // C(u,v). Branch test: the D1 branch applies iff Dhat1(x_u) <= Dhat2(x_v),
  // equivalent to v <= h(u) in both cases.
  double evaluate(double u, double v) const;

  // Frontier curve h(u) = G(Dhat2^{-1}(Dhat1(G^{-1}(u)))); 0 where the
  // composition leaves Dhat2's range (possible only with finite domain_end).
  double frontier(double u) const;

  // Mass of the singular component: Int_0^{T^{-1}(x_G)} -G'(T(x)) dx.
  double singular_mass() const;

  CaseTag case_tag() const { return case_; }
  const Generator& generator() const { return g_; }
  const Distortion& d1() const { return d1_; }
  const Distortion& d2() const { return d2_; }
  const TFunction& t_function() const { return t_; }

 private:
  Generator g_;
  Distortion d1_, d2_;
  TFunction t_;
  CaseTag case_;
};

// Distribution-scale model for a concrete hazard triple.
class JointModel {
 public:
  JointModel(Generator g, HazardTriple h);

  // P(M1 > t1, M2 > t2) = G(H1(t1) + H2(t2) + H3(max)).
  double joint_survival(double t1, double t2) const;
  // P(M_i > t) = G(K_i(t)).
  double margin_survival(int which, double t) const;
  // P(M1 <= t, M2 <= t).
  double both_failed_by(double t) const;
  // Singular part F^s(t) = Int_0^t H3'(x) * (-G'(Hsum(x))) dx.
  double singular_component(double t) const;
  // F^s(inf); equals the copula-level singular mass.
  double singular_mass() const;

  double k1(double t) const;
  double k2(double t) const;
  double hsum(double t) const;

  const Generator& generator() const { return g_; }
  const HazardTriple& hazards() const { return h_; }

 private:
  Generator g_;
  HazardTriple h_;
};

// Copula induced by a hazard triple (through the bridge).
AmoCopula copula_from_hazards(const Generator& g, const HazardTriple& h);

// Representative hazard triple for a copula: H3 = id, H_i = Dhat_i^{-1} - id.
// Any valid choice yields the same copula; this one keeps closed forms.
JointModel representative_joint_model(const AmoCopula& c);

struct EquivalenceResult {
  bool equivalent;
  double scale;           // recovered m when equivalent
  double max_copula_gap;  // max |C_a - C_b| over the probe grid
  double witness_u, witness_v, witness_gap;  // populated when distinct
};

// Two models are the same copula iff G_b(z) = G_a(m z) and
// B_i(z) = A_i(m z)/m for some m > 0. Checks on a probe grid; when the
// structural check fails, scans for the largest copula gap as a witness.
EquivalenceResult equivalence_check(const AmoCopula& a, const AmoCopula& b,
                                    int grid = 25);

}  // namespace amo

#endif
