#include "amo/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace amo {

double kendall_function(const AmoCopula& c, double t) {
  if (t < 0.0 || t > 1.0)
    throw BadParameter("kendall_function: t outside [0,1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  const Generator& g = c.generator();
  double w = g.inverse(t);
  return kendall_function_base(g, t) + g.deriv(w) * c.t_function().inverse(w);
}

TauResult kendall_tau(const AmoCopula& c) {
  const Generator& g = c.generator();
  bool linear_pair = c.d1().tag() == DistortionTag::linear &&
                     c.d2().tag() == DistortionTag::linear;
  if (g.tag() == GeneratorTag::clayton && linear_pair) {
    // Proportional-hazards shortcut: T is linear with slope
    // s = 1/(1-a1) + 1/(1-a2) - 1 and c/(c+1) = 1/s.
    double theta = g.parameter();
    double s = 1.0 / (1.0 - c.d1().parameter()) +
               1.0 / (1.0 - c.d2().parameter()) - 1.0;
    double tau = theta / (theta + 2.0) + (1.0 / s) * 2.0 / (2.0 + theta);
    return {tau, TauMethod::closed_form};
  }
  double correction =
      4.0 * integrate(
                [&](double x) {
                  double d = g.deriv(x);
                  return d * d * c.t_function().inverse(x);
                },
                {0.0, g.domain_end()}, 1e-10);
  return {kendall_tau_base(g) + correction, TauMethod::quadrature};
}

namespace {

// Pick the index whose distortion dominates asymptotically; `zero` selects
// the x->0 end. Returns 1 or 2; ties give 1 (identical limits).
int dominant_index(const AmoCopula& c, bool zero, bool& known) {
  const auto& b1 = zero ? c.d1().beta_zero() : c.d1().beta_inf();
  const auto& b2 = zero ? c.d2().beta_zero() : c.d2().beta_inf();
  known = true;
  if (b1 && b2 && *b1 != *b2) return *b1 > *b2 ? 1 : 2;
  if (b1 && b2) {
    // Equal slopes: probe the functions themselves.
    double x = zero ? 1e-6 : 1e6;
    double v1 = c.d1()(x), v2 = c.d2()(x);
    if (std::fabs(v1 - v2) <= 1e-9 * std::max(1.0, std::fabs(v2))) return 1;
    return v1 > v2 ? 1 : 2;
  }
  known = false;
  return 1;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

TailReport tail_parameters(const AmoCopula& c) {
  TailReport r;
  const Generator& g = c.generator();

  // Lower tail: diagonal limit of G(x + D_i(x))/G(x) at the dominant i.
  if (std::isfinite(g.domain_end())) {
    r.lower = 0.0;
    r.lower_branch = "bounded generator domain: lambda_L = 0";
  } else {
    bool known = false;
    int i = dominant_index(c, false, known);
    const Distortion& d = i == 1 ? c.d1() : c.d2();
    const InfinityDecay& decay = g.infinity_decay();
    if (!known || !d.beta_inf()) {
      r.lower_branch = "beta_inf unavailable: undetermined";
    } else if (decay.kind == DecayKind::polynomial) {
      double beta = *d.beta_inf();
      r.lower = std::pow(1.0 + beta, -decay.gamma);
      r.lower_branch = "polynomial decay gamma=" + fmt(decay.gamma) +
                       ", dominant beta_inf=" + fmt(beta) +
                       ": (1+beta)^-gamma";
    } else if (decay.kind == DecayKind::exponential) {
      double beta = *d.beta_inf();
      if (beta > 0.0) {
        r.lower = 0.0;
        r.lower_branch = "exponential decay, dominant beta_inf=" + fmt(beta) +
                         " > 0: lambda_L = 0";
      } else if (decay.gamma >= 1.0) {
        r.lower = 0.0;
        r.lower_branch =
            "exponential decay, beta_inf=0, gamma >= 1: lambda_L = 0";
      } else if (d.has_sub_linear_limit()) {
        double lim = d.sub_linear_limit(decay.gamma);
        r.lower = std::exp(-decay.a * decay.gamma * lim);
        r.lower_branch = "exponential decay, beta_inf=0, gamma=" +
                         fmt(decay.gamma) + ", sub-linear limit " + fmt(lim) +
                         ": exp(-a*gamma*limit)";
      } else {
        r.lower_branch =
            "exponential decay with beta_inf=0 needs the sub-linear limit: "
            "undetermined";
      }
    } else {
      r.lower_branch = "unclassified generator decay: undetermined";
    }
  }

  // Upper tail: 2 - (1+beta_0)^gamma from the expansion 1-G ~ c x^gamma.
  bool known = false;
  int i = dominant_index(c, true, known);
  const Distortion& d = i == 1 ? c.d1() : c.d2();
  if (!known || !d.beta_zero()) {
    r.upper_branch = "beta_zero unavailable: undetermined";
  } else if (g.zero_expansion()) {
    double beta = *d.beta_zero();
    double gamma = g.zero_expansion()->gamma;
    r.upper = 2.0 - std::pow(1.0 + beta, gamma);
    r.upper_branch = "zero expansion gamma=" + fmt(gamma) +
                     ", dominant beta_zero=" + fmt(beta) +
                     ": 2-(1+beta)^gamma";
  } else {
    r.upper_branch = "no zero expansion stored: undetermined";
  }
  return r;
}

namespace {

// Merge-sort inversion count on v, assuming the sequence is sorted by u.
// Equal v values are not inversions.
std::size_t count_inversions(std::vector<double>& v, std::vector<double>& buf,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  std::size_t mid = lo + (hi - lo) / 2;
  std::size_t inv = count_inversions(v, buf, lo, mid) +
                    count_inversions(v, buf, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[b] < v[a]) {
      inv += mid - a;
      buf[out++] = v[b++];
    } else {
      buf[out++] = v[a++];
    }
  }
  while (a < mid) buf[out++] = v[a++];
  while (b < hi) buf[out++] = v[b++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return inv;
}

template <class Less>
std::size_t tied_pairs(std::vector<std::pair<double, double>>& s, Less less) {
  std::sort(s.begin(), s.end(), less);
  std::size_t ties = 0, run = 1;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i < s.size() && !less(s[i - 1], s[i]) && !less(s[i], s[i - 1])) {
      ++run;
    } else {
      ties += run * (run - 1) / 2;
      run = 1;
    }
  }
  return ties;
}

}  // namespace

double empirical_tau(const std::vector<std::pair<double, double>>& uv) {
  std::size_t n = uv.size();
  if (n < 2) throw TooFewSamples("empirical_tau: need at least 2 samples");

  std::vector<std::pair<double, double>> s = uv;
  std::sort(s.begin(), s.end());
  std::vector<double> v(n), buf(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = s[i].second;
  std::size_t discordant = count_inversions(v, buf, 0, n);

  // Knight's tie bookkeeping: pairs tied in u, in v, and in both are
  // concordant with nothing.
  auto by_u = [](const auto& a, const auto& b) { return a.first < b.first; };
  auto by_v = [](const auto& a, const auto& b) { return a.second < b.second; };
  auto by_uv = [](const auto& a, const auto& b) { return a < b; };
  std::size_t tu = tied_pairs(s, by_u);
  std::size_t tv = tied_pairs(s, by_v);
  std::size_t tuv = tied_pairs(s, by_uv);

  // Sorting by (u,v) puts u-ties in increasing v order, so neither u-tied
  // nor v-tied pairs register as inversions; discordant is exactly D.
  double total = 0.5 * static_cast<double>(n) * (n - 1);
  double comparable = total - tu - tv + tuv;
  double concordant = comparable - static_cast<double>(discordant);
  return (concordant - static_cast<double>(discordant)) / total;
}

double empirical_tau(const std::vector<SamplePair>& samples) {
  std::vector<std::pair<double, double>> uv;
  uv.reserve(samples.size());
  for (const auto& s : samples) uv.emplace_back(s.u, s.v);
  return empirical_tau(uv);
}

std::vector<double> empirical_tail(const std::vector<SamplePair>& samples,
                                   TailSide side,
                                   const std::vector<double>& levels) {
  std::size_t n = samples.size();
  if (n < 2) throw TooFewSamples("empirical_tail: need at least 2 samples");
  for (double u : levels)
    if (!(u > 0.0 && u < 1.0))
      throw BadParameter("empirical_tail: levels must lie in (0,1)");

  std::vector<double> out;
  out.reserve(levels.size());
  for (double u : levels) {
    std::size_t joint = 0;
    for (const auto& s : samples)
      if (s.u <= u && s.v <= u) ++joint;
    double chat = static_cast<double>(joint) / n;
    if (side == TailSide::lower)
      out.push_back(chat / u);
    else
      out.push_back(2.0 - (1.0 - chat) / (1.0 - u));
  }
  return out;
}

}  // namespace amo
