#ifndef CLFN_THEORY_HPP
#define CLFN_THEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clfn/pmf.hpp"

namespace clfn {
namespace theory {

// Moment inputs for the active model. z[r] = E Z^r where Z is the limit of
// X sqrt(n/m); beta_ratio is the finite-size attribute-to-vertex ratio m/n.
// beta_diverges marks the regime where that ratio grows without bound.
struct ActiveInputs {
  std::vector<double> z;  // z[0] = 1, z[r] = E Z^r; indices 1..r_max usable
  double beta_ratio = 1.0;
  bool beta_diverges = false;
  std::uint64_t n = 0;

  double z1() const { return z.at(1); }
  double z2() const { return z.at(2); }
  unsigned max_moment() const { return static_cast<unsigned>(z.size()) - 1; }
  void validate() const;
};

// Moments of the mixed-Poisson limiting degree d* (Poisson(z1 Z) mixed
// over Z): delta1 = z1^2 and delta2 = z1^2 + z1^2 z2.
struct DegreeMoments {
  double delta1 = 0.0;
  double delta2 = 0.0;
  static DegreeMoments from_size_moments(double z1, double z2) {
    return {z1 * z1, z1 * z1 + z1 * z1 * z2};
  }
};

// z_r = Σ_k P(k) (k sqrt(n/m))^r for r = 1..r_max, beta_ratio = m/n.
ActiveInputs size_moments(const DiscretePmf& size_pmf, std::uint64_t n,
                          std::uint64_t m, unsigned r_max);

// Moment inputs for the inhomogeneous model. a_k = E A^k, b_k = E B^k;
// kappa = a1 / (a2 b2^2); damped moments b*_k = E B^k exp(-a1 B / sqrt(beta))
// are exact finite sums over the attribute-weight pmf.
struct InhomInputs {
  double a1 = 0.0, a2 = 0.0;
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  double beta = 1.0;
  DiscretePmf attribute_weights;  // retained for the damped moments

  static InhomInputs from_pmfs(const DiscretePmf& P1, const DiscretePmf& P2,
                               double beta);
  double kappa() const { return a1 / (a2 * b2 * b2); }
  double damped_b_moment(unsigned k) const;
  void validate() const;
};

struct PredictionEntry {
  double value = 0.0;
  std::string regime;  // which asymptotic branch produced the value
};

// A table of leading-order predictions. All o(1)/O(1/n) corrections are
// dropped; every entry is tagged with the branch that produced it and any
// applicability caveat.
struct Prediction {
  std::optional<double> edge_density;  // p_e
  std::optional<double> alpha;         // clustering coefficient limit
  std::optional<double> lambda;        // sqrt(delta1 / beta)
  std::map<std::uint32_t, PredictionEntry> cl;
};

// Limiting clustering coefficient alpha = beta^{-1/2} delta1^{3/2} /
// (delta2 - delta1); 0 in the diverging-ratio regime.
struct AlphaResult {
  double value = 0.0;
  std::string regime;
};
AlphaResult limiting_clustering_coefficient(const ActiveInputs& in);

// Finite attribute-to-vertex ratio: cl(0) = p_e e^{-lambda},
// cl(1) = alpha / (alpha + (1-alpha) e^{lambda}), cl(r) = 1 for r >= 2.
Prediction predict_finite_ratio(const ActiveInputs& in, std::uint32_t r_max = 10);

// Diverging ratio: cl(0) = p_e, cl(1) = beta^{-1/2} z1/z2, and cl(2)
// branches on beta_star, the limit of (m/n)/n. cl(r >= 3) = 1 holds only
// when m/n grows slower than every power of n; those entries carry that
// caveat in their regime tag.
Prediction predict_diverging_ratio(const ActiveInputs& in, double beta_star,
                                   std::uint32_t r_max = 10);

// Conjectural step coefficient for general r:
// c(r, beta_star) = 1 / (beta_star^{r/2} z1^{-r-2} z2^r z_r^2 + 1).
double step_coefficient(std::uint32_t r, double beta_star,
                        const ActiveInputs& in);

// Inhomogeneous model: alpha = b3 k / (b3 k + sqrt(beta)),
// cl(0) = a1^2 b*_2 / n, cl(1) = b*_3 k / (b*_3 k + sqrt(beta)),
// cl(r >= 2) = 1, and p_e = a1^2 b2 / n.
Prediction predict_inhomogeneous(const InhomInputs& in, std::uint64_t n,
                                 std::uint32_t r_max = 10);

// P(d* = k) = Σ_z P(Z = z) e^{-z z1} (z z1)^k / k!, evaluated in log space.
double asymptotic_degree_pmf(const DiscretePmf& z_pmf, std::uint32_t k);

// e^{-lambda} lambda^r / r!
double poisson_pmf(std::uint32_t r, double lambda);

// Upper bound Σ p_i^2 on the total variation distance between a sum of
// independent indicators and the Poisson law with the same mean.
double le_cam_bound(std::span<const double> p);

// The exact left side of that bound: half the l1 distance between the
// exact indicator-sum pmf (dynamic-programming convolution) and the
// mean-matched Poisson. Vector length is capped at 30.
double poisson_binomial_tv(std::span<const double> p);

// Bounds on P(|D1 ∩ D2| = s) and P(|D1 ∩ D2| >= s) for independent uniform
// subsets of sizes d1 <= d2 from a ground set of size m:
// upper = C(d1,s) C(d2,s) / C(m,s),
// lower = max(0, (1 - (d1-s)(d2-s)/(m+1-d1))) * upper.
struct IntersectionBounds {
  double lower = 0.0;
  double upper = 0.0;
};
IntersectionBounds intersection_size_bounds(std::uint64_t d1, std::uint64_t d2,
                                            std::uint64_t s, std::uint64_t m);

}  // namespace theory
}  // namespace clfn

#endif  // CLFN_THEORY_HPP
