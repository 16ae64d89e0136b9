#include "clfn/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "clfn/generators.hpp"

namespace clfn {
namespace theory {

void ActiveInputs::validate() const {
  if (z.size() < 3)
    throw std::invalid_argument("active inputs: need moments z1 and z2");
  if (!(z1() > 0.0))
    throw std::invalid_argument("active inputs: z1 must be positive "
                                "(degenerate size distribution)");
  for (double m : z)
    if (!(m >= 0.0))
      throw std::invalid_argument("active inputs: moments must be >= 0");
  if (z2() < z1() * z1() - 1e-9 * std::max(1.0, z1() * z1()))
    throw std::invalid_argument("active inputs: z2 < z1^2 violates Jensen");
}

ActiveInputs size_moments(const DiscretePmf& size_pmf, std::uint64_t n,
                          std::uint64_t m, unsigned r_max) {
  if (r_max < 2)
    throw std::invalid_argument("size_moments: r_max must be >= 2");
  if (n == 0 || m == 0)
    throw std::invalid_argument("size_moments: n and m must be positive");
  ActiveInputs in;
  in.n = n;
  in.beta_ratio = static_cast<double>(m) / static_cast<double>(n);
  const double s = std::sqrt(static_cast<double>(n) / static_cast<double>(m));
  in.z.assign(r_max + 1, 0.0);
  in.z[0] = 1.0;
  for (unsigned r = 1; r <= r_max; ++r) {
    double acc = 0.0;
    for (std::size_t i = 0; i < size_pmf.size(); ++i)
      acc += size_pmf.probs()[i] *
             std::pow(size_pmf.values()[i] * s, static_cast<double>(r));
    in.z[r] = acc;
  }
  return in;
}

AlphaResult limiting_clustering_coefficient(const ActiveInputs& in) {
  if (in.beta_diverges)
    return {0.0, "vanishing (attribute-to-vertex ratio diverges)"};
  in.validate();
  if (!(in.beta_ratio > 0.0) || !std::isfinite(in.beta_ratio))
    throw std::invalid_argument("alpha: ratio m/n must be finite and positive");
  const auto d = DegreeMoments::from_size_moments(in.z1(), in.z2());
  if (!(d.delta2 > d.delta1))
    throw std::invalid_argument("alpha: degree moments degenerate (delta2 <= delta1)");
  const double value = std::pow(d.delta1, 1.5) / (d.delta2 - d.delta1) /
                       std::sqrt(in.beta_ratio);
  return {value, "finite-ratio limit"};
}

Prediction predict_finite_ratio(const ActiveInputs& in, std::uint32_t r_max) {
  in.validate();
  if (in.beta_diverges || !(in.beta_ratio > 0.0) || !std::isfinite(in.beta_ratio))
    throw std::invalid_argument(
        "predict_finite_ratio: requires a finite positive ratio m/n");
  if (in.n == 0)
    throw std::invalid_argument("predict_finite_ratio: vertex count required");

  const auto d = DegreeMoments::from_size_moments(in.z1(), in.z2());
  const double lambda = std::sqrt(d.delta1 / in.beta_ratio);
  const double alpha = limiting_clustering_coefficient(in).value;
  const double p_e = d.delta1 / static_cast<double>(in.n);

  Prediction out;
  out.edge_density = p_e;
  out.alpha = alpha;
  out.lambda = lambda;
  out.cl[0] = {p_e * std::exp(-lambda), "finite ratio: edge density damped by e^-lambda"};
  out.cl[1] = {alpha / (alpha + (1.0 - alpha) * std::exp(lambda)),
               "finite ratio: alpha vs e^lambda"};
  for (std::uint32_t r = 2; r <= r_max; ++r)
    out.cl[r] = {1.0, "finite ratio: forced adjacency"};
  return out;
}

Prediction predict_diverging_ratio(const ActiveInputs& in, double beta_star,
                                   std::uint32_t r_max) {
  in.validate();
  if (!in.beta_diverges)
    throw std::invalid_argument(
        "predict_diverging_ratio: inputs are in the finite-ratio regime");
  if (in.n == 0)
    throw std::invalid_argument("predict_diverging_ratio: vertex count required");
  if (!(beta_star >= 0.0))
    throw std::invalid_argument("predict_diverging_ratio: beta_star must be >= 0");

  const auto d = DegreeMoments::from_size_moments(in.z1(), in.z2());
  const double p_e = d.delta1 / static_cast<double>(in.n);

  Prediction out;
  out.edge_density = p_e;
  out.alpha = 0.0;
  out.cl[0] = {p_e, "diverging ratio: edge density"};
  out.cl[1] = {in.z1() / in.z2() / std::sqrt(in.beta_ratio),
               "diverging ratio: leading term"};
  if (beta_star == 0.0) {
    out.cl[2] = {1.0, "diverging ratio: (m/n)/n -> 0"};
  } else if (std::isinf(beta_star)) {
    out.cl[2] = {0.0, "diverging ratio: (m/n)/n -> inf"};
  } else {
    const double gap = d.delta2 - d.delta1;
    const double factor = beta_star * std::pow(gap, 4.0) / std::pow(d.delta1, 6.0);
    out.cl[2] = {1.0 / (1.0 + factor), "diverging ratio: (m/n)/n finite"};
  }
  for (std::uint32_t r = 3; r <= r_max; ++r)
    out.cl[r] = {1.0,
                 "requires m/n growing slower than every power of n"};
  return out;
}

double step_coefficient(std::uint32_t r, double beta_star,
                        const ActiveInputs& in) {
  in.validate();
  if (r < 1)
    throw std::invalid_argument("step_coefficient: r must be >= 1");
  if (in.max_moment() < r)
    throw std::invalid_argument("step_coefficient: moment z_" +
                                std::to_string(r) + " not provided");
  if (!(beta_star >= 0.0))
    throw std::invalid_argument("step_coefficient: beta_star must be >= 0");
  if (beta_star == 0.0) return 1.0;
  if (std::isinf(beta_star)) return 0.0;
  const double zr = in.z[r];
  const double term = std::pow(beta_star, r / 2.0) *
                      std::pow(in.z1(), -(static_cast<double>(r) + 2.0)) *
                      std::pow(in.z2(), static_cast<double>(r)) * zr * zr;
  return 1.0 / (term + 1.0);
}

InhomInputs InhomInputs::from_pmfs(const DiscretePmf& P1, const DiscretePmf& P2,
                                   double beta) {
  InhomInputs in;
  in.a1 = P1.moment(1);
  in.a2 = P1.moment(2);
  in.b1 = P2.moment(1);
  in.b2 = P2.moment(2);
  in.b3 = P2.moment(3);
  in.beta = beta;
  in.attribute_weights = P2;
  return in;
}

double InhomInputs::damped_b_moment(unsigned k) const {
  const double rate = a1 / std::sqrt(beta);
  double acc = 0.0;
  for (std::size_t i = 0; i < attribute_weights.size(); ++i) {
    const double b = attribute_weights.values()[i];
    acc += attribute_weights.probs()[i] *
           std::pow(b, static_cast<double>(k)) * std::exp(-rate * b);
  }
  return acc;
}

void InhomInputs::validate() const {
  if (!(a2 > 0.0))
    throw std::invalid_argument("inhomogeneous inputs: E A^2 must be positive");
  if (!(b3 > 0.0))
    throw std::invalid_argument("inhomogeneous inputs: E B^3 must be positive");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("inhomogeneous inputs: beta must be finite and positive");
  if (!(kappa() > 0.0))
    throw std::invalid_argument("inhomogeneous inputs: kappa must be positive");
}

Prediction predict_inhomogeneous(const InhomInputs& in, std::uint64_t n,
                                 std::uint32_t r_max) {
  in.validate();
  if (n == 0)
    throw std::invalid_argument("predict_inhomogeneous: vertex count required");
  const double root_beta = std::sqrt(in.beta);
  const double k = in.kappa();
  const double b2s = in.damped_b_moment(2);
  const double b3s = in.damped_b_moment(3);

  Prediction out;
  out.edge_density = in.a1 * in.a1 * in.b2 / static_cast<double>(n);
  out.alpha = in.b3 * k / (in.b3 * k + root_beta);
  out.cl[0] = {in.a1 * in.a1 * b2s / static_cast<double>(n),
               "inhomogeneous: damped edge density"};
  out.cl[1] = {b3s * k / (b3s * k + root_beta), "inhomogeneous: damped alpha"};
  for (std::uint32_t r = 2; r <= r_max; ++r)
    out.cl[r] = {1.0, "inhomogeneous: forced adjacency"};
  return out;
}

double poisson_pmf(std::uint32_t r, double lambda) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("poisson_pmf: lambda must be >= 0");
  if (lambda == 0.0) return r == 0 ? 1.0 : 0.0;
  return std::exp(-lambda + r * std::log(lambda) -
                  std::lgamma(static_cast<double>(r) + 1.0));
}

double asymptotic_degree_pmf(const DiscretePmf& z_pmf, std::uint32_t k) {
  const double z1 = z_pmf.moment(1);
  double acc = 0.0;
  for (std::size_t i = 0; i < z_pmf.size(); ++i)
    acc += z_pmf.probs()[i] * poisson_pmf(k, z_pmf.values()[i] * z1);
  return acc;
}

double le_cam_bound(std::span<const double> p) {
  double acc = 0.0;
  for (double pi : p) {
    if (!(pi >= 0.0 && pi <= 1.0))
      throw std::invalid_argument("le_cam_bound: probabilities must be in [0,1]");
    acc += pi * pi;
  }
  return acc;
}

double poisson_binomial_tv(std::span<const double> p) {
  if (p.size() > 30)
    throw std::invalid_argument("poisson_binomial_tv: at most 30 indicators");
  double mean = 0.0;
  for (double pi : p) {
    if (!(pi >= 0.0 && pi <= 1.0))
      throw std::invalid_argument("poisson_binomial_tv: probabilities must be in [0,1]");
    mean += pi;
  }
  // Exact pmf of the indicator sum by convolution.
  std::vector<double> pmf{1.0};
  for (double pi : p) {
    std::vector<double> next(pmf.size() + 1, 0.0);
    for (std::size_t k = 0; k < pmf.size(); ++k) {
      next[k] += pmf[k] * (1.0 - pi);
      next[k + 1] += pmf[k] * pi;
    }
    pmf = std::move(next);
  }
  double l1 = 0.0;
  double poisson_mass = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    const double q = poisson_pmf(static_cast<std::uint32_t>(k), mean);
    poisson_mass += q;
    l1 += std::abs(pmf[k] - q);
  }
  // The indicator sum has no mass beyond n; the Poisson tail is exact.
  l1 += std::max(0.0, 1.0 - poisson_mass);
  return 0.5 * l1;
}

IntersectionBounds intersection_size_bounds(std::uint64_t d1, std::uint64_t d2,
                                            std::uint64_t s, std::uint64_t m) {
  if (!(1 <= s && s <= d1 && d1 <= d2 && d2 <= m))
    throw std::invalid_argument(
        "intersection_size_bounds: need 1 <= s <= d1 <= d2 <= m");
  const double upper = std::exp(log_choose(d1, s) + log_choose(d2, s) -
                                log_choose(m, s));
  const double correction =
      1.0 - static_cast<double>(d1 - s) * static_cast<double>(d2 - s) /
                static_cast<double>(m + 1 - d1);
  return {std::max(0.0, correction * upper), upper};
}

}  // namespace theory
}  // namespace clfn
