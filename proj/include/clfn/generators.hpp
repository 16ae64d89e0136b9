#ifndef CLFN_GENERATORS_HPP
#define CLFN_GENERATORS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "clfn/graph.hpp"
#include "clfn/pmf.hpp"

namespace clfn {

// Active model: every vertex draws a set size X_i from size_pmf, then a
// uniformly random X_i-subset of the ground set {0..m-1}, independently.
// One RNG substream per vertex, so the result does not depend on
// iteration order or worker count. size_pmf must have integer support
// with maximum <= m.
BipartiteIncidence sample_active(VertexId n, std::uint32_t m,
                                 const DiscretePmf& size_pmf,
                                 std::uint64_t seed);

// Memoryless variant: vertex i keeps only its observed set size sizes[i]
// and redraws a uniform subset of a ground set of size m_tilde.
BipartiteIncidence memoryless_active(std::span<const std::uint32_t> sizes,
                                     std::uint32_t m_tilde, std::uint64_t seed);

// Analytic mean degree of the memoryless graph:
// (1/n) Σ_i Σ_{j≠i} (1 - C(m̃-x_i, x_j)/C(m̃, x_j)), grouped by distinct
// size so the cost is O(k^2) for k distinct sizes. Requires max size <= m̃.
double expected_mean_degree(std::span<const std::uint32_t> sizes,
                            std::uint64_t m_tilde);

// Smallest-gap ground-set size: the integer m̃ minimizing
// |expected_mean_degree(sizes, m̃) - target|, ties toward smaller m̃.
// Uses bisection on the monotone (non-increasing) mean degree. Throws when
// the target is not achievable.
std::uint64_t adjust_ground_set(std::span<const std::uint32_t> sizes,
                                double target_mean_degree);

// Inhomogeneous model sample plus bookkeeping the theory needs: the count
// of cells whose inclusion probability was clamped at 1 (clamping breaks
// the product form the predictions assume, so experiments can insist on 0).
struct InhomSample {
  BipartiteIncidence incidence;
  std::uint64_t clamped_cells = 0;
  std::vector<double> vertex_weights;     // realized A_i
  std::vector<double> attribute_weights;  // realized B_j
};

struct InhomOptions {
  // The exact path draws one uniform per cell from a per-cell substream.
  // The fast path skips zero-weight rows and walks low-probability rows
  // geometrically; it is deterministic per seed but uses a different
  // random mapping than the exact path.
  bool fast = false;
  double fast_row_threshold = 0.1;
};

// Draws A_i ~ P1, B_j ~ P2, then includes attribute j in D_i independently
// with probability min{1, A_i B_j / sqrt(nm)}.
InhomSample sample_inhomogeneous(VertexId n, std::uint32_t m,
                                 const DiscretePmf& P1, const DiscretePmf& P2,
                                 std::uint64_t seed, InhomOptions opts = {});

// Memoryless variant driven by observed marginals: inclusion probability
// min{1, a_i b_j / M} with M = Σ a_i = Σ b_j (sums must match).
InhomSample memoryless_inhomogeneous(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b,
                                     std::uint64_t seed, InhomOptions opts = {});

// ln C(n, k); -inf when k > n.
double log_choose(std::uint64_t n, std::uint64_t k);

}  // namespace clfn

#endif  // CLFN_GENERATORS_HPP
