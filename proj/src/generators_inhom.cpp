#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "clfn/generators.hpp"

namespace clfn {

namespace {

// Stream layout: child(0) row weights, child(1) column weights,
// child(2) cells (exact path, one grandchild per row, one draw per cell
// indexed by counter), child(3) fast-path row walks.
constexpr std::uint64_t kRowWeights = 0;
constexpr std::uint64_t kColWeights = 1;
constexpr std::uint64_t kCells = 2;
constexpr std::uint64_t kFastRows = 3;

InhomSample sample_cells(VertexId n, std::uint32_t m,
                         std::vector<double> row_weight,
                         std::vector<double> col_weight, double scale,
                         std::uint64_t seed, const InhomOptions& opts) {
  InhomSample out;
  double col_max = 0.0;
  for (double b : col_weight) col_max = std::max(col_max, b);

  const StreamKey root = StreamKey::root(seed);
  std::vector<std::vector<std::uint32_t>> sets(n);
  for (VertexId i = 0; i < n; ++i) {
    const double a = row_weight[i];
    if (a <= 0.0) continue;
    const double row_max = a * col_max / scale;
    if (row_max <= 0.0) continue;
    if (opts.fast && row_max < opts.fast_row_threshold) {
      // Geometric walk: jump between candidate cells with the row's
      // maximum probability, then thin each candidate down to p_ij.
      SubstreamRng rng(root.child(kFastRows).child(i));
      const double log_keep = std::log1p(-row_max);
      double j = std::floor(std::log(1.0 - rng.next_unit()) / log_keep);
      while (j < static_cast<double>(m)) {
        const auto col = static_cast<std::uint32_t>(j);
        const double p = a * col_weight[col] / scale;
        if (rng.next_unit() * row_max < p) sets[i].push_back(col);
        j += 1.0 + std::floor(std::log(1.0 - rng.next_unit()) / log_keep);
      }
    } else {
      SubstreamRng rng(root.child(kCells).child(i));
      for (std::uint32_t j = 0; j < m; ++j) {
        const double raw = a * col_weight[j] / scale;
        if (raw > 1.0) ++out.clamped_cells;
        if (rng.next_unit() < raw) sets[i].push_back(j);
      }
    }
  }

  // Clamped cells in skipped fast rows cannot occur: row_max < 1 there.
  out.incidence = BipartiteIncidence::from_sets(n, m, std::move(sets));
  out.vertex_weights = std::move(row_weight);
  out.attribute_weights = std::move(col_weight);
  return out;
}

}  // namespace

InhomSample sample_inhomogeneous(VertexId n, std::uint32_t m,
                                 const DiscretePmf& P1, const DiscretePmf& P2,
                                 std::uint64_t seed, InhomOptions opts) {
  const StreamKey root = StreamKey::root(seed);
  std::vector<double> a(n), b(m);
  {
    SubstreamRng rng(root.child(kRowWeights));
    for (VertexId i = 0; i < n; ++i) a[i] = P1.sample(rng);
  }
  {
    SubstreamRng rng(root.child(kColWeights));
    for (std::uint32_t j = 0; j < m; ++j) b[j] = P2.sample(rng);
  }
  const double scale = std::sqrt(static_cast<double>(n) *
                                 static_cast<double>(m));
  if (scale <= 0.0)
    throw std::invalid_argument("sample_inhomogeneous: empty dimensions");
  return sample_cells(n, m, std::move(a), std::move(b), scale, seed, opts);
}

InhomSample memoryless_inhomogeneous(std::span<const std::uint32_t> a,
                                     std::span<const std::uint32_t> b,
                                     std::uint64_t seed, InhomOptions opts) {
  const std::uint64_t sum_a =
      std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const std::uint64_t sum_b =
      std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (sum_a != sum_b)
    throw std::invalid_argument("memoryless_inhomogeneous: marginal sums differ (" +
                                std::to_string(sum_a) + " vs " +
                                std::to_string(sum_b) + ")");
  if (sum_a == 0)
    throw std::invalid_argument("memoryless_inhomogeneous: total membership M is 0");
  std::vector<double> row(a.begin(), a.end());
  std::vector<double> col(b.begin(), b.end());
  return sample_cells(static_cast<VertexId>(a.size()),
                      static_cast<std::uint32_t>(b.size()), std::move(row),
                      std::move(col), static_cast<double>(sum_a), seed, opts);
}

}  // namespace clfn
