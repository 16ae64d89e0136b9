#include "clfn/clustering.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace clfn {

namespace {

struct WorkerState {
  std::vector<std::uint32_t> count;   // common-neighbor count per candidate w
  std::vector<std::uint32_t> touched; // candidates with count > 0
  std::vector<char> is_neighbor;      // marks neighbors > u of the source
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> adjacent;
};

// Counts, for every pair {u,w} owned by source u (u < w), the number of
// common neighbors by scattering over two-hop neighborhoods. Each pair is
// visited by exactly one source, so per-worker histograms merge exactly.
void scan_sources(const Graph& g, VertexId begin, VertexId end, WorkerState& st) {
  for (VertexId u = begin; u < end; ++u) {
    const auto nu = g.neighbors(u);
    for (VertexId v : nu)
      if (v > u) st.is_neighbor[v] = 1;
    for (VertexId v : nu) {
      const auto nv = g.neighbors(v);
      auto it = std::upper_bound(nv.begin(), nv.end(), u);
      for (; it != nv.end(); ++it) {
        const VertexId w = *it;
        if (st.count[w]++ == 0) st.touched.push_back(w);
      }
    }
    for (VertexId w : st.touched) {
      const std::uint32_t r = st.count[w];
      st.count[w] = 0;
      ++st.total[r];
      if (st.is_neighbor[w]) ++st.adjacent[r];
    }
    st.touched.clear();
    for (VertexId v : nu)
      if (v > u) st.is_neighbor[v] = 0;
  }
}

PairHistogram wedge_histogram(const Graph& g, const HistogramOptions& opts) {
  const VertexId n = g.vertex_count();

  std::uint64_t wedges = 0;
  std::uint32_t hub_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    wedges += d * (d - (d > 0 ? 1 : 0)) / 2;
    hub_degree = std::max(hub_degree, g.degree(v));
  }
  if (wedges > opts.wedge_cap)
    throw std::runtime_error(
        "pair_histogram: " + std::to_string(wedges) +
        " wedge keys exceed cap " + std::to_string(opts.wedge_cap) +
        "; largest hub has degree " + std::to_string(hub_degree));

  const unsigned threads =
      std::max(1u, std::min(opts.threads, std::max(1u, n / 64)));
  const std::size_t hist_size = static_cast<std::size_t>(hub_degree) + 1;

  std::vector<WorkerState> states(threads);
  for (auto& st : states) {
    st.count.assign(n, 0);
    st.is_neighbor.assign(n, 0);
    st.total.assign(hist_size, 0);
    st.adjacent.assign(hist_size, 0);
  }

  if (threads == 1) {
    scan_sources(g, 0, n, states[0]);
  } else {
    // Contiguous source ranges with balanced two-hop work.
    std::vector<std::uint64_t> cost(n + 1, 0);
    for (VertexId u = 0; u < n; ++u) {
      std::uint64_t c = 0;
      for (VertexId v : g.neighbors(u)) c += g.degree(v);
      cost[u + 1] = cost[u] + c + 1;
    }
    std::vector<std::thread> pool;
    VertexId begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t goal = cost[n] / threads * (t + 1);
      VertexId end = t + 1 == threads
                         ? n
                         : static_cast<VertexId>(
                               std::lower_bound(cost.begin() + begin,
                                                cost.end(), goal) -
                               cost.begin());
      end = std::min<VertexId>(std::max(end, begin), n);
      pool.emplace_back(scan_sources, std::cref(g), begin, end,
                        std::ref(states[t]));
      begin = end;
    }
    for (auto& th : pool) th.join();
  }

  PairHistogram hist;
  hist.n = n;
  hist.edges = g.edge_count();
  hist.total.assign(hist_size, 0);
  hist.adjacent.assign(hist_size, 0);
  for (const auto& st : states)
    for (std::size_t r = 1; r < hist_size; ++r) {
      hist.total[r] += st.total[r];
      hist.adjacent[r] += st.adjacent[r];
    }
  return hist;
}

PairHistogram oracle_histogram(const Graph& g) {
  const VertexId n = g.vertex_count();
  PairHistogram hist;
  hist.n = n;
  hist.edges = g.edge_count();
  hist.total.assign(static_cast<std::size_t>(g.max_degree()) + 1, 0);
  hist.adjacent.assign(hist.total.size(), 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const std::uint64_t r = common_neighbors(g, u, v);
      if (r == 0) continue;  // r=0 row comes from the complement
      ++hist.total[r];
      if (g.adjacent(u, v)) ++hist.adjacent[r];
    }
  return hist;
}

// Fills the r=0 row by complement and trims unused tail entries.
void finalize(PairHistogram& hist) {
  std::uint64_t seen_total = 0, seen_adjacent = 0;
  std::size_t top = 0;
  for (std::size_t r = 1; r < hist.total.size(); ++r) {
    seen_total += hist.total[r];
    seen_adjacent += hist.adjacent[r];
    if (hist.total[r] > 0) top = r;
  }
  hist.total.resize(top + 1);
  hist.adjacent.resize(top + 1);
  hist.total[0] = hist.pair_count() - seen_total;
  hist.adjacent[0] = hist.edges - seen_adjacent;
}

}  // namespace

std::uint64_t PairHistogram::weighted_total() const {
  std::uint64_t acc = 0;
  for (std::size_t r = 1; r < total.size(); ++r) acc += r * total[r];
  return acc;
}

std::uint64_t PairHistogram::weighted_adjacent() const {
  std::uint64_t acc = 0;
  for (std::size_t r = 1; r < adjacent.size(); ++r) acc += r * adjacent[r];
  return acc;
}

PairHistogram pair_histogram(const Graph& g, HistogramOptions opts) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("pair_histogram: need at least 2 vertices");
  PairHistogram hist = opts.strategy == HistogramStrategy::wedge_map
                           ? wedge_histogram(g, opts)
                           : oracle_histogram(g);
  finalize(hist);
  return hist;
}

ClusteringProfile profile_from_histogram(PairHistogram hist) {
  ClusteringProfile p;
  p.histogram = std::move(hist);
  const auto& h = p.histogram;
  const std::size_t size = h.total.size();
  p.cl.assign(size, std::nullopt);
  p.cumulative_cl.assign(size, std::nullopt);
  for (std::size_t r = 0; r < size; ++r)
    if (h.total[r] > 0)
      p.cl[r] = static_cast<double>(h.adjacent[r]) /
                static_cast<double>(h.total[r]);
  std::uint64_t tail_total = 0, tail_adjacent = 0;
  for (std::size_t r = size; r-- > 0;) {
    tail_total += h.total[r];
    tail_adjacent += h.adjacent[r];
    if (tail_total > 0)
      p.cumulative_cl[r] = static_cast<double>(tail_adjacent) /
                           static_cast<double>(tail_total);
  }
  const std::uint64_t wedges = h.weighted_total();
  if (wedges > 0)
    p.global_coefficient = static_cast<double>(h.weighted_adjacent()) /
                           static_cast<double>(wedges);
  p.edge_density =
      static_cast<double>(h.edges) / static_cast<double>(h.pair_count());
  return p;
}

ClusteringProfile clustering_profile(const Graph& g, HistogramOptions opts) {
  return profile_from_histogram(pair_histogram(g, opts));
}

std::optional<double> global_clustering_coefficient(const Graph& g) {
  std::uint64_t wedge_pairs = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    wedge_pairs += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  if (wedge_pairs == 0) return std::nullopt;
  // Σ over edges of |N(u) ∩ N(v)| counts every triangle three times.
  std::uint64_t closed = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) closed += common_neighbors(g, u, v);
  return static_cast<double>(closed) / static_cast<double>(wedge_pairs);
}

}  // namespace clfn
