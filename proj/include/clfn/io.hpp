#ifndef CLFN_IO_HPP
#define CLFN_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clfn/clustering.hpp"
#include "clfn/graph.hpp"

namespace clfn {

// Key/value pairs embedded in every generated file so outputs are
// self-describing (seed, model parameters, and so on).
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // empty means identity labels "0","1",...
};

struct LabeledIncidence {
  BipartiteIncidence incidence;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> attribute_labels;
};

// One edge per line, two whitespace- or comma-separated labels; '#' starts
// a comment. Labels are arbitrary strings, interned in first-seen order.
// Malformed lines are reported with their line number. A file with no
// edges is an error. Self-loops are an error unless allow_self_loops.
LabeledGraph read_edge_list(std::istream& in, bool allow_self_loops = false);

// One (vertex_label, attribute_label) pair per line, same lexical rules.
LabeledIncidence read_bipartite(std::istream& in);

// Streams written by this tool begin with "# clfn graph n=N" or
// "# clfn bipartite n=N m=M"; the declared dimensions preserve isolated
// vertices and empty sets, and ids are parsed as dense integers.
struct AnyInput {
  std::optional<LabeledGraph> graph;
  std::optional<LabeledIncidence> bipartite;
};
AnyInput read_auto(std::istream& in, bool force_bipartite = false,
                   bool allow_self_loops = false);

void write_edge_list(const Graph& g, std::ostream& out, const Metadata& meta,
                     const std::vector<std::string>& labels = {});
void write_bipartite(const BipartiteIncidence& inc, std::ostream& out,
                     const Metadata& meta);

// CSV columns exactly r,total_pairs,adjacent_pairs,cl,Cl; ratios printed
// with 12 significant digits, undefined ratios left empty. Rows cover every
// r with total_pairs(r) > 0. Metadata rides in leading '#' comments.
void write_profile_csv(const ClusteringProfile& p, std::ostream& out,
                       const Metadata& meta = {});

// JSON mirrors the CSV rows plus C, p_e, n, edge count and metadata.
void write_profile_json(const ClusteringProfile& p, std::ostream& out,
                        const Metadata& meta = {});
ClusteringProfile read_profile_json(std::istream& in);

// One nonnegative integer per line ('#' comments allowed).
std::vector<std::uint32_t> read_counts(std::istream& in);

std::string format_ratio(double v);  // %.12g

}  // namespace clfn

#endif  // CLFN_IO_HPP
