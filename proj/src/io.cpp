#include "clfn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace clfn {

namespace {

void strip_comment(std::string& line) {
  const auto pos = line.find('#');
  if (pos != std::string::npos) line.resize(pos);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::uint64_t parse_u64(const std::string& tok, std::size_t line_no,
                        const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what +
                             " '" + tok + "' is not a nonnegative integer");
  return v;
}

class LabelInterner {
 public:
  std::uint32_t id_of(const std::string& label) {
    const auto [it, inserted] =
        map_.emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> take() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::string, std::uint32_t> map_;
  std::vector<std::string> labels_;
};

struct HeaderInfo {
  bool bipartite = false;
  std::uint64_t n = 0, m = 0;
};

// Recognizes "# clfn graph n=N" / "# clfn bipartite n=N m=M".
std::optional<HeaderInfo> parse_header(const std::string& first_line) {
  std::istringstream ss(first_line);
  std::string hash, tool, kind;
  ss >> hash >> tool >> kind;
  if (hash != "#" || tool != "clfn") return std::nullopt;
  HeaderInfo info;
  if (kind == "bipartite") info.bipartite = true;
  else if (kind != "graph") return std::nullopt;
  std::string kv;
  while (ss >> kv) {
    if (kv.rfind("n=", 0) == 0) info.n = std::stoull(kv.substr(2));
    if (kv.rfind("m=", 0) == 0) info.m = std::stoull(kv.substr(2));
  }
  return info;
}

void write_meta_comments(std::ostream& out, const Metadata& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
}

}  // namespace

std::string format_ratio(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

LabeledGraph read_edge_list(std::istream& in, bool allow_self_loops) {
  LabelInterner interner;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_comment(line);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 2 fields, got " +
                               std::to_string(toks.size()));
    // sequence the interning: argument evaluation order is unspecified
    const VertexId u = interner.id_of(toks[0]);
    const VertexId v = interner.id_of(toks[1]);
    edges.emplace_back(u, v);
  }
  if (interner.size() == 0)
    throw std::runtime_error("edge list: no edges found (n=0)");
  LabeledGraph out;
  out.labels = interner.take();
  out.graph = Graph::from_edges(static_cast<VertexId>(out.labels.size()),
                                edges, allow_self_loops);
  return out;
}

LabeledIncidence read_bipartite(std::istream& in) {
  LabelInterner vertices, attributes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_comment(line);
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 2 fields, got " +
                               std::to_string(toks.size()));
    const std::uint32_t v = vertices.id_of(toks[0]);
    const std::uint32_t a = attributes.id_of(toks[1]);
    pairs.emplace_back(v, a);
  }
  if (vertices.size() == 0)
    throw std::runtime_error("bipartite list: no memberships found");
  std::vector<std::vector<std::uint32_t>> sets(vertices.size());
  for (auto [v, a] : pairs) sets[v].push_back(a);
  LabeledIncidence out;
  out.vertex_labels = vertices.take();
  out.attribute_labels = attributes.take();
  out.incidence = BipartiteIncidence::from_sets(
      static_cast<VertexId>(out.vertex_labels.size()),
      static_cast<std::uint32_t>(out.attribute_labels.size()),
      std::move(sets));
  return out;
}

AnyInput read_auto(std::istream& in, bool force_bipartite,
                   bool allow_self_loops) {
  std::optional<HeaderInfo> header;
  // Peek at the first line; put it back through a buffered rerun since the
  // parsers below consume line by line.
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(std::move(line));
  if (!lines.empty()) header = parse_header(lines.front());

  std::stringstream replay;
  for (const auto& l : lines) replay << l << '\n';

  AnyInput out;
  if (header) {
    // Dense integer ids with declared dimensions: isolated vertices and
    // empty sets survive the round trip.
    std::size_t line_no = 0;
    if (header->bipartite) {
      std::vector<std::vector<std::uint32_t>> sets(header->n);
      for (const auto& raw : lines) {
        ++line_no;
        std::string body = raw;
        strip_comment(body);
        const auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (toks.size() != 2)
          throw std::runtime_error("line " + std::to_string(line_no) +
                                   ": expected 2 fields");
        const auto v = parse_u64(toks[0], line_no, "vertex id");
        const auto a = parse_u64(toks[1], line_no, "attribute id");
        if (v >= header->n || a >= header->m)
          throw std::runtime_error("line " + std::to_string(line_no) +
                                   ": id outside declared dimensions");
        sets[v].push_back(static_cast<std::uint32_t>(a));
      }
      LabeledIncidence inc;
      inc.incidence = BipartiteIncidence::from_sets(
          static_cast<VertexId>(header->n),
          static_cast<std::uint32_t>(header->m), std::move(sets));
      out.bipartite = std::move(inc);
    } else {
      std::vector<std::pair<VertexId, VertexId>> edges;
      for (const auto& raw : lines) {
        ++line_no;
        std::string body = raw;
        strip_comment(body);
        const auto toks = tokenize(body);
        if (toks.empty()) continue;
        if (toks.size() != 2)
          throw std::runtime_error("line " + std::to_string(line_no) +
                                   ": expected 2 fields");
        const auto u = parse_u64(toks[0], line_no, "vertex id");
        const auto v = parse_u64(toks[1], line_no, "vertex id");
        if (u >= header->n || v >= header->n)
          throw std::runtime_error("line " + std::to_string(line_no) +
                                   ": id outside declared dimensions");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
      LabeledGraph g;
      g.graph = Graph::from_edges(static_cast<VertexId>(header->n), edges,
                                  allow_self_loops);
      out.graph = std::move(g);
    }
    return out;
  }

  if (force_bipartite)
    out.bipartite = read_bipartite(replay);
  else
    out.graph = read_edge_list(replay, allow_self_loops);
  return out;
}

void write_edge_list(const Graph& g, std::ostream& out, const Metadata& meta,
                     const std::vector<std::string>& labels) {
  // The magic header (dense integer ids, declared n) keeps isolated
  // vertices alive across a round trip; labeled output is a plain edge
  // list readable by any tool.
  if (labels.empty()) out << "# clfn graph n=" << g.vertex_count() << "\n";
  write_meta_comments(out, meta);
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u)) {
      if (u >= v) continue;
      if (labels.empty())
        out << u << ' ' << v << "\n";
      else
        out << labels[u] << ' ' << labels[v] << "\n";
    }
}

void write_bipartite(const BipartiteIncidence& inc, std::ostream& out,
                     const Metadata& meta) {
  out << "# clfn bipartite n=" << inc.vertex_count()
      << " m=" << inc.ground_set_size() << "\n";
  write_meta_comments(out, meta);
  for (VertexId v = 0; v < inc.vertex_count(); ++v)
    for (std::uint32_t a : inc.set_of(v)) out << v << ' ' << a << "\n";
}

void write_profile_csv(const ClusteringProfile& p, std::ostream& out,
                       const Metadata& meta) {
  write_meta_comments(out, meta);
  const auto& h = p.histogram;
  out << "# n=" << h.n << " edges=" << h.edges
      << " p_e=" << format_ratio(p.edge_density);
  if (p.global_coefficient)
    out << " C=" << format_ratio(*p.global_coefficient);
  out << "\n";
  out << "r,total_pairs,adjacent_pairs,cl,Cl\n";
  for (std::size_t r = 0; r < h.total.size(); ++r) {
    if (h.total[r] == 0 && r != 0) continue;
    out << r << ',' << h.total[r] << ',' << h.adjacent[r] << ',';
    if (p.cl[r]) out << format_ratio(*p.cl[r]);
    out << ',';
    if (p.cumulative_cl[r]) out << format_ratio(*p.cumulative_cl[r]);
    out << "\n";
  }
}

void write_profile_json(const ClusteringProfile& p, std::ostream& out,
                        const Metadata& meta) {
  nlohmann::ordered_json doc;
  const auto& h = p.histogram;
  doc["n"] = h.n;
  doc["edges"] = h.edges;
  doc["p_e"] = p.edge_density;
  if (p.global_coefficient)
    doc["C"] = *p.global_coefficient;
  else
    doc["C"] = nullptr;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < h.total.size(); ++r) {
    if (h.total[r] == 0 && r != 0) continue;
    nlohmann::ordered_json row;
    row["r"] = r;
    row["total_pairs"] = h.total[r];
    row["adjacent_pairs"] = h.adjacent[r];
    if (p.cl[r]) row["cl"] = *p.cl[r]; else row["cl"] = nullptr;
    if (p.cumulative_cl[r]) row["Cl"] = *p.cumulative_cl[r];
    else row["Cl"] = nullptr;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  auto md = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta) md[k] = v;
  doc["metadata"] = std::move(md);
  out << doc.dump(2) << "\n";
}

ClusteringProfile read_profile_json(std::istream& in) {
  nlohmann::json doc;
  in >> doc;
  PairHistogram h;
  h.n = doc.at("n").get<VertexId>();
  h.edges = doc.at("edges").get<std::uint64_t>();
  std::uint32_t top = 0;
  for (const auto& row : doc.at("rows"))
    top = std::max(top, row.at("r").get<std::uint32_t>());
  h.total.assign(top + 1, 0);
  h.adjacent.assign(top + 1, 0);
  for (const auto& row : doc.at("rows")) {
    const auto r = row.at("r").get<std::uint32_t>();
    h.total[r] = row.at("total_pairs").get<std::uint64_t>();
    h.adjacent[r] = row.at("adjacent_pairs").get<std::uint64_t>();
  }
  return profile_from_histogram(std::move(h));
}

std::vector<std::uint32_t> read_counts(std::istream& in) {
  std::vector<std::uint32_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_comment(line);
    for (const auto& tok : tokenize(line))
      out.push_back(static_cast<std::uint32_t>(parse_u64(tok, line_no, "count")));
  }
  return out;
}

}  // namespace clfn
