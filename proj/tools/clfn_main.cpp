// clfn: clustering functions of graphs and random intersection graph models.
//
// Subcommands: clustfn, gen, fit, predict, sample, degree-dist.
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clfn/clustering.hpp"
#include "clfn/generators.hpp"
#include "clfn/graph.hpp"
#include "clfn/io.hpp"
#include "clfn/pmf.hpp"
#include "clfn/sampling.hpp"
#include "clfn/theory.hpp"

namespace {

constexpr const char* kVersion = "clfn 0.1.0";

struct GlobalOpts {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "csv";
  std::string strategy = "wedge";
};

std::string u64str(std::uint64_t v) { return std::to_string(v); }

// A malformed flag value is a usage error (exit 2), not a data error.
clfn::DiscretePmf parse_pmf_flag(const std::string& text, const char* flag) {
  try {
    return clfn::DiscretePmf::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(flag, e.what());
  }
}

clfn::HistogramOptions histogram_options(const GlobalOpts& g) {
  clfn::HistogramOptions opts;
  opts.threads = g.threads;
  opts.strategy = g.strategy == "oracle" ? clfn::HistogramStrategy::oracle
                                         : clfn::HistogramStrategy::wedge_map;
  return opts;
}

// '-' means stdin/stdout.
std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-" || path.empty())
    return std::make_unique<std::istream>(std::cin.rdbuf());
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open input file '" + path + "'");
  return file;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path == "-" || path.empty())
    return std::make_unique<std::ostream>(std::cout.rdbuf());
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::runtime_error("cannot open output file '" + path + "'");
  return file;
}

clfn::Graph load_graph(const std::string& path, bool force_bipartite,
                       bool allow_self_loops,
                       std::vector<std::string>* labels_out = nullptr) {
  auto in = open_input(path);
  const auto any = clfn::read_auto(*in, force_bipartite, allow_self_loops);
  if (any.graph) {
    if (labels_out) *labels_out = any.graph->labels;
    return any.graph->graph;
  }
  if (labels_out) *labels_out = any.bipartite->vertex_labels;
  return clfn::project_bipartite(any.bipartite->incidence);
}

std::vector<std::uint32_t> load_sizes(const std::string& sizes_path,
                                      const std::string& bipartite_path) {
  if (!sizes_path.empty()) {
    auto in = open_input(sizes_path);
    return clfn::read_counts(*in);
  }
  auto in = open_input(bipartite_path);
  const auto any = clfn::read_auto(*in, /*force_bipartite=*/true);
  return any.bipartite->incidence.set_sizes();
}

void emit_incidence_or_projection(const clfn::BipartiteIncidence& inc,
                                  bool project, const std::string& out_path,
                                  clfn::Metadata meta) {
  auto out = open_output(out_path);
  if (project) {
    clfn::write_edge_list(clfn::project_bipartite(inc), *out, meta);
  } else {
    clfn::write_bipartite(inc, *out, meta);
  }
}

void emit_prediction(const clfn::theory::Prediction& p, const GlobalOpts& g,
                     const std::string& out_path, clfn::Metadata meta) {
  auto out = open_output(out_path);
  if (g.format == "json") {
    std::ostringstream rows;
    rows << "{";
    bool first = true;
    auto field = [&](const std::string& k, const std::string& v) {
      if (!first) rows << ",";
      rows << "\"" << k << "\":" << v;
      first = false;
    };
    if (p.edge_density) field("p_e", clfn::format_ratio(*p.edge_density));
    if (p.alpha) field("alpha", clfn::format_ratio(*p.alpha));
    if (p.lambda) field("lambda", clfn::format_ratio(*p.lambda));
    rows << ",\"cl\":{";
    bool f2 = true;
    for (const auto& [r, entry] : p.cl) {
      if (!f2) rows << ",";
      rows << "\"" << r << "\":" << clfn::format_ratio(entry.value);
      f2 = false;
    }
    rows << "}}";
    *out << rows.str() << "\n";
    return;
  }
  for (const auto& [k, v] : meta) *out << "# " << k << "=" << v << "\n";
  *out << "quantity,value,regime\n";
  if (p.edge_density)
    *out << "p_e," << clfn::format_ratio(*p.edge_density) << ",\n";
  if (p.lambda)
    *out << "lambda," << clfn::format_ratio(*p.lambda) << ",\n";
  if (p.alpha)
    *out << "alpha," << clfn::format_ratio(*p.alpha) << ",\n";
  for (const auto& [r, entry] : p.cl)
    *out << "cl(" << r << ")," << clfn::format_ratio(entry.value) << ",\""
         << entry.regime << "\"\n";
}

// Moment inputs shared by the predict subcommands.
struct MomentCli {
  std::string pmf;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double z1 = 0.0, z2 = 0.0, z3 = 0.0;
  std::string z_list;
  double beta = 0.0;

  clfn::theory::ActiveInputs resolve(unsigned r_max, bool diverging) const {
    clfn::theory::ActiveInputs in;
    if (!pmf.empty()) {
      if (n == 0 || m == 0)
        throw CLI::ValidationError("predict", "--pmf needs -n and -m");
      in = clfn::theory::size_moments(parse_pmf_flag(pmf, "--pmf"), n, m,
                                      r_max);
    } else {
      in.n = n;
      in.beta_ratio = beta;
      in.z.assign(std::max(r_max, 2u) + 1, 0.0);
      in.z[0] = 1.0;
      if (!z_list.empty()) {
        std::istringstream ss(z_list);
        std::string tok;
        unsigned r = 1;
        while (std::getline(ss, tok, ',')) {
          if (r >= in.z.size()) in.z.resize(r + 1, 0.0);
          try {
            in.z[r++] = std::stod(tok);
          } catch (const std::exception&) {
            throw CLI::ValidationError("--z", "cannot parse '" + tok + "'");
          }
        }
      } else {
        if (in.z.size() < 4) in.z.resize(4, 0.0);
        in.z[1] = z1;
        in.z[2] = z2;
        in.z[3] = z3;
      }
      if (in.z.size() < 3) in.z.resize(3, 0.0);
    }
    in.beta_diverges = diverging;
    return in;
  }
};

double parse_beta_star(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--beta-star", "cannot parse '" + text + "'");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"clustering functions of graphs and random intersection "
               "graph models"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "base seed for all randomized operations");
  app.add_option("--threads", g.threads, "worker threads for the pair histogram");
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--strategy", g.strategy,
                 "pair histogram strategy: wedge or oracle")
      ->check(CLI::IsMember({"wedge", "oracle"}));

  // ---- clustfn ----
  auto* clust = app.add_subcommand(
      "clustfn", "clustering profile cl(r), Cl(r), C of a graph or "
                 "bipartite incidence");
  clust->fallthrough();
  struct {
    std::string input = "-", output = "-";
    bool bipartite = false, allow_loops = false;
  } clust_opt;
  clust->add_option("input", clust_opt.input, "edge list or bipartite file, - for stdin");
  clust->add_option("-o,--output", clust_opt.output, "output file, - for stdout");
  clust->add_flag("--bipartite", clust_opt.bipartite,
                  "treat input as vertex/attribute pairs and project");
  clust->add_flag("--allow-self-loops", clust_opt.allow_loops,
                  "drop self-loops instead of failing");

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "sample a random intersection graph");
  gen->require_subcommand(1);
  gen->fallthrough();

  struct {
    std::uint64_t n = 0, m = 0;
    std::string pmf;
    bool project = false;
    std::string output = "-";
  } gen_active_opt;
  auto* gen_active = gen->add_subcommand(
      "active", "every vertex draws a set size from PMF, then a uniform subset");
  gen_active->fallthrough();
  gen_active->add_option("-n,--vertices", gen_active_opt.n, "vertex count")
      ->required();
  gen_active->add_option("-m,--attributes", gen_active_opt.m, "ground set size")
      ->required();
  gen_active->add_option("--pmf", gen_active_opt.pmf,
                         "set size pmf, value:prob[,value:prob...]")
      ->required();
  gen_active->add_flag("--project", gen_active_opt.project,
                       "emit the one-mode projection instead of the incidence");
  gen_active->add_option("-o,--output", gen_active_opt.output, "output file");

  struct {
    std::uint64_t n = 0, m = 0;
    std::string pmf1, pmf2;
    bool project = false, fast = false;
    std::string output = "-";
  } gen_inhom_opt;
  auto* gen_inhom = gen->add_subcommand(
      "inhom", "weighted vertices and attributes; cell (i,j) included with "
               "probability min{1, A_i B_j / sqrt(nm)}");
  gen_inhom->fallthrough();
  gen_inhom->add_option("-n,--vertices", gen_inhom_opt.n)->required();
  gen_inhom->add_option("-m,--attributes", gen_inhom_opt.m)->required();
  gen_inhom->add_option("--pmf1", gen_inhom_opt.pmf1, "vertex weight pmf")
      ->required();
  gen_inhom->add_option("--pmf2", gen_inhom_opt.pmf2, "attribute weight pmf")
      ->required();
  gen_inhom->add_flag("--fast", gen_inhom_opt.fast,
                      "geometric row skipping (same law, different draws)");
  gen_inhom->add_flag("--project", gen_inhom_opt.project);
  gen_inhom->add_option("-o,--output", gen_inhom_opt.output);

  struct {
    std::string sizes, from_bipartite;
    std::uint64_t m_tilde = 0;
    double target_degree = -1.0;
    bool match_observed = false;
    bool project = false;
    std::string output = "-";
  } gen_ma_opt;
  auto* gen_ma = gen->add_subcommand(
      "memoryless-active",
      "keep only observed set sizes; redraw uniform subsets of a ground set");
  gen_ma->fallthrough();
  gen_ma->add_option("--sizes", gen_ma_opt.sizes, "file with one count per line");
  gen_ma->add_option("--from-bipartite", gen_ma_opt.from_bipartite,
                     "derive sizes from a bipartite file");
  gen_ma->add_option("--m-tilde", gen_ma_opt.m_tilde, "ground set size");
  gen_ma->add_option("--target-degree", gen_ma_opt.target_degree,
                     "adjust the ground set to this mean degree");
  gen_ma->add_flag("--match-observed", gen_ma_opt.match_observed,
                   "adjust to the observed projection's mean degree "
                   "(needs --from-bipartite)");
  gen_ma->add_flag("--project", gen_ma_opt.project);
  gen_ma->add_option("-o,--output", gen_ma_opt.output);

  struct {
    std::string from_bipartite, a_file, b_file;
    bool project = false, fast = false;
    std::string output = "-";
  } gen_mi_opt;
  auto* gen_mi = gen->add_subcommand(
      "memoryless-inhom",
      "keep both observed marginals; cell (i,j) included with probability "
      "min{1, a_i b_j / M}");
  gen_mi->fallthrough();
  gen_mi->add_option("--from-bipartite", gen_mi_opt.from_bipartite);
  gen_mi->add_option("--a", gen_mi_opt.a_file, "vertex marginals file");
  gen_mi->add_option("--b", gen_mi_opt.b_file, "attribute marginals file");
  gen_mi->add_flag("--fast", gen_mi_opt.fast);
  gen_mi->add_flag("--project", gen_mi_opt.project);
  gen_mi->add_option("-o,--output", gen_mi_opt.output);

  // ---- fit ----
  auto* fit = app.add_subcommand("fit", "fit surrogate-model parameters");
  fit->require_subcommand(1);
  fit->fallthrough();
  struct {
    std::string sizes, from_bipartite;
    double target_degree = -1.0;
    bool match_observed = false;
  } fit_opt;
  auto* fit_adjust = fit->add_subcommand(
      "adjust-m", "ground set size whose memoryless mean degree best matches "
                  "the target");
  fit_adjust->fallthrough();
  fit_adjust->add_option("--sizes", fit_opt.sizes);
  fit_adjust->add_option("--from-bipartite", fit_opt.from_bipartite);
  fit_adjust->add_option("--target-degree", fit_opt.target_degree);
  fit_adjust->add_flag("--match-observed", fit_opt.match_observed);

  // ---- predict ----
  auto* predict = app.add_subcommand("predict",
                                     "closed-form leading-order predictions");
  predict->require_subcommand(1);
  predict->fallthrough();

  MomentCli t1_in;
  std::uint32_t t1_rmax = 10;
  std::string predict_out = "-";
  auto* t1 = predict->add_subcommand(
      "t1", "active model, finite attribute-to-vertex ratio");
  t1->fallthrough();
  t1->add_option("--pmf", t1_in.pmf, "set size pmf");
  t1->add_option("-n,--vertices", t1_in.n);
  t1->add_option("-m,--attributes", t1_in.m);
  t1->add_option("--z1", t1_in.z1);
  t1->add_option("--z2", t1_in.z2);
  t1->add_option("--z3", t1_in.z3);
  t1->add_option("--z", t1_in.z_list, "comma list z1,z2,...");
  t1->add_option("--beta", t1_in.beta, "ratio m/n");
  t1->add_option("--rmax", t1_rmax);
  t1->add_option("-o,--output", predict_out);

  MomentCli t2_in;
  std::uint32_t t2_rmax = 10;
  std::string t2_beta_star = "0";
  auto* t2 = predict->add_subcommand(
      "t2", "active model, diverging attribute-to-vertex ratio");
  t2->fallthrough();
  t2->add_option("--pmf", t2_in.pmf);
  t2->add_option("-n,--vertices", t2_in.n);
  t2->add_option("-m,--attributes", t2_in.m);
  t2->add_option("--z1", t2_in.z1);
  t2->add_option("--z2", t2_in.z2);
  t2->add_option("--z3", t2_in.z3);
  t2->add_option("--z", t2_in.z_list);
  t2->add_option("--beta", t2_in.beta, "finite-size ratio m/n");
  t2->add_option("--beta-star", t2_beta_star, "limit of (m/n)/n, or inf")
      ->required();
  t2->add_option("--rmax", t2_rmax);
  t2->add_option("-o,--output", predict_out);

  struct {
    std::string pmf1, pmf2;
    double beta = 0.0;
    std::uint64_t n = 0;
    std::uint32_t rmax = 10;
  } t3_opt;
  auto* t3 = predict->add_subcommand("t3", "inhomogeneous model");
  t3->fallthrough();
  t3->add_option("--pmf1", t3_opt.pmf1, "vertex weight pmf")->required();
  t3->add_option("--pmf2", t3_opt.pmf2, "attribute weight pmf")->required();
  t3->add_option("--beta", t3_opt.beta, "ratio m/n")->required();
  t3->add_option("-n,--vertices", t3_opt.n)->required();
  t3->add_option("--rmax", t3_opt.rmax);
  t3->add_option("-o,--output", predict_out);

  MomentCli r1_in;
  std::uint32_t r1_r = 2;
  std::string r1_beta_star = "1";
  auto* rem = predict->add_subcommand(
      "remark1", "conjectural step coefficient c(r, beta_star)");
  rem->fallthrough();
  rem->add_option("-r,--order", r1_r, "number of common neighbors")->required();
  rem->add_option("--beta-star", r1_beta_star)->required();
  rem->add_option("--pmf", r1_in.pmf);
  rem->add_option("-n,--vertices", r1_in.n);
  rem->add_option("-m,--attributes", r1_in.m);
  rem->add_option("--z", r1_in.z_list);
  rem->add_option("--z1", r1_in.z1);
  rem->add_option("--z2", r1_in.z2);
  rem->add_option("--z3", r1_in.z3);
  rem->add_option("--beta", r1_in.beta);

  // ---- sample ----
  auto* sample = app.add_subcommand("sample", "degree-constrained subgraphs");
  sample->require_subcommand(1);
  sample->fallthrough();
  struct {
    std::string input = "-", output = "-", map_out;
    std::uint32_t max_degree = 0;
    std::uint64_t n0 = 0;
    bool has_cap = false;
    double tau = 0.0;
    std::string ids = "dense";
  } sample_opt;
  auto* scap = sample->add_subcommand(
      "cap", "induced subgraph on vertices of degree <= D");
  scap->fallthrough();
  scap->add_option("input", sample_opt.input);
  scap->add_option("-D,--max-degree", sample_opt.max_degree)->required();
  scap->add_option("-o,--output", sample_opt.output);
  scap->add_option("--map-out", sample_opt.map_out,
                   "write 'new old' id pairs to this file");
  scap->add_option("--ids", sample_opt.ids, "dense or original")
      ->check(CLI::IsMember({"dense", "original"}));
  auto* sunif = sample->add_subcommand(
      "uniform", "induced subgraph on n0 uniformly chosen eligible vertices");
  sunif->fallthrough();
  sunif->add_option("input", sample_opt.input);
  sunif->add_option("--n0", sample_opt.n0)->required();
  auto* cap_opt = sunif->add_option("-D,--max-degree", sample_opt.max_degree,
                                    "eligibility cap on degree");
  sunif->add_option("-o,--output", sample_opt.output);
  sunif->add_option("--map-out", sample_opt.map_out);
  sunif->add_option("--ids", sample_opt.ids)
      ->check(CLI::IsMember({"dense", "original"}));
  auto* sbias = sample->add_subcommand(
      "biased", "keep each vertex with probability min{1, d^-tau}");
  sbias->fallthrough();
  sbias->add_option("input", sample_opt.input);
  sbias->add_option("--tau", sample_opt.tau)->required();
  sbias->add_option("-o,--output", sample_opt.output);
  sbias->add_option("--map-out", sample_opt.map_out);
  sbias->add_option("--ids", sample_opt.ids)
      ->check(CLI::IsMember({"dense", "original"}));

  // ---- degree-dist ----
  auto* ddist = app.add_subcommand(
      "degree-dist", "empirical degree distribution against the asymptotic "
                     "mixed-Poisson law");
  ddist->fallthrough();
  struct {
    std::string input = "-", output = "-", pmf;
    std::uint64_t n = 0, m = 0;
    bool bipartite = false;
  } ddist_opt;
  ddist->add_option("input", ddist_opt.input);
  ddist->add_option("--pmf", ddist_opt.pmf, "set size pmf of the model")
      ->required();
  ddist->add_option("-n,--vertices", ddist_opt.n, "model n")->required();
  ddist->add_option("-m,--attributes", ddist_opt.m, "model m")->required();
  ddist->add_flag("--bipartite", ddist_opt.bipartite);
  ddist->add_option("-o,--output", ddist_opt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : 2;
  }

  // ---- dispatch ----
  if (clust->parsed()) {
    auto in = open_input(clust_opt.input);
    const auto any =
        clfn::read_auto(*in, clust_opt.bipartite, clust_opt.allow_loops);
    clfn::Metadata meta{{"tool", kVersion}, {"command", "clustfn"}};
    clfn::Graph graph;
    if (any.graph) {
      graph = any.graph->graph;
    } else {
      const auto& inc = any.bipartite->incidence;
      graph = clfn::project_bipartite(inc);
      meta.emplace_back("projected_from_bipartite", "true");
      meta.emplace_back("bipartite_n", u64str(inc.vertex_count()));
      meta.emplace_back("bipartite_m", u64str(inc.ground_set_size()));
      meta.emplace_back("bipartite_M", u64str(inc.total_memberships()));
    }
    const auto profile = clfn::clustering_profile(graph, histogram_options(g));
    meta.emplace_back("strategy", g.strategy);
    auto out = open_output(clust_opt.output);
    if (g.format == "json")
      clfn::write_profile_json(profile, *out, meta);
    else
      clfn::write_profile_csv(profile, *out, meta);
    return 0;
  }

  if (gen_active->parsed()) {
    const auto pmf = parse_pmf_flag(gen_active_opt.pmf, "--pmf");
    const auto inc = clfn::sample_active(
        static_cast<clfn::VertexId>(gen_active_opt.n),
        static_cast<std::uint32_t>(gen_active_opt.m), pmf, g.seed);
    emit_incidence_or_projection(
        inc, gen_active_opt.project, gen_active_opt.output,
        {{"tool", kVersion},
         {"model", "active"},
         {"n", u64str(gen_active_opt.n)},
         {"m", u64str(gen_active_opt.m)},
         {"pmf", pmf.to_string()},
         {"seed", u64str(g.seed)}});
    return 0;
  }

  if (gen_inhom->parsed()) {
    const auto p1 = parse_pmf_flag(gen_inhom_opt.pmf1, "--pmf1");
    const auto p2 = parse_pmf_flag(gen_inhom_opt.pmf2, "--pmf2");
    clfn::InhomOptions opts;
    opts.fast = gen_inhom_opt.fast;
    const auto sample = clfn::sample_inhomogeneous(
        static_cast<clfn::VertexId>(gen_inhom_opt.n),
        static_cast<std::uint32_t>(gen_inhom_opt.m), p1, p2, g.seed, opts);
    emit_incidence_or_projection(
        sample.incidence, gen_inhom_opt.project, gen_inhom_opt.output,
        {{"tool", kVersion},
         {"model", "inhomogeneous"},
         {"n", u64str(gen_inhom_opt.n)},
         {"m", u64str(gen_inhom_opt.m)},
         {"pmf1", p1.to_string()},
         {"pmf2", p2.to_string()},
         {"seed", u64str(g.seed)},
         {"clamped_cells", u64str(sample.clamped_cells)}});
    return 0;
  }

  if (gen_ma->parsed()) {
    if (gen_ma_opt.sizes.empty() == gen_ma_opt.from_bipartite.empty())
      throw CLI::ValidationError(
          "gen memoryless-active", "need exactly one of --sizes / --from-bipartite");
    const auto sizes = load_sizes(gen_ma_opt.sizes, gen_ma_opt.from_bipartite);
    std::uint64_t m_tilde = gen_ma_opt.m_tilde;
    clfn::Metadata meta{{"tool", kVersion},
                        {"model", "memoryless-active"},
                        {"n", u64str(sizes.size())},
                        {"seed", u64str(g.seed)}};
    if (gen_ma_opt.match_observed) {
      if (gen_ma_opt.from_bipartite.empty())
        throw CLI::ValidationError("gen memoryless-active",
                                   "--match-observed needs --from-bipartite");
      auto in = open_input(gen_ma_opt.from_bipartite);
      const auto any = clfn::read_auto(*in, /*force_bipartite=*/true);
      const auto graph = clfn::project_bipartite(any.bipartite->incidence);
      const double observed = 2.0 * static_cast<double>(graph.edge_count()) /
                              static_cast<double>(graph.vertex_count());
      m_tilde = clfn::adjust_ground_set(sizes, observed);
      meta.emplace_back("observed_mean_degree", clfn::format_ratio(observed));
      meta.emplace_back("adjusted_m", u64str(m_tilde));
    } else if (gen_ma_opt.target_degree >= 0.0) {
      m_tilde = clfn::adjust_ground_set(sizes, gen_ma_opt.target_degree);
      meta.emplace_back("target_degree",
                        clfn::format_ratio(gen_ma_opt.target_degree));
      meta.emplace_back("adjusted_m", u64str(m_tilde));
    } else if (m_tilde == 0) {
      throw CLI::ValidationError(
          "gen memoryless-active",
          "need --m-tilde, --target-degree or --match-observed");
    }
    meta.emplace_back("m_tilde", u64str(m_tilde));
    const auto inc = clfn::memoryless_active(
        sizes, static_cast<std::uint32_t>(m_tilde), g.seed);
    emit_incidence_or_projection(inc, gen_ma_opt.project, gen_ma_opt.output,
                                 std::move(meta));
    return 0;
  }

  if (gen_mi->parsed()) {
    std::vector<std::uint32_t> a, b;
    if (!gen_mi_opt.from_bipartite.empty()) {
      auto in = open_input(gen_mi_opt.from_bipartite);
      const auto any = clfn::read_auto(*in, /*force_bipartite=*/true);
      a = any.bipartite->incidence.set_sizes();
      b = any.bipartite->incidence.attribute_frequencies();
    } else if (!gen_mi_opt.a_file.empty() && !gen_mi_opt.b_file.empty()) {
      auto ina = open_input(gen_mi_opt.a_file);
      a = clfn::read_counts(*ina);
      auto inb = open_input(gen_mi_opt.b_file);
      b = clfn::read_counts(*inb);
    } else {
      throw CLI::ValidationError(
          "gen memoryless-inhom", "need --from-bipartite or both --a and --b");
    }
    clfn::InhomOptions opts;
    opts.fast = gen_mi_opt.fast;
    const auto sample = clfn::memoryless_inhomogeneous(a, b, g.seed, opts);
    emit_incidence_or_projection(
        sample.incidence, gen_mi_opt.project, gen_mi_opt.output,
        {{"tool", kVersion},
         {"model", "memoryless-inhomogeneous"},
         {"n", u64str(a.size())},
         {"m", u64str(b.size())},
         {"seed", u64str(g.seed)},
         {"clamped_cells", u64str(sample.clamped_cells)}});
    return 0;
  }

  if (fit_adjust->parsed()) {
    if (fit_opt.sizes.empty() == fit_opt.from_bipartite.empty())
      throw CLI::ValidationError("fit adjust-m",
                                 "need exactly one of --sizes / --from-bipartite");
    const auto sizes = load_sizes(fit_opt.sizes, fit_opt.from_bipartite);
    double target = fit_opt.target_degree;
    if (fit_opt.match_observed) {
      if (fit_opt.from_bipartite.empty())
        throw CLI::ValidationError("fit adjust-m",
                                   "--match-observed needs --from-bipartite");
      auto in = open_input(fit_opt.from_bipartite);
      const auto any = clfn::read_auto(*in, /*force_bipartite=*/true);
      const auto graph = clfn::project_bipartite(any.bipartite->incidence);
      target = 2.0 * static_cast<double>(graph.edge_count()) /
               static_cast<double>(graph.vertex_count());
    } else if (target < 0.0) {
      throw CLI::ValidationError("fit adjust-m",
                                 "need --target-degree or --match-observed");
    }
    std::cout << clfn::adjust_ground_set(sizes, target) << "\n";
    return 0;
  }

  if (t1->parsed()) {
    const auto in = t1_in.resolve(std::max(t1_rmax, 2u), false);
    emit_prediction(clfn::theory::predict_finite_ratio(in, t1_rmax), g,
                    predict_out, {{"tool", kVersion}, {"predict", "t1"}});
    return 0;
  }
  if (t2->parsed()) {
    const auto in = t2_in.resolve(std::max(t2_rmax, 2u), true);
    emit_prediction(clfn::theory::predict_diverging_ratio(
                        in, parse_beta_star(t2_beta_star), t2_rmax),
                    g, predict_out, {{"tool", kVersion}, {"predict", "t2"}});
    return 0;
  }
  if (t3->parsed()) {
    const auto in = clfn::theory::InhomInputs::from_pmfs(
        parse_pmf_flag(t3_opt.pmf1, "--pmf1"),
        parse_pmf_flag(t3_opt.pmf2, "--pmf2"), t3_opt.beta);
    emit_prediction(
        clfn::theory::predict_inhomogeneous(in, t3_opt.n, t3_opt.rmax), g,
        predict_out, {{"tool", kVersion}, {"predict", "t3"}});
    return 0;
  }
  if (rem->parsed()) {
    const auto in = r1_in.resolve(std::max(r1_r, 2u), true);
    const double c = clfn::theory::step_coefficient(
        r1_r, parse_beta_star(r1_beta_star), in);
    if (r1_r >= 3)
      std::cout << "# note=conjectural extension; only r <= 2 is proven\n";
    std::cout << clfn::format_ratio(c) << "\n";
    return 0;
  }

  if (scap->parsed() || sunif->parsed() || sbias->parsed()) {
    std::vector<std::string> labels;
    const auto graph = load_graph(sample_opt.input, false, false, &labels);
    clfn::SampledSubgraph sub;
    clfn::Metadata meta{{"tool", kVersion}, {"source_n", u64str(graph.vertex_count())}};
    if (scap->parsed()) {
      sub = clfn::degree_cap_subgraph(graph, sample_opt.max_degree);
      meta.emplace_back("sample", "cap");
      meta.emplace_back("max_degree", u64str(sample_opt.max_degree));
    } else if (sunif->parsed()) {
      std::optional<std::uint32_t> cap;
      if (cap_opt->count() > 0) cap = sample_opt.max_degree;
      sub = clfn::uniform_subgraph(
          graph, static_cast<clfn::VertexId>(sample_opt.n0), cap, g.seed);
      meta.emplace_back("sample", "uniform");
      meta.emplace_back("n0", u64str(sample_opt.n0));
      if (cap) meta.emplace_back("max_degree", u64str(*cap));
      meta.emplace_back("seed", u64str(g.seed));
    } else {
      sub = clfn::degree_biased_subgraph(graph, sample_opt.tau, g.seed);
      meta.emplace_back("sample", "biased");
      meta.emplace_back("tau", clfn::format_ratio(sample_opt.tau));
      meta.emplace_back("seed", u64str(g.seed));
    }
    meta.emplace_back("kept", u64str(sub.graph.vertex_count()));
    auto out = open_output(sample_opt.output);
    if (sample_opt.ids == "original") {
      std::vector<std::string> out_labels(sub.graph.vertex_count());
      for (clfn::VertexId v = 0; v < sub.graph.vertex_count(); ++v)
        out_labels[v] = labels.empty()
                            ? std::to_string(sub.original_ids[v])
                            : labels[sub.original_ids[v]];
      clfn::write_edge_list(sub.graph, *out, meta, out_labels);
    } else {
      clfn::write_edge_list(sub.graph, *out, meta);
    }
    if (!sample_opt.map_out.empty()) {
      auto map_out = open_output(sample_opt.map_out);
      for (clfn::VertexId v = 0; v < sub.graph.vertex_count(); ++v)
        *map_out << v << ' '
                 << (labels.empty() ? std::to_string(sub.original_ids[v])
                                    : labels[sub.original_ids[v]])
                 << "\n";
    }
    return 0;
  }

  if (ddist->parsed()) {
    const auto graph =
        load_graph(ddist_opt.input, ddist_opt.bipartite, false);
    const auto size_pmf = parse_pmf_flag(ddist_opt.pmf, "--pmf");
    // Z = X sqrt(n/m): rescale the size pmf's support.
    const double s = std::sqrt(static_cast<double>(ddist_opt.n) /
                               static_cast<double>(ddist_opt.m));
    std::vector<std::pair<double, double>> scaled;
    for (std::size_t i = 0; i < size_pmf.size(); ++i)
      scaled.emplace_back(size_pmf.values()[i] * s, size_pmf.probs()[i]);
    const auto z_pmf = clfn::DiscretePmf::from_pairs(std::move(scaled));

    std::vector<std::uint64_t> hist(graph.max_degree() + 1, 0);
    for (clfn::VertexId v = 0; v < graph.vertex_count(); ++v)
      ++hist[graph.degree(v)];
    const double mean = z_pmf.moment(1) * z_pmf.moment(1);
    const auto k_max = static_cast<std::uint32_t>(
        std::max<double>(static_cast<double>(hist.size()),
                         mean + 20.0 * std::sqrt(std::max(mean, 1.0))));
    double tv = 0.0, predicted_mass = 0.0;
    std::vector<double> predicted(k_max + 1, 0.0);
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      predicted[k] = clfn::theory::asymptotic_degree_pmf(z_pmf, k);
      predicted_mass += predicted[k];
      const double emp = k < hist.size()
                             ? static_cast<double>(hist[k]) /
                                   static_cast<double>(graph.vertex_count())
                             : 0.0;
      tv += std::abs(emp - predicted[k]);
    }
    tv = 0.5 * (tv + std::max(0.0, 1.0 - predicted_mass));

    auto out = open_output(ddist_opt.output);
    *out << "# tool=" << kVersion << " command=degree-dist pmf="
         << size_pmf.to_string() << " n=" << ddist_opt.n
         << " m=" << ddist_opt.m << "\n";
    *out << "# tv_distance=" << clfn::format_ratio(tv) << "\n";
    *out << "k,observed,empirical,predicted\n";
    for (std::uint32_t k = 0; k <= k_max; ++k) {
      const std::uint64_t count = k < hist.size() ? hist[k] : 0;
      if (count == 0 && predicted[k] < 1e-12) continue;
      const double emp = static_cast<double>(count) /
                         static_cast<double>(graph.vertex_count());
      *out << k << ',' << count << ',' << clfn::format_ratio(emp) << ','
           << clfn::format_ratio(predicted[k]) << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Validation raised after parsing (conflicting or missing flags).
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
