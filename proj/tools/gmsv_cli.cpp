// gmsv: consistency tests, subgraph mining, classification sweeps, pruning
// benchmarks and synthetic data, all writing JSON reports.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmsv.hpp"

namespace {

using namespace gmsv;
namespace fs = std::filesystem;

enum Exit { kOk = 0, kUsage = 1, kData = 2, kInvariant = 3 };

struct Common {
  std::string graphs;
  std::vector<std::string> views;
  std::vector<double> lambdas;
  std::optional<double> threshold;
  bool labels_in_graphs = true;
  std::uint64_t seed = 42;
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--graphs", c.graphs, "graph transaction file (weighted networks when --threshold is set)")
      ->required();
  cmd->add_option("--views", c.views, "side-view CSV, one per view")->delimiter(',');
  cmd->add_option("--lambda", c.lambdas, "weight per side view, in --views order (default 1)")->delimiter(',');
  cmd->add_option("--threshold", c.threshold, "keep links with weight > threshold")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--labels-in-graphs,!--no-labels-in-graphs", c.labels_in_graphs,
                "class labels come from the 't' lines (the only supported source)");
  cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
  cmd->add_option("--out", c.out, "report path (stdout when omitted)");
  cmd->add_flag("--timing", c.timing, "include wall-clock times (reports then differ between runs)");
}

DatasetBundle load(const Common& c) {
  if (!c.labels_in_graphs) throw std::invalid_argument("labels must come from the graph file (--labels-in-graphs)");
  if (!c.lambdas.empty() && c.lambdas.size() != c.views.size())
    throw std::invalid_argument("--lambda needs one value per --views entry");
  for (double l : c.lambdas)
    if (!(l >= 0.0)) throw std::invalid_argument("--lambda values must be nonnegative");
  std::vector<fs::path> views(c.views.begin(), c.views.end());
  return load_bundle(c.graphs, views, c.lambdas, c.threshold);
}

Json common_config(const Common& c) {
  Json j{{"graphs", c.graphs}, {"views", c.views}, {"seed", c.seed}};
  std::vector<double> lambdas = c.lambdas;
  if (lambdas.empty()) lambdas.assign(c.views.size(), 1.0);
  j["lambda"] = lambdas;
  if (c.threshold) j["threshold"] = *c.threshold;
  return j;
}

void emit(const std::string& out, const Report& r) {
  if (out.empty()) std::cout << format_report(r);
  else write_report(out, r);
}

MinerConfig miner_config(double min_sup, std::size_t k, bool prune, std::optional<std::size_t> max_edges) {
  MinerConfig cfg;
  cfg.min_sup = min_sup;
  cfg.k = k;
  cfg.pruning = prune;
  cfg.max_pattern_edges = max_edges;
  cfg.validate();
  return cfg;
}

Json patterns_json(const std::vector<ScoredPattern>& ps) {
  Json a = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    Json j = to_json(ps[i]);
    j["rank"] = i + 1;
    a.push_back(std::move(j));
  }
  return a;
}

int run_ttest(const Common& c) {
  const auto b = load(c);
  if (b.views.empty()) throw std::invalid_argument("ttest needs at least one --views file");
  Report r{"ttest", common_config(c), Json::object(), c.seed};
  Json p_values = Json::object(), tests = Json::object(), errors = Json::object();
  for (const auto& v : b.views) {
    try {
      const auto t = consistency_ttest(rbf_kernel(v), b.data.labels, c.seed);
      p_values[v.name] = t.p_value;
      tests[v.name] = to_json(t);
    } catch (const DataError& e) {
      errors[v.name] = e.what();
    }
  }
  r.results = {{"p_values", p_values}, {"tests", tests}, {"errors", errors}};
  emit(c.out, r);
  return kOk;
}

struct MineOpts {
  double min_sup = 0.2;
  std::vector<std::size_t> k{10};
  bool no_prune = false;
  std::optional<std::size_t> max_edges;
};

int run_mine(const Common& c, const MineOpts& m) {
  if (m.k.size() != 1) throw std::invalid_argument("mine takes a single --k value");
  const auto cfg = miner_config(m.min_sup, m.k[0], !m.no_prune, m.max_edges);
  const auto b = load(c);
  const auto lp = build_laplacian(b.data.labels, b.views);
  const auto res = mine(b.data, lp, cfg);
  Report r{"mine", common_config(c), Json::object(), c.seed};
  r.config.update({{"min_sup", cfg.min_sup}, {"k", cfg.k}, {"pruning", cfg.pruning}});
  if (cfg.max_pattern_edges) r.config["max_pattern_edges"] = *cfg.max_pattern_edges;
  r.results = {{"patterns", patterns_json(res.patterns)},
               {"stats", to_json(res.stats, c.timing)},
               {"min_count", frequency_threshold(cfg.min_sup, b.data.size())}};
  if (res.warning) {
    r.results["warning"] = *res.warning;
    std::cerr << "warning: " << *res.warning << "\n";
  }
  emit(c.out, r);
  return kOk;
}

struct ClassifyOpts {
  MineOpts mine;
  std::size_t folds = 3;
  double C = 1.0;
  int epochs = 200;
};

int run_classify(const Common& c, const ClassifyOpts& o) {
  if (o.mine.k.empty()) throw std::invalid_argument("--k needs at least one value");
  std::vector<MinerConfig> cfgs;
  for (std::size_t k : o.mine.k) cfgs.push_back(miner_config(o.mine.min_sup, k, !o.mine.no_prune, o.mine.max_edges));
  if (o.folds < 2) throw std::invalid_argument("--folds must be at least 2");
  if (!(o.C > 0.0) || o.epochs <= 0) throw std::invalid_argument("--C and --epochs must be positive");
  const auto b = load(c);
  const CVOptions cv{o.folds, c.seed, SvmParams{o.C, o.epochs, 0}};

  const Json side = to_json(stratified_cv(b, no_patterns_selector(), cv));
  Json rows = Json::array();
  for (const auto& cfg : cfgs) {
    rows.push_back({{"method", "gmsv"}, {"k", cfg.k}, {"cv", to_json(stratified_cv(b, gmsv_selector(cfg), cv))}});
    rows.push_back({{"method", "frequent"}, {"k", cfg.k}, {"cv", to_json(stratified_cv(b, frequent_selector(cfg), cv))}});
    rows.push_back({{"method", "side_only"}, {"k", cfg.k}, {"cv", side}});
  }
  Report r{"classify", common_config(c), Json::object(), c.seed};
  r.config.update({{"min_sup", o.mine.min_sup}, {"k", o.mine.k}, {"folds", o.folds}, {"pruning", !o.mine.no_prune},
                   {"C", o.C}, {"epochs", o.epochs}});
  r.results = {{"rows", rows}};
  emit(c.out, r);
  return kOk;
}

struct BenchOpts {
  std::vector<double> min_sups{0.5, 0.3, 0.2, 0.1};
  std::size_t k = 10;
  std::optional<std::size_t> max_edges;
};

bool same_result(const MiningResult& a, const MiningResult& b) {
  if (a.patterns.size() != b.patterns.size()) return false;
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    if (a.patterns[i].pattern.code != b.patterns[i].pattern.code) return false;
    if (a.patterns[i].q != b.patterns[i].q) return false;
  }
  return true;
}

int run_bench(const Common& c, const BenchOpts& o) {
  if (o.min_sups.empty()) throw std::invalid_argument("--min-sup needs at least one value");
  std::vector<MinerConfig> cfgs;
  for (double s : o.min_sups) cfgs.push_back(miner_config(s, o.k, true, o.max_edges));
  const auto b = load(c);
  const auto lp = build_laplacian(b.data.labels, b.views);
  Json rows = Json::array();
  for (const auto& cfg : cfgs) {
    const auto pruned = mine(b.data, lp, cfg);
    const auto full = mine_unpruned(b.data, lp, cfg);
    if (!same_result(pruned, full))
      throw InvariantError("pruned and unpruned results differ at min_sup " + std::to_string(cfg.min_sup));
    Json row{{"min_sup", cfg.min_sup},
             {"pruned", to_json(pruned.stats, c.timing)},
             {"unpruned", to_json(full.stats, c.timing)},
             {"patterns", pruned.patterns.size()},
             {"results_equal", true}};
    if (pruned.warning) row["warning"] = *pruned.warning;
    rows.push_back(std::move(row));
  }
  Report r{"bench", common_config(c), Json::object(), c.seed};
  r.config.update({{"min_sup", o.min_sups}, {"k", o.k}});
  r.results = {{"rows", rows}};
  emit(c.out, r);
  return kOk;
}

struct SynthOpts {
  std::string dir;
  std::string out;
  std::size_t n_per_class = 30;
  int nodes = 20;
  double edge_prob = 0.1;
  std::string planted = "0-1,1-2,2-3";
  double fidelity_pos = 0.9;
  double fidelity_neg = 0.1;
  std::vector<std::size_t> view_dims{2};
  std::vector<double> separation{1.0};
  double sigma = 0.2;
  std::vector<std::string> distractors;
  int node_labels = 0;
  std::uint64_t seed = 42;
};

std::vector<std::pair<int, int>> parse_edges(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  for (auto part : detail::split(s, ',')) {
    const auto ends = detail::split(detail::trim(part), '-');
    if (ends.size() != 2) throw std::invalid_argument("edge list entries look like 'u-v': " + s);
    const auto u = detail::parse_number<int>(ends[0]);
    const auto v = detail::parse_number<int>(ends[1]);
    if (!u || !v) throw std::invalid_argument("bad edge in: " + s);
    out.push_back({*u, *v});
  }
  return out;
}

// "edges:fpos:fneg", e.g. "4-5,5-6:0.7:0.7"
PlantedMotif parse_motif(const std::string& s) {
  const auto parts = detail::split(s, ':');
  if (parts.size() != 3) throw std::invalid_argument("distractor format is 'u-v,...:fidelity_pos:fidelity_neg'");
  const auto fp = detail::parse_number<double>(parts[1]);
  const auto fn = detail::parse_number<double>(parts[2]);
  if (!fp || !fn) throw std::invalid_argument("bad distractor fidelity: " + s);
  return {parse_edges(std::string(parts[0])), *fp, *fn};
}

int run_synth(const SynthOpts& o) {
  SynthConfig cfg;
  cfg.n_per_class = o.n_per_class;
  cfg.nodes = o.nodes;
  cfg.edge_prob = o.edge_prob;
  cfg.planted = {parse_edges(o.planted), o.fidelity_pos, o.fidelity_neg};
  for (const auto& d : o.distractors) cfg.distractors.push_back(parse_motif(d));
  if (o.separation.size() != 1 && o.separation.size() != o.view_dims.size())
    throw std::invalid_argument("--separation takes one value or one per --view-dims entry");
  cfg.views.clear();
  for (std::size_t i = 0; i < o.view_dims.size(); ++i)
    cfg.views.push_back({o.view_dims[i], o.separation.size() == 1 ? o.separation[0] : o.separation[i], o.sigma});
  cfg.node_label_count = o.node_labels;
  cfg.seed = o.seed;
  const auto b = generate_synthetic(cfg);
  const auto files = write_bundle(o.dir, b);

  Json motifs = Json::array();
  for (const auto& m : cfg.distractors) motifs.push_back({{"edges", m.edges}, {"fidelity_pos", m.fidelity_pos}, {"fidelity_neg", m.fidelity_neg}});
  Report r{"synth", Json::object(), Json::object(), o.seed};
  r.config = {{"n_per_class", cfg.n_per_class}, {"nodes", cfg.nodes}, {"edge_prob", cfg.edge_prob},
              {"planted", {{"edges", cfg.planted.edges}, {"fidelity_pos", cfg.planted.fidelity_pos}, {"fidelity_neg", cfg.planted.fidelity_neg}}},
              {"distractors", motifs}, {"view_dims", o.view_dims}, {"separation", o.separation},
              {"sigma", o.sigma}, {"node_labels", o.node_labels}};
  std::vector<std::string> views;
  for (const auto& v : files.views) views.push_back(v.filename().string());
  r.results = {{"graphs", files.graphs.filename().string()},
               {"views", views},
               {"n", b.data.size()},
               {"positives", b.data.count_label(1)},
               {"negatives", b.data.count_label(-1)}};
  if (!o.out.empty()) write_report(o.out, r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminative subgraph selection with multiple side views"};
  app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");
  app.require_subcommand(1);

  Common ttest_c, mine_c, classify_c, bench_c;
  MineOpts mine_o;
  ClassifyOpts classify_o;
  BenchOpts bench_o;
  SynthOpts synth_o;

  auto* ttest = app.add_subcommand("ttest", "side-information consistency test per view");
  add_common(ttest, ttest_c);

  auto* mine_cmd = app.add_subcommand("mine", "top-k discriminative subgraphs");
  add_common(mine_cmd, mine_c);
  mine_cmd->add_option("--min-sup", mine_o.min_sup, "minimum support fraction")->capture_default_str();
  mine_cmd->add_option("--k", mine_o.k, "number of patterns")->capture_default_str();
  mine_cmd->add_flag("--no-prune", mine_o.no_prune, "disable bound-based pruning");
  mine_cmd->add_option("--max-edges", mine_o.max_edges, "cap on pattern size");

  auto* classify = app.add_subcommand("classify", "cross-validated accuracy for gMSV, frequent and side-only");
  add_common(classify, classify_c);
  classify->add_option("--min-sup", classify_o.mine.min_sup, "minimum support fraction")->capture_default_str();
  classify->add_option("--k", classify_o.mine.k, "pattern counts to sweep")->delimiter(',')->capture_default_str();
  classify->add_flag("--no-prune", classify_o.mine.no_prune, "disable bound-based pruning");
  classify->add_option("--max-edges", classify_o.mine.max_edges, "cap on pattern size");
  classify->add_option("--folds", classify_o.folds, "cross-validation folds")->capture_default_str();
  classify->add_option("--C", classify_o.C, "SVM regularization")->capture_default_str();
  classify->add_option("--epochs", classify_o.epochs, "SVM epochs")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "explored nodes, pruned versus unpruned");
  add_common(bench, bench_c);
  bench->add_option("--min-sup", bench_o.min_sups, "support fractions to sweep")->delimiter(',')->capture_default_str();
  bench->add_option("--k", bench_o.k, "number of patterns")->capture_default_str();
  bench->add_option("--max-edges", bench_o.max_edges, "cap on pattern size");

  auto* synth = app.add_subcommand("synth", "write a planted-signal bundle");
  synth->add_option("--dir", synth_o.dir, "output directory for graphs.txt and view CSVs")->required();
  synth->add_option("--out", synth_o.out, "manifest report path");
  synth->add_option("--n-per-class", synth_o.n_per_class)->capture_default_str();
  synth->add_option("--nodes", synth_o.nodes)->capture_default_str();
  synth->add_option("--edge-prob", synth_o.edge_prob)->capture_default_str();
  synth->add_option("--planted", synth_o.planted, "planted motif edges, e.g. 0-1,1-2")->capture_default_str();
  synth->add_option("--fidelity-pos", synth_o.fidelity_pos)->capture_default_str();
  synth->add_option("--fidelity-neg", synth_o.fidelity_neg)->capture_default_str();
  synth->add_option("--view-dims", synth_o.view_dims, "dimensions of each view")->delimiter(',')->capture_default_str();
  synth->add_option("--separation", synth_o.separation, "class separation, one value or one per view")
      ->delimiter(',')
      ->capture_default_str();
  synth->add_option("--sigma", synth_o.sigma)->capture_default_str();
  synth->add_option("--distractor", synth_o.distractors, "label-independent motif 'u-v,...:fpos:fneg' (repeatable)");
  synth->add_option("--node-labels", synth_o.node_labels, "0: node i has label i; otherwise random labels")
      ->capture_default_str();
  synth->add_option("--seed", synth_o.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ttest) return run_ttest(ttest_c);
    if (*mine_cmd) return run_mine(mine_c, mine_o);
    if (*classify) return run_classify(classify_c, classify_o);
    if (*bench) return run_bench(bench_c, bench_o);
    if (*synth) return run_synth(synth_o);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
