#include "stubborn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "stubborn/bounds.hpp"
#include "stubborn/errors.hpp"
#include "stubborn/graph.hpp"
#include "stubborn/hitting.hpp"
#include "stubborn/optimizer.hpp"
#include "stubborn/report.hpp"
#include "stubborn/sim.hpp"
#include "stubborn/stats.hpp"
#include "stubborn/walk.hpp"

namespace stubborn {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kScreenEnumerationLimit = 1e5;
constexpr std::size_t kScreenExactTop = 10;
constexpr std::size_t kBoundExactLimit = 2000;

struct RunConfig {
  std::string graph_path;
  std::string walk = "uniform";
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string cover_path;
  std::string sets_path;
  std::string set;
  long k = 0;
  double nu = 0.5;
  std::size_t m = 1;
  std::size_t cap = 64;
  std::size_t count = 10;
  long steps = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NodeSet read_cover(const Graph& g, const std::string& path) {
  std::string text = read_file(path);
  std::replace_if(text.begin(), text.end(), [](char c) { return c == ',' || c == '\n' || c == '\t'; },
                  ' ');
  NodeSet cover(g.node_count());
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    const auto id = g.find_label(tok);
    if (!id) throw InputError("cover: unknown label '" + tok + "'");
    cover.insert(*id);
  }
  return cover;
}

RankContext rank_context(const WalkMatrix& w, const RunConfig& cfg) {
  NodeSet cover = cfg.cover_path.empty() ? vertex_cover_matching(w.graph())
                                         : read_cover(w.graph(), cfg.cover_path);
  return RankContext::build(w, std::move(cover));
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// evaluate: F, h range and rank for each listed set.
void cmd_evaluate(const Graph& g, const WalkMatrix& w, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  if (cfg.sets_path.empty()) throw UsageError("evaluate requires --sets");
  std::optional<RankContext> ctx;
  try {
    ctx = rank_context(w, cfg);
  } catch (const InputError& e) {
    err << "warning: rank unavailable: " << e.what() << '\n';
  }

  std::istringstream in(read_file(cfg.sets_path));
  json rows = json::array();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    bool comment = false;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
      comment = true;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (comment) continue;
      throw InputError("line " + std::to_string(line_no) + ": empty set");
    }
    NodeSet a;
    try {
      a = parse_label_set(g, line);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    const HittingProfile hp = hitting_times(w, a);
    const double h_min = hp.h.size() ? hp.h.minCoeff() : 0.0;
    const double h_max = hp.h.size() ? hp.h.maxCoeff() : 0.0;
    rows.push_back({{"set", labels_of(g, a)},
                    {"F", hp.F},
                    {"h_min", h_min},
                    {"h_max", h_max},
                    {"rank", ctx ? json(ctx->rank(hp.F)) : json(nullptr)}});
  }

  if (cfg.format == "csv") {
    out << "set,F,h_min,h_max,rank\n";
    for (const auto& r : rows) {
      std::string set;
      for (const auto& l : r["set"]) set += (set.empty() ? "" : ";") + l.get<std::string>();
      out << '"' << set << "\"," << format_number(r["F"].get<double>()) << ','
          << format_number(r["h_min"].get<double>()) << ','
          << format_number(r["h_max"].get<double>()) << ','
          << (r["rank"].is_null() ? std::string() : format_number(r["rank"].get<double>()))
          << '\n';
    }
    return;
  }
  out << json{{"walk", cfg.walk}, {"sets", rows}}.dump(2) << '\n';
}

void cmd_optimize(const Graph& g, const WalkMatrix& w, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  if (cfg.k <= 0) throw UsageError("--k must be a positive integer");
  const RankContext ctx = rank_context(w, cfg);
  auto k = static_cast<std::size_t>(cfg.k);
  if (k > ctx.cover_size()) {
    err << "warning: k = " << k << " exceeds the cover size " << ctx.cover_size()
        << "; the cover is optimal, clamping k to " << ctx.cover_size() << '\n';
    k = ctx.cover_size();
  }
  OptimizerConfig oc;
  oc.k = k;
  oc.nu = cfg.nu;
  oc.m = cfg.m;
  oc.starter_cap = cfg.cap;
  const OptimizeResult res = optimize(w, ctx, oc);
  json j = to_json(g, res);
  j["config"] = {{"k", k},        {"k_requested", cfg.k}, {"nu", cfg.nu},
                 {"m", cfg.m},    {"starter_cap", cfg.cap}, {"walk", cfg.walk}};
  j["cover"] = labels_of(g, ctx.cover());
  j["F_min"] = ctx.f_min();
  j["F_max"] = ctx.f_max();
  out << j.dump(2) << '\n';
}

std::vector<NodeSet> screen_candidates(std::size_t n, std::size_t k, std::uint64_t seed,
                                       bool& sampled) {
  std::vector<NodeSet> out;
  sampled = binomial(n, k) > kScreenEnumerationLimit;
  if (!sampled) {
    std::vector<NodeId> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      out.emplace_back(n, idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  std::set<std::vector<NodeId>> seen;
  const auto target = static_cast<std::size_t>(kScreenEnumerationLimit);
  for (std::size_t attempt = 0; seen.size() < target && attempt < 4 * target; ++attempt) {
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<NodeId> members(pool.begin(), pool.begin() + static_cast<long>(k));
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) out.emplace_back(n, members);
  }
  return out;
}

void cmd_screen(const Graph& g, const WalkMatrix& w, const RunConfig& cfg, std::ostream& out) {
  if (cfg.k <= 0) throw UsageError("--k must be a positive integer");
  if (w.kind() == WalkKind::kWeighted) {
    throw UsageError("the surrogate screen is defined for the uniform walk only");
  }
  const auto k = static_cast<std::size_t>(cfg.k);
  if (k >= g.node_count()) throw UsageError("--k must be smaller than the node count");

  bool sampled = false;
  const std::vector<NodeSet> cands = screen_candidates(g.node_count(), k, cfg.seed, sampled);
  struct Row {
    NodeSet set;
    double s;
    std::optional<double> f;
  };
  std::vector<Row> rows;
  rows.reserve(cands.size());
  for (const auto& a : cands) rows.push_back({a, surrogate(g, a), std::nullopt});
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.s != y.s) return x.s < y.s;
    return x.set < y.set;
  });

  const auto [s_lo, s_hi] = std::minmax_element(rows.begin(), rows.end(),
                                                [](const Row& x, const Row& y) { return x.s < y.s; });
  const double s_min = s_lo->s, s_max = s_hi->s;
  const std::size_t shown = std::min(cfg.count, rows.size());
  const std::size_t exact = std::min(shown, kScreenExactTop);
  std::vector<double> fs, ss;
  for (std::size_t i = 0; i < exact; ++i) {
    rows[i].f = f_value(w, rows[i].set);
    fs.push_back(*rows[i].f);
    ss.push_back(rows[i].s);
  }
  double f_min = 0, f_max = 0;
  if (!fs.empty()) {
    f_min = *std::min_element(fs.begin(), fs.end());
    f_max = *std::max_element(fs.begin(), fs.end());
  }

  json list = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    const Row& r = rows[i];
    json item{{"rank", i + 1}, {"set", labels_of(g, r.set)}, {"S", r.s}};
    item["rho_S"] = s_max > s_min ? json((s_max - r.s) / (s_max - s_min)) : json(1.0);
    item["F"] = optional_json(r.f);
    if (r.f) item["rho_F"] = f_max > f_min ? json((f_max - *r.f) / (f_max - f_min)) : json(1.0);
    list.push_back(item);
  }
  const double rho = spearman(ss, fs);
  out << json{{"k", k},
              {"candidates", rows.size()},
              {"sampled", sampled},
              {"seed", cfg.seed},
              {"S_min", s_min},
              {"S_max", s_max},
              {"top", list},
              {"spearman_S_F", std::isnan(rho) ? json(nullptr) : json(rho)}}
             .dump(2)
      << '\n';
}

void cmd_bound(const Graph& g, const WalkMatrix& w, const RunConfig& cfg, std::ostream& out) {
  if (cfg.set.empty()) throw UsageError("bound requires --set");
  const NodeSet a = parse_label_set(g, cfg.set);
  const BoundReport rep = bound_report(w, a);
  json j = to_json(g, rep);
  j["set"] = labels_of(g, a);
  j["walk"] = cfg.walk;
  if (g.node_count() <= kBoundExactLimit) {
    const double f = f_value(w, a);
    j["F"] = f;
    json slack = json::object();
    json tight = json::object();
    auto annotate = [&](const char* name, const std::optional<double>& b) {
      if (!b) return;
      slack[name] = *b - f;
      tight[name] = std::abs(*b - f) <= 1e-9 * std::max(1.0, f);
    };
    annotate("dominant", rep.bound_dominant);
    annotate("general", rep.bound_general);
    annotate("degree", rep.bound_degree);
    j["slack"] = slack;
    j["tight"] = tight;
  }
  out << j.dump(2) << '\n';
}

void cmd_simulate(const Graph& g, const WalkMatrix& w, const RunConfig& cfg, std::ostream& out) {
  if (cfg.steps <= 0) throw UsageError("--steps must be a positive integer");
  if (cfg.set.empty()) throw UsageError("simulate requires --set");
  const NodeSet a = parse_label_set(g, cfg.set);
  const ConsensusTrace tr =
      simulate(w, a, random_initial_state(a, 0.0, cfg.seed), static_cast<int>(cfg.steps));
  if (cfg.format == "json") {
    json j{{"set", labels_of(g, a)},
           {"steps", cfg.steps},
           {"seed", cfg.seed},
           {"errors", tr.errors},
           {"empirical_rate", tr.empirical_rate}};
    if (!a.is_full()) j["lambda"] = quasi_stationary(w, a).lambda;
    out << j.dump(2) << '\n';
    return;
  }
  write_trace_csv(out, tr);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stubborn-node selection by expected hitting times", "stubborn-opt"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> formats{"json", "csv"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "Edge-list file")->required();
    sub->add_option("--walk", cfg.walk, "Walk kind")
        ->check(CLI::IsMember({"uniform", "lazy", "weighted"}));
    sub->add_option("--out", cfg.out_path, "Write results to this file");
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--cover", cfg.cover_path, "Reference vertex cover (labels)");
  };

  auto* evaluate = app.add_subcommand("evaluate", "F and hitting-time summary per set");
  common(evaluate);
  evaluate->add_option("--sets", cfg.sets_path, "One comma-separated set per line")->required();
  evaluate->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  auto* opt = app.add_subcommand("optimize", "Greedy extension of near-optimal starters");
  common(opt);
  opt->add_option("--k", cfg.k, "Target cardinality")->required();
  opt->add_option("--nu", cfg.nu, "Near-optimality level")->check(CLI::Range(0.0, 1.0));
  opt->add_option("--m", cfg.m, "Starter cardinality")->check(CLI::IsMember({1, 2}));
  opt->add_option("--cap", cfg.cap, "Maximum number of starters")->check(CLI::PositiveNumber);

  auto* screen = app.add_subcommand("screen", "Rank k-sets by the surrogate");
  common(screen);
  screen->add_option("--k", cfg.k, "Set cardinality")->required();
  screen->add_option("--count", cfg.count, "Rows to emit")->check(CLI::PositiveNumber);

  auto* bound = app.add_subcommand("bound", "Upper bounds on F for one set");
  common(bound);
  bound->add_option("--set", cfg.set, "Comma-separated labels")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "Consensus iteration trace");
  common(simulate_cmd);
  simulate_cmd->add_option("--set", cfg.set, "Comma-separated labels")->required();
  simulate_cmd->add_option("--steps", cfg.steps, "Iterations")->required();
  simulate_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (simulate_cmd->parsed() && simulate_cmd->count("--format") == 0) cfg.format = "csv";

  try {
    const Graph g = load_edge_list_file(cfg.graph_path);
    const WalkMatrix w = build_walk(g, parse_walk_kind(cfg.walk));
    if (w.kind() == WalkKind::kWeighted && !check_reversible(w, stationary(w))) {
      err << "warning: weighted walk is not reversible; bottleneck bounds are unavailable\n";
    }

    std::ofstream file;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw InputError("cannot write " + cfg.out_path);
    }
    std::ostream& sink = cfg.out_path.empty() ? out : file;

    if (evaluate->parsed()) cmd_evaluate(g, w, cfg, sink, err);
    if (opt->parsed()) cmd_optimize(g, w, cfg, sink, err);
    if (screen->parsed()) cmd_screen(g, w, cfg, sink);
    if (bound->parsed()) cmd_bound(g, w, cfg, sink);
    if (simulate_cmd->parsed()) cmd_simulate(g, w, cfg, sink);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace stubborn
