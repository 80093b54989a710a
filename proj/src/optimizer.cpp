#include "stubborn/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stubborn/graph.hpp"
#include "stubborn/hitting.hpp"
#include "stubborn/parallel.hpp"

namespace stubborn {

namespace {

bool better(const ScoredSet& a, const ScoredSet& b) {
  if (a.f != b.f) return a.f < b.f;
  return a.set < b.set;
}

std::vector<ScoredSet> all_pairs(const WalkMatrix& w, const RankContext& ctx) {
  const std::size_t n = w.size();
  std::vector<ScoredSet> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = x + 1; y < n; ++y) pairs.push_back({NodeSet(n, {x, y}), 0.0, 0.0});
  }
  parallel_for(pairs.size(), [&](std::size_t i) {
    pairs[i].f = f_value(w, pairs[i].set);
    pairs[i].rank = ctx.rank(pairs[i].f);
  });
  return pairs;
}

Extension extend(const WalkMatrix& w, const NodeSet& start, std::size_t k, bool fan_out) {
  if (start.size() > k) {
    throw InputError("start set has " + std::to_string(start.size()) + " nodes, more than k = " +
                     std::to_string(k));
  }
  if (k > w.size()) throw InputError("k exceeds the number of nodes");
  Extension ext{start, start, {}, {}, 0.0};
  ext.f = start.empty() ? std::numeric_limits<double>::infinity() : f_value(w, start);
  while (ext.set.size() < k) {
    const std::vector<NodeId> candidates = detail::outside(ext.set);
    std::vector<double> scores(candidates.size());
    auto score = [&](std::size_t i) { scores[i] = f_value(w, ext.set.with(candidates[i])); };
    if (fan_out) {
      parallel_for(candidates.size(), score);
    } else {
      for (std::size_t i = 0; i < candidates.size(); ++i) score(i);
    }
    // First minimum in id order.
    const auto best = static_cast<std::size_t>(
        std::min_element(scores.begin(), scores.end()) - scores.begin());
    ext.set.insert(candidates[best]);
    ext.added.push_back(candidates[best]);
    ext.f_after.push_back(scores[best]);
    ext.f = scores[best];
  }
  return ext;
}

}  // namespace

RankContext RankContext::build(const WalkMatrix& w, NodeSet cover) {
  const Graph& g = w.graph();
  if (cover.universe() != g.node_count()) throw InputError("cover universe does not match graph");
  if (!is_vertex_cover(g, cover)) throw InputError("reference set is not a vertex cover");
  RankContext ctx;
  ctx.f_min_ = f_value(w, cover);
  if (!w.has_self_loops()) {
    const double expected = static_cast<double>(g.node_count() - cover.size());
    if (std::abs(ctx.f_min_ - expected) > 1e-9) {
      throw NumericalError("F(cover) = " + std::to_string(ctx.f_min_) + ", expected " +
                           std::to_string(expected));
    }
  }
  ctx.singleton_f_.resize(g.node_count());
  parallel_for(g.node_count(), [&](std::size_t v) {
    ctx.singleton_f_[v] = f_value(w, NodeSet(g.node_count(), {v}));
  });
  ctx.f_max_ = *std::max_element(ctx.singleton_f_.begin(), ctx.singleton_f_.end());
  if (!(ctx.f_max_ > ctx.f_min_)) {
    throw InputError("F_max equals F_min: every set below the cover size is optimal");
  }
  ctx.cover_ = std::move(cover);
  return ctx;
}

NodeId RankContext::best_singleton() const {
  return static_cast<NodeId>(std::min_element(singleton_f_.begin(), singleton_f_.end()) -
                             singleton_f_.begin());
}

EmptyStarterClass::EmptyStarterClass(double requested, double achievable, std::size_t m)
    : InputError("no set of size " + std::to_string(m) + " reaches rank " +
                 std::to_string(requested) + "; best achievable at this size is " +
                 std::to_string(achievable)),
      achievable_(achievable) {}

std::vector<ScoredSet> build_starter_class(const WalkMatrix& w, const RankContext& ctx,
                                           double nu, std::size_t m, std::size_t cap) {
  if (m != 1 && m != 2) throw InputError("starter cardinality m must be 1 or 2");
  const std::size_t n = w.size();
  if (m > n) throw InputError("starter cardinality exceeds node count");
  std::vector<ScoredSet> all;
  if (m == 1) {
    for (NodeId v = 0; v < n; ++v) {
      const double f = ctx.singleton_f()[v];
      all.push_back({NodeSet(n, {v}), f, ctx.rank(f)});
    }
  } else {
    all = all_pairs(w, ctx);
  }
  std::sort(all.begin(), all.end(), better);
  const double achievable = all.front().rank;
  std::vector<ScoredSet> out;
  for (auto& s : all) {
    if (out.size() == cap) break;
    if (s.rank >= nu) out.push_back(std::move(s));
  }
  if (out.empty()) throw EmptyStarterClass(nu, achievable, m);
  return out;
}

Extension greedy_extend(const WalkMatrix& w, const NodeSet& start, std::size_t k) {
  return extend(w, start, k, true);
}

OptimizeResult optimize(const WalkMatrix& w, const RankContext& ctx, const OptimizerConfig& cfg) {
  const std::size_t n = w.size();
  if (cfg.m < 1 || cfg.m > 2) throw InputError("m must be 1 or 2");
  if (cfg.k < cfg.m) throw InputError("k must be at least m");
  if (cfg.k > n) throw InputError("k exceeds the number of nodes");
  if (!(cfg.nu >= 0.0 && cfg.nu <= 1.0)) throw InputError("nu must lie in [0, 1]");
  if (cfg.starter_cap == 0) throw InputError("starter cap must be positive");

  OptimizeResult res;
  res.starters = build_starter_class(w, ctx, cfg.nu, cfg.m, cfg.starter_cap);

  // Classic greedy from the best singleton; its size-m prefix joins the
  // starters.
  const NodeSet best_single(n, {ctx.best_singleton()});
  const Extension classic = greedy_extend(w, best_single, cfg.k);
  res.greedy_set = classic.set;
  res.f_greedy = classic.f;
  NodeSet seed = best_single;
  double seed_f = ctx.singleton_f()[ctx.best_singleton()];
  if (cfg.m == 2) {
    seed.insert(classic.added.front());
    seed_f = classic.f_after.front();
  }
  const bool present = std::any_of(res.starters.begin(), res.starters.end(),
                                   [&](const ScoredSet& s) { return s.set == seed; });
  if (!present) {
    res.starters.push_back({seed, seed_f, ctx.rank(seed_f)});
    std::sort(res.starters.begin(), res.starters.end(), better);
  }

  res.trace.resize(res.starters.size());
  parallel_for(res.starters.size(), [&](std::size_t i) {
    res.trace[i] = extend(w, res.starters[i].set, cfg.k, false);
  });

  const Extension* best = &res.trace.front();
  for (const auto& ext : res.trace) {
    if (ext.f < best->f || (ext.f == best->f && ext.set < best->set)) best = &ext;
  }
  res.offered = best->set;
  res.f_offered = best->f;
  res.rank = ctx.rank(res.f_offered);

  if (n <= cfg.f_empty_max_nodes) {
    const double f_empty = estimate_f_empty(w, ctx);
    res.f_empty_lower_estimate = f_empty;
    res.rho_offered = rho_normalized(ctx, f_empty, res.f_offered);
    res.rho_greedy = rho_normalized(ctx, f_empty, res.f_greedy);
    res.chi = improvement_chi(*res.rho_offered, *res.rho_greedy);
  }
  return res;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double out = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(out);
}

BruteForceResult brute_force_optimal(const WalkMatrix& w, std::size_t k) {
  const std::size_t n = w.size();
  if (k == 0 || k > n) throw InputError("k must lie in [1, N]");
  if (binomial(n, k) > kBruteForceLimit) {
    throw InputError("C(" + std::to_string(n) + ", " + std::to_string(k) +
                     ") subsets exceed the brute-force limit");
  }
  std::vector<NodeId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  BruteForceResult best{NodeSet(n), std::numeric_limits<double>::infinity()};
  while (true) {
    NodeSet s(n, idx);
    const double f = f_value(w, s);
    if (f < best.f) best = {std::move(s), f};
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

double estimate_f_empty(const WalkMatrix& w, const RankContext& ctx) {
  double best = ctx.f_max();
  for (const auto& p : all_pairs(w, ctx)) {
    const auto m = p.set.members();
    best = std::max(best, ctx.singleton_f()[m[0]] + ctx.singleton_f()[m[1]] - p.f);
  }
  return best;
}

double rho_normalized(const RankContext& ctx, double f_empty, double f) {
  if (f_empty < ctx.f_max()) throw InputError("F(empty) must be at least F_max");
  return (f_empty - f) / (ctx.f_max() - ctx.f_min());
}

std::optional<double> improvement_chi(double rho_offered, double rho_greedy) {
  if (!(rho_greedy > 0.0)) return std::nullopt;
  return rho_offered / rho_greedy - 1.0;
}

double chi_lower_bound(double eta, double rho_greedy) {
  const double delta = 1.0 - rho_greedy / eta;
  return delta / (1.0 - delta);
}

}  // namespace stubborn
