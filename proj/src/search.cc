#include "ramsey/search.h"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "ramsey/clique_engine.h"

namespace ramsey {

namespace {

std::int64_t count5(const Coloring& c, EdgeColor color) {
  if (c.active_count() < kSearchCliqueSize) return 0;
  return count_mono(c, color, kSearchCliqueSize);
}

std::vector<Edge> candidate_edges(const Coloring& c, bool red_only) {
  std::vector<Edge> out;
  const auto vs = mask_to_vertices(c.active());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (red_only && c.color(vs[i], vs[j]) != EdgeColor::Red) continue;
      out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

// Each active edge independently blue with probability 1/2.
Coloring random_coloring(const Coloring& like, std::mt19937_64& rng) {
  ColoringSpec spec;
  spec.order = like.order();
  spec.deletions = like.spec().deletions;
  const auto vs = mask_to_vertices(like.active());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (rng() >> 63) spec.flips.emplace_back(vs[i], vs[j]);
    }
  }
  return build(spec);
}

class Searcher {
 public:
  Searcher(const ColoringSpec& start, const SearchOptions& options)
      : options_(options), rng_(options.seed) {
    state_.seed = options.seed;
    reset(build(start));
    state_.best = state_.coloring;
    state_.best_objective = state_.objective;
  }

  SearchState run() {
    while (true) {
      std::optional<FlipDelta> move = scan();
      if (!move) break;  // budget exhausted mid-scan or no admissible edge
      const bool improving = move->total() < 0;
      if (options_.policy == SearchPolicy::Tabu) {
        apply(*move);
        continue;
      }
      if (improving) {
        apply(*move);
      } else if (options_.policy == SearchPolicy::RandomRestart) {
        reset(random_coloring(state_.coloring, rng_));
        ++state_.restarts;
      } else {
        break;
      }
    }
    return std::move(state_);
  }

 private:
  bool is_tabu(const Edge& e) const {
    return std::find(tabu_.begin(), tabu_.end(), e) != tabu_.end();
  }

  // Best admissible flip of the current coloring, or nothing when the budget
  // runs out before the scan completes.
  std::optional<FlipDelta> scan() {
    std::optional<FlipDelta> best;
    const bool tabu_policy = options_.policy == SearchPolicy::Tabu;
    for (const Edge& e : candidate_edges(state_.coloring, options_.red_to_blue_only)) {
      if (state_.evaluations >= options_.budget) return std::nullopt;
      ++state_.evaluations;
      FlipDelta d = flip_delta(state_.coloring, e.a, e.b);
      if (tabu_policy && is_tabu(e) &&
          state_.objective + d.total() >= state_.best_objective) {
        continue;
      }
      if (!best || d.total() < best->total()) best = d;
    }
    return best;
  }

  void apply(const FlipDelta& d) {
    state_.coloring = flip_edge(state_.coloring, d.edge.a, d.edge.b);
    state_.red += d.d_red;
    state_.blue += d.d_blue;
    state_.objective = state_.red + state_.blue;
    SearchMove m;
    m.step = static_cast<int>(state_.trace.size()) + 1;
    m.edge = d.edge;
    m.delta = d;
    m.red = state_.red;
    m.blue = state_.blue;
    m.objective = state_.objective;
    m.evaluations = state_.evaluations;
    m.improving = d.total() < 0;
    state_.trace.push_back(m);
    if (options_.policy == SearchPolicy::Tabu) {
      tabu_.push_back(d.edge);
      while (static_cast<int>(tabu_.size()) > options_.tabu_length) {
        tabu_.pop_front();
      }
    }
    if (state_.objective < state_.best_objective) {
      state_.best = state_.coloring;
      state_.best_objective = state_.objective;
    }
    if (options_.validate_every > 0 && m.step % options_.validate_every == 0) {
      const auto recount = count5(state_.coloring, EdgeColor::Red) +
                           count5(state_.coloring, EdgeColor::Blue);
      if (recount != state_.objective) {
        throw std::logic_error("incremental objective " +
                               std::to_string(state_.objective) +
                               " disagrees with recount " +
                               std::to_string(recount));
      }
    }
  }

  void reset(Coloring c) {
    state_.coloring = std::move(c);
    state_.red = count5(state_.coloring, EdgeColor::Red);
    state_.blue = count5(state_.coloring, EdgeColor::Blue);
    state_.objective = state_.red + state_.blue;
    tabu_.clear();
    if (state_.objective < state_.best_objective) {
      state_.best = state_.coloring;
      state_.best_objective = state_.objective;
    }
  }

  SearchOptions options_;
  std::mt19937_64 rng_;
  SearchState state_;
  std::deque<Edge> tabu_;
};

}  // namespace

std::int64_t objective(const Coloring& c) {
  return count5(c, EdgeColor::Red) + count5(c, EdgeColor::Blue);
}

FlipDelta flip_delta(const Coloring& c, Vertex a, Vertex b) {
  const EdgeColor now = c.color(a, b);
  const EdgeColor next = opposite(now);
  const VertexMask ends = bit(a) | bit(b);
  const auto lost = count_within(
      c, now, common_color_neighbors(c, now, ends), kSearchCliqueSize - 2);
  const auto gained = count_within(
      c, next, common_color_neighbors(c, next, ends), kSearchCliqueSize - 2);
  FlipDelta d;
  d.edge = Edge(a, b);
  if (now == EdgeColor::Red) {
    d.d_red = -lost;
    d.d_blue = gained;
  } else {
    d.d_blue = -lost;
    d.d_red = gained;
  }
  return d;
}

std::optional<FlipDelta> best_single_flip(const Coloring& c,
                                          bool red_to_blue_only) {
  std::optional<FlipDelta> best;
  for (const Edge& e : candidate_edges(c, red_to_blue_only)) {
    FlipDelta d = flip_delta(c, e.a, e.b);
    if (!best || d.total() < best->total()) best = d;
  }
  return best;
}

SearchPolicy parse_policy(std::string_view name) {
  if (name == "greedy") return SearchPolicy::Greedy;
  if (name == "tabu") return SearchPolicy::Tabu;
  if (name == "restart") return SearchPolicy::RandomRestart;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "'");
}

std::string_view policy_name(SearchPolicy p) {
  switch (p) {
    case SearchPolicy::Greedy: return "greedy";
    case SearchPolicy::Tabu: return "tabu";
    case SearchPolicy::RandomRestart: return "restart";
  }
  return "";
}

SearchState local_search(const ColoringSpec& start,
                         const SearchOptions& options) {
  if (options.budget < 1) throw std::invalid_argument("search budget must be >= 1");
  if (options.tabu_length < 0) throw std::invalid_argument("negative tabu length");
  return Searcher(start, options).run();
}

std::string format_search_log(const SearchState& state) {
  std::string out;
  for (const SearchMove& m : state.trace) {
    if (!m.improving) continue;
    out += "step=" + std::to_string(m.step) + " flip=" + std::to_string(m.edge.a) +
           "-" + std::to_string(m.edge.b) + " red=" + std::to_string(m.red) +
           " blue=" + std::to_string(m.blue) +
           " objective=" + std::to_string(m.objective) + "\n";
  }
  return out;
}

}  // namespace ramsey
