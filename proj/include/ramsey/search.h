// Flip-based local search minimizing the number of monochromatic K5s.

#ifndef RAMSEY_SEARCH_H_
#define RAMSEY_SEARCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/coloring.h"

namespace ramsey {

inline constexpr int kSearchCliqueSize = 5;

// Red K5 count plus blue K5 count.
std::int64_t objective(const Coloring& c);

// Change in the K5 counts if edge (a, b) were flipped. Only cliques through
// the edge are counted: the current color loses every K5 through it and the
// other color gains every K5 through it that the flip completes.
struct FlipDelta {
  Edge edge;
  std::int64_t d_red = 0;
  std::int64_t d_blue = 0;

  std::int64_t total() const { return d_red + d_blue; }
};

FlipDelta flip_delta(const Coloring& c, Vertex a, Vertex b);

// Least d_red + d_blue over all active edges (red edges only when
// red_to_blue_only), ties to the lexicographically least edge. Empty when
// there is no candidate edge.
std::optional<FlipDelta> best_single_flip(const Coloring& c,
                                          bool red_to_blue_only = false);

enum class SearchPolicy { Greedy, Tabu, RandomRestart };

SearchPolicy parse_policy(std::string_view name);  // greedy|tabu|restart
std::string_view policy_name(SearchPolicy p);

struct SearchOptions {
  SearchPolicy policy = SearchPolicy::Greedy;
  std::int64_t budget = 10000;  // flip evaluations
  std::uint64_t seed = 0;
  bool red_to_blue_only = false;
  int tabu_length = 50;
  // Full recount of the objective every this many applied moves; 0 never.
  int validate_every = 0;
};

struct SearchMove {
  int step = 0;  // 1-based position in the trace
  Edge edge;
  FlipDelta delta;
  std::int64_t red = 0;
  std::int64_t blue = 0;
  std::int64_t objective = 0;
  std::int64_t evaluations = 0;  // evaluations spent when applied
  bool improving = false;
};

struct SearchState {
  Coloring coloring;
  std::int64_t red = 0;
  std::int64_t blue = 0;
  std::int64_t objective = 0;
  std::vector<SearchMove> trace;
  std::uint64_t seed = 0;
  Coloring best;
  std::int64_t best_objective = 0;
  std::int64_t evaluations = 0;
  int restarts = 0;
};

// Deterministic in (start, options). Throws std::invalid_argument for a
// budget below 1.
SearchState local_search(const ColoringSpec& start,
                         const SearchOptions& options);

// One line per improving move:
// step=<int> flip=<a>-<b> red=<int> blue=<int> objective=<int>
std::string format_search_log(const SearchState& state);

}  // namespace ramsey

#endif  // RAMSEY_SEARCH_H_
