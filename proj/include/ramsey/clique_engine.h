// Monochromatic k-clique enumeration over one-word neighbor masks.
//
// Cliques are grown in ascending vertex order: the candidate set at each
// depth is the intersection of the chosen vertices' color masks, restricted
// to vertices above the last one chosen, so every clique is produced once
// and in lexicographic order.

#ifndef RAMSEY_CLIQUE_ENGINE_H_
#define RAMSEY_CLIQUE_ENGINE_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/coloring.h"

namespace ramsey {

struct Clique {
  std::vector<Vertex> vertices;  // ascending, distinct
  EdgeColor color = EdgeColor::Red;

  friend auto operator<=>(const Clique&, const Clique&) = default;
};

struct CliqueReport {
  int k = 0;
  std::int64_t red_count = 0;
  std::int64_t blue_count = 0;
  std::optional<std::vector<Clique>> red_cliques;
  std::optional<std::vector<Clique>> blue_cliques;
  std::chrono::nanoseconds elapsed{0};
};

// Throws std::out_of_range unless 2 <= k <= active vertex count.
std::vector<Clique> enumerate_mono(const Coloring& c, EdgeColor color, int k);
std::int64_t count_mono(const Coloring& c, EdgeColor color, int k);

CliqueReport report_mono(const Coloring& c, int k, bool materialize);

// Active vertices outside vs joined to every member of vs in the color.
VertexMask common_color_neighbors(const Coloring& c, EdgeColor color,
                                  VertexMask vs);
std::vector<Vertex> common_color_neighbors(const Coloring& c, EdgeColor color,
                                           const std::vector<Vertex>& vs);

// All k-cliques of the color containing edge (a, b), computed from the
// common neighborhood of a and b only. Throws std::logic_error if the edge
// does not have the given color.
std::vector<Clique> cliques_through_edge(const Coloring& c, EdgeColor color,
                                         Vertex a, Vertex b, int k);
std::int64_t count_through_edge(const Coloring& c, EdgeColor color, Vertex a,
                                Vertex b, int k);

// Number of j-cliques of the color lying entirely inside candidates.
// j == 0 counts the empty clique.
std::int64_t count_within(const Coloring& c, EdgeColor color,
                          VertexMask candidates, int j);

std::vector<Vertex> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(const std::vector<Vertex>& vs);

// True when every pair in vs is an active edge of the color.
bool is_mono_clique(const Coloring& c, EdgeColor color,
                    const std::vector<Vertex>& vs);

}  // namespace ramsey

#endif  // RAMSEY_CLIQUE_ENGINE_H_
