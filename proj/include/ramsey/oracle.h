// Naive subset scanner used to cross-check the mask engine.
//
// Works from a ColoringSpec alone: it derives every edge color with its own
// distance rule and flip parity, then tests all pairs of every k-subset of
// the surviving vertices. No enumeration code is shared with clique_engine.

#ifndef RAMSEY_ORACLE_H_
#define RAMSEY_ORACLE_H_

#include <cstdint>
#include <vector>

#include "ramsey/coloring.h"

namespace ramsey::oracle {

class ColorMatrix {
 public:
  explicit ColorMatrix(const ColoringSpec& spec);

  int order() const { return order_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool is_blue(Vertex a, Vertex b) const { return blue_[a * order_ + b] != 0; }

 private:
  int order_;
  std::vector<Vertex> vertices_;  // surviving vertices, ascending
  std::vector<char> blue_;
};

// Lexicographic list of k-subsets whose pairs all have the color.
std::vector<std::vector<Vertex>> naive_enumerate(const ColoringSpec& spec,
                                                 EdgeColor color, int k);
std::int64_t naive_count(const ColoringSpec& spec, EdgeColor color, int k);

}  // namespace ramsey::oracle

#endif  // RAMSEY_ORACLE_H_
