// Two-colorings of complete graphs built from a circulant distance table,
// followed by explicit edge flips and vertex deletions.

#ifndef RAMSEY_COLORING_H_
#define RAMSEY_COLORING_H_

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

using Vertex = int;
using VertexMask = std::uint64_t;

// One machine word per neighbor mask.
inline constexpr int kMaxOrder = 64;

enum class EdgeColor { Red, Blue };

inline constexpr EdgeColor opposite(EdgeColor c) {
  return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

std::string_view color_name(EdgeColor c);
// Accepts "red" or "blue"; throws std::invalid_argument otherwise.
EdgeColor parse_color(std::string_view name);

// Unordered vertex pair, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Declarative recipe for a coloring. Canonical application order is
// base circulant coloring, then flips in list order, then deletions.
struct ColoringSpec {
  int order = 0;
  std::set<int> blue_lengths;
  std::vector<Edge> flips;
  std::set<Vertex> deletions;

  // Throws SpecError describing the first violated invariant.
  void validate() const;

  friend bool operator==(const ColoringSpec&, const ColoringSpec&) = default;
};

enum class Preset { Cyc43, Exoo42, VariantA, VariantB };

ColoringSpec preset(Preset p);
// Case-insensitive "cyc43", "exoo42", "varianta", "variantb".
ColoringSpec preset(std::string_view name);
std::string_view preset_name(Preset p);

// Circular distance in [1, n/2]. Throws std::invalid_argument for a == b
// or out-of-range vertices.
int dist(int n, Vertex a, Vertex b);

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

// Materialized coloring. Immutable: modification operators return copies.
class Coloring {
 public:
  int order() const { return order_; }
  VertexMask active() const { return active_; }
  bool is_active(Vertex v) const {
    return v >= 0 && v < order_ && (active_ & bit(v)) != 0;
  }
  int active_count() const;

  // Neighbors of v joined by an edge of the given color.
  VertexMask neighbors(Vertex v, EdgeColor c) const {
    return c == EdgeColor::Blue ? blue_[v] : red_[v];
  }
  VertexMask blue_mask(Vertex v) const { return blue_[v]; }
  VertexMask red_mask(Vertex v) const { return red_[v]; }

  // Color of an active edge; throws std::invalid_argument otherwise.
  EdgeColor color(Vertex a, Vertex b) const;

  // The recipe that reproduces this coloring exactly.
  const ColoringSpec& spec() const { return spec_; }

  // True when no flip or deletion has been applied to the circulant base.
  bool is_pure_circulant() const {
    return spec_.flips.empty() && spec_.deletions.empty();
  }

  // Compares the materialized coloring only, not the recipe.
  bool operator==(const Coloring& other) const;

 private:
  friend Coloring build(const ColoringSpec& spec);
  friend Coloring flip_edge(const Coloring& c, Vertex a, Vertex b);
  friend Coloring delete_vertex(const Coloring& c, Vertex v);

  void toggle(Vertex a, Vertex b);
  void remove(Vertex v);

  int order_ = 0;
  VertexMask active_ = 0;
  std::array<VertexMask, kMaxOrder> blue_{};
  std::array<VertexMask, kMaxOrder> red_{};
  ColoringSpec spec_;
};

Coloring build(const ColoringSpec& spec);

// Toggles one edge. The flip is recorded in the returned coloring's spec;
// flipping a recorded edge again removes the record.
Coloring flip_edge(const Coloring& c, Vertex a, Vertex b);

// Removes v and its incident edges without relabeling the others.
Coloring delete_vertex(const Coloring& c, Vertex v);

// Rebuilds c with its deletions undone (flips kept).
Coloring restore_deleted(const Coloring& c);

// The underlying circulant coloring of c's spec (no flips, no deletions).
Coloring base_coloring(const Coloring& c);

}  // namespace ramsey

#endif  // RAMSEY_COLORING_H_
