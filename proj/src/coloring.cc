#include "ramsey/coloring.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

namespace ramsey {

namespace {

const std::set<int> kCyc43BlueLengths = {3, 4, 5, 6, 8, 9, 11, 15, 17, 19};

const std::vector<Edge> kExooFlips = {
    {4, 5},   {13, 14}, {23, 24}, {39, 40}, {5, 6},   {14, 15},
    {24, 25}, {40, 41}, {6, 7},   {15, 16}, {30, 31}, {41, 42},
    {7, 8},   {16, 17}, {33, 34}, {11, 32},
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  return out;
}

}  // namespace

std::string_view color_name(EdgeColor c) {
  return c == EdgeColor::Red ? "red" : "blue";
}

EdgeColor parse_color(std::string_view name) {
  std::string s = lower(name);
  if (s == "red") return EdgeColor::Red;
  if (s == "blue") return EdgeColor::Blue;
  throw std::invalid_argument("unknown color '" + std::string(name) + "'");
}

void ColoringSpec::validate() const {
  if (order < 2 || order > kMaxOrder) {
    throw SpecError("order " + std::to_string(order) + " outside [2, " +
                    std::to_string(kMaxOrder) + "]");
  }
  for (int len : blue_lengths) {
    if (len < 1 || len > order / 2) {
      throw SpecError("blue length " + std::to_string(len) +
                      " outside [1, floor(n/2)]");
    }
  }
  std::set<Edge> seen;
  for (const Edge& e : flips) {
    if (e.a == e.b) throw SpecError("degenerate edge in flip list");
    if (e.a < 0 || e.b >= order) {
      throw SpecError("flip (" + std::to_string(e.a) + "," +
                      std::to_string(e.b) + ") references vertex >= order");
    }
    if (!seen.insert(e).second) {
      throw SpecError("duplicate flip (" + std::to_string(e.a) + "," +
                      std::to_string(e.b) + ")");
    }
  }
  for (Vertex v : deletions) {
    if (v < 0 || v >= order) {
      throw SpecError("deleted vertex " + std::to_string(v) + " out of range");
    }
  }
}

ColoringSpec preset(Preset p) {
  ColoringSpec spec;
  spec.order = 43;
  spec.blue_lengths = kCyc43BlueLengths;
  switch (p) {
    case Preset::Cyc43:
      break;
    case Preset::Exoo42:
      spec.flips = kExooFlips;
      spec.deletions = {0};
      break;
    case Preset::VariantA:
      spec.flips = kExooFlips;
      break;
    case Preset::VariantB:
      spec.flips = kExooFlips;
      spec.flips.emplace_back(21, 22);
      break;
  }
  return spec;
}

ColoringSpec preset(std::string_view name) {
  std::string s = lower(name);
  if (s == "cyc43") return preset(Preset::Cyc43);
  if (s == "exoo42") return preset(Preset::Exoo42);
  if (s == "varianta") return preset(Preset::VariantA);
  if (s == "variantb") return preset(Preset::VariantB);
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::Cyc43: return "Cyc43";
    case Preset::Exoo42: return "Exoo42";
    case Preset::VariantA: return "VariantA";
    case Preset::VariantB: return "VariantB";
  }
  return "";
}

int dist(int n, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("distance undefined for equal vertices");
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw std::invalid_argument("vertex out of range for order " +
                                std::to_string(n));
  }
  int d = (a - b + n) % n;
  return std::min(d, n - d);
}

int Coloring::active_count() const { return std::popcount(active_); }

EdgeColor Coloring::color(Vertex a, Vertex b) const {
  if (a == b || !is_active(a) || !is_active(b)) {
    throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ") is not an active edge");
  }
  return (blue_[a] & bit(b)) ? EdgeColor::Blue : EdgeColor::Red;
}

bool Coloring::operator==(const Coloring& other) const {
  return order_ == other.order_ && active_ == other.active_ &&
         blue_ == other.blue_ && red_ == other.red_;
}

void Coloring::toggle(Vertex a, Vertex b) {
  blue_[a] ^= bit(b);
  blue_[b] ^= bit(a);
  red_[a] ^= bit(b);
  red_[b] ^= bit(a);
}

void Coloring::remove(Vertex v) {
  active_ &= ~bit(v);
  blue_[v] = 0;
  red_[v] = 0;
  for (int u = 0; u < order_; ++u) {
    blue_[u] &= ~bit(v);
    red_[u] &= ~bit(v);
  }
}

Coloring build(const ColoringSpec& spec) {
  spec.validate();
  Coloring c;
  c.order_ = spec.order;
  c.spec_ = spec;
  const int n = spec.order;
  c.active_ = n == kMaxOrder ? ~VertexMask{0} : bit(n) - 1;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      if (spec.blue_lengths.count(dist(n, a, b))) {
        c.blue_[a] |= bit(b);
      } else {
        c.red_[a] |= bit(b);
      }
    }
  }
  for (const Edge& e : spec.flips) c.toggle(e.a, e.b);
  for (Vertex v : spec.deletions) c.remove(v);
  return c;
}

Coloring flip_edge(const Coloring& c, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("cannot flip a degenerate edge");
  if (!c.is_active(a) || !c.is_active(b)) {
    throw std::invalid_argument("cannot flip edge with inactive endpoint");
  }
  Coloring out = c;
  out.toggle(a, b);
  const Edge e(a, b);
  auto& flips = out.spec_.flips;
  if (auto it = std::find(flips.begin(), flips.end(), e); it != flips.end()) {
    flips.erase(it);
  } else {
    flips.push_back(e);
  }
  return out;
}

Coloring delete_vertex(const Coloring& c, Vertex v) {
  if (!c.is_active(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not active");
  }
  Coloring out = c;
  out.remove(v);
  out.spec_.deletions.insert(v);
  return out;
}

Coloring restore_deleted(const Coloring& c) {
  ColoringSpec spec = c.spec();
  spec.deletions.clear();
  return build(spec);
}

Coloring base_coloring(const Coloring& c) {
  ColoringSpec spec = c.spec();
  spec.flips.clear();
  spec.deletions.clear();
  return build(spec);
}

}  // namespace ramsey
