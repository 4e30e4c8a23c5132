#include "ramsey/clique_engine.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void check_k(const Coloring& c, int k) {
  if (k < 2 || k > c.active_count()) {
    throw std::out_of_range("clique size " + std::to_string(k) +
                            " outside [2, " +
                            std::to_string(c.active_count()) + "]");
  }
}

std::int64_t count_rec(const Coloring& c, EdgeColor color, VertexMask cand,
                       int remaining) {
  if (remaining == 0) return 1;
  if (remaining == 1) return std::popcount(cand);
  std::int64_t total = 0;
  while (std::popcount(cand) >= remaining) {
    const Vertex v = std::countr_zero(cand);
    cand &= cand - 1;
    total += count_rec(c, color, cand & c.neighbors(v, color), remaining - 1);
  }
  return total;
}

void enumerate_rec(const Coloring& c, EdgeColor color, VertexMask cand,
                   int remaining, std::vector<Vertex>& stack,
                   std::vector<Clique>& out) {
  if (remaining == 0) {
    out.push_back(Clique{stack, color});
    return;
  }
  while (std::popcount(cand) >= remaining) {
    const Vertex v = std::countr_zero(cand);
    cand &= cand - 1;
    stack.push_back(v);
    enumerate_rec(c, color, cand & c.neighbors(v, color), remaining - 1, stack,
                  out);
    stack.pop_back();
  }
}

void check_edge(const Coloring& c, EdgeColor color, Vertex a, Vertex b,
                int k) {
  if (k < 2) throw std::out_of_range("clique size must be at least 2");
  if (c.color(a, b) != color) {
    throw std::logic_error("edge (" + std::to_string(a) + "," +
                           std::to_string(b) + ") is not " +
                           std::string(color_name(color)));
  }
}

}  // namespace

std::vector<Vertex> mask_to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(std::popcount(m));
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

VertexMask vertices_to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxOrder) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    m |= bit(v);
  }
  return m;
}

bool is_mono_clique(const Coloring& c, EdgeColor color,
                    const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!c.is_active(vs[i])) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!(c.neighbors(vs[i], color) & bit(vs[j]))) return false;
    }
  }
  return true;
}

std::vector<Clique> enumerate_mono(const Coloring& c, EdgeColor color, int k) {
  check_k(c, k);
  std::vector<Clique> out;
  std::vector<Vertex> stack;
  stack.reserve(k);
  enumerate_rec(c, color, c.active(), k, stack, out);
  return out;
}

std::int64_t count_mono(const Coloring& c, EdgeColor color, int k) {
  check_k(c, k);
  return count_rec(c, color, c.active(), k);
}

CliqueReport report_mono(const Coloring& c, int k, bool materialize) {
  const auto start = std::chrono::steady_clock::now();
  CliqueReport r;
  r.k = k;
  if (materialize) {
    r.red_cliques = enumerate_mono(c, EdgeColor::Red, k);
    r.blue_cliques = enumerate_mono(c, EdgeColor::Blue, k);
    r.red_count = static_cast<std::int64_t>(r.red_cliques->size());
    r.blue_count = static_cast<std::int64_t>(r.blue_cliques->size());
  } else {
    r.red_count = count_mono(c, EdgeColor::Red, k);
    r.blue_count = count_mono(c, EdgeColor::Blue, k);
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

VertexMask common_color_neighbors(const Coloring& c, EdgeColor color,
                                  VertexMask vs) {
  if (vs == 0) throw std::invalid_argument("empty vertex set");
  if ((vs & ~c.active()) != 0) {
    throw std::invalid_argument("vertex set contains inactive vertices");
  }
  VertexMask common = c.active() & ~vs;
  for (VertexMask m = vs; m; m &= m - 1) {
    common &= c.neighbors(std::countr_zero(m), color);
  }
  return common;
}

std::vector<Vertex> common_color_neighbors(const Coloring& c, EdgeColor color,
                                           const std::vector<Vertex>& vs) {
  return mask_to_vertices(common_color_neighbors(c, color, vertices_to_mask(vs)));
}

std::int64_t count_within(const Coloring& c, EdgeColor color,
                          VertexMask candidates, int j) {
  if (j < 0) throw std::out_of_range("negative clique size");
  return count_rec(c, color, candidates & c.active(), j);
}

std::vector<Clique> cliques_through_edge(const Coloring& c, EdgeColor color,
                                         Vertex a, Vertex b, int k) {
  check_edge(c, color, a, b, k);
  const VertexMask common = common_color_neighbors(c, color, bit(a) | bit(b));
  std::vector<Clique> rest;
  std::vector<Vertex> stack;
  enumerate_rec(c, color, common, k - 2, stack, rest);
  for (Clique& q : rest) {
    q.vertices.push_back(a);
    q.vertices.push_back(b);
    std::sort(q.vertices.begin(), q.vertices.end());
  }
  std::sort(rest.begin(), rest.end());
  return rest;
}

std::int64_t count_through_edge(const Coloring& c, EdgeColor color, Vertex a,
                                Vertex b, int k) {
  check_edge(c, color, a, b, k);
  const VertexMask common = common_color_neighbors(c, color, bit(a) | bit(b));
  return count_rec(c, color, common, k - 2);
}

}  // namespace ramsey
