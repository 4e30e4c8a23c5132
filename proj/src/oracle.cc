#include "ramsey/oracle.h"

#include <stdexcept>
#include <string>

namespace ramsey::oracle {

ColorMatrix::ColorMatrix(const ColoringSpec& spec)
    : order_(spec.order),
      blue_(static_cast<std::size_t>(spec.order) * spec.order, 0) {
  spec.validate();
  const int n = order_;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      int forward = ((b - a) % n + n) % n;
      int length = forward <= n - forward ? forward : n - forward;
      blue_[a * n + b] = spec.blue_lengths.count(length) ? 1 : 0;
    }
  }
  for (const Edge& e : spec.flips) {
    blue_[e.a * n + e.b] ^= 1;
    blue_[e.b * n + e.a] ^= 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!spec.deletions.count(v)) vertices_.push_back(v);
  }
}

namespace {

// Visits every k-subset of m items as an index vector, ascending.
template <typename Visit>
void for_each_subset(int m, int k, Visit&& visit) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool all_pairs(const ColorMatrix& mat, const std::vector<int>& idx,
               bool want_blue) {
  const auto& vs = mat.vertices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (mat.is_blue(vs[idx[i]], vs[idx[j]]) != want_blue) return false;
    }
  }
  return true;
}

void check_size(const ColorMatrix& mat, int k) {
  const int m = static_cast<int>(mat.vertices().size());
  if (k < 2 || k > m) {
    throw std::out_of_range("clique size " + std::to_string(k) +
                            " outside [2, " + std::to_string(m) + "]");
  }
}

}  // namespace

std::vector<std::vector<Vertex>> naive_enumerate(const ColoringSpec& spec,
                                                 EdgeColor color, int k) {
  ColorMatrix mat(spec);
  check_size(mat, k);
  const bool want_blue = color == EdgeColor::Blue;
  std::vector<std::vector<Vertex>> out;
  for_each_subset(static_cast<int>(mat.vertices().size()), k,
                  [&](const std::vector<int>& idx) {
                    if (!all_pairs(mat, idx, want_blue)) return;
                    std::vector<Vertex> q;
                    for (int i : idx) q.push_back(mat.vertices()[i]);
                    out.push_back(std::move(q));
                  });
  return out;
}

std::int64_t naive_count(const ColoringSpec& spec, EdgeColor color, int k) {
  ColorMatrix mat(spec);
  check_size(mat, k);
  const bool want_blue = color == EdgeColor::Blue;
  std::int64_t total = 0;
  for_each_subset(static_cast<int>(mat.vertices().size()), k,
                  [&](const std::vector<int>& idx) {
                    if (all_pairs(mat, idx, want_blue)) ++total;
                  });
  return total;
}

}  // namespace ramsey::oracle
