#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// touches the stabilizer chain or the union-find block code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pgq/permutation.hpp"

namespace oracle {

using pgq::Permutation;
using pgq::Point;

/// Size of <gens> by closing the identity under right multiplication.
inline std::size_t closure_size(const std::vector<Permutation>& gens, std::size_t degree) {
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  auto key = [](const Permutation& g) { return std::vector<Point>(g.images().begin(), g.images().end()); };
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        Permutation h = g * s;
        if (seen.insert(key(h)).second) next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Every set partition of {0..n-1} as a block-label vector (restricted growth strings).
inline void for_each_partition(std::size_t n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
    if (i == n) {
      visit(label);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      label[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (n == 0) return;
  label[0] = 0;
  rec(1, 0);
}

inline bool preserves(const std::vector<Permutation>& gens, const std::vector<int>& label) {
  const std::size_t n = label.size();
  for (const auto& g : gens)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if ((label[x] == label[y]) != (label[g[x]] == label[g[y]])) return false;
  return true;
}

/// Primitive iff the only invariant partitions are the two trivial ones.
inline bool primitive_by_partitions(const std::vector<Permutation>& gens, std::size_t n) {
  bool primitive = true;
  for_each_partition(n, [&](const std::vector<int>& label) {
    int blocks = 0;
    for (int l : label) blocks = std::max(blocks, l + 1);
    if (blocks == 1 || blocks == static_cast<int>(n)) return;
    if (preserves(gens, label)) primitive = false;
  });
  return primitive;
}

/// Smallest invariant block containing a and b, by exhaustive partition search.
inline std::vector<Point> minimal_block_by_partitions(const std::vector<Permutation>& gens, std::size_t n, Point a,
                                                      Point b) {
  std::vector<Point> best;
  for_each_partition(n, [&](const std::vector<int>& label) {
    if (label[a] != label[b] || !preserves(gens, label)) return;
    std::vector<Point> block;
    for (Point x = 0; x < n; ++x)
      if (label[x] == label[a]) block.push_back(x);
    if (best.empty() || block.size() < best.size()) best = block;
  });
  return best;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  for (Point i = 0; i < n; ++i) img[i] = i;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

/// A random small group: 1-3 generators, often sparse so orders vary.
inline std::vector<Permutation> random_generators(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3), kind(0, 2);
  std::vector<Permutation> gens;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    if (kind(rng) == 0) {
      gens.push_back(random_permutation(n, rng));
    } else {
      // a random cycle on a few points
      std::vector<Point> pts(n);
      for (Point j = 0; j < n; ++j) pts[j] = j;
      std::shuffle(pts.begin(), pts.end(), rng);
      std::uniform_int_distribution<std::size_t> len(2, std::max<std::size_t>(2, n / 2));
      const std::size_t l = std::min(n, len(rng));
      std::vector<Point> img(n);
      for (Point j = 0; j < n; ++j) img[j] = j;
      for (std::size_t j = 0; j < l; ++j) img[pts[j]] = pts[(j + 1) % l];
      gens.push_back(Permutation(std::move(img)));
    }
  }
  return gens;
}

}  // namespace oracle
