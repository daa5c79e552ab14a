#pragma once

// Pyramid partitions. A brick is identified with its position: the word
// relations make a brick's class the multiset of its letters, and the
// position recovers that multiset.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcount/colouring.hpp"
#include "boxcount/enum3d.hpp"
#include "boxcount/series.hpp"
#include "boxcount/young.hpp"

namespace boxcount {

struct Brick {
  int x = 0, y = 0, z = 0;
  friend auto operator<=>(const Brick&, const Brick&) = default;
};

inline constexpr Brick kV1{-1, 1, 0}, kV2{1, 1, 0}, kW1{0, 1, -1}, kW2{0, 1, 1};

inline Brick operator+(const Brick& a, const Brick& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Brick operator-(const Brick& a, const Brick& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

/// Letter multiplicities of the alternating word v w v w ... of a brick.
struct LetterCounts {
  int v1 = 0, v2 = 0, w1 = 0, w2 = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

inline std::optional<LetterCounts> letter_counts(const Brick& b) {
  if (b.y < 0) return std::nullopt;
  const int nv = (b.y + 1) / 2, nw = b.y / 2;
  if (std::abs(b.x) > nv || std::abs(b.z) > nw) return std::nullopt;
  if ((nv - b.x) % 2 != 0 || (nw - b.z) % 2 != 0) return std::nullopt;
  return LetterCounts{(nv - b.x) / 2, (nv + b.x) / 2, (nw - b.z) / 2, (nw + b.z) / 2};
}

inline bool is_valid_brick(const Brick& b) { return letter_counts(b).has_value(); }

inline LetterCounts checked_counts(const Brick& b) {
  auto c = letter_counts(b);
  if (!c) throw std::invalid_argument("invalid brick position");
  return *c;
}

/// Bricks obtained by deleting the final letter of some word for b.
inline std::vector<Brick> parents(const Brick& b) {
  auto c = checked_counts(b);
  if (b.y == 0) throw std::invalid_argument("the origin brick has no parents");
  std::vector<Brick> out;
  const bool last_is_v = b.y % 2 == 1;
  const int n1 = last_is_v ? c.v1 : c.w1, n2 = last_is_v ? c.v2 : c.w2;
  if (n1 > 0) out.push_back(b - (last_is_v ? kV1 : kW1));
  if (n2 > 0) out.push_back(b - (last_is_v ? kV2 : kW2));
  std::sort(out.begin(), out.end());
  return out;
}

/// Bricks one layer up that have b among their parents.
inline std::vector<Brick> children(const Brick& b) {
  checked_counts(b);
  const bool next_is_v = b.y % 2 == 0;
  std::vector<Brick> out{b + (next_is_v ? kV1 : kW1), b + (next_is_v ? kV2 : kW2)};
  std::sort(out.begin(), out.end());
  return out;
}

/// Diagonal index of a brick; slices are the level sets of x - z.
inline int brick_slice(const Brick& b) { return b.x - b.z; }

/// Colour table by slice index mod 4: 0, b, c, a.
inline int slice_colour(int k) {
  static constexpr std::array<int, 4> table{klein::zero, klein::b, klein::c, klein::a};
  return table[((k % 4) + 4) % 4];
}

inline int brick_colour(const Brick& b) {
  checked_counts(b);
  return slice_colour(brick_slice(b));
}

/// Cell of a brick inside its slice: row counts v2 w2 pairs, column v1 w1 pairs.
inline std::pair<int, int> brick_cell(const Brick& b) {
  auto c = checked_counts(b);
  return {std::min(c.v2, c.w2), std::min(c.v1, c.w1)};
}

/// Inverse of (brick_slice, brick_cell).
inline Brick brick_at(int k, int row, int col) {
  // slice k >= 0 starts at (v2 w1)^(k/2) [v2], k < 0 at (v1 w2)^(-k/2) [v1]
  LetterCounts c;
  const int m = std::abs(k) / 2;
  if (k >= 0) {
    c = {col, m + row + (k % 2), m + col, row};
  } else {
    c = {m + col + (-k % 2), row, col, m + row};
  }
  Brick b{(c.v2 - c.v1), c.v1 + c.v2 + c.w1 + c.w2, (c.w2 - c.w1)};
  return b;
}

class PyramidPartition {
 public:
  PyramidPartition() = default;
  explicit PyramidPartition(std::vector<Brick> bricks) : bricks_(std::move(bricks)) {
    std::sort(bricks_.begin(), bricks_.end());
    if (std::adjacent_find(bricks_.begin(), bricks_.end()) != bricks_.end())
      throw std::invalid_argument("duplicate brick");
    for (const auto& b : bricks_) {
      checked_counts(b);
      if (b.y == 0) continue;
      for (const auto& p : parents(b))
        if (!contains(p)) throw std::invalid_argument("brick set is not prefix closed");
    }
  }

  const std::vector<Brick>& bricks() const { return bricks_; }
  int size() const { return static_cast<int>(bricks_.size()); }
  bool contains(const Brick& b) const { return std::binary_search(bricks_.begin(), bricks_.end(), b); }

  std::array<int, 4> colour_counts() const {
    std::array<int, 4> counts{};
    for (const auto& b : bricks_) ++counts[brick_colour(b)];
    return counts;
  }

  friend bool operator==(const PyramidPartition&, const PyramidPartition&) = default;

 private:
  std::vector<Brick> bricks_;
};

/// The bricks of slice k as a 2D Young diagram.
inline Partition2D pyramid_slice(const PyramidPartition& p, int k) {
  std::map<int, int> row_length;
  int cells = 0;
  for (const auto& b : p.bricks()) {
    if (brick_slice(b) != k) continue;
    auto [r, c] = brick_cell(b);
    row_length[r] = std::max(row_length[r], c + 1);
    ++cells;
  }
  std::vector<int> rows;
  for (auto [r, len] : row_length) {
    if (r != static_cast<int>(rows.size())) throw std::logic_error("slice rows are not contiguous");
    rows.push_back(len);
  }
  Partition2D out(rows);  // throws unless rows decrease
  if (out.size() != cells) throw std::logic_error("slice is not a Young diagram");
  return out;
}

namespace detail {

// Bricks in a linear extension of the prefix order: by layer, then x, then z.
inline std::vector<Brick> bricks_below_layer(int layers) {
  std::vector<Brick> out;
  for (int y = 0; y < layers; ++y)
    for (int x = -y; x <= y; ++x)
      for (int z = -y; z <= y; ++z)
        if (is_valid_brick({x, y, z})) out.push_back({x, y, z});
  return out;
}

}  // namespace detail

/// Visits every pyramid partition with at most N bricks exactly once, as the
/// brick list in increasing linear-extension order. Partitions are generated
/// by adding bricks in increasing order; sharding splits the search tree at a
/// fixed depth round-robin.
template <class Visit>
void enumerate_pyramids(int N, Visit&& visit, int shards = 1, int shard = 0) {
  if (N < 0) throw std::invalid_argument("negative degree");
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard parameters");
  const auto order = detail::bricks_below_layer(N);
  std::map<Brick, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> parent_index(order.size()), child_index(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].y == 0) continue;
    for (const auto& p : parents(order[i])) {
      parent_index[i].push_back(index.at(p));
      child_index[index.at(p)].push_back(static_cast<int>(i));
    }
  }

  constexpr int kSplitDepth = 4;
  long split_counter = 0;
  std::vector<char> present(order.size(), 0);
  std::vector<int> chosen;
  std::function<void()> rec = [&]() {
    const int depth = static_cast<int>(chosen.size());
    if (depth == kSplitDepth && split_counter++ % shards != shard) return;
    if (depth >= kSplitDepth || shard == 0) {
      std::vector<Brick> bricks;
      for (int i : chosen) bricks.push_back(order[i]);
      visit(static_cast<const std::vector<Brick>&>(bricks));
    }
    if (depth == N) return;
    // candidates: the origin or children of chosen bricks, above the last index
    const int last = chosen.empty() ? -1 : chosen.back();
    std::vector<int> candidates;
    if (chosen.empty()) candidates.push_back(0);
    for (int c : chosen)
      for (int ch : child_index[c])
        if (ch > last) candidates.push_back(ch);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int cand : candidates) {
      if (!std::all_of(parent_index[cand].begin(), parent_index[cand].end(), [&](int p) { return present[p]; }))
        continue;
      present[cand] = 1;
      chosen.push_back(cand);
      rec();
      chosen.pop_back();
      present[cand] = 0;
    }
  };
  rec();
}

inline Variables pyramid_variables() { return GroupSpec::klein().variables(); }

/// Contribution of one shard of the pyramid enumeration.
inline Series pyramid_shard_series(int N, int shards, int shard) {
  Series s(pyramid_variables(), N);
  enumerate_pyramids(
      N,
      [&](const std::vector<Brick>& bricks) {
        std::vector<int> counts(4, 0);
        for (const auto& b : bricks) ++counts[slice_colour(brick_slice(b))];
        s.add_term(counts_to_exponents(counts), Integer(1));
      },
      shards, shard);
  return s;
}

/// Z_pyramid = sum over pyramid partitions with at most N bricks of prod q_g^{|pi|_g}.
inline Series pyramid_series(int N, int threads = 1) {
  const int shards = std::max(1, threads);
  return sum_over_shards(pyramid_variables(), N, shards, threads,
                         [&](int shard) { return pyramid_shard_series(N, shards, shard); });
}

}  // namespace boxcount
