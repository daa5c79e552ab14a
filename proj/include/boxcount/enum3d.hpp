#pragma once

// Enumeration of 3D Young diagrams through their diagonal slices, and the
// coloured partition functions they generate.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "boxcount/colouring.hpp"
#include "boxcount/series.hpp"
#include "boxcount/young.hpp"

namespace boxcount {

/// Finite downward-closed set of boxes in the octant, kept sorted.
class Diagram3D {
 public:
  Diagram3D() = default;
  explicit Diagram3D(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    if (std::adjacent_find(boxes_.begin(), boxes_.end()) != boxes_.end())
      throw std::invalid_argument("duplicate box");
    for (const auto& b : boxes_) {
      if (b.i < 0 || b.j < 0 || b.k < 0) throw std::invalid_argument("box outside the octant");
      if ((b.i > 0 && !contains({b.i - 1, b.j, b.k})) || (b.j > 0 && !contains({b.i, b.j - 1, b.k})) ||
          (b.k > 0 && !contains({b.i, b.j, b.k - 1})))
        throw std::invalid_argument("box set is not downward closed");
    }
  }

  const std::vector<Box>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool contains(const Box& b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

  friend bool operator==(const Diagram3D&, const Diagram3D&) = default;

 private:
  std::vector<Box> boxes_;
};

/// Diagonal slices pi_k (boxes with x - y = k) over the window [first, first + size).
/// Ends are trimmed so the window is empty exactly for the empty diagram.
class SliceChain {
 public:
  SliceChain() = default;
  SliceChain(int first, std::vector<Partition2D> slices) : first_(first), slices_(std::move(slices)) { trim(); }

  int first() const { return first_; }
  int last() const { return first_ + static_cast<int>(slices_.size()) - 1; }
  const std::vector<Partition2D>& slices() const { return slices_; }
  const Partition2D& at(int k) const {
    static const Partition2D empty;
    if (k < first_ || k > last()) return empty;
    return slices_[k - first_];
  }
  int size() const {
    int s = 0;
    for (const auto& p : slices_) s += p.size();
    return s;
  }

  /// Interlacing pattern of a 3D diagram: pi_k > pi_{k+1} for k >= 0 and
  /// pi_k > pi_{k-1} for k <= 0.
  bool is_valid() const {
    for (int k = std::min(first_, 0); k <= std::max(last(), 0); ++k) {
      if (k >= 0 && !interlaces(at(k), at(k + 1))) return false;
      if (k <= 0 && !interlaces(at(k), at(k - 1))) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (int k = first_; k <= last(); ++k) out += (k == first_ ? "" : " | ") + std::to_string(k) + ":" + at(k).to_string();
    return out;
  }

  friend bool operator==(const SliceChain& a, const SliceChain& b) {
    return a.slices_ == b.slices_ && (a.slices_.empty() || a.first_ == b.first_);
  }

 private:
  void trim() {
    while (!slices_.empty() && slices_.back().empty()) slices_.pop_back();
    std::size_t lead = 0;
    while (lead < slices_.size() && slices_[lead].empty()) ++lead;
    slices_.erase(slices_.begin(), slices_.begin() + static_cast<long>(lead));
    first_ = slices_.empty() ? 0 : first_ + static_cast<int>(lead);
  }

  int first_ = 0;
  std::vector<Partition2D> slices_;
};

/// Box at row t, column z of slice k.
inline Box slice_box(int k, int t, int z) { return {std::max(k, 0) + t, std::max(-k, 0) + t, z}; }

inline SliceChain diagram_to_slices(const Diagram3D& d) {
  if (d.size() == 0) return {};
  std::map<std::pair<int, int>, int> height;
  int lo = 0, hi = 0;
  for (const auto& b : d.boxes()) {
    auto& h = height[{b.i, b.j}];
    h = std::max(h, b.k + 1);
    lo = std::min(lo, b.i - b.j);
    hi = std::max(hi, b.i - b.j);
  }
  std::vector<Partition2D> slices;
  for (int k = lo; k <= hi; ++k) {
    std::vector<int> rows;
    for (int t = 0;; ++t) {
      Box b = slice_box(k, t, 0);
      auto it = height.find({b.i, b.j});
      if (it == height.end()) break;
      rows.push_back(it->second);
    }
    slices.emplace_back(std::move(rows));
  }
  return {lo, std::move(slices)};
}

inline Diagram3D slices_to_diagram(const SliceChain& s) {
  if (!s.is_valid()) throw std::invalid_argument("slice chain violates interlacing");
  std::vector<Box> boxes;
  for (int k = s.first(); k <= s.last(); ++k) {
    const auto& p = s.at(k);
    for (int t = 0; t < p.length(); ++t)
      for (int z = 0; z < p.row(t); ++z) boxes.push_back(slice_box(k, t, z));
  }
  return Diagram3D(std::move(boxes));
}

namespace detail {

// Chains p > c_1 > c_2 > ... > empty with total size <= budget, visited as the
// list (c_1, c_2, ...).
template <class Visit>
void for_each_descending_chain(const Partition2D& top, int budget, std::vector<Partition2D>& chain, Visit&& visit) {
  if (top.empty()) {
    visit(static_cast<const std::vector<Partition2D>&>(chain));
    return;
  }
  for_each_interlacing_below(top, [&](const Partition2D& next) {
    if (next.size() > budget) return;
    chain.push_back(next);
    for_each_descending_chain(next, budget - next.size(), chain, visit);
    chain.pop_back();
  });
}

}  // namespace detail

/// Visits every 3D diagram with at most N boxes as a SliceChain, exactly once.
/// With shards > 1 only diagrams whose central slice falls in the given shard
/// are visited; the union over shards is the full enumeration.
template <class Visit>
void enumerate_diagrams(int N, Visit&& visit, int shards = 1, int shard = 0) {
  if (N < 0) throw std::invalid_argument("negative degree");
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard parameters");
  long index = 0;
  for (const auto& centre : partitions_up_to(N)) {
    if (index++ % shards != shard) continue;
    const int rest = N - centre.size();
    std::vector<Partition2D> right, left;
    detail::for_each_descending_chain(centre, rest, right, [&](const std::vector<Partition2D>& r) {
      int used = 0;
      for (const auto& p : r) used += p.size();
      detail::for_each_descending_chain(centre, rest - used, left, [&](const std::vector<Partition2D>& l) {
        std::vector<Partition2D> slices(l.rbegin(), l.rend());
        slices.push_back(centre);
        slices.insert(slices.end(), r.begin(), r.end());
        visit(SliceChain(-static_cast<int>(l.size()), std::move(slices)));
      });
    });
  }
}

/// Colour multiplicities |pi|_g of a diagram given by its slices.
inline std::vector<int> colour_counts(const OctantColouring& c, const SliceChain& s) {
  std::vector<int> counts(c.group().order(), 0);
  for (int k = s.first(); k <= s.last(); ++k) {
    const auto& p = s.at(k);
    for (int t = 0; t < p.length(); ++t)
      for (int z = 0; z < p.row(t); ++z) ++counts[c.colour(slice_box(k, t, z))];
  }
  return counts;
}

inline std::vector<int> colour_counts(const OctantColouring& c, const Diagram3D& d) {
  std::vector<int> counts(c.group().order(), 0);
  for (const auto& b : d.boxes()) ++counts[c.colour(b)];
  return counts;
}

inline Exponents counts_to_exponents(const std::vector<int>& counts) {
  Exponents e;
  for (std::size_t g = 0; g < counts.size(); ++g) e.set_half(g, 2 * counts[g]);
  return e;
}

/// Runs `work(shard)` for shards 0..shards-1 on up to `threads` threads and
/// sums the resulting series in shard order.
template <class Work>
Series sum_over_shards(const Variables& vars, int N, int shards, int threads, Work&& work) {
  std::vector<Series> partial(shards, Series(vars, N));
  threads = std::max(1, std::min(threads, shards));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int s = t; s < shards; s += threads) partial[s] = work(s);
    });
  for (auto& th : pool) th.join();
  Series total(vars, N);
  for (const auto& p : partial) total += p;
  return total;
}

/// Contribution of one shard; weight(chain) returns +1 or -1.
template <class Weight>
Series coloured_shard_series(const OctantColouring& c, int N, Weight&& weight, int shards, int shard) {
  Series s(c.group().variables(), N);
  enumerate_diagrams(
      N,
      [&](const SliceChain& chain) { s.add_term(counts_to_exponents(colour_counts(c, chain)), Integer(weight(chain))); },
      shards, shard);
  return s;
}

inline Series coloured_shard_series(const OctantColouring& c, int N, int shards, int shard) {
  return coloured_shard_series(c, N, [](const SliceChain&) { return 1; }, shards, shard);
}

/// Signed variant: weight(chain) returns +1 or -1.
template <class Weight>
Series coloured_series_weighted(const OctantColouring& c, int N, Weight&& weight, int threads = 1) {
  const int shards = std::max(1, threads);
  return sum_over_shards(c.group().variables(), N, shards, threads,
                         [&](int shard) { return coloured_shard_series(c, N, weight, shards, shard); });
}

/// Z_G = sum over diagrams with at most N boxes of prod_g q_g^{|pi|_g}.
inline Series coloured_series(const OctantColouring& c, int N, int threads = 1) {
  return coloured_series_weighted(c, N, [](const SliceChain&) { return 1; }, threads);
}

}  // namespace boxcount
