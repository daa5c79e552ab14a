#pragma once

// The quiver word model behind pyramid partitions, kept independent of the
// position arithmetic in pyramid.hpp so each can check the other.

#include <array>
#include <map>
#include <queue>
#include <vector>

#include "boxcount/pyramid.hpp"

namespace boxcount::words {

/// Letters 0 = v1, 1 = v2, 2 = w1, 3 = w2; words alternate v, w starting with v.
using Word = std::vector<int>;

inline const std::array<Brick, 4>& letter_vectors() {
  static const std::array<Brick, 4> vecs{kV1, kV2, kW1, kW2};
  return vecs;
}

/// Target of the arrow labelled `letter` out of `vertex` (vertices 0, a, b, c), or -1.
inline int step(int vertex, int letter) {
  static const std::map<std::pair<int, int>, int> edges{
      {{klein::zero, 0}, klein::a}, {{klein::zero, 1}, klein::b}, {{klein::c, 0}, klein::b},
      {{klein::c, 1}, klein::a},    {{klein::a, 2}, klein::zero}, {{klein::a, 3}, klein::c},
      {{klein::b, 2}, klein::c},    {{klein::b, 3}, klein::zero}};
  auto it = edges.find({vertex, letter});
  return it == edges.end() ? -1 : it->second;
}

inline int endpoint(const Word& w) {
  int v = klein::zero;
  for (int l : w) v = step(v, l);
  return v;
}

inline Brick position(const Word& w) {
  Brick b;
  for (int l : w) b = b + letter_vectors()[l];
  return b;
}

/// All paths from vertex 0 of length <= len, shortest first.
inline std::vector<Word> words_up_to(int len) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == len) continue;
    const bool v_slot = out[i].size() % 2 == 0;
    for (int l : v_slot ? std::array<int, 2>{0, 1} : std::array<int, 2>{2, 3}) {
      if (step(endpoint(out[i]), l) < 0) continue;
      auto w = out[i];
      w.push_back(l);
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Class labels under the relations x y z = z y x for {x, z} = {v1, v2} or {w1, w2}.
inline std::map<Word, int> word_classes(const std::vector<Word>& ws) {
  std::map<Word, int> cls;
  int next = 0;
  for (const auto& w : ws) {
    if (cls.count(w)) continue;
    std::queue<Word> todo;
    todo.push(w);
    cls[w] = next;
    while (!todo.empty()) {
      Word u = todo.front();
      todo.pop();
      for (std::size_t i = 0; i + 2 < u.size(); ++i) {
        const bool both_v = u[i] < 2 && u[i + 2] < 2, both_w = u[i] >= 2 && u[i + 2] >= 2;
        if (!(both_v || both_w) || u[i] == u[i + 2]) continue;
        Word r = u;
        std::swap(r[i], r[i + 2]);
        if (cls.emplace(r, next).second) todo.push(r);
      }
    }
    ++next;
  }
  return cls;
}

/// One word reaching b: v2 and w2 used first.
inline Word representative(const Brick& b) {
  auto c = checked_counts(b);
  Word w;
  for (int i = 0; i < b.y; ++i) {
    if (i % 2 == 0) {
      w.push_back(c.v2 > 0 ? 1 : 0);
      (c.v2 > 0 ? c.v2 : c.v1)--;
    } else {
      w.push_back(c.w2 > 0 ? 3 : 2);
      (c.w2 > 0 ? c.w2 : c.w1)--;
    }
  }
  return w;
}

}  // namespace boxcount::words
