#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "boxcount/pyramid.hpp"
#include "boxcount/pyramid_words.hpp"

using namespace boxcount;

namespace {

using namespace boxcount::words;

std::vector<PyramidPartition> all_pyramids(int N, int shards = 1, int shard = 0) {
  std::vector<PyramidPartition> out;
  enumerate_pyramids(N, [&](const std::vector<Brick>& b) { out.emplace_back(b); }, shards, shard);
  return out;
}

}  // namespace

TEST(Bricks, Parents) {
  EXPECT_EQ(parents({1, 1, 0}), (std::vector<Brick>{{0, 0, 0}}));
  EXPECT_EQ(parents({1, 2, 1}), (std::vector<Brick>{{1, 1, 0}}));
  EXPECT_EQ(parents({-1, 2, -1}), (std::vector<Brick>{{-1, 1, 0}}));
  EXPECT_EQ(parents({-1, 2, 1}), (std::vector<Brick>{{-1, 1, 0}}));
  EXPECT_EQ(parents({0, 3, 1}), (std::vector<Brick>{{-1, 2, 1}, {1, 2, 1}}));
  EXPECT_FALSE(is_valid_brick({1, 1, 2}));
  EXPECT_FALSE(is_valid_brick({0, 1, 0}));
  EXPECT_THROW(parents({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(parents({0, 0, 0}), std::invalid_argument);
}

TEST(Bricks, Colours) {
  EXPECT_EQ(brick_colour({0, 0, 0}), klein::zero);
  EXPECT_EQ(brick_colour({2, 4, 0}), klein::c);
  EXPECT_EQ(brick_colour({-1, 1, 0}), klein::a);
  EXPECT_EQ(brick_colour({1, 1, 0}), klein::b);
  EXPECT_EQ(position({1, 3, 1, 2}), (Brick{2, 4, 0}));
  EXPECT_EQ(endpoint({1, 3, 1, 2}), klein::c);
}

TEST(Bricks, CellCoordinatesInvert) {
  for (int y = 0; y <= 10; ++y)
    for (int x = -y; x <= y; ++x)
      for (int z = -y; z <= y; ++z) {
        Brick b{x, y, z};
        if (!is_valid_brick(b)) continue;
        auto [r, c] = brick_cell(b);
        EXPECT_EQ(brick_at(brick_slice(b), r, c), b);
      }
}

TEST(WordOracle, ClassesArePositions) {
  auto words = words_up_to(6);
  auto cls = word_classes(words);
  std::map<int, Brick> class_position;
  std::set<Brick> positions;
  for (const auto& [w, c] : cls) {
    auto p = position(w);
    auto [it, inserted] = class_position.emplace(c, p);
    EXPECT_EQ(it->second, p);
    EXPECT_TRUE(is_valid_brick(p));
    EXPECT_EQ(endpoint(w), brick_colour(p));
    positions.insert(p);
  }
  EXPECT_EQ(positions.size(), class_position.size());
  std::size_t valid = 0;
  for (int y = 0; y <= 6; ++y)
    for (int x = -y; x <= y; ++x)
      for (int z = -y; z <= y; ++z) valid += is_valid_brick({x, y, z});
  EXPECT_EQ(positions.size(), valid);
}

TEST(WordOracle, PrefixParentsMatch) {
  auto words = words_up_to(6);
  std::map<Brick, std::set<Brick>> prefix_parents;
  for (const auto& w : words)
    if (!w.empty()) prefix_parents[position(w)].insert(position(Word(w.begin(), w.end() - 1)));
  for (const auto& [b, ps] : prefix_parents) {
    auto expected = parents(b);
    EXPECT_EQ(std::vector<Brick>(ps.begin(), ps.end()), expected);
  }
}

TEST(WordOracle, ClosureNotionsAgree) {
  // grow prefix-closed sets of word classes one class at a time
  const int N = 6;
  auto words = words_up_to(N);
  std::map<Brick, std::vector<Word>> members;
  for (const auto& w : words) members[position(w)].push_back(w);
  std::set<std::set<Brick>> level{{}}, all{{}};
  for (int n = 0; n < N; ++n) {
    std::set<std::set<Brick>> next;
    for (const auto& s : level)
      for (const auto& [b, ws] : members) {
        if (s.count(b)) continue;
        bool closed = std::all_of(ws.begin(), ws.end(), [&](const Word& w) {
          for (std::size_t len = 0; len < w.size(); ++len)
            if (!s.count(position(Word(w.begin(), w.begin() + static_cast<long>(len))))) return false;
          return true;
        });
        if (!closed) continue;
        auto t = s;
        t.insert(b);
        next.insert(t);
      }
    all.insert(next.begin(), next.end());
    level = std::move(next);
  }
  std::set<std::set<Brick>> enumerated;
  for (const auto& p : all_pyramids(N))
    EXPECT_TRUE(enumerated.insert({p.bricks().begin(), p.bricks().end()}).second);
  EXPECT_EQ(enumerated, all);
}

TEST(Enumerate, SeriesSmall) {
  auto v = pyramid_variables();
  EXPECT_EQ(pyramid_series(0), Series::one(v, 0));
  Series expected = Series::one(v, 2);
  for (auto e : {Exponents::whole({1}), Exponents::whole({1, 1}), Exponents::whole({1, 0, 1})}) expected.add_term(e, 1);
  EXPECT_EQ(pyramid_series(2), expected);
}

TEST(Enumerate, ShardsCoverOnce) {
  auto full = all_pyramids(8);
  std::set<std::vector<Brick>> seen;
  std::size_t total = 0;
  for (int s = 0; s < 3; ++s)
    for (const auto& p : all_pyramids(8, 3, s)) {
      ++total;
      seen.insert(p.bricks());
    }
  EXPECT_EQ(total, full.size());
  EXPECT_EQ(seen.size(), full.size());
  EXPECT_EQ(pyramid_series(8, 1), pyramid_series(8, 3));
}

TEST(Slices, ThreeBrickExample) {
  PyramidPartition p({{0, 0, 0}, {-1, 1, 0}, {1, 1, 0}});
  EXPECT_EQ(pyramid_slice(p, -1), (Partition2D{1}));
  EXPECT_EQ(pyramid_slice(p, 0), (Partition2D{1}));
  EXPECT_EQ(pyramid_slice(p, 1), (Partition2D{1}));
  EXPECT_TRUE(pyramid_slice(p, 2).empty());
  EXPECT_EQ(pyramid_slice(PyramidPartition({{0, 0, 0}}), 0), (Partition2D{1}));
  EXPECT_THROW(PyramidPartition({{1, 1, 0}}), std::invalid_argument);
}

TEST(Slices, ColourTableAgainstQuiver) {
  for (const auto& p : all_pyramids(8))
    for (const auto& b : p.bricks()) EXPECT_EQ(endpoint(representative(b)), slice_colour(brick_slice(b)));
}

TEST(Slices, InterlacingFamilies) {
  for (const auto& p : all_pyramids(8)) {
    for (int m = 0; m <= 8; ++m) {
      EXPECT_TRUE(interlaces(pyramid_slice(p, 2 * m), pyramid_slice(p, 2 * m + 1)));
      EXPECT_TRUE(interlaces(transpose(pyramid_slice(p, 2 * m + 1)), transpose(pyramid_slice(p, 2 * m + 2))));
      EXPECT_TRUE(interlaces(transpose(pyramid_slice(p, -2 * m)), transpose(pyramid_slice(p, -2 * m - 1))));
      EXPECT_TRUE(interlaces(pyramid_slice(p, -2 * m - 1), pyramid_slice(p, -2 * m - 2)));
    }
  }
}
