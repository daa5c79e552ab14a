#include <queue>
#include <set>

#include <gtest/gtest.h>

#include "boxcount/young.hpp"

using namespace boxcount;

namespace {

// Skew-shape oracle: cells of mu/lambda, edge-connected, no 2x2 block.
std::optional<int> strip_sign(const Partition2D& mu, const Partition2D& lambda) {
  std::set<std::pair<int, int>> cells;
  for (int i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    if (lambda.row(i) > mu.row(i)) return std::nullopt;
    for (int j = lambda.row(i); j < mu.row(i); ++j) cells.insert({i, j});
  }
  if (cells.empty()) return std::nullopt;
  for (auto [i, j] : cells)
    if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return std::nullopt;
  std::set<std::pair<int, int>> seen{*cells.begin()};
  std::queue<std::pair<int, int>> todo;
  todo.push(*cells.begin());
  while (!todo.empty()) {
    auto [i, j] = todo.front();
    todo.pop();
    for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
      if (cells.count(nb) && seen.insert(nb).second) todo.push(nb);
  }
  if (seen.size() != cells.size()) return std::nullopt;
  std::set<int> rows;
  for (auto [i, j] : cells) rows.insert(i);
  return rows.size() % 2 == 1 ? 1 : -1;
}

std::vector<SignedPartition> brute_additions(const Partition2D& lambda, int n) {
  std::vector<SignedPartition> out;
  for (const auto& mu : partitions_of(lambda.size() + n))
    if (auto s = strip_sign(mu, lambda)) out.push_back({mu, *s});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return out;
}

bool column_interlaces(const Partition2D& lambda, const Partition2D& mu) {
  auto lt = transpose(lambda), mt = transpose(mu);
  for (int j = 0; j < std::max(lt.length(), mt.length()); ++j) {
    int d = lt.row(j) - mt.row(j);
    if (d != 0 && d != 1) return false;
  }
  return true;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition2D::parse("6,3,2"), (Partition2D{6, 3, 2}));
  EXPECT_TRUE(Partition2D::parse("").empty());
  EXPECT_EQ(Partition2D::parse("6,3,2").to_string(), "6,3,2");
  EXPECT_THROW(Partition2D::parse("2,3"), std::invalid_argument);
  EXPECT_THROW(Partition2D::parse("2,,1"), std::invalid_argument);
  EXPECT_THROW(Partition2D::parse("2x"), std::invalid_argument);
  EXPECT_EQ((Partition2D{3, 1, 0, 0}), (Partition2D{3, 1}));
}

TEST(Partition, Counts) {
  std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]);
}

TEST(Interlacing, Examples) {
  EXPECT_TRUE(interlaces(Partition2D{6, 3, 2}, Partition2D{4, 2}));
  EXPECT_TRUE(interlaces(Partition2D{2, 2}, Partition2D{2}));
  EXPECT_FALSE(interlaces(Partition2D{3}, Partition2D{1, 1}));
  for (const auto& l : partitions_up_to(6)) EXPECT_TRUE(interlaces(l, l));
}

TEST(Interlacing, RowColumnEquivalence) {
  auto all = partitions_up_to(8);
  for (const auto& l : all)
    for (const auto& m : all) EXPECT_EQ(interlaces(l, m), column_interlaces(l, m)) << l.to_string() << " / " << m.to_string();
}

TEST(Interlacing, EnumerationMatchesPredicate) {
  auto all = partitions_up_to(8);
  for (const auto& m : partitions_up_to(6)) {
    std::set<std::vector<int>> above, expect_above;
    for_each_interlacing_above(m, 8, [&](const Partition2D& l) { EXPECT_TRUE(above.insert(l.rows()).second); });
    for (const auto& l : all)
      if (interlaces(l, m)) expect_above.insert(l.rows());
    EXPECT_EQ(above, expect_above) << m.to_string();
  }
  for (const auto& l : partitions_up_to(7)) {
    std::set<std::vector<int>> below, expect_below;
    for_each_interlacing_below(l, [&](const Partition2D& m) { EXPECT_TRUE(below.insert(m.rows()).second); });
    for (const auto& m : partitions_up_to(l.size()))
      if (interlaces(l, m)) expect_below.insert(m.rows());
    EXPECT_EQ(below, expect_below) << l.to_string();
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Partition2D{6, 3, 2}), (Partition2D{3, 3, 2, 1, 1, 1}));
  EXPECT_TRUE(transpose(Partition2D{}).empty());
  for (const auto& l : partitions_up_to(9)) EXPECT_EQ(transpose(transpose(l)), l);
}

TEST(BorderStrips, HooksOfSizeThree) {
  std::vector<SignedPartition> expected{{Partition2D{1, 1, 1}, 1}, {Partition2D{2, 1}, -1}, {Partition2D{3}, 1}};
  std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  EXPECT_EQ(border_strip_additions(Partition2D{}, 3), expected);
  EXPECT_EQ(brute_additions(Partition2D{}, 3), expected);
}

TEST(BorderStrips, OnSingleBox) {
  std::vector<SignedPartition> expected{{Partition2D{1, 1, 1}, -1}, {Partition2D{3}, 1}};
  std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  EXPECT_EQ(border_strip_additions(Partition2D{1}, 2), expected);
}

TEST(BorderStrips, LengthOneAddsCorners) {
  for (const auto& l : partitions_up_to(7)) {
    auto adds = border_strip_additions(l, 1);
    for (const auto& a : adds) {
      EXPECT_EQ(a.sign, 1);
      EXPECT_TRUE(interlaces(a.partition, l));
    }
    int corners = 0;
    for (int i = 0; i <= l.length(); ++i)
      if (i == 0 || l.row(i) < l.row(i - 1)) ++corners;
    EXPECT_EQ(static_cast<int>(adds.size()), corners);
  }
}

TEST(BorderStrips, AgreeWithSkewOracle) {
  for (const auto& l : partitions_up_to(6))
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(border_strip_additions(l, n), brute_additions(l, n)) << l.to_string() << " n=" << n;
}

TEST(BorderStrips, RemovalsAreAdjoint) {
  for (const auto& mu : partitions_up_to(9))
    for (int n = 1; n <= 5; ++n) {
      for (const auto& r : border_strip_removals(mu, n)) {
        auto adds = border_strip_additions(r.partition, n);
        auto it = std::find_if(adds.begin(), adds.end(), [&](const auto& a) { return a.partition == mu; });
        ASSERT_NE(it, adds.end());
        EXPECT_EQ(it->sign, r.sign);
      }
      std::size_t count = 0;
      for (const auto& l : mu.size() < n ? std::vector<Partition2D>{} : partitions_of(mu.size() - n)) {
        if (strip_sign(mu, l)) ++count;
      }
      EXPECT_EQ(border_strip_removals(mu, n).size(), count) << mu.to_string() << " n=" << n;
    }
}

TEST(BorderStrips, InvalidLength) {
  EXPECT_THROW(border_strip_additions(Partition2D{}, 0), std::invalid_argument);
}
