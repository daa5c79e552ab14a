#include <gtest/gtest.h>

#include <random>

#include "boxcount/dtsign.hpp"
#include "boxcount/formulas.hpp"

using namespace boxcount;

namespace {

std::vector<Diagram3D> diagrams_up_to(int N) {
  std::vector<Diagram3D> out;
  enumerate_diagrams(N, [&](const SliceChain& s) { out.push_back(slices_to_diagram(s)); });
  return out;
}

const std::vector<std::string> kGroups{"zn:2", "zn:3", "zn:4", "zn:5", "klein", "z3diag"};

}  // namespace

TEST(Characters, QChar) {
  EXPECT_EQ(q_char(Diagram3D({{0, 0, 0}})), (ThreeChar{{{0, 0, 0}, 1}}));
  EXPECT_EQ(q_char(Diagram3D({{0, 0, 0}, {1, 0, 0}})), (ThreeChar{{{0, 0, 0}, 1}, {{1, 0, 0}, 1}}));
  for (const auto& d : diagrams_up_to(5)) {
    Integer total = 0;
    for (const auto& [e, c] : q_char(d)) total += c;
    EXPECT_EQ(total, d.size());
  }
}

TEST(Characters, VCharSingleBox) {
  LaurentChar expected;
  expected.add(0, 0, 2);
  expected.add(-1, -1, 1);
  expected.add(-1, 0, -1);
  expected.add(0, -1, -1);
  EXPECT_EQ(v_char(Diagram3D({{0, 0, 0}})), expected);
  EXPECT_TRUE(v_char(Diagram3D()).terms().empty());
}

TEST(Characters, EliminatesT3) {
  auto v = eliminate_t3(q_char(Diagram3D({{0, 0, 0}, {0, 0, 1}})));
  EXPECT_EQ(v.coefficient(-1, -1), 1);
  EXPECT_EQ(v.coefficient(0, 0), 1);
}

TEST(Characters, ConstantTermEven) {
  for (const auto& d : diagrams_up_to(6)) EXPECT_EQ(v_char(d).coefficient(0, 0) % 2, 0) << d.size();
}

TEST(Characters, SelfDualPairsEven) {
  for (const auto& d : diagrams_up_to(5)) {
    auto v = v_char(d);
    auto w = v - v.dual();
    for (const auto& [k, c] : w.terms()) EXPECT_EQ((c + w.coefficient(-k.first, -k.second)) % 2, 0);
  }
}

TEST(GroupRing, CyclicPowers) {
  ModTwoGroupRing l(GroupSpec::cyclic(3));
  l.add(1);
  ModTwoGroupRing one(GroupSpec::cyclic(3));
  one.add(0);
  EXPECT_EQ(l * l * l, one);
  EXPECT_EQ((l + one) * (l + one), l * l + one);
  EXPECT_THROW(l * ModTwoGroupRing(GroupSpec::klein()), std::invalid_argument);
}

TEST(GroupRing, KleinSquaringShortcut) {
  for (int mask = 0; mask < 16; ++mask) {
    ModTwoGroupRing x(GroupSpec::klein());
    for (int g = 0; g < 4; ++g)
      if (mask >> g & 1) x.add(g);
    EXPECT_EQ(x.square(), x * x) << mask;
  }
}

TEST(Parity, SingleBox) {
  Diagram3D box({{0, 0, 0}});
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(invariant_parity(box, {ColouringKind::cyclic, n}), 1);
    EXPECT_EQ(sign_closed_form(box, {ColouringKind::cyclic, n}), -1);
  }
  EXPECT_EQ(invariant_parity(box, parse_group("klein")), 0);
  EXPECT_EQ(sign_closed_form(box, parse_group("klein")), 1);
  EXPECT_EQ(sign_closed_form(box, parse_group("z3diag")), 1);
  EXPECT_EQ(invariant_parity(Diagram3D(), parse_group("zn:3")), 0);
}

TEST(Parity, MatchesClosedForms) {
  auto all = diagrams_up_to(7);
  for (const auto& name : kGroups) {
    auto g = parse_group(name);
    for (const auto& d : all) ASSERT_EQ(invariant_parity(d, g) ? -1 : 1, sign_closed_form(d, g)) << name;
  }
}

TEST(Parity, RingComputationAgrees) {
  auto all = diagrams_up_to(6);
  for (const auto& name : kGroups) {
    auto g = parse_group(name);
    for (const auto& d : all) ASSERT_EQ(invariant_parity_in_ring(d, g), invariant_parity(d, g)) << name;
  }
}

TEST(SignedSeries, SignFlipTheorem) {
  const int N = 7;
  for (const char* name : {"zn:2", "zn:3", "klein"}) {
    auto g = parse_group(name);
    auto signed_series = dt_signed_series(g, N);
    auto plain = coloured_series(g.colouring(), N);
    auto flipped = g.kind == ColouringKind::klein ? substitute_signs(plain, std::vector<std::size_t>{1, 2, 3})
                                                  : substitute_signs(plain, std::vector<std::size_t>{0});
    EXPECT_EQ(signed_series, flipped) << name;
    EXPECT_EQ(signed_series, dt_orbifold(g, N)) << name;
  }
}

TEST(SignedSeries, SmallCases) {
  auto g = parse_group("zn:2");
  EXPECT_EQ(dt_signed_series(g, 0), Series::one(g.colouring().group().variables(), 0));
  EXPECT_EQ(dt_signed_series(g, 2).coefficient(Exponents::whole({1, 0})), -1);
  EXPECT_THROW(dt_signed_series(parse_group("z3diag"), 2), std::invalid_argument);
}
