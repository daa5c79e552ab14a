#include <random>

#include <gtest/gtest.h>

#include "boxcount/series.hpp"

using namespace boxcount;

namespace {

Variables single() { return make_variables({"q"}); }
Variables klein_vars() { return make_variables({"q0", "qa", "qb", "qc"}); }

Series univariate(const Variables& v, int N, std::vector<long> coeffs) {
  Series s(v, N);
  for (std::size_t d = 0; d < coeffs.size(); ++d) s.add_term(Exponents::unit(0, static_cast<int>(d)), coeffs[d]);
  return s;
}

std::vector<Integer> coefficients(const Series& s) {
  std::vector<Integer> out(s.truncation() + 1);
  for (const auto& [e, c] : s.terms()) out[e.whole(0)] = c;
  return out;
}

Series random_series(const Variables& v, int N, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 2), coef(-5, 5);
  Series s(v, N);
  for (int t = 0; t < 12; ++t) {
    Exponents e;
    for (std::size_t i = 0; i < v->size(); ++i) e.set_half(i, 2 * exp(rng));
    if (e.half_degree() <= 2 * N) s.add_term(e, coef(rng));
  }
  return s;
}

}  // namespace

TEST(Series, DifferenceOfSquares) {
  auto v = single();
  EXPECT_EQ(univariate(v, 4, {1, 1}) * univariate(v, 4, {1, -1}), univariate(v, 4, {1, 0, -1}));
}

TEST(Series, MultiplicativeIdentity) {
  auto v = klein_vars();
  std::mt19937 rng(7);
  auto s = random_series(v, 5, rng);
  EXPECT_EQ(s * Series::one(v, 5), s);
}

TEST(Series, SquareOfTrinomialTruncated) {
  auto v = single();
  auto a = univariate(v, 2, {1, 1, 1});
  // hand convolution: c_d = #{(i,j): i+j=d, 0<=i,j<=2}
  std::vector<long> expected;
  for (int d = 0; d <= 2; ++d) {
    long c = 0;
    for (int i = 0; i <= 2; ++i)
      if (d - i >= 0 && d - i <= 2) ++c;
    expected.push_back(c);
  }
  EXPECT_EQ(a * a, univariate(v, 2, expected));
  EXPECT_EQ(a * a, univariate(v, 2, {1, 2, 3}));
}

TEST(Series, TruncationIsMinimum) {
  auto v = single();
  auto p = univariate(v, 3, {1, 1}) * univariate(v, 5, {1, 1});
  EXPECT_EQ(p.truncation(), 3);
  EXPECT_EQ((univariate(v, 3, {1}) + univariate(v, 2, {1})).truncation(), 2);
}

TEST(Series, VariableMismatchThrows) {
  auto a = Series::one(single(), 2);
  auto b = Series::one(make_variables({"t"}), 2);
  EXPECT_THROW((void)(a * b), std::invalid_argument);
  EXPECT_THROW((void)(a + b), std::invalid_argument);
}

TEST(Series, GeometricInverse) {
  auto v = single();
  auto inv = invert_unit(univariate(v, 6, {1, -1}));
  EXPECT_EQ(inv, univariate(v, 6, {1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(invert_unit(Series::one(v, 6)), Series::one(v, 6));
}

TEST(Series, FibonacciInverse) {
  auto v = single();
  const int N = 12;
  std::vector<long> fib{1, 1};
  while (static_cast<int>(fib.size()) <= N) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  EXPECT_EQ(invert_unit(univariate(v, N, {1, -1, -1})), univariate(v, N, fib));
  EXPECT_EQ(invert_unit(univariate(v, 4, {1, -1, -1})), univariate(v, 4, {1, 1, 2, 3, 5}));
}

TEST(Series, InverseOfNegativeUnit) {
  auto v = single();
  auto a = univariate(v, 5, {-1, 2, 3});
  EXPECT_EQ(a * invert_unit(a), Series::one(v, 5));
}

TEST(Series, NonUnitConstantThrows) {
  auto v = single();
  EXPECT_THROW(invert_unit(univariate(v, 3, {2, 1})), std::domain_error);
  EXPECT_THROW(invert_unit(univariate(v, 3, {0, 1})), std::domain_error);
}

TEST(Series, RingAxiomsOnRandomTriples) {
  auto v = klein_vars();
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = random_series(v, 6, rng), b = random_series(v, 6, rng), c = random_series(v, 6, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Series, InverseOnRandomUnits) {
  auto v = klein_vars();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(v, 6, rng);
    a.add_term(Exponents{}, Integer(trial % 2 ? 1 : -1) - a.constant_term());
    EXPECT_EQ(a * invert_unit(a), Series::one(v, 6));
  }
}

TEST(Series, MulOneMinusMatchesProducts) {
  auto v = klein_vars();
  std::mt19937 rng(5);
  auto m = Monomial::of(*v, {{"qa", 1}, {"qb", 1}}, -1);
  auto factor = Series::one(v, 7) - Series::monomial(v, 7, m);
  for (int trial = 0; trial < 5; ++trial) {
    auto s = random_series(v, 7, rng);
    auto up = s;
    up.mul_one_minus(m, 2);
    EXPECT_EQ(up, s * factor * factor);
    auto down = s;
    down.mul_one_minus(m, -3);
    EXPECT_EQ(down, s * invert_unit(factor * factor * factor));
  }
}

TEST(MacMahon, TrivialPlanePartitionCounts) {
  // 1,1,3,6,13,24 is also checked against the enumerator in the enum3d tests
  auto v = single();
  EXPECT_EQ(coefficients(mac_M(v, Monomial::one(), Monomial::variable(0), 5)),
            (std::vector<Integer>{1, 1, 3, 6, 13, 24}));
}

TEST(MacMahon, ProductOracle) {
  // product of explicit (1 - q^n)^n polynomials inverted term by term
  auto v = single();
  const int N = 10;
  Series prod = Series::one(v, N);
  for (int n = 1; n <= N; ++n) {
    auto f = Series::one(v, N) - Series::monomial(v, N, Monomial::variable(0, n));
    for (int r = 0; r < n; ++r) prod = prod * invert_unit(f);
  }
  EXPECT_EQ(mac_M(v, Monomial::one(), Monomial::variable(0), N), prod);
}

TEST(MacMahon, ConstantTermIsOne) {
  auto v = klein_vars();
  auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
  EXPECT_EQ(mac_M(v, Monomial::of(*v, {{"qa", 1}}), q, 6).constant_term(), 1);
  EXPECT_EQ(mac_Mtilde(v, Monomial::of(*v, {{"qa", 1}, {"qb", 1}}), q, 6).constant_term(), 1);
}

TEST(MacMahon, SignedArgumentLowestTerm) {
  auto v = klein_vars();
  auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
  auto s = mac_M(v, Monomial::of(*v, {{"qa", 1}}, -1), q, 8);
  // lowest non-constant term sits in degree 5
  auto it = std::next(s.terms().begin());
  EXPECT_EQ(it->first, Exponents::whole({1, 2, 1, 1}));
  EXPECT_EQ(it->second, -1);
  for (const auto& [e, c] : s.terms()) EXPECT_TRUE(e.half_degree() == 0 || e.half_degree() >= 10);
}

TEST(MacMahon, NegativeExponentRejected) {
  auto v = klein_vars();
  auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}});
  EXPECT_THROW(mac_M(v, Monomial::of(*v, {{"qb", -1}}), q, 4), std::domain_error);
  EXPECT_THROW(mac_Mtilde(v, Monomial::of(*v, {{"qb", 1}}), q, 4), std::domain_error);
  EXPECT_THROW(mac_M(v, Monomial::one(), Monomial::one(), 4), std::domain_error);
}

TEST(MacMahon, DegenerateTildeRejected) {
  // x = q makes the n = 1 factor of M(x^-1, q) equal to 1 - 1
  auto v = single();
  EXPECT_THROW(mac_Mtilde(v, Monomial::variable(0), Monomial::variable(0), 4), std::domain_error);
}

TEST(MacMahon, TildeDegreeTwoCoefficients) {
  auto v = klein_vars();
  auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
  auto s = mac_Mtilde(v, Monomial::of(*v, {{"qa", 1}, {"qb", 1}}), q, 6);
  // the n = 1 factor of M(x^-1, q) is (1 - q0 qc)^-1
  EXPECT_EQ(s.coefficient(Exponents::whole({1, 0, 0, 1})), 1);
  EXPECT_EQ(s.coefficient(Exponents::whole({0, 1, 1, 0})), 0);
  for (const auto& [e, c] : s.terms()) {
    if (e.half_degree() == 4) {
      EXPECT_EQ(e, Exponents::whole({1, 0, 0, 1}));
    }
  }
}

TEST(MacMahon, TildeSymmetry) {
  auto v = klein_vars();
  auto q = Monomial::of(*v, {{"q0", 1}, {"qa", 1}, {"qb", 1}, {"qc", 1}});
  for (auto x : {Monomial::of(*v, {{"qa", 1}, {"qb", 1}}), Monomial::of(*v, {{"qa", 1}}, -1),
                 Monomial::of(*v, {{"qa", 1}, {"qb", 1}, {"qc", 1}}, -1)}) {
    auto forward = mac_M(v, x, q, 9) * mac_M(v, x.inverse(), q, 9);
    auto swapped = mac_M(v, x.inverse(), q, 9) * mac_M(v, x, q, 9);
    EXPECT_EQ(mac_Mtilde(v, x, q, 9), forward);
    EXPECT_EQ(forward, swapped);
  }
}

TEST(Signs, Substitution) {
  auto v = klein_vars();
  Series s(v, 3);
  s.add_term(Exponents::whole({1}), 1);
  s.add_term(Exponents::whole({1, 1}), 1);
  EXPECT_EQ(substitute_signs(s, std::vector<std::string>{}), s);
  EXPECT_EQ(substitute_signs(s, std::vector<std::string>{"q0"}), -s);
  std::mt19937 rng(3);
  auto r = random_series(v, 6, rng);
  std::vector<std::string> flips{"qa", "qc"};
  EXPECT_EQ(substitute_signs(substitute_signs(r, flips), flips), r);
}

TEST(Exponents, CanonicalOrder) {
  EXPECT_LT(Exponents::whole({0, 5}), Exponents::whole({3, 3}));
  EXPECT_LT(Exponents::whole({0, 1}), Exponents::whole({1, 0}));
  EXPECT_THROW(Exponents::unit(0, 20000), std::overflow_error);
}

TEST(Exponents, HalfUnits) {
  auto m = Monomial::of(*klein_vars(), {{"qa", 1}, {"qb", 1}});
  Monomial half;
  half.exponents.set_half(1, 1);
  half.exponents.set_half(2, 1);
  EXPECT_EQ(m.sqrt().exponents, half.exponents);
  EXPECT_FALSE(half.exponents.is_integral());
  EXPECT_THROW((void)half.exponents.whole(1), std::domain_error);
  EXPECT_THROW((void)Monomial::of(*klein_vars(), {{"qa", 1}}, -1).sqrt(), std::domain_error);
}

TEST(Series, FirstDifference) {
  auto v = single();
  auto a = univariate(v, 4, {1, 2, 3});
  auto b = univariate(v, 4, {1, 2, 4});
  auto d = first_difference(a, b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->exponents, Exponents::whole({2}));
  EXPECT_EQ(d->left, 3);
  EXPECT_EQ(d->right, 4);
  EXPECT_FALSE(first_difference(a, a).has_value());
}

TEST(Series, RationalConversion) {
  auto v = single();
  BasicSeries<Rational> r(v, 3);
  r.add_term(Exponents::whole({1}), Rational(1, 2));
  EXPECT_THROW(convert_series<Integer>(r), std::domain_error);
  r.add_term(Exponents::whole({1}), Rational(1, 2));
  EXPECT_EQ(convert_series<Integer>(r), univariate(v, 3, {0, 1}));
}

TEST(Series, ToString) {
  auto v = single();
  EXPECT_EQ(univariate(v, 3, {1, -2, 1}).to_string(), "1 - 2*q + q^2");
  EXPECT_EQ(Series(v, 2).to_string(), "0");
}
