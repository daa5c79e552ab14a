#pragma once

// Named operator identities checked on every basis partition up to a cutoff.

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boxcount/fock.hpp"

namespace boxcount {

struct IdentityCheck {
  std::string name;
  /// Empty on success, otherwise a description of the first mismatch.
  std::function<std::optional<std::string>()> run;
};

namespace detail {

inline std::optional<std::string> describe(const std::optional<CommutatorMismatch>& m) {
  if (!m) return std::nullopt;
  std::ostringstream os;
  os << "on " << m->input << ", coefficient of " << m->output << ": lhs " << m->lhs.to_string() << ", rhs "
     << m->rhs.to_string();
  return os.str();
}

inline IdentityCheck identity(std::string name, OpString lhs, OpString rhs, Series scalar, int cutoff) {
  return {std::move(name), [=] { return describe(commutator_mismatch(lhs, rhs, scalar, cutoff)); }};
}

inline Series one_minus_power(const Variables& v, int N, const Monomial& m, int power) {
  Series s = Series::one(v, N);
  s.mul_one_minus(m, power);
  return s;
}

}  // namespace detail

/// [alpha_n, alpha_{-m}] = n delta_{n,m} for 1 <= n, m <= nmax on partitions up to cutoff.
inline IdentityCheck heisenberg_check(int nmax, int cutoff) {
  return {"heisenberg", [=]() -> std::optional<std::string> {
            auto v = make_variables({});
            for (const auto& mu : partitions_up_to(cutoff))
              for (int n = 1; n <= nmax; ++n)
                for (int m = 1; m <= nmax; ++m) {
                  auto in = FockState::basis(v, 0, mu);
                  FockState diff = apply_alpha(n, apply_alpha(-m, in));
                  const FockState other = apply_alpha(-m, apply_alpha(n, in));
                  for (const auto& [p, a] : other.amplitudes()) diff.add(p, -a);
                  FockState expected(v, 0);
                  if (n == m) expected.add(mu, Series::constant(v, 0, n));
                  if (!(diff == expected))
                    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " on (" + mu.to_string() + ")";
                }
            return std::nullopt;
          }};
}

/// <lambda| Gamma_-(q) |mu> = q^{|lambda|-|mu|} [lambda > mu], and the primed
/// version with transposes, for all |lambda|, |mu| <= cutoff.
inline IdentityCheck skew_schur_check(int cutoff) {
  return {"skew-schur", [=]() -> std::optional<std::string> {
            auto v = make_variables({"q"});
            const auto q = Monomial::variable(0);
            const auto all = partitions_up_to(cutoff);
            for (bool primed : {false, true})
              for (const auto& mu : all) {
                auto out = apply_gamma(Direction::minus, primed, q, FockState::basis(v, cutoff, mu));
                for (const auto& lambda : all) {
                  const bool rel = primed ? interlaces(transpose(lambda), transpose(mu)) : interlaces(lambda, mu);
                  Series expected = rel ? Series::monomial(v, cutoff, q.pow(lambda.size() - mu.size())) : Series(v, cutoff);
                  if (!(out.amplitude(lambda) == expected))
                    return std::string(primed ? "primed " : "") + "(" + lambda.to_string() + ")/(" + mu.to_string() + ")";
                }
              }
            return std::nullopt;
          }};
}

/// Commutation relations among Gamma, Gamma', E, Q_g and Q_gh, and the
/// normalised products of the Z_n and pyramid transfer computations.
inline std::vector<IdentityCheck> commutator_checks(int cutoff) {
  using D = Direction;
  std::vector<IdentityCheck> out;
  const int N = cutoff + 2;

  {
    auto v = make_variables({"a", "b"});
    auto a = Monomial::variable(0), b = Monomial::variable(1);
    auto inv = detail::one_minus_power(v, N, a * b, -1);
    auto plus = detail::one_minus_power(v, N, -(a * b), 1);
    out.push_back(detail::identity("[G+(a), G-(b)] = 1/(1-ab)", {Op::gamma(D::plus, a), Op::gamma(D::minus, b)},
                                   {Op::gamma(D::minus, b), Op::gamma(D::plus, a)}, inv, cutoff));
    out.push_back(detail::identity("[G'+(a), G'-(b)] = 1/(1-ab)",
                                   {Op::gamma_prime(D::plus, a), Op::gamma_prime(D::minus, b)},
                                   {Op::gamma_prime(D::minus, b), Op::gamma_prime(D::plus, a)}, inv, cutoff));
    out.push_back(detail::identity("[G+(a), G'-(b)] = 1+ab", {Op::gamma(D::plus, a), Op::gamma_prime(D::minus, b)},
                                   {Op::gamma_prime(D::minus, b), Op::gamma(D::plus, a)}, plus, cutoff));
    out.push_back(detail::identity("[G'+(a), G-(b)] = 1+ab", {Op::gamma_prime(D::plus, a), Op::gamma(D::minus, b)},
                                   {Op::gamma(D::minus, b), Op::gamma_prime(D::plus, a)}, plus, cutoff));
  }
  {
    auto v = make_variables({"x", "qg"});
    auto x = Monomial::variable(0), g = Monomial::variable(1);
    auto one = Series::one(v, N);
    for (bool primed : {false, true}) {
      auto G = [&](D d, const Monomial& m) { return primed ? Op::gamma_prime(d, m) : Op::gamma(d, m); };
      const std::string p = primed ? "'" : "";
      out.push_back(detail::identity("G" + p + "+(x) Q_g = Q_g G" + p + "+(x q_g)", {G(D::plus, x), Op::weight(g)},
                                     {Op::weight(g), G(D::plus, x * g)}, one, cutoff));
      out.push_back(detail::identity("Q_g G" + p + "-(x) = G" + p + "-(x q_g) Q_g", {Op::weight(g), G(D::minus, x)},
                                     {G(D::minus, x * g), Op::weight(g)}, one, cutoff));
    }
  }
  {
    auto v = make_variables({"x", "y"});
    auto x = Monomial::variable(0), y = Monomial::variable(1);
    auto one = Series::one(v, N);
    auto xy2 = (x * y).pow(2);
    auto inv = detail::one_minus_power(v, N, xy2, -1);
    auto fwd = detail::one_minus_power(v, N, xy2, 1);
    for (auto d : {D::plus, D::minus}) {
      const std::string s = d == D::plus ? "+" : "-";
      out.push_back(detail::identity("G" + s + "(x) = G'" + s + "(x) E" + s + "(x)", {Op::gamma(d, x)},
                                     {Op::gamma_prime(d, x), Op::E(d, x)}, one, cutoff));
    }
    out.push_back(detail::identity("[E+(x), G+(y)] = 1", {Op::E(D::plus, x), Op::gamma(D::plus, y)},
                                   {Op::gamma(D::plus, y), Op::E(D::plus, x)}, one, cutoff));
    out.push_back(detail::identity("[E-(x), G-(y)] = 1", {Op::E(D::minus, x), Op::gamma(D::minus, y)},
                                   {Op::gamma(D::minus, y), Op::E(D::minus, x)}, one, cutoff));
    out.push_back(detail::identity("E+(x) G-(y) = G-(y) E+(x) / (1-(xy)^2)", {Op::E(D::plus, x), Op::gamma(D::minus, y)},
                                   {Op::gamma(D::minus, y), Op::E(D::plus, x)}, inv, cutoff));
    out.push_back(detail::identity("G+(x) E-(y) = E-(y) G+(x) / (1-(xy)^2)", {Op::gamma(D::plus, x), Op::E(D::minus, y)},
                                   {Op::E(D::minus, y), Op::gamma(D::plus, x)}, inv, cutoff));
    out.push_back(detail::identity("G'+(x) E-(y) = (1-(xy)^2) E-(y) G'+(x)",
                                   {Op::gamma_prime(D::plus, x), Op::E(D::minus, y)},
                                   {Op::E(D::minus, y), Op::gamma_prime(D::plus, x)}, fwd, cutoff));
  }
  {
    auto v = make_variables({"x", "qg", "qh"});
    auto x = Monomial::variable(0), g = Monomial::variable(1), h = Monomial::variable(2);
    auto root = (g * h).sqrt();
    auto one = Series::one(v, N + 2);
    out.push_back(detail::identity("Q_gh E-(x) = E-(x sqrt(q_g q_h)) Q_gh", {Op::checkerboard(g, h), Op::E(D::minus, x)},
                                   {Op::E(D::minus, x * root), Op::checkerboard(g, h)}, one, cutoff));
    out.push_back(detail::identity("E+(x) Q_gh = Q_gh E+(x sqrt(q_g q_h))", {Op::E(D::plus, x), Op::checkerboard(g, h)},
                                   {Op::checkerboard(g, h), Op::E(D::plus, x * root)}, one, cutoff));
  }
  for (int n : {2, 3}) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    names.push_back("x");
    names.push_back("y");
    auto v = make_variables(names);
    auto x = Monomial::variable(n), y = Monomial::variable(n + 1);
    const int T = n + 3;
    out.push_back(detail::identity("Z_" + std::to_string(n) + ": A+(x) A-(y) = C(x,y) A-(y) A+(x)",
                                   concat(zn_A(D::plus, n, x), zn_A(D::minus, n, y)),
                                   concat(zn_A(D::minus, n, y), zn_A(D::plus, n, x)), zn_commutator(v, n, x * y, T),
                                   cutoff));
  }
  {
    auto v = make_variables({"q0", "qa", "qb", "qc", "x", "y"});
    auto x = Monomial::variable(4), y = Monomial::variable(5);
    const int T = 2 * cutoff + 2;
    out.push_back(detail::identity("pyramid: A'+(x) A'-(y) = eight-factor scalar A'-(y) A'+(x)",
                                   concat(pyramid_A(D::plus, x), pyramid_A(D::minus, y)),
                                   concat(pyramid_A(D::minus, y), pyramid_A(D::plus, x)), pyramid_commutator(v, x * y, T),
                                   cutoff));
  }
  return out;
}

/// "heisenberg", "skew-schur", "commutators" or "all".
inline std::vector<IdentityCheck> operator_suite(const std::string& suite, int cutoff) {
  std::vector<IdentityCheck> out;
  const bool all = suite == "all";
  if (all || suite == "heisenberg") out.push_back(heisenberg_check(4, cutoff + 2));
  if (all || suite == "skew-schur") out.push_back(skew_schur_check(cutoff));
  if (all || suite == "commutators") {
    auto c = commutator_checks(cutoff);
    out.insert(out.end(), c.begin(), c.end());
  }
  if (out.empty()) throw std::invalid_argument("unknown operator suite '" + suite + "'");
  return out;
}

}  // namespace boxcount
