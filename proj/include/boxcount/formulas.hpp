#pragma once

// Closed product formulas for the coloured and DT partition functions, and
// the crepant resolution identity as a series comparison.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxcount/colouring.hpp"
#include "boxcount/series.hpp"

namespace boxcount {

namespace detail {

inline Monomial product_of(const std::vector<std::size_t>& vars, int sign = 1) {
  Monomial m;
  for (auto v : vars) m = m * Monomial::variable(v);
  m.sign = sign;
  return m;
}

inline Monomial run(int a, int b) {
  Monomial m;
  for (int i = a; i <= b; ++i) m = m * Monomial::variable(static_cast<std::size_t>(i));
  return m;
}

inline Series power(const Series& s, int e) {
  Series base = e < 0 ? invert_unit(s) : s;
  Series out = Series::one(s.variables_ptr(), s.truncation());
  for (int i = 0; i < std::abs(e); ++i) out = out * base;
  return out;
}

// The curve classes of the Klein resolution with their Gopakumar-Vafa sign:
// +1 for the classes that appear in the numerator.
struct KleinClass {
  std::vector<std::size_t> colours;
  int exponent;
};

inline std::vector<KleinClass> klein_classes() {
  using namespace klein;
  return {{{a, b}, 1}, {{a, c}, 1}, {{b, c}, 1}, {{a}, -1}, {{b}, -1}, {{c}, -1}, {{a, b, c}, -1}};
}

}  // namespace detail

/// M(1,q)^n prod_{0<a<=b<n} M~(q_[a,b], q) with q = q_0 ... q_{n-1}.
inline Series closed_Zn(int n, int N) {
  auto vars = GroupSpec::cyclic(n).variables();
  const Monomial q = detail::run(0, n - 1);
  Series out = detail::power(mac_M(vars, Monomial::one(), q, N), n);
  for (int a = 1; a < n; ++a)
    for (int b = a; b < n; ++b) out = out * mac_Mtilde(vars, detail::run(a, b), q, N);
  return out;
}

namespace detail {

inline Series klein_like(int N, bool with_ab) {
  using namespace klein;
  auto vars = GroupSpec::klein().variables();
  const Monomial q = run(0, 3);
  Series out = power(mac_M(vars, Monomial::one(), q, N), 4);
  for (const auto& cls : klein_classes()) {
    if (!with_ab && cls.colours == std::vector<std::size_t>{a, b}) continue;
    // denominator arguments carry a minus sign
    Series f = mac_Mtilde(vars, product_of(cls.colours, cls.exponent > 0 ? 1 : -1), q, N);
    out = out * (cls.exponent > 0 ? f : invert_unit(f));
  }
  return out;
}

}  // namespace detail

/// M(1,q)^4 M~(qa qb) M~(qa qc) M~(qb qc) / (M~(-qa) M~(-qb) M~(-qc) M~(-qa qb qc)).
inline Series closed_Klein(int N) { return detail::klein_like(N, true); }

/// The Klein product without the M~(qa qb) factor.
inline Series closed_pyramid(int N) { return detail::klein_like(N, false); }

inline void require_abelian_choice(const GroupChoice& g) {
  if (g.kind == ColouringKind::z3_diagonal) throw std::invalid_argument("no product formula for the diagonal Z_3 action");
}

/// Orbifold DT series: the coloured closed form with q_0 (Z_n) or qa, qb, qc (Klein) negated.
inline Series dt_orbifold(const GroupChoice& g, int N) {
  require_abelian_choice(g);
  if (g.kind == ColouringKind::klein) return substitute_signs(closed_Klein(N), std::vector<std::size_t>{1, 2, 3});
  return substitute_signs(closed_Zn(g.n, N), std::vector<std::size_t>{0});
}

/// Variables of the resolution: one per curve class, then the Euler variable q.
inline Variables resolution_variables(const GroupChoice& g) {
  require_abelian_choice(g);
  std::vector<std::string> names;
  if (g.kind == ColouringKind::klein) {
    names = {"va", "vb", "vc"};
  } else {
    for (int i = 1; i < g.n; ++i) names.push_back("v" + std::to_string(i));
  }
  names.push_back("q");
  return make_variables(names);
}

/// Curve classes of the resolution as products of curve variables, with the
/// power of M(v^beta, -q) each contributes.
struct CurveFactor {
  std::vector<std::size_t> curve_variables;
  int exponent;
};

inline std::vector<CurveFactor> curve_factors(const GroupChoice& g) {
  require_abelian_choice(g);
  std::vector<CurveFactor> out;
  if (g.kind == ColouringKind::klein) {
    // curve variable i stands for colour i + 1
    for (const auto& cls : detail::klein_classes()) {
      CurveFactor f{{}, cls.exponent};
      for (auto c : cls.colours) f.curve_variables.push_back(c - 1);
      out.push_back(f);
    }
    return out;
  }
  for (int a = 1; a < g.n; ++a)
    for (int b = a; b < g.n; ++b) {
      CurveFactor f{{}, 1};
      for (int i = a; i <= b; ++i) f.curve_variables.push_back(static_cast<std::size_t>(i - 1));
      out.push_back(f);
    }
  return out;
}

inline int euler_characteristic(const GroupChoice& g) {
  require_abelian_choice(g);
  return g.kind == ColouringKind::klein ? 4 : g.n;
}

/// Resolution DT series M(1,-q)^e prod M(v^beta, -q)^(+-1) in resolution_variables.
inline Series dt_resolution(const GroupChoice& g, int N) {
  auto vars = resolution_variables(g);
  const Monomial minus_q{Exponents::unit(vars->size() - 1), -1};
  Series out = detail::power(mac_M(vars, Monomial::one(), minus_q, N), euler_characteristic(g));
  for (const auto& f : curve_factors(g)) {
    Monomial v;
    for (auto i : f.curve_variables) v = v * Monomial::variable(i);
    out = out * detail::power(mac_M(vars, v, minus_q, N), f.exponent);
  }
  return out;
}

/// Right-hand side of the crepant resolution identity in orbifold variables:
/// M(1,-q)^-e Z_Y(q, v) Z_Y(q, v^-1) with v_i = q_i and q = q_0 q_1 ..., each
/// pair M(v^beta,-q) M(v^-beta,-q) forming M~(v^beta, -q).
inline Series crc_rhs(const GroupChoice& g, int N) {
  require_abelian_choice(g);
  auto vars = g.colouring().group().variables();
  const int order = static_cast<int>(vars->size());
  const Monomial minus_q = -detail::run(0, order - 1);
  // M(1,-q)^-e M(1,-q)^e M(1,-q)^e
  Series out = detail::power(mac_M(vars, Monomial::one(), minus_q, N), euler_characteristic(g));
  for (const auto& f : curve_factors(g)) {
    Monomial v;
    for (auto i : f.curve_variables) v = v * Monomial::variable(i + 1);
    out = out * detail::power(mac_Mtilde(vars, v, minus_q, N), f.exponent);
  }
  return out;
}

inline bool crc_check(const GroupChoice& g, int N) { return dt_orbifold(g, N) == crc_rhs(g, N); }

/// A named closed form: "zn:3", "klein", "pyramid", "dt-orb:<group>", "dt-res:<group>".
struct FormulaSpec {
  enum class Which { zn, klein, pyramid, dt_orbifold, dt_resolution };
  Which which = Which::zn;
  GroupChoice group;

  static FormulaSpec parse(std::string_view text) {
    auto abelian = [&](std::string_view rest) {
      GroupChoice g = parse_group(rest);
      require_abelian_choice(g);
      return g;
    };
    if (text == "pyramid") return {Which::pyramid, {ColouringKind::klein, 4}};
    if (text.substr(0, 7) == "dt-orb:") return {Which::dt_orbifold, abelian(text.substr(7))};
    if (text.substr(0, 7) == "dt-res:") return {Which::dt_resolution, abelian(text.substr(7))};
    GroupChoice g = abelian(text);
    return {g.kind == ColouringKind::klein ? Which::klein : Which::zn, g};
  }

  Series evaluate(int N) const {
    if (N < 0) throw std::invalid_argument("negative degree");
    switch (which) {
      case Which::klein: return closed_Klein(N);
      case Which::pyramid: return closed_pyramid(N);
      case Which::dt_orbifold: return dt_orbifold(group, N);
      case Which::dt_resolution: return dt_resolution(group, N);
      default: return closed_Zn(group.n, N);
    }
  }
};

}  // namespace boxcount
