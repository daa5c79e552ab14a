#pragma once

// Fixed-point signs for orbifold DT counting: torus characters of a 3D
// diagram, their restriction to the group, and the parity of the invariant part.

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcount/colouring.hpp"
#include "boxcount/enum3d.hpp"
#include "boxcount/series.hpp"

namespace boxcount {

/// Character in t1, t2, t3 before eliminating t3.
using ThreeChar = std::map<std::array<int, 3>, Integer>;

/// Finitely supported Laurent polynomial in t1, t2.
class LaurentChar {
 public:
  using Key = std::pair<int, int>;

  LaurentChar() = default;
  static LaurentChar monomial(int e1, int e2, Integer c = 1) {
    LaurentChar r;
    r.add(e1, e2, c);
    return r;
  }

  const std::map<Key, Integer>& terms() const { return terms_; }
  Integer coefficient(int e1, int e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  void add(int e1, int e2, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({e1, e2}, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  /// t_i -> t_i^{-1}
  LaurentChar dual() const {
    LaurentChar r;
    for (const auto& [k, c] : terms_) r.add(-k.first, -k.second, c);
    return r;
  }

  friend LaurentChar operator+(LaurentChar a, const LaurentChar& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, c);
    return a;
  }
  friend LaurentChar operator-(LaurentChar a, const LaurentChar& b) {
    for (const auto& [k, c] : b.terms_) a.add(k.first, k.second, -c);
    return a;
  }
  friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentChar&, const LaurentChar&) = default;

 private:
  std::map<Key, Integer> terms_;
};

/// Q = sum over boxes of t1^i t2^j t3^k.
inline ThreeChar q_char(const Diagram3D& d) {
  ThreeChar q;
  for (const auto& b : d.boxes()) q[{b.i, b.j, b.k}] += 1;
  return q;
}

/// t3 = t1^{-1} t2^{-1}.
inline LaurentChar eliminate_t3(const ThreeChar& q) {
  LaurentChar r;
  for (const auto& [e, c] : q) r.add(e[0] - e[2], e[1] - e[2], c);
  return r;
}

/// V = Q + Q Qbar (1 - t1)(1 - t2) t1^{-1} t2^{-1}, t3 eliminated.
inline LaurentChar v_char(const Diagram3D& d) {
  const LaurentChar q = eliminate_t3(q_char(d));
  const LaurentChar f = (LaurentChar::monomial(-1, 0) - LaurentChar::monomial(0, 0)) *
                        (LaurentChar::monomial(0, -1) - LaurentChar::monomial(0, 0));
  return q + q * q.dual() * f;
}

/// Group ring of Z_n or the Klein group with Z/2 coefficients.
class ModTwoGroupRing {
 public:
  explicit ModTwoGroupRing(GroupSpec group) : group_(group), bits_(group.order(), 0) {}

  const GroupSpec& group() const { return group_; }
  int coefficient(int g) const { return bits_.at(g); }
  void add(int g, int times = 1) { bits_.at(g) ^= (times & 1); }

  friend ModTwoGroupRing operator+(ModTwoGroupRing a, const ModTwoGroupRing& b) {
    a.check(b);
    for (int g = 0; g < a.group_.order(); ++g) a.bits_[g] ^= b.bits_[g];
    return a;
  }
  friend ModTwoGroupRing operator*(const ModTwoGroupRing& a, const ModTwoGroupRing& b) {
    a.check(b);
    ModTwoGroupRing r(a.group_);
    for (int g = 0; g < a.group_.order(); ++g)
      for (int h = 0; h < a.group_.order(); ++h)
        if (a.bits_[g] && b.bits_[h]) r.bits_[a.group_.add(g, h)] ^= 1;
    return r;
  }

  /// x^2; in the Klein group every g^2 = 1 and squaring is additive mod 2,
  /// so (sum n_g g)^2 = sum n_g.
  ModTwoGroupRing square() const {
    if (group_.kind() != GroupSpec::Kind::klein) return *this * *this;
    ModTwoGroupRing r(group_);
    for (int g = 0; g < group_.order(); ++g) r.add(0, bits_[g]);
    return r;
  }

  friend bool operator==(const ModTwoGroupRing&, const ModTwoGroupRing&) = default;

 private:
  void check(const ModTwoGroupRing& o) const {
    if (!(group_ == o.group_)) throw std::invalid_argument("group ring mismatch");
  }
  GroupSpec group_;
  std::vector<int> bits_;
};

/// Group element acting on t1^e1 t2^e2 for the chosen action.
inline int restricted_weight(const GroupChoice& g, int e1, int e2) {
  auto mod = [](int a, int n) { return ((a % n) + n) % n; };
  switch (g.kind) {
    case ColouringKind::klein: return (mod(e1, 2) ? klein::a : 0) ^ (mod(e2, 2) ? klein::b : 0);
    case ColouringKind::z3_diagonal: return mod(e1 + e2, 3);
    default: return mod(e1 - e2, g.n);
  }
}

inline ModTwoGroupRing restrict_mod_two(const LaurentChar& v, const GroupChoice& g) {
  ModTwoGroupRing r(g.colouring().group());
  for (const auto& [k, c] : v.terms())
    if (boost::multiprecision::abs(c) % 2 == 1) r.add(restricted_weight(g, k.first, k.second));
  return r;
}

/// Trivial-representation coefficient of V mod 2.
inline int invariant_parity(const Diagram3D& d, const GroupChoice& g) {
  return restrict_mod_two(v_char(d), g).coefficient(0);
}

/// Same parity computed inside the group ring: restrict Q first, then form V there.
inline int invariant_parity_in_ring(const Diagram3D& d, const GroupChoice& g) {
  const GroupSpec group = g.colouring().group();
  const LaurentChar q = eliminate_t3(q_char(d));
  const ModTwoGroupRing rq = restrict_mod_two(q, g);
  ModTwoGroupRing f(group);
  f.add(restricted_weight(g, -1, -1));
  f.add(restricted_weight(g, -1, 0));
  f.add(restricted_weight(g, 0, -1));
  f.add(0);
  const ModTwoGroupRing qq = group.kind() == GroupSpec::Kind::klein ? rq.square() : rq * restrict_mod_two(q.dual(), g);
  return (rq + qq * f).coefficient(0);
}

/// Closed-form sign from colour counts.
inline int sign_closed_form(const Diagram3D& d, const GroupChoice& g) {
  auto n = colour_counts(g.colouring(), d);
  int exponent = 0;
  switch (g.kind) {
    case ColouringKind::klein: exponent = n[klein::a] + n[klein::b] + n[klein::c]; break;
    case ColouringKind::z3_diagonal: exponent = n[1] + n[2] + n[0] * n[1] + n[0] * n[2] + n[1] * n[2]; break;
    default: exponent = n[0];
  }
  return exponent % 2 == 0 ? 1 : -1;
}

/// sum over diagrams of (-1)^parity prod q_g^{|pi|_g}.
inline Series dt_signed_series(const GroupChoice& g, int N, int threads = 1) {
  if (g.kind == ColouringKind::z3_diagonal) throw std::invalid_argument("DT series is only provided for Z_n and Klein");
  return coloured_series_weighted(
      g.colouring(), N,
      [&](const SliceChain& chain) { return invariant_parity(slices_to_diagram(chain), g) ? -1 : 1; }, threads);
}

inline std::string to_string(const LaurentChar& v) {
  std::string out;
  for (const auto& [k, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*t1^" + std::to_string(k.first) + "*t2^" + std::to_string(k.second);
  }
  return out.empty() ? "0" : out;
}

}  // namespace boxcount
