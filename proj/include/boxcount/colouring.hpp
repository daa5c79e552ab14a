#pragma once

// Group colourings of the octant: Z_n, the Klein four-group, and the
// diagonal Z_3 colouring.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxcount/series.hpp"

namespace boxcount {

struct Box {
  int i = 0, j = 0, k = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Z_n (residues 0..n-1) or the Klein group {0,a,b,c} stored as 2-bit vectors
/// with a = 1, b = 2, c = 3 and XOR addition.
class GroupSpec {
 public:
  enum class Kind { cyclic, klein };

  static GroupSpec cyclic(int n) {
    if (n < 1) throw std::invalid_argument("Z_n needs n >= 1");
    return GroupSpec(Kind::cyclic, n);
  }
  static GroupSpec klein() { return GroupSpec(Kind::klein, 4); }

  Kind kind() const { return kind_; }
  int order() const { return order_; }

  int add(int g, int h) const { return kind_ == Kind::klein ? (g ^ h) : (g + h) % order_; }
  int negate(int g) const { return kind_ == Kind::klein ? g : (order_ - g) % order_; }
  int multiple(int g, long k) const {
    if (kind_ == Kind::klein) return (k % 2 != 0) ? g : 0;
    long r = (static_cast<long>(g) * (k % order_)) % order_;
    return static_cast<int>(r < 0 ? r + order_ : r);
  }

  /// Variable name for each element, in canonical variable order.
  std::string label(int g) const {
    if (kind_ == Kind::klein) return std::string(1, "0abc"[g]);
    return std::to_string(g);
  }
  std::vector<std::string> variable_names() const {
    std::vector<std::string> names;
    for (int g = 0; g < order_; ++g) names.push_back("q" + label(g));
    return names;
  }
  Variables variables() const { return make_variables(variable_names()); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(Kind kind, int order) : kind_(kind), order_(order) {}
  Kind kind_;
  int order_;
};

namespace klein {
inline constexpr int zero = 0, a = 1, b = 2, c = 3;
}

/// Monoid homomorphism from the octant to a group, fixed by the images of the
/// three unit vectors.
class OctantColouring {
 public:
  OctantColouring(GroupSpec group, std::array<int, 3> generators) : group_(group), generators_(generators) {
    for (int g : generators_)
      if (g < 0 || g >= group_.order()) throw std::invalid_argument("generator outside the group");
  }

  /// K(1,0,0) = 1, K(0,1,0) = -1, K(0,0,1) = 0.
  static OctantColouring cyclic(int n) {
    auto g = GroupSpec::cyclic(n);
    return {g, {1 % n, g.negate(1 % n), 0}};
  }
  /// K(1,0,0) = a, K(0,1,0) = b, K(0,0,1) = c.
  static OctantColouring klein() { return {GroupSpec::klein(), {klein::a, klein::b, klein::c}}; }
  /// Z_3 with all three generators equal to 1.
  static OctantColouring z3_diagonal() { return {GroupSpec::cyclic(3), {1, 1, 1}}; }

  const GroupSpec& group() const { return group_; }
  const std::array<int, 3>& generators() const { return generators_; }

  int colour(const Box& b) const {
    if (b.i < 0 || b.j < 0 || b.k < 0) throw std::invalid_argument("box outside the octant");
    int g = group_.multiple(generators_[0], b.i);
    g = group_.add(g, group_.multiple(generators_[1], b.j));
    return group_.add(g, group_.multiple(generators_[2], b.k));
  }

 private:
  GroupSpec group_;
  std::array<int, 3> generators_;
};

inline int colour(const OctantColouring& c, const Box& b) { return c.colour(b); }

inline int diagonal_z3_colour(const Box& b) { return OctantColouring::z3_diagonal().colour(b); }

/// Which colouring a CLI group spec names.
enum class ColouringKind { cyclic, klein, z3_diagonal };

struct GroupChoice {
  ColouringKind kind = ColouringKind::cyclic;
  int n = 1;

  OctantColouring colouring() const {
    switch (kind) {
      case ColouringKind::klein: return OctantColouring::klein();
      case ColouringKind::z3_diagonal: return OctantColouring::z3_diagonal();
      default: return OctantColouring::cyclic(n);
    }
  }
  std::string to_string() const {
    switch (kind) {
      case ColouringKind::klein: return "klein";
      case ColouringKind::z3_diagonal: return "z3diag";
      default: return "zn:" + std::to_string(n);
    }
  }
};

/// Parses "zn:4", "klein" or "z3diag".
inline GroupChoice parse_group(std::string_view text) {
  if (text == "klein") return {ColouringKind::klein, 4};
  if (text == "z3diag") return {ColouringKind::z3_diagonal, 3};
  if (text.substr(0, 3) == "zn:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed group spec '" + std::string(text) + "'");
    int n = std::stoi(digits);
    if (n < 1 || static_cast<std::size_t>(n) > kMaxVariables)
      throw std::invalid_argument("group order out of range in '" + std::string(text) + "'");
    return {ColouringKind::cyclic, n};
  }
  throw std::invalid_argument("malformed group spec '" + std::string(text) + "'");
}

}  // namespace boxcount
