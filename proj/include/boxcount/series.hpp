#pragma once

// Exact multivariate truncated power series over a fixed set of colour
// variables, plus the MacMahon product evaluators built on top of them.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace boxcount {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::size_t kMaxVariables = 16;

/// Ordered list of distinct variable names. The order is the serialization
/// order of exponent vectors.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVariables)
      throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVariables) + ")");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t at(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }

  bool operator==(const VariableSet&) const = default;

 private:
  std::vector<std::string> names_;
};

using Variables = std::shared_ptr<const VariableSet>;

inline Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableSet>(std::move(names));
}

inline bool same_variables(const Variables& a, const Variables& b) {
  return a == b || (a && b && *a == *b);
}

/// Exponent vector in half-units (2 == one whole power). Ordered canonically:
/// total degree first, then lexicographically.
class Exponents {
 public:
  Exponents() = default;

  static Exponents whole(std::initializer_list<int> powers) {
    Exponents e;
    std::size_t i = 0;
    for (int p : powers) e.set_half(i++, 2 * p);
    return e;
  }
  static Exponents unit(std::size_t var, int power = 1) {
    Exponents e;
    e.set_half(var, 2 * power);
    return e;
  }

  int half(std::size_t i) const { return half_[i]; }
  void set_half(std::size_t i, int value) {
    if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
    check_range(value);
    half_degree_ += value - half_[i];
    half_[i] = static_cast<std::int16_t>(value);
  }
  /// Whole-unit exponent; requires the exponent to be integral.
  int whole(std::size_t i) const {
    if (half_[i] % 2 != 0) throw std::domain_error("half-integer exponent");
    return half_[i] / 2;
  }

  int half_degree() const { return half_degree_; }

  bool is_integral() const {
    return std::all_of(half_.begin(), half_.end(), [](auto h) { return h % 2 == 0; });
  }
  bool is_nonnegative() const {
    return std::all_of(half_.begin(), half_.end(), [](auto h) { return h >= 0; });
  }
  bool is_zero() const { return half_degree_ == 0 && is_nonnegative(); }

  Exponents operator+(const Exponents& o) const {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.set_half(i, half_[i] + o.half_[i]);
    return r;
  }
  Exponents operator-(const Exponents& o) const { return *this + o.scaled(-1); }
  Exponents scaled(int k) const {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.set_half(i, half_[i] * k);
    return r;
  }

  friend bool operator==(const Exponents& a, const Exponents& b) { return a.half_ == b.half_; }
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    if (auto c = a.half_degree_ <=> b.half_degree_; c != 0) return c;
    return a.half_ <=> b.half_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : half_) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static void check_range(long value) {
    if (value > INT16_MAX || value < INT16_MIN) throw std::overflow_error("exponent out of range");
  }

  std::array<std::int16_t, kMaxVariables> half_{};
  std::int32_t half_degree_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

/// A signed monomial: +-1 times a product of (possibly half-integer, possibly
/// negative) powers. Used as operator arguments and as MacMahon arguments.
struct Monomial {
  Exponents exponents;
  int sign = 1;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t index, int power = 1) { return {Exponents::unit(index, power), 1}; }
  static Monomial of(const VariableSet& vars, std::initializer_list<std::pair<std::string_view, int>> powers,
                     int sign = 1) {
    Monomial m;
    m.sign = sign;
    for (auto [name, p] : powers) {
      auto i = vars.at(name);
      m.exponents.set_half(i, m.exponents.half(i) + 2 * p);
    }
    return m;
  }

  int half_degree() const { return exponents.half_degree(); }

  Monomial operator*(const Monomial& o) const { return {exponents + o.exponents, sign * o.sign}; }
  Monomial operator-() const { return {exponents, -sign}; }
  Monomial pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return {exponents.scaled(k), (k % 2 == 0) ? 1 : sign};
  }
  Monomial inverse() const { return {exponents.scaled(-1), sign}; }
  /// Square root of a positive monomial whose half-unit exponents are all even.
  Monomial sqrt() const {
    if (sign != 1) throw std::domain_error("square root of a negative monomial");
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exponents.half(i) % 2 != 0) throw std::domain_error("monomial is not a perfect square");
      r.exponents.set_half(i, exponents.half(i) / 2);
    }
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

namespace detail {

inline bool is_unit(const Integer& c) { return c == 1 || c == -1; }
inline bool is_unit(const Rational& c) { return c != 0; }

template <class To, class From>
To convert_coefficient(const From& c) {
  if constexpr (std::is_same_v<To, From>) {
    return c;
  } else if constexpr (std::is_same_v<To, Integer> && std::is_same_v<From, Rational>) {
    if (boost::multiprecision::denominator(c) != 1) throw std::domain_error("non-integral coefficient");
    return Integer(boost::multiprecision::numerator(c));
  } else {
    return To(c);
  }
}

inline std::string format_exponents(const VariableSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    int h = e.half(i);
    if (h == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (h != 2) out += '^' + (h % 2 == 0 ? std::to_string(h / 2) : std::to_string(h) + "/2");
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

/// Truncated power series with exact coefficients. Every stored term has
/// non-negative exponents and total degree <= truncation.
template <class Coeff>
class BasicSeries {
 public:
  using coefficient_type = Coeff;
  using Terms = std::map<Exponents, Coeff>;

  BasicSeries(Variables vars, int truncation) : vars_(std::move(vars)), truncation_(truncation) {
    if (!vars_) throw std::invalid_argument("series needs a variable set");
    if (truncation_ < 0) throw std::invalid_argument("negative truncation");
  }

  static BasicSeries constant(Variables vars, int truncation, Coeff c) {
    BasicSeries s(std::move(vars), truncation);
    s.add_term(Exponents{}, c);
    return s;
  }
  static BasicSeries one(Variables vars, int truncation) { return constant(std::move(vars), truncation, Coeff(1)); }
  static BasicSeries monomial(Variables vars, int truncation, const Monomial& m, Coeff c = Coeff(1)) {
    BasicSeries s(std::move(vars), truncation);
    s.add_term(m.exponents, m.sign < 0 ? Coeff(-c) : c);
    return s;
  }

  const Variables& variables_ptr() const { return vars_; }
  const VariableSet& variables() const { return *vars_; }
  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  Coeff constant_term() const { return coefficient(Exponents{}); }

  std::optional<int> min_half_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.half_degree();
  }

  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.is_integral(); });
  }

  /// Adds c * x^e; terms beyond the truncation are dropped.
  void add_term(const Exponents& e, const Coeff& c) {
    if (c == 0 || !fits(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool fits(const Exponents& e) const {
    if (!e.is_nonnegative()) throw std::domain_error("negative exponent in series term");
    return e.half_degree() <= 2 * truncation_;
  }

  BasicSeries truncated(int n) const {
    BasicSeries r(vars_, std::min(n, truncation_));
    for (const auto& [e, c] : terms_)
      if (e.half_degree() <= 2 * r.truncation_) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    check_compatible(o);
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicSeries& operator-=(const BasicSeries& o) { return *this += -o; }
  BasicSeries& operator*=(const BasicSeries& o) { return *this = *this * o; }

  /// Adds c * m * o without materialising the shifted copy.
  void add_scaled(const BasicSeries& o, const Monomial& m, const Coeff& c) {
    check_compatible(o);
    if (o.truncation_ < truncation_) *this = truncated(o.truncation_);
    Coeff signed_c = m.sign < 0 ? Coeff(-c) : c;
    for (const auto& [e, oc] : o.terms_) {
      Exponents shifted = e + m.exponents;
      if (shifted.half_degree() > 2 * truncation_) break;
      add_term(shifted, oc * signed_c);
    }
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }
  friend BasicSeries operator-(BasicSeries a, const BasicSeries& b) { return a -= b; }
  friend BasicSeries operator-(BasicSeries a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }

  /// Product of a series with a signed monomial.
  BasicSeries shifted(const Monomial& m) const {
    BasicSeries r(vars_, truncation_);
    r.add_scaled(*this, m, Coeff(1));
    return r;
  }
  BasicSeries scaled(const Coeff& c) const {
    BasicSeries r(vars_, truncation_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
  }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    a.check_compatible(b);
    const int trunc = std::min(a.truncation_, b.truncation_);
    const int limit = 2 * trunc;
    std::unordered_map<Exponents, Coeff, ExponentsHash> acc;
    for (const auto& [ea, ca] : a.terms_) {
      if (ea.half_degree() > limit) break;
      for (const auto& [eb, cb] : b.terms_) {
        if (ea.half_degree() + eb.half_degree() > limit) break;
        acc[ea + eb] += ca * cb;
      }
    }
    BasicSeries r(a.vars_, trunc);
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace(e, std::move(c));
    return r;
  }

  /// Multiplies in place by (1 - m)^power, m a signed monomial of positive
  /// degree; negative powers expand the geometric series.
  BasicSeries& mul_one_minus(const Monomial& m, int power) {
    if (power == 0) return *this;
    if (m.half_degree() <= 0 || !m.exponents.is_nonnegative())
      throw std::domain_error("factor (1 - m) needs m of positive degree with non-negative exponents");
    const Coeff s = m.sign < 0 ? Coeff(-1) : Coeff(1);
    const int limit = 2 * truncation_;
    for (int rep = 0; rep < std::abs(power); ++rep) {
      if (power < 0) {
        // f / (1 - m): ascending sweep, later keys see the updated values.
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
          Exponents up = it->first + m.exponents;
          if (up.half_degree() > limit) continue;
          add_term(up, it->second * s);
        }
      } else {
        std::vector<std::pair<Exponents, Coeff>> delta;
        for (const auto& [e, c] : terms_) {
          Exponents up = e + m.exponents;
          if (up.half_degree() > limit) break;
          delta.emplace_back(up, -(c * s));
        }
        for (auto& [e, c] : delta) add_term(e, c);
      }
    }
    return *this;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return same_variables(a.vars_, b.vars_) && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicSeries& s) { return os << s.to_string(); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Coeff mag = c < 0 ? Coeff(-c) : c;
      out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      bool unit_coeff = mag == 1;
      if (!unit_coeff || e.half_degree() == 0) out << mag;
      if (e.half_degree() != 0) out << (unit_coeff ? "" : "*") << detail::format_exponents(*vars_, e);
      first = false;
    }
    return out.str();
  }

 private:
  void check_compatible(const BasicSeries& o) const {
    if (!same_variables(vars_, o.vars_)) throw std::invalid_argument("variable-set mismatch");
  }

  template <class>
  friend class BasicSeries;

  Variables vars_;
  int truncation_ = 0;
  Terms terms_;
};

using Series = BasicSeries<Integer>;

template <class To, class From>
BasicSeries<To> convert_series(const BasicSeries<From>& s) {
  BasicSeries<To> r(s.variables_ptr(), s.truncation());
  for (const auto& [e, c] : s.terms()) r.add_term(e, detail::convert_coefficient<To>(c));
  return r;
}

template <class Coeff>
BasicSeries<Coeff> mul(const BasicSeries<Coeff>& a, const BasicSeries<Coeff>& b) {
  return a * b;
}

/// Multiplicative inverse of a series whose constant term is a unit.
template <class Coeff>
BasicSeries<Coeff> invert_unit(const BasicSeries<Coeff>& a) {
  const Coeff a0 = a.constant_term();
  if (!detail::is_unit(a0)) throw std::domain_error("constant term is not a unit");
  const Coeff inv0 = Coeff(1) / a0;
  const int limit = 2 * a.truncation();

  std::vector<std::pair<Exponents, Coeff>> rest;
  for (const auto& [e, c] : a.terms())
    if (e.half_degree() > 0) rest.emplace_back(e, c);

  // b[m] = -inv0 * sum_{t != 0} a[t] b[m - t], finalised in canonical order.
  BasicSeries<Coeff> b(a.variables_ptr(), a.truncation());
  std::map<Exponents, Coeff> pending;
  pending.emplace(Exponents{}, Coeff(0));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Exponents& m = node.key();
    Coeff bm = m.half_degree() == 0 ? inv0 : Coeff(-(node.mapped() * inv0));
    if (bm == 0) continue;
    for (const auto& [t, c] : rest) {
      Exponents up = m + t;
      if (up.half_degree() > limit) break;
      pending[up] += c * bm;
    }
    b.add_term(m, bm);
  }
  return b;
}

/// Multiplies each coefficient by (-1)^(sum of exponents of the flipped variables).
template <class Coeff>
BasicSeries<Coeff> substitute_signs(const BasicSeries<Coeff>& s, const std::vector<std::size_t>& flips) {
  BasicSeries<Coeff> r(s.variables_ptr(), s.truncation());
  for (const auto& [e, c] : s.terms()) {
    int parity = 0;
    for (auto v : flips) parity += e.whole(v);
    r.add_term(e, parity % 2 == 0 ? c : Coeff(-c));
  }
  return r;
}

template <class Coeff>
BasicSeries<Coeff> substitute_signs(const BasicSeries<Coeff>& s, const std::vector<std::string>& flips) {
  std::vector<std::size_t> idx;
  for (const auto& name : flips) idx.push_back(s.variables().at(name));
  return substitute_signs(s, idx);
}

template <class Coeff>
struct TermDifference {
  Exponents exponents;
  Coeff left;
  Coeff right;
};

/// First monomial (canonical order) where two series disagree, comparing at
/// the smaller of the two truncations.
template <class Coeff>
std::optional<TermDifference<Coeff>> first_difference(const BasicSeries<Coeff>& a, const BasicSeries<Coeff>& b) {
  if (!same_variables(a.variables_ptr(), b.variables_ptr())) throw std::invalid_argument("variable-set mismatch");
  const int n = std::min(a.truncation(), b.truncation());
  auto ta = a.truncated(n), tb = b.truncated(n);
  auto ia = ta.terms().begin(), ib = tb.terms().begin();
  while (ia != ta.terms().end() || ib != tb.terms().end()) {
    if (ib == tb.terms().end() || (ia != ta.terms().end() && ia->first < ib->first))
      return TermDifference<Coeff>{ia->first, ia->second, Coeff(0)};
    if (ia == ta.terms().end() || ib->first < ia->first)
      return TermDifference<Coeff>{ib->first, Coeff(0), ib->second};
    if (ia->second != ib->second) return TermDifference<Coeff>{ia->first, ia->second, ib->second};
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// MacMahon functions

/// M(x, q) = prod_{n >= 1} (1 - x q^n)^(-n), truncated at total degree N.
inline Series mac_M(const Variables& vars, const Monomial& x, const Monomial& q, int N) {
  if (q.half_degree() < 2) throw std::domain_error("mac_M needs deg(q) >= 1");
  Series s = Series::one(vars, N);
  Monomial factor = x * q;
  for (int n = 1; factor.half_degree() <= 2 * N; ++n, factor = factor * q) {
    if (!factor.exponents.is_nonnegative())
      throw std::domain_error("MacMahon factor has a negative exponent");
    if (factor.half_degree() == 0) throw std::domain_error("MacMahon factor (1 - x q^n) has no unit constant term");
    s.mul_one_minus(factor, -n);
  }
  return s;
}

/// Divisibility of exponent vectors (x | q) ignoring signs.
inline bool divides(const Monomial& x, const Monomial& q) {
  return x.exponents.is_nonnegative() && (q.exponents - x.exponents).is_nonnegative();
}

/// M~(x, q) = M(x, q) M(x^-1, q), defined when x | q so that every x^-1 q^n
/// is a genuine monomial.
inline Series mac_Mtilde(const Variables& vars, const Monomial& x, const Monomial& q, int N) {
  if (!divides(x, q)) throw std::domain_error("mac_Mtilde requires x to divide q");
  return mac_M(vars, x, q, N) * mac_M(vars, x.inverse(), q, N);
}

}  // namespace boxcount
