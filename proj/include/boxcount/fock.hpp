#pragma once

// Vertex operators on formal sums of partitions with series amplitudes, the
// transfer products that compute partition functions slice by slice, and a
// checker for operator commutation identities.

#include <map>
#include <set>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcount/colouring.hpp"
#include "boxcount/pyramid.hpp"
#include "boxcount/series.hpp"
#include "boxcount/young.hpp"

namespace boxcount {

/// Finite sum  sum_lambda f_lambda |lambda>  with no zero amplitudes stored.
template <class Coeff>
class BasicFockState {
 public:
  using Amplitude = BasicSeries<Coeff>;

  BasicFockState(Variables vars, int truncation) : vars_(std::move(vars)), truncation_(truncation) {}

  static BasicFockState basis(Variables vars, int truncation, const Partition2D& p) {
    BasicFockState s(vars, truncation);
    s.add(p, Amplitude::one(vars, truncation));
    return s;
  }
  static BasicFockState vacuum(Variables vars, int truncation) { return basis(std::move(vars), truncation, {}); }

  const Variables& variables_ptr() const { return vars_; }
  int truncation() const { return truncation_; }
  const std::map<Partition2D, Amplitude>& amplitudes() const { return amps_; }
  bool is_zero() const { return amps_.empty(); }

  Amplitude amplitude(const Partition2D& p) const {
    auto it = amps_.find(p);
    return it == amps_.end() ? Amplitude(vars_, truncation_) : it->second;
  }

  void add(const Partition2D& p, const Amplitude& a) {
    if (a.is_zero()) return;
    auto [it, inserted] = amps_.try_emplace(p, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) amps_.erase(it);
    }
  }
  void add_scaled(const Partition2D& p, const Amplitude& a, const Monomial& m, const Coeff& c) {
    auto it = amps_.try_emplace(p, vars_, truncation_).first;
    it->second.add_scaled(a, m, c);
    if (it->second.is_zero()) amps_.erase(it);
  }

  BasicFockState scaled(const Amplitude& scalar) const {
    BasicFockState r(vars_, truncation_);
    for (const auto& [p, a] : amps_) r.add(p, a * scalar);
    return r;
  }

  friend bool operator==(const BasicFockState& a, const BasicFockState& b) { return a.amps_ == b.amps_; }

  std::string to_string() const {
    if (amps_.empty()) return "0";
    std::string out;
    for (const auto& [p, a] : amps_) out += (out.empty() ? "" : " + ") + ("(" + a.to_string() + ")|" + p.to_string() + ">");
    return out;
  }

 private:
  Variables vars_;
  int truncation_;
  std::map<Partition2D, Amplitude> amps_;
};

using FockState = BasicFockState<Integer>;

template <class To, class From>
BasicFockState<To> convert_state(const BasicFockState<From>& s) {
  BasicFockState<To> r(s.variables_ptr(), s.truncation());
  for (const auto& [p, a] : s.amplitudes()) r.add(p, convert_series<To>(a));
  return r;
}

enum class Direction { plus, minus };

/// alpha_{-n} adds border strips of length n with sign; alpha_{n} removes them.
template <class Coeff>
BasicFockState<Coeff> apply_alpha(int n, const BasicFockState<Coeff>& s) {
  if (n == 0) throw std::invalid_argument("alpha_0 is not used");
  BasicFockState<Coeff> r(s.variables_ptr(), s.truncation());
  for (const auto& [p, a] : s.amplitudes()) {
    auto moves = n < 0 ? border_strip_additions(p, -n) : border_strip_removals(p, n);
    for (const auto& m : moves) r.add_scaled(m.partition, a, Monomial::one(), Coeff(m.sign));
  }
  return r;
}


struct GammaOptions {
  /// Half-degree charged per created cell by an operator applied right after
  /// this one (a weight operator). Needed to bound Gamma_-(x) when deg(x) = 0.
  int weight_half_degree_per_cell = 0;
};

/// Gamma_-(x): mu -> sum_{lambda > mu} x^{|lambda|-|mu|} lambda; Gamma_+(x) is
/// the adjoint. The primed versions interlace transposes.
template <class Coeff>
BasicFockState<Coeff> apply_gamma(Direction dir, bool primed, const Monomial& x, const BasicFockState<Coeff>& s,
                                  GammaOptions opt = {}) {
  BasicFockState<Coeff> r(s.variables_ptr(), s.truncation());
  const int step = x.half_degree();
  for (const auto& [p, a] : s.amplitudes()) {
    const Partition2D base = primed ? transpose(p) : p;
    auto emit = [&](const Partition2D& q) {
      const int d = std::abs(q.size() - p.size());
      r.add_scaled(primed ? transpose(q) : q, a, x.pow(d), Coeff(1));
    };
    if (dir == Direction::minus) {
      // d new cells cost d * step here and |lambda| * w in the following weight
      const int w = opt.weight_half_degree_per_cell;
      if (step + w <= 0) throw std::domain_error("unbounded creation: Gamma_- needs a graded argument or weight");
      const int room = 2 * s.truncation() - a.min_half_degree().value_or(0) - p.size() * w;
      if (room < 0) continue;
      const int max_size = p.size() + room / (step + w);
      for_each_interlacing_above(base, max_size, emit);
    } else {
      for_each_interlacing_below(base, emit);
    }
  }
  return r;
}

/// Diagonal weight: |lambda> -> m^{|lambda|} |lambda>. Q_g is m = q_g.
template <class Coeff>
BasicFockState<Coeff> apply_weight(const Monomial& m, const BasicFockState<Coeff>& s) {
  BasicFockState<Coeff> r(s.variables_ptr(), s.truncation());
  for (const auto& [p, a] : s.amplitudes()) r.add_scaled(p, a, m.pow(p.size()), Coeff(1));
  return r;
}

template <class Coeff>
BasicFockState<Coeff> apply_Qg(std::size_t g, const BasicFockState<Coeff>& s) {
  return apply_weight(Monomial::variable(g), s);
}

/// Cells (i,j), indexed from (0,0), split by the parity of i - j.
inline std::pair<int, int> checkerboard_counts(const Partition2D& p) {
  int same = 0, other = 0;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.row(i); ++j) ((i - j) % 2 == 0 ? same : other)++;
  return {same, other};
}

/// Q_{gh}: q_g per cell with i = j mod 2, q_h per other cell.
template <class Coeff>
BasicFockState<Coeff> apply_Qgh(const Monomial& qg, const Monomial& qh, const BasicFockState<Coeff>& s) {
  BasicFockState<Coeff> r(s.variables_ptr(), s.truncation());
  for (const auto& [p, a] : s.amplitudes()) {
    auto [same, other] = checkerboard_counts(p);
    r.add_scaled(p, a, qg.pow(same) * qh.pow(other), Coeff(1));
  }
  return r;
}

/// exp(T) for T = sum_{k in steps} c_k x^k alpha_{+-k}, evaluated over the
/// rationals. For the minus direction deg(x) must be positive so the series
/// terminates at the truncation.
inline BasicFockState<Rational> apply_exp_alpha(Direction dir, const Monomial& x,
                                               const std::vector<std::pair<int, Rational>>& steps,
                                               const BasicFockState<Rational>& s) {
  if (dir == Direction::minus && x.half_degree() <= 0)
    throw std::domain_error("exponential of creation operators needs a graded argument");
  auto apply_T = [&](const BasicFockState<Rational>& state) {
    BasicFockState<Rational> out(state.variables_ptr(), state.truncation());
    for (const auto& [p, a] : state.amplitudes()) {
      for (const auto& [k, c] : steps) {
        if (dir == Direction::plus && k > p.size()) continue;
        Monomial w = x.pow(k);
        if (dir == Direction::minus && a.min_half_degree().value_or(0) + w.half_degree() > 2 * state.truncation())
          continue;
        auto moves = dir == Direction::minus ? border_strip_additions(p, k) : border_strip_removals(p, k);
        for (const auto& m : moves) out.add_scaled(m.partition, a, w, c * m.sign);
      }
    }
    return out;
  };
  BasicFockState<Rational> result = s, term = s;
  for (int m = 1; !term.is_zero(); ++m) {
    term = apply_T(term).scaled(BasicSeries<Rational>::constant(s.variables_ptr(), s.truncation(), Rational(1, m)));
    for (const auto& [p, a] : term.amplitudes()) result.add(p, a);
  }
  return result;
}

namespace detail {

// Exponent steps up to the largest k that can act within the truncation.
inline int max_alpha_step(Direction dir, const Monomial& x, int truncation, int largest_partition) {
  if (dir == Direction::plus) return largest_partition;
  return 2 * truncation / std::max(1, x.half_degree());
}

template <class Coeff>
int largest_partition(const BasicFockState<Coeff>& s) {
  int m = 0;
  for (const auto& [p, a] : s.amplitudes()) m = std::max(m, p.size());
  return m;
}

}  // namespace detail

/// E_{+-}(x) = exp sum_{k>=1} x^{2k}/k alpha_{+-2k}. Computed over the
/// rationals; the result is checked to be integral.
inline FockState apply_E(Direction dir, const Monomial& x, const FockState& s) {
  std::vector<std::pair<int, Rational>> steps;
  const int kmax = detail::max_alpha_step(dir, x, s.truncation(), detail::largest_partition(s));
  for (int k = 2; k <= kmax; k += 2) steps.emplace_back(k, Rational(2, k));
  return convert_state<Integer>(apply_exp_alpha(dir, x, steps, convert_state<Rational>(s)));
}

// ---------------------------------------------------------------------------
// Operator strings

struct Op {
  enum class Kind { gamma, gamma_prime, E, alpha, weight, checkerboard };
  Kind kind = Kind::weight;
  Direction dir = Direction::plus;
  Monomial arg;    // gamma/E argument, weight monomial, or q_g for checkerboard
  Monomial arg2;   // q_h for checkerboard
  int n = 0;       // alpha index

  static Op gamma(Direction d, Monomial x) { return {Kind::gamma, d, x, {}, 0}; }
  static Op gamma_prime(Direction d, Monomial x) { return {Kind::gamma_prime, d, x, {}, 0}; }
  static Op E(Direction d, Monomial x) { return {Kind::E, d, x, {}, 0}; }
  static Op alpha(int n) { return {Kind::alpha, Direction::plus, {}, {}, n}; }
  static Op weight(Monomial m) { return {Kind::weight, Direction::plus, m, {}, 0}; }
  static Op checkerboard(Monomial g, Monomial h) { return {Kind::checkerboard, Direction::plus, g, h, 0}; }

  friend bool operator==(const Op&, const Op&) = default;
};

using OpString = std::vector<Op>;

inline FockState apply_op(const Op& op, const FockState& s) {
  switch (op.kind) {
    case Op::Kind::gamma: return apply_gamma(op.dir, false, op.arg, s);
    case Op::Kind::gamma_prime: return apply_gamma(op.dir, true, op.arg, s);
    case Op::Kind::E: return apply_E(op.dir, op.arg, s);
    case Op::Kind::alpha: return apply_alpha(op.n, s);
    case Op::Kind::weight: return apply_weight(op.arg, s);
    case Op::Kind::checkerboard: return apply_Qgh(op.arg, op.arg2, s);
  }
  throw std::logic_error("unknown operator");
}

/// Applies the string right to left, as operators compose.
inline FockState apply_ops(const OpString& ops, FockState s) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) s = apply_op(*it, s);
  return s;
}

inline OpString concat(OpString a, const OpString& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct CommutatorMismatch {
  Partition2D input;
  Partition2D output;
  Series lhs;
  Series rhs;
};

/// Checks lhs |mu> = scalar * rhs |mu> for every |mu| <= cutoff.
inline std::optional<CommutatorMismatch> commutator_mismatch(const OpString& lhs, const OpString& rhs,
                                                             const Series& scalar, int cutoff) {
  const auto& vars = scalar.variables_ptr();
  const int N = scalar.truncation();
  for (const auto& mu : partitions_up_to(cutoff)) {
    auto in = FockState::basis(vars, N, mu);
    auto left = apply_ops(lhs, in);
    auto right = apply_ops(rhs, in).scaled(scalar);
    if (left == right) continue;
    std::set<Partition2D> keys;
    for (const auto& [p, a] : left.amplitudes()) keys.insert(p);
    for (const auto& [p, a] : right.amplitudes()) keys.insert(p);
    for (const auto& p : keys)
      if (!(left.amplitude(p) == right.amplitude(p))) return CommutatorMismatch{mu, p, left.amplitude(p), right.amplitude(p)};
  }
  return std::nullopt;
}

inline bool verify_commutator(const OpString& lhs, const OpString& rhs, const Series& scalar, int cutoff) {
  return !commutator_mismatch(lhs, rhs, scalar, cutoff).has_value();
}

// ---------------------------------------------------------------------------
// Transfer products. The state after step k holds the amplitudes of the
// possible slices pi_k; slices are created with Gamma_- up to the centre and
// removed with Gamma_+ after it, and each slice is weighted as it is entered.

struct SliceStep {
  bool primed = false;
  /// Weight of the slice: either a single variable per cell or a checkerboard pair.
  Monomial same;
  Monomial other;
};

template <class StepFor>
Series run_transfer(const Variables& vars, int N, StepFor&& step_for) {
  FockState s = FockState::vacuum(vars, N);
  for (int k = -N; k <= N; ++k) {
    SliceStep st = step_for(k);
    const Direction dir = k <= 0 ? Direction::minus : Direction::plus;
    s = apply_gamma(dir, st.primed, Monomial::one(), s, GammaOptions{2});
    s = apply_Qgh(st.same, st.other, s);
  }
  return s.amplitude({});
}

/// Z_{Z_n} from the Z_n-coloured slices (slice k has colour k mod n).
inline Series transfer_Zn(int n, int N) {
  auto group = GroupSpec::cyclic(n);
  auto vars = group.variables();
  return run_transfer(vars, N, [&](int k) {
    auto q = Monomial::variable(static_cast<std::size_t>(((k % n) + n) % n));
    return SliceStep{false, q, q};
  });
}

/// Z_pyramid slicing by x - z: single-coloured slices, mixed Gamma/Gamma'.
inline Series transfer_pyramid(int N) {
  auto vars = GroupSpec::klein().variables();
  return run_transfer(vars, N, [&](int k) {
    const bool even = k % 2 == 0;
    // entering an even slice k <= 0 or k >= 1 uses the primed operator
    auto q = Monomial::variable(static_cast<std::size_t>(slice_colour(k)));
    return SliceStep{even, q, q};
  });
}

namespace detail {

inline SliceStep klein_checkerboard_step(int k, bool primed) {
  auto q = [](int g) { return Monomial::variable(static_cast<std::size_t>(g)); };
  if (k % 2 == 0) return {primed, q(klein::zero), q(klein::c)};
  if (k > 0) return {primed, q(klein::a), q(klein::b)};
  return {primed, q(klein::b), q(klein::a)};
}

}  // namespace detail

/// Z_pyramid from the checkerboard-coloured slicing.
inline Series transfer_pyramid_checkerboard(int N) {
  auto vars = GroupSpec::klein().variables();
  return run_transfer(vars, N, [](int k) { return detail::klein_checkerboard_step(k, k % 2 == 0); });
}

/// Z_{Z2xZ2} from the direct checkerboard product with unprimed operators.
inline Series transfer_klein(int N) {
  auto vars = GroupSpec::klein().variables();
  return run_transfer(vars, N, [](int k) { return detail::klein_checkerboard_step(k, false); });
}

// ---------------------------------------------------------------------------
// Normalised operator products and their commutation scalars. Colour
// variables are the first variables of the set, in group order.

namespace detail {

inline Monomial colour_run(int a, int b) {
  Monomial m;
  for (int i = a; i <= b; ++i) m = m * Monomial::variable(static_cast<std::size_t>(i));
  return m;
}

inline Monomial negated(Monomial m) {
  m.sign = -m.sign;
  return m;
}

}  // namespace detail

/// A_+(x) = prod_{j=1..n} Gamma_+(x q_[j,n-1] q_0),  A_-(x) = prod_{i=0..n-1} Gamma_-(x q_[1,i]).
inline OpString zn_A(Direction dir, int n, const Monomial& x) {
  OpString out;
  for (int i = 1; i <= n; ++i) {
    if (dir == Direction::plus)
      out.push_back(Op::gamma(dir, x * detail::colour_run(i, n - 1) * Monomial::variable(0)));
    else
      out.push_back(Op::gamma(dir, x * detail::colour_run(1, i - 1)));
  }
  return out;
}

/// C(x,y) with A_+(x) A_-(y) = C(x,y) A_-(y) A_+(x), given xy.
inline Series zn_commutator(const Variables& vars, int n, const Monomial& xy, int N) {
  Series c = Series::one(vars, N);
  const Monomial t = xy * detail::colour_run(0, n - 1);
  c.mul_one_minus(t, -n);
  for (int a = 1; a < n; ++a)
    for (int b = a; b < n; ++b) {
      c.mul_one_minus(t * detail::colour_run(a, b), -1);
      c.mul_one_minus(t * detail::colour_run(a, b).inverse(), -1);
    }
  return c;
}

/// The four-factor pyramid operators A'_+(x), A'_-(x) with alternating primes.
inline OpString pyramid_A(Direction dir, const Monomial& x) {
  const auto qa = Monomial::variable(klein::a), qb = Monomial::variable(klein::b), qc = Monomial::variable(klein::c);
  if (dir == Direction::plus) {
    const auto q = detail::colour_run(0, 3);
    return {Op::gamma(dir, x * q), Op::gamma_prime(dir, x * q * qb.inverse()),
            Op::gamma(dir, x * q * (qb * qc).inverse()), Op::gamma_prime(dir, x * q * (qa * qb * qc).inverse())};
  }
  return {Op::gamma(dir, x), Op::gamma_prime(dir, x * qb), Op::gamma(dir, x * qb * qc),
          Op::gamma_prime(dir, x * qa * qb * qc)};
}

/// Scalar with A'_+(x) A'_-(y) = scalar * A'_-(y) A'_+(x), given xy.
inline Series pyramid_commutator(const Variables& vars, const Monomial& xy, int N) {
  const auto qa = Monomial::variable(klein::a), qb = Monomial::variable(klein::b), qc = Monomial::variable(klein::c);
  const Monomial t = xy * detail::colour_run(0, 3);
  Series c = Series::one(vars, N);
  for (const auto& f : {qb, qa * qb * qc, qb.inverse(), qc, qc.inverse(), qa, (qa * qb * qc).inverse(), qa.inverse()})
    c.mul_one_minus(detail::negated(t * f), 1);
  c.mul_one_minus(t, -4);
  for (const auto& f : {qb * qc, qa * qc, (qb * qc).inverse(), (qa * qc).inverse()}) c.mul_one_minus(t * f, -1);
  return c;
}

}  // namespace boxcount
