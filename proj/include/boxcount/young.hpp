#pragma once

// 2D Young diagrams: interlacing, transposition and border strips.

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boxcount {

/// A partition stored as weakly decreasing positive row lengths.
class Partition2D {
 public:
  Partition2D() = default;
  explicit Partition2D(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0) throw std::invalid_argument("partition rows must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
  }
  Partition2D(std::initializer_list<int> rows) : Partition2D(std::vector<int>(rows)) {}

  /// Parses "6,3,2"; the empty string is the empty partition.
  static Partition2D parse(std::string_view text) {
    std::vector<int> rows;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      if (item.empty()) throw std::invalid_argument("empty row in partition literal");
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("bad partition literal '" + std::string(text) + "'");
      rows.push_back(v);
    }
    return Partition2D(std::move(rows));
  }

  const std::vector<int>& rows() const { return rows_; }
  int length() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  bool empty() const { return rows_.empty(); }
  /// Row i (0-based); 0 past the end.
  int row(int i) const { return i < length() ? rows_[i] : 0; }
  /// Length of column j (0-based).
  int column(int j) const {
    int c = 0;
    while (c < length() && rows_[c] > j) ++c;
    return c;
  }
  bool contains(int i, int j) const { return i >= 0 && j >= 0 && j < row(i); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) out += (i ? "," : "") + std::to_string(rows_[i]);
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition2D& p) { return os << '(' << p.to_string() << ')'; }

  friend bool operator==(const Partition2D& a, const Partition2D& b) { return a.rows_ == b.rows_; }
  friend std::strong_ordering operator<=>(const Partition2D& a, const Partition2D& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<int> rows_;
  int size_ = 0;
};

inline Partition2D transpose(const Partition2D& p) {
  std::vector<int> cols;
  for (int j = 0; j < p.row(0); ++j) cols.push_back(p.column(j));
  return Partition2D(std::move(cols));
}

/// lambda > mu: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
inline bool interlaces(const Partition2D& lambda, const Partition2D& mu) {
  if (mu.length() > lambda.length() || lambda.length() > mu.length() + 1) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (!(lambda.row(i) >= mu.row(i) && mu.row(i) >= lambda.row(i + 1))) return false;
  return true;
}

/// All partitions of exactly n, in descending lexicographic order.
inline std::vector<Partition2D> partitions_of(int n) {
  std::vector<Partition2D> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline std::vector<Partition2D> partitions_up_to(int n) {
  std::vector<Partition2D> out;
  for (int k = 0; k <= n; ++k) {
    auto part = partitions_of(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Visits every lambda with lambda > mu and |lambda| <= max_size.
template <class Visit>
void for_each_interlacing_above(const Partition2D& mu, int max_size, Visit&& visit) {
  const int len = mu.length();
  if (mu.size() > max_size) return;
  std::vector<int> rows(len + 1, 0);
  // Row 0 is unbounded above; rows 1..len lie in [mu_i, mu_{i-1}].
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == len + 1) {
      visit(Partition2D(rows));
      return;
    }
    int lo = mu.row(i);
    int hi = i == 0 ? mu.row(0) + budget : std::min(mu.row(i - 1), mu.row(i) + budget);
    for (int v = lo; v <= hi; ++v) {
      rows[i] = v;
      rec(i + 1, budget - (v - lo));
    }
  };
  rec(0, max_size - mu.size());
}

/// Visits every mu with lambda > mu.
template <class Visit>
void for_each_interlacing_below(const Partition2D& lambda, Visit&& visit) {
  const int len = lambda.length();
  std::vector<int> rows(len, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      visit(Partition2D(rows));
      return;
    }
    for (int v = lambda.row(i + 1); v <= lambda.row(i); ++v) {
      rows[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

struct SignedPartition {
  Partition2D partition;
  int sign;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
  friend std::ostream& operator<<(std::ostream& os, const SignedPartition& p) {
    return os << (p.sign < 0 ? "-" : "+") << p.partition;
  }
};

namespace detail {

// Beta numbers lambda_i - i over `slots` rows; a border strip of length n is
// a bead moving n steps along the abacus.
inline std::vector<int> beta_numbers(const Partition2D& p, int slots) {
  std::vector<int> beta(slots);
  for (int i = 0; i < slots; ++i) beta[i] = p.row(i) - i;
  return beta;
}

inline Partition2D from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> rows(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) rows[i] = beta[i] + static_cast<int>(i);
  return Partition2D(std::move(rows));
}

}  // namespace detail

/// All mu containing lambda with mu/lambda a border strip of length n, each
/// with sign (-1)^(h+1), h the number of rows of the strip.
inline std::vector<SignedPartition> border_strip_additions(const Partition2D& lambda, int n) {
  if (n < 1) throw std::invalid_argument("border strip length must be positive");
  const int slots = lambda.length() + n;
  auto beta = detail::beta_numbers(lambda, slots);
  std::vector<SignedPartition> out;
  for (int i = 0; i < slots; ++i) {
    int target = beta[i] + n;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int b) { return b > beta[i] && b < target; }));
    auto moved = beta;
    moved[i] = target;
    out.push_back({detail::from_beta(std::move(moved)), jumped % 2 == 0 ? 1 : -1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return out;
}

/// All mu contained in lambda with lambda/mu a border strip of length n.
inline std::vector<SignedPartition> border_strip_removals(const Partition2D& lambda, int n) {
  if (n < 1) throw std::invalid_argument("border strip length must be positive");
  if (lambda.size() < n) return {};
  const int slots = lambda.length();
  auto beta = detail::beta_numbers(lambda, slots);
  std::vector<SignedPartition> out;
  for (int i = 0; i < slots; ++i) {
    int target = beta[i] - n;
    if (target <= -slots) continue;  // implicit beads occupy -len, -len-1, ...
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int jumped = static_cast<int>(std::count_if(beta.begin(), beta.end(), [&](int b) { return b < beta[i] && b > target; }));
    auto moved = beta;
    moved[i] = target;
    out.push_back({detail::from_beta(std::move(moved)), jumped % 2 == 0 ? 1 : -1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return out;
}

}  // namespace boxcount
