#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigshift {

/// A permutation of [n] in one-line notation (values 1..n).
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless one_line is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(std::size_t n);

  /// "591482637" for n <= 9, or comma-separated values for any n.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  /// 1-based access, matching one-line notation.
  int operator()(std::size_t i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }

  /// Value-wise complement i -> n+1-i.
  Permutation complement() const;

  /// Compact digits when n <= 9, comma-separated otherwise.
  std::string str() const;
  std::string comma_str() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> values_;
};

/// A permutation that is a single n-cycle.
class CyclicPerm {
public:
  /// Throws std::invalid_argument if p is not a single cycle.
  explicit CyclicPerm(Permutation p);

  const Permutation& perm() const { return perm_; }
  std::string str() const { return perm_.str(); }

private:
  Permutation perm_;
};

/// Permutation with one entry replaced by a wildcard (stored as 0).
class StarPerm {
public:
  static constexpr int kStar = 0;

  /// Throws std::invalid_argument unless entries hold exactly one kStar and
  /// n-1 distinct values of [n].
  explicit StarPerm(std::vector<int> entries);
  static StarPerm parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  /// 1-based; returns kStar at the wildcard position.
  int operator()(std::size_t i) const { return entries_[i - 1]; }
  bool is_star(std::size_t i) const { return entries_[i - 1] == kStar; }
  /// 1-based position of the wildcard.
  std::size_t star_position() const;
  /// The value of [n] absent from the entries.
  int missing_value() const;
  /// Fills the wildcard with the missing value.
  Permutation restored() const;

  std::string str() const;
  bool operator==(const StarPerm&) const = default;

private:
  std::vector<int> entries_;
};

/// Rank permutation of pairwise distinct values under `less`.
/// Throws std::invalid_argument on duplicates.
template <typename T, typename Less = std::less<>>
Permutation reduce(std::span<const T> values, Less less = {}) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return less(values[a], values[b]); });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (!less(values[order[r - 1]], values[order[r]])) {
      throw std::invalid_argument("reduce: values are not pairwise distinct");
    }
  }
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(ranks));
}

/// The cycle (pi_1 pi_2 ... pi_n) written in one-line notation.
CyclicPerm hat(const Permutation& pi);

/// hat(pi) with the value pi_1 replaced by the wildcard; lands at position pi_n.
StarPerm star(const Permutation& pi);

bool is_cyclic(const Permutation& pi);

}  // namespace sigshift
