// Brute-force reference routines used only by the tests. None of these call
// into the library code they check.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "sigshift/patterns.hpp"
#include "sigshift/words.hpp"

namespace oracle {

using sigshift::Letter;
using sigshift::Rational;
using sigshift::Signature;
using sigshift::Word;

/// Expands pre * period^inf to `length` letters.
inline Word expand(const Word& pre, const Word& period, std::size_t length) {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()]);
  }
  return out;
}

/// True iff q equals r^m for some strictly shorter r, by building every r^m.
inline bool is_power(const Word& q) {
  for (std::size_t len = 1; len < q.size(); ++len) {
    Word r(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(len));
    Word built;
    while (built.size() < q.size()) built.insert(built.end(), r.begin(), r.end());
    if (built == q) return true;
  }
  return false;
}

/// Signed order on two long finite prefixes via the recursive three-case
/// definition. Returns -1, 0 (prefixes agree) or +1.
inline int recursive_compare(const Word& s, const Word& t, const Signature& sigma, std::size_t at = 0) {
  if (at == s.size() || at == t.size()) return 0;
  if (s[at] < t[at]) return -1;
  if (s[at] > t[at]) return 1;
  const int rest = recursive_compare(s, t, sigma, at + 1);
  return sigma.is_negative(s[at]) ? -rest : rest;
}

/// Partial sum of the first `terms` digits in base k.
inline Rational truncated_value(const Word& digits, unsigned k) {
  Rational sum = 0;
  Rational scale = 1;
  for (Letter c : digits) {
    scale /= k;
    sum += scale * c;
  }
  sum.canonicalize();
  return sum;
}

/// Rank permutation by counting smaller entries.
template <typename T, typename Less>
std::vector<int> ranks_by_counting(const std::vector<T>& v, Less less) {
  std::vector<int> r(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (less(v[j], v[i])) ++r[i];
    }
  }
  return r;
}

/// Exact sawtooth map written out branch by branch.
inline Rational sawtooth(const Rational& x, const Signature& sigma) {
  const unsigned k = sigma.size();
  for (unsigned t = 0; t < k; ++t) {
    const Rational lo(t, k);
    const Rational hi(t + 1, k);
    if ((x >= lo && x < hi) || (t == k - 1 && x == 1)) {
      Rational y = sigma.is_negative(static_cast<Letter>(t)) ? Rational(Rational(t + 1) - x * k)
                                                             : Rational(x * k - t);
      y.canonicalize();
      return y;
    }
  }
  return -1;
}

/// Pattern of x + delta for a small explicit delta, by exact iteration.
inline std::vector<int> sampled_right_pattern(const Rational& x, const Signature& sigma,
                                              std::size_t n, unsigned exponent) {
  Rational delta(1);
  for (unsigned i = 0; i < exponent; ++i) delta /= sigma.size();
  std::vector<Rational> orbit{x + delta};
  while (orbit.size() < n) orbit.push_back(sawtooth(orbit.back(), sigma));
  return ranks_by_counting(orbit, [](const Rational& a, const Rational& b) { return a < b; });
}

/// Pattern of the first n suffixes ranked on long explicit prefixes by the
/// recursive order; empty when two suffixes agree on the whole window.
inline std::vector<int> pattern_by_prefixes(const sigshift::EPWord& s, const Signature& sigma,
                                            std::size_t n) {
  const std::size_t window = 4 * (s.preperiod().size() + s.period().size() + n) + 8;
  const auto letters = expand(s.preperiod(), s.period(), window + n);
  std::vector<Word> suffixes;
  for (std::size_t i = 0; i < n; ++i) {
    suffixes.emplace_back(letters.begin() + static_cast<std::ptrdiff_t>(i),
                          letters.begin() + static_cast<std::ptrdiff_t>(i + window));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (suffixes[i] == suffixes[j]) return {};
    }
  }
  return ranks_by_counting(suffixes, [&](const Word& a, const Word& b) {
    return recursive_compare(a, b, sigma) < 0;
  });
}

/// Every word over k letters of length `len`, in counting order.
inline std::vector<Word> all_words(std::size_t len, unsigned k) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (unsigned c = 0; c < k; ++c) {
        next.push_back(w);
        next.back().push_back(static_cast<Letter>(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Patterns of every u q^inf with |u| <= max_pre, 1 <= |q| <= max_per, each
/// ranked by pattern_by_prefixes. Returned as one-line vectors, sorted.
inline std::vector<std::vector<int>> realized_patterns(const Signature& sigma, std::size_t n,
                                                       std::size_t max_pre, std::size_t max_per) {
  std::vector<std::vector<int>> found;
  for (std::size_t lp = 0; lp <= max_pre; ++lp) {
    for (const auto& u : all_words(lp, sigma.size())) {
      for (std::size_t lq = 1; lq <= max_per; ++lq) {
        for (const auto& q : all_words(lq, sigma.size())) {
          auto r = pattern_by_prefixes(sigshift::EPWord::make(u, q, sigma.size()), sigma, n);
          if (!r.empty()) found.push_back(std::move(r));
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

/// Random word with letters < k.
inline Word random_word(std::mt19937& rng, std::size_t length, unsigned k) {
  std::uniform_int_distribution<unsigned> letter(0, k - 1);
  Word w(length);
  for (auto& c : w) c = static_cast<Letter>(letter(rng));
  return w;
}

inline sigshift::EPWord random_epword(std::mt19937& rng, unsigned k, std::size_t max_pre = 6,
                                      std::size_t max_per = 6) {
  std::uniform_int_distribution<std::size_t> pre_len(0, max_pre);
  std::uniform_int_distribution<std::size_t> per_len(1, max_per);
  auto pre = random_word(rng, pre_len(rng), k);
  auto per = random_word(rng, per_len(rng), k);
  return sigshift::EPWord::make(std::move(pre), std::move(per), k);
}

}  // namespace oracle
