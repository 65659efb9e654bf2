#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sigshift {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using Rational = mpq_class;

/// Largest alphabet accepted; letters render as single decimal digits.
inline constexpr unsigned kMaxAlphabet = 10;

/// Orientation vector of a signed shift: letter t is "negative" when sigma_t = '-'.
class Signature {
public:
  explicit Signature(std::vector<bool> negative);

  /// Parses strings like "+--". Throws std::invalid_argument.
  static Signature parse(std::string_view text);
  static Signature all_plus(unsigned k);
  static Signature all_minus(unsigned k);

  unsigned size() const { return static_cast<unsigned>(negative_.size()); }
  bool is_negative(Letter t) const { return negative_[t]; }
  bool first_negative() const { return negative_.front(); }
  bool last_negative() const { return negative_.back(); }
  std::string str() const;

  bool operator==(const Signature&) const = default;

private:
  std::vector<bool> negative_;
};

/// Throws std::invalid_argument if some letter is >= k.
void check_letters(const Word& w, unsigned k);

/// Parses a digit string ("0221") into a word over {0..k-1}.
Word parse_word(std::string_view text, unsigned k);
std::string word_str(const Word& w);

/// True iff q is not r^m for a strictly shorter r. Throws on empty q.
bool is_primitive(const Word& q);

/// Shortest r with q = r^m.
Word primitive_root(const Word& q);

struct SignCounts {
  std::size_t negatives = 0;        // N(q)
  std::vector<std::size_t> below;   // below[i] = #{letters < i}, i = 0..k
};

SignCounts sign_counts(const Word& q, const Signature& sigma);

/// Number of letters of q whose orientation is negative.
std::size_t negative_count(const Word& q, const Signature& sigma);

/// Eventually periodic infinite word pre * period^inf, always held in
/// normal form: period primitive, and pre (if nonempty) ends in a letter
/// different from the last letter of period. Equality of infinite words is
/// therefore equality of representations.
class EPWord {
public:
  /// Builds the normal form of pre * period^inf. Throws std::invalid_argument
  /// on an empty period, a letter >= k or k outside [2, kMaxAlphabet].
  static EPWord make(Word pre, Word period, unsigned k);

  /// Parses "PRE(P)" or "(P)".
  static EPWord parse(std::string_view text, unsigned k);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }
  unsigned alphabet() const { return k_; }

  /// Letter at 0-based position i.
  Letter at(std::size_t i) const {
    return i < pre_.size() ? pre_[i] : period_[(i - pre_.size()) % period_.size()];
  }

  /// First n letters.
  Word prefix(std::size_t n) const;

  EPWord shifted(std::size_t count = 1) const;

  /// Letterwise complement t -> k-1-t.
  EPWord complemented() const;

  /// Renders as "PRE(P)".
  std::string str() const;

  bool operator==(const EPWord&) const = default;
  /// Structural order for containers; unrelated to any signed order.
  auto operator<=>(const EPWord&) const = default;

private:
  EPWord(Word pre, Word period, unsigned k)
      : pre_(std::move(pre)), period_(std::move(period)), k_(k) {}

  Word pre_;
  Word period_;
  unsigned k_ = 2;
};

/// Compares the suffix of s starting at 0-based offset i with the suffix of
/// t starting at offset j under the signed order of sigma.
std::strong_ordering compare_suffixes(const EPWord& s, std::size_t i,
                                      const EPWord& t, std::size_t j,
                                      const Signature& sigma);

/// The signed order: scan while letters agree counting negative letters;
/// the first disagreement decides, reversed when that count is odd.
std::strong_ordering compare(const EPWord& s, const EPWord& t, const Signature& sigma);

/// Least and greatest words of the signed order.
struct ExtremalWords {
  EPWord least;
  EPWord greatest;
};

ExtremalWords extremal_words(const Signature& sigma);

/// Order isomorphism to the lexicographic picture: letters are complemented
/// while the number of preceding negative letters is odd.
EPWord psi_transform(const EPWord& s, const Signature& sigma);

/// The first-definition signed shift in the lexicographic picture: drop the
/// first letter and complement the rest if that letter is negative.
EPWord flip_shift(const EPWord& a, const Signature& sigma);

/// Exact value of sum_{i>=1} s_i k^{-i}.
Rational rational_value(const EPWord& s);

}  // namespace sigshift
