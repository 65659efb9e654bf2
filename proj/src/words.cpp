#include "sigshift/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigshift {

namespace {

void check_alphabet(unsigned k) {
  if (k < 2 || k > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [2, " +
                                std::to_string(kMaxAlphabet) + "], got " +
                                std::to_string(k));
  }
}

Word complement(Word w, unsigned k) {
  for (auto& c : w) c = static_cast<Letter>(k - 1 - c);
  return w;
}

}  // namespace

Signature::Signature(std::vector<bool> negative) : negative_(std::move(negative)) {
  check_alphabet(static_cast<unsigned>(negative_.size()));
}

Signature Signature::parse(std::string_view text) {
  std::vector<bool> neg;
  neg.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      neg.push_back(false);
    } else if (c == '-') {
      neg.push_back(true);
    } else {
      throw std::invalid_argument("bad signature character '" + std::string(1, c) +
                                  "' in \"" + std::string(text) + "\"");
    }
  }
  return Signature(std::move(neg));
}

Signature Signature::all_plus(unsigned k) { return Signature(std::vector<bool>(k, false)); }
Signature Signature::all_minus(unsigned k) { return Signature(std::vector<bool>(k, true)); }

std::string Signature::str() const {
  std::string out;
  for (bool b : negative_) out.push_back(b ? '-' : '+');
  return out;
}

void check_letters(const Word& w, unsigned k) {
  for (Letter c : w) {
    if (c >= k) {
      throw std::invalid_argument("letter " + std::to_string(c) +
                                  " out of range for alphabet of size " + std::to_string(k));
    }
  }
}

Word parse_word(std::string_view text, unsigned k) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("bad letter '" + std::string(1, c) + "' in word \"" +
                                  std::string(text) + "\"");
    }
    w.push_back(static_cast<Letter>(c - '0'));
  }
  check_letters(w, k);
  return w;
}

std::string word_str(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(static_cast<char>('0' + c));
  return out;
}

Word primitive_root(const Word& q) {
  if (q.empty()) throw std::invalid_argument("primitive_root of empty word");
  const std::size_t n = q.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = q[i] == q[i - d];
    if (repeats) return Word(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return q;
}

bool is_primitive(const Word& q) { return primitive_root(q).size() == q.size(); }

std::size_t negative_count(const Word& q, const Signature& sigma) {
  return static_cast<std::size_t>(
      std::count_if(q.begin(), q.end(), [&](Letter c) { return sigma.is_negative(c); }));
}

SignCounts sign_counts(const Word& q, const Signature& sigma) {
  check_letters(q, sigma.size());
  SignCounts out;
  out.negatives = negative_count(q, sigma);
  out.below.assign(sigma.size() + 1, 0);
  for (Letter c : q) {
    for (unsigned i = c + 1u; i <= sigma.size(); ++i) ++out.below[i];
  }
  return out;
}

EPWord EPWord::make(Word pre, Word period, unsigned k) {
  check_alphabet(k);
  if (period.empty()) throw std::invalid_argument("eventually periodic word needs a nonempty period");
  check_letters(pre, k);
  check_letters(period, k);
  period = primitive_root(period);
  // Absorb trailing preperiod letters into a rotation of the period.
  while (!pre.empty() && pre.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    pre.pop_back();
  }
  return EPWord(std::move(pre), std::move(period), k);
}

EPWord EPWord::parse(std::string_view text, unsigned k) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')' ||
      text.find('(', open + 1) != std::string_view::npos) {
    throw std::invalid_argument("word literal must look like PRE(PERIOD): \"" +
                                std::string(text) + "\"");
  }
  auto pre = parse_word(text.substr(0, open), k);
  auto per = parse_word(text.substr(open + 1, text.size() - open - 2), k);
  return make(std::move(pre), std::move(per), k);
}

Word EPWord::prefix(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

EPWord EPWord::shifted(std::size_t count) const {
  if (count <= pre_.size()) {
    return EPWord(Word(pre_.begin() + static_cast<std::ptrdiff_t>(count), pre_.end()), period_, k_);
  }
  const std::size_t r = (count - pre_.size()) % period_.size();
  Word per(period_);
  std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
  return EPWord({}, std::move(per), k_);
}

EPWord EPWord::complemented() const {
  return EPWord(complement(pre_, k_), complement(period_, k_), k_);
}

std::string EPWord::str() const { return word_str(pre_) + "(" + word_str(period_) + ")"; }

std::strong_ordering compare_suffixes(const EPWord& s, std::size_t i, const EPWord& t,
                                      std::size_t j, const Signature& sigma) {
  if (s.alphabet() != t.alphabet() || s.alphabet() != sigma.size()) {
    throw std::invalid_argument("compare: mismatched alphabet sizes");
  }
  const std::size_t pre_s = s.preperiod().size() > i ? s.preperiod().size() - i : 0;
  const std::size_t pre_t = t.preperiod().size() > j ? t.preperiod().size() - j : 0;
  const std::size_t depth =
      std::max(pre_s, pre_t) + std::lcm(s.period().size(), t.period().size());
  bool flipped = false;
  for (std::size_t m = 0; m < depth; ++m) {
    const Letter a = s.at(i + m);
    const Letter b = t.at(j + m);
    if (a != b) {
      return (a < b) != flipped ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (sigma.is_negative(a)) flipped = !flipped;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const EPWord& s, const EPWord& t, const Signature& sigma) {
  return compare_suffixes(s, 0, t, 0, sigma);
}

ExtremalWords extremal_words(const Signature& sigma) {
  const unsigned k = sigma.size();
  const Letter top = static_cast<Letter>(k - 1);
  const bool first_neg = sigma.first_negative();
  const bool last_neg = sigma.last_negative();

  EPWord greatest = !last_neg   ? EPWord::make({}, {top}, k)
                    : !first_neg ? EPWord::make({top}, {0}, k)
                                 : EPWord::make({}, {top, 0}, k);
  EPWord least = !first_neg  ? EPWord::make({}, {0}, k)
                 : !last_neg ? EPWord::make({0}, {top}, k)
                             : EPWord::make({}, {0, top}, k);
  return {std::move(least), std::move(greatest)};
}

EPWord psi_transform(const EPWord& s, const Signature& sigma) {
  const unsigned k = s.alphabet();
  bool odd = false;
  auto transform = [&](const Word& in) {
    Word out;
    out.reserve(in.size());
    for (Letter c : in) {
      out.push_back(odd ? static_cast<Letter>(k - 1 - c) : c);
      if (sigma.is_negative(c)) odd = !odd;
    }
    return out;
  };
  Word pre = transform(s.preperiod());
  Word period = transform(s.period());
  if (negative_count(s.period(), sigma) % 2 == 1) {
    // Odd N(p): the image repeats only after two periods.
    Word second = transform(s.period());
    period.insert(period.end(), second.begin(), second.end());
  }
  return EPWord::make(std::move(pre), std::move(period), k);
}

EPWord flip_shift(const EPWord& a, const Signature& sigma) {
  const bool negative = sigma.is_negative(a.at(0));
  EPWord tail = a.shifted(1);
  return negative ? tail.complemented() : tail;
}

Rational rational_value(const EPWord& s) {
  const unsigned k = s.alphabet();
  mpz_class pre_num = 0;
  for (Letter c : s.preperiod()) pre_num = pre_num * k + c;
  mpz_class per_num = 0;
  for (Letter c : s.period()) per_num = per_num * k + c;

  mpz_class pre_scale;
  mpz_ui_pow_ui(pre_scale.get_mpz_t(), k, s.preperiod().size());
  mpz_class per_scale;
  mpz_ui_pow_ui(per_scale.get_mpz_t(), k, s.period().size());

  // pre/k^|u| + per / (k^|u| (k^|p| - 1))
  Rational value(pre_num * (per_scale - 1) + per_num, pre_scale * (per_scale - 1));
  value.canonicalize();
  return value;
}

}  // namespace sigshift
