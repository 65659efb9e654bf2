#include "sigshift/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sigshift {

namespace {

// Runs body(i, out) for i in [0, count) over `jobs` threads and unions the
// per-thread sets. The union is order independent, so results do not
// depend on scheduling.
template <typename T>
std::set<T> parallel_collect(std::size_t count, unsigned jobs,
                             const std::function<void(std::size_t, std::set<T>&)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<std::set<T>> partial(jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, partial[0]);
    return std::move(partial[0]);
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += jobs) body(i, partial[w]);
    });
  }
  for (auto& t : workers) t.join();
  std::set<T> out;
  for (auto& p : partial) out.merge(p);
  return out;
}

// All words of the given length in lexicographic order.
std::vector<Word> all_words(unsigned length, unsigned k) {
  std::vector<Word> out;
  Word w(length, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] == k - 1) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

int moebius(unsigned d) {
  int mu = 1;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    mu = -mu;
  }
  return d > 1 ? -mu : mu;
}

bool same_orientation_ends(const Signature& sigma, bool negative) {
  return sigma.first_negative() == negative && sigma.last_negative() == negative;
}

}  // namespace

Count ipow(Count base, unsigned exp) {
  Count r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

Count primitive_count(unsigned t, unsigned k) {
  if (t == 0) throw std::invalid_argument("primitive_count needs t >= 1");
  Count total = 0;
  for (unsigned d = 1; d <= t; ++d) {
    if (t % d == 0) total += moebius(d) * ipow(k, t / d);
  }
  return total;
}

Count a_count(unsigned n, unsigned k) {
  Count total = 0;
  for (unsigned t = 1; t + 1 <= n; ++t) total += primitive_count(t, k) * ipow(k, n - t - 1);
  return total;
}

EndpointSet endpoints(const Signature& sigma, unsigned n) {
  if (n < 2) throw std::invalid_argument("endpoints need n >= 2");
  const unsigned k = sigma.size();
  const auto [least, greatest] = extremal_words(sigma);
  EndpointSet out;
  std::set<EPWord> distinct;
  for (const Word& w : all_words(n - 1, k)) {
    for (std::size_t split = 0; split + 1 <= w.size(); ++split) {
      Word p(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
      if (!is_primitive(p)) continue;
      distinct.insert(EPWord::make(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)),
                                   std::move(p), k));
      ++out.generated;
    }
    for (const EPWord* tail : {&least, &greatest}) {
      Word pre(w);
      pre.insert(pre.end(), tail->preperiod().begin(), tail->preperiod().end());
      distinct.insert(EPWord::make(std::move(pre), tail->period(), k));
      ++out.generated;
    }
  }
  out.words.assign(distinct.begin(), distinct.end());
  std::sort(out.words.begin(), out.words.end(),
            [&](const EPWord& a, const EPWord& b) { return compare(a, b, sigma) < 0; });
  return out;
}

std::vector<Interval> allowed_intervals(const Signature& sigma, unsigned n) {
  std::set<Rational> lefts;
  for (const EPWord& e : endpoints(sigma, n).words) {
    Rational x = phi(e, sigma);
    if (x < 1) lefts.insert(std::move(x));
  }
  std::vector<Interval> out;
  out.reserve(lefts.size());
  for (const Rational& x : lefts) {
    auto orbit = right_limit_orbit(x, sigma, n);
    out.push_back({x, std::move(orbit.branches), right_limit_pattern(x, sigma, n)});
  }
  return out;
}

PatternSet allowed_set(const Signature& sigma, unsigned n, const AllowedSetOptions& opts) {
  PatternSet out{sigma, n, {}};
  if (n == 0) throw std::invalid_argument("pattern length must be >= 1");
  if (n == 1) {
    out.patterns.insert(Permutation::identity(1));
    return out;
  }
  const auto ends = endpoints(sigma, n).words;
  out.patterns = parallel_collect<Permutation>(
      ends.size(), opts.jobs, [&](std::size_t i, std::set<Permutation>& acc) {
        const EPWord& e = ends[i];
        const Rational x = phi(e, sigma);
        if (x < 1) acc.insert(right_limit_pattern(x, sigma, n));
        if (opts.include_endpoint_patterns) {
          auto r = pattern(e, sigma, n);
          if (auto* p = std::get_if<Permutation>(&r)) acc.insert(std::move(*p));
        }
      });
  return out;
}

PatternSet oracle_set(const Signature& sigma, unsigned n, unsigned max_pre, unsigned max_per,
                      unsigned jobs) {
  const unsigned k = sigma.size();
  std::vector<Word> prefixes;
  for (unsigned len = 0; len <= max_pre; ++len) {
    for (auto& w : all_words(len, k)) prefixes.push_back(std::move(w));
  }
  std::vector<Word> periods;
  for (unsigned len = 1; len <= max_per; ++len) {
    for (auto& w : all_words(len, k)) {
      if (is_primitive(w)) periods.push_back(std::move(w));
    }
  }
  PatternSet out{sigma, n, {}};
  out.patterns = parallel_collect<Permutation>(
      prefixes.size(), jobs, [&](std::size_t i, std::set<Permutation>& acc) {
        const Word& u = prefixes[i];
        for (const Word& q : periods) {
          // Only normal forms, so every word is visited once.
          if (!u.empty() && u.back() == q.back()) continue;
          auto r = pattern(EPWord::make(u, q, k), sigma, n);
          if (auto* p = std::get_if<Permutation>(&r)) acc.insert(std::move(*p));
        }
      });
  return out;
}

PatternSet decided_set(const Signature& sigma, unsigned n) {
  PatternSet out{sigma, n, {}};
  std::vector<int> v = Permutation::identity(n).values();
  do {
    Permutation pi(v);
    if (is_allowed(decide(pi, sigma))) out.patterns.insert(std::move(pi));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Count upper_bound(const Signature& sigma, unsigned n) {
  if (n < 2) throw std::invalid_argument("upper_bound needs n >= 2");
  const Count k = sigma.size();
  const Count a = a_count(n, static_cast<unsigned>(k));
  if (same_orientation_ends(sigma, false)) return a + (k - 2) * ipow(k, n - 2);
  if (!same_orientation_ends(sigma, true)) return a + (k - 1) * ipow(k, n - 2);
  // Words of length n-1 not ending in 0(k-1) or (k-1)0; all k of them when n = 2.
  if (n == 2) return a + k;
  return a + (k * k - 2) * ipow(k, n - 3);
}

Count TentBounds::lower_ceil() const {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), lower.get_num_mpz_t(), lower.get_den_mpz_t());
  return static_cast<Count>(c.get_si());
}

TentBounds tent_bounds(unsigned n) {
  if (n < 3) throw std::invalid_argument("tent bounds need n >= 3");
  const Count a = a_count(n, 2);
  Rational lower(a + ipow(2, n - 2), 2);
  lower.canonicalize();
  return {lower, a - ipow(2, n - 2) + 1};
}

Count reverse2_count(unsigned n) {
  if (n < 3) throw std::invalid_argument("reverse shift count needs n >= 3");
  return a_count(n, 2) + ipow(2, n - 2) - 2;
}

bool BoundsReport::all_ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const Bound& b) { return b.ok; });
}

std::optional<Count> BoundsReport::tightest_lower() const {
  std::optional<Count> best;
  for (const auto& b : bounds) {
    if (b.kind == Bound::Kind::Upper) continue;
    if (!best || b.value > *best) best = b.value;
  }
  return best;
}

std::optional<Count> BoundsReport::tightest_upper() const {
  std::optional<Count> best;
  for (const auto& b : bounds) {
    if (b.kind == Bound::Kind::Lower) continue;
    if (!best || b.value < *best) best = b.value;
  }
  return best;
}

BoundsReport bounds_report(const Signature& sigma, unsigned n, Count count) {
  BoundsReport r{sigma, n, count, {}};
  auto add = [&](std::string name, Bound::Kind kind, Count value) {
    const bool ok = kind == Bound::Kind::Lower   ? count >= value
                    : kind == Bound::Kind::Upper ? count <= value
                                                 : count == value;
    r.bounds.push_back({std::move(name), kind, value, ok});
  };
  if (n >= 2) add("interval_upper", Bound::Kind::Upper, upper_bound(sigma, n));
  if (sigma.size() == 2) {
    const std::string s = sigma.str();
    if (s == "++" && n >= 2) add("binary_shift_exact", Bound::Kind::Exact, a_count(n, 2));
    if ((s == "+-" || s == "-+") && n >= 3) {
      const auto tb = tent_bounds(n);
      add("tent_lower", Bound::Kind::Lower, tb.lower_ceil());
      add("tent_upper", Bound::Kind::Upper, tb.upper);
    }
    if (s == "--" && n >= 3) add("reverse_shift_exact", Bound::Kind::Exact, reverse2_count(n));
  }
  return r;
}

Count binomial(Count n, Count r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Count out = 1;
  for (Count i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

Count kshift_intervals(unsigned n, unsigned k) {
  return a_count(n, k) + static_cast<Count>(k - 2) * ipow(k, n - 2);
}

RecurrenceReport kshift_recurrence_report(unsigned n, unsigned k) {
  if (n < 3 || k < 3) throw std::invalid_argument("recurrence report needs n >= 3, k >= 3");
  RecurrenceReport r;
  r.n = n;
  r.k = k;
  r.sizes.assign(k + 1, 0);
  r.b.assign(k + 1, 0);
  std::set<Permutation> previous;
  for (unsigned i = 2; i <= k; ++i) {
    auto set = allowed_set(Signature::all_plus(i), n).patterns;
    r.nested = r.nested && std::includes(set.begin(), set.end(), previous.begin(), previous.end());
    r.sizes[i] = static_cast<Count>(set.size());
    // The one-letter shift realizes no pattern of length >= 2.
    r.b[i] = r.sizes[i] - (i == 2 ? 0 : r.sizes[i - 1]);
    previous = std::move(set);
  }
  for (unsigned big = 2; big <= k; ++big) {
    RecurrenceRow row;
    row.k = big;
    row.intervals = kshift_intervals(n, big);
    for (unsigned i = 2; i <= big; ++i) {
      row.theorem_sum += binomial(n + big - i, big - 1) * r.b[i];
      row.proof_sum += binomial(n + big - i, big - i) * r.b[i];
      row.series_coeff += binomial(big - i + n - 1, n - 1) * r.b[i];
    }
    r.rows.push_back(row);
  }
  return r;
}

std::string RecurrenceReport::str() const {
  std::ostringstream os;
  os << "k-shift recurrence report, n=" << n << ", k=" << k << "\n";
  os << "nested: " << (nested ? "yes" : "NO") << "\n";
  for (unsigned i = 2; i <= k; ++i) {
    os << "  |A_n(Sigma_" << i << ")| = " << sizes[i] << ", b(n," << i << ") = " << b[i] << "\n";
  }
  os << "  K  I_{n,K}  C(n+K-i,K-1)  C(n+K-i,K-i)  series[x^K]\n";
  for (const auto& row : rows) {
    auto mark = [&](Count v) { return std::to_string(v) + (v == row.intervals ? " ok" : " MISMATCH"); };
    os << "  " << row.k << "  " << row.intervals << "  " << mark(row.theorem_sum) << "  "
       << mark(row.proof_sum) << "  " << mark(row.series_coeff) << "\n";
  }
  return os.str();
}

bool tent_unique_prefix_criterion(const Permutation& pi, BlockPairing pairing) {
  const Signature tent = Signature::parse("+-");
  const int n = static_cast<int>(pi.size());
  const auto at = [&](int i) { return pi(static_cast<std::size_t>(i)); };
  for (const auto& seg : star_segmentations(star(pi), tent)) {
    for (int b = 1; 2 * b <= n - 1; ++b) {
      const int lo = std::min(at(n - 2 * b), at(n - b));
      const int hi = std::max(at(n - 2 * b), at(n - b));
      if (!(lo < at(n) && at(n) < hi)) continue;
      bool match = true;
      for (int i = 1; i <= b && match; ++i) {
        const int partner = pairing == BlockPairing::Literal ? n - 2 * i : n - b - i;
        match = seg.block_of(at(partner)) == seg.block_of(at(n - i));
      }
      if (match) return true;
    }
  }
  return false;
}

TentStats tent_unique_prefix_count(unsigned n) {
  if (n < 3) throw std::invalid_argument("tent statistics need n >= 3");
  const Signature tent = Signature::parse("+-");
  TentStats st;
  st.n = n;
  const auto set = allowed_set(tent, n);
  st.patterns = static_cast<Count>(set.size());
  st.intervals_formula = a_count(n, 2) + ipow(2, n - 2);

  std::map<Permutation, std::set<Word>> prefixes;
  const auto intervals = allowed_intervals(tent, n);
  st.intervals_counted = static_cast<Count>(intervals.size());
  for (const auto& iv : intervals) prefixes[iv.pattern].insert(iv.prefix);
  for (const auto& [pi, words] : prefixes) {
    st.max_prefixes = std::max(st.max_prefixes, words.size());
    const bool unique = words.size() == 1;
    if (unique) ++st.unique_prefix;
    const bool literal = tent_unique_prefix_criterion(pi, BlockPairing::Literal);
    const bool tail = tent_unique_prefix_criterion(pi, BlockPairing::Tail);
    if (literal) ++st.characterized_literal;
    if (tail) ++st.characterized_tail;
    if (literal != unique) st.literal_mismatches.push_back(pi);
    if (tail != unique) st.tail_mismatches.push_back(pi);
  }
  st.identity_holds = 2 * st.patterns == st.intervals_formula + st.unique_prefix;
  return st;
}

std::string TentStats::str() const {
  std::ostringstream os;
  os << "tent statistics, n=" << n << "\n"
     << "  |A_n|            = " << patterns << "\n"
     << "  I_n (formula)    = " << intervals_formula << "\n"
     << "  I_n (counted)    = " << intervals_counted << "\n"
     << "  c_n              = " << unique_prefix << "\n"
     << "  2|A_n| = I_n+c_n : " << (identity_holds ? "holds" : "FAILS") << "\n"
     << "  max prefixes     = " << max_prefixes << "\n"
     << "  criterion, pairing pi_{n-2i}:   " << characterized_literal << " patterns, "
     << literal_mismatches.size() << " mismatches\n"
     << "  criterion, pairing pi_{n-b-i}:  " << characterized_tail << " patterns, "
     << tail_mismatches.size() << " mismatches\n";
  auto list = [&](const std::vector<Permutation>& v, const char* label) {
    for (std::size_t i = 0; i < v.size() && i < 10; ++i) {
      os << "    " << label << " " << v[i].str() << "\n";
    }
    if (v.size() > 10) os << "    " << label << " ... (" << v.size() - 10 << " more)\n";
  };
  list(literal_mismatches, "pi_{n-2i}:");
  list(tail_mismatches, "pi_{n-b-i}:");
  return os.str();
}

std::vector<Signature> all_signatures(unsigned k) {
  std::vector<Signature> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<bool> neg(k);
    for (unsigned t = 0; t < k; ++t) neg[t] = (mask >> (k - 1 - t)) & 1u;
    out.emplace_back(std::move(neg));
  }
  return out;
}

std::vector<ScanRow> conjecture_scan(unsigned k, unsigned n_max, unsigned jobs) {
  const auto sigs = all_signatures(k);
  const Signature plus = Signature::all_plus(k);
  const Signature minus = Signature::all_minus(k);
  std::vector<ScanRow> rows;
  for (unsigned n = 1; n <= n_max; ++n) {
    ScanRow row;
    row.n = n;
    std::map<std::string, Count> by_sig;
    for (const auto& s : sigs) {
      const Count c = static_cast<Count>(allowed_set(s, n, {true, jobs}).size());
      row.counts.emplace_back(s, c);
      by_sig[s.str()] = c;
    }
    const Count cp = by_sig[plus.str()];
    const Count cm = by_sig[minus.str()];
    if (cp > cm) {
      row.chain_holds = false;
      row.violations.push_back(plus.str() + " > " + minus.str());
    }
    for (const auto& [s, c] : row.counts) {
      if (s == plus || s == minus) continue;
      if (c > cp) {
        row.chain_holds = false;
        row.violations.push_back(s.str() + " > " + plus.str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string scan_str(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  os << "n";
  for (const auto& [s, c] : rows.front().counts) os << "," << s.str();
  os << ",chain_holds\n";
  for (const auto& row : rows) {
    os << row.n;
    for (const auto& [s, c] : row.counts) os << "," << c;
    os << "," << (row.chain_holds ? "yes" : "no");
    for (const auto& v : row.violations) os << " [" << v << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace sigshift
