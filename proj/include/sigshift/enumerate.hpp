#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sigshift/characterize.hpp"
#include "sigshift/patterns.hpp"
#include "sigshift/perms.hpp"
#include "sigshift/words.hpp"

namespace sigshift {

using Count = std::int64_t;

/// Set of patterns of one length for one signature, sorted by one-line notation.
struct PatternSet {
  Signature sigma;
  std::size_t n = 0;
  std::set<Permutation> patterns;

  std::size_t size() const { return patterns.size(); }
  bool contains(const Permutation& p) const { return patterns.count(p) != 0; }
};

/// Number of primitive words of length t over k letters (Moebius inversion).
Count primitive_count(unsigned t, unsigned k);

/// a(n,k) = sum_{t=1}^{n-1} psi_k(t) k^{n-t-1}.
Count a_count(unsigned n, unsigned k);

Count ipow(Count base, unsigned exp);

/// Interval endpoints for length n.
struct EndpointSet {
  std::vector<EPWord> words;    // distinct, sorted by the signed order
  std::size_t generated = 0;    // family sizes before deduplication
};

EndpointSet endpoints(const Signature& sigma, unsigned n);

/// One allowed interval (to the right of an endpoint) and its pattern.
struct Interval {
  Rational left;          // real coordinate of the left endpoint
  Word prefix;            // first n-1 letters of every point inside
  Permutation pattern;
};

/// Intervals of constant pattern, one per distinct real endpoint below 1.
std::vector<Interval> allowed_intervals(const Signature& sigma, unsigned n);

struct AllowedSetOptions {
  /// Also add pattern(e) for every endpoint word whose pattern is defined.
  bool include_endpoint_patterns = true;
  unsigned jobs = 1;
};

PatternSet allowed_set(const Signature& sigma, unsigned n, const AllowedSetOptions& opts = {});

/// Patterns of all normal-form words u q^inf with |u| <= max_pre and q
/// primitive, |q| <= max_per. Sound by construction.
PatternSet oracle_set(const Signature& sigma, unsigned n, unsigned max_pre, unsigned max_per,
                      unsigned jobs = 1);

/// Every pi in S_n that decide() accepts.
PatternSet decided_set(const Signature& sigma, unsigned n);

/// Upper bound on |A_n| keyed on the first and last orientation; n >= 2.
Count upper_bound(const Signature& sigma, unsigned n);

struct TentBounds {
  Rational lower;   // (a_n + 2^{n-2}) / 2
  Count upper = 0;  // a_n - 2^{n-2} + 1
  Count lower_ceil() const;
};

TentBounds tent_bounds(unsigned n);

/// a_n + 2^{n-2} - 2; throws std::invalid_argument for n < 3.
Count reverse2_count(unsigned n);

struct Bound {
  std::string name;
  enum class Kind { Lower, Upper, Exact } kind = Kind::Upper;
  Count value = 0;
  bool ok = false;
};

struct BoundsReport {
  Signature sigma;
  unsigned n = 0;
  Count count = 0;
  std::vector<Bound> bounds;

  bool all_ok() const;
  std::optional<Count> tightest_lower() const;
  std::optional<Count> tightest_upper() const;
};

BoundsReport bounds_report(const Signature& sigma, unsigned n, Count count);

struct RecurrenceRow {
  unsigned k = 0;             // target alphabet size K
  Count intervals = 0;        // I_{n,K}
  Count theorem_sum = 0;      // sum_{i=2}^{K} C(n+K-i, K-1) b(n,i)
  Count proof_sum = 0;        // sum_{i=2}^{K} C(n+K-i, K-i) b(n,i)
  Count series_coeff = 0;     // [x^K] of sum b(n,i) x^i / (1-x)^n
};

struct RecurrenceReport {
  unsigned n = 0;
  unsigned k = 0;
  std::vector<Count> sizes;   // sizes[i] = |A_n(Sigma_i)|, i = 0..k (0,1 unused)
  std::vector<Count> b;       // b[i] = sizes[i] - sizes[i-1]
  bool nested = true;         // A_n(Sigma_{i-1}) subset of A_n(Sigma_i) for all i
  std::vector<RecurrenceRow> rows;

  std::string str() const;
};

Count binomial(Count n, Count r);
Count kshift_intervals(unsigned n, unsigned k);

RecurrenceReport kshift_recurrence_report(unsigned n, unsigned k);

struct TentStats {
  unsigned n = 0;
  Count patterns = 0;            // |A_n(Lambda)|
  Count intervals_formula = 0;   // a_n + 2^{n-2}
  Count intervals_counted = 0;   // from the enumerated endpoints
  Count unique_prefix = 0;       // c_n
  std::size_t max_prefixes = 0;  // most realizing prefixes of any pattern
  bool identity_holds = false;   // 2 |A_n| = I_n + c_n
  // Patterns meeting the segmentation + b criterion, under each block pairing.
  Count characterized_literal = 0;
  Count characterized_tail = 0;
  std::vector<Permutation> literal_mismatches;
  std::vector<Permutation> tail_mismatches;

  std::string str() const;
};

TentStats tent_unique_prefix_count(unsigned n);

/// Which entries the unique-prefix criterion pairs block by block.
enum class BlockPairing {
  Literal,  // pi_{n-2i} with pi_{n-i}
  Tail,     // pi_{n-b-i} with pi_{n-i}, as in the tail condition of decide()
};

/// Criterion for a uniquely determined tent prefix: some segmentation and b
/// with pi_n strictly between pi_{n-2b}, pi_{n-b} and the paired entries in
/// the same block for 1 <= i <= b.
bool tent_unique_prefix_criterion(const Permutation& pi, BlockPairing pairing);

struct ScanRow {
  unsigned n = 0;
  std::vector<std::pair<Signature, Count>> counts;
  bool chain_holds = true;  // count(sigma) <= count(+^k) <= count(-^k)
  std::vector<std::string> violations;
};

std::vector<ScanRow> conjecture_scan(unsigned k, unsigned n_max, unsigned jobs = 1);
std::string scan_str(const std::vector<ScanRow>& rows);

/// Every signature over k letters in lexicographic order ('+' < '-').
std::vector<Signature> all_signatures(unsigned k);

}  // namespace sigshift
