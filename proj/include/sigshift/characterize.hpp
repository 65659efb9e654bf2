#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigshift/patterns.hpp"
#include "sigshift/perms.hpp"
#include "sigshift/words.hpp"

namespace sigshift {

/// Cut vector 0 = e_0 <= e_1 <= ... <= e_k = n. Value v lies in block t
/// when e_t < v <= e_{t+1}.
struct Segmentation {
  std::vector<int> cuts;

  /// Block index of value v in [1, n].
  unsigned block_of(int v) const;
  std::string str() const;

  bool operator==(const Segmentation&) const = default;
  auto operator<=>(const Segmentation&) const = default;
};

/// All *-sigma-segmentations of tau, in lexicographic order of the cuts.
std::vector<Segmentation> star_segmentations(const StarPerm& tau, const Signature& sigma);

/// s_i = block of pi_i.
Word monotone_word(const Permutation& pi, const Segmentation& seg);

/// Smallest half-period b violating the tail condition, if any: pi_n lies
/// strictly between pi_{n-2b} and pi_{n-b}, and the monotone word repeats its
/// last b letters before position n.
std::optional<int> dagger_violation(const Permutation& pi, const Segmentation& seg);

inline bool dagger_ok(const Permutation& pi, const Segmentation& seg) {
  return !dagger_violation(pi, seg).has_value();
}

/// A realizing word and, in the middle case 1 < pi_n < n, the repeated block.
struct Witness {
  EPWord word;
  std::optional<Word> block;
};

/// Candidate words from the monotone prefix; returns the first whose
/// pattern equals pi, or nullopt.
std::optional<Witness> build_witness(const Permutation& pi, const Signature& sigma,
                                     const Segmentation& seg);

struct Allowed {
  Segmentation segmentation;
  Word monotone;
  Witness witness;
};

enum class Rejection { NoSegmentation, DaggerFails };

struct NotAllowed {
  Rejection reason = Rejection::NoSegmentation;
  /// For DaggerFails: violating b of the first segmentation.
  std::optional<int> b;
};

using Verdict = std::variant<Allowed, NotAllowed>;

/// Decides membership in the allowed patterns of the signed shift. Throws
/// std::logic_error if a segmentation passes every test yet no candidate
/// witness realizes pi.
Verdict decide(const Permutation& pi, const Signature& sigma);

inline bool is_allowed(const Verdict& v) { return std::holds_alternative<Allowed>(v); }

/// p is primitive, or p = q^2 with q primitive and N(q) odd.
bool block_shape_ok(const Word& p, const Signature& sigma);

}  // namespace sigshift
