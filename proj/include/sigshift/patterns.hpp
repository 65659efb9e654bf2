#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "sigshift/perms.hpp"
#include "sigshift/words.hpp"

namespace sigshift {

/// Two of the first n suffixes coincide (0-based shift counts i < j).
struct Undefined {
  std::size_t i = 0;
  std::size_t j = 0;
  bool operator==(const Undefined&) const = default;
};

using PatternResult = std::variant<Permutation, Undefined>;

/// Relative order of s, shift(s), ..., shift^{n-1}(s) under the signed order.
PatternResult pattern(const EPWord& s, const Signature& sigma, std::size_t n);

/// One step of the signed sawtooth map on [0,1]; x = 1 uses the last branch.
/// Throws std::invalid_argument outside [0,1].
Rational sawtooth_step(const Rational& x, const Signature& sigma);

/// x + sign * eps * k^step for an infinitesimal eps > 0.
struct PerturbedPoint {
  Rational x;
  int sign = 1;
  unsigned step = 0;

  bool operator==(const PerturbedPoint&) const = default;
};

/// Branch (letter) the sawtooth map applies to pt. Throws std::logic_error
/// for the states 1+eps and 0-eps.
unsigned perturbed_branch(const PerturbedPoint& pt, const Signature& sigma);

PerturbedPoint perturbed_step(const PerturbedPoint& pt, const Signature& sigma);

/// Orbit of x+eps: the n states and the n-1 branches taken between them.
struct RightLimitOrbit {
  std::vector<PerturbedPoint> states;
  Word branches;
};

RightLimitOrbit right_limit_orbit(const Rational& x, const Signature& sigma, std::size_t n);

/// Pattern shared by all points immediately to the right of x.
/// Throws std::invalid_argument at x = 1 (the global maximum).
Permutation right_limit_pattern(const Rational& x, const Signature& sigma, std::size_t n);

/// Real coordinate of a word: rational_value(psi_transform(s)).
Rational phi(const EPWord& s, const Signature& sigma);

}  // namespace sigshift
