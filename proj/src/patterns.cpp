#include "sigshift/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sigshift {

PatternResult pattern(const EPWord& s, const Signature& sigma, std::size_t n) {
  if (n == 0) throw std::invalid_argument("pattern length must be >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (compare_suffixes(s, i, s, j, sigma) == 0) return Undefined{i, j};
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_suffixes(s, a, s, b, sigma) < 0;
  });
  std::vector<int> ranks(n);
  for (std::size_t r = 0; r < n; ++r) ranks[order[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(ranks));
}

namespace {

Rational apply_branch(const Rational& x, unsigned t, const Signature& sigma) {
  const unsigned k = sigma.size();
  Rational y;
  if (sigma.is_negative(static_cast<Letter>(t))) {
    y = Rational(t + 1) - k * x;
  } else {
    y = k * x - Rational(t);
  }
  y.canonicalize();
  return y;
}

// floor(k x) for x in [0, 1].
unsigned floor_scaled(const Rational& x, unsigned k) {
  mpz_class q = (x.get_num() * k) / x.get_den();
  return static_cast<unsigned>(q.get_ui());
}

bool is_breakpoint(const Rational& x, unsigned k) {
  return (x.get_num() * k) % x.get_den() == 0;
}

}  // namespace

Rational sawtooth_step(const Rational& x, const Signature& sigma) {
  if (x < 0 || x > 1) throw std::invalid_argument("sawtooth_step: x outside [0,1]");
  const unsigned k = sigma.size();
  const unsigned t = std::min(floor_scaled(x, k), k - 1);
  return apply_branch(x, t, sigma);
}

unsigned perturbed_branch(const PerturbedPoint& pt, const Signature& sigma) {
  const unsigned k = sigma.size();
  if ((pt.x == 1 && pt.sign > 0) || (pt.x == 0 && pt.sign < 0)) {
    throw std::logic_error("perturbed point leaves [0,1]");
  }
  const unsigned t = floor_scaled(pt.x, k);
  if (is_breakpoint(pt.x, k) && pt.sign < 0) return t - 1;
  return t;
}

PerturbedPoint perturbed_step(const PerturbedPoint& pt, const Signature& sigma) {
  const unsigned t = perturbed_branch(pt, sigma);
  const bool flips = sigma.is_negative(static_cast<Letter>(t));
  return {apply_branch(pt.x, t, sigma), flips ? -pt.sign : pt.sign, pt.step + 1};
}

RightLimitOrbit right_limit_orbit(const Rational& x, const Signature& sigma, std::size_t n) {
  if (n == 0) throw std::invalid_argument("pattern length must be >= 1");
  if (x < 0 || x >= 1) {
    throw std::invalid_argument("right limit needs 0 <= x < 1");
  }
  RightLimitOrbit orbit;
  orbit.states.reserve(n);
  orbit.states.push_back({x, 1, 0});
  while (orbit.states.size() < n) {
    const auto& cur = orbit.states.back();
    orbit.branches.push_back(static_cast<Letter>(perturbed_branch(cur, sigma)));
    orbit.states.push_back(perturbed_step(cur, sigma));
  }
  return orbit;
}

Permutation right_limit_pattern(const Rational& x, const Signature& sigma, std::size_t n) {
  const auto orbit = right_limit_orbit(x, sigma, n);
  // Equal x: order by coefficient sign * k^step; magnitudes grow with step.
  auto less = [](const PerturbedPoint& a, const PerturbedPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.sign > 0 ? a.step < b.step : a.step > b.step;
  };
  return reduce(std::span<const PerturbedPoint>(orbit.states), less);
}

Rational phi(const EPWord& s, const Signature& sigma) {
  return rational_value(psi_transform(s, sigma));
}

}  // namespace sigshift
