#include "sigshift/characterize.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sigshift {

unsigned Segmentation::block_of(int v) const {
  for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
    if (cuts[t] < v && v <= cuts[t + 1]) return static_cast<unsigned>(t);
  }
  throw std::invalid_argument("value " + std::to_string(v) + " outside segmentation " + str());
}

std::string Segmentation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(cuts[i]);
  }
  return out + ")";
}

namespace {

// Condition (a): each block monotone in its orientation, wildcard skipped.
bool blocks_monotone(const StarPerm& tau, const Signature& sigma, const std::vector<int>& e) {
  for (unsigned t = 0; t < sigma.size(); ++t) {
    int prev = StarPerm::kStar;
    for (int pos = e[t] + 1; pos <= e[t + 1]; ++pos) {
      const int v = tau(static_cast<std::size_t>(pos));
      if (v == StarPerm::kStar) continue;
      if (prev != StarPerm::kStar && ((prev < v) == sigma.is_negative(static_cast<Letter>(t)))) {
        return false;
      }
      prev = v;
    }
  }
  return true;
}

// Conditions (b)-(e) on where the wildcard may sit.
bool star_placement_ok(const StarPerm& tau, const Signature& sigma, const std::vector<int>& e) {
  const int n = static_cast<int>(tau.size());
  if (n < 2) return true;
  const std::size_t un = tau.size();
  const unsigned k = sigma.size();
  const int e1 = e[1];
  const int ek1 = e[k - 1];
  const bool starts_star_one = tau.is_star(1) && tau(2) == 1;
  const bool ends_n_star = tau(un - 1) == n && tau.is_star(un);
  const bool starts_star_n = tau.is_star(1) && tau(2) == n;
  const bool ends_one_star = tau(un - 1) == 1 && tau.is_star(un);

  if (!sigma.first_negative() && starts_star_one && e1 > 1) return false;       // (b)
  if (!sigma.last_negative() && ends_n_star && ek1 < n - 1) return false;       // (c)
  if (sigma.first_negative() && sigma.last_negative()) {
    if (tau(1) == n && ends_one_star && !(e1 == 0 || ek1 >= n - 1)) return false;   // (d)
    if (tau(un) == 1 && starts_star_n && !(ek1 == n || e1 <= 1)) return false;      // (e)
  }
  return true;
}

void enumerate_cuts(std::vector<int>& e, unsigned level, int n,
                    const std::function<void(const std::vector<int>&)>& visit) {
  if (level + 1 == e.size()) {
    visit(e);
    return;
  }
  for (int c = e[level - 1]; c <= n; ++c) {
    e[level] = c;
    enumerate_cuts(e, level + 1, n, visit);
  }
}

EPWord append(const Word& prefix, const EPWord& tail) {
  Word pre(prefix);
  pre.insert(pre.end(), tail.preperiod().begin(), tail.preperiod().end());
  return EPWord::make(std::move(pre), tail.period(), tail.alphabet());
}

bool realizes(const EPWord& w, const Signature& sigma, const Permutation& pi) {
  const auto result = pattern(w, sigma, pi.size());
  const auto* perm = std::get_if<Permutation>(&result);
  return perm != nullptr && *perm == pi;
}

}  // namespace

std::vector<Segmentation> star_segmentations(const StarPerm& tau, const Signature& sigma) {
  const int n = static_cast<int>(tau.size());
  std::vector<int> e(sigma.size() + 1, 0);
  e.back() = n;
  std::vector<Segmentation> out;
  enumerate_cuts(e, 1, n, [&](const std::vector<int>& cuts) {
    if (blocks_monotone(tau, sigma, cuts) && star_placement_ok(tau, sigma, cuts)) {
      out.push_back({cuts});
    }
  });
  return out;
}

Word monotone_word(const Permutation& pi, const Segmentation& seg) {
  if (seg.cuts.empty() || seg.cuts.back() != static_cast<int>(pi.size())) {
    throw std::invalid_argument("segmentation " + seg.str() + " does not end at n");
  }
  Word s(pi.size());
  for (std::size_t i = 1; i <= pi.size(); ++i) s[i - 1] = static_cast<Letter>(seg.block_of(pi(i)));
  return s;
}

std::optional<int> dagger_violation(const Permutation& pi, const Segmentation& seg) {
  const int n = static_cast<int>(pi.size());
  const auto at = [&](int i) { return pi(static_cast<std::size_t>(i)); };
  for (int b = 1; 2 * b <= n - 1; ++b) {
    const int lo = std::min(at(n - 2 * b), at(n - b));
    const int hi = std::max(at(n - 2 * b), at(n - b));
    if (!(lo < at(n) && at(n) < hi)) continue;
    bool repeats = true;
    for (int i = 1; i <= b && repeats; ++i) {
      repeats = seg.block_of(at(n - b - i)) == seg.block_of(at(n - i));
    }
    if (repeats) return b;
  }
  return std::nullopt;
}

std::optional<Witness> build_witness(const Permutation& pi, const Signature& sigma,
                                     const Segmentation& seg) {
  const std::size_t n = pi.size();
  const Word s = monotone_word(pi, seg);
  const Word prefix(s.begin(), s.end() - 1);
  const auto [least, greatest] = extremal_words(sigma);

  if (pi(n) == 1 || pi(n) == static_cast<int>(n)) {
    EPWord w = append(prefix, pi(n) == 1 ? least : greatest);
    if (realizes(w, sigma, pi)) return Witness{std::move(w), std::nullopt};
    return std::nullopt;
  }

  // Middle case: repeat the block from the neighbour of pi_n in value.
  for (int neighbour : {pi(n) + 1, pi(n) - 1}) {
    std::size_t x = 1;
    while (pi(x) != neighbour) ++x;
    const Word u(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(x - 1));
    const Word p(s.begin() + static_cast<std::ptrdiff_t>(x - 1), s.end() - 1);
    Word body(u);
    for (std::size_t r = 0; r + 1 < n; ++r) body.insert(body.end(), p.begin(), p.end());
    for (const EPWord* tail : {&least, &greatest}) {
      EPWord w = append(body, *tail);
      if (realizes(w, sigma, pi)) return Witness{std::move(w), p};
    }
  }
  return std::nullopt;
}

Verdict decide(const Permutation& pi, const Signature& sigma) {
  const auto segs = star_segmentations(star(pi), sigma);
  if (segs.empty()) return NotAllowed{Rejection::NoSegmentation, std::nullopt};
  std::optional<int> first_b;
  bool passed = false;
  for (const auto& seg : segs) {
    if (auto b = dagger_violation(pi, seg)) {
      if (!first_b) first_b = b;
      continue;
    }
    passed = true;
    if (auto w = build_witness(pi, sigma, seg)) {
      return Allowed{seg, monotone_word(pi, seg), std::move(*w)};
    }
  }
  if (passed) {
    throw std::logic_error("no witness word realizes " + pi.str() + " under " + sigma.str());
  }
  return NotAllowed{Rejection::DaggerFails, first_b};
}

bool block_shape_ok(const Word& p, const Signature& sigma) {
  if (is_primitive(p)) return true;
  if (p.size() % 2 != 0) return false;
  const Word q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2));
  const Word qq = [&] {
    Word w(q);
    w.insert(w.end(), q.begin(), q.end());
    return w;
  }();
  return qq == p && is_primitive(q) && negative_count(q, sigma) % 2 == 1;
}

}  // namespace sigshift
