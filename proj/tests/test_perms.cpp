#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigshift/perms.hpp"

using namespace sigshift;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

// Orbit walk; independent of the library's is_cyclic.
bool single_cycle(const std::vector<int>& one_line) {
  std::size_t len = 0;
  int v = 1;
  do {
    v = one_line[static_cast<std::size_t>(v - 1)];
    ++len;
  } while (v != 1 && len <= one_line.size());
  return len == one_line.size();
}

}  // namespace

TEST_SUITE("perms") {

TEST_CASE("construction and parsing") {
  CHECK(P("591482637").values() == std::vector<int>{5, 9, 1, 4, 8, 2, 6, 3, 7});
  CHECK(P("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK(P("10,1,2,3,4,5,6,7,8,9").str() == "10,1,2,3,4,5,6,7,8,9");
  CHECK(P("312").comma_str() == "3,1,2");
  CHECK(P("312")(1) == 3);
  CHECK(Permutation::identity(4).str() == "1234");
  CHECK(P("132").complement() == P("312"));

  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P("124"), std::invalid_argument);
  CHECK_THROWS_AS(P("1a"), std::invalid_argument);
}

TEST_CASE("reduce") {
  const std::vector<double> v{3.3, 3.7, 9, 6, 0.2};
  CHECK(reduce(std::span<const double>(v)) == P("23541"));
  const std::vector<int> w{8, 6, 7};
  CHECK(reduce(std::span<const int>(w)) == P("312"));
  const std::vector<int> up{-4, 0, 10, 11};
  CHECK(reduce(std::span<const int>(up)) == Permutation::identity(4));
  const std::vector<int> dup{1, 2, 1};
  CHECK_THROWS_AS(reduce(std::span<const int>(dup)), std::invalid_argument);

  // Idempotent on every permutation of length 5.
  std::vector<int> p{1, 2, 3, 4, 5};
  do {
    CHECK(reduce(std::span<const int>(p)).values() == p);
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("hat") {
  CHECK(hat(P("17234856")).perm() == P("73486125"));
  CHECK(hat(P("834192675")).perm() == P("964187532"));
  CHECK(hat(P("12")).perm() == P("21"));
  CHECK(hat(P("1")).perm() == P("1"));

  // hat lands in the cyclic permutations, and hat(pi) sends pi_i to pi_{i+1}.
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do {
      const Permutation pi(p);
      const auto h = hat(pi).perm();
      CHECK(single_cycle(h.values()));
      for (int i = 1; i <= n; ++i) {
        CHECK(h(static_cast<std::size_t>(pi(static_cast<std::size_t>(i)))) ==
              pi(static_cast<std::size_t>(i % n + 1)));
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST_CASE("is_cyclic") {
  CHECK(is_cyclic(P("37512864")));
  CHECK(is_cyclic(P("47861352")));
  CHECK_FALSE(is_cyclic(P("12")));
  CHECK(is_cyclic(P("1")));

  std::vector<int> p{1, 2, 3, 4, 5, 6};
  int cyclic = 0;
  do {
    const bool c = is_cyclic(Permutation(p));
    CHECK(c == single_cycle(p));
    cyclic += c;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(cyclic == 120);  // (n-1)!

  CHECK_THROWS_AS(CyclicPerm(P("213")), std::invalid_argument);
  CHECK_NOTHROW(CyclicPerm(P("231")));
}

TEST_CASE("star") {
  CHECK(star(P("834192675")).str() == "9641*7532");
  CHECK(star(P("591482637")).str() == "467893*21");
  CHECK(star(P("1")).str() == "*");

  const auto s = StarPerm::parse("9641*7532");
  CHECK(s.star_position() == 5);
  CHECK(s.missing_value() == 8);
  CHECK(s.is_star(5));
  CHECK(s(1) == 9);
  CHECK(s.restored() == P("964187532"));

  CHECK_THROWS_AS(StarPerm::parse("123"), std::invalid_argument);
  CHECK_THROWS_AS(StarPerm::parse("1**"), std::invalid_argument);
  CHECK_THROWS_AS(StarPerm::parse("1*1"), std::invalid_argument);

  std::vector<int> p{1, 2, 3, 4, 5, 6};
  do {
    const Permutation pi(p);
    const auto tau = star(pi);
    CHECK(tau.star_position() == static_cast<std::size_t>(p.back()));
    CHECK(tau.missing_value() == p.front());
    CHECK(tau.restored() == hat(pi).perm());
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // TEST_SUITE
