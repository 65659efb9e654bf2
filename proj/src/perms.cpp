#include "sigshift/perms.hpp"

#include <charconv>

namespace sigshift {

namespace {

std::vector<int> parse_entries(std::string_view text, bool allow_star) {
  std::vector<int> out;
  auto push_token = [&](std::string_view tok) {
    if (allow_star && tok == "*") {
      out.push_back(StarPerm::kStar);
      return;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1) {
      throw std::invalid_argument("bad permutation entry \"" + std::string(tok) + "\"");
    }
    out.push_back(v);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find(',', start), text.size());
      push_token(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) push_token(text.substr(i, 1));
    if (text.size() > 9) {
      throw std::invalid_argument("permutations longer than 9 need comma-separated entries");
    }
  }
  return out;
}

std::string render(const std::vector<int>& v, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (commas && i > 0) out.push_back(',');
    out += v[i] == StarPerm::kStar ? std::string("*") : std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const auto n = values_.size();
  if (n == 0) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [n]: " + render(values_, true));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_entries(text, false));
}

Permutation Permutation::complement() const {
  std::vector<int> v(values_);
  const int n = static_cast<int>(v.size());
  for (auto& x : v) x = n + 1 - x;
  return Permutation(std::move(v));
}

std::string Permutation::str() const { return render(values_, values_.size() > 9); }
std::string Permutation::comma_str() const { return render(values_, true); }

CyclicPerm::CyclicPerm(Permutation p) : perm_(std::move(p)) {
  if (!is_cyclic(perm_)) throw std::invalid_argument("not a single cycle: " + perm_.str());
}

StarPerm::StarPerm(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw std::invalid_argument("star permutation must be nonempty");
  std::vector<bool> seen(n + 1, false);
  std::size_t stars = 0;
  for (int v : entries_) {
    if (v == kStar) {
      ++stars;
      continue;
    }
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("bad star permutation: " + render(entries_, true));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (stars != 1) throw std::invalid_argument("star permutation needs exactly one '*'");
}

StarPerm StarPerm::parse(std::string_view text) { return StarPerm(parse_entries(text, true)); }

std::size_t StarPerm::star_position() const {
  return static_cast<std::size_t>(std::find(entries_.begin(), entries_.end(), kStar) -
                                  entries_.begin()) +
         1;
}

int StarPerm::missing_value() const {
  const long n = static_cast<long>(entries_.size());
  long sum = 0;
  for (int v : entries_) sum += v;
  return static_cast<int>(n * (n + 1) / 2 - sum);
}

Permutation StarPerm::restored() const {
  std::vector<int> v(entries_);
  v[star_position() - 1] = missing_value();
  return Permutation(std::move(v));
}

std::string StarPerm::str() const { return render(entries_, entries_.size() > 9); }

CyclicPerm hat(const Permutation& pi) {
  const auto n = pi.size();
  std::vector<int> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out[static_cast<std::size_t>(pi(i)) - 1] = pi(i == n ? 1 : i + 1);
  }
  return CyclicPerm(Permutation(std::move(out)));
}

StarPerm star(const Permutation& pi) {
  std::vector<int> entries = hat(pi).perm().values();
  entries[static_cast<std::size_t>(pi(pi.size())) - 1] = StarPerm::kStar;
  return StarPerm(std::move(entries));
}

bool is_cyclic(const Permutation& pi) {
  std::size_t length = 0;
  std::size_t at = 1;
  do {
    at = static_cast<std::size_t>(pi(at));
    ++length;
  } while (at != 1);
  return length == pi.size();
}

}  // namespace sigshift
