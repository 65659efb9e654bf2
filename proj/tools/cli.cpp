#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigshift/characterize.hpp"
#include "sigshift/enumerate.hpp"
#include "sigshift/patterns.hpp"

namespace sigshift::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string sigma;
  unsigned n = 0;
  unsigned k = 2;
  unsigned n_max = 0;
  std::string word;
  std::string perm;
  std::string out_path;
  std::string format = "text";
  std::optional<unsigned> pre;
  std::optional<unsigned> per;
  unsigned jobs = 1;
};

// Thrown when a command ran but its check failed (exit 1 without a message).
struct CheckFailed {};

Signature parse_sigma(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--sigma is required");
  return Signature::parse(text);
}

void require_n(unsigned n) {
  if (n < 1) throw std::invalid_argument("--n must be >= 1");
}

void require_k(unsigned k) {
  if (k < 2 || k > kMaxAlphabet) throw std::invalid_argument("--k must be in [2, 10]");
}

ordered_json bounds_json(const BoundsReport& r) {
  ordered_json b = ordered_json::object();
  for (const auto& bound : r.bounds) {
    const char* kind = bound.kind == Bound::Kind::Lower   ? "lower"
                       : bound.kind == Bound::Kind::Upper ? "upper"
                                                          : "exact";
    b[bound.name] = {{"kind", kind}, {"value", bound.value}, {"ok", bound.ok}};
  }
  return b;
}

std::string render_set(const PatternSet& set, const std::string& format) {
  const auto report = bounds_report(set.sigma, static_cast<unsigned>(set.n),
                                    static_cast<Count>(set.size()));
  std::ostringstream os;
  if (format == "json") {
    ordered_json j;
    j["signature"] = set.sigma.str();
    j["n"] = set.n;
    j["count"] = set.size();
    j["patterns"] = ordered_json::array();
    for (const auto& p : set.patterns) j["patterns"].push_back(p.comma_str());
    j["bounds"] = bounds_json(report);
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << "pattern\n";
    for (const auto& p : set.patterns) os << '"' << p.comma_str() << "\"\n";
  } else {
    for (const auto& p : set.patterns) os << p.str() << "\n";
    os << "count " << set.size() << "\n";
  }
  return os.str();
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::runtime_error("cannot open " + cfg.out_path + " for writing");
  f << text;
  out << "wrote " << cfg.out_path << "\n";
}

void cmd_pattern(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  require_n(cfg.n);
  const auto word = EPWord::parse(cfg.word, sigma.size());
  const auto result = pattern(word, sigma, cfg.n);
  if (const auto* p = std::get_if<Permutation>(&result)) {
    out << p->str() << "\n";
  } else {
    const auto& u = std::get<Undefined>(result);
    out << "undefined(" << u.i << "," << u.j << ")\n";
  }
}

void cmd_decide(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  const auto pi = Permutation::parse(cfg.perm);
  const auto verdict = decide(pi, sigma);
  if (const auto* ok = std::get_if<Allowed>(&verdict)) {
    out << "allowed\n"
        << "segmentation: " << ok->segmentation.str() << "\n"
        << "monotone word: " << word_str(ok->monotone) << "\n"
        << "witness: " << ok->witness.word.str() << "\n";
    return;
  }
  const auto& no = std::get<NotAllowed>(verdict);
  if (no.reason == Rejection::NoSegmentation) {
    out << "not allowed: no segmentation\n";
  } else {
    out << "not allowed: dagger fails (b=" << no.b.value_or(0) << ")\n";
  }
}

void cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  require_n(cfg.n);
  const auto set = allowed_set(sigma, cfg.n, {true, cfg.jobs});
  emit(render_set(set, cfg.format), cfg, out);
}

void cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  require_n(cfg.n);
  const auto set = oracle_set(sigma, cfg.n, cfg.pre.value_or(cfg.n), cfg.per.value_or(cfg.n), cfg.jobs);
  emit(render_set(set, cfg.format), cfg, out);
}

void cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  require_n(cfg.n);
  const auto enumerated = allowed_set(sigma, cfg.n, {true, cfg.jobs});
  const auto oracle =
      oracle_set(sigma, cfg.n, cfg.pre.value_or(cfg.n), cfg.per.value_or(cfg.n), cfg.jobs);
  const auto decided = decided_set(sigma, cfg.n);
  out << "signature " << sigma.str() << ", n=" << cfg.n << "\n"
      << "  enumerated: " << enumerated.size() << "\n"
      << "  oracle:     " << oracle.size() << "\n"
      << "  decided:    " << decided.size() << "\n";
  const bool agree =
      enumerated.patterns == oracle.patterns && enumerated.patterns == decided.patterns;
  out << (agree ? "agree" : "MISMATCH") << "\n";
  if (!agree) {
    auto diff = [&](const PatternSet& a, const PatternSet& b, const char* label) {
      for (const auto& p : a.patterns) {
        if (!b.contains(p)) out << "  " << label << " " << p.str() << "\n";
      }
    };
    diff(enumerated, oracle, "enumerated-not-oracle");
    diff(oracle, enumerated, "oracle-not-enumerated");
    diff(enumerated, decided, "enumerated-not-decided");
    diff(decided, enumerated, "decided-not-enumerated");
    throw CheckFailed{};
  }
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto sigma = parse_sigma(cfg.sigma);
  require_n(cfg.n);
  const auto set = allowed_set(sigma, cfg.n, {true, cfg.jobs});
  const auto r = bounds_report(sigma, cfg.n, static_cast<Count>(set.size()));
  if (cfg.format == "json") {
    ordered_json j{{"signature", sigma.str()}, {"n", cfg.n}, {"count", r.count},
                   {"bounds", bounds_json(r)}};
    out << j.dump(2) << "\n";
  } else {
    out << "signature " << sigma.str() << ", n=" << cfg.n << ", count " << r.count << "\n";
    for (const auto& b : r.bounds) {
      const char* rel = b.kind == Bound::Kind::Lower ? ">=" : b.kind == Bound::Kind::Upper ? "<=" : "==";
      out << "  " << b.name << ": count " << rel << " " << b.value << " "
          << (b.ok ? "ok" : "VIOLATED") << "\n";
    }
  }
  if (!r.all_ok()) throw CheckFailed{};
}

void cmd_table(const RunConfig& cfg, std::ostream& out) {
  require_k(cfg.k);
  std::ostringstream os;
  os << "signature,n,count,lower_bound,upper_bound,bound_ok\n";
  for (unsigned n = 1; n <= cfg.n_max; ++n) {
    for (const auto& sigma : all_signatures(cfg.k)) {
      const auto count = static_cast<Count>(allowed_set(sigma, n, {true, cfg.jobs}).size());
      const auto r = bounds_report(sigma, n, count);
      auto opt = [](std::optional<Count> v) { return v ? std::to_string(*v) : std::string(); };
      os << sigma.str() << "," << n << "," << count << "," << opt(r.tightest_lower()) << ","
         << opt(r.tightest_upper()) << "," << (r.all_ok() ? "true" : "false") << "\n";
    }
  }
  emit(os.str(), cfg, out);
}

void cmd_scan(const RunConfig& cfg, std::ostream& out) {
  require_k(cfg.k);
  emit(scan_str(conjecture_scan(cfg.k, cfg.n_max, cfg.jobs)), cfg, out);
}

void cmd_recurrence(const RunConfig& cfg, std::ostream& out) {
  require_k(cfg.k);
  emit(kshift_recurrence_report(cfg.n, cfg.k).str(), cfg, out);
}

void cmd_tent_stats(const RunConfig& cfg, std::ostream& out) {
  const auto st = tent_unique_prefix_count(cfg.n);
  emit(st.str(), cfg, out);
  if (!st.identity_holds || st.max_prefixes > 2) throw CheckFailed{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Allowed patterns of signed shifts"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto sigma_opt = [&](CLI::App* sub) {
    sub->add_option("--sigma", cfg.sigma, "signature, e.g. +--")->required();
  };
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "pattern length")->required(); };
  auto jobs_opt = [&](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", cfg.out_path, "output file"); };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* pattern_cmd = app.add_subcommand("pattern", "pattern of an eventually periodic word");
  sigma_opt(pattern_cmd);
  n_opt(pattern_cmd);
  pattern_cmd->add_option("--word", cfg.word, "word literal PRE(PERIOD)")->required();

  auto* decide_cmd = app.add_subcommand("decide", "decide whether a permutation is allowed");
  sigma_opt(decide_cmd);
  decide_cmd->add_option("--perm", cfg.perm, "permutation in one-line notation")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all allowed patterns of length n");
  sigma_opt(enumerate_cmd);
  n_opt(enumerate_cmd);
  out_opt(enumerate_cmd);
  format_opt(enumerate_cmd);
  jobs_opt(enumerate_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "patterns of short eventually periodic words");
  sigma_opt(oracle_cmd);
  n_opt(oracle_cmd);
  out_opt(oracle_cmd);
  format_opt(oracle_cmd);
  jobs_opt(oracle_cmd);
  oracle_cmd->add_option("--pre", cfg.pre, "longest preperiod");
  oracle_cmd->add_option("--per", cfg.per, "longest period");

  auto* cross_cmd = app.add_subcommand("crosscheck", "three-way agreement check");
  sigma_opt(cross_cmd);
  n_opt(cross_cmd);
  jobs_opt(cross_cmd);
  cross_cmd->add_option("--pre", cfg.pre, "oracle preperiod bound");
  cross_cmd->add_option("--per", cfg.per, "oracle period bound");

  auto* bounds_cmd = app.add_subcommand("bounds", "count against the known bounds");
  sigma_opt(bounds_cmd);
  n_opt(bounds_cmd);
  format_opt(bounds_cmd);
  jobs_opt(bounds_cmd);

  auto* table_cmd = app.add_subcommand("table", "CSV sweep over all signatures");
  table_cmd->add_option("--k", cfg.k, "alphabet size")->required();
  table_cmd->add_option("--nmax", cfg.n_max, "largest n")->required();
  out_opt(table_cmd);
  jobs_opt(table_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "conjectured inequality chain");
  scan_cmd->add_option("--k", cfg.k, "alphabet size")->required();
  scan_cmd->add_option("--nmax", cfg.n_max, "largest n")->required();
  out_opt(scan_cmd);
  jobs_opt(scan_cmd);

  auto* rec_cmd = app.add_subcommand("recurrence", "k-shift recurrence report");
  rec_cmd->add_option("--k", cfg.k, "alphabet size")->required();
  rec_cmd->add_option("--n", cfg.n, "pattern length")->required();
  out_opt(rec_cmd);

  auto* tent_cmd = app.add_subcommand("tent-stats", "unique-prefix identity for the tent map");
  tent_cmd->add_option("--n", cfg.n, "pattern length")->required();
  out_opt(tent_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (*pattern_cmd) cmd_pattern(cfg, out);
    else if (*decide_cmd) cmd_decide(cfg, out);
    else if (*enumerate_cmd) cmd_enumerate(cfg, out);
    else if (*oracle_cmd) cmd_oracle(cfg, out);
    else if (*cross_cmd) cmd_crosscheck(cfg, out);
    else if (*bounds_cmd) cmd_bounds(cfg, out);
    else if (*table_cmd) cmd_table(cfg, out);
    else if (*scan_cmd) cmd_scan(cfg, out);
    else if (*rec_cmd) cmd_recurrence(cfg, out);
    else if (*tent_cmd) cmd_tent_stats(cfg, out);
  } catch (const CheckFailed&) {
    return kFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace sigshift::cli
