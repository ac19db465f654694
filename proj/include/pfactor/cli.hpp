#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pfactor/pfactor.hpp"

// Subcommand bodies, kept apart from argument parsing so tests can drive them
// with string streams. Each returns the process exit code.

namespace pfactor::cli {

enum Exit : int { kClean = 0, kInputError = 1, kInvariantViolation = 2 };

enum class Format { Jsonl, Csv };

struct Options {
  double tol = kDefaultTol;
  std::size_t max_exact_n = kMaxExactOrder;
  std::size_t max_witness_n = kMaxWitnessOrder;
  std::uint64_t seed = 42;
  Format format = Format::Jsonl;
  std::optional<std::int64_t> timeout_ms;
  unsigned jobs = 1;
  bool edge_list = false;  // input is one edge-list document instead of graph6 lines
  bool lenient_padding = false;
};

struct Input {
  std::string id;
  std::string text;
};

/// graph6 lines (blank lines skipped, ids are 1-based line numbers) or a single
/// edge-list document.
inline std::vector<Input> read_inputs(std::istream& in, const Options& opt) {
  std::vector<Input> out;
  if (opt.edge_list) {
    std::ostringstream all;
    all << in.rdbuf();
    out.push_back({"1", all.str()});
    return out;
  }
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back({std::to_string(no), line});
  }
  return out;
}

inline Graph load(const Input& in, const Options& opt) {
  if (opt.edge_list) {
    std::istringstream s(in.text);
    return parse_edge_list(s);
  }
  const auto first = in.text.find_first_not_of(" \t");
  const auto last = in.text.find_last_not_of(" \t");
  return parse_graph6(std::string_view(in.text).substr(first, last - first + 1), Graph6Options{!opt.lenient_padding});
}

inline json error_json(const std::string& id, const Error& e) {
  return {{"input", id}, {"error", code_name(e.code())}, {"message", e.what()}};
}

/// Runs `body` over every input on `jobs` threads and writes results in input
/// order. Returns the worst exit code.
inline int run_each(const std::vector<Input>& inputs, const Options& opt, std::ostream& out,
                    const std::function<int(const Input&, std::string&)>& body) {
  std::vector<std::string> lines(inputs.size());
  std::vector<int> codes(inputs.size(), kClean);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        codes[i] = body(inputs[i], lines[i]);
      } catch (const Error& e) {
        lines[i] = error_json(inputs[i].id, e).dump();
        codes[i] = kInputError;
      }
    }
  };
  const unsigned jobs = std::max(1U, opt.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  int worst = kClean;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    out << lines[i] << '\n';
    worst = std::max(worst, codes[i]);
  }
  return worst;
}

inline FactorSearchOptions search_options(const Options& opt) {
  FactorSearchOptions fo;
  fo.max_order = opt.max_exact_n;
  if (opt.timeout_ms) fo.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*opt.timeout_ms);
  return fo;
}

inline std::string_view search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "none";
    case SearchStatus::TimedOut: return "unknown";
  }
  return "unknown";
}

// verify ----------------------------------------------------------------------

struct Verdict {
  json body;
  bool violation = false;
};

/// Per-graph verdict. Conditions:
///   isolation  no set S with 3 i(G - S) > 2 |S| (exhaustive, n <= max_witness_n)
///   size       connected, delta not divisible by 3, n >= n_min_size, m > size threshold
///   spectral   connected, delta not divisible by 3, n >= n_min_spectral, rho > rho threshold + tol
/// Each satisfied condition guarantees a factor; a contradiction with the
/// exact decider is an invariant violation.
inline Verdict verdict(const Graph& g, const std::string& id, const Options& opt) {
  Verdict v;
  json& j = v.body;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(min_degree(g));
  const bool connected = is_connected(g);
  j["input"] = id;
  j["n"] = n;
  j["m"] = g.size();
  j["delta"] = delta;
  j["connected"] = connected;
  j["rho"] = connected ? spectral_radius(g, opt.tol).rho : spectral_radius_any(g, opt.tol);

  json guaranteed = json::array();
  bool size_holds = false;
  bool spectral_holds = false;
  if (connected && delta >= 1 && delta % 3 != 0 && (n >= n_min_size(delta) || n >= n_min_spectral(delta))) {
    const auto t = thresholds(n, delta, opt.tol);
    j["size_threshold"] = t.size_threshold;
    j["rho_threshold"] = t.rho_threshold;
    size_holds = t.size_condition_in_range && static_cast<std::int64_t>(g.size()) > t.size_threshold;
    spectral_holds = t.spectral_condition_in_range && j["rho"].get<double>() > t.rho_threshold + opt.tol;
    j["rho_guard"] = opt.tol;
  } else {
    j["size_threshold"] = nullptr;
    j["rho_threshold"] = nullptr;
  }
  j["size_condition"] = size_holds;
  j["spectral_condition"] = spectral_holds;

  std::optional<bool> witness_free;
  if (g.order() <= opt.max_witness_n) {
    const auto w = find_witness(g, opt.max_witness_n);
    j["witness"] = w ? to_json(*w) : json(nullptr);
    witness_free = !w.has_value();
  } else {
    j["witness"] = nullptr;
    j["witness_skipped"] = "order above " + std::to_string(opt.max_witness_n);
  }
  if (witness_free.value_or(false)) guaranteed.push_back("isolation");
  if (size_holds) guaranteed.push_back("size");
  if (spectral_holds) guaranteed.push_back("spectral");

  std::optional<bool> has;
  if (g.order() <= opt.max_exact_n && g.order() <= kWordOrder) {
    const auto search = search_factor(g, search_options(opt));
    j["factor_status"] = search_status_name(search.status);
    j["factor"] = search.factor ? to_json(*search.factor) : json(nullptr);
    if (search.status == SearchStatus::TimedOut) j["reason"] = "timeout";
    if (search.factor) {
      const auto check = verify_factor(g, *search.factor);
      if (!check) {
        v.violation = true;
        j["violation"] = "certificate rejected: " + check.reason;
      }
    }
    if (search.status != SearchStatus::TimedOut) has = search.factor.has_value();
  } else {
    j["factor_status"] = "skipped";
    j["factor"] = nullptr;
    j["reason"] = "order above " + std::to_string(opt.max_exact_n);
  }
  j["guaranteed_by"] = guaranteed;
  if (has && !*has && !guaranteed.empty()) {
    v.violation = true;
    j["violation"] = "condition " + guaranteed[0].get<std::string>() + " holds but no factor exists";
  }
  return v;
}

inline std::string verdict_csv_header() {
  return "input,n,m,delta,connected,rho,size_threshold,rho_threshold,size_condition,spectral_condition,witness_s,"
         "witness_isolated,factor_status,guaranteed_by";
}

inline std::string verdict_csv(const json& j) {
  auto field = [&j](const char* k) -> std::string {
    if (!j.contains(k) || j[k].is_null()) return "";
    return j[k].is_string() ? j[k].get<std::string>() : j[k].dump();
  };
  std::string guaranteed;
  for (const auto& c : j["guaranteed_by"]) guaranteed += (guaranteed.empty() ? "" : ";") + c.get<std::string>();
  const bool w = !j["witness"].is_null();
  std::ostringstream s;
  s << field("input") << ',' << field("n") << ',' << field("m") << ',' << field("delta") << ',' << field("connected") << ','
    << field("rho") << ',' << field("size_threshold") << ',' << field("rho_threshold") << ',' << field("size_condition") << ','
    << field("spectral_condition") << ',' << (w ? j["witness"]["s"].dump() : "") << ','
    << (w ? j["witness"]["isolated"].dump() : "") << ',' << field("factor_status") << ',' << guaranteed;
  return s.str();
}

inline int cmd_verify(std::istream& in, std::ostream& out, const Options& opt) {
  const auto inputs = read_inputs(in, opt);
  if (opt.format == Format::Csv) out << verdict_csv_header() << '\n';
  return run_each(inputs, opt, out, [&opt](const Input& input, std::string& line) {
    const Verdict v = verdict(load(input, opt), input.id, opt);
    line = opt.format == Format::Csv ? verdict_csv(v.body) : v.body.dump();
    return v.violation ? kInvariantViolation : kClean;
  });
}

// single-graph wrappers -----------------------------------------------------------

inline int cmd_rho(std::istream& in, std::ostream& out, const Options& opt) {
  return run_each(read_inputs(in, opt), opt, out, [&opt](const Input& input, std::string& line) {
    const Graph g = load(input, opt);
    json j{{"input", input.id}, {"n", g.order()}, {"m", g.size()}, {"connected", is_connected(g)}};
    if (is_connected(g)) {
      const auto r = spectral_radius(g, opt.tol);
      j["rho"] = r.rho;
      j["iterations"] = r.iterations;
      j["residual"] = r.residual;
      j["hong_bound"] = hong_bound(g);
    } else {
      j["rho"] = spectral_radius_any(g, opt.tol);
    }
    line = j.dump();
    return kClean;
  });
}

inline int cmd_factor(std::istream& in, std::ostream& out, const Options& opt) {
  return run_each(read_inputs(in, opt), opt, out, [&opt](const Input& input, std::string& line) {
    const Graph g = load(input, opt);
    const auto search = search_factor(g, search_options(opt));
    json j{{"input", input.id}, {"n", g.order()}, {"status", search_status_name(search.status)},
           {"factor", search.factor ? to_json(*search.factor) : json(nullptr)}, {"states", search.states}};
    int code = kClean;
    if (search.factor && !verify_factor(g, *search.factor)) {
      j["violation"] = "certificate rejected";
      code = kInvariantViolation;
    }
    line = j.dump();
    return code;
  });
}

inline int cmd_witness(std::istream& in, std::ostream& out, const Options& opt) {
  return run_each(read_inputs(in, opt), opt, out, [&opt](const Input& input, std::string& line) {
    const Graph g = load(input, opt);
    const auto w = find_witness(g, opt.max_witness_n);
    line = json{{"input", input.id}, {"n", g.order()}, {"witness", w ? to_json(*w) : json(nullptr)}}.dump();
    return kClean;
  });
}

inline int cmd_thresholds(std::int64_t n, std::int64_t delta, std::ostream& out, const Options& opt) {
  out << to_json(thresholds(n, delta, opt.tol)).dump() << '\n';
  return kClean;
}

/// The extremal graph on (n, s); threshold fields are filled when s is an
/// admissible minimum degree.
inline int cmd_extremal(std::int64_t n, std::int64_t s, std::ostream& out, const Options& opt) {
  const auto par = ExtremalParams::make(n, s);
  const Graph g = build_extremal(n, s);
  json j{{"n", n}, {"delta", s}, {"q", par.q}, {"p", par.p}, {"m", g.size()}};
  if (s % 3 != 0) {
    j["size_threshold"] = edge_count_closed_form(n, s);
    j["rho_threshold"] = rho_closed_form(n, s, opt.tol);
    j["n_min_size"] = n_min_size(s);
    j["n_min_spectral"] = n_min_spectral(s);
  } else {
    j["rho"] = rho_closed_form(n, s, opt.tol);
  }
  j["graph6"] = emit_graph6(g);
  out << j.dump() << '\n';
  return kClean;
}

// audit ---------------------------------------------------------------------

struct AuditOptions {
  audit::AuditConfig grid;
  std::size_t trials = 200;
  std::vector<std::pair<std::int64_t, std::int64_t>> samples{{25, 1}, {31, 2}};
  std::int64_t remark_max_n = 14;
  std::optional<std::string> summary_path;  // claim x status CSV
};

inline std::string summary_csv(const std::vector<audit::Entry>& entries) {
  std::ostringstream s;
  s << "claim,verified,mismatch,typo-resolved,empty\n";
  for (const auto& [claim, c] : audit::summarize(entries)) s << claim << ',' << c[0] << ',' << c[1] << ',' << c[2] << ',' << c[3] << '\n';
  return s.str();
}

/// Identity sweep, seeded contrapositive sampling and remark probes. Report
/// lines go to `out` (JSONL, or the summary CSV with Format::Csv); a short
/// human summary goes to `err`. Exit 2 only for sampling counterexamples or
/// rejected certificates: mismatching printed formulas are findings.
inline int cmd_audit(const AuditOptions& a, std::ostream& out, std::ostream& err, const Options& opt) {
  audit::AuditConfig grid = a.grid;
  grid.tol = opt.tol;
  auto entries = audit::run_identity_audit(grid);
  int code = kClean;
  for (const auto& [n, d] : a.samples) {
    entries.push_back(audit::contrapositive_sample(n, d, a.trials, opt.seed));
    if (entries.back().status == audit::Status::Mismatch) code = kInvariantViolation;
  }
  for (std::int64_t d : {1, 2}) {
    for (std::int64_t n = (5 * d) / 3 + 2; n <= std::min<std::int64_t>(a.remark_max_n, static_cast<std::int64_t>(opt.max_exact_n)); ++n) {
      auto r = audit::remark_audit(n, d, opt.max_exact_n);
      if (r.search.factor && !r.certificate_check) code = kInvariantViolation;
      entries.push_back(std::move(r.entry));
    }
  }
  std::stable_sort(entries.begin(), entries.end(), audit::detail::entry_less);

  if (opt.format == Format::Csv) {
    out << summary_csv(entries);
  } else {
    for (const auto& e : entries) out << audit::to_json(e).dump() << '\n';
  }
  if (a.summary_path) {
    std::ofstream f(*a.summary_path);
    if (!f) detail::fail(ErrorCode::InvalidArgument, "cannot write " + *a.summary_path);
    f << summary_csv(entries);
  }
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& e : entries) ++counts[static_cast<std::size_t>(e.status)];
  err << entries.size() << " entries: " << counts[0] << " verified, " << counts[1] << " mismatch, " << counts[2]
      << " typo-resolved, " << counts[3] << " empty\n";
  return code;
}

}  // namespace pfactor::cli
