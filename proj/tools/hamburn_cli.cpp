// Command-line surface over the hamburn library. Every subcommand emits
// machine-readable output (JSON by default) so runs can be reproduced and
// diffed exactly. Exit codes: 0 success, 1 guarantee/invariant failure,
// 2 usage error, 3 capacity error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hamburn/hamburn.hpp"

namespace {

using hamburn::json;

constexpr int kExitOk = 0;
constexpr int kExitGuarantee = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::uint64_t env_budget() {
  const char* v = std::getenv("HAMBURN_CAP");
  if (!v) return hamburn::kDefaultVertexBudget;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("HAMBURN_CAP is not a valid unsigned integer");
  }
}

void emit(const json& j, const std::string& format, const std::string& output_path) {
  std::string text;
  if (format == "table") {
    for (const auto& [key, value] : j.items()) {
      if (value.is_string())
        text += key + ": " + value.get<std::string>() + "\n";
      else
        text += key + ": " + value.dump() + "\n";
    }
  } else {
    text = hamburn::dump_stable(j);
  }
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + output_path);
    out << text;
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file " + path);
  json j;
  in >> j;
  return j;
}

struct CommonOpts {
  std::string format = "json";
  std::string output;
  unsigned workers = 0;  // 0 = all cores
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Write output to this file instead of stdout");
  cmd->add_option("--workers", opts.workers,
                  "Worker threads for parallel subcommands (0 = all cores); results never depend "
                  "on this");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hamburn: exact burning-number machinery for Hamming graphs H(n, q).\n"
      "Rationals are serialized as exact \"p/q\" strings; vertices as 1-based\n"
      "integer arrays. Seeded subcommands are deterministic for a fixed\n"
      "configuration, independent of --workers."};
  app.require_subcommand(1);

  // bounds
  int b_n = 0, b_q = 0;
  std::uint64_t b_cap = 0;
  CommonOpts b_opts;
  auto* bounds = app.add_subcommand(
      "bounds", "Closed-form lower/upper bounds for b(H(n, q)) plus the exact value when the "
                "graph fits the enumeration budget");
  bounds->add_option("--n", b_n, "Word length n")->required();
  bounds->add_option("--q", b_q, "Alphabet size q")->required();
  bounds->add_option("--cap", b_cap, "Enumeration budget in vertices (overrides HAMBURN_CAP)");
  add_common(bounds, b_opts);

  // burn-number
  int bn_n = 0, bn_q = 0;
  std::uint64_t bn_cap = 0;
  CommonOpts bn_opts;
  auto* burnnum = app.add_subcommand(
      "burn-number", "Exact b(H(n, q)) by exhaustive search with a witness sequence");
  burnnum->add_option("--n", bn_n, "Word length n")->required();
  burnnum->add_option("--q", bn_q, "Alphabet size q")->required();
  burnnum->add_option("--cap", bn_cap, "Enumeration budget in vertices (overrides HAMBURN_CAP)");
  add_common(burnnum, bn_opts);

  // verify-sequence
  int vs_n = 0, vs_q = 0;
  std::uint64_t vs_cap = 0;
  std::string vs_input;
  CommonOpts vs_opts;
  auto* verify = app.add_subcommand(
      "verify-sequence",
      "Check whether a sequence of centers burns H(n, q); reports the first uncovered vertex");
  verify->add_option("--n", vs_n, "Word length n")->required();
  verify->add_option("--q", vs_q, "Alphabet size q")->required();
  verify->add_option("--input", vs_input, "JSON file: array of vertices (1-based symbol arrays)")
      ->required();
  verify->add_option("--cap", vs_cap, "Enumeration budget in vertices (overrides HAMBURN_CAP)");
  add_common(verify, vs_opts);

  // evade
  int ev_n = 0, ev_q = 0;
  std::string ev_input;
  CommonOpts ev_opts;
  auto* evade_cmd = app.add_subcommand(
      "evade", "Construct a vertex w with d(v_i, w) >= m+1-i for the given centers (at most "
               "m = floor((1-1/q)n) of them), with an exact certificate");
  evade_cmd->add_option("--n", ev_n, "Word length n")->required();
  evade_cmd->add_option("--q", ev_q, "Alphabet size q (q >= 3)")->required();
  evade_cmd->add_option("--input", ev_input, "JSON file: array of vertices, length <= m")
      ->required();
  add_common(evade_cmd, ev_opts);

  // bs-check
  int bs_n = 0, bs_trials = 100;
  std::uint64_t bs_seed = 0;
  CommonOpts bs_opts;
  auto* bs = app.add_subcommand(
      "bs-check", "Two-color existence oracle: random sign-vector instances solved by full "
                  "enumeration; a missing witness is a failure");
  bs->add_option("--n", bs_n, "Dimension n (<= 20)")->required();
  bs->add_option("--trials", bs_trials, "Number of random instances")->capture_default_str();
  bs->add_option("--seed", bs_seed, "PRNG seed")->capture_default_str();
  add_common(bs, bs_opts);

  // openproblem
  int op_k = 1;
  std::string op_mode = "randomized";
  std::uint64_t op_budget = 10000, op_seed = 0;
  CommonOpts op_opts;
  auto* op = app.add_subcommand(
      "openproblem",
      "Search H(3k+1, 3) for vertices evading the shifted-distance constraints g(u_i, w) < i. "
      "Internally symbols are {0,1,2} as the g/f formulas demand; all JSON input/output is "
      "1-based. Exhaustive mode (k = 1 only) fixes u_1 to the first vertex by symmetry.");
  op->add_option("--k", op_k, "Instance parameter; n = 3k+1")->required();
  op->add_option("--mode", op_mode, "exhaustive (k = 1 only) or randomized")
      ->check(CLI::IsMember({"exhaustive", "randomized"}))
      ->capture_default_str();
  op->add_option("--budget", op_budget, "Random instances to draw in randomized mode")
      ->capture_default_str();
  op->add_option("--seed", op_seed, "PRNG seed")->capture_default_str();
  add_common(op, op_opts);

  // selfcheck
  CommonOpts sc_opts;
  sc_opts.format = "table";  // human-facing lines by default; --format json available
  std::string sc_fault;
  auto* sc = app.add_subcommand("selfcheck",
                                "Run the built-in invariant suites and print one line per suite");
  sc->add_option("--inject-fault", sc_fault,
                 "Testing hook: corrupt a suite's inputs to prove the suite detects it")
      ->check(CLI::IsMember({"color-vector"}));
  add_common(sc, sc_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::uint64_t default_budget = env_budget();

    if (*bounds) {
      json j;
      j["n"] = b_n;
      j["q"] = b_q;
      if (b_q >= 3) j["lower"] = hamburn::lower_bound(b_n, b_q);
      j["upper"] = hamburn::upper_bound(b_n, b_q);
      const std::uint64_t budget = b_cap ? b_cap : default_budget;
      try {
        hamburn::BurnSearchResult res =
            hamburn::burning_search(b_n, b_q, 0, budget, b_opts.workers);
        j["exact"] = res.b;
        j["witness"] = hamburn::sequence_to_json(res.witness);
      } catch (const hamburn::CapacityError& e) {
        j["capacity_note"] = e.what();
      }
      emit(j, b_opts.format, b_opts.output);
      return kExitOk;
    }

    if (*burnnum) {
      const std::uint64_t budget = bn_cap ? bn_cap : default_budget;
      hamburn::BurnSearchResult res =
          hamburn::burning_search(bn_n, bn_q, 0, budget, bn_opts.workers);
      json j;
      j["b"] = res.b;
      j["n"] = bn_n;
      j["q"] = bn_q;
      j["witness"] = hamburn::sequence_to_json(res.witness);
      emit(j, bn_opts.format, bn_opts.output);
      return kExitOk;
    }

    if (*verify) {
      const std::uint64_t budget = vs_cap ? vs_cap : default_budget;
      hamburn::BurnSequence seq{hamburn::vertices_from_json(load_json_file(vs_input), vs_n, vs_q)};
      json j;
      j["burns"] = hamburn::burns(seq, budget);
      auto miss = hamburn::uncovered(seq, budget);
      j["n"] = vs_n;
      j["q"] = vs_q;
      j["uncovered"] = miss ? hamburn::vertex_to_json(*miss) : json(nullptr);
      emit(j, vs_opts.format, vs_opts.output);
      return kExitOk;
    }

    if (*evade_cmd) {
      std::vector<hamburn::Vertex> vs =
          hamburn::vertices_from_json(load_json_file(ev_input), ev_n, ev_q);
      hamburn::EvaderCertificate cert = hamburn::evade(vs, ev_n, ev_q);
      emit(hamburn::evader_certificate_to_json(cert, ev_n, ev_q), ev_opts.format, ev_opts.output);
      return kExitOk;
    }

    if (*bs) {
      int failures = 0;
      int worst_margin = 2 * bs_n;
      for (int t = 0; t < bs_trials; ++t) {
        hamburn::SplitMix64 g = hamburn::stream_for(bs_seed, static_cast<std::uint64_t>(t));
        std::vector<std::vector<int>> a(static_cast<std::size_t>(bs_n),
                                        std::vector<int>(static_cast<std::size_t>(bs_n), 1));
        for (auto& row : a)
          for (int& s : row) s = g.below(2) ? 1 : -1;
        auto x = hamburn::bs_existence(a);
        if (!x) {
          ++failures;
          continue;
        }
        for (int i = 1; i <= bs_n; ++i) {
          int dot = 0;
          for (int c = 0; c < bs_n; ++c)
            dot += a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c)] *
                   (*x)[static_cast<std::size_t>(c)];
          worst_margin = std::min(worst_margin, 2 * i - std::abs(dot));
        }
      }
      json j;
      j["failures"] = failures;
      j["n"] = bs_n;
      j["seed"] = bs_seed;
      j["trials"] = bs_trials;
      j["worst_margin"] = worst_margin;
      emit(j, bs_opts.format, bs_opts.output);
      return failures == 0 ? kExitOk : kExitGuarantee;
    }

    if (*op) {
      const hamburn::SearchMode mode = (op_mode == "exhaustive") ? hamburn::SearchMode::exhaustive
                                                                 : hamburn::SearchMode::randomized;
      hamburn::OpenProblemReport rep =
          hamburn::open_problem_search(op_k, mode, op_budget, op_seed, op_opts.workers);
      emit(hamburn::open_problem_report_to_json(rep), op_opts.format, op_opts.output);
      return kExitOk;
    }

    if (*sc) {
      const hamburn::Fault fault =
          sc_fault == "color-vector" ? hamburn::Fault::color_vector : hamburn::Fault::none;
      std::vector<hamburn::SuiteResult> results = hamburn::run_selfcheck(fault);
      bool all_pass = true;
      if (sc_opts.format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
          arr.push_back(json{{"detail", r.detail}, {"name", r.name}, {"pass", r.pass}});
          all_pass = all_pass && r.pass;
        }
        emit(arr, "json", sc_opts.output);
      } else {
        std::string text;
        for (const auto& r : results) {
          text += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name + " (" + r.detail + ")\n";
          all_pass = all_pass && r.pass;
        }
        if (sc_opts.output.empty()) {
          std::cout << text;
        } else {
          std::ofstream out(sc_opts.output, std::ios::binary);
          out << text;
        }
      }
      return all_pass ? kExitOk : kExitGuarantee;
    }
  } catch (const hamburn::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const hamburn::StateError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kExitGuarantee;
  } catch (const json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
