#include "msteinitz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "msteinitz/instances.hpp"
#include "msteinitz/io.hpp"
#include "msteinitz/oracles.hpp"
#include "msteinitz/signing.hpp"
#include "msteinitz/steinitz.hpp"
#include "msteinitz/transference.hpp"

namespace msteinitz::cli {

namespace {

using io::json;

struct GenArgs {
  std::string kind;
  std::size_t d = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t s = 1;
  std::uint64_t seed = 0;
  std::string norm = "l2";
  std::string output;
};

struct RearrangeArgs {
  std::string input;
  std::string method = "auto";
  std::size_t max_iters = 64;
  double slack = 1e-6;
  std::string output;
  std::string csv;
};

struct SignsArgs {
  std::string input;
  std::string output;
};

struct OracleArgs {
  std::string which;
  std::string input;
  std::uint64_t budget = kDefaultOracleBudget;
  std::string output;
};

struct VerifyArgs {
  std::string input;
  std::string report;
};

struct BenchArgs {
  std::string grid = "d=2,3;k=1,2,3,5;n=10,50;norm=l1,l2,linf";
  std::uint64_t seed = 0;
  std::size_t reps = 1;
  std::string output;
};

NormSpec lp_norm(const std::string& name) {
  if (name == "l1") return NormSpec::l1();
  if (name == "l2") return NormSpec::l2();
  if (name == "linf") return NormSpec::linf();
  throw ValidationError("--norm must be l1, l2 or linf");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

int cmd_gen(const GenArgs& args, std::ostream& out) {
  Instance inst = [&]() -> Instance {
    if (args.kind == "random") {
      if (args.k == 0 || args.n == 0) throw ValidationError("random instances need --k and --n");
      NormSpec norm = lp_norm(args.norm);
      return {gen_random_zero_sum(args.d, args.k, args.n, norm, args.seed), norm};
    }
    if (args.kind == "l1-lower") return gen_l1_lower(args.d, args.s, args.k == 0 ? args.d : args.k);
    if (args.kind == "seminorm-lower") return gen_seminorm_lower(args.d);
    throw ValidationError("--kind must be random, l1-lower or seminorm-lower");
  }();
  emit(args.output, io::instance_to_json(inst).dump() + "\n", out);
  return kExitOk;
}

int cmd_rearrange(const RearrangeArgs& args, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json(args.input));
  RearrangeOptions opts;
  opts.method = parse_method(args.method);
  opts.max_iters = args.max_iters;
  opts.target_slack = args.slack;
  const RearrangementReport report = rearrange(inst.matrix, inst.norm, opts);
  emit(args.output, io::report_to_json(report, inst).dump(2) + "\n", out);
  if (!args.csv.empty()) {
    io::write_text(args.csv, io::prefix_trace_csv(
                                 apply_permutations(inst.matrix, report.permutations), inst.norm));
  }
  return kExitOk;
}

int cmd_signs(const SignsArgs& args, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json(args.input));
  const VectorMatrix& b = inst.matrix;
  const SignMatrix eps = sign_assign_matrix(b, inst.norm);
  const double achieved = max_prefix_norm(inst.norm, apply_signs(b, eps));

  double serialized = 0.0;
  Vector prefix(b.dim(), 0.0);
  for (std::size_t i = 0; i < b.cols(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      auto e = b.at(j, i);
      for (std::size_t c = 0; c < b.dim(); ++c) prefix[c] += eps.at(j, i) * e[c];
      serialized = std::max(serialized, inst.norm.eval(prefix));
    }
  }
  const double bound = 2.0 * static_cast<double>(b.dim()) - 1.0;
  const bool ok = achieved <= bound + 1e-9 && serialized <= bound + 1e-9;
  json j{{"signs", eps.to_rows()},
         {"max_prefix", achieved},
         {"serialized_max_prefix", serialized},
         {"bound", bound},
         {"within_bound", ok}};
  emit(args.output, j.dump(2) + "\n", out);
  return ok ? kExitOk : kExitValidation;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json(args.input));
  json j{{"oracle", args.which}, {"budget", args.budget}};
  if (args.which == "u") {
    const auto r = exact_u(inst.matrix, inst.norm, args.budget);
    j["value"] = r.value;
    j["witness"] = r.witness.perms();
  } else if (args.which == "v") {
    const auto r = exact_v(inst.matrix, inst.norm, args.budget);
    j["value"] = r.value;
    j["witness"] = r.witness.to_rows();
  } else {
    const auto r = column_one_min(inst.matrix, inst.norm, args.budget);
    j["value"] = r.value;
    j["choice"] = r.choice;
  }
  emit(args.output, j.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const Instance inst = io::instance_from_json(io::read_json(args.input));
  const json rj = io::read_json(args.report);
  const RearrangementReport report = io::report_from_json(rj);
  const auto& a = inst.matrix;

  json checks = json::array();
  bool all = true;
  auto check = [&](const std::string& name, bool passed, const std::string& detail) {
    checks.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    all = all && passed;
  };

  const std::string digest = io::instance_digest(inst);
  const std::string claimed = rj.value("instance_digest", std::string());
  check("instance_digest", claimed == digest, claimed);

  const bool valid = verify_row_permuted(a, report.permutations);
  check("row_permutation", valid, valid ? "bijective rows" : "not a row permutation of the instance");

  if (valid) {
    const VectorMatrix c = apply_permutations(a, report.permutations);
    const double recomputed = max_prefix_norm(inst.norm, c);
    check("final_max_prefix",
          std::abs(recomputed - report.final_max_prefix) <= 1e-12 * std::max(1.0, recomputed),
          fmt::format("recomputed {}, claimed {}", recomputed, report.final_max_prefix));

    const Vector before = prefix_column_sum(a, a.cols());
    const Vector after = prefix_column_sum(c, c.cols());
    double drift = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i) {
      drift = std::max(drift, std::abs(before[i] - after[i]));
    }
    check("total_sum", drift <= 1e-9, fmt::format("max coordinate drift {}", drift));

    const double expected_bound = rearrangement_bound(report.method, inst.norm, a.dim(), a.rows());
    check("bound_used", report.bound_used == expected_bound,
          fmt::format("expected {}, claimed {}", expected_bound, report.bound_used));
    check("within_bound", recomputed <= expected_bound + report.target_slack,
          fmt::format("{} <= {} + {}", recomputed, expected_bound, report.target_slack));
  }

  const double initial = max_prefix_norm(inst.norm, a);
  check("initial_max_prefix",
        std::abs(initial - report.initial_max_prefix) <= 1e-12 * std::max(1.0, initial),
        fmt::format("recomputed {}, claimed {}", initial, report.initial_max_prefix));
  bool contraction = report.iterations == report.per_pass.size();
  for (const auto& p : report.per_pass) {
    contraction = contraction &&
                  p.output_max_prefix <= p.input_max_prefix / 2.0 + p.achieved_v + 1e-9;
  }
  check("per_pass_contraction", contraction, fmt::format("{} passes", report.per_pass.size()));

  out << json{{"ok", all}, {"checks", std::move(checks)}}.dump(2) << "\n";
  return all ? kExitOk : kExitValidation;
}

std::map<std::string, std::vector<std::string>> parse_grid(const std::string& grid) {
  std::map<std::string, std::vector<std::string>> out;
  std::stringstream groups(grid);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.empty()) continue;
    const auto eq = group.find('=');
    if (eq == std::string::npos) throw ValidationError("grid group '" + group + "' lacks '='");
    std::vector<std::string> values;
    std::stringstream vs(group.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) {
      if (!v.empty()) values.push_back(v);
    }
    if (values.empty()) throw ValidationError("grid group '" + group + "' has no values");
    out[group.substr(0, eq)] = std::move(values);
  }
  for (const auto& [key, values] : out) {
    if (key != "d" && key != "k" && key != "n" && key != "norm") {
      throw ValidationError("unknown grid key '" + key + "'");
    }
  }
  return out;
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v == 0) throw ValidationError("'" + s + "' is not a positive integer");
  return static_cast<std::size_t>(v);
}

double max_serialized_prefix(const std::vector<Vector>& seq, const std::vector<int>& signs,
                             const NormSpec& spec) {
  double best = 0.0;
  Vector prefix(seq.empty() ? 0 : seq.front().size(), 0.0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t c = 0; c < prefix.size(); ++c) prefix[c] += signs[i] * seq[i][c];
    best = std::max(best, spec.eval(prefix));
  }
  return best;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  auto grid = parse_grid(args.grid);
  auto values = [&](const char* key, std::vector<std::string> fallback) {
    auto it = grid.find(key);
    return it == grid.end() ? fallback : it->second;
  };
  const auto ds = values("d", {"2"});
  const auto ks = values("k", {"2"});
  const auto ns = values("n", {"10"});
  const auto norms = values("norm", {"l2"});

  Prng rng(args.seed);
  std::string csv =
      "d,k,n,norm,rep,seed,initial_max_prefix,final_max_prefix,bound,selected,iterations,"
      "bg_sign_max,greedy_sign_max,sign_bound,within_bound\n";
  for (const auto& ds_ : ds) {
    for (const auto& ks_ : ks) {
      for (const auto& ns_ : ns) {
        for (const auto& norm_name : norms) {
          const std::size_t d = to_size(ds_);
          const std::size_t k = to_size(ks_);
          const std::size_t n = to_size(ns_);
          const NormSpec norm = lp_norm(norm_name);
          if ((k * n) % 2 != 0) continue;
          for (std::size_t rep = 0; rep < args.reps; ++rep) {
            const std::uint64_t seed = rng();
            const VectorMatrix a = gen_random_zero_sum(d, k, n, norm, seed);
            const RearrangementReport r = rearrange(a, norm);
            const auto seq = serialize_column_major(difference_matrix(a));
            const double bg = max_serialized_prefix(seq, bg_signs(seq, d, norm), norm);
            const double greedy = max_serialized_prefix(seq, greedy_signs(seq, norm), norm);
            const bool ok = r.final_max_prefix <= r.bound_used + r.target_slack;
            csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", d, k, n,
                               norm_name, rep, seed, r.initial_max_prefix, r.final_max_prefix,
                               r.bound_used, to_string(r.selected), r.iterations, bg, greedy,
                               2 * d - 1, ok ? 1 : 0);
          }
        }
      }
    }
  }
  emit(args.output, csv, out);
  return kExitOk;
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Row-wise rearrangement of zero-sum vector matrices with bounded prefix sums",
               "msteinitz"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance JSON");
  gen_cmd->add_option("--kind", gen.kind, "random | l1-lower | seminorm-lower")->required();
  gen_cmd->add_option("--d", gen.d, "Dimension")->required();
  gen_cmd->add_option("--k", gen.k, "Rows");
  gen_cmd->add_option("--n", gen.n, "Columns (random)");
  gen_cmd->add_option("--s", gen.s, "Copies of the l1 block")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_option("--norm", gen.norm, "l1 | l2 | linf (random)")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file")->required();

  RearrangeArgs rea;
  auto* rea_cmd = app.add_subcommand("rearrange", "Rearrange rows of an instance");
  rea_cmd->add_option("-i,--input", rea.input, "Instance JSON")->required();
  rea_cmd->add_option("--method", rea.method, "auto | pairing | column-gs")->capture_default_str();
  rea_cmd->add_option("--max-iters", rea.max_iters, "Pairing passes cap")->capture_default_str();
  rea_cmd->add_option("--slack", rea.slack, "Additive slack on the target")->capture_default_str();
  rea_cmd->add_option("-o,--output", rea.output, "Report JSON")->required();
  rea_cmd->add_option("--csv", rea.csv, "Prefix-norm trace CSV");

  SignsArgs sig;
  auto* sig_cmd = app.add_subcommand("signs", "Prefix-bounded signing of an instance");
  sig_cmd->add_option("-i,--input", sig.input, "Instance JSON")->required();
  sig_cmd->add_option("-o,--output", sig.output, "Signs JSON")->required();

  OracleArgs ora;
  auto* ora_cmd = app.add_subcommand("oracle", "Exhaustive U, V or column-one minimum");
  ora_cmd->add_option("which", ora.which, "u | v | col1")
      ->required()
      ->check(CLI::IsMember({"u", "v", "col1"}));
  ora_cmd->add_option("-i,--input", ora.input, "Instance JSON")->required();
  ora_cmd->add_option("--budget", ora.budget, "Maximum cases to enumerate")->capture_default_str();
  ora_cmd->add_option("-o,--output", ora.output, "Result JSON (default stdout)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Recheck a rearrangement report");
  ver_cmd->add_option("-i,--input", ver.input, "Instance JSON")->required();
  ver_cmd->add_option("-r,--report", ver.report, "Report JSON")->required();

  BenchArgs ben;
  auto* ben_cmd = app.add_subcommand("bench", "Sweep random instances over a grid");
  ben_cmd->add_option("--grid", ben.grid, "e.g. d=2,3;k=1,2;n=10,50;norm=l1,l2")
      ->capture_default_str();
  ben_cmd->add_option("--seed", ben.seed, "PRNG seed")->capture_default_str();
  ben_cmd->add_option("--reps", ben.reps, "Instances per grid cell")->capture_default_str();
  ben_cmd->add_option("-o,--output", ben.output, "CSV output")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitValidation;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
    if (rea_cmd->parsed()) return cmd_rearrange(rea, out);
    if (sig_cmd->parsed()) return cmd_signs(sig, out);
    if (ora_cmd->parsed()) return cmd_oracle(ora, out);
    if (ver_cmd->parsed()) return cmd_verify(ver, out);
    if (ben_cmd->parsed()) return cmd_bench(ben, out);
  } catch (const BudgetExceeded& e) {
    report_error(err, "budget_exceeded", e.what());
    return kExitBudget;
  } catch (const ValidationError& e) {
    report_error(err, "validation", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace msteinitz::cli
