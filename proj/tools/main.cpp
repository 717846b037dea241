// splitcover: exact dominance, covers, and family sweeps for split sets over
// the unit cube. Every subcommand prints one machine-readable JSON record;
// --pretty switches to indented output. Exit codes: 0 success/verified,
// 1 property violated or dominance false (a witness is included), 2 usage or
// input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "splitcover/constructive.hpp"
#include "splitcover/dominance.hpp"
#include "splitcover/families.hpp"
#include "splitcover/io.hpp"

namespace {

using namespace splitcover;

struct Output {
  bool pretty = false;
  void print(const json& record) const {
    std::cout << (pretty ? record.dump(2) : record.dump()) << "\n";
  }
};

// Inline JSON, or @path to read a file.
json load_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
  }
}

std::vector<SplitSet> split_list_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of split records");
  std::vector<SplitSet> out;
  for (const json& item : j) out.push_back(split_from_json(item));
  return out;
}

// "A..B" (inclusive) or a single value "A".
std::vector<int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range is empty");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + text + "' (expected A or A..B)");
  }
}

// Built-in family names F1..F4 expand at the given dimension; anything else
// is inline JSON or a family file.
SplitFamily resolve_family(const std::string& name, Index n) {
  if (name.size() == 2 && name[0] == 'F' && name[1] >= '1' && name[1] <= '4') {
    if (n < 1) throw std::invalid_argument("built-in families need --n");
    return enumerate_family(n, name[1] - '0');
  }
  if (!name.empty() && (name.front() == '{' || name.front() == '@'))
    return family_from_json(load_json_arg(name));
  return family_from_json(load_json_arg("@" + name));
}

int run(int argc, char** argv) {
  CLI::App app{"exact split-set dominance and covering toolkit"};
  app.require_subcommand(1);

  Output out;
  int jobs = 1;
  app.add_flag("--pretty", out.pretty, "indent the JSON record");
  app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  std::string s0_text, s1_text, list_text, split_text, family_text, parity_text("even");
  std::string gamma_range("1"), theta_range("1");
  int opt_n = 0, opt_k = 3, opt_pmax = 3, opt_M = 8, opt_E = 16, opt_B = 3;
  int opt_gamma = 1, opt_theta = 1, opt_count = 1000;
  std::uint64_t opt_seed = 1;
  bool opt_verify = false, opt_details = false, opt_timing = false;

  auto* check_dom = app.add_subcommand("check-dominance", "does S1 dominate S0 on the cube?");
  check_dom->add_option("--s1", s1_text, "candidate dominator split")->required();
  check_dom->add_option("--s0", s0_text, "dominated split")->required();

  auto* check_union = app.add_subcommand("check-union", "does a list of splits dominate S0?");
  check_union->add_option("--list", list_text, "JSON array of splits (or @file)")->required();
  check_union->add_option("--s0", s0_text, "dominated split")->required();

  auto* mincover = app.add_subcommand("min-cover", "smallest dominating selection from a family");
  mincover->add_option("--family", family_text, "F1..F4 or @family-file")->required();
  mincover->add_option("--n", opt_n, "dimension for built-in families");
  mincover->add_option("--split", split_text, "split to cover")->required();
  mincover->add_option("--pmax", opt_pmax, "largest selection size to try");

  auto* dom2 = app.add_subcommand("dominate2", "constructive F_2 dominator (sparsity <= 2)");
  dom2->add_option("--split", split_text)->required();
  dom2->add_flag("--verify", opt_verify, "re-check the output with the exact decider");

  auto* cov3 = app.add_subcommand("cover3", "constructive F_3 cover (sparsity <= 3)");
  cov3->add_option("--split", split_text)->required();
  cov3->add_flag("--verify", opt_verify);

  auto* cov4 = app.add_subcommand("cover4", "constructive F_4 cover (sparsity <= 4)");
  cov4->add_option("--split", split_text)->required();
  cov4->add_flag("--verify", opt_verify);

  auto* family_cmd = app.add_subcommand("family", "enumerate F_k in dimension n");
  family_cmd->add_option("--k", opt_k, "sparsity bound")->required();
  family_cmd->add_option("--n", opt_n, "dimension")->required();

  auto* gen = app.add_subcommand("gen", "generate a counterexample-family split");
  auto* gen_gamma = gen->add_subcommand("s-gamma", "the (1, gamma, gamma+1; gamma) family");
  gen_gamma->add_option("--gamma", opt_gamma)->required();
  auto* gen_theta = gen->add_subcommand("s-theta", "the powers-of-theta family");
  gen_theta->add_option("--k", opt_k)->required();
  gen_theta->add_option("--theta", opt_theta)->required();
  gen_theta->add_option("--parity", parity_text, "even|odd");
  gen->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a sweep experiment");
  verify->require_subcommand(1);
  auto add_report_flags = [&](CLI::App* cmd) {
    cmd->add_flag("--details", opt_details, "emit every instance record");
    cmd->add_flag("--timing", opt_timing, "emit wall-clock seconds (non-deterministic bytes)");
  };
  auto* v_prop2 = verify->add_subcommand("prop2", "every 2-sparse split gets an F_2 dominator");
  v_prop2->add_option("--M", opt_M, "coefficient bound");
  v_prop2->add_option("--E", opt_E, "eta bound");
  add_report_flags(v_prop2);
  auto* v_upper = verify->add_subcommand("prop-upper", "constructive covers for k in {3,4}");
  v_upper->add_option("--k", opt_k)->check(CLI::Range(3, 4));
  v_upper->add_option("--M", opt_M, "coefficient bound");
  add_report_flags(v_upper);
  auto* v_thm3 = verify->add_subcommand("thm3", "no bounded single dominator for S_gamma");
  v_thm3->add_option("--gamma-range", gamma_range, "A..B or single value");
  v_thm3->add_option("--B", opt_B, "candidate coefficient bound");
  add_report_flags(v_thm3);
  auto* v_lower = verify->add_subcommand("lower-bound", "covering-number lower bound vs F_k");
  v_lower->add_option("--k", opt_k, "even sparsity");
  v_lower->add_option("--theta-range", theta_range, "A..B or single value");
  v_lower->add_option("--pmax", opt_pmax);
  add_report_flags(v_lower);
  auto* v_witness = verify->add_subcommand("witness-soundness", "non-dominance witnesses re-verify");
  v_witness->add_option("--count", opt_count);
  v_witness->add_option("--seed", opt_seed);
  add_report_flags(v_witness);

  // global flags (--pretty, --jobs) may appear after the subcommand
  for (CLI::App* sub : {check_dom, check_union, mincover, dom2, cov3, cov4, family_cmd, gen,
                        gen_gamma, gen_theta, verify, v_prop2, v_upper, v_thm3, v_lower,
                        v_witness})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*check_dom) {
    const SplitSet s1 = split_from_json(load_json_arg(s1_text));
    const SplitSet s0 = split_from_json(load_json_arg(s0_text));
    const DominanceReport rep = dominates(s1, s0);
    out.print(to_json(rep));
    return rep.dominated ? 0 : 1;
  }
  if (*check_union) {
    const auto list = split_list_from_json(load_json_arg(list_text));
    const SplitSet s0 = split_from_json(load_json_arg(s0_text));
    const DominanceReport rep = union_dominates(list, s0);
    out.print(to_json(rep));
    return rep.dominated ? 0 : 1;
  }
  if (*mincover) {
    const SplitFamily family = resolve_family(family_text, opt_n);
    const SplitSet s = split_from_json(load_json_arg(split_text));
    const auto result = min_cover(family, s, opt_pmax);
    if (!result) {
      out.print(json{{"found", false}, {"p_max", opt_pmax}});
      return 1;
    }
    out.print(to_json(*result));
    return 0;
  }
  if (*dom2 || *cov3 || *cov4) {
    const SplitSet s = split_from_json(load_json_arg(split_text));
    const ConstructiveCover cover = *dom2   ? dominate_with_F2(s, opt_verify)
                                    : *cov3 ? cover_with_F3(s, opt_verify)
                                            : cover_with_F4(s, opt_verify);
    out.print(to_json(cover));
    return 0;
  }
  if (*family_cmd) {
    out.print(to_json(enumerate_family(opt_n, opt_k)));
    return 0;
  }
  if (*gen) {
    if (*gen_gamma) {
      out.print(to_json(gen_s_gamma(opt_gamma)));
      return 0;
    }
    if (parity_text != "even" && parity_text != "odd")
      throw std::invalid_argument("--parity must be even or odd");
    out.print(to_json(gen_s_theta(opt_k, opt_theta,
                                  parity_text == "even" ? Parity::Even : Parity::Odd)));
    return 0;
  }
  if (*verify) {
    ExperimentReport report;
    if (*v_prop2)
      report = experiment_prop2(opt_M, opt_E, jobs);
    else if (*v_upper)
      report = experiment_prop_upper(opt_k, opt_M, jobs);
    else if (*v_thm3)
      report = experiment_thm3(parse_range(gamma_range), opt_B, jobs);
    else if (*v_lower)
      report = experiment_lower_bound(opt_k, parse_range(theta_range), opt_pmax, jobs);
    else
      report = experiment_witness_soundness(opt_count, opt_seed, jobs);
    out.print(to_json(report, opt_details, opt_timing));
    return report.pass ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
