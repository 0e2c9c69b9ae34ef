// Command line front end; talks to the library strictly through the C API.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fewopt.h"

namespace {

int fail(fewopt_status st) {
  const char* msg = fewopt_last_error();
  if (msg && *msg) std::fprintf(stderr, "error: %s\n", msg);
  return static_cast<int>(st);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

class Instance {
 public:
  ~Instance() { fewopt_instance_free(inst_); }
  fewopt_status load(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
      std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
      return FEWOPT_INVALID_INPUT;
    }
    return fewopt_instance_parse(text.c_str(), &inst_);
  }
  const fewopt_instance* get() const { return inst_; }

 private:
  fewopt_instance* inst_ = nullptr;
};

int print_and_free(fewopt_status st, char* out) {
  if (out) {
    std::printf("%s\n", out);
    fewopt_string_free(out);
  }
  if (st != FEWOPT_OK && !out) return fail(st);
  return static_cast<int>(st);
}

bool parse_range(const std::string& spec, double& lo10, double& hi10) {
  auto comma = spec.find(',');
  if (comma == std::string::npos) return false;
  try {
    double lo = std::stod(spec.substr(0, comma));
    double hi = std::stod(spec.substr(comma + 1));
    if (lo <= 0 || hi <= lo) return false;
    lo10 = std::log10(lo);
    hi10 = std::log10(hi);
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified fewnomial optimization over the positive orthant"};
  app.require_subcommand(1);

  std::string file;
  double eps = 0;      // 0: library default
  std::string lambda;
  double delta = 0.5;
  long cap_m = 0;
  std::string mode = "positive";
  int grid = 40;
  int rounds = 8;
  std::string range = "1e-6,1e6";

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance JSON file")->required();
  };

  auto* sup = app.add_subcommand("sup", "supremum over the positive orthant");
  add_file(sup);
  sup->add_option("--eps", eps, "relative approximation target");

  auto* decide = app.add_subcommand("decide", "decide sup f >= lambda");
  add_file(decide);
  decide->add_option("--lambda", lambda, "threshold (scalar expression)")->required();

  auto* roots = app.add_subcommand("roots", "positive roots of a univariate trinomial");
  add_file(roots);
  roots->add_option("--eps", eps, "relative root accuracy");

  auto* condition = app.add_subcommand("condition", "condition number report");
  add_file(condition);

  auto* canon = app.add_subcommand("canon", "canonical simplex form");
  add_file(canon);

  auto* reduce = app.add_subcommand("reduce", "feasibility gadget from a quartic");
  add_file(reduce);
  reduce->add_option("--delta", delta, "sparsity exponent in (0,1)")->required();
  reduce->add_option("--cap-m", cap_m, "clamp for the slack block size M");
  reduce->add_option("--mode", mode, "positive | real-slack | real-squared");

  auto* oracle = app.add_subcommand("oracle", "log-grid supremum oracle");
  add_file(oracle);
  oracle->add_option("--grid", grid, "points per axis (>= 3)");
  oracle->add_option("--rounds", rounds, "refinement rounds");
  oracle->add_option("--range", range, "positive range LO,HI");

  CLI11_PARSE(app, argc, argv);

  Instance inst;
  if (fewopt_status st = inst.load(file); st != FEWOPT_OK) return fail(st);

  char* out = nullptr;
  fewopt_status st = FEWOPT_INTERNAL;
  if (sup->parsed()) {
    st = fewopt_sup(inst.get(), eps, &out);
  } else if (decide->parsed()) {
    st = fewopt_decide(inst.get(), lambda.c_str(), &out);
  } else if (roots->parsed()) {
    st = fewopt_roots(inst.get(), eps, &out);
  } else if (condition->parsed()) {
    st = fewopt_condition(inst.get(), &out);
  } else if (canon->parsed()) {
    st = fewopt_canon(inst.get(), &out);
  } else if (reduce->parsed()) {
    st = fewopt_reduce(inst.get(), delta, cap_m, mode.c_str(), &out);
  } else if (oracle->parsed()) {
    double lo10 = 0, hi10 = 0;
    if (!parse_range(range, lo10, hi10)) {
      std::fprintf(stderr, "error: --range must be LO,HI with 0 < LO < HI\n");
      return FEWOPT_INVALID_INPUT;
    }
    st = fewopt_oracle(inst.get(), lo10, hi10, grid, rounds, &out);
  }
  return print_and_free(st, out);
}
