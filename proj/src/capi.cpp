#include "fewopt.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "json.hpp"

#include "fewopt/fewnomial.hpp"
#include "fewopt/harness.hpp"
#include "fewopt/io.hpp"
#include "fewopt/parse.hpp"
#include "fewopt/supremum.hpp"
#include "fewopt/transform.hpp"
#include "fewopt/univariate.hpp"

using nlohmann::json;

struct fewopt_instance {
  fewopt::Fewnomial f;
};

namespace {

thread_local std::string g_last_error;

fewopt::PrecisionBudget env_budget() {
  fewopt::PrecisionBudget b;
  if (const char* s = std::getenv("FEWOPT_PRECISION_BITS")) b.mantissa = std::atol(s);
  if (const char* s = std::getenv("FEWOPT_PRECISION_CAP")) b.cap = std::atol(s);
  b.validate();
  return b;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fewopt_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const fewopt::PrecisionExhausted& e) {
    g_last_error = e.what();
    return FEWOPT_PRECISION;
  } catch (const fewopt::NotInClass& e) {
    g_last_error = e.what();
    return FEWOPT_UNSUPPORTED;
  } catch (const fewopt::InvalidInput& e) {
    g_last_error = e.what();
    return FEWOPT_INVALID_INPUT;
  } catch (const fewopt::Error& e) {
    g_last_error = e.what();
    return FEWOPT_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FEWOPT_INTERNAL;
  }
}

json maximizer_json(const fewopt::MaximizerDescription& m) {
  json coords = json::array();
  for (const auto& c : m.coords) {
    switch (c.kind) {
      case fewopt::CoordKind::Finite:
        coords.push_back({{"kind", "finite"}, {"value", c.value.to_decimal()}});
        break;
      case fewopt::CoordKind::Zero:
        coords.push_back({{"kind", "zero"}});
        break;
      case fewopt::CoordKind::Infinite:
        coords.push_back({{"kind", "infinite"}});
        break;
    }
  }
  return json{{"coords", std::move(coords)}, {"orbit_dim", m.orbit_dim}};
}

const char* case_name(fewopt::SupCase c) {
  switch (c) {
    case fewopt::SupCase::SimplexUnbounded: return "simplex_unbounded";
    case fewopt::SupCase::SimplexConstant: return "simplex_constant";
    case fewopt::SupCase::VertexUnbounded: return "vertex_unbounded";
    case fewopt::SupCase::DiscriminantUnbounded: return "discriminant_unbounded";
    case fewopt::SupCase::ClosedForm: return "closed_form";
    case fewopt::SupCase::Fallthrough: return "constant_fallthrough";
    case fewopt::SupCase::TetranomialUnbounded: return "tetranomial_unbounded";
    case fewopt::SupCase::TetranomialCritical: return "tetranomial_critical";
    case fewopt::SupCase::TetranomialBoundary: return "tetranomial_boundary";
  }
  return "unknown";
}

json sup_json(const fewopt::SupremumResult& r, const fewopt::PrecisionBudget& b) {
  json j;
  j["algorithm_case"] = case_name(r.algorithm_case);
  j["precision_bits"] = static_cast<long>(b.mantissa);
  switch (r.outcome) {
    case fewopt::SupOutcome::Unbounded:
      j["outcome"] = "unbounded";
      break;
    case fewopt::SupOutcome::Bounded:
      j["outcome"] = "bounded";
      j["lambda_star"] = r.lambda_star->to_decimal();
      j["certified_relative_error"] = r.certified_relative_error.to_decimal();
      if (r.maximizer) j["maximizer"] = maximizer_json(*r.maximizer);
      break;
    case fewopt::SupOutcome::ConstantAtBoundary:
      j["outcome"] = "constant_at_boundary";
      j["value"] = r.boundary_value->to_decimal();
      break;
  }
  if (r.witness) {
    json dir = json::array(), base = json::array();
    for (const auto& x : r.witness->direction) dir.push_back(x.to_decimal());
    for (const auto& x : r.witness->base_point) base.push_back(x.to_decimal());
    j["witness"] = {{"direction", std::move(dir)}, {"base_point", std::move(base)}};
  }
  return j;
}

fewopt_status emit(const json& j, char** json_out) {
  *json_out = dup_string(j.dump(2));
  return *json_out ? FEWOPT_OK : FEWOPT_INTERNAL;
}

}  // namespace

extern "C" {

fewopt_status fewopt_instance_parse(const char* text, fewopt_instance** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    auto b = env_budget();
    auto* inst = new fewopt_instance{fewopt::parse_instance_json(text, b.mantissa)};
    *out = inst;
    return FEWOPT_OK;
  });
}

void fewopt_instance_free(fewopt_instance* inst) { delete inst; }

fewopt_status fewopt_instance_serialize(const fewopt_instance* inst, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    *json_out = dup_string(fewopt::serialize_instance(inst->f));
    return *json_out ? FEWOPT_OK : FEWOPT_INTERNAL;
  });
}

fewopt_status fewopt_sup(const fewopt_instance* inst, double eps, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    auto b = env_budget();
    if (eps <= 0) eps = b.target_eps;
    auto r = fewopt::sup_fewnomial(inst->f, eps, b);
    return emit(sup_json(r, b), json_out);
  });
}

fewopt_status fewopt_decide(const fewopt_instance* inst, const char* lambda, char** json_out) {
  if (!inst || !lambda || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&]() -> fewopt_status {
    auto b = env_budget();
    fewopt::Real lam = fewopt::parse_scalar(lambda, b.mantissa);
    fewopt::Decision d = fewopt::sup_decide(inst->f, lam, b);
    json j;
    j["lambda"] = lam.to_decimal();
    switch (d) {
      case fewopt::Decision::Yes: j["decision"] = "yes"; break;
      case fewopt::Decision::No: j["decision"] = "no"; break;
      case fewopt::Decision::EqualWithinPrecision: j["decision"] = "equal_within_precision"; break;
    }
    if (d == fewopt::Decision::EqualWithinPrecision) {
      // Margin report: the certified estimate the tie was measured against.
      auto r = fewopt::sup_fewnomial(inst->f, b.target_eps, b);
      if (r.outcome == fewopt::SupOutcome::Bounded) {
        j["lambda_star"] = r.lambda_star->to_decimal();
        j["certified_relative_error"] = r.certified_relative_error.to_decimal();
      }
      fewopt_status st = emit(j, json_out);
      return st == FEWOPT_OK ? FEWOPT_PRECISION : st;
    }
    return emit(j, json_out);
  });
}

fewopt_status fewopt_roots(const fewopt_instance* inst, double eps, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    auto b = env_budget();
    if (eps <= 0) eps = b.target_eps;
    auto rep = fewopt::trinomial_roots(inst->f, eps, b);
    json j;
    j["count"] = rep.count;
    j["roots"] = json::array();
    for (const auto& r : rep.roots)
      j["roots"].push_back({{"value", r.value.to_decimal()},
                            {"multiplicity", r.multiplicity},
                            {"certified_relative_error", r.certified_relative_error.to_decimal()}});
    return emit(j, json_out);
  });
}

fewopt_status fewopt_condition(const fewopt_instance* inst, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    auto b = env_budget();
    auto rep = fewopt::log_condition_number(inst->f, b);
    json j;
    j["log_condition"] = rep.log_condition.to_decimal();
    json minors = json::object();
    for (const auto& [subset, v] : rep.minors) {
      std::string key;
      for (size_t i : subset) {
        if (!key.empty()) key += ",";
        key += std::to_string(i);
      }
      minors[key] = v.to_decimal();
    }
    j["minors"] = std::move(minors);
    if (rep.sparse_size_bits) j["sparse_size_bits"] = *rep.sparse_size_bits;
    return emit(j, json_out);
  });
}

fewopt_status fewopt_canon(const fewopt_instance* inst, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    auto b = env_budget();
    auto c = fewopt::canonicalize_simplex(inst->f, b);
    json j;
    j["c"] = c.c.to_decimal();
    j["ell"] = c.ell;
    json rows = json::array();
    for (size_t i = 0; i < c.transform.matrix.rows(); ++i) {
      json row = json::array();
      for (size_t k = 0; k < c.transform.matrix.cols(); ++k)
        row.push_back(c.transform.matrix.at(i, k).to_decimal());
      rows.push_back(std::move(row));
    }
    j["transform"] = std::move(rows);
    json scaling = json::array();
    for (const auto& s : c.scaling) scaling.push_back(s.to_decimal());
    j["scaling"] = std::move(scaling);
    j["permutation"] = c.permutation;
    return emit(j, json_out);
  });
}

fewopt_status fewopt_reduce(const fewopt_instance* inst, double delta, long cap_m,
                            const char* mode, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&]() -> fewopt_status {
    fewopt::GadgetMode gm = fewopt::GadgetMode::PositiveOrthant;
    std::string ms = mode ? mode : "positive";
    if (ms == "positive")
      gm = fewopt::GadgetMode::PositiveOrthant;
    else if (ms == "real-slack")
      gm = fewopt::GadgetMode::RealSlack;
    else if (ms == "real-squared")
      gm = fewopt::GadgetMode::RealSquared;
    else
      throw fewopt::InvalidInput("mode must be positive, real-slack, or real-squared");
    std::optional<long> cap;
    if (cap_m > 0) cap = cap_m;
    auto h = fewopt::make_hardness_instance(inst->f, delta, cap, gm);
    json j;
    j["M"] = h.M;
    j["clamped"] = h.clamped;
    j["mode"] = ms;
    j["instance"] = json::parse(fewopt::serialize_instance(h.F));
    return emit(j, json_out);
  });
}

fewopt_status fewopt_oracle(const fewopt_instance* inst, double lo10, double hi10,
                            int points, int rounds, char** json_out) {
  if (!inst || !json_out) {
    g_last_error = "null argument";
    return FEWOPT_INVALID_INPUT;
  }
  return guarded([&] {
    auto rep = fewopt::grid_supremum_detail(inst->f, lo10, hi10, points, rounds);
    auto fmt = [](double v) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      return std::string(buf);
    };
    json j;
    j["value"] = fmt(rep.value);
    j["resolution"] = fmt(rep.resolution);
    j["arg_log"] = rep.arg_log;
    return emit(j, json_out);
  });
}

void fewopt_string_free(char* s) { std::free(s); }

const char* fewopt_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
