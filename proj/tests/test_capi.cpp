#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"

#include "fewopt.h"

// Everything below goes through the C interface of the shared library.

using nlohmann::json;

namespace {

const char* kParabola = R"({"n": 1, "terms": [
  {"coeff": "-1", "exponents": ["0"]},
  {"coeff": "3", "exponents": ["1"]},
  {"coeff": "-1", "exponents": ["2"]}]})";

struct Inst {
  fewopt_instance* p = nullptr;
  explicit Inst(const char* text) { REQUIRE(fewopt_instance_parse(text, &p) == FEWOPT_OK); }
  ~Inst() { fewopt_instance_free(p); }
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(std::string(s));
  fewopt_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("sup on a bounded circuit instance") {
  Inst inst(kParabola);
  char* out = nullptr;
  REQUIRE(fewopt_sup(inst.p, 1e-9, &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(j["outcome"] == "bounded");
  CHECK(j["algorithm_case"] == "closed_form");
  CHECK(std::stod(j["lambda_star"].get<std::string>()) == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(j["maximizer"]["coords"][0]["kind"] == "finite");
}

TEST_CASE("sup outside the supported class") {
  Inst inst(R"({"n": 1, "terms": [
    {"coeff": "1", "exponents": ["0"]},
    {"coeff": "-1", "exponents": ["1"]},
    {"coeff": "1", "exponents": ["2"]},
    {"coeff": "-1", "exponents": ["3"]},
    {"coeff": "1", "exponents": ["4"]}]})");
  char* out = nullptr;
  CHECK(fewopt_sup(inst.p, 1e-9, &out) == FEWOPT_UNSUPPORTED);
  CHECK(std::strlen(fewopt_last_error()) > 0);
}

TEST_CASE("decide: strict comparisons and the precision tie") {
  Inst inst(kParabola);
  char* out = nullptr;
  REQUIRE(fewopt_decide(inst.p, "1", &out) == FEWOPT_OK);
  CHECK(take(out)["decision"] == "yes");
  REQUIRE(fewopt_decide(inst.p, "2", &out) == FEWOPT_OK);
  CHECK(take(out)["decision"] == "no");

  // lambda == lambda*: a certified interval cannot separate them.
  REQUIRE(fewopt_decide(inst.p, "5/4", &out) == FEWOPT_PRECISION);
  json j = take(out);
  CHECK(j["decision"] == "equal_within_precision");
  CHECK(std::stod(j["lambda_star"].get<std::string>()) == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(j.contains("certified_relative_error"));
}

TEST_CASE("malformed input and null arguments") {
  fewopt_instance* p = nullptr;
  CHECK(fewopt_instance_parse("{\"n\": 1}", &p) == FEWOPT_INVALID_INPUT);
  CHECK(p == nullptr);
  CHECK(std::strlen(fewopt_last_error()) > 0);
  CHECK(fewopt_instance_parse("not json at all", &p) == FEWOPT_INVALID_INPUT);
  CHECK(fewopt_instance_parse(nullptr, &p) == FEWOPT_INVALID_INPUT);

  char* out = nullptr;
  CHECK(fewopt_sup(nullptr, 1e-9, &out) == FEWOPT_INVALID_INPUT);
  Inst inst(kParabola);
  CHECK(fewopt_decide(inst.p, nullptr, &out) == FEWOPT_INVALID_INPUT);
  CHECK(fewopt_sup(inst.p, 1e-9, nullptr) == FEWOPT_INVALID_INPUT);
}

TEST_CASE("serialize round-trips through parse") {
  Inst inst(kParabola);
  char* text = nullptr;
  REQUIRE(fewopt_instance_serialize(inst.p, &text) == FEWOPT_OK);
  fewopt_instance* again = nullptr;
  REQUIRE(fewopt_instance_parse(text, &again) == FEWOPT_OK);
  char* text2 = nullptr;
  REQUIRE(fewopt_instance_serialize(again, &text2) == FEWOPT_OK);
  CHECK(std::string(text) == std::string(text2));
  fewopt_string_free(text);
  fewopt_string_free(text2);
  fewopt_instance_free(again);
}

TEST_CASE("roots of a trinomial") {
  Inst inst(R"({"n": 1, "terms": [
    {"coeff": "2", "exponents": ["0"]},
    {"coeff": "-3", "exponents": ["1"]},
    {"coeff": "1", "exponents": ["2"]}]})");
  char* out = nullptr;
  REQUIRE(fewopt_roots(inst.p, 1e-9, &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(j["count"] == 2);
  REQUIRE(j["roots"].size() == 2);
  double a = std::stod(j["roots"][0]["value"].get<std::string>());
  double b = std::stod(j["roots"][1]["value"].get<std::string>());
  if (a > b) std::swap(a, b);
  CHECK(a == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(b == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("condition report") {
  Inst inst(R"({"n": 1, "terms": [
    {"coeff": "-1", "exponents": ["0"]},
    {"coeff": "1", "exponents": ["1"]}]})");
  char* out = nullptr;
  REQUIRE(fewopt_condition(inst.p, &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(std::stod(j["log_condition"].get<std::string>()) ==
        doctest::Approx(3.0 * std::log(3.0)).epsilon(1e-12));
  CHECK(j["minors"].contains("0,1"));
}

TEST_CASE("canonical simplex form") {
  Inst inst(R"({"n": 2, "terms": [
    {"coeff": "5", "exponents": ["0", "0"]},
    {"coeff": "-2", "exponents": ["1", "0"]},
    {"coeff": "-3", "exponents": ["0", "1"]}]})");
  char* out = nullptr;
  REQUIRE(fewopt_canon(inst.p, &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(std::stod(j["c"].get<std::string>()) == doctest::Approx(5.0));
  CHECK(j["ell"] == 0);
  CHECK(j["scaling"].size() == 2);
}

TEST_CASE("reduce builds a feasibility gadget") {
  Inst inst(R"({"n": 1, "terms": [
    {"coeff": "1", "exponents": ["1"]},
    {"coeff": "-1", "exponents": ["0"]}]})");
  char* out = nullptr;
  REQUIRE(fewopt_reduce(inst.p, 0.5, 8, "positive", &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(j["M"] == 8);
  CHECK(j["clamped"] == true);
  CHECK(j["instance"]["n"] == 9);
  CHECK(fewopt_reduce(inst.p, 0.5, 8, "bogus", &out) == FEWOPT_INVALID_INPUT);
}

TEST_CASE("oracle grid report") {
  Inst inst(kParabola);
  char* out = nullptr;
  REQUIRE(fewopt_oracle(inst.p, -4, 4, 17, 8, &out) == FEWOPT_OK);
  json j = take(out);
  CHECK(std::stod(j["value"].get<std::string>()) == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(std::stod(j["resolution"].get<std::string>()) > 0.0);
  CHECK(j["arg_log"].size() == 1);
}
