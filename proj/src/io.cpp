#include "fewopt/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fewopt/parse.hpp"

namespace fewopt {

using nlohmann::json;

Fewnomial parse_instance_json(const std::string& text, mpfr_prec_t prec) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw InvalidInput("instance must be an object with \"n\" and \"terms\"");
  if (!j["n"].is_number_unsigned() && !j["n"].is_number_integer())
    throw InvalidInput("\"n\" must be a nonnegative integer");
  long n_signed = j["n"].get<long>();
  if (n_signed < 1) throw InvalidInput("\"n\" must be >= 1");
  const size_t n = static_cast<size_t>(n_signed);
  if (!j["terms"].is_array()) throw InvalidInput("\"terms\" must be an array");

  std::vector<Term> terms;
  for (const auto& jt : j["terms"]) {
    if (!jt.is_object() || !jt.contains("coeff") || !jt.contains("exponents"))
      throw InvalidInput("each term needs \"coeff\" and \"exponents\"");
    if (!jt["coeff"].is_string())
      throw InvalidInput("\"coeff\" must be a string (no binary floats)");
    Term t;
    t.coefficient = parse_scalar(jt["coeff"].get<std::string>(), prec);
    if (!jt["exponents"].is_array() || jt["exponents"].size() != n)
      throw DimensionMismatch("\"exponents\" must list exactly n strings");
    for (const auto& je : jt["exponents"]) {
      if (!je.is_string())
        throw InvalidInput("each exponent must be a string (no binary floats)");
      t.exponent.push_back(parse_scalar(je.get<std::string>(), prec));
    }
    terms.push_back(std::move(t));
  }
  return make_fewnomial(n, std::move(terms));
}

Fewnomial load_instance(const std::string& path, mpfr_prec_t prec) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str(), prec);
}

std::string serialize_instance(const Fewnomial& f) {
  json j;
  j["n"] = f.n;
  j["terms"] = json::array();
  for (const auto& t : f.terms) {
    json jt;
    jt["coeff"] = t.coefficient.to_decimal();
    jt["exponents"] = json::array();
    for (const auto& e : t.exponent) jt["exponents"].push_back(e.to_decimal());
    j["terms"].push_back(std::move(jt));
  }
  return j.dump(2);
}

}  // namespace fewopt
