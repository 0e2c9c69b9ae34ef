#ifndef FEWOPT_IO_HPP
#define FEWOPT_IO_HPP

#include <string>

#include "fewopt/fewnomial.hpp"

namespace fewopt {

// Instance schema: {"n": int, "terms": [{"coeff": string, "exponents":
// [string x n]}]}. Scalar strings use the expression grammar of parse.hpp;
// serialization emits plain decimal strings with enough digits to
// round-trip the stored values exactly at the same precision.
Fewnomial parse_instance_json(const std::string& text, mpfr_prec_t prec = 256);
Fewnomial load_instance(const std::string& path, mpfr_prec_t prec = 256);
std::string serialize_instance(const Fewnomial& f);

}  // namespace fewopt

#endif
