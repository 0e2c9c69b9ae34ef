/* C interface to the fewnomial optimization library.
 *
 * All functions return a fewopt_status; results are UTF-8 JSON documents
 * allocated by the library and released with fewopt_string_free. Numeric
 * fields inside result documents are decimal strings, never binary floats.
 *
 * Working precision defaults to a 256-bit mantissa with an 8192-bit
 * escalation cap; the environment variables FEWOPT_PRECISION_BITS and
 * FEWOPT_PRECISION_CAP override these per process.
 */
#ifndef FEWOPT_H
#define FEWOPT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FEWOPT_OK = 0,
  FEWOPT_INVALID_INPUT = 2,   /* malformed instance, bad flag, parse error */
  FEWOPT_PRECISION = 3,       /* precision cap hit, or a decision tie */
  FEWOPT_UNSUPPORTED = 4,     /* valid instance outside the supported class */
  FEWOPT_INTERNAL = 5
} fewopt_status;

/* Opaque parsed instance. */
typedef struct fewopt_instance fewopt_instance;

/* Parses {"n": int, "terms": [{"coeff": str, "exponents": [str]}]} where
 * scalar strings follow the expression grammar (decimal | e | pi |
 * sqrt(...) | + - * / | parentheses | unary minus). */
fewopt_status fewopt_instance_parse(const char* json, fewopt_instance** out);
void fewopt_instance_free(fewopt_instance* inst);

/* Round-trippable JSON for the stored instance. */
fewopt_status fewopt_instance_serialize(const fewopt_instance* inst, char** json_out);

/* Supremum over the positive orthant (m = n+1, m = n+2, or univariate
 * tetranomials). eps <= 0 selects the default 1e-9. */
fewopt_status fewopt_sup(const fewopt_instance* inst, double eps, char** json_out);

/* Decides sup f >= lambda (lambda in the scalar expression grammar).
 * Returns FEWOPT_PRECISION for EqualWithinPrecision, with a margin report
 * still written to json_out. */
fewopt_status fewopt_decide(const fewopt_instance* inst, const char* lambda, char** json_out);

/* Positive-root count and refined roots of a univariate trinomial. */
fewopt_status fewopt_roots(const fewopt_instance* inst, double eps, char** json_out);

/* Condition number report (log C(f) and the lifted minors). */
fewopt_status fewopt_condition(const fewopt_instance* inst, char** json_out);

/* Canonical simplex form of an honest (n+1)-nomial with constant term. */
fewopt_status fewopt_canon(const fewopt_instance* inst, char** json_out);

/* Feasibility gadget F = (embedded f)^2 + t_M from a quartic instance.
 * cap_m <= 0 means no cap; mode is "positive", "real-slack", or
 * "real-squared" (NULL selects "positive"). */
fewopt_status fewopt_reduce(const fewopt_instance* inst, double delta, long cap_m,
                            const char* mode, char** json_out);

/* Log-grid supremum oracle over [10^lo10, 10^hi10]^n. */
fewopt_status fewopt_oracle(const fewopt_instance* inst, double lo10, double hi10,
                            int points, int rounds, char** json_out);

void fewopt_string_free(char* s);

/* Message for the most recent failure on this thread; empty on success. */
const char* fewopt_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* FEWOPT_H */
