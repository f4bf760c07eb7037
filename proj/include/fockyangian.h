/* C interface to the Fock-space operator library.
 *
 * All operations exchange JSON strings. Responses are heap-allocated and must
 * be released with fy_string_free. On any status other than FY_OK the response
 * is not written and fy_last_error holds a message (valid until the next call
 * on the same session). Sessions are not thread-safe; use one per thread.
 *
 * Request/response schemas (see README.md for full examples):
 *   bijection:    {"N","L","partition":[..],"M"} -> {"components":[[..],..],"charges":[..]}
 *                 or {"N","L","components":[..],"charges":[..]} -> {"partition":[..],"M"}
 *   act:          {"gen":"X- i=0 r=0","vector":<fock>,"level"?,"t"?,"c"?} -> <fock>
 *   matrix:       {"N","L","charges":[..],"gen","max_boxes","level"?,"t"?,"c"?}
 *                 -> {"col_basis":[..],"row_basis":[..],"entries":[{"row","col","coeff"}]}
 *   verify:       {"profile":"quick"|"full","jobs"?,"with_millis"?} -> summary report
 *                 or {"suite":"affine","N","L","charges":[..],"max_boxes"?,
 *                 "symbolic"?,"modes"?} to run the relation grid on one window
 *   verify_daha:  {"n","L","expbound","mode":"symbolic"|"sample","t"?,"c"?} -> report
 *   calibrate_nu: {"N","L","charges":[..],"max_boxes"?} -> calibration report
 *   dump_basis:   {"N","L","charges":[..],"max_boxes"} -> {"basis":[..]}
 *
 * A <fock> vector is {"N","L","charges":[..],"terms":[{"components":[..],
 * "coeff":[{"t","c","num","den"},..]},..]}; coefficients are exact polynomial
 * term lists in the parameters t and c (rational constants appear as a single
 * term with t=c=0).
 */
#ifndef FOCKYANGIAN_H
#define FOCKYANGIAN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fy_session fy_session;

typedef enum {
    FY_OK = 0,
    FY_ERR_USAGE = 1,    /* malformed request or out-of-domain arguments */
    FY_ERR_VERIFY = 2,   /* verification ran and reported failures */
    FY_ERR_INTERNAL = 3  /* invariant violation inside the library */
} fy_status;

fy_session* fy_session_new(void);
void fy_session_free(fy_session* s);

/* Message for the most recent failing call on this session, or "". */
const char* fy_last_error(const fy_session* s);

void fy_string_free(char* s);

const char* fy_version(void);

fy_status fy_bijection(fy_session* s, const char* request_json, char** response_json);
fy_status fy_act(fy_session* s, const char* request_json, char** response_json);
fy_status fy_matrix(fy_session* s, const char* request_json, char** response_json);
fy_status fy_verify(fy_session* s, const char* request_json, char** response_json);
fy_status fy_verify_daha(fy_session* s, const char* request_json, char** response_json);
fy_status fy_calibrate_nu(fy_session* s, const char* request_json, char** response_json);
fy_status fy_dump_basis(fy_session* s, const char* request_json, char** response_json);

#ifdef __cplusplus
}
#endif

#endif /* FOCKYANGIAN_H */
