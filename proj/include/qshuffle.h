/* C interface to the shuffle-algebra library.
 *
 * Conventions:
 *   - Every function returns a qsh_status code; QSH_OK (0) means success.
 *   - On failure, qsh_last_error() returns a thread-local message describing
 *     the most recent error in the calling thread.
 *   - Output objects are returned through out-parameters and must be released
 *     with the matching qsh_*_free function. Strings returned through char**
 *     are heap-allocated and must be released with qsh_string_free.
 *   - Verification suites return a line-oriented report. The first line is
 *     the schema header "qshuffle-report\t1"; every following line is
 *     "STATUS\tsuite\tinstance-id\tdetail" with STATUS in {PASS, FAIL}.
 *     *failures receives the number of FAIL lines.
 *   - Suite runners honor the QSHUFFLE_WORKERS environment variable (number
 *     of worker threads for independent instances); reports are canonically
 *     ordered regardless of the worker count.
 */
#ifndef QSHUFFLE_H
#define QSHUFFLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsh_status {
  QSH_OK = 0,
  QSH_ERR_INVALID = 1,     /* bad argument, unknown id, shape mismatch */
  QSH_ERR_PARSE = 2,       /* malformed JSON or scalar string */
  QSH_ERR_NOT_IN_SPAN = 3, /* decomposition target outside the candidate span */
  QSH_ERR_INTERNAL = 4     /* unexpected internal failure */
} qsh_status;

/* Opaque handles. */
typedef struct qsh_datum qsh_datum; /* a presentation: root data + shuffle family */
typedef struct qsh_elem qsh_elem;   /* a shuffle-algebra element */

/* Thread-local message for the most recent error in this thread. The pointer
 * stays valid until the next failing call in the same thread. */
const char* qsh_last_error(void);

void qsh_string_free(char* s);

/* --- presentations --------------------------------------------------------
 * Known ids: "sl21"  (rank 2, two odd simple roots),
 *            "d21f"  (rank 3, three odd simple roots),
 *            "d21o"  (rank 3, one odd simple root). */
qsh_status qsh_datum_create(const char* id, qsh_datum** out);
void qsh_datum_free(qsh_datum* d);
qsh_status qsh_datum_rank(const qsh_datum* d, int* out);
qsh_status qsh_datum_root_count(const qsh_datum* d, int* out);
/* Name of positive root idx (0-based, convex order). */
qsh_status qsh_datum_root_name(const qsh_datum* d, int idx, char** out);

/* --- elements ------------------------------------------------------------ */
void qsh_elem_free(qsh_elem* e);
qsh_status qsh_elem_clone(const qsh_elem* e, qsh_elem** out);
qsh_status qsh_unit(const qsh_datum* d, qsh_elem** out);
/* Image of the degree-one generator e_{i,k}; i is the 0-based simple root. */
qsh_status qsh_generator(const qsh_datum* d, int i, int k, qsh_elem** out);
/* Image of the quantum affine root vector for the named positive root. */
qsh_status qsh_root_vector(const qsh_datum* d, const char* root, int k, qsh_elem** out);
qsh_status qsh_shuffle(const qsh_elem* a, const qsh_elem* b, qsh_elem** out);
qsh_status qsh_add(const qsh_elem* a, const qsh_elem* b, qsh_elem** out);
qsh_status qsh_sub(const qsh_elem* a, const qsh_elem* b, qsh_elem** out);
/* Scale by a coefficient-field scalar. Grammar: "num" or "num / den"; each
 * polynomial is terms joined by " + "; a term is '*'-joined factors, each a
 * rational or "v^e"/"u^e". Examples: "1/2", "v^-1", "2*v^2*u^1 + -3". */
qsh_status qsh_scale(const qsh_elem* e, const char* scalar, qsh_elem** out);
qsh_status qsh_is_zero(const qsh_elem* e, int* out);
qsh_status qsh_equal(const qsh_elem* a, const qsh_elem* b, int* out);
/* Writes the grading into buf (length buf_len); *written gets the rank. Fails
 * if buf_len is too small. */
qsh_status qsh_grading(const qsh_elem* e, int* buf, int buf_len, int* written);

/* JSON form:
 *   { "datum": id, "grading": [ints],
 *     "numerator": { "vars": [names], "terms": [ {"exp": [ints], "coeff": str} ] } } */
qsh_status qsh_elem_to_json(const qsh_elem* e, char** out);
qsh_status qsh_elem_from_json(const qsh_datum* d, const char* json, qsh_elem** out);

/* Decompose e over ordered root-vector products with all modes in [lo, hi].
 * On success *json_out holds
 *   { "window": [lo, hi], "terms": [ {"modes": [[ints]...], "coeff": str} ] }
 * where "modes" lists the mode multiset per positive root in convex order.
 * Returns QSH_ERR_NOT_IN_SPAN (with a window hint in qsh_last_error()) if the
 * element is not a combination of candidates within the window. */
qsh_status qsh_decompose(const qsh_datum* d, const qsh_elem* e, int lo, int hi,
                         char** json_out);

/* --- verification suites -------------------------------------------------- */
/* Defining relations of the presentation, all mode indices in [kmin, kmax]. */
qsh_status qsh_run_relations(const qsh_datum* d, int kmin, int kmax, char** report,
                             int* failures);
/* Commutation identities between root vectors ("sl21" only). */
qsh_status qsh_run_comm_lemmas(const qsh_datum* d, int kmin, int kmax, char** report,
                               int* failures);
/* Closed forms of the staircase products ("sl21" only), n <= nmax, k <= kmax. */
qsh_status qsh_run_elementary(const qsh_datum* d, int nmax, int kmax, char** report,
                              int* failures);
/* Root-vector products of one grading, modes in [lo, hi]: candidate count vs
 * exact rank of the images. */
qsh_status qsh_run_pbw(const qsh_datum* d, const int* grading, int rank, int lo, int hi,
                       char** report, int* failures);
/* Specialization checks (lower-degree vanishing + leading-term match) for
 * every candidate of one grading, modes in [lo, hi]. */
qsh_status qsh_run_specialization(const qsh_datum* d, const int* grading, int rank, int lo,
                                  int hi, char** report, int* failures);

/* --- root-of-unity suites (order parameter t >= 1) ------------------------ */
/* Shuffle powers of x^k/(x-y) vanish exactly from the t-th power on. */
qsh_status qsh_run_rou_nilpotency(int t, int kmax, int mmax, char** report, int* failures);
/* Admissible root-vector products are independent; inadmissible ones vanish. */
qsh_status qsh_run_rou_independence(int t, int nmax, int mmax, int lo, int hi,
                                    char** report, int* failures);
/* Factor structures of the small generator products. */
qsh_status qsh_run_rou_toy(int t, char** report, int* failures);
/* Per numerator degree D in [0, dmax] at grading (n, m): dimension of the
 * wheel-passing subspace vs dimension spanned by admissible products (modes
 * bounded below by lo). Detail column reports both numbers. */
qsh_status qsh_run_rou_wheeldim(int t, int n, int m, int dmax, int lo, char** report,
                                int* failures);
/* Symmetric one-group algebra: admissible symmetrized monomials pass the
 * wheel condition and span the wheel subspace, per degree up to dmax. */
qsh_status qsh_run_sym_basis(int t, int n, int dmax, char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* QSHUFFLE_H */
