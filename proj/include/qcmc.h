#ifndef QCMC_H
#define QCMC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* status codes; nonzero values double as CLI exit codes */
enum {
  QCMC_OK = 0,
  QCMC_EIO = 1,
  QCMC_EPARAM = 2,
  QCMC_ECRYPTO = 3,
  QCMC_EBOUND = 4
};

typedef struct qcmc_spec qcmc_spec;
typedef struct qcmc_keypair qcmc_keypair;
typedef struct qcmc_pubkey qcmc_pubkey;

/* message for the calling thread's most recent failure; library-owned */
const char* qcmc_last_error(void);

/* releases strings handed out through char** out parameters */
void qcmc_string_free(char* s);

/* structured-matrix construction.  stack: binary generator blocks with the
 * non-repeating-difference support rule.  array: parity blocks over GF(2^l)
 * with a marked pair confined to the first block. */
int qcmc_stack_generate(uint64_t p, unsigned m, unsigned t_r, uint64_t seed, qcmc_spec** out);
int qcmc_array_generate(uint64_t p, unsigned m, unsigned l, uint64_t seed, qcmc_spec** out);

/* 0 = stack, 1 = array, -1 = null handle */
int qcmc_spec_kind(const qcmc_spec* s);

/* per-condition verdict report; all_ok may be NULL */
int qcmc_spec_conditions(const qcmc_spec* s, int* all_ok, char** report_out);

int qcmc_spec_write(const qcmc_spec* s, const char* path);
int qcmc_spec_read(const char* path, qcmc_spec** out);
void qcmc_spec_free(qcmc_spec* s);

/* t is the correctable weight (array keys) or the error budget (stack keys) */
int qcmc_keygen(const qcmc_spec* s, unsigned t, uint64_t seed, qcmc_keypair** out);

/* either path may be NULL to skip that file */
int qcmc_keypair_write(const qcmc_keypair* kp, const char* private_path,
                       const char* public_path);
int qcmc_keypair_read(const char* path, qcmc_keypair** out);
void qcmc_keypair_free(qcmc_keypair* kp);

/* accepts private or public key files */
int qcmc_pubkey_read(const char* path, qcmc_pubkey** out);
void qcmc_pubkey_free(qcmc_pubkey* pk);

/* whole-file encryption with padding-free big-integer framing; the seed
 * feeds error sampling where the system needs fresh randomness */
int qcmc_encrypt_file(const qcmc_pubkey* pk, const char* message_path,
                      const char* cipher_path, uint64_t seed);
int qcmc_decrypt_file(const qcmc_keypair* kp, const char* cipher_path,
                      const char* message_path);

/* automorphism-group audit with the quantum-sampling premise, small p only */
int qcmc_audit(const qcmc_spec* s, double delta, char** report_out);

/* information-set-decoding demo against a stored public key.  method is
 * "lb" (j = errors allowed inside the information set) or "stern"
 * (j = subset size per half, window = filter rows). */
int qcmc_attack_file(const char* public_path, const char* cipher_path,
                     const char* message_out_path, const char* method, unsigned j,
                     unsigned window, uint64_t seed, uint64_t max_iters, char** report_out);

/* parameter analysis: single query or the stored reference table with its
 * recomputed columns and any deviations */
int qcmc_analyze_query(unsigned security_bits, uint64_t p, unsigned t, unsigned l,
                       unsigned j, int csv, char** out);
int qcmc_analyze_table(unsigned l, unsigned j, int csv, char** out);
int qcmc_keysize(uint64_t n, uint64_t k, uint64_t* bits_out);

#ifdef __cplusplus
}
#endif

#endif /* QCMC_H */
