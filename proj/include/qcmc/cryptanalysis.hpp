#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcmc/bigmath.hpp"
#include "qcmc/crypto.hpp"

namespace qcmc {

// exact-rational cost model for information-set decoding with j allowed
// errors inside the information set
struct WorkFactorReport {
  uint64_t n = 0, k = 0, t = 0;
  unsigned j = 0;
  uint64_t alpha = 1, beta = 1;
  std::vector<bigrat> q;  // Q_0 .. Q_j, success stratum probabilities
  bigrat t_j;             // expected iterations, 1 / sum(Q_i)
  bigint n_j;             // candidates per iteration, sum C(k, i)
  bigrat w_j;             // T_j * (alpha k^3 + N_j beta k)
  double log2_w = 0;
};

WorkFactorReport lee_brickell_workfactor(uint64_t n, uint64_t k, uint64_t t, unsigned j,
                                         uint64_t alpha = 1, uint64_t beta = 1);

struct AttackOutcome {
  bool success = false;
  Vec plaintext;
  Vec error;
  uint64_t iterations = 0;      // invertible information-set draws consumed
  uint64_t singular_draws = 0;  // rejected singular draws, not counted above
};

// working desk-scale attack on a McEliece public key: guess an information
// set, patch up to j errors inside it, verify by residual weight <= t
AttackOutcome lee_brickell_attack(const Mat& m_pub, const Vec& c, unsigned t, unsigned j,
                                  Rng& rng, uint64_t max_iters);

struct SternParams {
  unsigned subset = 1;  // nonzero positions per half of the information set
  unsigned window = 2;  // syndrome rows used for the collision filter
};

// collision-style variant, binary codes only
AttackOutcome stern_attack(const Mat& m_pub, const Vec& c, unsigned t, SternParams params,
                           Rng& rng, uint64_t max_iters);

// smallest m with p <= 0.25 * m * (log2 m + log2 p)
unsigned min_blocks_quantum(uint64_t p);

// smallest m with log2 of the j-cost at (n=mp, k=(m-1)p, t) >= security_bits;
// j is clamped to t
unsigned min_blocks_classical(uint64_t p, unsigned t, unsigned security_bits, unsigned j = 2);

// log2(#plaintexts) / log2(#ciphertexts) for weight-t messages over GF(2^l)
// blocks of p symbols; counts q^t value assignments per support, which is the
// reading that reproduces the published rate figures
double info_rate(uint64_t p, unsigned m, unsigned l, unsigned t);

uint64_t mceliece_keysize_bits(uint64_t n, uint64_t k);

struct ParamRow {
  unsigned security_bits = 0;
  uint64_t p = 0;
  unsigned t = 0, l = 0;
  unsigned m_c = 0, m_q = 0, m = 0;
  double rate = 0;
  uint64_t pub_rows = 0, pub_cols = 0;
};

struct ParamQuery {
  unsigned security_bits;
  uint64_t p;
  unsigned t;
  unsigned l;
};

std::vector<ParamRow> param_report(const std::vector<ParamQuery>& queries, unsigned j = 2);

// published reference row; the success-probability column is carried as
// opaque data and never recomputed
struct ReferenceRow {
  unsigned security_bits;
  uint64_t p;
  unsigned t;
  unsigned m_c, m_q, m;
  const char* probability;
  uint64_t pub_rows, pub_cols;
  double rate;
};

const std::vector<ReferenceRow>& reference_parameter_rows();

struct ReferenceCheck {
  ReferenceRow ref;
  ParamRow computed;
  double log2_w_at_ref_m_c = 0;  // cost exponent evaluated at the reference m_c
  bool m_c_match = false, m_q_match = false, rate_match = false;
};

std::vector<ReferenceCheck> check_reference_rows(unsigned l = 3, unsigned j = 2);

std::string param_rows_csv(const std::vector<ParamRow>& rows);
std::string param_rows_text(const std::vector<ParamRow>& rows);
std::string reference_check_text(const std::vector<ReferenceCheck>& checks);

}  // namespace qcmc
