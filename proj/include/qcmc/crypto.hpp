#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qcmc/bigmath.hpp"
#include "qcmc/codes.hpp"
#include "qcmc/qcgen.hpp"

namespace qcmc {

// Niederreiter: private (S, H, P), public H' = S H P; ciphertext c = H' pt^T
struct NrKeyPair {
  uint64_t p = 0;
  unsigned m = 0, l = 0, t = 0;
  Mat s;       // (n-k) x (n-k) scrambler, n-k = p
  Mat h;       // structured parity, p x mp
  Perm perm;   // on mp
  Mat h_pub;   // S H P
  std::shared_ptr<const SyndromeDecoder> decoder;
  std::shared_ptr<const Mat> s_inv;
};

struct NrPublicKey {
  uint64_t p = 0;
  unsigned m = 0, l = 0, t = 0;
  Mat h_pub;
};

// validates capacity (every weight-<=t pattern must decode uniquely) and
// precomputes the decoder; test hook for explicit S and P
NrKeyPair nr_assemble(const ArraySpec& spec, unsigned t, Mat s, Perm perm);
NrKeyPair nr_keygen(const ArraySpec& spec, unsigned t, Rng& rng);
NrPublicKey nr_public(const NrKeyPair& kp);
Vec nr_encrypt(const NrPublicKey& pub, const Vec& pt);
Vec nr_decrypt(const NrKeyPair& kp, const Vec& c);

// McEliece: private (S, M, P), public M' = S M P; ciphertext c = pt M' + e
struct MeKeyPair {
  uint64_t p = 0;
  unsigned m = 0, l = 1, e_budget = 0;
  Mat s;       // k x k, k = (m-1)p
  Mat mgen;    // structured generator [I | stack], k x mp
  Perm perm;   // on mp
  Mat m_pub;   // S M P
  std::shared_ptr<const SyndromeDecoder> decoder;  // on the dual of mgen
  std::shared_ptr<const Mat> s_inv;
};

struct MePublicKey {
  uint64_t p = 0;
  unsigned m = 0, l = 1, e_budget = 0;
  Mat m_pub;
};

MeKeyPair me_assemble(const StackSpec& spec, unsigned e_budget, Mat s, Perm perm);
MeKeyPair me_keygen(const StackSpec& spec, unsigned e_budget, Rng& rng);
MePublicKey me_public(const MeKeyPair& kp);
Vec me_encrypt(const MePublicKey& pub, const Vec& pt, Rng& rng);
Vec me_decrypt(const MeKeyPair& kp, const Vec& c);

// bijection between [0, C(n,t) * (2^l - 1)^t) and exact-weight-t vectors:
// combinadic support rank, then mixed-radix nonzero values in position order
bigint cw_count(size_t n, unsigned t, unsigned l);
Vec cw_unrank(const bigint& index, size_t n, unsigned t, unsigned l);
bigint cw_rank(const Vec& v, unsigned t);

// byte-stream framing: the file is one big-endian integer, split into
// most-significant-first digits of the plaintext-space radix
std::vector<Vec> nr_frame(const std::vector<uint8_t>& data, size_t n, unsigned t, unsigned l);
std::vector<uint8_t> nr_unframe(const std::vector<Vec>& pts, uint64_t msg_bytes, unsigned t);
std::vector<Vec> me_frame(const std::vector<uint8_t>& data, size_t k);
std::vector<uint8_t> me_unframe(const std::vector<Vec>& pts, uint64_t msg_bytes);

}  // namespace qcmc
