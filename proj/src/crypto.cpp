#include "qcmc/crypto.hpp"

#include <algorithm>

namespace qcmc {

NrKeyPair nr_assemble(const ArraySpec& spec, unsigned t, Mat s, Perm perm) {
  if (t < 1) fail_param("error weight must be at least 1");
  Mat h = spec.parity();
  if (s.rows() != h.rows() || s.cols() != h.rows() || s.deg() != h.deg())
    fail_param("scrambler shape mismatch");
  if (perm.size() != h.cols() || !perm_valid(perm)) fail_param("permutation shape mismatch");
  auto dec = std::make_shared<SyndromeDecoder>(h, t);
  if (!dec->unambiguous())
    fail_param("instance cannot uniquely correct the requested error weight; retry with another seed or smaller t");
  NrKeyPair kp;
  kp.p = spec.p;
  kp.m = spec.m;
  kp.l = spec.l;
  kp.t = t;
  kp.s_inv = std::make_shared<Mat>(inverse(s));
  kp.h_pub = apply_cols(mat_mul(s, h), perm);
  kp.s = std::move(s);
  kp.h = std::move(h);
  kp.perm = std::move(perm);
  kp.decoder = std::move(dec);
  return kp;
}

NrKeyPair nr_keygen(const ArraySpec& spec, unsigned t, Rng& rng) {
  Mat h = spec.parity();
  Mat s = sample_scrambler(h.rows(), h.deg(), rng);
  Perm perm = sample_permutation(h.cols(), rng);
  return nr_assemble(spec, t, std::move(s), std::move(perm));
}

NrPublicKey nr_public(const NrKeyPair& kp) { return {kp.p, kp.m, kp.l, kp.t, kp.h_pub}; }

Vec nr_encrypt(const NrPublicKey& pub, const Vec& pt) {
  if (pt.size() != pub.h_pub.cols() || pt.deg != pub.h_pub.deg())
    fail_param("plaintext shape mismatch");
  if (hamming_weight(pt) > pub.t) fail_param("plaintext weight exceeds the error budget");
  return mat_vec(pub.h_pub, pt);
}

Vec nr_decrypt(const NrKeyPair& kp, const Vec& c) {
  if (c.size() != kp.h.rows() || c.deg != kp.h.deg()) fail_param("ciphertext shape mismatch");
  Vec y = mat_vec(*kp.s_inv, c);
  Vec z = solve_right(kp.h, y);
  auto [cw, e] = kp.decoder->decode(z);
  (void)cw;
  return apply_vec(e, kp.perm);
}

MeKeyPair me_assemble(const StackSpec& spec, unsigned e_budget, Mat s, Perm perm) {
  Mat m = spec.generator();
  if (s.rows() != m.rows() || s.cols() != m.rows() || s.deg() != m.deg())
    fail_param("scrambler shape mismatch");
  if (perm.size() != m.cols() || !perm_valid(perm)) fail_param("permutation shape mismatch");
  Mat hm = parity_from_generator(m);
  auto dec = std::make_shared<SyndromeDecoder>(hm, e_budget);
  if (!dec->unambiguous())
    fail_param("instance cannot uniquely correct the requested error weight; retry with another seed or smaller error budget");
  MeKeyPair kp;
  kp.p = spec.p;
  kp.m = spec.m;
  kp.l = 1;
  kp.e_budget = e_budget;
  kp.s_inv = std::make_shared<Mat>(inverse(s));
  kp.m_pub = apply_cols(mat_mul(s, m), perm);
  kp.s = std::move(s);
  kp.mgen = std::move(m);
  kp.perm = std::move(perm);
  kp.decoder = std::move(dec);
  return kp;
}

MeKeyPair me_keygen(const StackSpec& spec, unsigned e_budget, Rng& rng) {
  Mat m = spec.generator();
  Mat s = sample_scrambler(m.rows(), m.deg(), rng);
  Perm perm = sample_permutation(m.cols(), rng);
  return me_assemble(spec, e_budget, std::move(s), std::move(perm));
}

MePublicKey me_public(const MeKeyPair& kp) { return {kp.p, kp.m, kp.l, kp.e_budget, kp.m_pub}; }

Vec me_encrypt(const MePublicKey& pub, const Vec& pt, Rng& rng) {
  if (pt.size() != pub.m_pub.rows() || pt.deg != pub.m_pub.deg())
    fail_param("plaintext shape mismatch");
  Vec c = vec_mat(pt, pub.m_pub);
  uint64_t q = uint64_t{1} << pub.m_pub.deg();
  auto support = rng.sample_distinct(pub.e_budget, static_cast<uint32_t>(c.size()));
  for (uint32_t pos : support) c.v[pos] ^= static_cast<uint16_t>(1 + rng.below(q - 1));
  return c;
}

Vec me_decrypt(const MeKeyPair& kp, const Vec& c) {
  if (c.size() != kp.mgen.cols() || c.deg != kp.mgen.deg())
    fail_param("ciphertext shape mismatch");
  Vec y = apply_vec_inv(c, kp.perm);
  auto [cw, e] = kp.decoder->decode(y);
  (void)e;
  size_t k = kp.mgen.rows();
  Vec ps(k, cw.deg);
  for (size_t i = 0; i < k; ++i) ps.v[i] = cw.v[i];
  return vec_mat(ps, *kp.s_inv);
}

bigint cw_count(size_t n, unsigned t, unsigned l) {
  bigint q1 = (bigint{1} << l) - 1;
  return binom(n, t) * ipow(q1, t);
}

Vec cw_unrank(const bigint& index, size_t n, unsigned t, unsigned l) {
  if (t > n) fail_param("weight exceeds length");
  if (index < 0 || index >= cw_count(n, t, l)) fail_param("index out of codec range");
  uint64_t q1 = (uint64_t{1} << l) - 1;
  bigint vals_radix = ipow(bigint{q1}, t);
  bigint s_idx = index / vals_radix;
  bigint v_idx = index % vals_radix;
  Vec out(n, l);
  // combinadic support unranking, positions descending
  std::vector<size_t> pos(t);
  bigint rem = s_idx;
  size_t hi = n;
  for (unsigned i = t; i-- > 0;) {
    size_t c = hi;
    while (c > i && binom(c - 1, i + 1) > rem) --c;
    pos[i] = c - 1;
    rem -= binom(c - 1, i + 1);
    hi = c - 1;
  }
  // value digits, most significant first across ascending positions
  std::vector<uint64_t> digits(t, 0);
  bigint v = v_idx;
  for (unsigned j = t; j-- > 0;) {
    digits[j] = bigint(v % q1).convert_to<uint64_t>();
    v /= q1;
  }
  for (unsigned j = 0; j < t; ++j) out.v[pos[j]] = static_cast<uint16_t>(digits[j] + 1);
  return out;
}

bigint cw_rank(const Vec& v, unsigned t) {
  std::vector<size_t> pos;
  for (size_t i = 0; i < v.size(); ++i)
    if (v.v[i]) pos.push_back(i);
  if (pos.size() != t) fail_param("vector weight does not match the codec weight");
  uint64_t q1 = (uint64_t{1} << v.deg) - 1;
  bigint s_idx = 0;
  for (size_t i = 0; i < pos.size(); ++i) s_idx += binom(pos[i], i + 1);
  bigint v_idx = 0;
  for (size_t j = 0; j < pos.size(); ++j) v_idx = v_idx * q1 + (v.v[pos[j]] - 1);
  return s_idx * ipow(bigint{q1}, t) + v_idx;
}

namespace {

bigint bytes_to_int(const std::vector<uint8_t>& data) {
  bigint x = 0;
  for (uint8_t b : data) x = (x << 8) | b;
  return x;
}

std::vector<uint8_t> int_to_bytes(bigint x, uint64_t msg_bytes) {
  std::vector<uint8_t> out;
  while (x > 0) {
    out.push_back(bigint(x & 0xff).convert_to<uint8_t>());
    x >>= 8;
  }
  if (out.size() > msg_bytes) fail_crypto("decoded message exceeds recorded length");
  while (out.size() < msg_bytes) out.push_back(0);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<bigint> int_to_digits(bigint x, const bigint& radix) {
  if (radix < 2) fail_param("plaintext space too small to frame bytes");
  std::vector<bigint> digits;
  if (x == 0) digits.push_back(0);
  while (x > 0) {
    digits.push_back(x % radix);
    x /= radix;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bigint digits_to_int(const std::vector<bigint>& digits, const bigint& radix) {
  bigint x = 0;
  for (const bigint& d : digits) {
    if (d < 0 || d >= radix) fail_crypto("block value outside the plaintext space");
    x = x * radix + d;
  }
  return x;
}

}  // namespace

std::vector<Vec> nr_frame(const std::vector<uint8_t>& data, size_t n, unsigned t, unsigned l) {
  bigint radix = cw_count(n, t, l);
  std::vector<Vec> out;
  for (const bigint& d : int_to_digits(bytes_to_int(data), radix))
    out.push_back(cw_unrank(d, n, t, l));
  return out;
}

std::vector<uint8_t> nr_unframe(const std::vector<Vec>& pts, uint64_t msg_bytes, unsigned t) {
  if (pts.empty()) fail_param("no plaintext blocks");
  bigint radix = cw_count(pts[0].size(), t, pts[0].deg);
  std::vector<bigint> digits;
  for (const Vec& v : pts) digits.push_back(cw_rank(v, t));
  return int_to_bytes(digits_to_int(digits, radix), msg_bytes);
}

std::vector<Vec> me_frame(const std::vector<uint8_t>& data, size_t k) {
  bigint radix = bigint{1} << k;
  std::vector<Vec> out;
  for (const bigint& d : int_to_digits(bytes_to_int(data), radix)) {
    Vec pt(k, 1);
    for (size_t i = 0; i < k; ++i) pt.v[i] = boost::multiprecision::bit_test(d, static_cast<unsigned>(k - 1 - i)) ? 1 : 0;
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<uint8_t> me_unframe(const std::vector<Vec>& pts, uint64_t msg_bytes) {
  if (pts.empty()) fail_param("no plaintext blocks");
  size_t k = pts[0].size();
  bigint radix = bigint{1} << k;
  std::vector<bigint> digits;
  for (const Vec& v : pts) {
    bigint d = 0;
    for (size_t i = 0; i < k; ++i) d = (d << 1) | (v.v[i] ? 1 : 0);
    digits.push_back(d);
  }
  return int_to_bytes(digits_to_int(digits, radix), msg_bytes);
}

}  // namespace qcmc
