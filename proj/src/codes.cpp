#include "qcmc/codes.hpp"

#include <algorithm>

namespace qcmc {

LinearCode LinearCode::from_generator(Mat g) {
  if (rank(g) != g.rows()) fail_param("generator matrix must have full row rank");
  LinearCode c;
  c.n = g.cols();
  c.k = g.rows();
  c.deg = static_cast<uint8_t>(g.deg());
  c.generator = std::move(g);
  return c;
}

LinearCode LinearCode::from_parity(Mat h) {
  if (rank(h) != h.rows()) fail_param("parity matrix must have full row rank");
  LinearCode c;
  c.n = h.cols();
  c.k = h.cols() - h.rows();
  c.deg = static_cast<uint8_t>(h.deg());
  c.parity = std::move(h);
  return c;
}

size_t hamming_weight(const Vec& v) {
  size_t w = 0;
  for (uint16_t x : v.v)
    if (x) ++w;
  return w;
}

size_t hamming_distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.deg != b.deg) fail_param("length mismatch in distance");
  size_t w = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.v[i] != b.v[i]) ++w;
  return w;
}

size_t min_distance_bruteforce(const LinearCode& code, uint64_t max_codewords) {
  Mat g = code.generator ? *code.generator : generator_from_parity(*code.parity);
  size_t k = g.rows(), n = g.cols();
  uint64_t q = uint64_t{1} << g.deg();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    if (total > max_codewords / q + 1) fail_bound("message space exceeds enumeration bound");
    total *= q;
  }
  if (total > max_codewords) fail_bound("message space exceeds enumeration bound");
  const Field& f = Field::get(g.deg());
  std::vector<uint16_t> msg(k, 0);
  std::vector<uint16_t> cw(n, 0);
  size_t best = n + 1;
  // odometer over all messages, maintaining cw = msg * G incrementally
  while (true) {
    size_t pos = 0;
    while (pos < k) {
      uint16_t old = msg[pos];
      msg[pos] = static_cast<uint16_t>((msg[pos] + 1) % q);
      uint16_t delta = old ^ msg[pos];
      for (size_t j = 0; j < n; ++j)
        if (g.at(pos, j)) cw[j] ^= f.mul(delta, g.at(pos, j));
      if (msg[pos] != 0) break;
      ++pos;
    }
    if (pos == k) break;  // wrapped around to the zero message
    size_t w = 0;
    for (uint16_t x : cw)
      if (x) ++w;
    if (w < best) best = w;
  }
  if (best > n) fail_param("code has no nonzero codeword");
  return best;
}

size_t error_capacity(size_t d) {
  if (d < 1) fail_param("distance must be at least 1");
  return (d - 1) / 2;
}

namespace {

// dual basis of a full-row-rank r x n matrix: (n - r) x n with M * D^T = 0
Mat dual_basis(const Mat& m) {
  size_t n = m.cols(), r = m.rows();
  if (r >= n) fail_param("dual basis requires more columns than rows");
  auto [sys, perm] = systematic_form(m);  // sys = [I_r | A]
  Mat a(r, n - r, m.deg());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n - r; ++j) a.at(i, j) = sys.at(i, r + j);
  Mat d = hstack(transpose(a), Mat::identity(n - r, m.deg()));
  return apply_cols(d, perm_inverse(perm));
}

}  // namespace

Mat parity_from_generator(const Mat& g) { return dual_basis(g); }
Mat generator_from_parity(const Mat& h) { return dual_basis(h); }

Mat hadamard_generator(unsigned r) {
  if (r < 1) fail_param("rank must be at least 1");
  if (r > 20) fail_bound("hadamard rank too large");
  Mat g(r, size_t{1} << r, 1);
  for (size_t i = 0; i < g.cols(); ++i)
    for (unsigned j = 0; j < r; ++j) g.at(j, i) = (i >> (r - 1 - j)) & 1;
  return g;
}

Mat goppa_parity(const std::vector<uint16_t>& poly, const std::vector<uint16_t>& points,
                 unsigned deg) {
  if (poly.size() < 2 || poly.back() == 0) fail_param("polynomial must have positive degree");
  if (points.empty()) fail_param("point set must be nonempty");
  const Field& f = Field::get(deg);
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) fail_param("evaluation points must be distinct");
  size_t t = poly.size() - 1, n = points.size();
  std::vector<uint16_t> dinv(n);
  for (size_t i = 0; i < n; ++i) {
    // horner evaluation of g at the point
    uint16_t acc = 0;
    for (size_t c = poly.size(); c-- > 0;) acc = static_cast<uint16_t>(f.mul(acc, points[i]) ^ poly[c]);
    if (acc == 0) fail_param("evaluation point is a root of the polynomial");
    dinv[i] = f.inv(acc);
  }
  Mat h(t, n, deg);
  for (size_t i = 0; i < n; ++i) {
    uint16_t pw = 1;
    for (size_t j = 0; j < t; ++j) {
      h.at(j, i) = f.mul(pw, dinv[i]);
      pw = f.mul(pw, points[i]);
    }
  }
  return h;
}

SyndromeDecoder::SyndromeDecoder(Mat parity, unsigned t, uint64_t table_bound)
    : h_(std::move(parity)), t_(t) {
  size_t n = h_.cols();
  if (t > n) fail_param("capacity exceeds code length");
  uint64_t q1 = (uint64_t{1} << h_.deg()) - 1;
  unsigned __int128 entries = 0;
  for (unsigned i = 0; i <= t; ++i) {
    unsigned __int128 c = 1;
    for (unsigned j = 0; j < i; ++j) c = c * (n - j) / (j + 1);
    for (unsigned j = 0; j < i; ++j) c *= q1;
    entries += c;
    if (entries > table_bound) fail_bound("syndrome table exceeds configured bound");
  }
  const Field& f = Field::get(h_.deg());
  std::vector<uint16_t> err(n);
  auto insert = [&](const std::vector<uint16_t>& e, unsigned weight) {
    std::vector<uint16_t> syn(h_.rows(), 0);
    for (size_t j = 0; j < n; ++j) {
      if (e[j] == 0) continue;
      for (size_t r = 0; r < h_.rows(); ++r)
        if (h_.at(r, j)) syn[r] ^= f.mul(h_.at(r, j), e[j]);
    }
    auto [it, fresh] = table_.try_emplace(std::move(syn), e);
    if (fresh) return;
    unambiguous_ = false;  // two distinct low-weight patterns share a syndrome
    auto& kept = it->second;
    size_t kw = 0;
    for (uint16_t x : kept)
      if (x) ++kw;
    if (weight < kw || (weight == kw && e < kept)) kept = e;
  };
  insert(std::vector<uint16_t>(n, 0), 0);
  for (unsigned w = 1; w <= t; ++w) {
    std::vector<size_t> sup(w);
    for (unsigned i = 0; i < w; ++i) sup[i] = i;
    while (true) {
      // odometer over nonzero values at the chosen support, last position fastest
      std::vector<uint16_t> digits(w, 1);
      bool more_values = true;
      while (more_values) {
        std::fill(err.begin(), err.end(), 0);
        for (unsigned i = 0; i < w; ++i) err[sup[i]] = digits[i];
        insert(err, w);
        more_values = false;
        for (size_t d = w; d-- > 0;) {
          if (digits[d] < q1) {
            ++digits[d];
            more_values = true;
            break;
          }
          digits[d] = 1;
        }
      }
      // next support in lexicographic order
      bool more_supports = false;
      for (size_t i = w; i-- > 0;) {
        if (sup[i] < n - w + i) {
          ++sup[i];
          for (size_t j = i + 1; j < w; ++j) sup[j] = sup[j - 1] + 1;
          more_supports = true;
          break;
        }
      }
      if (!more_supports) break;
    }
  }
}

std::pair<Vec, Vec> SyndromeDecoder::decode(const Vec& received) const {
  if (received.size() != h_.cols() || received.deg != h_.deg())
    fail_param("received word shape mismatch");
  Vec s = mat_vec(h_, received);
  auto it = table_.find(s.v);
  if (it == table_.end()) fail_crypto("syndrome outside decoding table");
  Vec e(h_.cols(), h_.deg());
  e.v = it->second;
  Vec c = vec_add(received, e);
  return {c, e};
}

}  // namespace qcmc
