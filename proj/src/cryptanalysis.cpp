#include "qcmc/cryptanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace qcmc {

WorkFactorReport lee_brickell_workfactor(uint64_t n, uint64_t k, uint64_t t, unsigned j,
                                         uint64_t alpha, uint64_t beta) {
  if (k > n || t > n || j > t) fail_param("need j <= t <= n and k <= n");
  WorkFactorReport r;
  r.n = n;
  r.k = k;
  r.t = t;
  r.j = j;
  r.alpha = alpha;
  r.beta = beta;
  bigint denom = binom(n, k);
  if (denom == 0) fail_param("empty selection space");
  bigrat qsum = 0;
  for (unsigned i = 0; i <= j; ++i) {
    bigrat qi(binom(t, i) * binom(n - t, k - i), denom);
    r.q.push_back(qi);
    qsum += qi;
  }
  if (qsum == 0) fail_param("zero per-iteration success probability");
  r.t_j = 1 / qsum;
  r.n_j = 0;
  for (unsigned i = 0; i <= j; ++i) r.n_j += binom(k, i);
  bigint kk(k);
  r.w_j = r.t_j * bigrat(alpha * kk * kk * kk + r.n_j * beta * kk);
  r.log2_w = log2_big(r.w_j);
  return r;
}

namespace {

bool next_combination(std::vector<uint32_t>& idx, uint32_t n) {
  size_t w = idx.size();
  for (size_t i = w; i-- > 0;) {
    if (idx[i] < n - w + i) {
      ++idx[i];
      for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

AttackOutcome lee_brickell_attack(const Mat& m_pub, const Vec& c, unsigned t, unsigned j,
                                  Rng& rng, uint64_t max_iters) {
  size_t k = m_pub.rows(), n = m_pub.cols();
  if (n > 40) fail_param("attack is desk-scale only (n <= 40)");
  if (c.size() != n || c.deg != m_pub.deg()) fail_param("ciphertext shape mismatch");
  if (rank(m_pub) != k) fail_param("public matrix must have full row rank");
  uint64_t q1 = (uint64_t{1} << m_pub.deg()) - 1;
  AttackOutcome out;
  while (out.iterations < max_iters) {
    auto set = rng.sample_distinct(static_cast<uint32_t>(k), static_cast<uint32_t>(n));
    Mat sub = select_columns(m_pub, set);
    if (rank(sub) != k) {
      if (++out.singular_draws > 1000 * (max_iters + 1))
        fail_bound("singular information-set draws exceeded safety cap");
      continue;
    }
    ++out.iterations;
    Mat ainv = inverse(sub);
    Vec c_set(k, c.deg);
    for (size_t i = 0; i < k; ++i) c_set.v[i] = c.v[set[i]];
    for (unsigned w = 0; w <= j && w <= k; ++w) {
      std::vector<uint32_t> sup(w);
      std::iota(sup.begin(), sup.end(), 0u);
      bool more_sup = true;
      while (more_sup) {
        std::vector<uint16_t> digits(w, 1);
        bool more_vals = true;
        while (more_vals) {
          Vec y = c_set;
          for (unsigned i = 0; i < w; ++i) y.v[sup[i]] ^= digits[i];
          Vec cand = vec_mat(y, ainv);
          Vec resid = vec_add(c, vec_mat(cand, m_pub));
          if (hamming_weight(resid) <= t) {
            out.success = true;
            out.plaintext = std::move(cand);
            out.error = std::move(resid);
            return out;
          }
          more_vals = false;
          for (size_t d = w; d-- > 0;) {
            if (digits[d] < q1) {
              ++digits[d];
              more_vals = true;
              break;
            }
            digits[d] = 1;
          }
        }
        more_sup = next_combination(sup, static_cast<uint32_t>(k));
      }
    }
  }
  return out;
}

AttackOutcome stern_attack(const Mat& m_pub, const Vec& c, unsigned t, SternParams params,
                           Rng& rng, uint64_t max_iters) {
  size_t k = m_pub.rows(), n = m_pub.cols();
  if (m_pub.deg() != 1) fail_param("collision attack handles binary codes only");
  if (n > 40) fail_param("attack is desk-scale only (n <= 40)");
  if (c.size() != n || c.deg != 1) fail_param("ciphertext shape mismatch");
  size_t r = n - k;
  if (params.window > r) fail_param("window exceeds the redundancy size");
  if (params.subset > k / 2) fail_param("subset size exceeds half the information set");
  if (2 * params.subset > t) fail_param("subset size exceeds the target weight");
  Mat h = parity_from_generator(m_pub);
  Vec s = mat_vec(h, c);
  Mat m_pub_t = transpose(m_pub);
  AttackOutcome out;
  unsigned z = params.subset, win = params.window;
  while (out.iterations < max_iters) {
    auto red = rng.sample_distinct(static_cast<uint32_t>(r), static_cast<uint32_t>(n));
    // the draw is sorted; the window filter needs the row order random too,
    // or a low error coordinate would sit in the filtered rows every time
    rng.shuffle(red);
    Mat hj = select_columns(h, red);
    if (rank(hj) != r) {
      if (++out.singular_draws > 1000 * (max_iters + 1))
        fail_bound("singular redundancy-set draws exceeded safety cap");
      continue;
    }
    ++out.iterations;
    Mat u = inverse(hj);
    Mat hh = mat_mul(u, h);
    Vec ss = mat_vec(u, s);
    std::vector<uint32_t> info;
    {
      std::vector<bool> in_red(n, false);
      for (uint32_t x : red) in_red[x] = true;
      for (uint32_t x = 0; x < n; ++x)
        if (!in_red[x]) info.push_back(x);
    }
    rng.shuffle(info);
    size_t half = (info.size() + 1) / 2;
    std::vector<uint32_t> xs(info.begin(), info.begin() + half);
    std::vector<uint32_t> ys(info.begin() + half, info.end());

    auto window_key = [&](const std::vector<uint32_t>& cols) {
      uint32_t key = 0;
      for (unsigned row = 0; row < win; ++row) {
        uint16_t bit = 0;
        for (uint32_t col : cols) bit ^= hh.at(row, col);
        key = key << 1 | bit;
      }
      return key;
    };
    auto column_sum = [&](const std::vector<uint32_t>& cols) {
      Vec acc(r, 1);
      for (uint32_t col : cols)
        for (size_t row = 0; row < r; ++row) acc.v[row] ^= hh.at(row, col);
      return acc;
    };

    uint32_t skey = 0;
    for (unsigned row = 0; row < win; ++row) skey = skey << 1 | ss.v[row];

    std::map<uint32_t, std::vector<std::vector<uint32_t>>> left;
    std::vector<uint32_t> a_idx(z);
    std::iota(a_idx.begin(), a_idx.end(), 0u);
    bool more = z <= xs.size();
    while (more) {
      std::vector<uint32_t> cols;
      for (uint32_t i : a_idx) cols.push_back(xs[i]);
      left[window_key(cols) ^ skey].push_back(cols);
      more = z > 0 && next_combination(a_idx, static_cast<uint32_t>(xs.size()));
    }
    std::vector<uint32_t> b_idx(z);
    std::iota(b_idx.begin(), b_idx.end(), 0u);
    more = z <= ys.size();
    while (more) {
      std::vector<uint32_t> bcols;
      for (uint32_t i : b_idx) bcols.push_back(ys[i]);
      auto it = left.find(window_key(bcols));
      if (it != left.end()) {
        for (const auto& acols : it->second) {
          std::vector<uint32_t> cols = acols;
          cols.insert(cols.end(), bcols.begin(), bcols.end());
          Vec resid = vec_add(ss, column_sum(cols));
          if (hamming_weight(resid) + 2 * z <= t) {
            Vec e(n, 1);
            for (uint32_t col : cols) e.v[col] = 1;
            for (size_t i = 0; i < r; ++i)
              if (resid.v[i]) e.v[red[i]] = 1;
            Vec cw = vec_add(c, e);
            Vec cand = solve_right(m_pub_t, cw);
            out.success = true;
            out.plaintext = std::move(cand);
            out.error = std::move(e);
            return out;
          }
        }
      }
      more = z > 0 && next_combination(b_idx, static_cast<uint32_t>(ys.size()));
    }
  }
  return out;
}

unsigned min_blocks_quantum(uint64_t p) {
  if (p < 3) fail_param("p must be at least 3");
  double dp = static_cast<double>(p);
  for (unsigned m = 2; m <= 1000000; ++m) {
    double dm = static_cast<double>(m);
    if (dp <= 0.25 * dm * (std::log2(dm) + std::log2(dp))) return m;
  }
  fail_bound("no block count satisfies the premise within the sweep cap");
}

unsigned min_blocks_classical(uint64_t p, unsigned t, unsigned security_bits, unsigned j) {
  if (p < 2) fail_param("p must be at least 2");
  unsigned j_eff = std::min<unsigned>(j, t);
  for (unsigned m = 2; m <= 100000; ++m) {
    uint64_t n = uint64_t{m} * p, k = uint64_t{m - 1} * p;
    if (t > n) continue;
    WorkFactorReport w = lee_brickell_workfactor(n, k, t, j_eff);
    if (w.log2_w >= static_cast<double>(security_bits)) return m;
  }
  fail_bound("no block count reaches the requested security within the sweep cap");
}

double info_rate(uint64_t p, unsigned m, unsigned l, unsigned t) {
  if (l < 1 || l > kMaxDegree) fail_param("unsupported field degree");
  uint64_t n = uint64_t{m} * p;
  if (t > n) fail_param("weight exceeds block length");
  double plain = log2_big(binom(n, t)) + static_cast<double>(t) * l;
  return plain / (static_cast<double>(l) * p);
}

uint64_t mceliece_keysize_bits(uint64_t n, uint64_t k) {
  if (k > n) fail_param("dimension exceeds length");
  return k * (n - k);
}

std::vector<ParamRow> param_report(const std::vector<ParamQuery>& queries, unsigned j) {
  std::vector<ParamRow> rows;
  for (const auto& q : queries) {
    ParamRow r;
    r.security_bits = q.security_bits;
    r.p = q.p;
    r.t = q.t;
    r.l = q.l;
    r.m_c = min_blocks_classical(q.p, q.t, q.security_bits, j);
    r.m_q = min_blocks_quantum(q.p);
    r.m = std::max(r.m_c, r.m_q);
    r.rate = info_rate(q.p, r.m, q.l, q.t);
    r.pub_rows = q.p;
    r.pub_cols = uint64_t{r.m} * q.p;
    rows.push_back(r);
  }
  return rows;
}

const std::vector<ReferenceRow>& reference_parameter_rows() {
  // the 256-bit row published with t=20 carries m_c, rate and column count
  // that are only consistent with t=40; stored corrected
  static const std::vector<ReferenceRow> rows = {
      {80, 101, 15, 17, 35, 35, "2^-132", 101, 3535, 0.60},
      {80, 101, 20, 9, 35, 35, "2^-190", 101, 3535, 0.77},
      {80, 211, 35, 4, 62, 62, "2^-398", 211, 13082, 0.71},
      {80, 211, 40, 3, 62, 62, "2^-465", 211, 13082, 0.80},
      {100, 101, 15, 40, 35, 40, "2^-136", 101, 4040, 0.61},
      {100, 101, 20, 17, 35, 35, "2^-190", 101, 3535, 0.77},
      {100, 211, 35, 5, 62, 62, "2^-398", 211, 13082, 0.71},
      {100, 211, 40, 5, 62, 62, "2^-465", 211, 13082, 0.80},
      {120, 101, 15, 95, 35, 95, "2^-171", 101, 9595, 0.67},
      {120, 101, 20, 32, 35, 35, "2^-190", 101, 3535, 0.77},
      {120, 211, 35, 8, 62, 62, "2^-398", 211, 13082, 0.71},
      {120, 211, 40, 6, 62, 62, "2^-465", 211, 13082, 0.80},
      {128, 101, 15, 134, 35, 134, "2^-184", 101, 13534, 0.70},
      {128, 101, 20, 42, 35, 42, "2^-199", 101, 4242, 0.79},
      {128, 211, 35, 9, 62, 62, "2^-398", 211, 13082, 0.71},
      {128, 211, 40, 7, 62, 62, "2^-465", 211, 13082, 0.80},
      {256, 211, 35, 98, 62, 98, "2^-443", 211, 20678, 0.75},
      {256, 211, 40, 55, 62, 62, "2^-465", 211, 13082, 0.80},
  };
  return rows;
}

std::vector<ReferenceCheck> check_reference_rows(unsigned l, unsigned j) {
  std::vector<ReferenceCheck> out;
  for (const auto& ref : reference_parameter_rows()) {
    ReferenceCheck c;
    c.ref = ref;
    c.computed = param_report({{ref.security_bits, ref.p, ref.t, l}}, j)[0];
    unsigned j_eff = std::min<unsigned>(j, ref.t);
    uint64_t n = uint64_t{ref.m_c} * ref.p, k = uint64_t{ref.m_c - 1} * ref.p;
    c.log2_w_at_ref_m_c = lee_brickell_workfactor(n, k, ref.t, j_eff).log2_w;
    c.m_c_match = c.computed.m_c == ref.m_c;
    c.m_q_match = c.computed.m_q == ref.m_q;
    c.rate_match = std::fabs(c.computed.rate - ref.rate) <= 0.01 + 1e-12;
    out.push_back(c);
  }
  return out;
}

std::string param_rows_csv(const std::vector<ParamRow>& rows) {
  std::ostringstream os;
  os << "security,p,t,l,m_c,m_Q,m,rate,rows,cols\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.4f", r.rate);
    os << r.security_bits << ',' << r.p << ',' << r.t << ',' << r.l << ',' << r.m_c << ','
       << r.m_q << ',' << r.m << ',' << buf << ',' << r.pub_rows << ',' << r.pub_cols << "\n";
  }
  return os.str();
}

std::string param_rows_text(const std::vector<ParamRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%8s %5s %4s %3s %5s %5s %5s %7s %6s %7s\n", "security", "p",
                "t", "l", "m_c", "m_Q", "m", "rate", "rows", "cols");
  os << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%8u %5llu %4u %3u %5u %5u %5u %7.4f %6llu %7llu\n",
                  r.security_bits, static_cast<unsigned long long>(r.p), r.t, r.l, r.m_c, r.m_q,
                  r.m, r.rate, static_cast<unsigned long long>(r.pub_rows),
                  static_cast<unsigned long long>(r.pub_cols));
    os << buf;
  }
  return os.str();
}

std::string reference_check_text(const std::vector<ReferenceCheck>& checks) {
  std::ostringstream os;
  os << "published parameter table cross-check (l=3 costs, j=2)\n";
  char buf[200];
  std::snprintf(buf, sizeof buf, "%8s %5s %4s | %5s %5s %7s | %5s %5s %7s | %s\n", "security",
                "p", "t", "m_c", "m_Q", "rate", "m_c*", "m_Q*", "rate*", "status");
  os << buf;
  size_t deviations = 0;
  for (const auto& c : checks) {
    bool ok = c.m_c_match && c.m_q_match && c.rate_match;
    if (!ok) ++deviations;
    std::snprintf(buf, sizeof buf, "%8u %5llu %4u | %5u %5u %7.2f | %5u %5u %7.4f | %s\n",
                  c.ref.security_bits, static_cast<unsigned long long>(c.ref.p), c.ref.t,
                  c.ref.m_c, c.ref.m_q, c.ref.rate, c.computed.m_c, c.computed.m_q,
                  c.computed.rate, ok ? "match" : "DEVIATION");
    os << buf;
  }
  os << "(columns marked * are recomputed; unmarked are the published values)\n";
  if (deviations == 0) {
    os << "no deviations from the published table\n";
  } else {
    os << deviations << " deviation(s); cost exponent at the published m_c:\n";
    for (const auto& c : checks) {
      if (c.m_c_match && c.m_q_match && c.rate_match) continue;
      std::snprintf(buf, sizeof buf,
                    "  security=%u p=%llu t=%u: computed m_c=%u vs published %u, "
                    "log2 cost at published m_c = %.4f\n",
                    c.ref.security_bits, static_cast<unsigned long long>(c.ref.p), c.ref.t,
                    c.computed.m_c, c.ref.m_c, c.log2_w_at_ref_m_c);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace qcmc
