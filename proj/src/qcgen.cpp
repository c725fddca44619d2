#include "qcmc/qcgen.hpp"

#include <algorithm>

#include "qcmc/autgroup.hpp"

namespace qcmc {

Mat StackSpec::stack() const {
  if (circulants.empty()) fail_param("stack spec has no circulant blocks");
  Mat s = circ_expand(circulants[0]);
  for (size_t i = 1; i < circulants.size(); ++i) s = vstack(s, circ_expand(circulants[i]));
  return s;
}

Mat StackSpec::generator() const {
  Mat s = stack();
  return hstack(Mat::identity(s.rows(), 1), s);
}

Mat ArraySpec::parity() const {
  if (circulants.empty()) fail_param("array spec has no circulant blocks");
  Mat h = Mat::identity(p, l);
  for (const auto& c : circulants) h = hstack(h, circ_expand(c));
  return h;
}

StackSpec generate_c(uint64_t p, unsigned m, unsigned t_r, Rng& rng) {
  if (!is_prime(p)) fail_param("p must be prime");
  if (!is_primitive_root(2, p)) fail_param("2 must be a primitive root modulo p");
  if (m < 2) fail_param("block count must be at least 2");
  if (t_r < 1 || t_r % 2 == 0) fail_param("per-circulant row weight must be odd");
  if (uint64_t{t_r} * t_r * m > p) fail_param("row weight above floor(sqrt(p/m))");

  StackSpec s;
  s.p = p;
  s.m = m;
  s.t_r = t_r;
  // pooled difference bookkeeping: a support element is admissible only if
  // every difference it forms inside its own block is new across all blocks,
  // which keeps any two stacked columns from overlapping twice
  std::vector<bool> used(p, false);
  std::vector<bool> diff_used(p, false);
  std::vector<bool> fresh(p, false);
  for (unsigned blk = 0; blk + 1 < m; ++blk) {
    std::vector<uint64_t> sup;
    for (unsigned pick = 0; pick < t_r; ++pick) {
      std::vector<uint64_t> cand;
      for (uint64_t x = 0; x < p; ++x) {
        if (used[x]) continue;
        bool ok = true;
        std::fill(fresh.begin(), fresh.end(), false);
        for (uint64_t sel : sup) {
          uint64_t d1 = (x + p - sel) % p, d2 = (sel + p - x) % p;
          if (diff_used[d1] || diff_used[d2] || fresh[d1] || fresh[d2]) {
            ok = false;
            break;
          }
          fresh[d1] = fresh[d2] = true;
        }
        if (ok) cand.push_back(x);
      }
      if (cand.empty()) fail_bound("support candidates exhausted; retry with a new seed");
      uint64_t chosen = cand[rng.below(cand.size())];
      for (uint64_t sel : sup) {
        diff_used[(chosen + p - sel) % p] = true;
        diff_used[(sel + p - chosen) % p] = true;
      }
      used[chosen] = true;
      sup.push_back(chosen);
    }
    Circulant c(p, 1);
    for (uint64_t sel : sup) c.first_row[sel] = 1;
    s.circulants.push_back(std::move(c));
  }
  return s;
}

StackReport check_stack_conditions(const StackSpec& s) {
  StackReport r;
  if (s.circulants.empty() || s.p == 0) return r;
  for (const auto& c : s.circulants)
    if (c.p() != s.p || c.deg != 1) return r;
  r.p_prime = is_prime(s.p);
  r.has_invertible = false;
  for (const auto& c : s.circulants)
    if (circ_is_invertible(c)) r.has_invertible = true;
  Mat st = s.stack();
  r.overlap_ok = true;
  for (size_t j1 = 0; j1 < st.cols() && r.overlap_ok; ++j1) {
    for (size_t j2 = j1 + 1; j2 < st.cols(); ++j2) {
      size_t common = 0;
      for (size_t i = 0; i < st.rows(); ++i)
        if (st.at(i, j1) && st.at(i, j2)) ++common;
      if (common > 1) {
        r.overlap_ok = false;
        break;
      }
    }
  }
  size_t t = 0;
  for (size_t j = 0; j < st.cols(); ++j) {
    size_t w = 0;
    for (size_t i = 0; i < st.rows(); ++i)
      if (st.at(i, j)) ++w;
    t = std::max(t, w);
  }
  r.column_weight = t;
  r.weight_ok = t * s.t_r <= s.p - 1;
  return r;
}

namespace {

bool is_cyclic_shift(const std::vector<uint16_t>& x, const std::vector<uint16_t>& y) {
  size_t p = x.size();
  for (size_t s = 0; s < p; ++s) {
    bool eq = true;
    for (size_t i = 0; i < p; ++i) {
      if (x[(i + s) % p] != y[i]) {
        eq = false;
        break;
      }
    }
    if (eq) return true;
  }
  return false;
}

Circulant from_first_column(const std::vector<uint16_t>& col, unsigned l) {
  Circulant c(col.size(), l);
  for (size_t i = 0; i < col.size(); ++i) c.first_row[(col.size() - i) % col.size()] = col[i];
  return c;
}

}  // namespace

ArraySpec generate_h(uint64_t p, unsigned m, unsigned l, Rng& rng) {
  if (!is_prime(p)) fail_param("p must be prime");
  if (m < 2) fail_param("block count must be at least 2");
  if (uint64_t{m} > p * p) fail_param("block count above the p^2 cap");
  if (l < 2 || l > kMaxDegree) fail_param("field degree must be at least 2 for a proper extension");

  uint64_t q = uint64_t{1} << l;
  ArraySpec s;
  s.p = p;
  s.m = m;
  s.l = l;
  s.a = static_cast<uint16_t>(1 + rng.below(q - 1));
  s.b = s.a;
  while (s.b == s.a) s.b = static_cast<uint16_t>(1 + rng.below(q - 1));

  std::vector<uint16_t> rest;
  for (uint64_t v = 0; v < q; ++v)
    if (v != s.a && v != s.b) rest.push_back(static_cast<uint16_t>(v));

  // first block: the marked pair once each, the remaining p-2 entries free of
  // it, then a random arrangement
  std::vector<uint16_t> col{s.a, s.b};
  for (uint64_t i = 2; i < p; ++i) col.push_back(rest[rng.below(rest.size())]);
  rng.shuffle(col);

  std::vector<std::vector<uint16_t>> accepted;
  std::vector<uint16_t> e0(p, 0);
  e0[0] = 1;
  accepted.push_back(e0);  // identity block of the parity matrix
  accepted.push_back(col);
  s.circulants.push_back(from_first_column(col, l));

  for (unsigned blk = 2; blk < m; ++blk) {
    bool placed = false;
    for (int tries = 0; tries < 1000 && !placed; ++tries) {
      std::vector<uint16_t> c(p);
      for (uint64_t i = 0; i < p; ++i) c[i] = static_cast<uint16_t>(rng.below(q));
      bool has_a = false, has_b = false, binary_only = true, constant = true;
      for (uint16_t v : c) {
        has_a |= v == s.a;
        has_b |= v == s.b;
        binary_only &= v <= 1;
        constant &= v == c[0];
      }
      if ((has_a && has_b) || binary_only || constant) continue;
      bool collides = false;
      for (const auto& y : accepted) {
        if (is_cyclic_shift(c, y)) {
          collides = true;
          break;
        }
      }
      if (collides) continue;
      accepted.push_back(c);
      s.circulants.push_back(from_first_column(c, l));
      placed = true;
    }
    if (!placed) fail_bound("block rejection budget exhausted; retry with a new seed");
  }
  return s;
}

ArrayReport check_array_conditions(const ArraySpec& s) {
  ArrayReport r;
  if (s.circulants.empty() || s.p == 0 || s.l < 1 || s.l > kMaxDegree) return r;
  uint64_t q = uint64_t{1} << s.l;
  r.params_ok = is_prime(s.p) && s.m >= 2 && uint64_t{s.m} <= s.p * s.p && s.l >= 2 &&
                s.a != 0 && s.b != 0 && s.a != s.b && s.a < q && s.b < q;
  r.dims_ok = s.circulants.size() + 1 == s.m;
  for (const auto& c : s.circulants)
    if (c.p() != s.p || c.deg != s.l) r.dims_ok = false;
  if (!r.dims_ok) return r;

  // every column of a circulant carries the same entry multiset as its first
  // row, so per-column facts reduce to first-row facts
  r.extension_ok = true;
  for (const auto& c : s.circulants) {
    bool has_ext = false;
    for (uint16_t v : c.first_row) has_ext |= v > 1;
    r.extension_ok &= has_ext;
  }

  size_t ca = 0, cb = 0;
  for (uint16_t v : s.circulants[0].first_row) {
    ca += v == s.a;
    cb += v == s.b;
  }
  r.marked_ok = ca == 1 && cb == 1;
  for (size_t i = 1; i < s.circulants.size(); ++i) {
    bool has_a = false, has_b = false;
    for (uint16_t v : s.circulants[i].first_row) {
      has_a |= v == s.a;
      has_b |= v == s.b;
    }
    if (has_a && has_b) r.marked_ok = false;
  }

  Mat h = s.parity();
  r.distinct_ok = true;
  for (size_t j1 = 0; j1 < h.cols() && r.distinct_ok; ++j1) {
    for (size_t j2 = j1 + 1; j2 < h.cols(); ++j2) {
      bool same = true;
      for (size_t i = 0; i < h.rows(); ++i) {
        if (h.at(i, j1) != h.at(i, j2)) {
          same = false;
          break;
        }
      }
      if (same) {
        r.distinct_ok = false;
        break;
      }
    }
  }

  if (s.p <= 7 && r.distinct_ok) {
    AutReport rep = enumerate_t_group(s);
    r.not_two_transitive_direct = !rep.two_transitive;
  }
  return r;
}

}  // namespace qcmc
