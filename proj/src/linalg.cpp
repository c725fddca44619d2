#include "qcmc/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qcmc {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size() || a.deg != b.deg) fail_param("vector shape mismatch in add");
  Vec r(a.size(), a.deg);
  for (size_t i = 0; i < a.size(); ++i) r.v[i] = a.v[i] ^ b.v[i];
  return r;
}

Mat Mat::identity(size_t n, unsigned deg) {
  Mat m(n, n, deg);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Mat::row(size_t r) const {
  Vec x(cols_, deg_);
  for (size_t j = 0; j < cols_; ++j) x.v[j] = at(r, j);
  return x;
}

Vec Mat::col(size_t c) const {
  Vec x(rows_, deg_);
  for (size_t i = 0; i < rows_; ++i) x.v[i] = at(i, c);
  return x;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows() || a.deg() != b.deg()) fail_param("matrix shape mismatch in multiply");
  const Field& f = Field::get(a.deg());
  Mat r(a.rows(), b.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      uint16_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        uint16_t bkj = b.at(k, j);
        if (bkj) r.at(i, j) ^= f.mul(aik, bkj);
      }
    }
  }
  return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.deg() != b.deg())
    fail_param("matrix shape mismatch in add");
  Mat r(a.rows(), a.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) ^ b.at(i, j);
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.cols(), a.rows(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.deg() != b.deg()) fail_param("matrix shape mismatch in hstack");
  Mat r(a.rows(), a.cols() + b.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.deg() != b.deg()) fail_param("matrix shape mismatch in vstack");
  Mat r(a.rows() + b.rows(), a.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

Mat select_columns(const Mat& a, const std::vector<uint32_t>& idx) {
  if (idx.empty()) fail_param("empty column selection");
  Mat r(a.rows(), idx.size(), a.deg());
  for (size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= a.cols()) fail_param("column index out of range");
    for (size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, idx[j]);
  }
  return r;
}

Vec vec_mat(const Vec& x, const Mat& a) {
  if (x.size() != a.rows() || x.deg != a.deg()) fail_param("shape mismatch in vector-matrix multiply");
  const Field& f = Field::get(a.deg());
  Vec r(a.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i) {
    uint16_t xi = x.v[i];
    if (xi == 0) continue;
    for (size_t j = 0; j < a.cols(); ++j) {
      uint16_t aij = a.at(i, j);
      if (aij) r.v[j] ^= f.mul(xi, aij);
    }
  }
  return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  if (x.size() != a.cols() || x.deg != a.deg()) fail_param("shape mismatch in matrix-vector multiply");
  const Field& f = Field::get(a.deg());
  Vec r(a.rows(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i) {
    uint16_t acc = 0;
    for (size_t j = 0; j < a.cols(); ++j) {
      uint16_t aij = a.at(i, j);
      if (aij && x.v[j]) acc ^= f.mul(aij, x.v[j]);
    }
    r.v[i] = acc;
  }
  return r;
}

namespace {

// reduced row echelon form over the first active_cols columns; row operations
// span the full width so augmented columns ride along. pivot rule: leftmost
// nonzero column, topmost nonzero row. returns the pivot column per pivot row.
std::vector<size_t> rref_in_place(Mat& m, size_t active_cols) {
  const Field& f = Field::get(m.deg());
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < active_cols && r < m.rows(); ++c) {
    size_t sel = m.rows();
    for (size_t i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows()) continue;
    if (sel != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    uint16_t piv = m.at(r, c);
    if (piv != 1) {
      uint16_t pinv = f.inv(piv);
      for (size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), pinv);
    }
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      uint16_t q = m.at(i, c);
      if (q == 0) continue;
      for (size_t j = 0; j < m.cols(); ++j)
        if (m.at(r, j)) m.at(i, j) ^= f.mul(q, m.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank(const Mat& a) {
  Mat m = a;
  return rref_in_place(m, m.cols()).size();
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) fail_param("inverse of non-square matrix");
  Mat aug = hstack(a, Mat::identity(a.rows(), a.deg()));
  auto pivots = rref_in_place(aug, a.cols());
  if (pivots.size() != a.rows()) fail_param("matrix is singular");
  Mat r(a.rows(), a.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = aug.at(i, a.cols() + j);
  return r;
}

Perm Perm::identity(size_t n) {
  Perm p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0u);
  return p;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images.size(); ++i)
    if (images[i] != i) return false;
  return true;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (uint32_t im : p.images) {
    if (im >= p.size() || seen[im]) return false;
    seen[im] = true;
  }
  return true;
}

Perm perm_inverse(const Perm& p) {
  Perm r;
  r.images.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) r.images[p.images[i]] = static_cast<uint32_t>(i);
  return r;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) fail_param("permutation size mismatch");
  Perm r;
  r.images.resize(p.size());
  for (size_t i = 0; i < p.size(); ++i) r.images[i] = q.images[p.images[i]];
  return r;
}

Mat perm_expand(const Perm& p, unsigned deg) {
  Mat m(p.size(), p.size(), deg);
  for (size_t i = 0; i < p.size(); ++i) m.at(i, p.images[i]) = 1;
  return m;
}

Mat apply_cols(const Mat& a, const Perm& p) {
  if (a.cols() != p.size()) fail_param("permutation size mismatch");
  Mat r(a.rows(), a.cols(), a.deg());
  for (size_t j = 0; j < a.cols(); ++j)
    for (size_t i = 0; i < a.rows(); ++i) r.at(i, p.images[j]) = a.at(i, j);
  return r;
}

Mat apply_rows(const Perm& p, const Mat& a) {
  if (a.rows() != p.size()) fail_param("permutation size mismatch");
  Mat r(a.rows(), a.cols(), a.deg());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(p.images[i], j);
  return r;
}

Vec apply_vec(const Vec& x, const Perm& p) {
  if (x.size() != p.size()) fail_param("permutation size mismatch");
  Vec r(x.size(), x.deg);
  for (size_t i = 0; i < x.size(); ++i) r.v[p.images[i]] = x.v[i];
  return r;
}

Vec apply_vec_inv(const Vec& x, const Perm& p) {
  if (x.size() != p.size()) fail_param("permutation size mismatch");
  Vec r(x.size(), x.deg);
  for (size_t i = 0; i < x.size(); ++i) r.v[i] = x.v[p.images[i]];
  return r;
}

std::pair<Mat, Perm> systematic_form(const Mat& m) {
  Mat r = m;
  auto pivots = rref_in_place(r, r.cols());
  if (pivots.size() != m.rows()) fail_param("matrix is not full row rank");
  bool leading = true;
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] != i) leading = false;
  if (leading) return {r, Perm::identity(m.cols())};
  Perm p;
  p.images.assign(m.cols(), UINT32_MAX);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t i = 0; i < pivots.size(); ++i) {
    p.images[pivots[i]] = static_cast<uint32_t>(i);
    is_pivot[pivots[i]] = true;
  }
  uint32_t next = static_cast<uint32_t>(pivots.size());
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) p.images[c] = next++;
  return {apply_cols(r, p), p};
}

Vec solve_right(const Mat& a, const Vec& y) {
  if (y.size() != a.rows() || y.deg != a.deg()) fail_param("shape mismatch in solve");
  Mat aug(a.rows(), a.cols() + 1, a.deg());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = y.v[i];
  }
  auto pivots = rref_in_place(aug, a.cols());
  for (size_t i = pivots.size(); i < a.rows(); ++i)
    if (aug.at(i, a.cols()) != 0) fail_crypto("inconsistent linear system");
  Vec z(a.cols(), a.deg());
  for (size_t i = 0; i < pivots.size(); ++i) z.v[pivots[i]] = aug.at(i, a.cols());
  return z;
}

Mat sample_matrix(size_t rows, size_t cols, unsigned deg, Rng& rng) {
  Mat m(rows, cols, deg);
  uint64_t q = uint64_t{1} << deg;
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<uint16_t>(rng.below(q));
  return m;
}

Mat sample_scrambler(size_t k, unsigned deg, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat m = sample_matrix(k, k, deg, rng);
    if (rank(m) == k) return m;
  }
  fail_bound("scrambler sampling retry budget exhausted");
}

Perm sample_permutation(size_t n, Rng& rng) {
  Perm p = Perm::identity(n);
  rng.shuffle(p.images);
  return p;
}

}  // namespace qcmc
