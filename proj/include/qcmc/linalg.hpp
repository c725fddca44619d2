#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcmc/field.hpp"

namespace qcmc {

// row vector over GF(2^l); raw bits plus one shared degree
struct Vec {
  std::vector<uint16_t> v;
  uint8_t deg = 1;

  Vec() = default;
  Vec(size_t n, unsigned degree) : v(n, 0), deg(static_cast<uint8_t>(degree)) {}

  size_t size() const { return v.size(); }
  FieldElem at(size_t i) const { return FieldElem{v[i], deg}; }
  bool operator==(const Vec&) const = default;
};

Vec vec_add(const Vec& a, const Vec& b);

// dense row-major matrix over GF(2^l)
class Mat {
public:
  Mat() = default;
  Mat(size_t rows, size_t cols, unsigned deg)
      : rows_(rows), cols_(cols), deg_(static_cast<uint8_t>(deg)), a_(rows * cols, 0) {
    if (rows == 0 || cols == 0) fail_param("matrix dimensions must be positive");
  }

  static Mat identity(size_t n, unsigned deg);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  unsigned deg() const { return deg_; }

  uint16_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint16_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Vec row(size_t r) const;
  Vec col(size_t c) const;

  bool operator==(const Mat&) const = default;

private:
  size_t rows_ = 0, cols_ = 0;
  uint8_t deg_ = 1;
  std::vector<uint16_t> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat select_columns(const Mat& a, const std::vector<uint32_t>& idx);

// y = x * A (row vector times matrix)
Vec vec_mat(const Vec& x, const Mat& a);
// y = A * x^T, returned as a plain vector of length rows
Vec mat_vec(const Mat& a, const Vec& x);

size_t rank(const Mat& a);
Mat inverse(const Mat& a);  // rank error when singular

// permutation on [0, n): i maps to images[i]; as a matrix P[i][j] = 1 iff j = images[i]
struct Perm {
  std::vector<uint32_t> images;

  static Perm identity(size_t n);
  size_t size() const { return images.size(); }
  bool is_identity() const;
  bool operator==(const Perm&) const = default;
};

Perm perm_inverse(const Perm& p);
Perm perm_compose(const Perm& p, const Perm& q);  // matrix product P_p * P_q
Mat perm_expand(const Perm& p, unsigned deg);
bool perm_valid(const Perm& p);

Mat apply_cols(const Mat& a, const Perm& p);  // A * P: column i lands at images[i]
Mat apply_rows(const Perm& p, const Mat& a);  // P * A: result row i = A row images[i]
Vec apply_vec(const Vec& x, const Perm& p);   // x * P
Vec apply_vec_inv(const Vec& x, const Perm& p);  // x * P^{-1}

// row-reduce a full-row-rank matrix to [I | *]; returns the column permutation
// applied (identity when the pivot columns are already the leading block)
std::pair<Mat, Perm> systematic_form(const Mat& m);

// any z with A z^T = y under the leftmost-pivot, free-variables-zero rule
Vec solve_right(const Mat& a, const Vec& y);

Mat sample_scrambler(size_t k, unsigned deg, Rng& rng);
Perm sample_permutation(size_t n, Rng& rng);
Mat sample_matrix(size_t rows, size_t cols, unsigned deg, Rng& rng);

}  // namespace qcmc
