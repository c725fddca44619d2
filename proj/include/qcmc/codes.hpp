#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcmc/linalg.hpp"

namespace qcmc {

// linear [n, k] code over GF(2^l), described by a generator and/or parity matrix
struct LinearCode {
  std::optional<Mat> generator;  // k x n
  std::optional<Mat> parity;     // (n-k) x n
  size_t n = 0, k = 0;
  uint8_t deg = 1;

  static LinearCode from_generator(Mat g);
  static LinearCode from_parity(Mat h);
};

size_t hamming_weight(const Vec& v);
size_t hamming_distance(const Vec& a, const Vec& b);

// exact minimum nonzero-codeword weight by message-space enumeration
size_t min_distance_bruteforce(const LinearCode& code, uint64_t max_codewords = uint64_t{1} << 20);

size_t error_capacity(size_t d);  // floor((d - 1) / 2)

// full-rank dual basis: returns D with M * D^T = 0, rank(D) = cols - rows
Mat parity_from_generator(const Mat& g);
Mat generator_from_parity(const Mat& h);

// r x 2^r binary matrix, column i = i in binary, most significant bit in row 0
Mat hadamard_generator(unsigned r);

// H = V * D with V_{j,i} = points[i]^j (j = 0..t-1) and D = diag(1/g(points[i]));
// poly holds coefficients of g ascending by degree, degree t = poly.size() - 1
Mat goppa_parity(const std::vector<uint16_t>& poly, const std::vector<uint16_t>& points,
                 unsigned deg);

// bounded-distance decoder: exhaustive syndrome table over all error patterns
// of weight <= t
class SyndromeDecoder {
public:
  SyndromeDecoder(Mat parity, unsigned t, uint64_t table_bound = uint64_t{1} << 22);

  // splits received word x into (codeword, error) with x = codeword + error
  std::pair<Vec, Vec> decode(const Vec& received) const;

  unsigned capacity() const { return t_; }
  size_t table_size() const { return table_.size(); }
  // true when no two distinct weight-<=t patterns shared a syndrome during
  // build, i.e. the code corrects any t errors (d >= 2t + 1)
  bool unambiguous() const { return unambiguous_; }
  const Mat& parity() const { return h_; }

private:
  Mat h_;
  unsigned t_;
  bool unambiguous_ = true;
  std::map<std::vector<uint16_t>, std::vector<uint16_t>> table_;
};

}  // namespace qcmc
