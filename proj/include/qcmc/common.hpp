#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcmc {

// error categories; the C API and CLI exit codes map 1:1 onto these
enum class errc {
  param,   // precondition violation: bad dimensions, weights, non-prime p, ...
  crypto,  // decode failure, invalid ciphertext, inconsistent system during decrypt
  bound,   // configured resource bound exceeded (tables, sweeps, retry budgets)
  io,      // file not found / malformed input file
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail_param(const std::string& msg) { throw error(errc::param, msg); }
[[noreturn]] inline void fail_crypto(const std::string& msg) { throw error(errc::crypto, msg); }
[[noreturn]] inline void fail_bound(const std::string& msg) { throw error(errc::bound, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw error(errc::io, msg); }

// seeded generator: mt19937_64 with unbiased rejection draws, so the stream of
// values below a bound is identical on every platform for a given seed
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // uniform in [0, bound)
  uint64_t below(uint64_t bound) {
    if (bound == 0) fail_param("rng bound must be positive");
    if (bound == 1) return 0;
    uint64_t lim = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
    uint64_t r;
    do {
      r = gen_();
    } while (r > lim);
    return r % bound;
  }

  // fisher-yates
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, n), ascending
  std::vector<uint32_t> sample_distinct(uint32_t k, uint32_t n);

private:
  std::mt19937_64 gen_;
};

bool is_prime(uint64_t n);

}  // namespace qcmc
