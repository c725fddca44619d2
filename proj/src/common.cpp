#include "qcmc/common.hpp"

#include <algorithm>

namespace qcmc {

std::vector<uint32_t> Rng::sample_distinct(uint32_t k, uint32_t n) {
  if (k > n) fail_param("cannot sample more distinct values than the range holds");
  // floyd's algorithm keeps the draw count equal to k
  std::vector<uint32_t> out;
  std::vector<bool> seen(n, false);
  for (uint32_t i = n - k; i < n; ++i) {
    uint32_t v = static_cast<uint32_t>(below(i + 1));
    if (seen[v]) v = i;
    seen[v] = true;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace qcmc
