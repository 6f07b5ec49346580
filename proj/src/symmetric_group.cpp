#include "permlab/symmetric_group.hpp"

#include <stdexcept>
#include <thread>

namespace permlab {

unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::uint64_t factorial_u64(unsigned n) {
  if (n > 20) throw std::overflow_error("n! does not fit in 64 bits for n > 20");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<int> unrank_lexicographic(unsigned n, std::uint64_t rank) {
  std::vector<int> pool(n);
  for (unsigned i = 0; i < n; ++i) pool[i] = static_cast<int>(i + 1);
  std::vector<int> out;
  out.reserve(n);
  for (unsigned i = n; i > 0; --i) {
    const std::uint64_t block = factorial_u64(i - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

std::uint64_t rank_lexicographic(std::span<const int> perm) {
  const auto n = static_cast<unsigned>(perm.size());
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (unsigned j = i + 1; j < n; ++j) smaller_after += perm[j] < perm[i];
    rank += smaller_after * factorial_u64(n - 1 - i);
  }
  return rank;
}

} // namespace permlab
