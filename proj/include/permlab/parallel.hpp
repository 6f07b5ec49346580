#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace permlab {

/// Worker count used when a sweep is asked for 0 jobs.
unsigned default_jobs();

/// Splits [0, count) into `jobs` contiguous chunks and runs
/// fn(worker, first, last) for each, one thread per chunk. Returns the number
/// of workers used.
template <class Fn>
unsigned parallel_chunks(std::uint64_t count, unsigned jobs, Fn&& fn) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, count)));
  if (jobs == 1) {
    fn(0u, std::uint64_t{0}, count);
    return 1;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t first = count * w / jobs;
    const std::uint64_t last = count * (w + 1) / jobs;
    workers.emplace_back([&fn, w, first, last] { fn(w, first, last); });
  }
  for (auto& t : workers) t.join();
  return jobs;
}

} // namespace permlab
