#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

struct VerifyOptions {
  /// Upper bound on n for exhaustive sweeps; each check also keeps its own
  /// natural limit (e.g. n <= 7 for buffered machines).
  unsigned nmax = 8;
  std::size_t order = 30;
  unsigned jobs = 0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// perm-core, rsk, enumeration, series, basis, machines.
const std::vector<std::string>& verify_suites();

/// Runs every invariant check of `suite` ("all" for every suite), reporting
/// each result through `on_result` as soon as it is known.
std::vector<CheckResult> run_verification(std::string_view suite, const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result = {});

} // namespace permlab
