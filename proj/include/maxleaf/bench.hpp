#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxleaf/tree.hpp"

namespace maxleaf {

/// Doubling ladder m = 2^first .. 2^last on random connected graphs with
/// n = m / 4, so density stays fixed while m grows.
struct BenchOptions {
  unsigned first_exponent = 16;
  unsigned last_exponent = 21;
  unsigned runs = 5;  ///< timed runs per rung, after one warmup
  std::uint64_t seed = 0;
  StartPolicy policy = {};
};

struct BenchRow {
  std::size_t m = 0;
  std::size_t n = 0;
  double median_ms = 0.0;
  std::optional<double> ratio;  ///< median_ms / previous rung's median_ms
  std::uint64_t touches = 0;
  std::size_t leaves = 0;
};

std::vector<BenchRow> run_bench(const BenchOptions& options);

/// "m,n,median_ms,ratio" header plus one row per rung; the first rung has an
/// empty ratio.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace maxleaf
