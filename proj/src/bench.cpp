#include "maxleaf/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "maxleaf/generate.hpp"

namespace maxleaf {

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.first_exponent > options.last_exponent || options.first_exponent < 3 ||
      options.last_exponent > 30) {
    throw std::invalid_argument("bench ladder needs 3 <= start <= stop <= 30");
  }
  if (options.runs == 0) throw std::invalid_argument("bench needs at least one timed run");

  std::vector<BenchRow> rows;
  for (auto e = options.first_exponent; e <= options.last_exponent; ++e) {
    BenchRow row;
    row.m = std::size_t{1} << e;
    row.n = row.m / 4;
    const auto g = make_random_connected(row.n, row.m, options.seed + e);

    const auto warm = solve(g, options.policy);
    row.touches = warm.touches;
    row.leaves = leaf_count(warm.tree);

    std::vector<double> times;
    for (unsigned r = 0; r < options.runs; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto s = solve(g, options.policy);
      const auto t1 = std::chrono::steady_clock::now();
      if (leaf_count(s.tree) != row.leaves) throw std::logic_error("nondeterministic solve");
      times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    row.median_ms = times[times.size() / 2];
    if (!rows.empty()) row.ratio = row.median_ms / rows.back().median_ms;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "m,n,median_ms,ratio\n";
  char buf[96];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%.3f,", row.m, row.n, row.median_ms);
    out += buf;
    if (row.ratio) {
      std::snprintf(buf, sizeof buf, "%.3f", *row.ratio);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace maxleaf
