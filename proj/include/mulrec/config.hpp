#pragma once

#include <cstdint>

namespace mulrec {

// Resource caps and numeric settings shared across the library.
// Every cap fails loudly (resource_limit_error); nothing truncates silently.
struct RunConfig {
  long precision_bits = 128;       // starting precision for real-valued colorings/scans
  long precision_max_bits = 4096;  // escalation ceiling before a color is flagged ambiguous
  unsigned long factorial_cap = 10000;  // largest n for which n! may be computed
  int clique_level_cap = 3;             // largest clique level the builder will attempt
  std::int64_t window_cap = 1 << 22;    // max vertices in a window graph
  std::int64_t enum_cap = 2'000'000'000;  // max witness-enumeration iterations per window
  std::int64_t sieve_cap = 1 << 27;       // max smallest-prime-factor sieve size
  int workers = 0;  // OpenMP thread count; 0 = runtime default
};

inline const RunConfig& default_config() {
  static const RunConfig cfg{};
  return cfg;
}

}  // namespace mulrec
