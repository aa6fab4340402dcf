#pragma once

#include <cstddef>

namespace pgv {

struct RunConfig {
  std::size_t vertex_budget = 500000;
  std::size_t aut_vertex_limit = 10000;
  std::size_t enumeration_bound = 1000000;
  // Groups up to this order get the exhaustive normal-closure simplicity sweep.
  std::size_t simplicity_budget = 10000;
  unsigned threads = 0;  // 0 = hardware concurrency, or PGV_THREADS when set
  bool include_timings = false;

  // Throws std::invalid_argument when a budget is zero.
  void validate() const;
  // Effective worker count after applying PGV_THREADS and hardware limits.
  unsigned effective_threads() const;
};

// Reads PGV_THREADS from the environment into a default config.
RunConfig default_config();

}  // namespace pgv
