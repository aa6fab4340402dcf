#include "pgv/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace pgv {

namespace {

unsigned threads_from_environment() {
  const char* raw = std::getenv("PGV_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    std::size_t used = 0;
    const long value = std::stol(raw, &used);
    if (used != std::string(raw).size() || value <= 0) return 0;
    return static_cast<unsigned>(std::min<long>(value, 1024));
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (vertex_budget == 0) throw std::invalid_argument("vertex_budget must be positive");
  if (aut_vertex_limit == 0) throw std::invalid_argument("aut_vertex_limit must be positive");
  if (enumeration_bound == 0) throw std::invalid_argument("enumeration_bound must be positive");
  if (simplicity_budget == 0) throw std::invalid_argument("simplicity_budget must be positive");
}

unsigned RunConfig::effective_threads() const {
  if (threads != 0) return threads;
  if (const unsigned env = threads_from_environment(); env != 0) return env;
  return std::max(1u, std::thread::hardware_concurrency());
}

RunConfig default_config() {
  RunConfig config;
  config.threads = threads_from_environment();
  return config;
}

}  // namespace pgv
