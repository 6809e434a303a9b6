#include "csfkit/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

namespace csfkit {
namespace {

std::optional<int> env_override() {
  const char* raw = std::getenv("CSFKIT_MAX_D");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    int v = std::stoi(raw);
    if (v <= 0) return std::nullopt;
    return std::min(v, kHardDegreeCeiling);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace

int max_partition_degree() { return env_override().value_or(10); }
int max_ncsym_e_degree() { return env_override().value_or(8); }
int max_ncsym_mp_degree() { return env_override().value_or(9); }
std::size_t max_subset_edges() { return 24; }

}  // namespace csfkit
