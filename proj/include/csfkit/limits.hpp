#pragma once

#include <cstddef>

namespace csfkit {

// Soft size caps. The environment variable CSFKIT_MAX_D, when set to a
// positive integer, replaces every degree cap below.

/// Largest ground set accepted by the partition enumerator (default 10).
int max_partition_degree();

/// Largest degree for NCSym work that touches the e-basis (default 8).
int max_ncsym_e_degree();

/// Largest degree for NCSym work confined to the m- and p-bases (default 9).
int max_ncsym_mp_degree();

/// Largest edge count for 2^|E| subset expansions (default 24).
std::size_t max_subset_edges();

/// Hard ceiling imposed by the packed partition encoding.
inline constexpr int kHardDegreeCeiling = 16;

}  // namespace csfkit
