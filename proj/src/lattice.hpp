#pragma once

// Per-degree tables over the partition lattice: a dense index for every
// partition of [d], the upper intervals [pi, 1] with their Möbius values, and
// mu(0, pi). These back every NCSym change of basis.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "csfkit/partitions.hpp"

namespace csfkit::detail {

struct Coarsening {
  int index;          // tau >= pi
  long long mobius;   // mu(pi, tau)
};

class PartitionTable {
 public:
  explicit PartitionTable(int d);

  int degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return partitions_.size(); }
  const std::vector<SetPartition>& partitions() const noexcept { return partitions_; }
  const SetPartition& at(int index) const { return partitions_[static_cast<std::size_t>(index)]; }
  int index_of(const SetPartition& pi) const;

  /// Every tau >= pi (pi itself included) with mu(pi, tau).
  const std::vector<Coarsening>& coarsenings(int index) const {
    return coarsenings_[static_cast<std::size_t>(index)];
  }
  long long mobius_from_bottom(int index) const { return mobius_bottom_[static_cast<std::size_t>(index)]; }
  const std::vector<std::uint32_t>& masks(int index) const { return masks_[static_cast<std::size_t>(index)]; }
  /// True iff the meet of the two partitions is the finest partition.
  bool meet_is_finest(int a, int b) const;

 private:
  int d_;
  std::vector<SetPartition> partitions_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::vector<Coarsening>> coarsenings_;
  std::vector<long long> mobius_bottom_;
  std::vector<std::vector<std::uint32_t>> masks_;
};

/// Built on first use and shared read-only afterwards.
const PartitionTable& partition_table(int d);

}  // namespace csfkit::detail
