#include "lattice.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"

namespace csfkit::detail {
namespace {

long long signed_factorial(int n) {
  // (-1)^{n-1} (n-1)!
  long long f = 1;
  for (int k = 2; k < n; ++k) f *= k;
  return (n - 1) % 2 == 0 ? f : -f;
}

}  // namespace

PartitionTable::PartitionTable(int d) : d_(d) {
  if (d == 0) {
    partitions_.push_back(SetPartition());
  } else {
    partitions_ = enumerate_partitions(d);
  }
  index_.reserve(partitions_.size());
  for (std::size_t k = 0; k < partitions_.size(); ++k) index_.emplace(partitions_[k].packed(), static_cast<int>(k));

  masks_.reserve(partitions_.size());
  for (const auto& p : partitions_) masks_.push_back(p.block_masks());

  // The upper interval [pi, 1] is isomorphic to the lattice of partitions of
  // the blocks of pi.
  std::vector<std::vector<SetPartition>> block_lattices(static_cast<std::size_t>(d + 1));
  coarsenings_.resize(partitions_.size());
  for (std::size_t k = 0; k < partitions_.size(); ++k) {
    const SetPartition& pi = partitions_[k];
    const int blocks = pi.block_count();
    if (blocks == 0) {
      coarsenings_[k].push_back({static_cast<int>(k), 1});
      continue;
    }
    auto& lattice = block_lattices[static_cast<std::size_t>(blocks)];
    if (lattice.empty()) lattice = enumerate_partitions(blocks);
    coarsenings_[k].reserve(lattice.size());
    std::vector<int> label(static_cast<std::size_t>(d));
    for (const SetPartition& merge : lattice) {
      for (int x = 0; x < d; ++x) {
        label[static_cast<std::size_t>(x)] = merge.labels()[pi.labels()[static_cast<std::size_t>(x)]];
      }
      long long mu = 1;
      for (int size : merge.block_sizes()) mu *= signed_factorial(size);
      coarsenings_[k].push_back({index_of(SetPartition::from_labels(label)), mu});
    }
  }

  mobius_bottom_.assign(partitions_.size(), 1);
  for (std::size_t k = 0; k < partitions_.size(); ++k) {
    long long mu = 1;
    for (int size : partitions_[k].block_sizes()) mu *= signed_factorial(size);
    mobius_bottom_[k] = mu;
  }
}

int PartitionTable::index_of(const SetPartition& pi) const {
  if (pi.ground_size() != d_) throw DomainError("partition of the wrong ground set for this table");
  auto it = index_.find(pi.packed());
  if (it == index_.end()) throw InternalError("partition missing from lattice table");
  return it->second;
}

bool PartitionTable::meet_is_finest(int a, int b) const {
  for (std::uint32_t x : masks(a))
    for (std::uint32_t y : masks(b))
      if (__builtin_popcount(x & y) > 1) return false;
  return true;
}

const PartitionTable& partition_table(int d) {
  static std::mutex mutex;
  static std::array<std::unique_ptr<PartitionTable>, kHardDegreeCeiling + 1> tables;
  if (d < 0 || d > kHardDegreeCeiling) throw CapacityError("partition table degree out of range");
  std::lock_guard lock(mutex);
  auto& slot = tables[static_cast<std::size_t>(d)];
  if (!slot) slot = std::make_unique<PartitionTable>(d);
  return *slot;
}

}  // namespace csfkit::detail
