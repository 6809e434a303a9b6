#pragma once

// Set partitions of [d] = {1..d}, integer partitions, and the refinement
// lattice operations used throughout the library.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "csfkit/rational.hpp"

namespace csfkit {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the index of the constant term.
class IntPartition {
 public:
  IntPartition() = default;
  /// Accepts parts in any order; rejects nonpositive parts.
  explicit IntPartition(std::vector<int> parts);
  IntPartition(std::initializer_list<int> parts) : IntPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Multiset union of the parts.
  IntPartition joined(const IntPartition& other) const;
  /// Replaces one occurrence of `part` by `part + 1`.
  IntPartition with_part_grown(int part) const;
  IntPartition with_part_added(int part) const;
  bool contains_part(int part) const;

  /// "(2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const IntPartition&, const IntPartition&) = default;

 private:
  std::vector<int> parts_;
};

/// Key of a congruence class modulo an anchor element i: the type of the
/// partition together with the size of the block containing i.
struct CongruenceKey {
  IntPartition type;
  int marked_block_size = 0;

  std::string to_string() const;
  friend auto operator<=>(const CongruenceKey&, const CongruenceKey&) = default;
};

/// A partition of {1..d} stored as its restricted growth string: label[k] is
/// the index of the block holding element k+1, blocks numbered by their
/// minimum element. This is the canonical form; equality, ordering and hashing
/// all use it.
class SetPartition {
 public:
  /// The unique partition of the empty set.
  SetPartition() = default;

  /// Validates disjointness and coverage of {1..d}, then canonicalizes.
  static SetPartition from_blocks(int d, const std::vector<std::vector<int>>& blocks);
  /// Accepts any labeling (not necessarily a growth string) and canonicalizes.
  static SetPartition from_labels(const std::vector<int>& labels);
  static SetPartition finest(int d);
  static SetPartition coarsest(int d);
  /// Parses "13|2" (single-digit elements) or "1,3|2,10" (comma separated).
  static SetPartition parse(std::string_view text);

  int ground_size() const noexcept { return static_cast<int>(labels_.size()); }
  int block_count() const noexcept { return blocks_; }
  /// Block index (0-based, by minimum) of element i in 1..d.
  int block_index(int element) const;
  const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }
  std::vector<std::vector<int>> blocks() const;
  /// Bit (k-1) of mask b is set iff element k lies in block b.
  std::vector<std::uint32_t> block_masks() const;
  std::vector<int> block_sizes() const;

  /// 4 bits per element; unique for d <= 16.
  std::uint64_t packed() const noexcept;

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

 private:
  explicit SetPartition(std::vector<std::uint8_t> labels);

  std::vector<std::uint8_t> labels_;
  int blocks_ = 0;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.packed() ^ (static_cast<std::uint64_t>(p.ground_size()) << 60));
  }
};

/// Every partition of [d] exactly once, in lexicographic growth-string order.
std::vector<SetPartition> enumerate_partitions(int d);

IntPartition type_of(const SetPartition& pi);
int block_size_containing(const SetPartition& pi, int element);

/// Coarsest common refinement.
SetPartition meet(const SetPartition& pi, const SetPartition& sigma);
/// True iff pi <= sigma, i.e. every block of pi lies inside a block of sigma.
bool is_refinement(const SetPartition& pi, const SetPartition& sigma);
/// Möbius function of the partition lattice on the interval [pi, sigma].
Rational mobius(const SetPartition& pi, const SetPartition& sigma);

/// pi/B: append the block `block` of new elements d+1..d+|B|.
SetPartition add_block(const SetPartition& pi, const std::vector<int>& block);
/// pi +_i (d+1): put the new element d+1 into the block holding i.
SetPartition insert_into_block_of(const SetPartition& pi, int element);
/// Removes element d (the largest) from its block.
SetPartition remove_last_element(const SetPartition& pi);
/// Relabels elements by `perm`, where perm[k-1] is the image of k.
SetPartition permute(const SetPartition& pi, const std::vector<int>& perm);
/// pi o (a, b): swap the elements a and b.
SetPartition apply_transposition(const SetPartition& pi, int a, int b);

CongruenceKey congruence_key(const SetPartition& pi, int element);

}  // namespace csfkit
