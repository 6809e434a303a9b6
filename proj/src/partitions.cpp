#include "csfkit/partitions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "csfkit/errors.hpp"
#include "csfkit/limits.hpp"

namespace csfkit {

// ---------------------------------------------------------------------------
// IntPartition

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("integer partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IntPartition IntPartition::joined(const IntPartition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  IntPartition out;
  out.parts_ = std::move(merged);
  return out;
}

IntPartition IntPartition::with_part_grown(int part) const {
  auto it = std::find(parts_.begin(), parts_.end(), part);
  if (it == parts_.end()) throw DomainError("partition has no part " + std::to_string(part));
  std::vector<int> next = parts_;
  next[static_cast<std::size_t>(it - parts_.begin())] += 1;
  return IntPartition(std::move(next));
}

IntPartition IntPartition::with_part_added(int part) const {
  std::vector<int> next = parts_;
  next.push_back(part);
  return IntPartition(std::move(next));
}

bool IntPartition::contains_part(int part) const {
  return std::find(parts_.begin(), parts_.end(), part) != parts_.end();
}

std::string IntPartition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::string CongruenceKey::to_string() const {
  return "(" + type.to_string() + "," + std::to_string(marked_block_size) + ")";
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  int top = -1;
  for (auto l : labels_) top = std::max(top, static_cast<int>(l));
  blocks_ = top + 1;
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) > kHardDegreeCeiling) {
    throw CapacityError("set partitions are limited to 16 elements");
  }
  std::vector<int> renumber;
  std::vector<int> seen;
  std::vector<std::uint8_t> rgs;
  rgs.reserve(labels.size());
  for (int l : labels) {
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      seen.push_back(l);
      rgs.push_back(static_cast<std::uint8_t>(seen.size() - 1));
    } else {
      rgs.push_back(static_cast<std::uint8_t>(it - seen.begin()));
    }
  }
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::from_blocks(int d, const std::vector<std::vector<int>>& blocks) {
  if (d < 0) throw DomainError("negative ground set size");
  if (d > kHardDegreeCeiling) throw CapacityError("set partitions are limited to 16 elements");
  std::vector<int> label(static_cast<std::size_t>(d), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("set partition block is empty");
    for (int x : blocks[b]) {
      if (x < 1 || x > d) throw DomainError("element " + std::to_string(x) + " outside [1.." + std::to_string(d) + "]");
      if (label[static_cast<std::size_t>(x - 1)] != -1) {
        throw DomainError("element " + std::to_string(x) + " appears in two blocks");
      }
      label[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
    }
  }
  for (int k = 0; k < d; ++k) {
    if (label[static_cast<std::size_t>(k)] == -1) {
      throw DomainError("element " + std::to_string(k + 1) + " is not covered");
    }
  }
  return from_labels(label);
}

SetPartition SetPartition::finest(int d) {
  std::vector<int> label(static_cast<std::size_t>(d));
  std::iota(label.begin(), label.end(), 0);
  return from_labels(label);
}

SetPartition SetPartition::coarsest(int d) {
  return from_labels(std::vector<int>(static_cast<std::size_t>(d), 0));
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  int count = 0;
  std::size_t start = 0;
  if (text.empty()) return SetPartition();
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    std::string_view token = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    std::vector<int> block;
    if (token.find(',') != std::string_view::npos) {
      std::size_t s = 0;
      while (s <= token.size()) {
        std::size_t comma = token.find(',', s);
        std::string_view num = token.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
        if (num.empty()) throw DomainError("empty element in set partition text");
        int value = 0;
        for (char c : num) {
          if (c < '0' || c > '9') throw DomainError("bad character in set partition text");
          value = value * 10 + (c - '0');
        }
        block.push_back(value);
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
    } else {
      for (char c : token) {
        if (c < '1' || c > '9') throw DomainError("bad character in set partition text");
        block.push_back(c - '0');
      }
    }
    if (block.empty()) throw DomainError("empty block in set partition text");
    count += static_cast<int>(block.size());
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return from_blocks(count, blocks);
}

int SetPartition::block_index(int element) const {
  if (element < 1 || element > ground_size()) {
    throw DomainError("element " + std::to_string(element) + " outside [1.." + std::to_string(ground_size()) + "]");
  }
  return labels_[static_cast<std::size_t>(element - 1)];
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (std::size_t k = 0; k < labels_.size(); ++k) out[labels_[k]].push_back(static_cast<int>(k + 1));
  return out;
}

std::vector<std::uint32_t> SetPartition::block_masks() const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(blocks_), 0);
  for (std::size_t k = 0; k < labels_.size(); ++k) out[labels_[k]] |= (1u << k);
  return out;
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out(static_cast<std::size_t>(blocks_), 0);
  for (auto l : labels_) ++out[l];
  return out;
}

std::uint64_t SetPartition::packed() const noexcept {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < labels_.size(); ++k) key |= static_cast<std::uint64_t>(labels_[k] & 0xF) << (4 * k);
  return key;
}

std::string SetPartition::to_string() const {
  const bool commas = ground_size() > 9;
  std::string out;
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out += '|';
    for (std::size_t k = 0; k < bs[b].size(); ++k) {
      if (commas && k) out += ',';
      out += std::to_string(bs[b][k]);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
  if (auto c = a.ground_size() <=> b.ground_size(); c != 0) return c;
  return a.labels_ <=> b.labels_;
}

// ---------------------------------------------------------------------------
// Lattice operations

std::vector<SetPartition> enumerate_partitions(int d) {
  if (d < 1) throw DomainError("enumerate_partitions needs d >= 1");
  if (d > max_partition_degree()) {
    throw CapacityError("ground set size " + std::to_string(d) + " exceeds cap " +
                        std::to_string(max_partition_degree()));
  }
  std::vector<SetPartition> out;
  // rgs[k] <= 1 + max(rgs[0..k-1]); prefix_max[k] = max(rgs[0..k]).
  std::vector<int> rgs(static_cast<std::size_t>(d), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(d), 0);
  while (true) {
    out.push_back(SetPartition::from_labels(rgs));
    int k = d - 1;
    while (k > 0 && rgs[static_cast<std::size_t>(k)] > prefix_max[static_cast<std::size_t>(k - 1)]) --k;
    if (k == 0) break;
    ++rgs[static_cast<std::size_t>(k)];
    prefix_max[static_cast<std::size_t>(k)] =
        std::max(prefix_max[static_cast<std::size_t>(k - 1)], rgs[static_cast<std::size_t>(k)]);
    for (int j = k + 1; j < d; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

IntPartition type_of(const SetPartition& pi) { return IntPartition(pi.block_sizes()); }

int block_size_containing(const SetPartition& pi, int element) {
  const int b = pi.block_index(element);
  return static_cast<int>(std::count(pi.labels().begin(), pi.labels().end(), b));
}

namespace {

void require_same_size(const SetPartition& a, const SetPartition& b) {
  if (a.ground_size() != b.ground_size()) {
    throw DomainError("set partitions of different ground sets (" + std::to_string(a.ground_size()) + " vs " +
                      std::to_string(b.ground_size()) + ")");
  }
}

}  // namespace

SetPartition meet(const SetPartition& pi, const SetPartition& sigma) {
  require_same_size(pi, sigma);
  std::vector<int> label(static_cast<std::size_t>(pi.ground_size()));
  for (std::size_t k = 0; k < label.size(); ++k) label[k] = pi.labels()[k] * 32 + sigma.labels()[k];
  return SetPartition::from_labels(label);
}

bool is_refinement(const SetPartition& pi, const SetPartition& sigma) {
  require_same_size(pi, sigma);
  // pi <= sigma iff each pi-block maps to a single sigma-block.
  std::vector<int> target(static_cast<std::size_t>(pi.block_count()), -1);
  for (std::size_t k = 0; k < pi.labels().size(); ++k) {
    int& t = target[pi.labels()[k]];
    if (t == -1) {
      t = sigma.labels()[k];
    } else if (t != sigma.labels()[k]) {
      return false;
    }
  }
  return true;
}

Rational mobius(const SetPartition& pi, const SetPartition& sigma) {
  if (!is_refinement(pi, sigma)) throw DomainError("mobius(pi, sigma) requires pi <= sigma");
  std::vector<int> inner(static_cast<std::size_t>(sigma.block_count()), 0);
  std::vector<bool> counted(static_cast<std::size_t>(pi.block_count()), false);
  for (std::size_t k = 0; k < pi.labels().size(); ++k) {
    if (!counted[pi.labels()[k]]) {
      counted[pi.labels()[k]] = true;
      ++inner[sigma.labels()[k]];
    }
  }
  Rational value = 1;
  for (int n : inner) {
    value *= factorial(n - 1);
    if ((n - 1) % 2 == 1) value = -value;
  }
  return value;
}

SetPartition add_block(const SetPartition& pi, const std::vector<int>& block) {
  const int d = pi.ground_size();
  if (block.empty()) throw DomainError("add_block needs a nonempty block");
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != d + 1 + static_cast<int>(k)) {
      throw DomainError("added block must be exactly {d+1..d+|B|} for d = " + std::to_string(d));
    }
  }
  std::vector<int> label(pi.labels().begin(), pi.labels().end());
  label.insert(label.end(), sorted.size(), pi.block_count());
  return SetPartition::from_labels(label);
}

SetPartition insert_into_block_of(const SetPartition& pi, int element) {
  const int b = pi.block_index(element);
  std::vector<int> label(pi.labels().begin(), pi.labels().end());
  label.push_back(b);
  return SetPartition::from_labels(label);
}

SetPartition remove_last_element(const SetPartition& pi) {
  if (pi.ground_size() == 0) throw DomainError("cannot remove an element from the empty partition");
  std::vector<int> label(pi.labels().begin(), pi.labels().end() - 1);
  return SetPartition::from_labels(label);
}

SetPartition permute(const SetPartition& pi, const std::vector<int>& perm) {
  const int d = pi.ground_size();
  if (static_cast<int>(perm.size()) != d) throw DomainError("permutation size does not match ground set");
  std::vector<int> label(static_cast<std::size_t>(d), -1);
  for (int k = 1; k <= d; ++k) {
    const int image = perm[static_cast<std::size_t>(k - 1)];
    if (image < 1 || image > d || label[static_cast<std::size_t>(image - 1)] != -1) {
      throw DomainError("map is not a permutation of [1.." + std::to_string(d) + "]");
    }
    label[static_cast<std::size_t>(image - 1)] = pi.labels()[static_cast<std::size_t>(k - 1)];
  }
  return SetPartition::from_labels(label);
}

SetPartition apply_transposition(const SetPartition& pi, int a, int b) {
  const int d = pi.ground_size();
  if (a < 1 || a > d || b < 1 || b > d) throw DomainError("transposition element out of range");
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[static_cast<std::size_t>(a - 1)], perm[static_cast<std::size_t>(b - 1)]);
  return permute(pi, perm);
}

CongruenceKey congruence_key(const SetPartition& pi, int element) {
  return CongruenceKey{type_of(pi), block_size_containing(pi, element)};
}

}  // namespace csfkit
