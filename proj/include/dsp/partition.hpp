#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dsp {

// Non-increasing list of positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  // Sorts the input; throws Error("InvalidPartition") on non-positive parts.
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  Partition dual() const;
  // rank of A^i for a nilpotent matrix with these block sizes
  int power_rank(int i) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

// All partitions of n, in reverse-lexicographic order starting with (n).
std::vector<Partition> all_partitions(int n);

}  // namespace dsp
