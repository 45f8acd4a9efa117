#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "quivmod/errors.hpp"

namespace quivmod {

/// Integer partition stored as multiplicities: part size l -> count a_l > 0.
/// total() is sum of l*a_l, part_count() is the number of parts S = sum of a_l.
class Partition {
 public:
  using MultMap = std::map<int, int, std::greater<int>>;  // descending part size

  Partition() = default;
  explicit Partition(const MultMap& multiplicities);
  Partition(std::initializer_list<std::pair<int, int>> size_count_pairs);

  static Partition trivial(int n);  // n parts of size 1

  const MultMap& multiplicities() const { return mult_; }
  int total() const { return total_; }
  int part_count() const { return parts_; }
  bool empty() const { return mult_.empty(); }

  /// Parts in descending order, e.g. {2,1,1}.
  std::vector<int> parts() const;

  bool operator==(const Partition& o) const { return mult_ == o.mult_; }
  bool operator<(const Partition& o) const { return mult_ < o.mult_; }

  /// Canonical text: "size^count" blocks, descending size, comma-separated,
  /// e.g. "2^1,1^3".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  MultMap mult_;
  int total_ = 0;
  int parts_ = 0;
};

/// All partitions of n in descending-lexicographic order by part lists,
/// e.g. n=4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> partitions(int n);

struct PartitionPair {
  Partition source;  // partition of a, indexing source vertices
  Partition sink;    // partition of b, indexing sink vertices
};

/// Cartesian product partitions(a) x partitions(b), outer loop over source.
std::vector<PartitionPair> partition_pairs(int a, int b);

}  // namespace quivmod
