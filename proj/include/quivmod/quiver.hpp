#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quivmod/partition.hpp"

namespace quivmod {

enum class VertexSide { plain, source, sink };

struct Vertex {
  int id;
  int weight;
  VertexSide side;
};

/// Dimension vector: one nonnegative entry per vertex, in vertex order.
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> entries);
  DimensionVector(std::initializer_list<int> entries);

  static DimensionVector ones(std::size_t n) { return DimensionVector(std::vector<int>(n, 1)); }
  static DimensionVector zeros(std::size_t n) { return DimensionVector(std::vector<int>(n, 0)); }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_zero() const;
  bool componentwise_leq(const DimensionVector& o) const;

  DimensionVector& operator+=(const DimensionVector& o);
  DimensionVector& operator-=(const DimensionVector& o);
  friend DimensionVector operator+(DimensionVector a, const DimensionVector& b) {
    a += b;
    return a;
  }
  friend DimensionVector operator-(DimensionVector a, const DimensionVector& b) {
    a -= b;
    return a;
  }
  bool operator==(const DimensionVector& o) const { return entries_ == o.entries_; }
  bool operator<(const DimensionVector& o) const { return entries_ < o.entries_; }

  std::string to_string() const;  // "1,2"
  static DimensionVector parse(std::string_view text);

 private:
  std::vector<int> entries_;
};

/// Directed multigraph with weighted vertices; arrow multiplicities stored as
/// a dense vertex-pair matrix. Bipartite quivers keep all arrows running from
/// source-side to sink-side vertices.
class Quiver {
 public:
  /// K^m: two weight-1 vertices, m arrows from source to sink.
  static Quiver kronecker(std::int64_t m);

  /// Q^m(src, snk): one vertex of weight l per part l of each partition
  /// (source block first, each block by descending weight), with
  /// m*w(v)*w(v') arrows on every source->sink pair.
  static Quiver bipartite(const Partition& src, const Partition& snk, std::int64_t m);

  static Quiver from_descriptor(std::string_view descriptor);

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::int64_t arrow_count(std::size_t from, std::size_t to) const {
    return arrows_[from][to];
  }

  /// Canonical descriptor, e.g. "K[m=3]" or "BIP[m=1;src=1^2;snk=1^3]";
  /// used as the cache key prefix.
  const std::string& descriptor() const { return descriptor_; }

 private:
  Quiver() = default;

  std::vector<Vertex> vertices_;
  std::vector<std::vector<std::int64_t>> arrows_;
  std::string descriptor_;
};

/// <d,e> = sum_v d_v e_v - sum_{arrows i->j} mult * d_i e_j
std::int64_t euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e);

/// {d,e} = <e,d> - <d,e>; antisymmetric.
std::int64_t symplectic_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e);

/// True iff the parts sum to d and every proper prefix sum e has {e,d} > 0.
bool is_admissible(const Quiver& q, const DimensionVector& d,
                   std::span<const DimensionVector> decomposition);

}  // namespace quivmod
