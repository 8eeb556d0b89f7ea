#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "khg/formulas.hpp"
#include "khg/hypergraph.hpp"

namespace khg {

/// Non-increasing positive parts summing to k; the intersection profile of a
/// k-set with l disjoint blocks, up to reordering of the blocks.
class TypeVector {
 public:
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit TypeVector(std::vector<int> parts);

  /// Sorts `parts` into non-increasing order first.
  static TypeVector from_unordered(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int total() const noexcept;

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;

 private:
  std::vector<int> parts_;
};

/// l pairwise-disjoint k-sets (the blocks) over a ground set of lk vertices.
class BlockFamily {
 public:
  explicit BlockFamily(std::vector<Edge> blocks);

  /// Blocks {0..k-1}, {k..2k-1}, ..., l of them.
  static BlockFamily standard(int k, int l);

  int k() const noexcept { return k_; }
  int l() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const Edge> blocks() const noexcept { return blocks_; }
  /// Sorted union of the blocks.
  const std::vector<Vertex>& ground() const noexcept { return ground_; }

 private:
  int k_ = 0;
  std::vector<Edge> blocks_;
  std::vector<Vertex> ground_;
};

/// l disjoint k-sets, each meeting every block, jointly covering the blocks.
struct Covering {
  std::vector<Edge> edges;  // sorted; the covering is an unordered set

  friend bool operator==(const Covering&, const Covering&) = default;
  friend auto operator<=>(const Covering&, const Covering&) = default;
};

struct IncidenceStats {
  std::uint64_t g_a = 0;       // |G_a|
  std::uint64_t c_a = 0;       // |C_a|, coverings counted as unordered sets
  std::uint64_t per_edge = 0;  // c_a * l / g_a
  bool per_edge_integral = false;
  std::uint64_t direct_min = 0;  // fewest coverings through one member of G_a
  std::uint64_t direct_max = 0;  // most coverings through one member of G_a
  BigInt eta;                    // |G| / l, edges of G through each vertex

  bool uniform() const noexcept { return direct_min == direct_max; }
  bool consistent() const noexcept { return per_edge_integral && uniform() && direct_min == per_edge; }
};

inline constexpr int kCoveringGuard = 12;

/// Partitions of k into exactly l parts, lexicographically decreasing.
/// Requires 2 <= l <= k.
std::vector<TypeVector> enumerate_types(int k, int l);

/// Sorted block-intersection sizes of e. Throws std::invalid_argument when e
/// leaves the ground set or misses a block.
TypeVector type_of(const Edge& e, const BlockFamily& fam);

/// |G| by inclusion-exclusion. Requires 2 <= l <= k.
BigInt count_G(int k, int l);

/// All k-sets on the ground set meeting every block, lexicographic order.
std::vector<Edge> enumerate_G(const BlockFamily& fam);
std::vector<Edge> enumerate_G_a(const BlockFamily& fam, const TypeVector& a);

/// Distinct arrangements of the multiset a times prod_i C(k, a_i).
BigInt count_G_a_closed(int k, int l, const TypeVector& a);

/// Covering built by cyclic shifts: member i takes a[(j + i) mod l] of the
/// lowest unused vertices of block j.
Covering cyclic_covering(const BlockFamily& fam, const TypeVector& a);

/// All coverings whose members all have type a. Requires lk <= 12.
std::vector<Covering> enumerate_coverings(const BlockFamily& fam, const TypeVector& a);

/// True when c satisfies both covering conditions for fam.
bool is_covering(const Covering& c, const BlockFamily& fam);

IncidenceStats incidence_stats(const BlockFamily& fam, const TypeVector& a);

}  // namespace khg
