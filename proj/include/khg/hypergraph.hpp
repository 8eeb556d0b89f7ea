#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khg {

// Vertices are 0-based internally. The .khg format and the CLI use 1-based
// labels; conversion happens only in parse/serialize and in CLI printing.
using Vertex = int;

// A sorted list of distinct vertices.
using Edge = std::vector<Vertex>;

using VertexMask = std::uint64_t;

inline constexpr int kMaskLimit = 64;

class HypergraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

VertexMask to_mask(std::span<const Vertex> vs);

/// Immutable k-uniform hypergraph.
///
/// Edges are kept deduplicated and in lexicographic order of their sorted
/// vertex lists, so two hypergraphs compare equal iff their edge sequences
/// do. When n <= 64 every edge is mirrored as a bit mask for O(1)
/// disjointness tests.
class Hypergraph {
 public:
  /// Throws HypergraphError for k < 2, negative n, an edge of the wrong
  /// size, repeated vertices inside an edge, or an out-of-range vertex.
  /// Duplicate edges are merged silently.
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  bool has_masks() const noexcept { return n_ <= kMaskLimit; }
  /// Empty when has_masks() is false.
  std::span<const VertexMask> masks() const noexcept { return masks_; }

  bool contains(const Edge& e) const;
  std::vector<int> degrees() const;

  Hypergraph with_edge(Edge e) const;
  Hypergraph without_edge(const Edge& e) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<VertexMask> masks_;
};

/// Ordered list of pairwise-disjoint k-sets. Whether the blocks are edges of
/// some host is checked by the operations that need it.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> blocks);

  std::span<const Edge> blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  /// True when the blocks partition 0..n-1.
  bool is_perfect_for(int n) const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> blocks_;
};

/// counts[l - 1] is the number of edges meeting exactly l matching blocks,
/// for l = 1..k.
struct Stratification {
  std::vector<std::uint64_t> counts;

  std::uint64_t at_level(int l) const { return counts.at(static_cast<std::size_t>(l - 1)); }
  friend bool operator==(const Stratification&, const Stratification&) = default;
};

struct InducedSub {
  Hypergraph graph;
  std::vector<Vertex> original;  // original[new_label] = old label
};

/// Sub-hypergraph spanned by `vs`, relabelled order-preservingly to
/// 0..|vs|-1. Duplicates in `vs` are ignored.
InducedSub induced_sub(const Hypergraph& h, std::span<const Vertex> vs);

/// Applies the vertex map v -> perm[v]; perm must be a permutation of 0..n-1.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm);

/// Requires the blocks of `pm` to partition the vertex set of `h`.
Stratification stratify(const Hypergraph& h, const Matching& pm);

/// {0..n-1} minus e; requires n == 2|e|.
Edge complement_edge(int n, const Edge& e);

Hypergraph parse_khg(std::string_view text);
std::string to_khg(const Hypergraph& h);

Hypergraph read_khg_file(const std::filesystem::path& path);
void write_khg_file(const std::filesystem::path& path, const Hypergraph& h);

/// "1 2 3" style rendering with 1-based labels.
std::string format_edge(const Edge& e);

}  // namespace khg
