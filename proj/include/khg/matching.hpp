#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "khg/hypergraph.hpp"

namespace khg {

inline constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

struct MatchingCount {
  std::uint64_t value = 0;
  bool capped = false;  // search stopped at the cap; value == cap

  friend bool operator==(const MatchingCount&, const MatchingCount&) = default;
};

class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Perfect matchings of h, each with blocks sorted by smallest vertex, the
/// list in lexicographic order. Branches on the lowest uncovered vertex and
/// tries only edges through it. Returns an empty list when k does not divide n.
std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h, std::uint64_t limit = kUnbounded);

/// Same branching as enumerate_perfect_matchings without materializing the
/// matchings; subcounts are memoized on the covered vertex set.
/// Throws CountOverflow instead of wrapping.
MatchingCount count_perfect_matchings(const Hypergraph& h, std::uint64_t cap = kUnbounded);

/// The perfect matching of h if there is exactly one (counted with cap 2).
std::optional<Matching> unique_perfect_matching(const Hypergraph& h);

inline constexpr std::size_t kOracleMaxEdges = 25;
inline constexpr int kOracleMaxOrder = 20;
inline constexpr std::uint64_t kOracleMaxSubsets = 10'000'000;

/// Exponential reference count: tries every (n/k)-subset of the edge set.
/// Accepts n <= 20 with either |E| <= 25 or at most 10^7 subsets to try;
/// throws std::domain_error otherwise.
std::uint64_t oracle_count_pm(const Hypergraph& h);

namespace detail {

/// Perfect-matching counter over raw masks (n <= 64), used by the search
/// hot loop. by_min[v] lists the masks of edges whose smallest vertex is v.
std::uint64_t count_pm_masks(int n, const std::vector<std::vector<VertexMask>>& by_min, std::uint64_t cap);

}  // namespace detail

}  // namespace khg
