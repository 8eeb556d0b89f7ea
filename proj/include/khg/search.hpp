#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "khg/formulas.hpp"
#include "khg/hypergraph.hpp"

namespace khg {

inline constexpr int kCanonicalMaxOrder = 8;

/// Lexicographically smallest edge sequence over all n! relabelings.
/// Two hypergraphs (n <= 8) are isomorphic iff their forms are equal.
struct CanonicalForm {
  int n = 0;
  int k = 0;
  std::vector<Edge> edges;

  Hypergraph graph() const { return Hypergraph(n, k, edges); }
  /// The .khg text of the canonical relabeling.
  std::string to_string() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws std::domain_error for n > 8.
CanonicalForm canonical_form(const Hypergraph& h);

enum class SearchMode { exhaustive, randomized };

struct SearchReport {
  static constexpr int kFormat = 1;

  int k = 0;
  int m = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t examined = 0;
  std::uint64_t max_edges = 0;
  std::vector<std::string> extremal_canonical;  // sorted .khg texts
  std::optional<std::uint64_t> seed;
  std::int64_t duration_ms = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const SearchReport& r);
/// Parses and re-validates: format version, non-empty extremal list, each
/// entry a valid .khg text of the right shape, and max_edges == f(k,m) in
/// exhaustive mode (<= f(k,m) in randomized mode). Throws ReportError.
SearchReport report_from_json(const nlohmann::json& j);

void write_report(const std::filesystem::path& path, const SearchReport& r);
SearchReport read_report(const std::filesystem::path& path);

struct SearchOptions {
  bool force = false;     // lift the default (k, m) guard
  unsigned workers = 0;   // 0 = hardware concurrency
};

/// True for the (k, m) pairs searched without `force`: (2,2), (2,3), (3,2).
bool exhaustive_allowed_by_default(int k, int m);

/// Every unique-PM k-graph on km vertices whose matching is the canonical
/// one: all subsets of the non-matching k-sets, plus the matching blocks.
/// Any unique-PM graph relabels onto this form, and its matching blocks are
/// edges, so the maximum over this family is the maximum overall.
SearchReport exhaustive_max(int k, int m, const SearchOptions& opts = {});

/// Randomized lower-bound probe: `samples` seeded uniform subsets of the
/// non-matching k-sets plus the matching, keeping unique-PM ones.
SearchReport randomized_max(int k, int m, std::uint64_t seed, std::uint64_t samples);

/// The extremal graph with `deletions` distinct non-matching edges removed,
/// chosen uniformly with a seeded engine. The canonical matching stays the
/// unique perfect matching. Throws std::invalid_argument when there are
/// fewer non-matching edges than `deletions`.
Hypergraph sample_unique_pm(int k, int m, std::uint64_t seed, std::size_t deletions);

struct LocalBoundRow {
  int l = 0;
  std::vector<int> blocks;  // 0-based block indices into the matching
  std::uint64_t count = 0;  // edges inside these blocks meeting all of them
  BigInt bound;             // coeff_b(k, l)
};

struct LocalBoundReport {
  std::vector<LocalBoundRow> rows;

  bool within_bounds() const;
  std::uint64_t max_count(int l) const;
};

/// For every l in 2..k and every l-subset of the blocks, counts the edges of
/// the induced sub-hypergraph that meet all l blocks. Throws
/// std::invalid_argument unless pm is the unique perfect matching of h.
LocalBoundReport verify_local_bound(const Hypergraph& h, const Matching& pm);

}  // namespace khg
