#include "khg/matching.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace khg {

namespace {

// Edge indices grouped by their smallest vertex. The lowest uncovered vertex
// v has every smaller vertex covered, so an edge through v that avoids the
// covered set necessarily has v as its minimum.
std::vector<std::vector<std::size_t>> edges_by_min(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> by_min(static_cast<std::size_t>(h.order()));
  for (std::size_t i = 0; i < h.size(); ++i) by_min[static_cast<std::size_t>(h.edge(i).front())].push_back(i);
  return by_min;
}

// Covered-vertex sets. Graphs with n <= 64 use a single word, wider ones one
// word per 64 vertices.
struct NarrowSet {
  using Key = VertexMask;
  using Hash = std::hash<VertexMask>;

  explicit NarrowSet(const Hypergraph& h)
      : full(h.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << h.order()) - 1), edges(h.masks().begin(), h.masks().end()) {}

  Key empty() const { return 0; }
  bool complete(Key s) const { return s == full; }
  int lowest_free(Key s) const { return std::countr_one(s); }
  bool meets(Key s, std::size_t e) const { return (s & edges[e]) != 0; }
  Key add(Key s, std::size_t e) const { return s | edges[e]; }

  VertexMask full;
  std::vector<VertexMask> edges;
};

struct WideKey {
  std::vector<std::uint64_t> words;
  friend bool operator==(const WideKey&, const WideKey&) = default;
};

struct WideSet {
  using Key = WideKey;
  struct Hash {
    std::size_t operator()(const WideKey& k) const noexcept {
      std::size_t h = 0;
      for (auto w : k.words) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
      return h;
    }
  };

  explicit WideSet(const Hypergraph& h) : n(h.order()), words(static_cast<std::size_t>((h.order() + 63) / 64)) {
    for (const auto& e : h.edges()) {
      WideKey m{std::vector<std::uint64_t>(words, 0)};
      for (Vertex v : e) m.words[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
      edges.push_back(std::move(m));
    }
  }

  Key empty() const { return WideKey{std::vector<std::uint64_t>(words, 0)}; }
  bool complete(const Key& s) const { return lowest_free(s) == n; }
  int lowest_free(const Key& s) const {
    for (std::size_t w = 0; w < words; ++w) {
      if (~s.words[w] != 0) return std::min(n, static_cast<int>(w * 64) + std::countr_one(s.words[w]));
    }
    return n;
  }
  bool meets(const Key& s, std::size_t e) const {
    for (std::size_t w = 0; w < words; ++w)
      if (s.words[w] & edges[e].words[w]) return true;
    return false;
  }
  Key add(Key s, std::size_t e) const {
    for (std::size_t w = 0; w < words; ++w) s.words[w] |= edges[e].words[w];
    return s;
  }

  int n;
  std::size_t words;
  std::vector<WideKey> edges;
};

// Depth-first walk on the lowest uncovered vertex. `visit` gets the chosen
// edge indices of each perfect matching and returns false to stop.
// Many prefixes reach the same covered set, so covered sets with no
// completion are remembered; on the extremal graphs nearly all are dead.
template <typename Set>
class Walker {
 public:
  explicit Walker(const Hypergraph& h) : set_(h), by_min_(edges_by_min(h)) {}

  template <typename Visit>
  void run(Visit&& visit) {
    walk(set_.empty(), visit);
  }

 private:
  using Key = typename Set::Key;

  template <typename Visit>
  bool walk(const Key& covered, Visit& visit) {
    if (set_.complete(covered)) {
      ++leaves_;
      return visit(chosen_);
    }
    if (dead_.contains(covered)) return true;
    const std::uint64_t before = leaves_;
    const int v = set_.lowest_free(covered);
    for (std::size_t idx : by_min_[static_cast<std::size_t>(v)]) {
      if (set_.meets(covered, idx)) continue;
      chosen_.push_back(idx);
      const bool go_on = walk(set_.add(covered, idx), visit);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    if (leaves_ == before) dead_.insert(covered);
    return true;
  }

  Set set_;
  std::vector<std::vector<std::size_t>> by_min_;
  std::vector<std::size_t> chosen_;
  std::unordered_set<Key, typename Set::Hash> dead_;
  std::uint64_t leaves_ = 0;
};

// Completions of a covered set, saturated at `cap` and memoized per set.
// Branches exactly like Walker.
template <typename Set>
class Counter {
 public:
  Counter(const Hypergraph& h, std::uint64_t cap) : set_(h), by_min_(edges_by_min(h)), cap_(cap) {}

  std::uint64_t run() { return count(set_.empty()); }

 private:
  using Key = typename Set::Key;

  std::uint64_t count(const Key& covered) {
    if (set_.complete(covered)) return 1;
    if (auto it = memo_.find(covered); it != memo_.end()) return it->second;
    std::uint64_t total = 0;
    const int v = set_.lowest_free(covered);
    for (std::size_t idx : by_min_[static_cast<std::size_t>(v)]) {
      if (set_.meets(covered, idx)) continue;
      const std::uint64_t sub = count(set_.add(covered, idx));
      if (sub > kUnbounded - total) throw CountOverflow("perfect matching count overflows 64 bits");
      total += sub;
      if (total >= cap_) {
        total = cap_;
        break;
      }
    }
    memo_.emplace(covered, total);
    return total;
  }

  Set set_;
  std::vector<std::vector<std::size_t>> by_min_;
  std::uint64_t cap_;
  std::unordered_map<Key, std::uint64_t, typename Set::Hash> memo_;
};

template <typename Visit>
void walk_matchings(const Hypergraph& h, Visit&& visit) {
  if (h.order() % h.uniformity() != 0) return;
  if (h.has_masks()) {
    Walker<NarrowSet>(h).run(visit);
  } else {
    Walker<WideSet>(h).run(visit);
  }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Hypergraph& h, std::uint64_t limit) {
  std::vector<Matching> out;
  if (limit == 0) return out;
  walk_matchings(h, [&](const std::vector<std::size_t>& chosen) {
    std::vector<Edge> blocks;
    blocks.reserve(chosen.size());
    for (std::size_t idx : chosen) blocks.push_back(h.edge(idx));
    out.emplace_back(std::move(blocks));
    return out.size() < limit;
  });
  std::sort(out.begin(), out.end());
  return out;
}

MatchingCount count_perfect_matchings(const Hypergraph& h, std::uint64_t cap) {
  if (cap == 0) return {0, true};
  if (h.order() % h.uniformity() != 0) return {0, false};
  const std::uint64_t value = h.has_masks() ? Counter<NarrowSet>(h, cap).run() : Counter<WideSet>(h, cap).run();
  return {value, value >= cap};
}

std::optional<Matching> unique_perfect_matching(const Hypergraph& h) {
  auto found = enumerate_perfect_matchings(h, 2);
  if (found.size() != 1) return std::nullopt;
  return std::move(found.front());
}

std::uint64_t oracle_count_pm(const Hypergraph& h) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n > kOracleMaxOrder) throw std::domain_error("oracle_count_pm: needs at most 20 vertices");
  if (n % k != 0) return 0;
  const std::size_t want = static_cast<std::size_t>(n / k);
  const std::size_t total = h.size();
  if (total > kOracleMaxEdges) {
    // C(total, want), stopping once it passes the limit.
    std::uint64_t subsets = 1;
    for (std::size_t i = 1; i <= want && subsets <= kOracleMaxSubsets; ++i) subsets = subsets * (total - want + i) / i;
    if (subsets > kOracleMaxSubsets) {
      throw std::domain_error("oracle_count_pm: more than 25 edges and over 10^7 edge subsets to try");
    }
  }
  if (want > total) return 0;
  if (want == 0) return 1;

  // Plain combination walk over edge indices; no pruning.
  std::uint64_t count = 0;
  std::vector<std::size_t> pick(want);
  for (std::size_t i = 0; i < want; ++i) pick[i] = i;
  const VertexMask full = (VertexMask{1} << n) - 1;
  while (true) {
    VertexMask uni = 0;
    int total_size = 0;
    for (std::size_t i : pick) {
      uni |= h.masks()[i];
      total_size += k;
    }
    if (uni == full && std::popcount(uni) == total_size) ++count;

    std::size_t i = want;
    while (i > 0 && pick[i - 1] == total - want + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

namespace detail {

namespace {

std::uint64_t walk(VertexMask covered, VertexMask full, const std::vector<std::vector<VertexMask>>& by_min,
                   std::uint64_t cap, std::uint64_t found) {
  if (covered == full) return found + 1;
  const int v = std::countr_one(covered);
  for (VertexMask m : by_min[static_cast<std::size_t>(v)]) {
    if (m & covered) continue;
    found = walk(covered | m, full, by_min, cap, found);
    if (found >= cap) return found;
  }
  return found;
}

}  // namespace

std::uint64_t count_pm_masks(int n, const std::vector<std::vector<VertexMask>>& by_min, std::uint64_t cap) {
  if (cap == 0) return 0;
  const VertexMask full = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  return walk(0, full, by_min, cap, 0);
}

}  // namespace detail

}  // namespace khg
