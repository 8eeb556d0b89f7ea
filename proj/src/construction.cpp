#include "khg/construction.hpp"

#include <stdexcept>
#include <string>

#include "khg/formulas.hpp"
#include "khg/matching.hpp"

namespace khg {

namespace {

void require_domain(int k, int m) {
  if (k < 2) throw std::domain_error("uniformity must be at least 2, got " + std::to_string(k));
  if (m < 1) throw std::domain_error("block count must be at least 1, got " + std::to_string(m));
}

// Appends every (size)-subset of {0..limit-1} extended by `tail`.
void append_subsets_with(int limit, int size, Vertex tail, std::vector<Edge>& out) {
  Edge pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  if (size > limit) return;
  while (true) {
    Edge e = pick;
    e.push_back(tail);
    out.push_back(std::move(e));
    int i = size;
    while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == limit - size + i - 1) --i;
    if (i == 0) break;
    ++pick[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

Matching canonical_matching(int k, int m) {
  std::vector<Edge> blocks;
  for (int i = 0; i < m; ++i) {
    Edge b;
    for (int j = 0; j < k; ++j) b.push_back(k * i + j);
    blocks.push_back(std::move(b));
  }
  return Matching(std::move(blocks));
}

ExtremalWitness build_extremal(int k, int m) {
  require_domain(k, m);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int first_new = k * i;
    const int last = k * (i + 1) - 1;
    // k-sets meeting {first_new..last-1} and avoiding `last`, grouped by
    // their largest vertex t, which is one of the new vertices.
    for (int t = first_new; t < last; ++t) append_subsets_with(t, k - 1, t, edges);
    Edge block;
    for (int v = first_new; v <= last; ++v) block.push_back(v);
    edges.push_back(std::move(block));
  }
  Hypergraph graph(k * m, k, std::move(edges));
  if (BigInt(graph.size()) != f_theorem(k, m).value) {
    throw std::logic_error("build_extremal: edge count disagrees with f(k,m)");
  }
  return {std::move(graph), canonical_matching(k, m), k, m};
}

std::vector<SwapVariant> complement_swap_variants(int k) {
  if (k < 2) throw std::domain_error("uniformity must be at least 2, got " + std::to_string(k));
  if (k == 2) return {};
  auto base = build_extremal(k, 2);
  std::vector<SwapVariant> out;
  for (const auto& e : base.graph.edges()) {
    if (e == base.matching.blocks()[0] || e == base.matching.blocks()[1]) continue;
    Edge comp = complement_edge(2 * k, e);
    Hypergraph g = base.graph.without_edge(e).with_edge(comp);
    if (g.size() != base.graph.size()) {
      throw std::logic_error("complement swap collided with an existing edge");
    }
    if (!unique_perfect_matching(g)) {
      throw std::logic_error("complement swap variant lost its unique perfect matching");
    }
    out.push_back({e, std::move(comp), std::move(g)});
  }
  return out;
}

Stratification stratification_of_extremal(int k, int m) {
  auto w = build_extremal(k, m);
  auto s = stratify(w.graph, w.matching);
  if (s.at_level(1) != static_cast<std::uint64_t>(m)) {
    throw std::logic_error("stratification_of_extremal: level 1 differs from m");
  }
  for (int l = 2; l <= k; ++l) {
    if (BigInt(s.at_level(l)) != coeff_b(k, l).value * binomial(m, l)) {
      throw std::logic_error("stratification_of_extremal: level " + std::to_string(l) + " differs from b*C(m,l)");
    }
  }
  return s;
}

}  // namespace khg
