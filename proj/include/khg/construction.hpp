#pragma once

#include <vector>

#include "khg/hypergraph.hpp"

namespace khg {

/// The extremal k-graph on km vertices together with its perfect matching
/// M_i = {k(i-1), ..., ki-1} (0-based).
struct ExtremalWitness {
  Hypergraph graph;
  Matching matching;
  int k = 0;
  int m = 0;
};

/// Canonical matching blocks {0..k-1}, {k..2k-1}, ... for m blocks.
Matching canonical_matching(int k, int m);

/// Builds the extremal graph block by block: step i adds every k-set that
/// meets block i and avoids the last vertex of block i, then block i itself.
/// The result is checked against f_theorem(k, m); a mismatch throws
/// std::logic_error. Requires k >= 2 and m >= 1; past km = 64 the graph has
/// no bit-mask mirror and matching queries take the slower path.
ExtremalWitness build_extremal(int k, int m);

struct SwapVariant {
  Edge removed;  // E, a non-matching edge of the m = 2 extremal graph
  Edge added;    // its complement
  Hypergraph graph;
};

/// For every non-matching edge E of the m = 2 extremal graph, the graph with
/// E replaced by its complement. Each variant is checked to keep the edge
/// count and a unique perfect matching. Empty for k = 2.
std::vector<SwapVariant> complement_swap_variants(int k);

/// Stratification of the extremal graph by its own matching, checked against
/// level 1 = m and level l = coeff_b(k,l) C(m,l).
Stratification stratification_of_extremal(int k, int m);

}  // namespace khg
