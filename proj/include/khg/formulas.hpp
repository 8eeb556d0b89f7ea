#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace khg {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), zero when b < 0 or b > a.
BigInt binomial(long a, long b);

struct Coefficient {
  int k = 0;
  int l = 0;
  BigInt value;
};

struct ExtremalValue {
  int k = 0;
  int m = 0;
  BigInt value;
};

/// Signed inclusion-exclusion sum  sum_{i<l} (-1)^i C(l,i) C(k(l-i),k):
/// the number of k-sets on l disjoint k-blocks meeting every block.
BigInt blocks_meeting_all(int k, int l);

/// Number of edges of the extremal construction inside any l matching blocks
/// that meet all of them: (l-1)/l times blocks_meeting_all(k, l).
///
/// Conventions outside the range 2..k used by the edge-count sum:
/// coeff_b(k, 1) = 1 (the block itself) and coeff_b(k, l) = 0 for l > k.
/// Throws std::domain_error for k < 2 or l < 1.
Coefficient coeff_b(int k, int l);

/// Maximum edge count of a k-graph on km vertices with a unique perfect
/// matching: m + sum_{l=2..k} coeff_b(k,l) C(m,l).
ExtremalValue f_theorem(int k, int m);

/// Same value via the edge-count recurrence of the extremal construction:
/// a_1 = 1, a_m = a_{m-1} + C(km-1,k) - C(k(m-1),k) + 1.
ExtremalValue f_telescoped(int k, int m);

}  // namespace khg
