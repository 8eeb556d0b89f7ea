// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "khg/construction.hpp"
#include "khg/coverings.hpp"
#include "khg/formulas.hpp"
#include "khg/matching.hpp"
#include "khg/search.hpp"
#include "oracles.hpp"

using namespace khg;
using Rational = boost::multiprecision::cpp_rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && secs >= limit_s) {
    out.ok = false;
    out.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s";
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %8.3f s  (limit %g s)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, limit_s,
              out.detail.empty() ? "" : "  ", out.detail.c_str());
  std::fflush(stdout);
}

std::string km(int k, int m) { return "k=" + std::to_string(k) + " m=" + std::to_string(m); }

}  // namespace

int main() {
  criterion(1, "formula values", 1.0, [](Outcome& o) {
    for (int m = 1; m <= 64; ++m) {
      o.require(f_theorem(2, m).value == BigInt(m) * m, "f(2," + std::to_string(m) + ") != m^2");
      const BigInt f3 = f_theorem(3, m).value;
      o.require(f3 == BigInt(m) + 9 * binomial(m, 2) + 18 * binomial(m, 3), "f(3," + std::to_string(m) + ") sum form");
      const Rational r = Rational(3) * m * m * m - Rational(9, 2) * m * m + Rational(5, 2) * m;
      o.require(Rational(f3) == r, "f(3," + std::to_string(m) + ") cubic");
    }
  });

  criterion(2, "theorem vs telescoped", 1.0, [](Outcome& o) {
    for (int k = 2; k <= 8; ++k)
      for (int m = 1; m <= 32; ++m) o.require(f_theorem(k, m).value == f_telescoped(k, m).value, km(k, m));
  });

  criterion(3, "construction and uniqueness", 10.0, [](Outcome& o) {
    for (int k = 2; k <= 5; ++k) {
      for (int m = 1; k * m <= 20; ++m) {
        auto w = build_extremal(k, m);
        o.require(BigInt(w.graph.size()) == f_theorem(k, m).value, "edge count at " + km(k, m));
        auto pm = unique_perfect_matching(w.graph);
        o.require(pm.has_value() && *pm == canonical_matching(k, m), "unique matching at " + km(k, m));
      }
    }
  });

  criterion(4, "stratification", 10.0, [](Outcome& o) {
    for (int k = 2; k <= 5; ++k) {
      for (int m = 1; k * m <= 20; ++m) {
        auto w = build_extremal(k, m);
        auto s = stratify(w.graph, w.matching);
        o.require(s.counts.size() == static_cast<std::size_t>(k), "level count at " + km(k, m));
        o.require(s.at_level(1) == static_cast<std::uint64_t>(m), "level 1 at " + km(k, m));
        for (int l = 2; l <= k; ++l)
          o.require(BigInt(s.at_level(l)) == coeff_b(k, l).value * binomial(m, l),
                    "level " + std::to_string(l) + " at " + km(k, m));
        o.require(s.counts == testing::brute_stratify(testing::brute_extremal(k, m), k, testing::standard_blocks(k, m)),
                  "brute stratification at " + km(k, m));
      }
    }
  });

  criterion(5, "exhaustive search", 120.0, [](Outcome& o) {
    auto a = exhaustive_max(2, 2);
    o.require(a.max_edges == 4 && a.extremal_canonical.size() == 1, "k=2 m=2");
    auto b = exhaustive_max(2, 3);
    o.require(b.max_edges == 9 && b.extremal_canonical.size() == 1, "k=2 m=3");
    auto c = exhaustive_max(3, 2);
    o.require(c.max_edges == 11, "k=3 m=2 max");
    o.require(c.extremal_canonical.size() >= 2, "k=3 m=2 needs two forms");
    o.require(c.examined == (std::uint64_t{1} << 18), "k=3 m=2 examined");
  });

  criterion(6, "saturation", 1.0, [](Outcome& o) {
    const auto base = build_extremal(3, 2).graph;
    int absent = 0;
    for (const auto& e : testing::all_ksets(6, 3)) {
      if (base.contains(e)) continue;
      ++absent;
      o.require(count_perfect_matchings(base.with_edge(e)).value >= 2, "absent triple keeps a unique matching");
    }
    o.require(absent == 9, "absent triple count " + std::to_string(absent));
  });

  criterion(7, "covering machinery", 30.0, [](Outcome& o) {
    for (int k = 2; k <= 6; ++k) {
      for (int l = 2; l <= k; ++l) {
        const BigInt g = count_G(k, l);
        BigInt sum = 0;
        for (const auto& a : enumerate_types(k, l)) sum += count_G_a_closed(k, l, a);
        o.require(sum == g, "sum of G_a at k=" + std::to_string(k) + " l=" + std::to_string(l));
        o.require(coeff_b(k, l).value * l == (l - 1) * g, "b link at k=" + std::to_string(k) + " l=" + std::to_string(l));
      }
    }
    for (int k = 2; k <= 6; ++k) {
      for (int l = 2; l <= k && l * k <= 12; ++l) {
        for (const auto& a : enumerate_types(k, l)) {
          const std::string tag = "k=" + std::to_string(k) + " l=" + std::to_string(l);
          const std::vector<int> parts(a.parts().begin(), a.parts().end());
          const auto brute = testing::brute_coverings(k, l, parts);
          const auto blocks = testing::standard_blocks(k, l);
          std::map<Edge, std::uint64_t> through;
          for (const auto& e : testing::all_ksets(k * l, k))
            if (testing::brute_profile(e, blocks) == parts) through[e] = 0;
          for (const auto& cov : brute)
            for (const auto& e : cov) ++through[e];
          std::set<std::uint64_t> seen;
          for (const auto& [e, c] : through) seen.insert(c);
          const std::uint64_t g_a = through.size();
          const std::uint64_t c_a = brute.size();
          o.require(seen.size() == 1, "incidence not uniform at " + tag);
          o.require(c_a * static_cast<std::uint64_t>(l) % g_a == 0 && *seen.begin() == c_a * l / g_a,
                    "incidence != c_a l / g_a at " + tag);
          const auto stats = incidence_stats(BlockFamily::standard(k, l), a);
          o.require(stats.g_a == g_a && stats.c_a == c_a && stats.consistent(), "library stats at " + tag);
        }
      }
    }
  });

  criterion(8, "oracle equivalence", 30.0, [](Outcome& o) {
    std::mt19937_64 rng(20240607);
    const std::pair<int, int> shapes[] = {{4, 2}, {6, 2}, {8, 2}, {10, 2}, {6, 3}, {9, 3}, {12, 3}, {8, 4}, {12, 4}, {10, 5}};
    for (int trial = 0; trial < 200; ++trial) {
      const auto [n, k] = shapes[trial % std::size(shapes)];
      const double p = 0.2 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
      auto h = testing::random_hypergraph(rng, n, k, p, kOracleMaxEdges);
      o.require(count_perfect_matchings(h).value == oracle_count_pm(h), "trial " + std::to_string(trial));
    }
  });

  criterion(9, "local bound", 30.0, [](Outcome& o) {
    for (int k = 2; k <= 5; ++k) {
      for (int m = 2; k * m <= 20; ++m) {
        auto w = build_extremal(k, m);
        o.require(verify_local_bound(w.graph, w.matching).within_bounds(), "extremal " + km(k, m));
      }
    }
    const auto pm = canonical_matching(3, 3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      auto h = sample_unique_pm(3, 3, seed, seed % 40);
      auto rep = verify_local_bound(h, pm);
      o.require(rep.within_bounds(), "sample seed " + std::to_string(seed));
      for (const auto& row : rep.rows) o.require(BigInt(row.count) <= coeff_b(3, row.l).value, "row over bound");
    }
  });

  criterion(10, "swap variants", 5.0, [](Outcome& o) {
    auto variants = complement_swap_variants(3);
    o.require(variants.size() == 9, "variant count " + std::to_string(variants.size()));
    const auto base_form = canonical_form(build_extremal(3, 2).graph);
    bool differs = false;
    for (const auto& v : variants) {
      o.require(v.graph.size() == 11, "variant edge count");
      o.require(count_perfect_matchings(v.graph).value == 1, "variant matching count");
      differs |= canonical_form(v.graph) != base_form;
    }
    o.require(differs, "every variant is isomorphic to the base graph");
  });

  std::printf("%s: %d failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
