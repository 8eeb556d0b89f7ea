#include <doctest.h>

#include <algorithm>

#include "khg/coverings.hpp"
#include "oracles.hpp"

using namespace khg;

namespace {

// Partitions of k into l parts by filtering every composition.
std::vector<std::vector<int>> composition_filter(int k, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(l), 1);
  while (true) {
    int sum = 0;
    for (int p : cur) sum += p;
    if (sum == k && std::is_sorted(cur.begin(), cur.end(), std::greater<>())) out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == k) cur[i++] = 1;
    if (i == cur.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<std::vector<int>> as_parts(const std::vector<TypeVector>& ts) {
  std::vector<std::vector<int>> out;
  for (const auto& t : ts) out.emplace_back(t.parts().begin(), t.parts().end());
  return out;
}

}  // namespace

TEST_CASE("TypeVector validation") {
  CHECK_NOTHROW(TypeVector({2, 1}));
  CHECK_THROWS_AS(TypeVector({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(TypeVector({2, 0}), std::invalid_argument);
  CHECK(TypeVector::from_unordered({1, 3, 2}) == TypeVector({3, 2, 1}));
}

TEST_CASE("enumerate_types") {
  CHECK(as_parts(enumerate_types(3, 2)) == std::vector<std::vector<int>>{{2, 1}});
  CHECK(as_parts(enumerate_types(4, 2)) == std::vector<std::vector<int>>{{3, 1}, {2, 2}});
  CHECK(as_parts(enumerate_types(3, 3)) == std::vector<std::vector<int>>{{1, 1, 1}});
  for (int k = 2; k <= 8; ++k)
    for (int l = 2; l <= k; ++l) CHECK(as_parts(enumerate_types(k, l)) == composition_filter(k, l));
  CHECK_THROWS_AS(enumerate_types(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_types(3, 1), std::invalid_argument);
}

TEST_CASE("type_of") {
  const BlockFamily fam({{0, 1, 2}, {3, 4, 5}});
  CHECK(type_of({0, 1, 3}, fam) == TypeVector({2, 1}));
  CHECK(type_of({0, 3, 4}, fam) == TypeVector({2, 1}));
  CHECK_THROWS_AS(type_of({0, 1, 2}, fam), std::invalid_argument);
  CHECK_THROWS_AS(type_of({0, 1, 7}, fam), std::invalid_argument);
}

TEST_CASE("count_G") {
  CHECK(count_G(3, 2) == 18);
  CHECK(count_G(3, 3) == 27);
  CHECK(count_G(2, 2) == 4);
  CHECK(count_G(4, 2) == 68);
  for (int k = 2; k <= 4; ++k) {
    for (int l = 2; l <= k && k * l <= 16; ++l) {
      auto fam = BlockFamily::standard(k, l);
      auto listed = enumerate_G(fam);
      CHECK(BigInt(listed.size()) == count_G(k, l));
      std::size_t brute = 0;
      for (const auto& e : testing::all_ksets(k * l, k)) brute += testing::blocks_met(e, testing::standard_blocks(k, l)) == l;
      CHECK(listed.size() == brute);
    }
  }
  CHECK_THROWS_AS(count_G(3, 4), std::invalid_argument);
}

TEST_CASE("enumerate_G_a and the closed form") {
  auto fam3 = BlockFamily::standard(3, 2);
  CHECK(enumerate_G_a(fam3, TypeVector({2, 1})).size() == 18);
  auto fam2 = BlockFamily::standard(2, 2);
  CHECK(enumerate_G_a(fam2, TypeVector({1, 1})) == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto fam4 = BlockFamily::standard(4, 2);
  CHECK(enumerate_G_a(fam4, TypeVector({3, 1})).size() == 32);
  CHECK(enumerate_G_a(fam4, TypeVector({2, 2})).size() == 36);

  CHECK(count_G_a_closed(3, 2, TypeVector({2, 1})) == 18);
  CHECK(count_G_a_closed(4, 2, TypeVector({2, 2})) == 36);
  CHECK(count_G_a_closed(3, 3, TypeVector({1, 1, 1})) == 27);
  CHECK_THROWS_AS(count_G_a_closed(4, 2, TypeVector({2, 1})), std::invalid_argument);

  for (int k = 2; k <= 5; ++k) {
    for (int l = 2; l <= k && k * l <= 15; ++l) {
      auto fam = BlockFamily::standard(k, l);
      std::size_t total = 0;
      for (const auto& a : enumerate_types(k, l)) {
        auto listed = enumerate_G_a(fam, a);
        CHECK(BigInt(listed.size()) == count_G_a_closed(k, l, a));
        total += listed.size();
      }
      CHECK(total == enumerate_G(fam).size());
    }
  }
}

TEST_CASE("partition law and link to b") {
  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= k; ++l) {
      BigInt sum = 0;
      for (const auto& a : enumerate_types(k, l)) sum += count_G_a_closed(k, l, a);
      CHECK(sum == count_G(k, l));
      CHECK(coeff_b(k, l).value * l == count_G(k, l) * (l - 1));
    }
  }
}

TEST_CASE("every vertex lies in |G|/l members of G") {
  for (int k = 2; k <= 4; ++k) {
    for (int l = 2; l <= k; ++l) {
      auto fam = BlockFamily::standard(k, l);
      std::vector<std::size_t> deg(static_cast<std::size_t>(k * l), 0);
      for (const auto& e : enumerate_G(fam))
        for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
      const BigInt eta = count_G(k, l) / l;
      CHECK(count_G(k, l) % l == 0);
      for (auto d : deg) CHECK(BigInt(d) == eta);
    }
  }
}

TEST_CASE("cyclic_covering") {
  CHECK(cyclic_covering(BlockFamily::standard(3, 2), TypeVector({2, 1})).edges == std::vector<Edge>{{0, 1, 3}, {2, 4, 5}});
  CHECK(cyclic_covering(BlockFamily::standard(2, 2), TypeVector({1, 1})).edges == std::vector<Edge>{{0, 2}, {1, 3}});

  SUBCASE("valid and typed for every type up to k=9") {
    for (int k = 2; k <= 9; ++k) {
      for (int l = 2; l <= k; ++l) {
        auto fam = BlockFamily::standard(k, l);
        for (const auto& a : enumerate_types(k, l)) {
          auto c = cyclic_covering(fam, a);
          CHECK(is_covering(c, fam));
          for (const auto& e : c.edges) CHECK(type_of(e, fam) == a);
        }
      }
    }
  }
  SUBCASE("non-contiguous blocks") {
    BlockFamily fam({{1, 5, 9}, {0, 2, 4}});
    auto c = cyclic_covering(fam, TypeVector({2, 1}));
    CHECK(is_covering(c, fam));
  }
}

TEST_CASE("enumerate_coverings") {
  CHECK(enumerate_coverings(BlockFamily::standard(3, 2), TypeVector({2, 1})).size() == 9);
  CHECK(enumerate_coverings(BlockFamily::standard(2, 2), TypeVector({1, 1})).size() == 2);
  CHECK_THROWS_AS(enumerate_coverings(BlockFamily::standard(7, 2), TypeVector({6, 1})), std::domain_error);

  for (int k = 2; k <= 6; ++k) {
    for (int l = 2; l <= k && k * l <= kCoveringGuard; ++l) {
      auto fam = BlockFamily::standard(k, l);
      for (const auto& a : enumerate_types(k, l)) {
        CAPTURE(k);
        CAPTURE(l);
        auto covs = enumerate_coverings(fam, a);
        REQUIRE_FALSE(covs.empty());
        CHECK(std::is_sorted(covs.begin(), covs.end()));
        for (const auto& c : covs) {
          CHECK(is_covering(c, fam));
          for (const auto& e : c.edges) CHECK(type_of(e, fam) == a);
        }
        CHECK(std::binary_search(covs.begin(), covs.end(), cyclic_covering(fam, a)));

        auto brute = testing::brute_coverings(k, l, {a.parts().begin(), a.parts().end()});
        CHECK(brute.size() == covs.size());
      }
    }
  }
}

TEST_CASE("incidence_stats") {
  auto s32 = incidence_stats(BlockFamily::standard(3, 2), TypeVector({2, 1}));
  CHECK(s32.g_a == 18);
  CHECK(s32.c_a == 9);
  CHECK(s32.per_edge == 1);
  CHECK(s32.consistent());
  CHECK(s32.eta == 9);

  auto s22 = incidence_stats(BlockFamily::standard(2, 2), TypeVector({1, 1}));
  CHECK(s22.per_edge == 1);
  CHECK(s22.consistent());

  auto s33 = incidence_stats(BlockFamily::standard(3, 3), TypeVector({1, 1, 1}));
  CHECK(s33.g_a == 27);
  CHECK(s33.c_a == 36);
  CHECK(s33.per_edge == 4);
  CHECK(s33.consistent());

  for (int k = 2; k <= 6; ++k)
    for (int l = 2; l <= k && k * l <= kCoveringGuard; ++l)
      for (const auto& a : enumerate_types(k, l)) CHECK(incidence_stats(BlockFamily::standard(k, l), a).consistent());
}
