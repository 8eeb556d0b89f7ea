#include "khg/coverings.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace khg {

TypeVector::TypeVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("type vector must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("type vector parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("type vector parts must be non-increasing");
  }
}

TypeVector TypeVector::from_unordered(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return TypeVector(std::move(parts));
}

int TypeVector::total() const noexcept {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

BlockFamily::BlockFamily(std::vector<Edge> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block family needs at least one block");
  k_ = static_cast<int>(blocks.front().size());
  for (auto& b : blocks) {
    if (static_cast<int>(b.size()) != k_) throw std::invalid_argument("blocks must all have the same size");
    std::sort(b.begin(), b.end());
    ground_.insert(ground_.end(), b.begin(), b.end());
  }
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
    throw std::invalid_argument("blocks must be pairwise disjoint");
  }
  if (!ground_.empty() && ground_.front() < 0) throw std::invalid_argument("negative vertex in block");
  blocks_ = std::move(blocks);
}

BlockFamily BlockFamily::standard(int k, int l) {
  std::vector<Edge> blocks;
  for (int i = 0; i < l; ++i) {
    Edge b;
    for (int j = 0; j < k; ++j) b.push_back(i * k + j);
    blocks.push_back(std::move(b));
  }
  return BlockFamily(std::move(blocks));
}

namespace {

void require_kl(int k, int l) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2, got " + std::to_string(k));
  if (l < 2 || l > k) {
    throw std::invalid_argument("need 2 <= l <= k, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  }
}

void require_type(const BlockFamily& fam, const TypeVector& a) {
  if (a.length() != fam.l() || a.total() != fam.k()) {
    throw std::invalid_argument("type vector does not belong to A(k,l) for this block family");
  }
}

void partitions(int remaining, int slots, int cap, std::vector<int>& cur, std::vector<TypeVector>& out) {
  if (slots == 0) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  // Each remaining slot needs at least 1.
  for (int p = std::min(cap, remaining - (slots - 1)); p >= 1; --p) {
    if (p * slots < remaining) break;
    cur.push_back(p);
    partitions(remaining - p, slots - 1, p, cur, out);
    cur.pop_back();
  }
}

// Calls visit(edge) for every k-subset of `ground` in lexicographic order.
template <typename Visit>
void for_each_subset(const std::vector<Vertex>& ground, int k, Visit&& visit) {
  const int n = static_cast<int>(ground.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  Edge e(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = ground[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    visit(e);
    int i = k;
    while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Block intersection sizes, unsorted; 0 entries mean the block is missed.
std::vector<int> profile(const Edge& e, const BlockFamily& fam) {
  std::vector<int> sizes(static_cast<std::size_t>(fam.l()), 0);
  for (Vertex v : e) {
    bool found = false;
    for (int j = 0; j < fam.l(); ++j) {
      const auto& b = fam.blocks()[static_cast<std::size_t>(j)];
      if (std::binary_search(b.begin(), b.end(), v)) {
        ++sizes[static_cast<std::size_t>(j)];
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the block family");
  }
  return sizes;
}

bool meets_all(const std::vector<int>& sizes) {
  return std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
}

}  // namespace

std::vector<TypeVector> enumerate_types(int k, int l) {
  require_kl(k, l);
  std::vector<TypeVector> out;
  std::vector<int> cur;
  partitions(k, l, k, cur, out);
  return out;
}

TypeVector type_of(const Edge& e, const BlockFamily& fam) {
  auto sizes = profile(e, fam);
  if (!meets_all(sizes)) throw std::invalid_argument("k-set misses a block and has no type");
  return TypeVector::from_unordered(std::move(sizes));
}

BigInt count_G(int k, int l) {
  require_kl(k, l);
  BigInt sum = 0;
  for (int i = 0; i < l; ++i) {
    BigInt term = binomial(l, i) * binomial(static_cast<long>(k) * (l - i), k);
    sum += (i % 2 == 0) ? term : BigInt(-term);
  }
  if (sum <= 0) throw std::logic_error("count_G: non-positive inclusion-exclusion sum");
  return sum;
}

std::vector<Edge> enumerate_G(const BlockFamily& fam) {
  require_kl(fam.k(), fam.l());
  std::vector<Edge> out;
  for_each_subset(fam.ground(), fam.k(), [&](const Edge& e) {
    if (meets_all(profile(e, fam))) out.push_back(e);
  });
  return out;
}

std::vector<Edge> enumerate_G_a(const BlockFamily& fam, const TypeVector& a) {
  require_kl(fam.k(), fam.l());
  require_type(fam, a);
  std::vector<Edge> out;
  for_each_subset(fam.ground(), fam.k(), [&](const Edge& e) {
    auto sizes = profile(e, fam);
    if (!meets_all(sizes)) return;
    if (TypeVector::from_unordered(std::move(sizes)) == a) out.push_back(e);
  });
  return out;
}

BigInt count_G_a_closed(int k, int l, const TypeVector& a) {
  require_kl(k, l);
  if (a.length() != l || a.total() != k) throw std::invalid_argument("type vector does not belong to A(k,l)");
  // l! / prod(multiplicity!) distinct placements of the parts onto blocks.
  BigInt arrangements = 1;
  for (int i = 2; i <= l; ++i) arrangements *= i;
  auto parts = a.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t f = 2; f <= j - i; ++f) arrangements /= static_cast<long>(f);
    i = j;
  }
  BigInt product = 1;
  for (int p : parts) product *= binomial(k, p);
  return arrangements * product;
}

bool is_covering(const Covering& c, const BlockFamily& fam) {
  if (static_cast<int>(c.edges.size()) != fam.l()) return false;
  std::vector<Vertex> all;
  for (const auto& e : c.edges) {
    if (static_cast<int>(e.size()) != fam.k()) return false;
    for (const auto& b : fam.blocks()) {
      if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return std::binary_search(b.begin(), b.end(), v); })) {
        return false;
      }
    }
    all.insert(all.end(), e.begin(), e.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all == fam.ground();
}

Covering cyclic_covering(const BlockFamily& fam, const TypeVector& a) {
  require_kl(fam.k(), fam.l());
  require_type(fam, a);
  const int l = fam.l();
  std::vector<std::size_t> next(static_cast<std::size_t>(l), 0);
  Covering c;
  for (int i = 0; i < l; ++i) {
    Edge e;
    for (int j = 0; j < l; ++j) {
      const auto& block = fam.blocks()[static_cast<std::size_t>(j)];
      const int take = a.parts()[static_cast<std::size_t>((j + i) % l)];
      for (int t = 0; t < take; ++t) e.push_back(block[next[static_cast<std::size_t>(j)]++]);
    }
    std::sort(e.begin(), e.end());
    c.edges.push_back(std::move(e));
  }
  std::sort(c.edges.begin(), c.edges.end());
  if (!is_covering(c, fam) || std::any_of(c.edges.begin(), c.edges.end(),
                                          [&](const Edge& e) { return type_of(e, fam) != a; })) {
    throw std::logic_error("cyclic_covering produced an invalid covering");
  }
  return c;
}

namespace {

struct CoverSearch {
  std::vector<VertexMask> members;  // G_a as masks, lexicographic order
  std::vector<Edge> edges;
  VertexMask full = 0;
  std::vector<std::size_t> chosen;
  std::vector<Covering> out;

  void walk(VertexMask covered) {
    if (covered == full) {
      Covering c;
      for (std::size_t i : chosen) c.edges.push_back(edges[i]);
      out.push_back(std::move(c));
      return;
    }
    const VertexMask lowest = (~covered & full) & (~(~covered & full) + 1);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!(members[i] & lowest) || (members[i] & covered)) continue;
      chosen.push_back(i);
      walk(covered | members[i]);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<Covering> enumerate_coverings(const BlockFamily& fam, const TypeVector& a) {
  require_kl(fam.k(), fam.l());
  require_type(fam, a);
  if (fam.k() * fam.l() > kCoveringGuard) {
    throw std::domain_error("enumerate_coverings: l*k = " + std::to_string(fam.k() * fam.l()) + " exceeds 12");
  }
  if (fam.ground().back() >= kMaskLimit) throw std::domain_error("enumerate_coverings: vertex labels must be < 64");
  CoverSearch s;
  s.edges = enumerate_G_a(fam, a);
  for (const auto& e : s.edges) s.members.push_back(to_mask(e));
  s.full = to_mask(fam.ground());
  s.walk(0);
  // Members are picked in order of their lowest vertex, which is also sorted
  // order, so each covering comes out sorted and exactly once.
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

IncidenceStats incidence_stats(const BlockFamily& fam, const TypeVector& a) {
  const auto g_a = enumerate_G_a(fam, a);
  const auto coverings = enumerate_coverings(fam, a);
  std::map<Edge, std::uint64_t> through;
  for (const auto& e : g_a) through[e] = 0;
  for (const auto& c : coverings)
    for (const auto& e : c.edges) ++through.at(e);

  IncidenceStats st;
  st.g_a = g_a.size();
  st.c_a = coverings.size();
  const std::uint64_t incidences = st.c_a * static_cast<std::uint64_t>(fam.l());
  st.per_edge_integral = st.g_a > 0 && incidences % st.g_a == 0;
  st.per_edge = st.g_a > 0 ? incidences / st.g_a : 0;
  if (!through.empty()) {
    auto [lo, hi] = std::minmax_element(through.begin(), through.end(),
                                        [](const auto& x, const auto& y) { return x.second < y.second; });
    st.direct_min = lo->second;
    st.direct_max = hi->second;
  }
  st.eta = count_G(fam.k(), fam.l()) / fam.l();
  return st;
}

}  // namespace khg
