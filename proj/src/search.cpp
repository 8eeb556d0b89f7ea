#include "khg/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "khg/construction.hpp"
#include "khg/matching.hpp"

namespace khg {

using nlohmann::json;

std::string CanonicalForm::to_string() const { return to_khg(graph()); }

CanonicalForm canonical_form(const Hypergraph& h) {
  const int n = h.order();
  const int k = h.uniformity();
  if (n > kCanonicalMaxOrder) {
    throw std::domain_error("canonical_form: n = " + std::to_string(n) + " exceeds 8");
  }
  // Each sorted edge packs into 4-bit digits, most significant first, so
  // numeric order on keys is lexicographic order on vertex lists.
  auto pack = [k](std::array<int, kCanonicalMaxOrder>& vs) {
    std::sort(vs.begin(), vs.begin() + k);
    std::uint32_t key = 0;
    for (int i = 0; i < k; ++i) key = (key << 4) | static_cast<std::uint32_t>(vs[static_cast<std::size_t>(i)]);
    return key;
  };

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> keys(h.size());
  std::array<int, kCanonicalMaxOrder> buf{};
  do {
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Edge& e = h.edge(i);
      for (int j = 0; j < k; ++j) buf[static_cast<std::size_t>(j)] = perm[static_cast<std::size_t>(e[static_cast<std::size_t>(j)])];
      keys[i] = pack(buf);
    }
    std::sort(keys.begin(), keys.end());
    if (best.empty() || keys < best) best = keys;
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalForm form{n, k, {}};
  for (std::uint32_t key : best) {
    Edge e(static_cast<std::size_t>(k));
    for (int j = k - 1; j >= 0; --j) {
      e[static_cast<std::size_t>(j)] = static_cast<Vertex>(key & 0xF);
      key >>= 4;
    }
    form.edges.push_back(std::move(e));
  }
  return form;
}

namespace {

const char* mode_name(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "randomized"; }

struct KSets {
  std::vector<VertexMask> matching;
  std::vector<VertexMask> others;
};

KSets split_ksets(int k, int m) {
  const int n = k * m;
  KSets out;
  std::vector<VertexMask> blocks;
  for (int i = 0; i < m; ++i) blocks.push_back(((VertexMask{1} << k) - 1) << (k * i));
  // Gosper's hack over n-bit words with k bits set, ascending.
  VertexMask x = (VertexMask{1} << k) - 1;
  const VertexMask limit = VertexMask{1} << n;
  while (x < limit) {
    if (std::find(blocks.begin(), blocks.end(), x) != blocks.end()) {
      out.matching.push_back(x);
    } else {
      out.others.push_back(x);
    }
    const VertexMask c = x & (~x + 1);
    const VertexMask r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

Edge mask_to_edge(VertexMask m) {
  Edge e;
  while (m) {
    e.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return e;
}

Hypergraph graph_from_masks(int n, int k, const std::vector<VertexMask>& masks) {
  std::vector<Edge> edges;
  edges.reserve(masks.size());
  for (VertexMask m : masks) edges.push_back(mask_to_edge(m));
  return Hypergraph(n, k, std::move(edges));
}

// Best edge count seen in a slice plus the distinct extremal forms.
struct Partial {
  std::uint64_t max_edges = 0;
  std::set<std::string> forms;

  void offer(std::uint64_t edges, const std::string& form) {
    if (edges < max_edges) return;
    if (edges > max_edges) {
      max_edges = edges;
      forms.clear();
    }
    forms.insert(form);
  }

  void merge(const Partial& other) {
    if (other.max_edges > max_edges) {
      max_edges = other.max_edges;
      forms = other.forms;
    } else if (other.max_edges == max_edges) {
      forms.insert(other.forms.begin(), other.forms.end());
    }
  }
};

void search_range(int k, int m, const KSets& sets, std::uint64_t begin, std::uint64_t end, Partial& out) {
  const int n = k * m;
  std::vector<std::vector<VertexMask>> by_min(static_cast<std::size_t>(n));
  std::vector<VertexMask> chosen;
  for (std::uint64_t subset = begin; subset < end; ++subset) {
    const std::uint64_t edges = static_cast<std::uint64_t>(std::popcount(subset)) + sets.matching.size();
    if (edges < out.max_edges) continue;

    for (auto& bucket : by_min) bucket.clear();
    chosen.clear();
    for (VertexMask b : sets.matching) chosen.push_back(b);
    for (std::uint64_t bits = subset; bits; bits &= bits - 1) chosen.push_back(sets.others[static_cast<std::size_t>(std::countr_zero(bits))]);
    for (VertexMask e : chosen) by_min[static_cast<std::size_t>(std::countr_zero(e))].push_back(e);

    if (detail::count_pm_masks(n, by_min, 2) != 1) continue;
    out.offer(edges, canonical_form(graph_from_masks(n, k, chosen)).to_string());
  }
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool exhaustive_allowed_by_default(int k, int m) {
  return (k == 2 && (m == 2 || m == 3)) || (k == 3 && m == 2);
}

SearchReport exhaustive_max(int k, int m, const SearchOptions& opts) {
  if (k < 2 || m < 1) throw std::domain_error("exhaustive_max: need k >= 2 and m >= 1");
  if (!opts.force && !exhaustive_allowed_by_default(k, m)) {
    throw std::domain_error("exhaustive_max: (k,m) = (" + std::to_string(k) + "," + std::to_string(m) +
                            ") is outside the default guard; pass force to run anyway");
  }
  if (k * m > kCanonicalMaxOrder) {
    throw std::domain_error("exhaustive_max: km must be at most 8 for canonical forms");
  }
  const auto start = std::chrono::steady_clock::now();
  const KSets sets = split_ksets(k, m);
  if (sets.others.size() > 40) throw std::domain_error("exhaustive_max: more than 2^40 subsets");
  const std::uint64_t total = std::uint64_t{1} << sets.others.size();

  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
  std::vector<Partial> partials(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    threads.emplace_back([&, lo, hi, w] { search_range(k, m, sets, lo, hi, partials[w]); });
  }
  for (auto& t : threads) t.join();

  Partial merged;
  for (const auto& p : partials) merged.merge(p);

  SearchReport r;
  r.k = k;
  r.m = m;
  r.mode = SearchMode::exhaustive;
  r.examined = total;
  r.max_edges = merged.max_edges;
  r.extremal_canonical.assign(merged.forms.begin(), merged.forms.end());
  r.duration_ms = elapsed_ms(start);
  return r;
}

SearchReport randomized_max(int k, int m, std::uint64_t seed, std::uint64_t samples) {
  if (k < 2 || m < 1) throw std::domain_error("randomized_max: need k >= 2 and m >= 1");
  if (k * m > kCanonicalMaxOrder) throw std::domain_error("randomized_max: km must be at most 8 for canonical forms");
  const auto start = std::chrono::steady_clock::now();
  const KSets sets = split_ksets(k, m);
  const int n = k * m;

  Partial best;
  best.offer(sets.matching.size(), canonical_form(graph_from_masks(n, k, sets.matching)).to_string());
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexMask>> by_min(static_cast<std::size_t>(n));
  std::vector<VertexMask> chosen;
  for (std::uint64_t s = 0; s < samples; ++s) {
    chosen = sets.matching;
    for (VertexMask e : sets.others)
      if (rng() & 1) chosen.push_back(e);
    for (auto& bucket : by_min) bucket.clear();
    for (VertexMask e : chosen) by_min[static_cast<std::size_t>(std::countr_zero(e))].push_back(e);
    if (chosen.size() < best.max_edges || detail::count_pm_masks(n, by_min, 2) != 1) continue;
    best.offer(chosen.size(), canonical_form(graph_from_masks(n, k, chosen)).to_string());
  }

  SearchReport r;
  r.k = k;
  r.m = m;
  r.mode = SearchMode::randomized;
  r.examined = samples;
  r.max_edges = best.max_edges;
  r.extremal_canonical.assign(best.forms.begin(), best.forms.end());
  r.seed = seed;
  r.duration_ms = elapsed_ms(start);
  return r;
}

json to_json(const SearchReport& r) {
  json j;
  j["format"] = SearchReport::kFormat;
  j["k"] = r.k;
  j["m"] = r.m;
  j["mode"] = mode_name(r.mode);
  j["examined"] = r.examined;
  j["max_edges"] = r.max_edges;
  j["extremal_canonical"] = r.extremal_canonical;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["duration_ms"] = r.duration_ms;
  return j;
}

SearchReport report_from_json(const json& j) {
  SearchReport r;
  try {
    if (j.at("format").get<int>() != SearchReport::kFormat) throw ReportError("unsupported report format");
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "exhaustive") {
      r.mode = SearchMode::exhaustive;
    } else if (mode == "randomized") {
      r.mode = SearchMode::randomized;
    } else {
      throw ReportError("unknown search mode '" + mode + "'");
    }
    r.examined = j.at("examined").get<std::uint64_t>();
    r.max_edges = j.at("max_edges").get<std::uint64_t>();
    r.extremal_canonical = j.at("extremal_canonical").get<std::vector<std::string>>();
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    r.duration_ms = j.at("duration_ms").get<std::int64_t>();
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }

  if (r.k < 2 || r.m < 1) throw ReportError("report has invalid k or m");
  if (r.extremal_canonical.empty()) throw ReportError("report lists no extremal hypergraphs");
  const BigInt bound = f_theorem(r.k, r.m).value;
  if (r.mode == SearchMode::exhaustive && BigInt(r.max_edges) != bound) {
    throw ReportError("exhaustive report max_edges differs from f(k,m)");
  }
  if (r.mode == SearchMode::randomized && BigInt(r.max_edges) > bound) {
    throw ReportError("randomized report max_edges exceeds f(k,m)");
  }
  for (const auto& text : r.extremal_canonical) {
    Hypergraph g = [&] {
      try {
        return parse_khg(text);
      } catch (const std::exception& e) {
        throw ReportError(std::string("bad extremal entry: ") + e.what());
      }
    }();
    if (g.order() != r.k * r.m || g.uniformity() != r.k || g.size() != r.max_edges) {
      throw ReportError("extremal entry does not match k, m and max_edges");
    }
    if (!unique_perfect_matching(g)) throw ReportError("extremal entry lacks a unique perfect matching");
  }
  return r;
}

void write_report(const std::filesystem::path& path, const SearchReport& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(r).dump(2) << "\n";
}

SearchReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ReportError(std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

Hypergraph sample_unique_pm(int k, int m, std::uint64_t seed, std::size_t deletions) {
  auto w = build_extremal(k, m);
  std::vector<Edge> others;
  for (const auto& e : w.graph.edges()) {
    const auto blocks = w.matching.blocks();
    if (std::find(blocks.begin(), blocks.end(), e) == blocks.end()) others.push_back(e);
  }
  if (deletions > others.size()) {
    throw std::invalid_argument("sample_unique_pm: " + std::to_string(deletions) + " deletions requested but only " +
                                std::to_string(others.size()) + " non-matching edges exist");
  }
  // Partial Fisher-Yates: the first `deletions` slots become the sample.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < deletions; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, others.size() - 1);
    std::swap(others[i], others[pick(rng)]);
  }
  std::vector<Edge> kept(others.begin() + static_cast<std::ptrdiff_t>(deletions), others.end());
  for (const auto& b : w.matching.blocks()) kept.push_back(b);
  return Hypergraph(k * m, k, std::move(kept));
}

bool LocalBoundReport::within_bounds() const {
  return std::all_of(rows.begin(), rows.end(), [](const LocalBoundRow& r) { return BigInt(r.count) <= r.bound; });
}

std::uint64_t LocalBoundReport::max_count(int l) const {
  std::uint64_t best = 0;
  for (const auto& r : rows)
    if (r.l == l) best = std::max(best, r.count);
  return best;
}

LocalBoundReport verify_local_bound(const Hypergraph& h, const Matching& pm) {
  auto unique = unique_perfect_matching(h);
  if (!unique || *unique != pm) {
    throw std::invalid_argument("verify_local_bound: the matching is not the unique perfect matching of the graph");
  }
  const int k = h.uniformity();
  const int m = static_cast<int>(pm.size());
  std::vector<int> block_of(static_cast<std::size_t>(h.order()), -1);
  for (int b = 0; b < m; ++b)
    for (Vertex v : pm.blocks()[static_cast<std::size_t>(b)]) block_of[static_cast<std::size_t>(v)] = b;

  // Every edge meeting exactly l blocks lies inside the union of those l
  // blocks, so tallying edges by their block set gives every row at once.
  std::map<std::vector<int>, std::uint64_t> by_blocks;
  for (const auto& e : h.edges()) {
    std::vector<int> hit;
    for (Vertex v : e) hit.push_back(block_of[static_cast<std::size_t>(v)]);
    std::sort(hit.begin(), hit.end());
    hit.erase(std::unique(hit.begin(), hit.end()), hit.end());
    ++by_blocks[hit];
  }

  LocalBoundReport report;
  for (int l = 2; l <= std::min(k, m); ++l) {
    const BigInt bound = coeff_b(k, l).value;
    std::vector<int> pick(static_cast<std::size_t>(l));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      auto it = by_blocks.find(pick);
      report.rows.push_back({l, pick, it == by_blocks.end() ? 0 : it->second, bound});
      int i = l;
      while (i > 0 && pick[static_cast<std::size_t>(i - 1)] == m - l + i - 1) --i;
      if (i == 0) break;
      ++pick[static_cast<std::size_t>(i - 1)];
      for (int j = i; j < l; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return report;
}

}  // namespace khg
