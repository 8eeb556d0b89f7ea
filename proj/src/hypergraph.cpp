#include "khg/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace khg {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

VertexMask to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= VertexMask{1} << v;
  return m;
}

namespace {

std::string edge_repr(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges) : n_(n), k_(k) {
  if (k < 2) throw HypergraphError("uniformity must be at least 2, got " + std::to_string(k));
  if (n < 0) throw HypergraphError("vertex count must be non-negative");
  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != k) {
      throw HypergraphError("edge " + edge_repr(e) + " has " + std::to_string(e.size()) +
                            " vertices, expected " + std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw HypergraphError("edge " + edge_repr(e) + " repeats a vertex");
    }
    if (e.front() < 0 || e.back() >= n) {
      throw HypergraphError("edge " + edge_repr(e) + ": vertex out of range 0.." +
                            std::to_string(n - 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  if (has_masks()) {
    masks_.reserve(edges_.size());
    for (const auto& e : edges_) masks_.push_back(to_mask(e));
  }
}

bool Hypergraph::contains(const Edge& e) const {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  return std::binary_search(edges_.begin(), edges_.end(), sorted);
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_)
    for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

Hypergraph Hypergraph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(std::move(e));
  return Hypergraph(n_, k_, std::move(edges));
}

Hypergraph Hypergraph::without_edge(const Edge& e) const {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  auto edges = edges_;
  std::erase(edges, sorted);
  return Hypergraph(n_, k_, std::move(edges));
}

Matching::Matching(std::vector<Edge> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::vector<Vertex> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw HypergraphError("matching blocks are not pairwise disjoint");
  }
  blocks_ = std::move(blocks);
}

bool Matching::is_perfect_for(int n) const {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)), false);
  int covered = 0;
  for (const auto& b : blocks_) {
    for (Vertex v : b) {
      if (v < 0 || v >= n) return false;
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  return covered == n;
}

InducedSub induced_sub(const Hypergraph& h, std::span<const Vertex> vs) {
  std::vector<Vertex> keep(vs.begin(), vs.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.order())) {
    throw HypergraphError("induced_sub: vertex out of range");
  }
  std::vector<Vertex> fresh(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) fresh[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      if (fresh[static_cast<std::size_t>(v)] < 0) break;
      mapped.push_back(fresh[static_cast<std::size_t>(v)]);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return {Hypergraph(static_cast<int>(keep.size()), h.uniformity(), std::move(edges)), std::move(keep)};
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != h.order()) throw HypergraphError("relabel: permutation has wrong length");
  std::vector<Vertex> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != static_cast<Vertex>(i)) throw HypergraphError("relabel: not a permutation");
  }
  std::vector<Edge> edges;
  edges.reserve(h.size());
  for (const auto& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(perm[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(h.order(), h.uniformity(), std::move(edges));
}

Stratification stratify(const Hypergraph& h, const Matching& pm) {
  if (!pm.is_perfect_for(h.order())) {
    throw HypergraphError("stratify: matching blocks do not partition the vertex set");
  }
  std::vector<int> block_of(static_cast<std::size_t>(h.order()), -1);
  for (std::size_t b = 0; b < pm.size(); ++b)
    for (Vertex v : pm.blocks()[b]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);

  Stratification s{std::vector<std::uint64_t>(static_cast<std::size_t>(h.uniformity()), 0)};
  std::vector<int> hit;
  for (const auto& e : h.edges()) {
    hit.clear();
    for (Vertex v : e) hit.push_back(block_of[static_cast<std::size_t>(v)]);
    std::sort(hit.begin(), hit.end());
    auto distinct = std::unique(hit.begin(), hit.end()) - hit.begin();
    ++s.counts[static_cast<std::size_t>(distinct - 1)];
  }
  return s;
}

Edge complement_edge(int n, const Edge& e) {
  if (n != 2 * static_cast<int>(e.size())) {
    throw HypergraphError("complement_edge: vertex count " + std::to_string(n) +
                          " is not twice the edge size " + std::to_string(e.size()));
  }
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Vertex v : e) {
    if (v < 0 || v >= n) throw HypergraphError("complement_edge: vertex out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  Edge out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  if (out.size() != e.size()) throw HypergraphError("complement_edge: edge repeats a vertex");
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse_khg(std::string_view text) {
  bool have_header = false;
  int n = 0;
  int k = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n k'");
      long nn = parse_int(tokens[0], line_no);
      long kk = parse_int(tokens[1], line_no);
      if (kk < 2) throw ParseError(line_no, "uniformity must be at least 2");
      if (nn < 0 || nn > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      n = static_cast<int>(nn);
      k = static_cast<int>(kk);
      have_header = true;
    } else {
      if (static_cast<int>(tokens.size()) != k) {
        throw ParseError(line_no, "expected " + std::to_string(k) + " vertices, got " +
                                      std::to_string(tokens.size()));
      }
      Edge e;
      for (auto tok : tokens) {
        long v = parse_int(tok, line_no);
        if (v < 1 || v > n) {
          throw ParseError(line_no, "vertex " + std::string(tok) + " out of range 1.." + std::to_string(n));
        }
        e.push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "edge repeats a vertex");
      edges.push_back(std::move(e));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing 'n k' header");
  return Hypergraph(n, k, std::move(edges));
}

std::string format_edge(const Edge& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(e[i] + 1);
  }
  return s;
}

std::string to_khg(const Hypergraph& h) {
  std::string out = std::to_string(h.order()) + " " + std::to_string(h.uniformity()) + "\n";
  for (const auto& e : h.edges()) out += format_edge(e) + "\n";
  return out;
}

Hypergraph read_khg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_khg(buf.str());
}

void write_khg_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_khg(h);
}

}  // namespace khg
