#include "khg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "khg/construction.hpp"
#include "khg/coverings.hpp"
#include "khg/formulas.hpp"
#include "khg/hypergraph.hpp"
#include "khg/matching.hpp"
#include "khg/search.hpp"

namespace khg::cli {

namespace {

using nlohmann::json;

// Thrown by handlers for domain/verification failures (exit 1).
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string str(const BigInt& v) { return v.str(); }

json matching_json(const Matching& pm) {
  json blocks = json::array();
  for (const auto& b : pm.blocks()) {
    json e = json::array();
    for (Vertex v : b) e.push_back(v + 1);
    blocks.push_back(e);
  }
  return blocks;
}

std::string matching_text(const Matching& pm) {
  std::string s;
  for (std::size_t i = 0; i < pm.size(); ++i) {
    if (i) s += " / ";
    s += format_edge(pm.blocks()[i]);
  }
  return s;
}

json edge_json(const Edge& e) {
  json j = json::array();
  for (Vertex v : e) j.push_back(v + 1);
  return j;
}

int cmd_formula(Context& ctx, int k, int m, bool both) {
  const auto theorem = f_theorem(k, m).value;
  if (!both) {
    if (ctx.json) {
      ctx.out << json{{"k", k}, {"m", m}, {"f", str(theorem)}}.dump() << "\n";
    } else {
      ctx.out << theorem << "\n";
    }
    return kExitOk;
  }
  const auto telescoped = f_telescoped(k, m).value;
  const bool equal = theorem == telescoped;
  if (ctx.json) {
    ctx.out << json{{"k", k}, {"m", m}, {"theorem", str(theorem)}, {"telescoped", str(telescoped)}, {"equal", equal}}.dump()
            << "\n";
  } else {
    ctx.out << "theorem    " << theorem << "\ntelescoped " << telescoped << "\n";
  }
  if (!equal) throw Failure("theorem and telescoped values differ");
  return kExitOk;
}

int cmd_coeff(Context& ctx, int k, int l) {
  const auto b = coeff_b(k, l).value;
  if (ctx.json) {
    ctx.out << json{{"k", k}, {"l", l}, {"b", str(b)}}.dump() << "\n";
  } else {
    ctx.out << b << "\n";
  }
  return kExitOk;
}

int cmd_construct(Context& ctx, int k, int m, const std::string& path) {
  auto w = build_extremal(k, m);
  if (!path.empty()) write_khg_file(path, w.graph);
  if (ctx.json) {
    json j{{"k", k}, {"m", m}, {"edges", w.graph.size()}};
    if (path.empty()) {
      j["khg"] = to_khg(w.graph);
    } else {
      j["path"] = path;
    }
    ctx.out << j.dump() << "\n";
  } else if (path.empty()) {
    ctx.out << to_khg(w.graph);
  } else {
    ctx.out << "edges " << w.graph.size() << "\n";
  }
  return kExitOk;
}

int cmd_count(Context& ctx, const std::string& path, std::uint64_t cap) {
  const auto h = read_khg_file(path);
  const auto c = count_perfect_matchings(h, cap);
  if (ctx.json) {
    ctx.out << json{{"count", c.value}, {"capped", c.capped}}.dump() << "\n";
  } else {
    ctx.out << c.value << (c.capped ? " (capped)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_verify_unique(Context& ctx, const std::string& path) {
  const auto h = read_khg_file(path);
  const auto found = enumerate_perfect_matchings(h, 2);
  if (found.size() == 1) {
    if (ctx.json) {
      ctx.out << json{{"unique", true}, {"matching", matching_json(found.front())}}.dump() << "\n";
    } else {
      ctx.out << matching_text(found.front()) << "\n";
    }
    return kExitOk;
  }
  if (ctx.json) {
    json j{{"unique", false}, {"reason", found.empty() ? "none" : "multiple"}};
    json witnesses = json::array();
    for (const auto& pm : found) witnesses.push_back(matching_json(pm));
    j["witnesses"] = witnesses;
    ctx.out << j.dump() << "\n";
  }
  if (found.empty()) {
    ctx.err << "no perfect matching\n";
  } else {
    ctx.err << "multiple perfect matchings, e.g.\n  " << matching_text(found[0]) << "\n  " << matching_text(found[1]) << "\n";
  }
  return kExitFailure;
}

int cmd_stratify(Context& ctx, const std::string& path) {
  const auto h = read_khg_file(path);
  const auto pm = unique_perfect_matching(h);
  if (!pm) throw Failure("the hypergraph does not have a unique perfect matching");
  const auto s = stratify(h, *pm);
  const int k = h.uniformity();
  const int m = static_cast<int>(pm->size());
  if (ctx.json) {
    json rows = json::array();
    for (int l = 1; l <= k; ++l) {
      const BigInt bound = l == 1 ? BigInt(m) : coeff_b(k, l).value * binomial(m, l);
      rows.push_back({{"l", l}, {"count", s.at_level(l)}, {"bound", str(bound)}});
    }
    ctx.out << json{{"k", k}, {"m", m}, {"levels", rows}}.dump() << "\n";
    return kExitOk;
  }
  ctx.out << std::setw(3) << "l" << std::setw(12) << "|B_l|" << std::setw(14) << "b*C(m,l)" << "\n";
  for (int l = 1; l <= k; ++l) {
    const BigInt bound = l == 1 ? BigInt(m) : coeff_b(k, l).value * binomial(m, l);
    ctx.out << std::setw(3) << l << std::setw(12) << s.at_level(l) << std::setw(14) << bound << "\n";
  }
  return kExitOk;
}

std::vector<int> parse_type(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--type", "expected comma-separated integers, got '" + text + "'");
    }
  }
  return parts;
}

int cmd_coverings(Context& ctx, int k, int l, const std::string& type_text) {
  auto parts = parse_type(type_text);
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    ctx.err << "warning: type parts reordered to non-increasing order\n";
  }
  const auto a = TypeVector::from_unordered(std::move(parts));
  if (a.length() != l || a.total() != k) {
    throw Failure("type must have " + std::to_string(l) + " parts summing to " + std::to_string(k));
  }
  const auto fam = BlockFamily::standard(k, l);
  const auto stats = incidence_stats(fam, a);
  const auto cyc = cyclic_covering(fam, a);
  if (ctx.json) {
    json cover = json::array();
    for (const auto& e : cyc.edges) cover.push_back(edge_json(e));
    ctx.out << json{{"k", k},
                    {"l", l},
                    {"type", std::vector<int>(a.parts().begin(), a.parts().end())},
                    {"g_a", stats.g_a},
                    {"c_a", stats.c_a},
                    {"per_edge", stats.per_edge},
                    {"uniform", stats.uniform()},
                    {"consistent", stats.consistent()},
                    {"cyclic_covering", cover}}
                       .dump()
            << "\n";
  } else {
    ctx.out << "g_a       " << stats.g_a << "\n"
            << "c_a       " << stats.c_a << "\n"
            << "per_edge  " << stats.per_edge << (stats.uniform() ? "" : " (NOT uniform)") << "\n"
            << "cyclic    ";
    for (std::size_t i = 0; i < cyc.edges.size(); ++i) ctx.out << (i ? " / " : "") << format_edge(cyc.edges[i]);
    ctx.out << "\n";
  }
  if (!stats.consistent()) throw Failure("per-edge covering incidence is not uniform");
  return kExitOk;
}

int cmd_search(Context& ctx, int k, int m, const std::string& report_path, bool force, unsigned workers,
               std::uint64_t samples, std::uint64_t seed) {
  SearchReport r = samples > 0 ? randomized_max(k, m, seed, samples) : exhaustive_max(k, m, {force, workers});
  if (!report_path.empty()) write_report(report_path, r);
  const BigInt bound = f_theorem(k, m).value;
  if (ctx.json) {
    ctx.out << to_json(r).dump() << "\n";
  } else {
    ctx.out << "mode      " << (r.mode == SearchMode::exhaustive ? "exhaustive" : "randomized") << "\n"
            << "examined  " << r.examined << "\n"
            << "max_edges " << r.max_edges << "\n"
            << "f(k,m)    " << bound << "\n"
            << "extremal  " << r.extremal_canonical.size() << " non-isomorphic\n"
            << "time_ms   " << r.duration_ms << "\n";
  }
  if (r.mode == SearchMode::exhaustive && BigInt(r.max_edges) != bound) {
    throw Failure("exhaustive maximum differs from f(k,m)");
  }
  if (BigInt(r.max_edges) > bound) throw Failure("found a unique-PM hypergraph with more than f(k,m) edges");
  return kExitOk;
}

int cmd_swap_variants(Context& ctx, int k, const std::string& dir) {
  const auto variants = complement_swap_variants(k);
  const auto base = build_extremal(k, 2).graph;
  const bool can_compare = base.order() <= kCanonicalMaxOrder;
  const auto base_form = can_compare ? canonical_form(base) : CanonicalForm{};
  if (!dir.empty()) std::filesystem::create_directories(dir);

  json rows = json::array();
  for (std::size_t i = 0; i < variants.size(); ++i) {
    const auto& v = variants[i];
    std::string file;
    if (!dir.empty()) {
      std::ostringstream name;
      name << "variant_" << std::setw(2) << std::setfill('0') << i + 1 << ".khg";
      file = (std::filesystem::path(dir) / name.str()).string();
      write_khg_file(file, v.graph);
    }
    json iso = can_compare ? json(canonical_form(v.graph) != base_form) : json(nullptr);
    if (ctx.json) {
      json row{{"removed", edge_json(v.removed)}, {"added", edge_json(v.added)}, {"edges", v.graph.size()},
               {"non_isomorphic", iso}};
      if (!file.empty()) row["path"] = file;
      rows.push_back(row);
    } else {
      ctx.out << "-{" << format_edge(v.removed) << "} +{" << format_edge(v.added) << "}  edges " << v.graph.size()
              << "  non-isomorphic " << (iso.is_null() ? "unknown" : (iso.get<bool>() ? "yes" : "no"));
      if (!file.empty()) ctx.out << "  " << file;
      ctx.out << "\n";
    }
  }
  if (ctx.json) ctx.out << json{{"k", k}, {"variants", rows}}.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal k-uniform hypergraphs with a unique perfect matching", "khg"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Machine-readable JSON output");

  int k = 0;
  int m = 0;
  int l = 0;
  bool both = false;
  bool force = false;
  unsigned workers = 0;
  std::uint64_t cap = kUnbounded;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::string path;
  std::string output;
  std::string type_text;

  auto* formula = app.add_subcommand("formula", "Print f(k,m)");
  formula->add_option("--k", k, "Uniformity")->required()->check(CLI::Range(2, 1 << 20));
  formula->add_option("--m", m, "Matching size")->required()->check(CLI::Range(1, 1 << 20));
  formula->add_flag("--both", both, "Also evaluate the telescoped form and compare");

  auto* coeff = app.add_subcommand("coeff", "Print b(k,l)");
  coeff->add_option("--k", k)->required()->check(CLI::Range(2, 1 << 20));
  coeff->add_option("--l", l)->required()->check(CLI::Range(1, 1 << 20));

  auto* construct = app.add_subcommand("construct", "Build the extremal hypergraph");
  construct->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  construct->add_option("--m", m)->required()->check(CLI::Range(1, 64));
  construct->add_option("-o,--output", output, "Write .khg here instead of stdout");

  auto* count = app.add_subcommand("count", "Count perfect matchings of a .khg file");
  count->add_option("file", path)->required();
  count->add_option("--cap", cap, "Stop counting at this value")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-unique", "Check that a .khg file has exactly one perfect matching");
  verify->add_option("file", path)->required();

  auto* strat = app.add_subcommand("stratify", "Edges by number of matching blocks met");
  strat->add_option("file", path)->required();

  auto* cover = app.add_subcommand("coverings", "Covering counts for one type vector");
  cover->add_option("--k", k)->required()->check(CLI::Range(2, 12));
  cover->add_option("--l", l)->required()->check(CLI::Range(2, 12));
  cover->add_option("--type", type_text, "Comma-separated parts, e.g. 2,1")->required();

  auto* search = app.add_subcommand("search", "Exhaustive maximum over unique-PM hypergraphs");
  search->add_option("--k", k)->required()->check(CLI::Range(2, 8));
  search->add_option("--m", m)->required()->check(CLI::Range(1, 8));
  search->add_option("--report", output, "Write the JSON search report here");
  search->add_flag("--force", force, "Allow (k,m) outside the default guard; may run for a very long time");
  search->add_option("--workers", workers, "Worker threads (default: all cores)");
  search->add_option("--random", samples, "Randomized mode with this many samples");
  search->add_option("--seed", seed, "Seed for randomized mode");

  auto* swap = app.add_subcommand("swap-variants", "Complement-swap variants of the m=2 extremal graph");
  swap->add_option("--k", k)->required()->check(CLI::Range(2, 32));
  swap->add_option("-o,--output", output, "Directory for the variant .khg files");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (formula->parsed()) return cmd_formula(ctx, k, m, both);
    if (coeff->parsed()) return cmd_coeff(ctx, k, l);
    if (construct->parsed()) return cmd_construct(ctx, k, m, output);
    if (count->parsed()) return cmd_count(ctx, path, cap);
    if (verify->parsed()) return cmd_verify_unique(ctx, path);
    if (strat->parsed()) return cmd_stratify(ctx, path);
    if (cover->parsed()) return cmd_coverings(ctx, k, l, type_text);
    if (search->parsed()) return cmd_search(ctx, k, m, output, force, workers, samples, seed);
    if (swap->parsed()) return cmd_swap_variants(ctx, k, output);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace khg::cli
