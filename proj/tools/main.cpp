#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "region_spec.hpp"
#include "ribbonry/enumerate.hpp"
#include "ribbonry/errors.hpp"
#include "ribbonry/formulas.hpp"
#include "ribbonry/json_io.hpp"
#include "ribbonry/render.hpp"
#include "ribbonry/sheffield.hpp"
#include "verify.hpp"

using namespace ribbonry;
using namespace ribbonry::cli;

namespace {

struct Config {
  RegionSpec region;
  std::optional<int> n;
  std::uint64_t seed = 0;
  std::string format;
  int threads = 1;
  std::optional<std::size_t> memo_limit;
  std::size_t free_edge_limit = kDefaultFreeEdgeLimit;
  std::string border = "omit";
  std::string input;
  std::string suite;
  std::string table;
  int max = 20;
  std::optional<long long> limit;
  int cell_size = 24;
};

// Usage errors map to exit code 2.
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_region_flags(CLI::App* cmd, Config& c) {
  cmd->add_option("--rect", c.region.rect, "Rectangle ROWSxCOLS");
  cmd->add_option("--aztec", c.region.aztec, "Generalized Aztec diamond N=..,n=..,k=..");
  cmd->add_option("--stair", c.region.stair, "Stair M=..,n=..");
  cmd->add_option("--grid", c.region.grid, "Grid file ('#' cell, '.' empty, last line is y=0; '-' for stdin)");
  cmd->add_option("--n", c.n, "Ribbon length (defaults to n of --aztec/--stair)")->check(CLI::PositiveNumber);
}

void add_count_flags(CLI::App* cmd, Config& c) {
  cmd->add_option("--threads", c.threads, "Counting threads")->check(CLI::PositiveNumber);
  cmd->add_option("--memo-limit", c.memo_limit, "Memo table cap in bytes (default: $RIBBONRY_MEMO_LIMIT or 2 GiB)");
}

CountOptions counting(const Config& c) {
  CountOptions o;
  o.threads = c.threads;
  o.memo_limit_bytes = c.memo_limit ? *c.memo_limit : memo_limit_from_env(o.memo_limit_bytes);
  return o;
}

BorderMode border_mode(const Config& c) { return c.border == "include" ? BorderMode::include : BorderMode::omit; }

struct Target {
  ResolvedRegion region;
  int n;
};

Target target(const Config& c) {
  ResolvedRegion r = resolve(c.region);
  const std::optional<int> n = c.n ? c.n : r.implied_n;
  if (!n) throw Usage("--n is required for this region");
  return {std::move(r), *n};
}

std::string read_input(const std::string& path) {
  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Usage("cannot read '" + path + "'");
    text << in.rdbuf();
  }
  return text.str();
}

// Accepts a tiling object or JSON lines (the first non-empty line is used).
Tiling read_tiling(const std::string& path) {
  const std::string text = read_input(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw Usage(std::string("input is not a JSON tiling: ") + e.what());
    }
  }
  Tiling t = tiling_from_json(j);
  if (t.tiles.empty()) throw InvalidArgument("tiling has no tiles");
  region_of(t);  // rejects overlaps
  return t;
}

void emit_tiling(const Tiling& t, const std::string& format, int cell_size) {
  if (format == "svg") {
    std::cout << render_svg(t, cell_size);
  } else if (format == "text") {
    std::cout << render_ascii(t);
  } else {
    std::cout << to_json(t).dump() << '\n';
  }
}

int cmd_count(const Config& c) {
  const Target t = target(c);
  const BigCount count = count_tilings(t.region.region, t.n, counting(c));
  const int area = t.region.region.area();
  Json out{{"count", count_json(count)}, {"tiles", nullptr}, {"entropy", nullptr}};
  if (count > 0) {
    out["tiles"] = area / t.n;
    out["entropy"] = entropy_from_count(count, area, t.n);
  }
  if (c.format == "text") {
    std::cout << count.str() << " tilings of " << t.region.name << " by " << t.n << "-ribbons";
    if (count > 0) std::cout << ", " << area / t.n << " tiles, entropy " << out["entropy"].get<double>();
    std::cout << '\n';
  } else {
    std::cout << out.dump() << '\n';
  }
  return 0;
}

int cmd_enumerate(const Config& c) {
  const Target t = target(c);
  long long emitted = 0;
  enumerate_tilings(t.region.region, t.n, [&](const Tiling& tiling) {
    if (c.limit && emitted >= *c.limit) return false;
    if (c.format == "text") {
      if (emitted > 0) std::cout << '\n';
      std::cout << render_ascii(tiling);
    } else {
      std::cout << to_json(tiling).dump() << '\n';
    }
    ++emitted;
    return true;
  });
  return 0;
}

int cmd_sample(const Config& c) {
  const Target t = target(c);
  emit_tiling(sample_tiling(t.region.region, t.n, c.seed), c.format, c.cell_size);
  return 0;
}

int cmd_render(const Config& c) {
  emit_tiling(read_tiling(c.input), c.format.empty() ? "svg" : c.format, c.cell_size);
  return 0;
}

int cmd_graph(const Config& c) {
  const Target t = target(c);
  const SGraph g = build_graph(t.region.region, t.n, border_mode(c));
  if (c.format == "dot") {
    std::cout << to_dot(g);
  } else {
    Json j = to_json(g);
    if (!g.border.empty()) {
      Json border = Json::array();
      for (const Tile& tile : g.border) border.push_back(to_json(tile));
      j["border_tiles"] = border;
    }
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const Config& c) {
  VerifyOptions o;
  o.counting = counting(c);
  o.free_edge_limit = c.free_edge_limit;
  o.border = border_mode(c);
  if (c.region.given()) {
    const Target t = target(c);
    o.region = t.region.region;
    o.region_name = t.region.name;
    o.n = t.n;
  }
  const Report r = verify_suite(c.suite, o);
  if (c.format == "text") {
    std::cout << to_text(r);
  } else {
    std::cout << to_json(r).dump(2) << '\n';
  }
  return r.ok() ? 0 : 1;
}

int cmd_table(const Config& c) {
  namespace F = ribbonry::formulas;
  Json rows = Json::array();
  if (c.table == "a-entropy") {
    const auto a = F::a_sequence_table(c.max);
    for (const auto& row : F::a_entropy_diagnostic(c.max))
      rows.push_back({{"n", row.n}, {"a_n", count_json(a[row.n])}, {"entropy", row.entropy}, {"asymptote", row.asymptote}});
  } else if (c.table == "bounds") {
    for (int n = 2; n <= c.max; ++n) {
      const auto b = F::entropy_bounds(n);
      rows.push_back({{"n", n},
                      {"general_upper", b.general_upper.value},
                      {"rect_lower", b.rect_lower.value},
                      {"rect_upper", b.rect_upper.value}});
    }
  } else if (c.table == "domino") {
    for (int h = 1; h <= c.max; ++h) rows.push_back({{"height", h}, {"entropy", F::domino_strip_entropy(h)}});
    rows.push_back({{"height", "limit"}, {"entropy", F::domino_rect_entropy()}});
  } else {
    for (int n = 1; n <= c.max; n += 2)
      rows.push_back({{"n", n}, {"stair_entropy_limit", F::stair_entropy_limit(n)}});
  }
  std::cout << Json{{"table", c.table}, {"rows", rows}}.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting, sampling and verification of ribbon tilings", "ribbonry"};
  app.require_subcommand(1);
  Config c;

  auto* count = app.add_subcommand("count", "Count tilings and report the per-tile entropy");
  add_region_flags(count, c);
  add_count_flags(count, c);
  count->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate", "Stream every tiling as JSON lines");
  add_region_flags(enumerate, c);
  enumerate->add_option("--limit", c.limit, "Stop after this many tilings")->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* sample = app.add_subcommand("sample", "Draw one uniformly random tiling");
  add_region_flags(sample, c);
  sample->add_option("--seed", c.seed, "Random seed");
  sample->add_option("--format", c.format, "json, text or svg")->check(CLI::IsMember({"json", "text", "svg"}));
  sample->add_option("--cell-size", c.cell_size, "SVG pixels per cell")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Render a tiling read from JSON");
  render->add_option("--in", c.input, "Tiling JSON file, '-' for stdin")->required();
  render->add_option("--format", c.format, "svg or text")->check(CLI::IsMember({"svg", "text"}));
  render->add_option("--cell-size", c.cell_size, "SVG pixels per cell")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("graph", "Export the Sheffield graph");
  add_region_flags(graph, c);
  graph->add_option("--format", c.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  graph->add_option("--border", c.border, "omit or include exterior tiles")->check(CLI::IsMember({"omit", "include"}));

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms, the bijection and the growth bounds");
  verify->add_option("suite", c.suite, "formulas, bijection, growth, stanley or all")
      ->required()
      ->check(CLI::IsMember({"formulas", "bijection", "growth", "stanley", "all"}));
  add_region_flags(verify, c);
  add_count_flags(verify, c);
  verify->add_option("--free-edge-limit", c.free_edge_limit, "Skip graphs with more free edges");
  verify->add_option("--border", c.border, "omit or include exterior tiles")->check(CLI::IsMember({"omit", "include"}));
  verify->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "Print closed-form diagnostic tables");
  table->add_option("name", c.table, "a-entropy, bounds, domino or stair")
      ->required()
      ->check(CLI::IsMember({"a-entropy", "bounds", "domino", "stair"}));
  table->add_option("--max", c.max, "Largest index")->check(CLI::Range(1, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(c);
    if (enumerate->parsed()) return cmd_enumerate(c);
    if (sample->parsed()) return cmd_sample(c);
    if (render->parsed()) return cmd_render(c);
    if (graph->parsed()) return cmd_graph(c);
    if (verify->parsed()) return cmd_verify(c);
    if (table->parsed()) return cmd_table(c);
  } catch (const Usage& e) {
    std::cerr << "ribbonry: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "ribbonry: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "ribbonry: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ribbonry: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
