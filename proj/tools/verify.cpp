#include "verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "ribbonry/errors.hpp"
#include "ribbonry/formulas.hpp"

namespace ribbonry::cli {

namespace F = ribbonry::formulas;

int Report::count(Status s) const {
  int k = 0;
  for (const Check& c : checks) k += c.status == s;
  return k;
}

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

std::string rect_name(int rows, int cols, int n) {
  return std::to_string(rows) + "x" + std::to_string(cols) + "/n=" + std::to_string(n);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

// Runs `body`, turning resource limits into a skipped check.
void guarded(Report& r, Check c, const std::function<void(Check&)>& body) {
  try {
    body(c);
  } catch (const ResourceLimit& ex) {
    c.status = Status::skipped;
    c.note = ex.what();
  }
  r.checks.push_back(std::move(c));
}

void compare(Report& r, const std::string& name, const BigCount& expected, const std::string& source,
             const std::function<BigCount()>& actual) {
  guarded(r, Check{name, expected.str(), source, "", Status::pass, ""}, [&](Check& c) {
    const BigCount a = actual();
    c.actual = a.str();
    c.status = a == expected ? Status::pass : Status::fail;
  });
}

void formulas_suite(Report& r, const VerifyOptions& o) {
  auto count = [&](const Region& region, int n) { return [&o, region, n] { return count_tilings(region, n, o.counting); }; };
  for (int n = 2; n <= 5; ++n)
    for (int N = 1; N <= n + 1; ++N)
      compare(r, rect_name(n, N, n), F::rect_strip_count(n, N), "closed form", count(build_rectangle(n, N), n));
  for (int n = 1; n <= 4; ++n)
    compare(r, rect_name(n, 2 * n, n), F::a_sequence(n), "recurrence", count(build_rectangle(n, 2 * n), n));
  for (int N = 1; N <= 3; ++N)
    for (int n = 2; n <= 4; ++n)
      for (int k = 0; k <= n - 2; ++k)
        compare(r, "AD(" + std::to_string(N) + "," + std::to_string(n) + "," + std::to_string(k) + ")/n=" + std::to_string(n),
                F::aztec_count(N), "closed form", count(build_aztec(N, n, k), n));
  for (int k = 0; k <= 1; ++k)
    compare(r, "AD(4,3," + std::to_string(k) + ")/n=3", F::aztec_count(4), "closed form", count(build_aztec(4, 3, k), 3));
  for (int n : {3, 5, 7})
    for (int M = 1; M <= 8; ++M)
      compare(r, "St(" + std::to_string(M) + "," + std::to_string(n) + ")/n=" + std::to_string(n), F::stair_count(M, n),
              "closed form", count(build_stair(M, n), n));
  for (int n : {2, 4, 6})
    for (int M = 1; M <= 8; ++M)
      compare(r, "St(" + std::to_string(M) + "," + std::to_string(n) + ")/n=" + std::to_string(n), F::stair_count(M, n),
              "enumerator (half-length rectangle)", count(build_stair(M, n), n));
  for (int M = 1; M <= 30; ++M)
    compare(r, rect_name(2, M, 2), F::fibonacci(M + 1), "Fibonacci recurrence", count(build_rectangle(2, M), 2));

  // Finite-size convergence is reported, not judged.
  for (int M : {10, 20, 30}) {
    const double e = log2_big(count_tilings(build_rectangle(2, M), 2, o.counting)) / M;
    r.diagnostics.push_back({{"name", "2xM entropy at M=" + std::to_string(M)},
                             {"value", e},
                             {"limit", F::domino_strip_entropy(2)},
                             {"gap", std::abs(e - F::domino_strip_entropy(2))}});
  }
  for (int n : {2, 3, 4, 8}) {
    const auto b = F::entropy_bounds(n);
    r.diagnostics.push_back({{"name", "entropy bounds n=" + std::to_string(n)},
                             {"general_upper", b.general_upper.value},
                             {"rect_lower", b.rect_lower.value},
                             {"rect_upper", b.rect_upper.value}});
  }
}

void stanley_suite(Report& r, const VerifyOptions& o) {
  std::vector<std::pair<int, int>> sizes;
  for (int M = 1; M <= 4; ++M)
    for (int N = M; N <= 4; ++N) sizes.emplace_back(M, N);
  sizes.emplace_back(2, 5);
  for (auto [M, N] : sizes) {
    const std::string base = std::to_string(M) + "x" + std::to_string(N);
    const Region rect = build_rectangle(M, N);
    compare(r, base + "/variable", F::stanley_fib_count(M, N), "Fibonacci product",
            [&] { return count_variable(rect, o.counting); });
    const auto expect = F::stanley_minimal_count(M, N);
    guarded(r, Check{base + "/minimal", std::to_string(expect.tiles) + " tiles, " + expect.count.str() + " tilings",
                     "closed form", "", Status::pass, ""},
            [&](Check& c) {
              const auto got = count_minimal(rect);
              c.actual = std::to_string(got.min_tiles) + " tiles, " + got.count.str() + " tilings";
              c.status = got.min_tiles == expect.tiles && got.count == expect.count ? Status::pass : Status::fail;
            });
  }
}

struct Target {
  std::string name;
  Region region;
  int n;
  BorderMode border;
};

std::vector<Target> bijection_battery() {
  std::vector<Target> out;
  for (auto [m, k, n] : std::vector<std::tuple<int, int, int>>{
           {3, 3, 3}, {3, 4, 3}, {3, 6, 3}, {4, 4, 2}, {4, 5, 4}, {4, 8, 4}, {6, 6, 3}, {2, 6, 2}, {5, 4, 2}, {3, 7, 3}})
    out.push_back({rect_name(m, k, n), build_rectangle(m, k), n, BorderMode::omit});
  for (auto [N, n, k] : std::vector<std::tuple<int, int, int>>{
           {2, 2, 0}, {3, 2, 0}, {2, 3, 0}, {2, 3, 1}, {3, 3, 1}, {2, 4, 2}, {3, 4, 1}})
    out.push_back({"AD(" + std::to_string(N) + "," + std::to_string(n) + "," + std::to_string(k) + ")/n=" + std::to_string(n),
                   build_aztec(N, n, k), n, BorderMode::omit});
  for (auto [M, n] : std::vector<std::pair<int, int>>{{4, 3}, {7, 3}, {7, 5}, {8, 7}, {5, 4}, {6, 2}})
    out.push_back({"St(" + std::to_string(M) + "," + std::to_string(n) + ")/n=" + std::to_string(n), build_stair(M, n), n,
                   BorderMode::omit});
  for (auto [grid, n] : std::vector<std::pair<const char*, int>>{{"##..\n##..\n####\n####", 2},
                                                                  {"###...\n######\n######\n...###", 3},
                                                                  {"####....\n########\n########\n....####", 4},
                                                                  {".###.\n#####\n#####\n#####", 3},
                                                                  {"##....\n####..\n######\n######", 2}}) {
    std::string name = grid;
    for (char& ch : name)
      if (ch == '\n') ch = '/';
    out.push_back({name + "/n=" + std::to_string(n), parse_region(grid), n, BorderMode::include});
  }
  return out;
}

void bijection_suite(Report& r, const VerifyOptions& o) {
  std::vector<Target> targets;
  if (o.region) {
    targets.push_back({o.region_name + "/n=" + std::to_string(o.n), *o.region, o.n, o.border});
  } else {
    targets = bijection_battery();
  }
  for (const Target& t : targets) {
    guarded(r, Check{t.name, "", "enumerator", "", Status::pass, ""}, [&](Check& c) {
      c.expected = count_tilings(t.region, t.n, o.counting).str();
      if (c.expected == "0") {
        c.status = Status::skipped;
        c.note = "region is not tileable";
        return;
      }
      const auto rep = verify_bijection(t.region, t.n, o.free_edge_limit, t.border);
      c.actual = rep.orientations.str();
      c.status = rep.ok ? Status::pass : Status::fail;
      c.note = (t.border == BorderMode::include ? "with border vertices; " : "") + rep.detail;
    });
  }
}

void growth_suite(Report& r, const VerifyOptions& o) {
  std::vector<std::tuple<std::string, Region, int>> targets;
  if (o.region) {
    targets.emplace_back(o.region_name + "/n=" + std::to_string(o.n), *o.region, o.n);
  } else {
    for (auto [m, k, n] : std::vector<std::tuple<int, int, int>>{{3, 6, 3}, {3, 9, 3}, {4, 8, 4}})
      targets.emplace_back(rect_name(m, k, n), build_rectangle(m, k), n);
  }
  for (const auto& [name, region, n] : targets) {
    GrowthReport g;
    try {
      g = verify_growth_bounds(region, n, std::max<std::size_t>(o.free_edge_limit, 64));
    } catch (const ResourceLimit& ex) {
      r.checks.push_back({name, "", "growth lemma", "", Status::skipped, ex.what()});
      continue;
    }
    for (const auto& row : g.rows) {
      const std::string at = name + "/l=" + std::to_string(row.level);
      r.checks.push_back({at + " binomial", "g_l <= C(" + std::to_string(row.window_vertices) + "," +
                                                std::to_string(row.vertices_at_level) + ") = " + row.binomial_bound.str(),
                          "growth lemma", fmt(row.growth), row.within_binomial ? Status::pass : Status::fail, ""});
      if (row.exponential_applies)
        r.checks.push_back({at + " exponential", "g_l <= (en)^" + std::to_string(row.vertices_at_level) + " = " +
                                                     fmt(row.exponential_bound),
                            "growth lemma", fmt(row.growth), row.within_exponential ? Status::pass : Status::fail, ""});
    }
    r.diagnostics.push_back({{"name", name}, {"max_level", g.max_level}, {"widest", g.widest}, {"last_widest", g.last_widest}});
  }
}

}  // namespace

Report verify_suite(const std::string& suite, const VerifyOptions& options) {
  Report r;
  r.suite = suite;
  const bool all = suite == "all";
  if (!all && suite != "formulas" && suite != "bijection" && suite != "growth" && suite != "stanley")
    throw InvalidArgument("unknown suite '" + suite + "'");
  if (all || suite == "formulas") formulas_suite(r, options);
  if (all || suite == "bijection") bijection_suite(r, options);
  if (all || suite == "growth") growth_suite(r, options);
  if (all || suite == "stanley") stanley_suite(r, options);
  return r;
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json j{{"name", c.name}, {"expected", c.expected}, {"source", c.source}, {"actual", c.actual},
           {"status", status_name(c.status)}};
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return Json{{"suite", report.suite},
              {"passed", report.count(Status::pass)},
              {"failed", report.count(Status::fail)},
              {"skipped", report.count(Status::skipped)},
              {"checks", checks},
              {"diagnostics", report.diagnostics}};
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  for (const Check& c : report.checks) {
    os << status_name(c.status) << ' ' << c.name << ": expected " << c.expected << " (" << c.source << "), got "
       << c.actual;
    if (!c.note.empty() && c.status != Status::pass) os << " [" << c.note << ']';
    os << '\n';
  }
  for (const auto& d : report.diagnostics) os << "info " << d.dump() << '\n';
  os << report.count(Status::pass) << " passed, " << report.count(Status::fail) << " failed, "
     << report.count(Status::skipped) << " skipped\n";
  return os.str();
}

}  // namespace ribbonry::cli
