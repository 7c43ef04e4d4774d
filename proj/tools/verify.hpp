#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ribbonry/enumerate.hpp"
#include "ribbonry/json_io.hpp"
#include "ribbonry/sheffield.hpp"

namespace ribbonry::cli {

enum class Status { pass, fail, skipped };

struct Check {
  std::string name;
  std::string expected;
  std::string source;  // where the expected value comes from
  std::string actual;
  Status status = Status::pass;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  Json diagnostics = Json::array();

  int count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

struct VerifyOptions {
  CountOptions counting;
  std::size_t free_edge_limit = kDefaultFreeEdgeLimit;
  // Restricts bijection/growth to one region instead of the builtin battery.
  std::optional<Region> region;
  std::string region_name;
  int n = 0;
  BorderMode border = BorderMode::omit;
};

Report verify_suite(const std::string& suite, const VerifyOptions& options);

Json to_json(const Report& report);
std::string to_text(const Report& report);

}  // namespace ribbonry::cli
