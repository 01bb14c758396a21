#pragma once

#include <string>
#include <vector>

namespace conekit {

/// Static description of one verification check. `id` is the internal
/// identifier; `name` is what the CLI and reports use.
struct CheckInfo {
  std::string id;
  std::string name;
  std::string anchor;
  std::vector<std::string> quotes;
  std::string hypothesis;
  std::string shadow;
};

/// All checks in pipeline order. Loaded from the catalog embedded at build
/// time.
const std::vector<CheckInfo>& check_catalog();
const CheckInfo* find_check_by_name(const std::string& name);
const CheckInfo* find_check_by_id(const std::string& id);
std::vector<std::string> check_names();

/// Multi-line description: name, anchor, quotes, hypothesis, shadow.
std::string explain_text(const CheckInfo& info);

}  // namespace conekit
