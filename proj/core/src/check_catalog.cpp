#include "conekit/check_catalog.hpp"

#include <sstream>

#include "json.hpp"

namespace conekit {

namespace detail {
const char* check_catalog_json();
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    auto doc = nlohmann::json::parse(detail::check_catalog_json());
    for (const auto& c : doc.at("checks")) {
      CheckInfo info;
      info.id = c.at("id").get<std::string>();
      info.name = c.at("name").get<std::string>();
      info.anchor = c.at("anchor").get<std::string>();
      info.quotes = c.at("quotes").get<std::vector<std::string>>();
      info.hypothesis = c.at("hypothesis").get<std::string>();
      info.shadow = c.at("shadow").get<std::string>();
      out.push_back(std::move(info));
    }
    return out;
  }();
  return catalog;
}

const CheckInfo* find_check_by_name(const std::string& name) {
  for (const auto& c : check_catalog())
    if (c.name == name) return &c;
  return nullptr;
}

const CheckInfo* find_check_by_id(const std::string& id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : check_catalog()) out.push_back(c.name);
  return out;
}

std::string explain_text(const CheckInfo& info) {
  std::ostringstream os;
  os << info.name << "\n";
  os << "  anchor:     " << info.anchor << "\n";
  for (const auto& q : info.quotes) os << "  quote:      \"" << q << "\"\n";
  os << "  hypothesis: " << info.hypothesis << "\n";
  os << "  certifies:  " << info.shadow << "\n";
  return os.str();
}

}  // namespace conekit
