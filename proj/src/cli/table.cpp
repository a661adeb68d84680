#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "commands.hpp"

namespace lctkit::cli {

using nlohmann::json;

namespace {

std::string scalar(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + ")";
  }
  if (v.is_object()) return v.empty() ? "-" : v.dump();
  return v.dump();
}

bool is_record_list(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); });
}

void render_records(std::ostream& out, const json& rows, const std::string& indent) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  std::vector<std::size_t> width;
  for (const auto& c : columns) {
    std::size_t w = c.size();
    for (const auto& row : rows) w = std::max(w, scalar(row.value(c, json())).size());
    width.push_back(w);
  }
  auto line = [&](auto cell) {
    out << indent;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string text = cell(i);
      out << text;
      if (i + 1 < columns.size()) out << std::string(width[i] - text.size() + 2, ' ');
    }
    out << "\n";
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return scalar(row.value(columns[i], json())); });
}

void render_object(std::ostream& out, const json& obj, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [key, _] : obj.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : obj.items()) {
    if ((value.is_object() && !value.empty()) || is_record_list(value)) {
      out << indent << key << ":\n";
      if (value.is_object())
        render_object(out, value, indent + "  ");
      else
        render_records(out, value, indent + "  ");
    } else {
      out << indent << key << std::string(width - key.size() + 2, ' ') << scalar(value) << "\n";
    }
  }
}

}  // namespace

void render_table(std::ostream& out, const json& value) {
  if (value.is_object())
    render_object(out, value, "");
  else if (is_record_list(value))
    render_records(out, value, "");
  else
    out << scalar(value) << "\n";
}

}  // namespace lctkit::cli
