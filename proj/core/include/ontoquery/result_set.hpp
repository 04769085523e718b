#pragma once

#include <set>
#include <string>
#include <vector>

namespace ontoquery {

// Variable bindings produced by either backend. Values are prefix-stripped
// entity names, "xsd:" datatype names, quoted literals or relationship types.
struct ResultSet {
  std::vector<std::string> variables;
  std::set<std::vector<std::string>> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }

  // Single-column convenience used by facet answers.
  std::vector<std::string> column(std::size_t index = 0) const {
    std::vector<std::string> out;
    for (const auto& row : rows)
      if (index < row.size()) out.push_back(row[index]);
    return out;
  }

  bool operator==(const ResultSet&) const = default;
};

}  // namespace ontoquery
