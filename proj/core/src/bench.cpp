#include "ontoquery/bench.hpp"

#include <cmath>
#include <istream>

#include "ontoquery/error.hpp"
#include "ontoquery/service.hpp"

namespace ontoquery {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.runs < 1) throw Error(ErrorCode::InvalidArgument, "runs must be at least 1");
  std::vector<BenchRow> rows;
  for (int run = 1; run <= config.runs; ++run) {
    Registry registry(config.stopwords, config.lexicon);
    const auto summary = registry.register_ontology(config.source, config.ontology_id);
    std::chrono::nanoseconds sparqldl{0}, graph{0};
    for (const auto& q : config.queries) {
      try {
        const auto response = registry.search(q);
        for (const auto* o : response.outcomes()) {
          sparqldl += o->result.sparqldl_time;
          graph += o->result.graph_time;
        }
      } catch (const Error& e) {
        // a query with no usable keyword still counts, with nothing to time
        if (e.code() != ErrorCode::EmptyQuery && e.code() != ErrorCode::IncompatibleFacet) throw;
      }
    }
    rows.push_back(BenchRow{config.ontology_id, std::to_string(run), to_ms(summary.load_time),
                            to_ms(sparqldl), to_ms(graph)});
  }
  auto mean = [&](std::int64_t BenchRow::*col) {
    double sum = 0;
    for (const auto& r : rows) sum += static_cast<double>(r.*col);
    return std::llround(sum / static_cast<double>(rows.size()));
  };
  rows.push_back(BenchRow{config.ontology_id, "mean", mean(&BenchRow::parse_load_ms),
                          mean(&BenchRow::resp_sparqldl_ms), mean(&BenchRow::resp_graph_ms)});
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "ontology,run,parse_load_ms,resp_sparqldl_ms,resp_graph_ms\n";
  for (const auto& r : rows)
    out += r.ontology + "," + r.run + "," + std::to_string(r.parse_load_ms) + "," +
           std::to_string(r.resp_sparqldl_ms) + "," + std::to_string(r.resp_graph_ms) + "\n";
  return out;
}

std::vector<std::string> read_queries(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(line.substr(first));
  }
  return out;
}

}  // namespace ontoquery
