#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ontoquery/lexicon.hpp"

namespace ontoquery {

struct BenchRow {
  std::string ontology;
  std::string run;  // 1-based run number, or "mean"
  std::int64_t parse_load_ms = 0;
  std::int64_t resp_sparqldl_ms = 0;
  std::int64_t resp_graph_ms = 0;

  bool operator==(const BenchRow&) const = default;
};

struct BenchConfig {
  std::string ontology_id;
  std::string source;  // ontology text
  std::vector<std::string> queries;
  int runs = 5;
  StopwordList stopwords = StopwordList::defaults();
  SynonymLexicon lexicon;
};

// Each run parses, saturates and loads the ontology afresh, then answers
// every query, summing the per-backend response times. The last row holds
// the rounded column means. Throws Error{InvalidArgument} when runs < 1.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// Header "ontology,run,parse_load_ms,resp_sparqldl_ms,resp_graph_ms".
std::string bench_csv(const std::vector<BenchRow>& rows);

// One query per line; blank lines and '#' comments skipped.
std::vector<std::string> read_queries(std::istream& in);

}  // namespace ontoquery
