#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ontoquery/bench.hpp"
#include "ontoquery/error.hpp"
#include "ontoquery/http_service.hpp"
#include "ontoquery/service.hpp"

namespace {

using namespace ontoquery;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

struct LexiconFiles {
  std::string stopwords;
  std::string lexicon;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopwords, "Stopword file (default: built-in list)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--lexicon", lexicon, "Synonym lexicon TSV")->check(CLI::ExistingFile);
  }
  StopwordList stop() const {
    return stopwords.empty() ? StopwordList::defaults() : StopwordList::load(stopwords);
  }
  SynonymLexicon lex() const { return lexicon.empty() ? SynonymLexicon{} : SynonymLexicon::load(lexicon); }
};

void register_all(Registry& registry, const std::vector<std::string>& files) {
  for (const auto& f : files) {
    const auto s = registry.register_ontology(read_file(f), stem(f));
    std::cerr << "loaded " << s.id << ": " << to_json_string(s) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyword search over ontologies, answered by a triple store and a property graph"};
  app.require_subcommand(1);

  LexiconFiles files;

  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  int port = 8080;
  std::string host = "0.0.0.0";
  std::vector<std::string> preload;
  serve->add_option("--port", port, "Port to listen on");
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--ontology", preload, "Ontology files to register at startup")
      ->check(CLI::ExistingFile);
  files.add_options(serve);

  auto* load = app.add_subcommand("load", "Parse, saturate and load one ontology");
  std::string ontology_file, id;
  bool dump_triples = false, dump_graph = false;
  load->add_option("--ontology", ontology_file)->required()->check(CLI::ExistingFile);
  load->add_option("--id", id, "Ontology id (default: file name)");
  load->add_flag("--dump-triples", dump_triples, "Print the inferred triples");
  load->add_flag("--dump-graph", dump_graph, "Print the property graph");
  files.add_options(load);

  auto* query = app.add_subcommand("query", "Answer one keyword query");
  std::string keywords, facet_text = "all", view_text = "both";
  std::vector<std::string> ontologies;
  bool no_timings = false;
  query->add_option("--keywords", keywords)->required();
  query->add_option("--facet", facet_text, "ALL or a facet tag");
  query->add_option("--view", view_text, "sparqldl, cypher or both");
  query->add_option("--ontology", ontologies)->required()->check(CLI::ExistingFile);
  query->add_flag("--no-timings", no_timings, "Omit timings from the output");
  files.add_options(query);

  auto* bench = app.add_subcommand("bench", "Time loading and querying");
  std::string queries_file, out_file;
  int runs = 5;
  bench->add_option("--ontology", ontology_file)->required()->check(CLI::ExistingFile);
  bench->add_option("--id", id, "Ontology id (default: file name)");
  bench->add_option("--queries", queries_file)->required()->check(CLI::ExistingFile);
  bench->add_option("--runs", runs)->check(CLI::PositiveNumber);
  bench->add_option("--out", out_file, "CSV destination (default: stdout)");
  files.add_options(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*serve) {
      Registry registry(files.stop(), files.lex());
      register_all(registry, preload);
      HttpService http(registry);
      std::cerr << "listening on " << host << ":" << port << "\n";
      return http.listen(host, port) ? 0 : 1;
    }
    if (*load) {
      Registry registry(files.stop(), files.lex());
      const auto the_id = id.empty() ? stem(ontology_file) : id;
      std::cout << to_json_string(registry.register_ontology(read_file(ontology_file), the_id)) << "\n";
      const auto kb = registry.find(the_id);
      if (dump_triples) std::cout << dump_inferred(kb->saturated);
      if (dump_graph) std::cout << kb->graph.dump();
      return 0;
    }
    if (*query) {
      Registry registry(files.stop(), files.lex());
      for (const auto& f : ontologies) registry.register_ontology(read_file(f), stem(f));
      const auto response = registry.search(keywords, parse_facet(facet_text), parse_view(view_text));
      std::cout << to_json_string(response, !no_timings) << "\n";
      return response.defect ? 2 : 0;
    }
    if (*bench) {
      BenchConfig config;
      config.ontology_id = id.empty() ? stem(ontology_file) : id;
      config.source = read_file(ontology_file);
      std::istringstream qs(read_file(queries_file));
      config.queries = read_queries(qs);
      config.runs = runs;
      config.stopwords = files.stop();
      config.lexicon = files.lex();
      const auto csv = bench_csv(run_bench(config));
      if (out_file.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + out_file);
        out << csv;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
