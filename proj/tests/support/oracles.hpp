#pragma once

// Independent reference implementations the tests compare the library
// against. They work on plain strings and brute force, and share no code
// paths with the engine beyond display-name rendering.

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ontoquery/dual_exec.hpp"
#include "ontoquery/rdf.hpp"
#include "ontoquery/result_set.hpp"
#include "ontoquery/saturator.hpp"

#ifndef ONTOQUERY_TEST_DATA_DIR
#error "ONTOQUERY_TEST_DATA_DIR must be defined"
#endif

namespace oracle {

inline std::string data_path(const std::string& name) {
  return std::string(ONTOQUERY_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- declaration counts by line scanning -------------------------------

struct KindCounts {
  std::set<std::string> classes, object_properties, data_properties, instances;
};

// Looks for ":Name a <type>" or ":Name a <type> , <type>" declaration heads,
// line by line.
inline KindCounts count_declarations(const std::string& turtle) {
  KindCounts out;
  const std::regex head(R"(^\s*:([^\s;,.]+)\s+a\s+([^;.]+))");
  std::istringstream in(turtle);
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (!std::regex_search(line, m, head)) continue;
    const std::string name = m[1];
    const std::string types = m[2];
    if (types.find("owl:Class") != std::string::npos) out.classes.insert(name);
    else if (types.find("owl:ObjectProperty") != std::string::npos) out.object_properties.insert(name);
    else if (types.find("owl:DatatypeProperty") != std::string::npos) out.data_properties.insert(name);
    else out.instances.insert(name);
  }
  return out;
}

// ---- rendered triples ---------------------------------------------------

using StrTriple = std::tuple<std::string, std::string, std::string>;

inline std::set<StrTriple> render(const ontoquery::TripleSet& ts) {
  std::set<StrTriple> out;
  for (const auto& t : ts)
    out.emplace(ontoquery::display_name(t.subject), ontoquery::rel_type_name(t.predicate),
                ontoquery::display_name(t.object));
  return out;
}

// ---- reachability -------------------------------------------------------

// All (a, b) with a path of length >= 1 from a to b, a != b.
inline std::set<std::pair<int, int>> reachable_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) adj[a].push_back(b);
  std::set<std::pair<int, int>> out;
  for (int s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    for (int t : adj[s]) {
      if (!seen[t]) {
        seen[t] = true;
        q.push(t);
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (u != s) out.emplace(s, u);
      for (int t : adj[u]) {
        if (!seen[t]) {
          seen[t] = true;
          q.push(t);
        }
      }
    }
  }
  return out;
}

// ---- naive fixpoint over string triples --------------------------------

// Applies every inference rule by nested loops until nothing changes.
// `instances` lists the individuals (for inverse materialisation).
inline std::set<StrTriple> naive_closure(std::set<StrTriple> t, const std::set<std::string>& instances) {
  static const std::set<std::string> primitives = {
      "SUB_CLASS_OF",        "EQUIVALENT_CLASS", "DISJOINT_CLASS", "INSTANCE_OF",
      "HAS_LABEL",           "HAS_COMMENT",      "SUB_PROPERTY",   "EQUIVALENT_PROPERTY",
      "DISJOINT_PROPERTY",   "INVERSE_OF",       "TYPE_PROPERTY",  "DOMAIN",
      "RANGE",               "SAME_AS",          "DIFFERENT_FROM"};
  static const std::set<std::string> reflexive_dropped = {
      "SUB_CLASS_OF", "EQUIVALENT_CLASS", "SUB_PROPERTY", "EQUIVALENT_PROPERTY", "SAME_AS"};
  auto keep = [](const StrTriple& x) {
    return !(std::get<0>(x) == std::get<2>(x) && reflexive_dropped.contains(std::get<1>(x)));
  };
  std::erase_if(t, [&](const StrTriple& x) { return !keep(x); });
  for (;;) {
    std::set<StrTriple> add;
    auto emit = [&](std::string s, std::string p, std::string o) {
      StrTriple x{std::move(s), std::move(p), std::move(o)};
      if (keep(x) && !t.contains(x)) add.insert(std::move(x));
    };
    for (const auto& [a, p, b] : t) {
      if (p == "SUB_CLASS_OF" || p == "SUB_PROPERTY" || p == "EQUIVALENT_CLASS" ||
          p == "EQUIVALENT_PROPERTY" || p == "SAME_AS") {
        for (const auto& [b2, p2, c] : t)
          if (p2 == p && b2 == b) emit(a, p, c);
      }
      if (p == "EQUIVALENT_CLASS" || p == "EQUIVALENT_PROPERTY" || p == "SAME_AS" ||
          p == "DISJOINT_CLASS" || p == "DISJOINT_PROPERTY" || p == "DIFFERENT_FROM" ||
          p == "INVERSE_OF")
        emit(b, p, a);
      if (p == "EQUIVALENT_CLASS") {
        emit(a, "SUB_CLASS_OF", b);
        emit(b, "SUB_CLASS_OF", a);
      }
      if (p == "EQUIVALENT_PROPERTY") {
        emit(a, "SUB_PROPERTY", b);
        emit(b, "SUB_PROPERTY", a);
      }
      if (p == "INSTANCE_OF") {
        for (const auto& [c, p2, d] : t)
          if (p2 == "SUB_CLASS_OF" && c == b) emit(a, "INSTANCE_OF", d);
      }
      if (p == "SUB_CLASS_OF") {
        for (const auto& [c, p2, d] : t)
          if (p2 == "EQUIVALENT_CLASS" && c == b) emit(a, "SUB_CLASS_OF", d);
      }
      if (!primitives.contains(p) && instances.contains(a) && instances.contains(b)) {
        for (const auto& [q1, p2, q2] : t)
          if (p2 == "INVERSE_OF" && q1 == p) emit(b, q2, a);
      }
    }
    if (add.empty()) return t;
    t.insert(add.begin(), add.end());
  }
}

// ---- brute-force BGP evaluation ----------------------------------------

// Every assignment of the query's variables over `domain` is checked
// pattern by pattern against the triple set.
inline ontoquery::ResultSet brute_force_bgp(const std::set<StrTriple>& triples,
                                            const ontoquery::Bgp& q,
                                            const std::vector<std::string>& domain) {
  using namespace ontoquery;
  ResultSet out;
  out.variables = bgp_vars(q);
  const auto nv = out.variables.size();
  std::vector<std::size_t> pick(nv, 0);
  auto value = [&](const Term& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      const auto i = std::find(out.variables.begin(), out.variables.end(), v->name) - out.variables.begin();
      return domain[pick[i]];
    }
    return render_term(t);
  };
  if (domain.empty() && nv > 0) return out;
  for (;;) {
    bool ok = true;
    for (const auto& tp : q.patterns) {
      if (!triples.contains({value(tp.subject), value(tp.predicate), value(tp.object)})) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::string> row;
      for (std::size_t i = 0; i < nv; ++i) row.push_back(domain[pick[i]]);
      out.rows.insert(std::move(row));
    }
    std::size_t k = nv;
    while (k > 0) {
      if (++pick[k - 1] < domain.size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) return out;
  }
}

// Every string that occurs anywhere in a triple.
inline std::vector<std::string> term_domain(const std::set<StrTriple>& triples) {
  std::set<std::string> d;
  for (const auto& [s, p, o] : triples) {
    d.insert(s);
    d.insert(p);
    d.insert(o);
  }
  return {d.begin(), d.end()};
}

// ---- random ontologies --------------------------------------------------

struct RandomOntology {
  std::string turtle;
  std::vector<std::pair<int, int>> subclass_edges;  // child -> parent, classes C0..Cn-1
  int classes = 0;
  std::set<std::string> instances;
};

// A subclass DAG over C0..C(n-1): every edge points from a higher to a lower
// index, so no cycle can form.
inline RandomOntology random_subclass_dag(std::mt19937& rng, int n, double edge_p) {
  RandomOntology r;
  r.classes = n;
  std::ostringstream out;
  out << "@prefix : <http://ex.org/r#> .\n@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
         "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  std::bernoulli_distribution coin(edge_p);
  for (int i = 0; i < n; ++i) out << ":C" << i << " a owl:Class .\n";
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (coin(rng)) {
        out << ":C" << i << " rdfs:subClassOf :C" << j << " .\n";
        r.subclass_edges.emplace_back(i, j);
      }
  r.turtle = out.str();
  return r;
}

// Classes, properties and individuals with every axiom form the parser
// accepts, wired at random. Equivalences may form cycles.
inline RandomOntology random_ontology(std::mt19937& rng, int n_classes, int n_props, int n_instances) {
  RandomOntology r = random_subclass_dag(rng, n_classes, 0.08);
  std::ostringstream out;
  out << r.turtle;
  std::uniform_int_distribution<int> cls(0, n_classes - 1), prop(0, n_props - 1), ind(0, n_instances - 1);
  std::bernoulli_distribution rare(0.15), half(0.5);
  for (int i = 0; i < n_classes; ++i) {
    if (rare(rng)) out << ":C" << i << " owl:equivalentClass :C" << cls(rng) << " .\n";
    if (rare(rng)) out << ":C" << i << " owl:disjointWith :C" << cls(rng) << " .\n";
    if (rare(rng)) out << ":C" << i << " rdfs:label \"class " << i << "\" .\n";
  }
  for (int p = 0; p < n_props; ++p) {
    out << ":p" << p << " a owl:ObjectProperty ; rdfs:domain :C" << cls(rng) << " ; rdfs:range :C"
        << cls(rng) << " .\n";
  }
  for (int p = 0; p < n_props; ++p) {
    if (rare(rng)) out << ":p" << p << " rdfs:subPropertyOf :p" << prop(rng) << " .\n";
    if (rare(rng)) out << ":p" << p << " owl:equivalentProperty :p" << prop(rng) << " .\n";
    if (rare(rng)) out << ":p" << p << " owl:inverseOf :p" << prop(rng) << " .\n";
    if (rare(rng)) out << ":p" << p << " owl:propertyDisjointWith :p" << prop(rng) << " .\n";
  }
  for (int i = 0; i < n_instances; ++i) {
    out << ":i" << i << " a :C" << cls(rng) << " .\n";
    r.instances.insert("i" + std::to_string(i));
  }
  for (int i = 0; i < n_instances; ++i) {
    if (rare(rng)) out << ":i" << i << " owl:sameAs :i" << ind(rng) << " .\n";
    if (rare(rng)) out << ":i" << i << " owl:differentFrom :i" << ind(rng) << " .\n";
    if (half(rng)) out << ":i" << i << " :p" << prop(rng) << " :i" << ind(rng) << " .\n";
  }
  r.turtle = out.str();
  return r;
}

}  // namespace oracle
