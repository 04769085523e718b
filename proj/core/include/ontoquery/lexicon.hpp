#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontoquery {

std::string to_lower(std::string_view s);

// Lowercase stopwords removed from keyword queries.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::set<std::string, std::less<>> words);

  // English interrogatives, articles, conjunctions, pronouns and auxiliaries;
  // identical to data/stopwords.txt.
  static StopwordList defaults();
  // One token per line; '#' starts a comment line.
  static StopwordList parse(std::istream& in);
  static StopwordList load(const std::string& path);

  bool contains(std::string_view lowercase_token) const { return words_.contains(lowercase_token); }
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

// Lemma -> synonyms, symmetric after loading. Keys are lowercase.
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  // TSV: "lemma<TAB>syn1,syn2,...". Lines starting with '#' are comments.
  static SynonymLexicon parse(std::istream& in);
  static SynonymLexicon load(const std::string& path);

  // Adds lemma<->synonym in both directions.
  void add(std::string_view lemma, std::string_view synonym);

  // Case-insensitive; unknown words yield an empty set.
  const std::set<std::string>& lookup(std::string_view word) const;
  bool empty() const { return index_.empty(); }
  const std::map<std::string, std::set<std::string>, std::less<>>& entries() const {
    return index_;
  }

 private:
  std::map<std::string, std::set<std::string>, std::less<>> index_;
};

std::set<std::string> synonyms_of(const SynonymLexicon& lex, std::string_view token);

// Predicate telling the lemmatizer a token is already an entity name.
using NameCheck = std::function<bool(std::string_view)>;

// Tokenize -> drop stopwords -> lemmatize. Throws Error{EmptyQuery} when
// nothing survives. Tokens keep their original casing.
std::vector<std::string> preprocess(std::string_view query, const StopwordList& stop,
                                    const NameCheck& is_entity_name = {});

// Plural suffix stripping: "-ies" -> "y", "-sses/-xes/-zes/-ches/-shes" -> drop
// "es", otherwise a trailing "s" (not "ss", "us", "is").
std::string lemmatize(std::string_view token);

// CamelCase, digit/letter, '-' and '_' boundaries; parts are lowercase.
std::vector<std::string> segment_name(std::string_view name);

}  // namespace ontoquery
