#include "ontoquery/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>

#include "ontoquery/error.hpp"

namespace ontoquery {

namespace {

// Keep in sync with data/stopwords.txt (a unit test compares them).
constexpr std::string_view kDefaultStopwords[] = {
    // interrogatives
    "what", "which", "who", "whom", "whose", "where", "when", "why", "how",
    // articles and determiners
    "a", "an", "the", "this", "that", "these", "those", "some", "any", "all", "each", "every",
    // conjunctions
    "and", "or", "but", "nor", "so", "yet", "if", "then", "than", "both", "either", "neither",
    // prepositions
    "of", "in", "on", "at", "to", "for", "from", "by", "with", "about", "into", "between",
    "among", "via",
    // pronouns
    "i", "me", "my", "mine", "we", "us", "our", "ours", "you", "your", "yours", "he", "him",
    "his", "she", "her", "hers", "it", "its", "they", "them", "their", "theirs",
    // auxiliaries
    "is", "are", "was", "were", "be", "been", "being", "am", "do", "does", "did", "done", "have",
    "has", "had", "can", "could", "will", "would", "shall", "should", "may", "might", "must",
    // request fillers
    "show", "list", "give", "tell", "find", "get", "please", "there", "not", "no",
};

bool is_token_char(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '_' || c >= 0x80;
}

bool ends_with_ci(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  return to_lower(s.substr(s.size() - suffix.size())) == suffix;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <typename Parse>
auto load_file(const std::string& path, Parse parse) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse(in);
}

}  // namespace

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

StopwordList::StopwordList(std::set<std::string, std::less<>> words) : words_(std::move(words)) {}

StopwordList StopwordList::defaults() {
  std::set<std::string, std::less<>> words;
  for (auto w : kDefaultStopwords) words.emplace(w);
  return StopwordList(std::move(words));
}

StopwordList StopwordList::parse(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(to_lower(word));
  }
  return StopwordList(std::move(words));
}

StopwordList StopwordList::load(const std::string& path) {
  return load_file(path, [](std::istream& in) { return StopwordList::parse(in); });
}

void SynonymLexicon::add(std::string_view lemma, std::string_view synonym) {
  auto a = to_lower(lemma);
  auto b = to_lower(synonym);
  if (a.empty() || b.empty() || a == b) return;
  index_[a].insert(b);
  index_[b].insert(a);
}

const std::set<std::string>& SynonymLexicon::lookup(std::string_view word) const {
  static const std::set<std::string> none;
  const auto it = index_.find(to_lower(word));
  return it == index_.end() ? none : it->second;
}

SynonymLexicon SynonymLexicon::parse(std::istream& in) {
  SynonymLexicon lex;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::SyntaxError, "expected lemma<TAB>synonyms", line_no, 1);
    const auto lemma = trim(std::string_view(line).substr(0, tab));
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      lex.add(lemma, trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return lex;
}

SynonymLexicon SynonymLexicon::load(const std::string& path) {
  return load_file(path, [](std::istream& in) { return SynonymLexicon::parse(in); });
}

std::set<std::string> synonyms_of(const SynonymLexicon& lex, std::string_view token) {
  return lex.lookup(token);
}

std::string lemmatize(std::string_view token) {
  std::string out(token);
  const auto n = out.size();
  if (n > 4 && ends_with_ci(out, "ies")) {
    const bool upper = std::isupper(static_cast<unsigned char>(out[n - 3]));
    out.resize(n - 3);
    out.push_back(upper ? 'Y' : 'y');
    return out;
  }
  if (n > 4) {
    for (std::string_view suffix : {"sses", "xes", "zes", "ches", "shes"}) {
      if (ends_with_ci(out, suffix)) {
        out.resize(n - 2);
        return out;
      }
    }
  }
  if (n > 3 && ends_with_ci(out, "s") && !ends_with_ci(out, "ss") && !ends_with_ci(out, "us") &&
      !ends_with_ci(out, "is")) {
    out.pop_back();
  }
  return out;
}

std::vector<std::string> preprocess(std::string_view query, const StopwordList& stop,
                                    const NameCheck& is_entity_name) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    const auto first = current.find_first_not_of('-');
    const auto last = current.find_last_not_of('-');
    if (first != std::string::npos) {
      std::string token = current.substr(first, last - first + 1);
      if (!stop.contains(to_lower(token))) {
        if (!is_entity_name || !is_entity_name(token)) token = lemmatize(token);
        tokens.push_back(std::move(token));
      }
    }
    current.clear();
  };
  for (const char c : query) {
    if (is_token_char(static_cast<unsigned char>(c))) {
      current.push_back(c);
    } else {
      flush();
    }
  }
  flush();
  if (tokens.empty()) throw Error(ErrorCode::EmptyQuery, "no keywords left in query");
  return tokens;
}

std::vector<std::string> segment_name(std::string_view name) {
  enum class Cls { Upper, Lower, Digit, Sep, Other };
  auto classify = [](unsigned char c) {
    if (c == '-' || c == '_') return Cls::Sep;
    if (std::isupper(c)) return Cls::Upper;
    if (std::isdigit(c)) return Cls::Digit;
    if (std::islower(c) || c >= 0x80) return Cls::Lower;
    return Cls::Other;
  };

  std::vector<std::string> parts;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) parts.push_back(to_lower(current));
    current.clear();
  };

  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    const Cls cls = classify(c);
    if (cls == Cls::Sep) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const Cls prev = classify(static_cast<unsigned char>(current.back()));
      const bool letter = cls == Cls::Upper || cls == Cls::Lower;
      const bool prev_letter = prev == Cls::Upper || prev == Cls::Lower;
      bool split = false;
      if (prev == Cls::Lower && cls == Cls::Upper) split = true;
      if ((prev == Cls::Digit && letter) || (prev_letter && cls == Cls::Digit)) split = true;
      // "HTTPServer": split before the 'S' that starts a capitalised word.
      if (prev == Cls::Upper && cls == Cls::Upper && i + 1 < name.size() &&
          classify(static_cast<unsigned char>(name[i + 1])) == Cls::Lower)
        split = true;
      if (split) flush();
    }
    current.push_back(static_cast<char>(c));
  }
  flush();
  return parts;
}

}  // namespace ontoquery
