#include "ontoquery/resolver.hpp"

#include <algorithm>
#include <optional>
#include <memory>
#include <tuple>
#include <unordered_set>

#include "ontoquery/error.hpp"

namespace ontoquery {

std::string_view to_string(MatchVia via) {
  switch (via) {
    case MatchVia::Direct: return "Direct";
    case MatchVia::Synonym: return "Synonym";
    case MatchVia::Label: return "Label";
  }
  return "?";
}

namespace {

std::optional<MatchVia> best_tier(const Ontology& o, const std::string& name,
                                  const std::string& token_lc, const std::set<std::string>& syns,
                                  const SynonymLexicon& lex) {
  const auto name_lc = to_lower(name);
  if (name_lc == token_lc) return MatchVia::Direct;
  if (syns.contains(name_lc)) return MatchVia::Synonym;
  for (const auto& part : segment_name(name))
    if (lex.lookup(part).contains(token_lc)) return MatchVia::Synonym;
  for (const auto& label : o.labels(name))
    if (to_lower(label.value) == token_lc) return MatchVia::Label;
  return std::nullopt;
}

}  // namespace

Resolution match_keywords(const std::vector<std::string>& tokens,
                          const std::vector<const Ontology*>& registry,
                          const SynonymLexicon& lex) {
  Resolution out;
  for (const auto& token : tokens) {
    const auto token_lc = to_lower(token);
    const auto& syns = lex.lookup(token_lc);
    ResolvedKeyword kw{token, {}};
    for (const Ontology* o : registry) {
      for (const auto& [name, e] : o->entities()) {
        if (e.implicit) continue;
        const auto via = best_tier(*o, name, token_lc, syns, lex);
        if (!via) continue;
        kw.matches.push_back(EntityMatch{EntityRef{o->id(), e.iri, e.kind}, *via,
                                         *via == MatchVia::Direct ? std::string{} : token});
      }
    }
    std::sort(kw.matches.begin(), kw.matches.end(), [](const auto& a, const auto& b) {
      return std::tie(a.entity.ontology, a.entity.iri.local) <
             std::tie(b.entity.ontology, b.entity.iri.local);
    });
    if (kw.matches.empty()) {
      out.unresolved.push_back(token);
    } else {
      out.resolved.push_back(std::move(kw));
    }
  }
  return out;
}

Resolution resolve(const std::vector<std::string>& tokens,
                   const std::vector<const Ontology*>& registry, const SynonymLexicon& lex) {
  auto r = match_keywords(tokens, registry, lex);
  if (r.resolved.empty()) {
    std::string joined;
    for (const auto& t : r.unresolved) joined += (joined.empty() ? "" : " ") + t;
    throw Error(ErrorCode::NoKeywordResolved, joined);
  }
  return r;
}

NameCheck entity_name_check(const std::vector<const Ontology*>& registry) {
  auto names = std::make_shared<std::unordered_set<std::string>>();
  for (const Ontology* o : registry)
    for (const auto& [name, e] : o->entities())
      if (!e.implicit) names->insert(to_lower(name));
  return [names](std::string_view token) { return names->contains(to_lower(token)); };
}

}  // namespace ontoquery
