#include <map>

#include "ontoquery/dual_exec.hpp"

namespace ontoquery {

TripleIndex::TripleIndex(const TripleSet& triples) {
  rows_.reserve(triples.size());
  for (const auto& t : triples) {
    const auto i = rows_.size();
    rows_.push_back(Row{display_name(t.subject), rel_type_name(t.predicate), display_name(t.object)});
    s_[rows_.back().s].push_back(i);
    p_[rows_.back().p].push_back(i);
    o_[rows_.back().o].push_back(i);
  }
}

namespace {

const std::vector<std::size_t>& lookup(
    const std::unordered_map<std::string, std::vector<std::size_t>>& m, const std::string& key) {
  static const std::vector<std::size_t> none;
  const auto it = m.find(key);
  return it == m.end() ? none : it->second;
}

class Evaluator {
 public:
  Evaluator(const TripleIndex& idx, const Bgp& q) : idx_(idx), q_(q) {}

  ResultSet run() {
    ResultSet out;
    out.variables = bgp_vars(q_);
    step(0, out);
    return out;
  }

 private:
  const TripleIndex& idx_;
  const Bgp& q_;
  std::map<std::string, std::string> bound_;

  std::optional<std::string> value(const Term& t) const {
    if (const auto* v = std::get_if<Variable>(&t)) {
      const auto it = bound_.find(v->name);
      if (it == bound_.end()) return std::nullopt;
      return it->second;
    }
    return render_term(t);
  }

  bool unify(const Term& t, const std::string& actual, std::vector<std::string>& fresh) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      const auto it = bound_.find(v->name);
      if (it != bound_.end()) return it->second == actual;
      bound_.emplace(v->name, actual);
      fresh.push_back(v->name);
      return true;
    }
    return render_term(t) == actual;
  }

  void step(std::size_t depth, ResultSet& out) {
    if (depth == q_.patterns.size()) {
      std::vector<std::string> row;
      for (const auto& v : out.variables) row.push_back(bound_.at(v));
      out.rows.insert(std::move(row));
      return;
    }
    const auto& tp = q_.patterns[depth];
    const std::vector<std::size_t>* candidates = nullptr;
    if (auto s = value(tp.subject)) {
      candidates = &idx_.by_subject(*s);
    } else if (auto o = value(tp.object)) {
      candidates = &idx_.by_object(*o);
    } else if (auto p = value(tp.predicate)) {
      candidates = &idx_.by_predicate(*p);
    }
    auto visit = [&](const TripleIndex::Row& row) {
      std::vector<std::string> fresh;
      if (unify(tp.subject, row.s, fresh) && unify(tp.predicate, row.p, fresh) &&
          unify(tp.object, row.o, fresh))
        step(depth + 1, out);
      for (const auto& v : fresh) bound_.erase(v);
    };
    if (candidates) {
      for (const auto i : *candidates) visit(idx_.rows()[i]);
    } else {
      for (const auto& row : idx_.rows()) visit(row);
    }
  }
};

}  // namespace

const std::vector<std::size_t>& TripleIndex::by_subject(const std::string& s) const {
  return lookup(s_, s);
}
const std::vector<std::size_t>& TripleIndex::by_predicate(const std::string& p) const {
  return lookup(p_, p);
}
const std::vector<std::size_t>& TripleIndex::by_object(const std::string& o) const {
  return lookup(o_, o);
}

std::string render_term(const Term& t) {
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Variable>) return x.name;
        else if constexpr (std::is_same_v<X, Iri>) return display_name(x);
        else if constexpr (std::is_same_v<X, PrimitivePredicate>) return rel_type_name(x);
        else return render_literal(x);
      },
      t);
}

ResultSet eval_bgp(const TripleIndex& index, const Bgp& q) { return Evaluator(index, q).run(); }

ResultSet eval_bgp(const SaturatedSet& s, const Bgp& q) {
  return eval_bgp(TripleIndex(s.all()), q);
}

}  // namespace ontoquery
