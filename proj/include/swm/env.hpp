#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace swm {

// --- small text helpers ---

namespace text {

inline std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) { out.push_back(cur); cur.clear(); }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

// Case-insensitive lexicographic compare with a byte-wise tie break, used
// wherever sentences are sorted for rendering.
inline bool ci_less(const std::string& a, const std::string& b) {
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    const int ca = std::tolower(static_cast<unsigned char>(a[i]));
    const int cb = std::tolower(static_cast<unsigned char>(b[i]));
    if (ca != cb) return ca < cb;
  }
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Expands "{0}", "{1}", ... placeholders.
inline std::string expand(const std::string& tpl, const std::vector<std::string>& args) {
  std::string out;
  out.reserve(tpl.size() + 16);
  for (size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] == '{' && i + 2 < tpl.size() && std::isdigit(static_cast<unsigned char>(tpl[i + 1])) &&
        tpl[i + 2] == '}') {
      const size_t idx = static_cast<size_t>(tpl[i + 1] - '0');
      if (idx < args.size()) out += args[idx];
      i += 2;
    } else {
      out += tpl[i];
    }
  }
  return out;
}

}  // namespace text

// --- facts, state, goals ---

struct Fact {
  std::string pred;
  std::vector<std::string> args;

  auto operator<=>(const Fact&) const = default;
};

inline Fact fact(std::string pred, std::vector<std::string> args = {}) {
  return Fact{std::move(pred), std::move(args)};
}

struct ObjectTable {
  std::map<std::string, std::string> type_of;  // object name -> concrete type

  bool declared(const std::string& name) const { return type_of.count(name) > 0; }

  std::vector<std::string> of_type(const std::string& type) const {
    std::vector<std::string> out;
    for (const auto& [name, t] : type_of)
      if (t == type) out.push_back(name);
    return out;
  }
};

struct EnvState {
  std::set<Fact> facts;
  ObjectTable objects;

  bool holds(const Fact& f) const { return facts.count(f) > 0; }
  bool operator==(const EnvState& o) const { return facts == o.facts; }
};

struct GoalSpec {
  std::vector<Fact> conditions;
};

struct GroundAction {
  std::string name;
  std::vector<std::string> args;
  std::string surface;

  bool operator==(const GroundAction& o) const { return name == o.name && args == o.args; }
};

enum class MetaAction { CheckValidActions, LookAround };

struct Unparseable {
  std::string raw;
};

using NormalizedAction = std::variant<GroundAction, MetaAction, Unparseable>;

struct StepOutcome {
  std::string observation;
  bool executable = false;
  double progress = 0.0;
  bool done = false;
};

// Fixed protocol strings. Observations are part of the environment contract
// and must not drift.
inline constexpr const char* kInvalidActionObservation =
    "The action is not valid and therefore takes no effect. Please check valid actions.";
inline constexpr const char* kGoalCompletedSuffix = "Goal is completed.";
inline constexpr const char* kValidActionsPrefix = "Valid actions are: ";
inline constexpr const char* kMetaActionsSuffix = "Check valid actions. Look around.";

// --- domain definition ---

// A literal inside a schema. Terms starting with '?' index the schema's
// parameters ("?0".."?9"); anything else is a fixed object constant.
struct Literal {
  std::string pred;
  std::vector<std::string> terms;
};

struct ActionSchema {
  std::string name;
  std::vector<std::string> param_types;
  std::vector<Literal> pre;
  std::vector<Literal> add;
  std::vector<Literal> del;
  std::string surface_tpl;             // canonical display, e.g. "Fetch {0} from {1}."
  std::vector<std::string> patterns;   // grammar, e.g. "fetch ?0 [from] ?1"
  std::string obs_tpl;                 // empty: render the added facts instead
  bool distinct_params = false;

  int arity() const { return static_cast<int>(param_types.size()); }
};

struct PredicateSpec {
  int arity = 0;
  std::string sentence_tpl;  // observation sentence, capitalized per domain flag
  std::string goal_tpl;      // goal phrase; empty means sentence_tpl, uncapitalized
};

struct Domain {
  std::string name;
  std::map<std::string, PredicateSpec> predicates;
  std::vector<ActionSchema> schemas;
  // Abstract parameter types (e.g. "container" -> shot|shaker). Concrete types
  // match themselves implicitly.
  std::map<std::string, std::vector<std::string>> type_groups;
  bool capitalize_sentences = true;
  bool type_sentences = false;  // gripper declares its objects in observations

  const ActionSchema* find_schema(const std::string& schema_name) const {
    for (const auto& s : schemas)
      if (s.name == schema_name) return &s;
    return nullptr;
  }

  bool type_matches(const std::string& param_type, const std::string& obj_type) const {
    if (param_type == obj_type) return true;
    auto it = type_groups.find(param_type);
    if (it == type_groups.end()) return false;
    return std::find(it->second.begin(), it->second.end(), obj_type) != it->second.end();
  }
};

// --- rendering ---

namespace detail {

inline Fact ground_literal(const Literal& lit, const std::vector<std::string>& args) {
  Fact f;
  f.pred = lit.pred;
  f.args.reserve(lit.terms.size());
  for (const auto& t : lit.terms) {
    if (!t.empty() && t[0] == '?')
      f.args.push_back(args[static_cast<size_t>(std::stoi(t.substr(1)))]);
    else
      f.args.push_back(t);
  }
  return f;
}

inline std::string sentence_raw(const Domain& dom, const Fact& f) {
  auto it = dom.predicates.find(f.pred);
  assert(it != dom.predicates.end());
  return text::expand(it->second.sentence_tpl, f.args);
}

}  // namespace detail

inline std::string fact_sentence(const Domain& dom, const Fact& f) {
  std::string s = detail::sentence_raw(dom, f);
  return dom.capitalize_sentences ? text::capitalize(std::move(s)) : s;
}

inline std::string goal_phrase(const Domain& dom, const Fact& f) {
  auto it = dom.predicates.find(f.pred);
  assert(it != dom.predicates.end());
  const std::string& tpl = it->second.goal_tpl.empty() ? it->second.sentence_tpl : it->second.goal_tpl;
  return text::expand(tpl, f.args);
}

// "The goal is to satisfy the following conditions: c1., c2., ..."
inline std::string goal_text(const Domain& dom, const GoalSpec& goal) {
  std::vector<std::string> parts;
  parts.reserve(goal.conditions.size());
  for (const auto& c : goal.conditions) parts.push_back(goal_phrase(dom, c));
  return "The goal is to satisfy the following conditions: " + text::join(parts, ", ");
}

inline std::vector<std::string> state_sentences(const Domain& dom, const EnvState& state) {
  std::vector<std::string> sentences;
  if (dom.type_sentences) {
    std::vector<std::string> rooms;
    for (const auto& [name, type] : state.objects.type_of) {
      if (type == "ball")
        sentences.push_back(text::capitalize(name + " is a ball."));
      else if (type == "gripper")
        sentences.push_back(text::capitalize(name + " is a gripper."));
      else if (type == "room")
        rooms.push_back(name);
    }
    if (!rooms.empty()) {
      std::sort(rooms.begin(), rooms.end());
      std::string line;
      for (size_t i = 0; i < rooms.size(); ++i) {
        if (i) line += " ";
        line += "Room " + rooms[i];
      }
      sentences.push_back(line + ".");
    }
  }
  for (const auto& f : state.facts) sentences.push_back(fact_sentence(dom, f));
  std::sort(sentences.begin(), sentences.end(), text::ci_less);
  return sentences;
}

inline std::string render_observation(const Domain& dom, const EnvState& state) {
  return text::join(state_sentences(dom, state), " ");
}

// --- action grammar ---

namespace detail {

// Pattern elements: literal word, optional word set "[a|b]", or slot "?N".
struct PatternElem {
  enum Kind { Literal, Optional, Slot } kind = Literal;
  std::vector<std::string> words;  // literal/optional alternatives
  int slot = -1;
};

inline std::vector<PatternElem> parse_pattern(const std::string& pattern) {
  std::vector<PatternElem> elems;
  for (const auto& tok : text::split_ws(pattern)) {
    PatternElem e;
    if (tok[0] == '?') {
      e.kind = PatternElem::Slot;
      e.slot = std::stoi(tok.substr(1));
    } else if (tok.front() == '[' && tok.back() == ']') {
      e.kind = PatternElem::Optional;
      std::string inner = tok.substr(1, tok.size() - 2);
      std::string cur;
      for (char c : inner) {
        if (c == '|') { e.words.push_back(cur); cur.clear(); }
        else cur.push_back(c);
      }
      e.words.push_back(cur);
    } else {
      e.kind = PatternElem::Literal;
      e.words.push_back(tok);
    }
    elems.push_back(std::move(e));
  }
  return elems;
}

inline bool match_pattern(const std::vector<PatternElem>& elems, size_t ei,
                          const std::vector<std::string>& tokens, size_t ti,
                          std::vector<std::string>& slots) {
  if (ei == elems.size()) return ti == tokens.size();
  const PatternElem& e = elems[ei];
  switch (e.kind) {
    case PatternElem::Literal:
      if (ti < tokens.size() && tokens[ti] == e.words[0])
        return match_pattern(elems, ei + 1, tokens, ti + 1, slots);
      return false;
    case PatternElem::Optional:
      if (ti < tokens.size() &&
          std::find(e.words.begin(), e.words.end(), tokens[ti]) != e.words.end() &&
          match_pattern(elems, ei + 1, tokens, ti + 1, slots))
        return true;
      return match_pattern(elems, ei + 1, tokens, ti, slots);
    case PatternElem::Slot:
      if (ti < tokens.size()) {
        slots[static_cast<size_t>(e.slot)] = tokens[ti];
        if (match_pattern(elems, ei + 1, tokens, ti + 1, slots)) return true;
        slots[static_cast<size_t>(e.slot)].clear();
      }
      return false;
  }
  return false;
}

}  // namespace detail

inline std::string action_surface(const ActionSchema& schema, const std::vector<std::string>& args) {
  return text::expand(schema.surface_tpl, args);
}

inline GroundAction make_ground_action(const ActionSchema& schema, std::vector<std::string> args) {
  GroundAction a;
  a.name = schema.name;
  a.surface = action_surface(schema, args);
  a.args = std::move(args);
  return a;
}

// Strips whitespace and one trailing period, lowercases, and tries each
// schema pattern in order. Slot tokens must name declared objects of a
// compatible type or the pattern is rejected.
inline NormalizedAction normalize_action(const Domain& dom, const ObjectTable& objects,
                                         const std::string& raw) {
  std::string s = text::trim(raw);
  if (!s.empty() && s.back() == '.') s.pop_back();
  s = text::lower(s);
  const std::vector<std::string> tokens = text::split_ws(s);
  const std::string collapsed = text::join(tokens, " ");
  if (collapsed == "check valid actions") return MetaAction::CheckValidActions;
  if (collapsed == "look around") return MetaAction::LookAround;
  if (tokens.empty()) return Unparseable{raw};

  for (const auto& schema : dom.schemas) {
    for (const auto& pattern : schema.patterns) {
      const auto elems = detail::parse_pattern(pattern);
      std::vector<std::string> slots(static_cast<size_t>(schema.arity()));
      if (!detail::match_pattern(elems, 0, tokens, 0, slots)) continue;
      bool ok = true;
      for (int i = 0; i < schema.arity(); ++i) {
        const auto& obj = slots[static_cast<size_t>(i)];
        auto it = objects.type_of.find(obj);
        if (it == objects.type_of.end() || !dom.type_matches(schema.param_types[static_cast<size_t>(i)], it->second)) {
          ok = false;
          break;
        }
      }
      if (ok) return make_ground_action(schema, std::move(slots));
    }
  }
  return Unparseable{raw};
}

// --- applicability and transition ---

inline bool action_applicable(const Domain& dom, const EnvState& state, const GroundAction& action) {
  const ActionSchema* schema = dom.find_schema(action.name);
  if (!schema || static_cast<int>(action.args.size()) != schema->arity()) return false;
  for (const auto& lit : schema->pre)
    if (!state.holds(detail::ground_literal(lit, action.args))) return false;
  return true;
}

inline double progress(const EnvState& state, const GoalSpec& goal) {
  if (goal.conditions.empty()) return 1.0;
  size_t met = 0;
  for (const auto& c : goal.conditions)
    if (state.holds(c)) ++met;
  return static_cast<double>(met) / static_cast<double>(goal.conditions.size());
}

// Ground actions whose preconditions hold, in schema order then lexicographic
// argument order. Meta actions are not included.
inline std::vector<GroundAction> enumerate_valid(const Domain& dom, const EnvState& state) {
  std::vector<GroundAction> out;
  for (const auto& schema : dom.schemas) {
    std::vector<std::vector<std::string>> candidates;
    candidates.reserve(static_cast<size_t>(schema.arity()));
    bool empty_slot = false;
    for (const auto& ptype : schema.param_types) {
      std::vector<std::string> objs;
      for (const auto& [name, type] : state.objects.type_of)
        if (dom.type_matches(ptype, type)) objs.push_back(name);
      if (objs.empty()) empty_slot = true;
      candidates.push_back(std::move(objs));  // map iteration is already sorted
    }
    if (empty_slot && schema.arity() > 0) continue;
    std::vector<size_t> idx(static_cast<size_t>(schema.arity()), 0);
    while (true) {
      std::vector<std::string> args;
      args.reserve(idx.size());
      for (size_t i = 0; i < idx.size(); ++i) args.push_back(candidates[i][idx[i]]);
      bool distinct_ok = true;
      if (schema.distinct_params) {
        for (size_t i = 0; i < args.size() && distinct_ok; ++i)
          for (size_t j = i + 1; j < args.size(); ++j)
            if (args[i] == args[j]) { distinct_ok = false; break; }
      }
      if (distinct_ok) {
        GroundAction a = make_ground_action(schema, args);
        if (action_applicable(dom, state, a)) out.push_back(std::move(a));
      }
      // odometer, last slot fastest: tuples come out lexicographically
      size_t k = idx.size();
      while (k > 0) {
        --k;
        if (++idx[k] < candidates[k].size()) break;
        idx[k] = 0;
        if (k == 0) { k = SIZE_MAX; break; }
      }
      if (idx.empty() || k == SIZE_MAX) break;
    }
  }
  return out;
}

inline std::string valid_actions_observation(const Domain& dom, const EnvState& state) {
  const auto actions = enumerate_valid(dom, state);
  std::vector<std::string> surfaces;
  surfaces.reserve(actions.size());
  for (const auto& a : actions) surfaces.push_back(a.surface);
  std::string msg = kValidActionsPrefix + text::join(surfaces, ", ");
  if (!surfaces.empty()) msg += " ";
  msg += kMetaActionsSuffix;
  return msg;
}

inline std::pair<EnvState, StepOutcome> step(const Domain& dom, const EnvState& state,
                                             const GoalSpec& goal, const NormalizedAction& action) {
  StepOutcome out;
  if (std::holds_alternative<MetaAction>(action)) {
    switch (std::get<MetaAction>(action)) {
      case MetaAction::CheckValidActions:
        out.observation = valid_actions_observation(dom, state);
        break;
      case MetaAction::LookAround:
        out.observation = render_observation(dom, state);
        break;
    }
    out.executable = true;
    out.progress = progress(state, goal);
    out.done = out.progress == 1.0;
    return {state, out};
  }
  if (std::holds_alternative<Unparseable>(action)) {
    out.observation = kInvalidActionObservation;
    out.executable = false;
    out.progress = progress(state, goal);
    out.done = out.progress == 1.0;
    return {state, out};
  }

  const GroundAction& ga = std::get<GroundAction>(action);
  if (!action_applicable(dom, state, ga)) {
    out.observation = kInvalidActionObservation;
    out.executable = false;
    out.progress = progress(state, goal);
    out.done = out.progress == 1.0;
    return {state, out};
  }

  const ActionSchema* schema = dom.find_schema(ga.name);
  EnvState next = state;
  for (const auto& lit : schema->del) next.facts.erase(detail::ground_literal(lit, ga.args));
  for (const auto& lit : schema->add) next.facts.insert(detail::ground_literal(lit, ga.args));

  if (!schema->obs_tpl.empty()) {
    out.observation = text::expand(schema->obs_tpl, ga.args);
  } else {
    std::vector<std::string> sentences;
    for (const auto& lit : schema->add) {
      const Fact f = detail::ground_literal(lit, ga.args);
      if (!state.holds(f)) sentences.push_back(fact_sentence(dom, f));
    }
    std::sort(sentences.begin(), sentences.end(), text::ci_less);
    out.observation = text::join(sentences, " ");
  }
  out.executable = true;
  out.progress = progress(next, goal);
  out.done = out.progress == 1.0;
  if (out.done) {
    if (!out.observation.empty()) out.observation += " ";
    out.observation += kGoalCompletedSuffix;
  }
  return {next, out};
}

inline std::pair<EnvState, StepOutcome> step_text(const Domain& dom, const EnvState& state,
                                                  const GoalSpec& goal, const std::string& raw) {
  return step(dom, state, goal, normalize_action(dom, state.objects, raw));
}

// --- BFS plan oracle ---

namespace detail {

inline std::string state_key(const EnvState& s) {
  std::string key;
  for (const auto& f : s.facts) {
    key += f.pred;
    for (const auto& a : f.args) { key += ','; key += a; }
    key += ';';
  }
  return key;
}

}  // namespace detail

// Shortest plan by breadth-first search over step/enumerate_valid, ties broken
// by enumeration order. Returns std::nullopt when no plan exists within
// max_depth.
inline std::optional<std::vector<GroundAction>> bfs_solve(const Domain& dom, const EnvState& start,
                                                          const GoalSpec& goal, int max_depth) {
  if (max_depth < 1) return std::nullopt;
  if (progress(start, goal) == 1.0) return std::vector<GroundAction>{};

  struct Node {
    EnvState state;
    int parent = -1;
    GroundAction via;
    int depth = 0;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> visited;
  nodes.push_back({start, -1, {}, 0});
  visited.insert(detail::state_key(start));
  std::deque<int> frontier{0};

  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    if (nodes[static_cast<size_t>(cur)].depth >= max_depth) continue;
    for (const auto& action : enumerate_valid(dom, nodes[static_cast<size_t>(cur)].state)) {
      auto [next, outcome] = step(dom, nodes[static_cast<size_t>(cur)].state, goal, NormalizedAction{action});
      std::string key = detail::state_key(next);
      if (!visited.insert(std::move(key)).second) continue;
      nodes.push_back({std::move(next), cur, action, nodes[static_cast<size_t>(cur)].depth + 1});
      const int id = static_cast<int>(nodes.size()) - 1;
      if (outcome.done) {
        std::vector<GroundAction> plan;
        for (int n = id; n > 0; n = nodes[static_cast<size_t>(n)].parent)
          plan.push_back(nodes[static_cast<size_t>(n)].via);
        std::reverse(plan.begin(), plan.end());
        return plan;
      }
      frontier.push_back(id);
    }
  }
  return std::nullopt;
}

}  // namespace swm
