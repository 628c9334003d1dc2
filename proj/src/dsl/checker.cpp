// Copyright 2026 The Storyweave Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "storyweave/dsl/checker.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

namespace storyweave::dsl {
namespace {

struct PatternUse {
  std::string name;
  Span span;
};

class Checker {
 public:
  explicit Checker(const ModelAst& ast) : ast_(ast) {}

  CheckResult run() {
    collect_declarations();
    CheckedModel model;
    std::set<std::string> story_names;
    for (const auto& story : ast_.stories) {
      if (!story_names.insert(story.name).second) {
        error("duplicate-name", "story \"" + story.name + "\" is defined more than once", story.span);
        continue;
      }
      model.stories.push_back(CheckedStory{story.name, block(story.body, std::nullopt)});
    }
    for (const auto& use : patterns_) {
      if (!vocabulary_.contains(use.name)) {
        diagnostics_.push_back(Diagnostic{Severity::kWarning, "unmatched-pattern",
                                          "pattern names event '" + use.name +
                                              "' which no story requests",
                                          use.span});
      }
    }
    CheckResult result;
    if (!has_errors(diagnostics_)) {
      model.vocabulary = vocabulary_;
      result.model = expand_refinements(model);
    }
    result.diagnostics = std::move(diagnostics_);
    return result;
  }

 private:
  void error(std::string code, std::string message, const Span& span) {
    diagnostics_.push_back(Diagnostic{Severity::kError, std::move(code), std::move(message), span});
  }

  void collect_declarations() {
    for (const auto& decl : ast_.highlevel) {
      for (const auto& name : decl.names) highlevel_.insert(name);
    }
    for (const auto& def : ast_.event_defs) {
      if (defs_.contains(def.name)) {
        error("duplicate-name", "event '" + def.name + "' is defined more than once", def.span);
        continue;
      }
      defs_.emplace(def.name, &def);
    }
    for (const auto& [name, def] : defs_) check_event_def(*def);
  }

  void check_event_def(const EventDef& def) {
    std::set<std::string> params;
    for (const auto& p : def.params) {
      if (!params.insert(p).second) {
        error("duplicate-param", "parameter '" + p + "' is declared twice", def.span);
      }
    }
    for (const auto& tmpl : def.body) {
      if (defs_.contains(tmpl.name)) {
        error("nested-event-def",
              "'" + tmpl.name + "' is a high-level event and cannot appear in a refinement", tmpl.span);
      }
      std::set<std::string> keys;
      for (const auto& f : tmpl.fields) {
        if (!keys.insert(f.key).second) {
          error("duplicate-field", "field '" + f.key + "' is given twice", f.span);
        }
        if (f.key == kSessionField) {
          error("session-field-reserved", "the session field is set by session blocks", f.span);
        }
        if (f.value.kind == Literal::Kind::kIdent && !params.contains(f.value.text)) {
          error("unknown-param", "'" + f.value.text + "' is not a parameter of " + def.name, f.span);
        }
      }
    }
  }

  static FieldValue literal_value(const Literal& lit) {
    if (lit.kind == Literal::Kind::kInt) return lit.number;
    return lit.text;
  }

  FieldMap fields_of(const EventExpr& expr) {
    FieldMap fields;
    for (const auto& f : expr.fields) {
      if (!fields.emplace(f.key, literal_value(f.value)).second) {
        error("duplicate-field", "field '" + f.key + "' is given twice", f.span);
      }
    }
    return fields;
  }

  EventPattern pattern(const EventExpr& expr) {
    if (defs_.contains(expr.name)) {
      error("pattern-names-event-def",
            "pattern names high-level event '" + expr.name + "'; use one of its low-level events",
            expr.span);
    }
    patterns_.push_back(PatternUse{expr.name, expr.span});
    return EventPattern{expr.name, fields_of(expr)};
  }

  std::vector<EventPattern> patterns(const std::vector<EventExpr>& exprs) {
    std::vector<EventPattern> out;
    for (const auto& e : exprs) out.push_back(pattern(e));
    return out;
  }

  CheckedStmt request(const EventExpr& expr, const std::optional<std::string>& session) {
    FieldMap args = fields_of(expr);
    if (args.contains(kSessionField)) {
      error("session-field-reserved", "requests are tagged with a session by session blocks",
            expr.span);
    }
    auto def_it = defs_.find(expr.name);
    if (def_it == defs_.end()) {
      if (highlevel_.contains(expr.name)) {
        error("undefined-event-def",
              "high-level event '" + expr.name + "' has no event definition", expr.span);
      }
      if (session) args[kSessionField] = *session;
      vocabulary_.insert(expr.name);
      return CheckedStmt{Request{Event{expr.name, std::move(args)}}};
    }
    const EventDef& def = *def_it->second;
    std::set<std::string> params(def.params.begin(), def.params.end());
    std::set<std::string> given;
    for (const auto& [key, value] : args) given.insert(key);
    if (given != params) {
      error("arity-mismatch",
            "'" + def.name + "' takes " + std::to_string(def.params.size()) +
                " argument(s) " + param_list(def.params) + " but was given " +
                std::to_string(given.size()),
            expr.span);
    }
    Refinement ref{def.name, {}};
    for (const auto& tmpl : def.body) {
      Event ev{tmpl.name, {}};
      for (const auto& f : tmpl.fields) {
        if (f.value.kind == Literal::Kind::kIdent) {
          auto it = args.find(f.value.text);
          if (it != args.end()) ev.fields[f.key] = it->second;
        } else {
          ev.fields[f.key] = literal_value(f.value);
        }
      }
      if (session) ev.fields[kSessionField] = *session;
      vocabulary_.insert(ev.name);
      ref.expansion.push_back(std::move(ev));
    }
    return CheckedStmt{std::move(ref)};
  }

  static std::string param_list(const std::vector<std::string>& params) {
    std::string out = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ", ";
      out += params[i];
    }
    return out + ")";
  }

  CheckedBlock block(const Block& body, const std::optional<std::string>& session) {
    CheckedBlock out;
    for (const auto& stmt : body) statement(stmt, session, out);
    return out;
  }

  void statement(const Stmt& stmt, const std::optional<std::string>& session, CheckedBlock& out) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, RequestStmt>) {
            out.push_back(request(node.event, session));
          } else if constexpr (std::is_same_v<T, WaitForStmt>) {
            out.push_back(CheckedStmt{WaitFor{patterns(node.patterns)}});
          } else if constexpr (std::is_same_v<T, BlockUntilStmt>) {
            auto blocked = patterns(node.blocked);
            out.push_back(CheckedStmt{BlockUntil{std::move(blocked), pattern(node.release)}});
          } else if constexpr (std::is_same_v<T, RepeatStmt>) {
            if (node.count < 1 || node.count > std::numeric_limits<std::uint32_t>::max()) {
              error("bad-repeat-count", "repeat count must be between 1 and 4294967295", stmt.span);
            }
            out.push_back(CheckedStmt{Repeat{static_cast<std::uint32_t>(node.count),
                                             block(node.body, session)}});
          } else if constexpr (std::is_same_v<T, ForeverStmt>) {
            Forever fe{block(node.body, session)};
            if (can_skip(fe.body)) {
              error("forever-without-sync",
                    "forever body can complete without reaching request, waitFor or block",
                    stmt.span);
            }
            out.push_back(CheckedStmt{std::move(fe)});
          } else if constexpr (std::is_same_v<T, ChooseStmt>) {
            Choose ch;
            for (const auto& branch : node.branches) {
              ch.branches.push_back(block(branch, session));
              if (can_skip(ch.branches.back())) {
                error("silent-branch", "every choose branch must start with a sync statement",
                      stmt.span);
              }
            }
            out.push_back(CheckedStmt{std::move(ch)});
          } else if constexpr (std::is_same_v<T, SessionStmt>) {
            if (session) {
              error("nested-session",
                    "session " + node.id + " is nested inside session " + *session, stmt.span);
            }
            for (const auto& inner : node.body) statement(inner, node.id, out);
          }
        },
        stmt.node);
  }

  const ModelAst& ast_;
  std::set<std::string> highlevel_;
  std::map<std::string, const EventDef*> defs_;
  std::set<std::string> vocabulary_;
  std::vector<PatternUse> patterns_;
  std::vector<Diagnostic> diagnostics_;
};

CheckedBlock expand_block(const CheckedBlock& block) {
  CheckedBlock out;
  for (const auto& stmt : block) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Refinement>) {
            for (const auto& ev : node.expansion) out.push_back(CheckedStmt{Request{ev}});
          } else if constexpr (std::is_same_v<T, Repeat>) {
            out.push_back(CheckedStmt{Repeat{node.count, expand_block(node.body)}});
          } else if constexpr (std::is_same_v<T, Forever>) {
            out.push_back(CheckedStmt{Forever{expand_block(node.body)}});
          } else if constexpr (std::is_same_v<T, Choose>) {
            Choose ch;
            for (const auto& b : node.branches) ch.branches.push_back(expand_block(b));
            out.push_back(CheckedStmt{std::move(ch)});
          } else {
            out.push_back(CheckedStmt{node});
          }
        },
        stmt.node);
  }
  return out;
}

Json patterns_json(const std::vector<EventPattern>& patterns) {
  Json out = Json::array();
  for (const auto& p : patterns) out.push_back(p.to_json());
  return out;
}

Json block_json(const CheckedBlock& block) {
  Json out = Json::array();
  for (const auto& stmt : block) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Request>) {
            out.push_back(Json{{"request", node.event.to_json()}});
          } else if constexpr (std::is_same_v<T, Refinement>) {
            Json events = Json::array();
            for (const auto& e : node.expansion) events.push_back(e.to_json());
            out.push_back(Json{{"refine", Json{{"name", node.name}, {"expansion", events}}}});
          } else if constexpr (std::is_same_v<T, WaitFor>) {
            out.push_back(Json{{"waitFor", patterns_json(node.patterns)}});
          } else if constexpr (std::is_same_v<T, BlockUntil>) {
            out.push_back(Json{{"block", Json{{"patterns", patterns_json(node.blocked)},
                                              {"until", node.release.to_json()}}}});
          } else if constexpr (std::is_same_v<T, Repeat>) {
            out.push_back(Json{{"repeat", Json{{"count", node.count}, {"body", block_json(node.body)}}}});
          } else if constexpr (std::is_same_v<T, Forever>) {
            out.push_back(Json{{"forever", block_json(node.body)}});
          } else if constexpr (std::is_same_v<T, Choose>) {
            Json branches = Json::array();
            for (const auto& b : node.branches) branches.push_back(block_json(b));
            out.push_back(Json{{"choose", branches}});
          }
        },
        stmt.node);
  }
  return out;
}

}  // namespace

bool can_skip(const CheckedBlock& block) {
  for (const auto& stmt : block) {
    bool skippable = std::visit(
        [](const auto& node) -> bool {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Refinement>) return node.expansion.empty();
          else if constexpr (std::is_same_v<T, Repeat>) return can_skip(node.body);
          else if constexpr (std::is_same_v<T, Choose>)
            return std::any_of(node.branches.begin(), node.branches.end(),
                               [](const CheckedBlock& b) { return can_skip(b); });
          else return false;
        },
        stmt.node);
    if (!skippable) return false;
  }
  return true;
}

Json CheckedModel::to_json() const {
  Json stories_json = Json::array();
  for (const auto& s : stories) {
    stories_json.push_back(Json{{"name", s.name}, {"body", block_json(s.body)}});
  }
  return Json{{"stories", stories_json}, {"vocabulary", vocabulary}};
}

std::string CheckedModel::serialize() const {
  return to_json().dump(-1, ' ', false, Json::error_handler_t::replace);
}

CheckResult check(const ModelAst& ast) { return Checker(ast).run(); }

CheckedModel expand_refinements(const CheckedModel& model) {
  CheckedModel out;
  out.vocabulary = model.vocabulary;
  for (const auto& s : model.stories) out.stories.push_back(CheckedStory{s.name, expand_block(s.body)});
  return out;
}

}  // namespace storyweave::dsl
