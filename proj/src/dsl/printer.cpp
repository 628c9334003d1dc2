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

#include "storyweave/dsl/printer.hpp"

namespace storyweave::dsl {
namespace {

class Printer {
 public:
  std::string run(const ModelAst& ast) {
    for (const auto& decl : ast.highlevel) {
      out_ += "highlevel ";
      for (std::size_t i = 0; i < decl.names.size(); ++i) {
        if (i) out_ += ", ";
        out_ += decl.names[i];
      }
      out_ += "\n";
    }
    for (const auto& def : ast.event_defs) {
      out_ += "event " + def.name + "(";
      for (std::size_t i = 0; i < def.params.size(); ++i) {
        if (i) out_ += ", ";
        out_ += def.params[i];
      }
      out_ += ") = [";
      for (std::size_t i = 0; i < def.body.size(); ++i) {
        if (i) out_ += ", ";
        expr(def.body[i]);
      }
      out_ += "]\n";
    }
    for (const auto& story : ast.stories) {
      out_ += "story " + quote_string(story.name) + " ";
      block(story.body);
      out_ += "\n";
    }
    return std::move(out_);
  }

 private:
  void indent() { out_.append(static_cast<std::size_t>(depth_) * 2, ' '); }

  void block(const Block& body) {
    out_ += "{\n";
    ++depth_;
    for (const auto& stmt : body) statement(stmt);
    --depth_;
    indent();
    out_ += "}";
  }

  void statement(const Stmt& stmt) {
    indent();
    std::visit([this](const auto& node) { emit(node); }, stmt.node);
    out_ += "\n";
  }

  void emit(const RequestStmt& s) {
    out_ += "request ";
    expr(s.event);
  }
  void emit(const WaitForStmt& s) {
    out_ += "waitFor ";
    pattern_set(s.patterns);
  }
  void emit(const BlockUntilStmt& s) {
    out_ += "block ";
    pattern_set(s.blocked);
    out_ += " until ";
    expr(s.release);
  }
  void emit(const RepeatStmt& s) {
    out_ += "repeat " + std::to_string(s.count) + " ";
    block(s.body);
  }
  void emit(const ForeverStmt& s) {
    out_ += "forever ";
    block(s.body);
  }
  void emit(const ChooseStmt& s) {
    out_ += "choose { ";
    for (std::size_t i = 0; i < s.branches.size(); ++i) {
      if (i) out_ += " or ";
      ++depth_;
      block(s.branches[i]);
      --depth_;
    }
    out_ += " }";
  }
  void emit(const SessionStmt& s) {
    out_ += "session " + s.id + " ";
    block(s.body);
  }

  void pattern_set(const std::vector<EventExpr>& patterns) {
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (i) out_ += ", ";
      expr(patterns[i]);
    }
  }

  void expr(const EventExpr& e) {
    out_ += e.name;
    if (e.fields.empty()) return;
    out_ += "(";
    for (std::size_t i = 0; i < e.fields.size(); ++i) {
      if (i) out_ += ", ";
      out_ += e.fields[i].key + ": ";
      const Literal& v = e.fields[i].value;
      switch (v.kind) {
        case Literal::Kind::kString: out_ += quote_string(v.text); break;
        case Literal::Kind::kInt: out_ += std::to_string(v.number); break;
        case Literal::Kind::kIdent: out_ += v.text; break;
      }
    }
    out_ += ")";
  }

  std::string out_;
  int depth_ = 0;
};

}  // namespace

std::string quote_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string pretty_print(const ModelAst& ast) { return Printer().run(ast); }

}  // namespace storyweave::dsl
