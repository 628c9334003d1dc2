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

#include "storyweave/cli/config.hpp"

#include <charconv>
#include <limits>
#include <variant>

#include "storyweave/error.hpp"
#include "storyweave/tools/scenario_io.hpp"

namespace storyweave::cli {
namespace {

using Value = std::variant<std::string, std::int64_t, double, bool>;

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class ConfigParser {
 public:
  ConfigParser(std::string_view text, std::filesystem::path dir) : text_(text) {
    config_.dir = std::move(dir);
  }

  ProjectConfig run() {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_;
      line(text_.substr(pos, end - pos));
      pos = end + 1;
    }
    return std::move(config_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kFormat,
                std::string(kConfigFileName) + ":" + std::to_string(line_) + ": " + message);
  }

  void line(std::string_view raw) {
    std::string_view s = trim(strip_comment(raw));
    if (s.empty()) return;
    if (s.front() == '[') {
      if (s.back() != ']') fail("unterminated section header");
      section_ = std::string(trim(s.substr(1, s.size() - 2)));
      if (section_ != "ensemble" && section_ != "weights" && section_ != "adapter" &&
          section_ != "mock" && section_ != "exec" && section_ != "http" && section_ != "run") {
        fail("unknown section [" + section_ + "]");
      }
      return;
    }
    auto eq = s.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string key(trim(s.substr(0, eq)));
    if (key.empty()) fail("missing key");
    assign(key, value(trim(s.substr(eq + 1))));
  }

  static std::string_view strip_comment(std::string_view s) {
    bool quoted = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '\\' && quoted) {
        ++i;
      } else if (s[i] == '"') {
        quoted = !quoted;
      } else if (s[i] == '#' && !quoted) {
        return s.substr(0, i);
      }
    }
    return s;
  }

  Value value(std::string_view s) const {
    if (s.empty()) fail("missing value");
    if (s.front() == '"') {
      if (s.size() < 2 || s.back() != '"') fail("unterminated string");
      std::string out;
      for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '\\' && i + 2 < s.size()) {
          char c = s[++i];
          out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
        } else {
          out += s[i];
        }
      }
      return out;
    }
    if (s == "true") return true;
    if (s == "false") return false;
    std::int64_t i = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), i);
    if (ec == std::errc() && p == s.data() + s.size()) return i;
    double d = 0;
    auto [pd, ecd] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ecd == std::errc() && pd == s.data() + s.size()) return d;
    fail("cannot parse value '" + std::string(s) + "'");
  }

  std::string as_string(const Value& v, const std::string& key) const {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    fail("'" + key + "' must be a string");
  }

  std::int64_t as_int(const Value& v, const std::string& key, std::int64_t min) const {
    const auto* i = std::get_if<std::int64_t>(&v);
    if (i == nullptr) fail("'" + key + "' must be an integer");
    if (*i < min) fail("'" + key + "' must be at least " + std::to_string(min));
    return *i;
  }

  double as_number(const Value& v, const std::string& key) const {
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    fail("'" + key + "' must be a number");
  }

  bool as_bool(const Value& v, const std::string& key) const {
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    fail("'" + key + "' must be true or false");
  }

  void assign(const std::string& key, const Value& v) {
    const std::string qualified = section_.empty() ? key : section_ + "." + key;
    if (section_.empty()) {
      if (key == "seed") config_.seed = static_cast<std::uint64_t>(as_int(v, key, 0));
      else if (key == "max_depth") {
        auto d = as_int(v, key, 1);
        if (d > std::numeric_limits<std::uint32_t>::max()) fail("'max_depth' is too large");
        config_.max_depth = static_cast<std::uint32_t>(d);
      }
      else if (key == "max_nodes") config_.max_nodes = static_cast<std::size_t>(as_int(v, key, 1));
      else if (key == "renderer") config_.renderer = as_string(v, key);
      else fail("unknown key '" + key + "'");
    } else if (section_ == "ensemble") {
      if (key == "enumerate_limit") config_.enumerate_limit = static_cast<std::size_t>(as_int(v, qualified, 0));
      else if (key == "walk_samples") config_.walk_samples = static_cast<std::size_t>(as_int(v, qualified, 1));
      else fail("unknown key '" + qualified + "'");
    } else if (section_ == "weights") {
      config_.weights[key] = as_int(v, qualified, 0);
    } else if (section_ == "adapter") {
      if (key != "kind") fail("unknown key '" + qualified + "'");
      try {
        config_.adapter.kind = parse_adapter_kind(as_string(v, qualified));
      } catch (const Error& e) {
        fail(e.what());
      }
    } else if (section_ == "mock") {
      std::string verdict = as_string(v, qualified);
      OutcomeStatus status;
      if (verdict == "pass") status = OutcomeStatus::kPass;
      else if (verdict == "fail") status = OutcomeStatus::kFail;
      else if (verdict == "error") status = OutcomeStatus::kError;
      else fail("mock verdict must be \"pass\", \"fail\" or \"error\"");
      config_.adapter.mock.verdicts[key] = status;
    } else if (section_ == "exec") {
      if (key == "command") config_.adapter.exec.command = as_string(v, qualified);
      else if (key == "timeout") config_.adapter.exec.timeout_seconds = as_number(v, qualified);
      else fail("unknown key '" + qualified + "'");
    } else if (section_ == "http") {
      if (key == "base_url") config_.adapter.http.base_url = as_string(v, qualified);
      else if (key == "timeout") config_.adapter.http.timeout_seconds = as_number(v, qualified);
      else if (key == "status_min") config_.adapter.http.status_min = static_cast<int>(as_int(v, qualified, 100));
      else if (key == "status_max") config_.adapter.http.status_max = static_cast<int>(as_int(v, qualified, 100));
      else fail("unknown key '" + qualified + "'");
    } else if (section_ == "run") {
      if (key == "workers") config_.run.workers = static_cast<std::size_t>(as_int(v, qualified, 1));
      else if (key == "stop_on_failure") config_.run.stop_on_failure = as_bool(v, qualified);
      else if (key == "tags") config_.tags = split_tags(as_string(v, qualified));
      else fail("unknown key '" + qualified + "'");
    }
  }

  static std::vector<std::string> split_tags(std::string_view s) {
    std::vector<std::string> out;
    while (!s.empty()) {
      auto comma = s.find(',');
      auto tag = trim(s.substr(0, comma));
      if (!tag.empty()) out.emplace_back(tag);
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return out;
  }

  std::string_view text_;
  std::size_t line_ = 0;
  std::string section_;
  ProjectConfig config_;
};

}  // namespace

ProjectConfig parse_config(std::string_view text, std::filesystem::path dir) {
  return ConfigParser(text, std::move(dir)).run();
}

ProjectConfig load_config(const std::filesystem::path& dir) {
  std::filesystem::path file = dir / kConfigFileName;
  std::error_code ec;
  if (!std::filesystem::exists(file, ec)) {
    ProjectConfig config;
    config.dir = dir;
    return config;
  }
  return parse_config(read_text_file(file), dir);
}

}  // namespace storyweave::cli
