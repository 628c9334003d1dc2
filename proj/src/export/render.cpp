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

#include "storyweave/export/render.hpp"

#include <chrono>

#include "storyweave/error.hpp"
#include "storyweave/runner/process.hpp"

namespace storyweave {

void render_pdf(std::string_view graph_description, const std::filesystem::path& output,
                const std::string& renderer) {
  const std::string name = renderer.empty() ? "dot" : renderer;
  auto exe = find_executable(name);
  if (!exe) {
    throw Error(ErrorCode::kRendererNotFound,
                "graph renderer '" + name + "' not found; install graphviz or set the '" +
                    kRendererConfigKey + "' key in config.toml");
  }
  ProcessRequest req;
  req.argv = {exe->string(), "-Tpdf", "-o", output.string()};
  req.stdin_text = std::string(graph_description);
  req.timeout = std::chrono::seconds(120);
  ProcessResult res = run_process(req);
  if (res.spawn_failed || res.timed_out || res.exit_code != 0) {
    std::string detail = res.timed_out ? "timed out" : res.stderr_text;
    throw Error(ErrorCode::kRendererFailed,
                name + " exited with status " + std::to_string(res.exit_code) + ": " + detail);
  }
  std::error_code ec;
  if (!std::filesystem::exists(output, ec) || std::filesystem::file_size(output, ec) == 0) {
    throw Error(ErrorCode::kRendererFailed, name + " produced no output at " + output.string());
  }
}

}  // namespace storyweave
