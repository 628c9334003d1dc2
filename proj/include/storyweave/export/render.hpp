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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace storyweave {

inline constexpr const char* kRendererConfigKey = "renderer";

// Pipes a dot-language description through an external renderer
// (`<renderer> -Tpdf -o <output>`). `renderer` may be a path or a bare name
// looked up on PATH; empty means "dot".
// Errors: kRendererNotFound, kRendererFailed (message carries stderr).
void render_pdf(std::string_view graph_description, const std::filesystem::path& output,
                const std::string& renderer = "");

}  // namespace storyweave
