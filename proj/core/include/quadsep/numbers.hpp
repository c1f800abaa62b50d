/*
Copyright 2026 The quadsep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace quadsep {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Whole-token parse; nullopt on trailing garbage, overflow or non-finite.
std::optional<double> parse_double(std::string_view token);
std::optional<long long> parse_integer(std::string_view token);

}  // namespace quadsep
