// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDFORGE_MATROID_IO_H_
#define MATROIDFORGE_MATROID_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "matroidforge/binary_matroid.h"

namespace matroidforge {

// Text format (.bm):
//   line 1: "<rows> <cols>"
//   line 2: <cols> whitespace-separated labels
//   then <rows> lines of exactly <cols> characters from {0,1}.
// The trailing newline is optional. Parse failures throw ParseError with a
// "source:line:column" prefix.
BinaryMatroid parse_bm(std::string_view text,
                       std::string_view source = "<input>");
BinaryMatroid read_bm_file(const std::filesystem::path& path);

// Writes the canonical (reduced) representation, newline-terminated.
std::string format_bm(const BinaryMatroid& m);
void write_bm_file(const std::filesystem::path& path, const BinaryMatroid& m);

}  // namespace matroidforge

#endif  // MATROIDFORGE_MATROID_IO_H_
