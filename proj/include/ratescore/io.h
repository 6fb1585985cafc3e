// Copyright 2026 The ratescore Authors
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

#ifndef RATESCORE_IO_H_
#define RATESCORE_IO_H_

#include <string>
#include <string_view>
#include <vector>

namespace ratescore {

// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// Splits on '\n' and drops a trailing '\r' from each line. A final newline
// does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view content);

std::vector<std::string_view> split_tabs(std::string_view line);

std::string_view trim(std::string_view text);

// "path:line: message"
std::string located(const std::string& path, std::size_t line,
                    std::string_view message);

}  // namespace ratescore

#endif  // RATESCORE_IO_H_
