// Copyright 2026 The claimcond authors
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

#ifndef CLAIMCOND_UTF8_HPP_
#define CLAIMCOND_UTF8_HPP_

#include <cstddef>
#include <string_view>

namespace claimcond::utf8 {

/// Number of code points in a UTF-8 string.
std::size_t length(std::string_view s);

/// Byte position of the code point with index cp; cp == length(s) maps to
/// s.size(). Throws std::out_of_range beyond that.
std::size_t byte_index(std::string_view s, std::size_t cp);

/// Substring [k, l) in code point indices.
std::string_view slice(std::string_view s, std::size_t k, std::size_t l);

/// Strict UTF-8 well-formedness check.
bool valid(std::string_view s);

}  // namespace claimcond::utf8

#endif  // CLAIMCOND_UTF8_HPP_
