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

#include "claimcond/utf8.hpp"

#include <stdexcept>

namespace claimcond::utf8 {

namespace {
inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }
}  // namespace

std::size_t length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char b : s) {
    if (!is_continuation(b)) ++n;
  }
  return n;
}

std::size_t byte_index(std::string_view s, std::size_t cp) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(s[i]))) {
      if (seen == cp) return i;
      ++seen;
    }
  }
  if (seen == cp) return s.size();
  throw std::out_of_range("code point index past end of string");
}

std::string_view slice(std::string_view s, std::size_t k, std::size_t l) {
  if (l < k) throw std::out_of_range("slice end before start");
  const std::size_t begin = byte_index(s, k);
  const std::size_t end = byte_index(s, l);
  return s.substr(begin, end - begin);
}

bool valid(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b = static_cast<unsigned char>(s[i]);
    std::size_t len;
    unsigned long cp;
    if (b < 0x80) {
      len = 1;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t j = 1; j < len; ++j) {
      const unsigned char c = static_cast<unsigned char>(s[i + j]);
      if (!is_continuation(c)) return false;
      cp = (cp << 6) | (c & 0x3F);
    }
    // overlong encodings, surrogates, out of range
    if (len == 2 && cp < 0x80) return false;
    if (len == 3 && cp < 0x800) return false;
    if (len == 4 && cp < 0x10000) return false;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

}  // namespace claimcond::utf8
