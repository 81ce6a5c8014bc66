/*
 * Copyright 2026 The varord authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VARORD_PARSER_HPP
#define VARORD_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "varord/polynomial.hpp"

namespace varord {

/// Raised on any malformed polynomial text; `position` is the 0-based
/// offset of the offending character in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses polynomial text over the given variable names.
///
/// Grammar: integer literals; identifiers [A-Za-z][A-Za-z0-9_]*; binary
/// + - *; unary -; ^ with a nonnegative integer literal exponent;
/// parentheses; explicit '*' (no juxtaposition); whitespace insignificant.
/// Every identifier must appear in `variables`.
Polynomial parse_poly(const std::string& text,
                      const std::vector<std::string>& variables);

/// Parses a list of polynomial strings into a system over shared names.
PolySystem parse_system(const std::vector<std::string>& polys,
                        const std::vector<std::string>& variables);

}  // namespace varord

#endif  // VARORD_PARSER_HPP
