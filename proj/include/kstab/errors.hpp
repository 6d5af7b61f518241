/*
   Copyright 2026 The kstab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KSTAB_ERRORS_HPP
#define KSTAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kstab {

/// Bad user input: malformed literals, invalid models or configurations.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Literal parse failure with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : InputError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Two independent computations disagreed, or an internal identity failed.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace kstab

#endif  // KSTAB_ERRORS_HPP
