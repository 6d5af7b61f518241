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

#ifndef KSTAB_CLI_INPUTS_HPP
#define KSTAB_CLI_INPUTS_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "kstab/weierstrass.hpp"

namespace kstab::cli {

/// Literals as read from a model file or the command line.
struct ModelSource {
    std::string A, B;
    unsigned chi = 1;
};

using Input = std::variant<ModelSource, FiberConfig>;

/// Reads a model ({chi, A, B}) or fiber configuration ({chi, fibers}) from
/// a JSON file, or a model from a flat TOML file.
Input read_input_file(const std::string& path);

/// Parses the text of a JSON document; \p origin names it in diagnostics.
Input parse_json_input(const std::string& text, const std::string& origin);

/// Flat TOML subset: key = "string" or key = integer, with # comments.
ModelSource parse_toml_model(const std::string& text);

}  // namespace kstab::cli

#endif  // KSTAB_CLI_INPUTS_HPP
