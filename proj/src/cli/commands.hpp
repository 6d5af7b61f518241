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

#ifndef KSTAB_CLI_COMMANDS_HPP
#define KSTAB_CLI_COMMANDS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "inputs.hpp"
#include "kstab/stability.hpp"

namespace kstab::cli {

enum class Format { Text, Json };

struct Common {
    std::string file;
    std::string A, B;
    unsigned chi = 1;
    bool minimalize = false;
    std::string format;  ///< empty: the command's default
};

struct Resolved {
    FiberConfig config;
    std::vector<Place> removed;
};

Format resolve_format(const Common& c, Format fallback);

/// Loads the single input source and reduces a model to its fiber configuration.
Resolved resolve(const Common& c);

/// Base log-twisted curve of a fibration, polarized by |deg K| (or 1 when K is trivial).
LogTwistedCurve base_curve(const FiberConfig& config);

nlohmann::json verdict_json(const Verdict& v);
nlohmann::json report_json(const AdiabaticReport& r);
std::string witness_name(const std::optional<Place>& p);

struct ScanOptions {
    std::vector<std::string> params;  ///< "name=start:stop:step"
    std::optional<unsigned long> cap;
    unsigned jobs = 1;
};

int cmd_scan(const Common& c, const ScanOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace kstab::cli

#endif  // KSTAB_CLI_COMMANDS_HPP
