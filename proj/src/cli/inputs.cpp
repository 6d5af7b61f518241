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

#include "inputs.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kstab/literal.hpp"

namespace kstab::cli {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

unsigned read_chi(const json& j)
{
    if (!j.contains("chi")) return 1;
    if (!j["chi"].is_number_integer() || j["chi"].get<long>() <= 0) throw InputError("\"chi\" must be a positive integer");
    return j["chi"].get<unsigned>();
}

std::string read_literal(const json& j, const char* key)
{
    if (!j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
    if (j[key].is_string()) return j[key].get<std::string>();
    if (j[key].is_number_integer()) return std::to_string(j[key].get<long>());
    throw InputError(std::string("\"") + key + "\" must be a polynomial literal string");
}

FiberEntry read_fiber(const json& f, std::size_t i)
{
    const std::string where = "fibers[" + std::to_string(i) + "]";
    if (!f.is_object() || !f.contains("type") || !f["type"].is_string()) throw InputError(where + ": missing \"type\"");
    FiberEntry e{KodairaType::parse(f["type"].get<std::string>()), 1, 1, std::nullopt, std::nullopt};
    for (const char* key : {"m", "deg"}) {
        if (!f.contains(key)) continue;
        if (!f[key].is_number_integer() || f[key].get<long>() <= 0) throw InputError(where + ": \"" + key + "\" must be a positive integer");
    }
    if (f.contains("m")) e.m = f["m"].get<unsigned>();
    if (f.contains("deg")) e.deg = f["deg"].get<std::size_t>();
    if (f.contains("place")) {
        if (!f["place"].is_string()) throw InputError(where + ": \"place\" must be a string");
        const std::string p = f["place"].get<std::string>();
        e.place = p == "infinity" ? Place::infinity() : Place::finite(parse_univariate(p));
        if (!f.contains("deg")) e.deg = e.place->degree();
    }
    return e;
}

}  // namespace

Input parse_json_input(const std::string& text, const std::string& origin)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(origin + ": malformed JSON", line, col);
    }
    if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
    if (j.contains("fibers")) {
        if (!j["fibers"].is_array()) throw InputError(origin + ": \"fibers\" must be an array");
        FiberConfig cfg;
        cfg.chi = read_chi(j);
        for (std::size_t i = 0; i < j["fibers"].size(); ++i) cfg.entries.push_back(read_fiber(j["fibers"][i], i));
        return cfg;
    }
    return ModelSource{read_literal(j, "A"), read_literal(j, "B"), read_chi(j)};
}

ModelSource parse_toml_model(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_chi = false;
    ModelSource m;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        auto skip = [&] {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        };
        skip();
        if (i == line.size() || line[i] == '#') continue;
        const std::size_t key_start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        const std::string key = line.substr(key_start, i - key_start);
        if (key.empty()) throw ParseError("expected a key", lineno, i + 1);
        skip();
        if (i == line.size() || line[i] != '=') throw ParseError("expected '='", lineno, i + 1);
        ++i;
        skip();
        std::string value;
        bool quoted = false;
        if (i < line.size() && line[i] == '"') {
            quoted = true;
            const std::size_t close = line.find('"', i + 1);
            if (close == std::string::npos) throw ParseError("unterminated string", lineno, i + 1);
            value = line.substr(i + 1, close - i - 1);
            i = close + 1;
        } else {
            const std::size_t start = i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            if (i == start) throw ParseError("expected a string or an integer", lineno, i + 1);
            value = line.substr(start, i - start);
        }
        skip();
        if (i < line.size() && line[i] != '#') throw ParseError("trailing characters", lineno, i + 1);
        if (key == "chi") {
            if (quoted || value.size() > 6) throw ParseError("chi must be a small integer", lineno, key_start + 1);
            m.chi = static_cast<unsigned>(std::stoul(value));
            have_chi = true;
        } else if (key == "A") {
            m.A = value;
        } else if (key == "B") {
            m.B = value;
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, key_start + 1);
        }
        kv[key] = value;
    }
    if (!kv.count("A") || !kv.count("B")) throw InputError("model file needs both A and B");
    if (have_chi && m.chi == 0) throw InputError("chi must be positive");
    return m;
}

Input read_input_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string text = ss.str();
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0) return parse_toml_model(text);
    return parse_json_input(text, path);
}

}  // namespace kstab::cli
