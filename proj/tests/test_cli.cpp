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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gen.hpp"
#include "kstab/cli.hpp"

using namespace kstab;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("kstab_test_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

void check_round_trip(const std::string& emitted)
{
    CHECK(json::parse(emitted).dump(2) + "\n" == emitted);
}

}  // namespace

TEST_CASE("classify: II* at infinity and II at the origin")
{
    const Run r = run({"classify", "--A", "0", "--B", "t", "--chi", "1"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[1].rfind("infinity", 0) == 0);
    CHECK(l[1].find("(inf, 5, 10)") != std::string::npos);
    CHECK(l[1].find("II*") != std::string::npos);
    CHECK(l[2].rfind("t ", 0) == 0);
    CHECK(l[2].find(" II ") != std::string::npos);
    CHECK(l[3] == "euler sum 12 = 12*chi = 12 (ok)");

    const Run j = run({"classify", "--A", "0", "--B", "t", "--format", "json"});
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    CHECK(doc["euler_ok"] == true);
    CHECK(doc["fibers"][0]["type"] == "II*");
    CHECK(doc["fibers"][0]["lct"] == "1/6");
    CHECK(doc["fibers"][1]["valuations"] == json({"inf", "1", "2"}));
    check_round_trip(j.out);
}

TEST_CASE("classify: diagnostics")
{
    const Run bad = run({"classify", "--A", "t^", "--B", "t"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1, column 3") != std::string::npos);

    const std::string cfg = temp_file("deficit.json", R"({"chi": 1, "fibers": [{"type": "II*"}, {"type": "I1"}]})");
    const Run def = run({"classify", cfg});
    CHECK(def.code == 2);
    CHECK(def.err.find("deficit 1") != std::string::npos);

    const Run nonmin = run({"classify", "--A", "t^4", "--B", "t^6"});
    CHECK(nonmin.code == 2);
    CHECK(nonmin.err.find("--minimalize") != std::string::npos);

    const Run fixed = run({"classify", "--A", "t^4 + t^5", "--B", "t^6 + t^7", "--chi", "2", "--minimalize", "--format", "json"});
    REQUIRE(fixed.code == 0);
    CHECK(json::parse(fixed.out)["removed"] == json({"t"}));
}

TEST_CASE("input files")
{
    const std::string toml = temp_file("model.toml", "# II* + II\nchi = 1\nA = \"0\"\nB = \"t\"\n");
    const Run t = run({"verdict", toml});
    REQUIRE(t.code == 0);
    CHECK(json::parse(t.out)["base"]["tag"] == "KUnstable");

    const Run bad_toml = run({"classify", temp_file("bad.toml", "chi = 1\nA = \"0\" junk\n")});
    CHECK(bad_toml.code == 2);
    CHECK(bad_toml.err.find("line 2, column 9") != std::string::npos);

    const Run bad_json = run({"classify", temp_file("bad.json", "{\"chi\": 1,\n  \"A\": }")});
    CHECK(bad_json.code == 2);
    CHECK(bad_json.err.find("line 2") != std::string::npos);

    const std::string placed = temp_file("placed.json", R"({"chi": 1, "fibers": [{"type": "II*", "place": "infinity"}, {"type": "II", "place": "t"}]})");
    const Run p = run({"verdict", placed});
    REQUIRE(p.code == 0);
    CHECK(json::parse(p.out)["base"]["witness"] == "infinity");
}

TEST_CASE("verdict examples")
{
    const Run unstable = run({"verdict", "--A", "0", "--B", "t"});
    REQUIRE(unstable.code == 0);
    const json u = json::parse(unstable.out);
    CHECK(u["base"]["tag"] == "KUnstable");
    CHECK(u["base"]["witness"] == "infinity");
    CHECK(u["alpha_limit"] == "1/6");
    CHECK(u["delta_limit"] == "1/3");

    const Run reduced = run({"verdict", temp_file("twelve.json", R"({"chi": 1, "fibers": [{"type": "I1", "deg": 12}]})")});
    REQUIRE(reduced.code == 0);
    CHECK(json::parse(reduced.out)["base"]["tag"] == "UniformlyKStable");

    const Run two = run({"verdict", "--A", "0", "--B", "t^3"});
    REQUIRE(two.code == 0);
    const json w = json::parse(two.out);
    CHECK(w["base"]["tag"] == "KSemistableNotUniform");
    CHECK(w["base"]["note"].get<std::string>().find("polystable") == 0);
    check_round_trip(two.out);
}

TEST_CASE("exit codes")
{
    CHECK(run({"verdict", "--A", "0", "--B", "t"}).code == 0);
    CHECK(run({"verdict", "--A", "0", "--B", "t", "--canonical"}).code == 1);
    CHECK(run({}).code == 2);
    CHECK(run({"classify"}).code == 2);
    CHECK(run({"classify", "x.json", "--A", "0", "--B", "t"}).code == 2);
    CHECK(run({"classify", "--A", "0"}).code == 2);
    CHECK(run({"classify", "--A", "0", "--B", "t", "--format", "xml"}).code == 2);
    CHECK(run({"classify", "--A", "0", "--B", "0"}).code == 2);
    CHECK(run({"classify", "/nonexistent/model.json"}).code == 2);
    CHECK(run({"beta", "--A", "0", "--B", "t", "--eps", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("limits, beta and weights")
{
    const Run l = run({"limits", "--A", "0", "--B", "t", "--format", "json"});
    REQUIRE(l.code == 0);
    CHECK(json::parse(l.out) == json({{"alpha_limit", "1/6"}, {"delta_limit", "1/3"}}));

    const Run b = run({"beta", "--A", "0", "--B", "t", "--format", "json"});
    REQUIRE(b.code == 0);
    const json bj = json::parse(b.out);
    CHECK(bj["d"] == "1");
    CHECK(bj["places"][0] == json({{"place", "infinity"}, {"coefficient", "5/6"}, {"beta", "-1/3"}}));
    CHECK(bj["places"].back()["beta"] == "1/2");

    const Run pb = run({"beta", "--A", "0", "--B", "t", "--eps", "0", "--format", "json"});
    REQUIRE(pb.code == 0);
    CHECK(json::parse(pb.out)["places"] == bj["places"]);

    const Run m = run({"weights", "--A", "0", "--B", "t", "--a", "1"});
    REQUIRE(m.code == 0);
    const json mj = json::parse(m.out);
    CHECK(mj["mu"] == -8);
    CHECK(mj["df"] == "-1/3");
    check_round_trip(m.out);

    const Run hm = run({"weights", "--lambda", "1,0,-1", "--F", "x^3 + y^3 + z^3"});
    REQUIRE(hm.code == 0);
    CHECK(json::parse(hm.out)["mu"] == 3);
    CHECK(run({"weights", "--lambda", "1,1,1", "--F", "x^3"}).code == 2);
    CHECK(run({"weights", "--lambda", "1,0,-1", "--F", "x^3", "--G", "2*x^3"}).code == 2);
}

TEST_CASE("scan: one-parameter family B = s^5 t + c t^6")
{
    const Run r = run({"scan", "--A", "0", "--B", "t + c*t^6", "--param", "c=0:2:1"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == "A-coeffs,B-coeffs,types,verdict");
    CHECK(l[1] == "0;0;0;0;0,0;1;0;0;0;0;0,II*;II,KUnstable");
    CHECK(l[2] == "0;0;0;0;0,0;1;0;0;0;0;1,6*II,UniformlyKStable");
    CHECK(l[3] == "0;0;0;0;0,0;1;0;0;0;0;2,6*II,UniformlyKStable");
    CHECK(r.err.find("scanned 3 models") != std::string::npos);
}

TEST_CASE("scan: edge cases")
{
    const Run empty = run({"scan", "--A", "0", "--B", "t", "--param", "c=1:0:1"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "A-coeffs,B-coeffs,types,verdict\n");

    const Run singular = run({"scan", "--A", "-3*c^2", "--B", "2*c^3 + t", "--param", "c=-1:1:1"});
    REQUIRE(singular.code == 0);
    const auto l = lines(singular.out);
    REQUIRE(l.size() == 4);
    CHECK(l[2].substr(l[2].rfind(',') + 1) == "KUnstable");
    CHECK(run({"scan", "--A", "c", "--B", "0", "--param", "c=0:1:1"}).out.find(",singular\n") != std::string::npos);

    const Run nonmin = run({"scan", "--A", "c*t^4", "--B", "t^6", "--param", "c=0:1:1"});
    CHECK(nonmin.out.find("non-minimal") != std::string::npos);

    const Run cap = run({"scan", "--A", "0", "--B", "c*t", "--param", "c=0:99:1", "--cap", "10"});
    CHECK(cap.code == 2);
    CHECK(cap.err.find("10 pieces") != std::string::npos);

    ::setenv("KSTAB_SCAN_CAP", "5", 1);
    CHECK(run({"scan", "--A", "0", "--B", "c*t", "--param", "c=0:9:1"}).code == 2);
    ::unsetenv("KSTAB_SCAN_CAP");
    CHECK(run({"scan", "--A", "0", "--B", "c*t", "--param", "c=0:9:1"}).code == 0);

    CHECK(run({"scan", "--A", "0", "--B", "c*t", "--param", "c=0:1:0"}).code == 2);
    CHECK(run({"scan", "--A", "0", "--B", "c*t +", "--param", "c=0:1:1"}).code == 2);
}

TEST_CASE("scan output does not depend on --jobs")
{
    const std::vector<std::string> base = {"scan", "--A", "a*t^2 - 1", "--B", "t + b*t^3 + t^6",
                                           "--param", "a=-2:2:1/2", "--param", "b=-1:1:1/3"};
    const Run serial = run(base);
    REQUIRE(serial.code == 0);
    CHECK(lines(serial.out).size() == 1 + 9 * 7);
    for (const char* jobs : {"2", "3", "8", "200"}) {
        auto args = base;
        args.insert(args.end(), {"--jobs", jobs});
        const Run par = run(args);
        CHECK(par.code == 0);
        CHECK(par.out == serial.out);
        CHECK(par.err == serial.err);
    }
}

TEST_CASE("property: JSON reports round-trip on random models")
{
    gen::Rng rng(0x5eed);
    int emitted = 0;
    for (int i = 0; i < 60; ++i) {
        const std::string A = rng.form(4, 3, 0.5).dehomogenize().str();
        const std::string B = rng.form(6, 3, 0.5).dehomogenize().str();
        for (const char* cmd : {"verdict", "classify", "limits", "beta", "weights"}) {
            const Run r = run({cmd, "--A", A, "--B", B, "--format", "json"});
            CHECK(r.code != 3);
            if (r.code != 0) continue;
            ++emitted;
            check_round_trip(r.out);
        }
    }
    CHECK(emitted > 100);
}
