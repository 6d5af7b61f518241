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

#include <cstdlib>
#include <exception>
#include <ostream>
#include <regex>
#include <thread>

#include "commands.hpp"
#include "kstab/cli.hpp"
#include "kstab/literal.hpp"

namespace kstab::cli {

namespace {

struct Param {
    std::string name;
    Rational start, step;
    unsigned long count = 0;
};

Param parse_param(const std::string& text)
{
    static const std::regex re(R"(^([A-Za-z_][A-Za-z0-9_]*)=([^:]+):([^:]+):([^:]+)$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw InputError("--param expects name=start:stop:step, got '" + text + "'");
    if (m[1] == "t") throw InputError("'t' is the affine coordinate and cannot be a scan parameter");
    Param p{m[1], Rational::parse(m[2].str()), Rational::parse(m[4].str())};
    const Rational stop = Rational::parse(m[3].str());
    if (p.step.sign() <= 0) throw InputError("scan step for " + p.name + " must be positive");
    if (stop >= p.start) {
        const Rational q = (stop - p.start) / p.step;
        const Integer n = q.numerator() / q.denominator() + 1;
        if (!n.fits_ulong_p()) throw InputError("range of " + p.name + " is too large");
        p.count = n.get_ui();
    }
    return p;
}

unsigned long default_cap()
{
    if (const char* env = std::getenv("KSTAB_SCAN_CAP")) {
        try {
            const Rational v = Rational::parse(env);
            if (v.sign() > 0) return static_cast<unsigned long>(v.to_long());
        } catch (const std::exception&) {
        }
        throw InputError(std::string("KSTAB_SCAN_CAP must be a positive integer, got '") + env + "'");
    }
    return 10000;
}

std::string join_coeffs(const BinaryForm& f)
{
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) s += (i ? ";" : "") + f.coeffs()[i].str();
    return s;
}

struct Row {
    std::string a, b, types, verdict;
};

Row scan_point(const ModelSource& src, bool minimal, const std::map<std::string, Rational>& consts)
{
    Row row;
    try {
        const BinaryForm A = BinaryForm::homogenize(parse_univariate(src.A, "t", consts), 4 * src.chi);
        const BinaryForm B = BinaryForm::homogenize(parse_univariate(src.B, "t", consts), 6 * src.chi);
        row.a = join_coeffs(A);
        row.b = join_coeffs(B);
        if ((Rational(4) * A.pow(3) + Rational(27) * B.pow(2)).is_zero()) {
            row.verdict = "singular";
            return row;
        }
    } catch (const std::invalid_argument&) {
        row.verdict = "invalid";
        return row;
    }
    try {
        WeierstrassModel m = WeierstrassModel::from_literals(src.A, src.B, src.chi, consts);
        if (minimal) m = minimalize(m).model;
        const FiberConfig cfg = analyze(m);
        for (const auto& e : cfg.entries) {
            if (!row.types.empty()) row.types += ";";
            row.types += (e.deg > 1 ? std::to_string(e.deg) + "*" : "") + e.type.name();
        }
        row.verdict = tag_name(adiabatic_verdict(cfg).base.tag);
    } catch (const NonMinimalError&) {
        row.verdict = "non-minimal";
    } catch (const InputError&) {
        row.verdict = "invalid";
    }
    return row;
}

}  // namespace

int cmd_scan(const Common& c, const ScanOptions& opts, std::ostream& out, std::ostream& err)
{
    ModelSource src;
    const bool has_file = !c.file.empty();
    if (has_file == (!c.A.empty() || !c.B.empty())) throw InputError("exactly one input source is required: a file or --A/--B");
    if (has_file) {
        Input in = read_input_file(c.file);
        if (!std::holds_alternative<ModelSource>(in)) throw InputError("scan needs a Weierstrass model with parameters");
        src = std::get<ModelSource>(in);
    } else {
        if (c.A.empty() || c.B.empty()) throw InputError("--A and --B must be given together");
        src = {c.A, c.B, c.chi};
    }
    if (opts.params.empty()) throw InputError("scan needs at least one --param");

    std::vector<Param> params;
    std::map<std::string, Rational> zero;
    for (const auto& text : opts.params) {
        params.push_back(parse_param(text));
        if (!zero.emplace(params.back().name, Rational(0)).second)
            throw InputError("parameter " + params.back().name + " given twice");
    }
    // Syntax errors surface once, with positions, rather than once per row.
    parse_univariate(src.A, "t", zero);
    parse_univariate(src.B, "t", zero);

    Integer total = 1;
    const Param* widest = &params.front();
    for (const auto& p : params) {
        total *= p.count;
        if (p.count > widest->count) widest = &p;
    }
    const unsigned long cap = opts.cap ? *opts.cap : default_cap();
    if (total > cap) {
        const Integer pieces = (total + cap - 1) / cap;
        throw InputError("grid has " + total.get_str() + " points, above the cap of " + std::to_string(cap) +
                         "; split the range of " + widest->name + " into " + pieces.get_str() +
                         " pieces or raise --cap / KSTAB_SCAN_CAP");
    }
    const unsigned long n = total.get_ui();

    auto point = [&](unsigned long index) {
        std::map<std::string, Rational> consts;
        for (auto it = params.rbegin(); it != params.rend(); ++it) {
            consts[it->name] = it->start + it->step * Rational(index % it->count);
            index /= it->count;
        }
        return consts;
    };

    std::vector<Row> rows(n);
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max(1ul, n))));
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        const unsigned long lo = n * j / jobs, hi = n * (j + 1) / jobs;
        workers.emplace_back([&, j, lo, hi] {
            try {
                for (unsigned long i = lo; i < hi; ++i) rows[i] = scan_point(src, c.minimalize, point(i));
            } catch (...) {
                failures[j] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::map<std::string, unsigned long> tally;
    out << "A-coeffs,B-coeffs,types,verdict\n";
    for (const auto& r : rows) {
        out << r.a << "," << r.b << "," << r.types << "," << r.verdict << "\n";
        ++tally[r.verdict];
    }
    err << "scanned " << n << " models";
    for (const auto& [verdict, count] : tally) err << "; " << verdict << ": " << count;
    err << "\n";
    return tally.count(tag_name(VerdictTag::Undetermined)) ? kExitCoverageGap : kExitOk;
}

}  // namespace kstab::cli
