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

#include "kstab/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kstab/dfweights.hpp"
#include "kstab/literal.hpp"

namespace kstab {

namespace cli {

using nlohmann::json;

Format resolve_format(const Common& c, Format fallback)
{
    if (c.format.empty()) return fallback;
    return c.format == "json" ? Format::Json : Format::Text;
}

namespace {

ModelSource model_source(const Common& c, std::optional<FiberConfig>* config_out)
{
    const bool has_file = !c.file.empty();
    const bool has_lit = !c.A.empty() || !c.B.empty();
    if (has_file == has_lit) throw InputError("exactly one input source is required: a file or --A/--B");
    if (has_lit) {
        if (c.A.empty() || c.B.empty()) throw InputError("--A and --B must be given together");
        return {c.A, c.B, c.chi};
    }
    Input in = read_input_file(c.file);
    if (auto* cfg = std::get_if<FiberConfig>(&in)) {
        if (!config_out) throw InputError(c.file + " is a fiber configuration; this command needs a Weierstrass model");
        *config_out = std::move(*cfg);
        return {};
    }
    return std::get<ModelSource>(in);
}

WeierstrassModel build_model(const ModelSource& src, bool minimal, std::vector<Place>* removed)
{
    WeierstrassModel m = WeierstrassModel::from_literals(src.A, src.B, src.chi);
    if (!minimal) return m;
    MinimalizeResult r = minimalize(m);
    if (removed) *removed = std::move(r.removed);
    return std::move(r.model);
}

}  // namespace

Resolved resolve(const Common& c)
{
    std::optional<FiberConfig> cfg;
    const ModelSource src = model_source(c, &cfg);
    if (cfg) return {std::move(*cfg), {}};
    Resolved r;
    r.config = analyze(build_model(src, c.minimalize, &r.removed));
    return r;
}

LogTwistedCurve base_curve(const FiberConfig& config)
{
    const BaseData base = base_data(config);
    LogTwistedCurve curve;
    curve.boundary = base.discriminant;
    curve.twist = base.moduli_degree;
    const Rational gap = Rational(2) - base.discriminant.degree() - base.moduli_degree;
    curve.degree = gap.is_zero() ? Rational(1) : gap.abs();
    return curve;
}

std::string witness_name(const std::optional<Place>& p) { return p ? p->str() : "-"; }

json verdict_json(const Verdict& v)
{
    json j = {{"tag", tag_name(v.tag)}, {"by", v.by}, {"witness", nullptr}};
    if (v.witness) j["witness"] = v.witness->str();
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json report_json(const AdiabaticReport& r)
{
    return {{"base", verdict_json(r.base)},
            {"total", verdict_json(r.total)},
            {"alpha_limit", r.alpha_limit.str()},
            {"delta_limit", r.delta_limit.str()},
            {"cscK", cscK_name(r.cscK)}};
}

namespace {

/// Left-aligned column that always leaves two spaces before the next one.
std::string cell(const std::string& s, std::size_t width)
{
    return s.size() + 2 > width ? s + "  " : s + std::string(width - s.size(), ' ');
}

std::string triple_str(const FiberEntry& e)
{
    if (!e.triple) return "-";
    std::string s = "(";
    for (std::size_t i = 0; i < e.triple->size(); ++i) s += (i ? ", " : "") + (*e.triple)[i].str();
    return s + ")";
}

int cmd_classify(const Common& c, std::ostream& out, std::ostream& err)
{
    const Resolved r = resolve(c);
    const auto problems = validate_config(r.config);
    if (!problems.empty()) {
        err << "error: fiber configuration does not validate\n";
        for (const auto& p : problems) err << "  - " << p << "\n";
        return kExitInputError;
    }
    unsigned euler_sum = 0;
    json fibers = json::array();
    for (const auto& e : r.config.entries) {
        const unsigned eu = euler_number(e.type) * static_cast<unsigned>(e.deg);
        euler_sum += eu;
        json f = {{"type", e.type.name()},
                  {"m", e.m},
                  {"deg", e.deg},
                  {"place", e.place ? json(e.place->str()) : json(nullptr)},
                  {"lct", lct_of_fiber(e.type, e.m).str()},
                  {"euler", euler_number(e.type)},
                  {"valuations", nullptr}};
        if (e.triple) {
            f["valuations"] = json::array();
            for (const auto& v : *e.triple) f["valuations"].push_back(v.str());
        }
        fibers.push_back(std::move(f));
    }
    const unsigned expected = 12 * r.config.chi;
    json removed = json::array();
    for (const auto& p : r.removed) removed.push_back(p.str());

    if (resolve_format(c, Format::Text) == Format::Json) {
        json j = {{"chi", r.config.chi},
                  {"fibers", fibers},
                  {"euler_sum", euler_sum},
                  {"euler_ok", euler_sum == expected},
                  {"removed", removed}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << std::left << std::setw(22) << "place" << std::setw(5) << "deg" << std::setw(4) << "m" << std::setw(20)
        << "(vA, vB, vD)" << std::setw(7) << "type" << std::setw(6) << "lct" << "euler\n";
    for (const auto& e : r.config.entries) {
        out << cell(e.place ? e.place->str() : "-", 22) << cell(std::to_string(e.deg), 5) << cell(std::to_string(e.m), 4)
            << cell(triple_str(e), 20) << cell(e.type.name(), 7) << cell(lct_of_fiber(e.type, e.m).str(), 6)
            << euler_number(e.type) << "\n";
    }
    out << "euler sum " << euler_sum << " = 12*chi = " << expected << (euler_sum == expected ? " (ok)" : " (FAILED)") << "\n";
    if (!r.removed.empty()) {
        out << "minimalized at:";
        for (const auto& p : r.removed) out << " [" << p.str() << "]";
        out << "\n";
    }
    return kExitOk;
}

struct CanonicalOptions {
    bool enabled = false;
    unsigned genus = 0;
    bool lc_only = false;
};

int cmd_verdict(const Common& c, const CanonicalOptions& canon, std::ostream& out)
{
    const FiberConfig config = resolve(c).config;
    if (canon.enabled) {
        const Verdict v = canonical_fibration_verdict(canon.genus, base_data(config), !canon.lc_only);
        if (resolve_format(c, Format::Json) == Format::Json) {
            out << json{{"canonical", verdict_json(v)}}.dump(2) << "\n";
        } else {
            out << "canonical: " << tag_name(v.tag) << " by " << v.by;
            if (v.witness) out << ", witness " << v.witness->str();
            out << "\n";
            if (!v.note.empty()) out << "  " << v.note << "\n";
        }
        return v.tag == VerdictTag::Undetermined ? kExitCoverageGap : kExitOk;
    }
    const AdiabaticReport r = adiabatic_verdict(config);
    if (resolve_format(c, Format::Json) == Format::Json) {
        out << report_json(r).dump(2) << "\n";
    } else {
        for (const auto& [label, v] : {std::pair{"base", &r.base}, std::pair{"total", &r.total}}) {
            out << label << ": " << tag_name(v->tag) << " by " << v->by;
            if (v->witness) out << ", witness " << v->witness->str();
            out << "\n";
            if (!v->note.empty()) out << "  " << v->note << "\n";
        }
        out << "alpha_limit: " << r.alpha_limit.str() << "\ndelta_limit: " << r.delta_limit.str()
            << "\ncscK: " << cscK_name(r.cscK) << "\n";
    }
    const bool gap = r.base.tag == VerdictTag::Undetermined || r.total.tag == VerdictTag::Undetermined;
    return gap ? kExitCoverageGap : kExitOk;
}

int cmd_limits(const Common& c, std::ostream& out)
{
    const auto [alpha, delta] = alpha_delta_limits(resolve(c).config);
    if (resolve_format(c, Format::Text) == Format::Json)
        out << json{{"alpha_limit", alpha.str()}, {"delta_limit", delta.str()}}.dump(2) << "\n";
    else
        out << "alpha_limit: " << alpha.str() << "\ndelta_limit: " << delta.str() << "\n";
    return kExitOk;
}

int cmd_beta(const Common& c, const std::string& eps_text, const std::string& ord_text, std::ostream& out)
{
    const LogTwistedCurve curve = base_curve(resolve(c).config);
    curve.validate();
    const bool perturbed = !eps_text.empty() || !ord_text.empty();
    const Rational eps = eps_text.empty() ? Rational(0) : Rational::parse(eps_text);
    const Rational ord = ord_text.empty() ? Rational(0) : Rational::parse(ord_text);
    auto value = [&](const Place& p) { return perturbed ? perturbed_beta(curve, p, ord, eps) : beta(curve, p); };

    std::vector<std::tuple<std::string, Rational, Rational>> rows;
    for (const auto& [p, b] : curve.boundary.terms()) rows.emplace_back(p.str(), b, value(p));
    long k = 0;
    while (curve.boundary.coefficient(Place::point(Rational(k))).sign() != 0) ++k;
    rows.emplace_back("generic", Rational(0), value(Place::point(Rational(k))));

    if (resolve_format(c, Format::Text) == Format::Json) {
        json places = json::array();
        for (const auto& [name, b, v] : rows) places.push_back({{"place", name}, {"coefficient", b.str()}, {"beta", v.str()}});
        json j = {{"d", curve.degree.str()}, {"twist", curve.twist.str()}, {"places", places}};
        if (perturbed) j["eps"] = eps.str(), j["ord"] = ord.str();
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "d = " << curve.degree.str() << ", T = " << curve.twist.str();
    if (perturbed) out << ", eps = " << eps.str() << ", ord = " << ord.str();
    out << "\n" << std::left << std::setw(22) << "place" << std::setw(12) << "coefficient" << "beta\n";
    for (const auto& [name, b, v] : rows) out << cell(name, 22) << cell(b.str(), 12) << v.str() << "\n";
    return kExitOk;
}

struct WeightsOptions {
    std::string lambda, F, G;
    long a = 1;
};

std::vector<long> parse_lambda(const std::string& text)
{
    std::vector<long> w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            w.push_back(Rational::parse(item).to_long());
        } catch (const std::exception&) {
            throw InputError("--lambda expects comma separated integers, got '" + text + "'");
        }
    }
    return w;
}

int cmd_weights(const Common& c, const WeightsOptions& w, std::ostream& out)
{
    json j;
    if (!w.lambda.empty()) {
        if (w.F.empty()) throw InputError("--lambda needs a form literal --F");
        const OnePS lam{parse_lambda(w.lambda)};
        lam.validate(lam.weights.size());
        std::vector<std::string> vars;
        if (lam.weights.size() == 3) {
            vars = {"x", "y", "z"};
        } else {
            for (std::size_t i = 0; i < lam.weights.size(); ++i) vars.push_back("x" + std::to_string(i));
        }
        const SparsePoly F = parse_polynomial(w.F, vars);
        const long mu = w.G.empty() ? hm_weight_form(F, lam) : hm_weight_pencil(F, parse_polynomial(w.G, vars), lam);
        j = {{"mu", mu}, {"df", nullptr}};
    } else {
        std::vector<Place> removed;
        const WeierstrassModel m = build_model(model_source(c, nullptr), c.minimalize, &removed);
        j = {{"mu", miranda_weight(m.A(), m.B(), w.a)}, {"df", nullptr}};
        const LogTwistedCurve curve = base_curve(analyze(m));
        if (curve.is_log_fano()) j["df"] = point_degeneration_df(curve, Place::infinity()).str();
    }
    if (resolve_format(c, Format::Json) == Format::Json)
        out << j.dump(2) << "\n";
    else
        out << "mu = " << j["mu"].get<long>() << "\ndf = " << (j["df"].is_null() ? "-" : j["df"].get<std::string>()) << "\n";
    return kExitOk;
}

void add_common(CLI::App* sub, Common& c, bool positional = true)
{
    if (positional) sub->add_option("input", c.file, "model (.json, .toml) or fiber configuration (.json)");
    sub->add_option("--A", c.A, "A(t) as a polynomial literal");
    sub->add_option("--B", c.B, "B(t) as a polynomial literal");
    sub->add_option("--chi", c.chi, "Euler characteristic of the structure sheaf")->check(CLI::PositiveNumber);
    sub->add_flag("--minimalize", c.minimalize, "reduce a non-minimal model before analysis");
    sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

}  // namespace cli

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using namespace cli;
    CLI::App app{"Exact K-stability verdicts for elliptic surfaces over P^1", "kstab"};
    app.require_subcommand(1);

    Common classify_c, verdict_c, limits_c, beta_c, weights_c, scan_c;
    std::string eps, ord;
    WeightsOptions wopt;
    ScanOptions sopt;

    auto* classify = app.add_subcommand("classify", "Kodaira fiber table of a model or configuration");
    add_common(classify, classify_c);
    auto* verdict = app.add_subcommand("verdict", "K-stability verdict of the base and the adiabatic limit");
    add_common(verdict, verdict_c);
    CanonicalOptions canon;
    verdict->add_flag("--canonical", canon.enabled, "canonically polarized surface instead of the adiabatic limit");
    verdict->add_option("--genus", canon.genus, "genus of the base curve (with --canonical)")->needs("--canonical");
    verdict->add_flag("--lc-only", canon.lc_only, "surface is lc but not klt (with --canonical)")->needs("--canonical");
    auto* limits = app.add_subcommand("limits", "limits of the alpha and delta invariants");
    add_common(limits, limits_c);
    auto* beta_cmd = app.add_subcommand("beta", "beta invariants of the base along the boundary");
    add_common(beta_cmd, beta_c);
    beta_cmd->add_option("--eps", eps, "perturbation parameter in [0, 1)");
    beta_cmd->add_option("--ord", ord, "order of the perturbing divisor at each place");
    auto* weights = app.add_subcommand("weights", "Hilbert-Mumford weights and the point degeneration DF");
    add_common(weights, weights_c);
    weights->add_option("--lambda", wopt.lambda, "one-parameter subgroup, e.g. 1,0,-1");
    weights->add_option("--F", wopt.F, "form literal in x, y, z (or x0, x1, ...)");
    weights->add_option("--G", wopt.G, "second pencil member");
    weights->add_option("--a", wopt.a, "weight of diag(q^a, q^-a) on (s, t)");
    auto* scan = app.add_subcommand("scan", "verdict strata over a grid of parameters");
    add_common(scan, scan_c);
    scan->add_option("--param", sopt.params, "name=start:stop:step, repeatable");
    scan->add_option("--cap", sopt.cap, "maximum grid size (default from KSTAB_SCAN_CAP, else 10000)");
    scan->add_option("--jobs", sopt.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (classify->parsed()) return cmd_classify(classify_c, out, err);
        if (verdict->parsed()) return cmd_verdict(verdict_c, canon, out);
        if (limits->parsed()) return cmd_limits(limits_c, out);
        if (beta_cmd->parsed()) return cmd_beta(beta_c, eps, ord, out);
        if (weights->parsed()) return cmd_weights(weights_c, wopt, out);
        return cmd_scan(scan_c, sopt, out, err);
    } catch (const InvariantError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace kstab
