#include "cli.hpp"

#include "crysext/breuil.hpp"
#include "crysext/error.hpp"
#include "crysext/oracle.hpp"
#include "crysext/serialize.hpp"
#include "crysext/weight_explicit.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace crysext::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags as given on the command line; anything set here overrides the
// request read with --in.
struct Flags {
    std::optional<int> p, e, f, a1, a2, x, y, exp;
    std::optional<std::string> chi1, chi2, cyclotomic_scalar, lambda, sweep, frobenius, checks;
    std::optional<std::int64_t> budget_ms;
    bool irreducible = false;
    std::string in_path;
    std::string out_path;
};

void add_context_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--p", fl.p, "residue characteristic (odd prime)");
    cmd->add_option("--e", fl.e, "ramification index");
    cmd->add_option("--f", fl.f, "k_E = GF(p^f)");
    cmd->add_option("--cyclotomic-scalar", fl.cyclotomic_scalar, "value of the mod p cyclotomic character on Frobenius");
    cmd->add_option("--in", fl.in_path, "request JSON file ('-' for stdin)");
    cmd->add_option("--out", fl.out_path, "write the response here instead of stdout");
}

void add_character_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--a1", fl.a1, "Serre weight a1");
    cmd->add_option("--a2", fl.a2, "Serre weight a2");
    cmd->add_option("--chi1", fl.chi1, "chi1 as exp,frob");
    cmd->add_option("--chi2", fl.chi2, "chi2 as exp,frob");
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& err) {
        throw UsageError(what + ": " + err.what());
    }
}

Json char_flag(const std::string& text, const std::string& name) {
    const auto comma = text.find(',');
    const std::string exp = text.substr(0, comma);
    const std::string frob = comma == std::string::npos ? "1" : text.substr(comma + 1);
    try {
        std::size_t used = 0;
        const int n = std::stoi(exp, &used);
        if (used != exp.size()) throw std::invalid_argument(exp);
        return Json{{"exp", n}, {"frob", frob}};
    } catch (const std::logic_error&) {
        throw UsageError("--" + name + ": expected exp,frob but got '" + text + "'");
    }
}

Json sweep_flag(const std::string& text) {
    // "3,1,1;3,2,1"
    Json out = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        Json triple = Json::array();
        std::stringstream is(item);
        std::string num;
        while (std::getline(is, num, ',')) {
            try {
                triple.push_back(std::stoi(num));
            } catch (const std::logic_error&) {
                throw UsageError("--sweep: bad entry '" + item + "'");
            }
        }
        if (triple.size() == 2) triple.push_back(1);
        if (triple.size() != 3) throw UsageError("--sweep: expected p,e[,f] but got '" + item + "'");
        out.push_back(triple);
    }
    return out;
}

Json load_request(const Flags& fl, std::istream& in) {
    Json req = Json::object();
    if (!fl.in_path.empty()) {
        std::stringstream buf;
        if (fl.in_path == "-") {
            buf << in.rdbuf();
        } else {
            std::ifstream file(fl.in_path);
            if (!file) throw UsageError("--in: cannot open " + fl.in_path);
            buf << file.rdbuf();
        }
        req = parse_json_text(buf.str(), "--in");
        if (!req.is_object()) throw UsageError("$: request must be a JSON object");
    }
    auto set = [&](const char* key, const auto& v) {
        if (v) req[key] = *v;
    };
    set("p", fl.p);
    set("e", fl.e);
    set("f", fl.f);
    set("cyclotomic_scalar", fl.cyclotomic_scalar);
    set("a1", fl.a1);
    set("a2", fl.a2);
    set("x", fl.x);
    set("y", fl.y);
    set("exp", fl.exp);
    set("budget_ms", fl.budget_ms);
    set("frobenius", fl.frobenius);
    if (fl.checks) req["checks"] = *fl.checks;
    if (fl.chi1) req["chi1"] = char_flag(*fl.chi1, "chi1");
    if (fl.chi2) req["chi2"] = char_flag(*fl.chi2, "chi2");
    if (fl.lambda) req["lambda"] = parse_json_text(*fl.lambda, "--lambda");
    if (fl.sweep) req["sweep"] = sweep_flag(*fl.sweep);
    if (fl.irreducible) req["irreducible"] = true;
    return req;
}

const Json& require(const Json& req, const char* key) {
    const auto it = req.find(key);
    if (it == req.end()) throw UsageError(std::string("$.") + key + ": required");
    return *it;
}

int require_int(const Json& req, const char* key) {
    const Json& v = require(req, key);
    if (!v.is_number_integer()) throw UsageError(std::string("$.") + key + ": expected an integer");
    return v.get<int>();
}

Context request_context(const Json& req) {
    require_int(req, "p");
    require_int(req, "e");
    return context_from_json(req, "$");
}

SerreWeight request_weight(const Json& req) {
    return {require_int(req, "a1"), require_int(req, "a2")};
}

void emit(const Flags& fl, std::ostream& out, const std::string& text) {
    if (fl.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(fl.out_path);
    if (!file) throw UsageError("--out: cannot open " + fl.out_path);
    file << text;
}

int cmd_wexplicit(const Json& req, const Flags& fl, std::ostream& out) {
    const Context ctx = request_context(req);
    const SerreWeight a = request_weight(req);
    validate_weight(a, ctx.p());
    Json res;
    if (req.value("irreducible", false)) {
        const InertialChar2 chi(require_int(req, "exp"), ctx.p());
        res["member"] = irreducible_in_wexplicit(chi, a, ctx);
    } else {
        const FullChar chi1 = char_from_json(require(req, "chi1"), ctx, "$.chi1");
        const FullChar chi2 = char_from_json(require(req, "chi2"), ctx, "$.chi2");
        const ReducibleShape shape{chi1, chi2};
        const auto params = reducible_inertial_params(shape, a, ctx);
        Json jd = Json::array();
        for (const auto& p : params) jd.push_back(to_json(p));
        res["jdelta"] = jd;
        if (params.empty()) res["lcrys"] = nullptr;
        else res["lcrys"] = lcrys_dimension(shape, a, ctx).dimension;
        const auto pairs = valid_pairs(chi1, chi2, a, ctx);
        if (pairs.empty()) res["lflat"] = nullptr;
        else res["lflat"] = lflat_dimension(chi1, chi2, a, ctx);
        res["exceptional"] = is_exceptional(shape, a, ctx);
    }
    emit(fl, out, res.dump() + "\n");
    return exit_ok;
}

int cmd_normal_form(const Json& req, const Flags& fl, std::ostream& out) {
    const Context ctx = request_context(req);
    const SerreWeight a = request_weight(req);
    const FullChar chi1 = char_from_json(require(req, "chi1"), ctx, "$.chi1");
    const FullChar chi2 = char_from_json(require(req, "chi2"), ctx, "$.chi2");
    const TruncPoly lambda = req.contains("lambda") ? poly_from_json(req["lambda"], ctx, "$.lambda") : TruncPoly(ctx.ring());
    const ExtBM p = make_extension(require_int(req, "x"), require_int(req, "y"), lambda, chi1, chi2, a, ctx);
    const auto [X, Y] = extremal_pair(valid_pairs(chi1, chi2, a, ctx), ctx);
    const TruncPoly big = big_payload(p, ctx);

    Json res;
    res["input"] = to_json(p);
    res["extremal"] = Json{{"X", X}, {"Y", Y}};
    res["normal_form"] = to_json(to_extremal_normal_form(p, ctx));
    res["big_payload"] = to_json(big);
    res["big_payload_projective"] = to_json(projective_representative(big));
    emit(fl, out, res.dump() + "\n");
    return exit_ok;
}

SweepSpec request_sweep(const Json& req) {
    SweepSpec spec = default_sweep();
    if (req.contains("sweep")) {
        const Json& s = req["sweep"];
        if (!s.is_array()) throw UsageError("$.sweep: expected an array of [p, e, f]");
        spec.points.clear();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Json& t = s[i];
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
                !t[2].is_number_integer())
                throw UsageError("$.sweep[" + std::to_string(i) + "]: expected [p, e, f]");
            spec.points.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
        }
    }
    if (req.contains("budget_ms")) {
        if (!req["budget_ms"].is_number_integer()) throw UsageError("$.budget_ms: expected an integer");
        spec.budget_ms = req["budget_ms"].get<std::int64_t>();
    }
    const std::string frob = req.value("frobenius", std::string("pair"));
    if (frob == "pair") spec.frobenius = FrobeniusRange::generator_pair;
    else if (frob == "all") spec.frobenius = FrobeniusRange::all_units;
    else throw UsageError("$.frobenius: expected \"pair\" or \"all\"");
    try {
        validate_sweep(spec);
    } catch (const Error& err) {
        throw UsageError(std::string("$.sweep: ") + err.what());
    }
    return spec;
}

Json instance_params(const SweepInstance& in) {
    return Json{{"p", in.point.p},     {"e", in.point.e},         {"f", in.point.f},       {"a1", in.weight.a1},
                {"a2", in.weight.a2},  {"alpha", in.alpha},       {"beta", in.beta},       {"frob1", in.frob1},
                {"frob2", in.frob2}};
}

int cmd_verify(const Json& req, const Flags& fl, std::ostream& out) {
    const SweepSpec spec = request_sweep(req);
    const std::string checks = req.value("checks", std::string("all"));
    if (checks != "all" && checks != "dimensions" && checks != "uniqueness")
        throw UsageError("$.checks: expected \"all\", \"dimensions\" or \"uniqueness\"");

    std::ostringstream lines;
    std::int64_t failures = 0;
    Json summary;
    if (checks != "uniqueness") {
        const auto report = cross_check_dimensions(spec);
        for (const auto& row : report.rows) {
            Json j;
            j["check"] = "dimensions";
            j["params"] = instance_params(row.instance);
            j["lflat"] = row.lflat ? Json(*row.lflat) : Json(nullptr);
            j["lcrys"] = row.lcrys ? Json(*row.lcrys) : Json(nullptr);
            j["status"] = to_string(row.status);
            if (!row.detail.empty()) j["detail"] = row.detail;
            lines << j.dump() << '\n';
        }
        failures += report.failures;
        summary["dimensions"] = Json{{"checked", report.checked}, {"failures", report.failures}, {"skipped", report.skipped}};
    }
    if (checks != "dimensions") {
        const auto report = verify_uniqueness_sweep(spec);
        for (const auto& c : report.cases) {
            Json j;
            j["check"] = "uniqueness";
            j["params"] = Json{{"p", c.point.p}, {"e", c.point.e}, {"f", c.point.f}, {"sub", to_json(c.sub)},
                               {"quot", to_json(c.quot)}};
            j["extensions"] = c.extensions;
            j["classes"] = c.classes;
            j["expected_classes"] = c.expected_classes;
            j["status"] = c.failures == 0 ? "ok" : "fail";
            if (!c.counterexamples.empty()) j["counterexamples"] = c.counterexamples;
            lines << j.dump() << '\n';
        }
        failures += report.counterexamples;
        summary["uniqueness"] = Json{{"cases", report.cases.size()}, {"failures", report.counterexamples}};
    }
    summary["failures"] = failures;
    lines << Json{{"summary", summary}}.dump() << '\n';
    emit(fl, out, lines.str());
    return failures == 0 ? exit_ok : exit_verification_failed;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", Json{{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Serre weights, crystalline extension spaces and Breuil module normal forms"};
    app.require_subcommand(1);
    Flags fl;

    auto* wexp = app.add_subcommand("wexplicit", "explicit weight set, L_crys and L_flat dimensions");
    add_context_flags(wexp, fl);
    add_character_flags(wexp, fl);
    wexp->add_flag("--irreducible", fl.irreducible, "niveau-2 (irreducible) input");
    wexp->add_option("--exp", fl.exp, "niveau-2 exponent n for omega_2^n + omega_2^{pn}");

    auto* nf = app.add_subcommand("normal-form", "normal form of P(x, y, lambda) at the extremal pair");
    add_context_flags(nf, fl);
    add_character_flags(nf, fl);
    nf->add_option("--x", fl.x, "Fil exponent of the sub");
    nf->add_option("--y", fl.y, "Fil exponent of the quotient");
    nf->add_option("--lambda", fl.lambda, "lambda as JSON [[deg, \"coeff\"], ...]");

    auto* ver = app.add_subcommand("verify", "dimension cross-check and normal-form uniqueness oracle");
    ver->add_option("--sweep", fl.sweep, "points p,e[,f] separated by ';'");
    ver->add_option("--budget-ms", fl.budget_ms, "wall-clock budget in milliseconds");
    ver->add_option("--frobenius", fl.frobenius, "Frobenius scalars swept: pair or all");
    ver->add_option("--checks", fl.checks, "all, dimensions or uniqueness");
    ver->add_option("--in", fl.in_path, "request JSON file ('-' for stdin)");
    ver->add_option("--out", fl.out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        print_error(err, "usage", e.what());
        return exit_usage;
    }

    try {
        const Json req = load_request(fl, in);
        if (wexp->parsed()) return cmd_wexplicit(req, fl, out);
        if (nf->parsed()) return cmd_normal_form(req, fl, out);
        return cmd_verify(req, fl, out);
    } catch (const UsageError& e) {
        print_error(err, "usage", e.what());
        return exit_usage;
    } catch (const Error& e) {
        print_error(err, to_string(e.kind()), e.what());
        if (e.kind() == ErrorKind::budget_exceeded) return exit_budget;
        if (e.kind() == ErrorKind::internal) return exit_verification_failed;
        return exit_usage;
    }
}

}  // namespace crysext::cli
