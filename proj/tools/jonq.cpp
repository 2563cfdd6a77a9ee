// jonq: resolutions, de Jonquieres maps and base-ideal templates from the shell.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jonq/classify/structure.hpp"
#include "jonq/error.hpp"
#include "jonq/io/files.hpp"
#include "jonq/jonquieres/structure.hpp"
#include "jonq/suite/suite.hpp"

using json = nlohmann::ordered_json;
using namespace jonq;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kRefused = 4 };

struct Flags {
    std::string field;
    std::string order = "grevlex";
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
};

// thrown once a diagnostic has been written
struct Stop {
    int code;
};

int exit_for(Errc code)
{
    switch (code) {
    case Errc::SyntaxError:
    case Errc::UnknownVariable:
    case Errc::BadCharacteristic:
        return kParse;
    case Errc::BudgetExceeded:
        return kBudget;
    case Errc::NotJonquieres:
        return kRefused;
    default:
        return kFailure;
    }
}

void diagnose(const json& j)
{
    std::cerr << j.dump() << std::endl;
}

json error_json(const Error& e)
{
    json j{{"error", errc_name(e.code())}, {"message", e.what()}};
    json details = json::object();
    for (const auto& [key, value] : e.details())
        details[key] = value;
    if (e.code() == Errc::NotJonquieres) {
        for (const auto& [key, value] : e.details())
            if (key == "failure")
                j["failure"] = failure_name(static_cast<JonquieresFailure>(value));
    }
    j["details"] = details;
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e))
        j["expected"] = s->expected();
    return j;
}

[[noreturn]] void fail(const Error& e, int code, const std::string& file = {})
{
    json j = error_json(e);
    if (!file.empty())
        j["file"] = file;
    diagnose(j);
    throw Stop{code};
}

[[noreturn]] void usage(const std::string& message)
{
    diagnose({{"error", "UsageError"}, {"message", message}});
    throw Stop{kParse};
}

InputFile load(const std::string& path, const Flags& flags)
{
    ReadOptions options;
    try {
        if (!flags.field.empty())
            options.field = Field::parse(flags.field);
        options.order = TermOrder::parse(flags.order);
    } catch (const Error& e) {
        usage(e.what());
    } catch (const std::exception&) {
        usage("bad --order " + flags.order);
    }
    try {
        return read_input(path, options);
    } catch (const Error& e) {
        const int code = exit_for(e.code());
        fail(e, code == kFailure ? kParse : code, path);
    }
}

RationalMap load_map(const std::string& path, const Flags& flags)
{
    InputFile in = load(path, flags);
    if (!in.map)
        fail(Error(Errc::SyntaxError, "not a map file: the second line must be 'map coords=<N+1>'"), kParse, path);
    return *in.map;
}

json betti_json(const FreeResolution& r, const BettiTable& b)
{
    json table = json::object();
    for (const auto& [key, count] : b)
        if (key.first > 0)
            table[std::to_string(key.first) + "," + std::to_string(key.second)] = count;
    json twists = json::array();
    for (std::size_t k = 1; k <= r.length(); ++k)
        twists.push_back(r.twists(k));
    return {{"betti", table}, {"twists", twists}};
}

json strings(const std::vector<Polynomial>& polys)
{
    json out = json::array();
    for (const auto& p : polys)
        out.push_back(p.to_string());
    return out;
}

void print_map(const RationalMap& F, const Flags& flags)
{
    if (flags.json)
        std::cout << json{{"ring", {{"n", F.dimension()}, {"field", F.ring().field().name()}}},
                          {"degree", F.degree()},
                          {"coords", strings(F.coords())}}
                         .dump(2)
                  << "\n";
    else
        std::cout << format_map(F);
}

int cmd_resolve(const std::string& path, const Flags& flags)
{
    const InputFile in = load(path, flags);
    const FreeResolution r = free_resolution(in.ideal);
    const BettiTable b = betti(r);
    if (flags.json)
        std::cout << betti_json(r, b).dump() << "\n";
    else
        std::cout << betti_display(b);
    return kOk;
}

int cmd_compose(const std::string& first, const std::string& second, const Flags& flags)
{
    const RationalMap F = load_map(first, flags);
    const RationalMap G = load_map(second, flags);
    print_map(compose(F, G), flags);
    return kOk;
}

int cmd_invert(const std::string& path, const Flags& flags)
{
    const RationalMap F = load_map(path, flags);
    if (const auto inv = derive_inverse(F)) {
        print_map(*inv, flags);
        return kOk;
    }
    require_jonquieres(F);
    raise(Errc::UnderlyingInverseUnavailable, "no inverse known for the underlying map " + rho_project(F).to_string());
}

json extraction_json(const MainTheoremExtraction& e)
{
    json change = json::array();
    for (const auto& row : e.change) {
        json r = json::array();
        for (const auto& s : row)
            r.push_back(s.to_string());
        change.push_back(r);
    }
    return {{"d", e.d},
            {"P", strings(e.P.generators())},
            {"q", e.q.to_string()},
            {"qi", strings(std::vector<Polynomial>(e.qi.begin(), e.qi.end()))},
            {"unmixed_part", strings(e.unmixed_part.generators())},
            {"ci_degree", e.ci_degree},
            {"change", change}};
}

int cmd_classify(const std::string& path, const Flags& flags)
{
    const InputFile in = load(path, flags);
    const int n = static_cast<int>(in.ring.nvars()) - 1;
    const FreeResolution r = free_resolution(in.ideal);
    const BettiTable b = betti(r);
    const TemplateMatch m = match_template(b, n);

    json out{{"template", {{"kind", kind_name(m.kind)}, {"d", m.d}, {"n", m.n}, {"name", m.to_string()}}}};
    out.update(betti_json(r, b));
    if (m.kind == TemplateKind::MainTheorem) {
        try {
            out["extraction"] = extraction_json(verify_main_theorem(in.ideal));
        } catch (const Error& e) {
            if (e.code() == Errc::BudgetExceeded)
                throw;
            out["extraction_error"] = error_json(e);
        }
    }

    if (flags.json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << "template: " << m.to_string() << "\n" << betti_display(b);
    if (out.contains("extraction")) {
        const json& e = out["extraction"];
        std::cout << "prime: (" << e["P"][0].get<std::string>() << ", " << e["P"][1].get<std::string>() << ", "
                  << e["P"][2].get<std::string>() << ")\n"
                  << "q: " << e["q"].get<std::string>() << "\n"
                  << "unmixed part: (" << e["unmixed_part"][0].get<std::string>();
        for (std::size_t i = 1; i < e["unmixed_part"].size(); ++i)
            std::cout << ", " << e["unmixed_part"][i].get<std::string>();
        std::cout << "), degree " << e["ci_degree"].get<int>() << "\n";
    } else if (out.contains("extraction_error")) {
        std::cout << "extraction: " << out["extraction_error"]["error"].get<std::string>() << ": "
                  << out["extraction_error"]["message"].get<std::string>() << "\n";
    }
    return kOk;
}

int cmd_jacobian(const std::string& path, const Flags& flags)
{
    const RationalMap F = load_map(path, flags);
    const JonquieresDecomposition dec = require_jonquieres(F);
    const ContractionLocus l = contraction_locus(dec);
    if (flags.json) {
        std::cout << json{{"underlying", strings(dec.G.coords())},
                          {"q", dec.q.to_string()},
                          {"f", dec.f.to_string()},
                          {"locus", l.locus.to_string()},
                          {"degree", l.degree},
                          {"bound", l.bound},
                          {"bound_ok", l.bound_ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "locus: " << l.locus.to_string() << "\n"
                  << "degree " << l.degree << " <= " << l.bound << ": " << (l.bound_ok ? "yes" : "no") << "\n";
    }
    return kOk;
}

int cmd_verify(const Flags& flags)
{
    SuiteOptions options;
    options.seed = flags.seed;
    options.budget = flags.budget;
    if (!flags.field.empty()) {
        try {
            options.field = Field::parse(flags.field);
        } catch (const Error& e) {
            usage(e.what());
        }
    }

    const auto results = run_suite(options, [&](const CheckResult& r) {
        if (flags.json)
            return;
        std::printf("[%2d] %-6s %-28s %8.3fs  %s\n", r.id, std::string(status_name(r.status)).c_str(), r.name.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    const int code = suite_exit_code(results);
    if (flags.json) {
        json checks = json::array();
        for (const auto& r : results)
            checks.push_back({{"id", r.id},
                              {"name", r.name},
                              {"claim", r.claim},
                              {"status", status_name(r.status)},
                              {"detail", r.detail},
                              {"seconds", r.seconds},
                              {"limit", r.limit}});
        std::cout << json{{"seed", options.seed},
                          {"field", options.field.name()},
                          {"budget", options.budget},
                          {"checks", checks},
                          {"ok", code == kOk}}
                         .dump(2)
                  << "\n";
    }
    if (code == kBudget)
        diagnose({{"error", "BudgetExceeded"}, {"message", "some checks ran out of budget; the report is partial"}});
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded resolutions, de Jonquieres maps and base ideal templates"};
    app.require_subcommand(1);
    Flags flags;
    app.add_option("--field", flags.field, "Q or GF(p) (also q, gf:p); overrides the file header");
    app.add_option("--order", flags.order, "grevlex, lex or elim(k)");
    app.add_option("--seed", flags.seed, "seed for verify-paper");
    app.add_option("--budget", flags.budget, "S-pair reductions allowed per Groebner basis")->envname("JONQ_BUDGET");
    app.add_flag("--json", flags.json, "machine-readable output");

    std::string first;
    std::string second;
    auto* resolve = app.add_subcommand("resolve", "Betti table of a minimal free resolution");
    resolve->add_option("ideal", first)->required();
    auto* compose_cmd = app.add_subcommand("compose", "F o G");
    compose_cmd->add_option("F", first)->required();
    compose_cmd->add_option("G", second)->required();
    auto* invert = app.add_subcommand("invert", "inverse of a linear, involutive or de Jonquieres map");
    invert->add_option("map", first)->required();
    auto* classify = app.add_subcommand("classify", "match the Betti table of an ideal or base ideal against templates");
    classify->add_option("file", first)->required();
    auto* jacobian = app.add_subcommand("jacobian", "contraction locus of a de Jonquieres map");
    jacobian->add_option("map", first)->required();
    auto* verify = app.add_subcommand("verify-paper", "run every acceptance check");
    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        diagnose({{"error", "UsageError"}, {"message", e.what()}});
        return kParse;
    }

    try {
        LimitScope scope(EngineLimits{flags.budget, false});
        if (*resolve)
            return cmd_resolve(first, flags);
        if (*compose_cmd)
            return cmd_compose(first, second, flags);
        if (*invert)
            return cmd_invert(first, flags);
        if (*classify)
            return cmd_classify(first, flags);
        if (*jacobian)
            return cmd_jacobian(first, flags);
        if (*verify)
            return cmd_verify(flags);
    } catch (const Stop& s) {
        return s.code;
    } catch (const Error& e) {
        diagnose(error_json(e));
        return exit_for(e.code());
    } catch (const std::exception& e) {
        diagnose({{"error", "Internal"}, {"message", e.what()}});
        return kFailure;
    }
    return kParse;
}
