// trivext: command-line front end.
//
// Exit codes: 0 success / periodic, 1 usage, 2 input, 3 diverging,
// 4 inconclusive, 5 verify-dynkin assertion failure.

#include "trivext/census.hpp"
#include "trivext/coxeter.hpp"
#include "trivext/dynkin.hpp"
#include "trivext/io.hpp"
#include "trivext/qpa.hpp"
#include "trivext/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace trivext;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitDiverging = 3;
constexpr int kExitInconclusive = 4;
constexpr int kExitVerifyFailed = 5;

// human-readable output moves to stderr when the JSON report goes to stdout
std::ostream* text_stream = &std::cout;

std::ostream& text() { return *text_stream; }

std::vector<FieldSpec> parse_fields(const std::string& list)
{
    std::vector<FieldSpec> out;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty())
            out.push_back(FieldSpec::parse(item));
    if (out.empty())
        throw std::invalid_argument("no field given");
    return out;
}

void write_json(const ordered_json& j, const std::string& path)
{
    if (path.empty())
        return;
    const std::string text = j.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

struct ResolveArgs {
    std::string input;
    bool te = false;
    bool bimodule = false;
    std::string fields = "q";
    std::size_t max_steps = 200;
    std::size_t dim_cap = 20000;
    std::size_t stride = 1;
    std::size_t workers = 0;
    std::size_t bimodule_steps = 24;
    std::size_t bimodule_guard = 12;
    std::string json;
};

int cmd_resolve(const ResolveArgs& args)
{
    const auto in = load_input(args.input);
    ordered_json report;
    report["schema"] = kReportSchema;
    report["command"] = "resolve";
    report["input"] = in.description;
    report["trivial_extension"] = args.te;
    report["mode"] = args.bimodule ? "bimodule" : "simple";
    report["runs"] = ordered_json::array();
    bool any_diverging = false, any_inconclusive = false;
    for (const auto& spec : parse_fields(args.fields)) {
        const auto verdict = visit_field(spec, [&](auto f) {
            auto base = base_algebra(in, f);
            auto a = args.te ? trivial_extension(base) : std::move(base);
            text() << a.name() << " over " << spec.name() << ": dim " << a.dim() << ", " << a.vertex_count() << " vertices\n";
            if (args.bimodule) {
                BimoduleOptions o;
                o.max_steps = args.bimodule_steps;
                o.max_algebra_dim = args.bimodule_guard;
                return std::pair{bimodule_syzygy_orbit(a, o), ordered_json{{"max_steps", o.max_steps}, {"max_algebra_dim", o.max_algebra_dim}}};
            }
            OrbitOptions o;
            o.max_steps = args.max_steps;
            o.dim_cap = args.dim_cap;
            o.divergence_stride = args.stride;
            o.workers = args.workers;
            return std::pair{syzygy_orbit(a, o), orbit_options_json(o)};
        });
        const auto& v = verdict.first;
        text() << "  " << verdict_summary(v, args.bimodule) << "\n";
        any_diverging = any_diverging || v.kind == VerdictKind::Diverging;
        any_inconclusive = any_inconclusive || v.kind == VerdictKind::Inconclusive;
        report["runs"].push_back({{"field", spec.name()}, {"budget", verdict.second}, {"verdict", verdict_json(v)}});
    }
    write_json(report, args.json);
    return any_diverging ? kExitDiverging : any_inconclusive ? kExitInconclusive : kExitOk;
}

struct CensusArgs {
    std::size_t m = 0;
    bool extended = false;
    std::size_t workers = 0;
    std::string field = "q";
    std::size_t max_steps = 0;
    std::size_t dim_cap = 0;
    std::size_t stride = 0;
    std::string json;
};

int cmd_census(const CensusArgs& args)
{
    if (args.m == 0 || args.m > 12)
        throw CLI::ValidationError("census", "m must be between 1 and 12");
    if (args.m > 8 && !args.extended)
        throw CLI::ValidationError("census", "m > 8 needs --extended");
    CensusOptions opts;
    opts.field = FieldSpec::parse(args.field);
    opts.workers = args.workers;
    if (args.max_steps)
        opts.orbit.max_steps = args.max_steps;
    if (args.dim_cap)
        opts.orbit.dim_cap = args.dim_cap;
    if (args.stride)
        opts.orbit.divergence_stride = args.stride;
    const auto report = run_census(args.m, opts);
    text() << "distributive lattices of size " << args.m << ": " << report.lattice_count() << "\n";
    text() << "periodic Coxeter matrix: " << report.coxeter_periodic_count() << "\n";
    text() << "all simples of T(k[L]) periodic: " << report.simple_periodic_count() << "\n";
    for (const auto& r : report.records) {
        if (!r.verdict)
            continue;
        text() << "  " << r.form.hex() << "  " << r.coxeter_polynomial.to_string() << "  " << verdict_summary(*r.verdict) << "\n";
    }
    write_json(census_json(report), args.json);
    return kExitOk;
}

int cmd_coxeter(const std::string& input, const std::string& json)
{
    const auto in = load_input(input);
    const auto data = coxeter_data(base_algebra(in, Rationals{}));
    text() << "Cartan matrix: " << data.cartan.to_string() << "\nCoxeter matrix: " << data.coxeter.to_string() << "\n";
    text() << "Coxeter polynomial: " << data.char_polynomial.to_string() << "\n";
    text() << "period: " << (data.period ? std::to_string(*data.period) : "none") << "\n";
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "coxeter";
    j["input"] = in.description;
    j.update(coxeter_json(data));
    write_json(j, json);
    return kExitOk;
}

int cmd_verify_dynkin(std::size_t max_rank, const std::string& fields, const std::string& json)
{
    ordered_json report;
    report["schema"] = kReportSchema;
    report["command"] = "verify-dynkin";
    report["checks"] = ordered_json::array();
    std::size_t failures = 0;
    const auto check = [&](const std::string& what, bool ok, const std::string& detail) {
        report["checks"].push_back({{"check", what}, {"ok", ok}, {"detail", detail}});
        text() << (ok ? "ok    " : "FAIL  ") << what << "  " << detail << "\n";
        failures += ok ? 0 : 1;
    };
    const auto field_list = parse_fields(fields);
    for (const auto& t : dynkin_types(max_rank)) {
        const Quiver q = dynkin_quiver(t);
        const CyDim cy = cydim_dynkin(t);
        const auto period = coxeter_periodicity(path_algebra(q, Rationals{}));
        check(t.name() + " coxeter", period && (2 * cy.ell) % static_cast<long long>(*period) == 0,
              "period " + (period ? std::to_string(*period) : std::string("none")) + ", 2l = " + std::to_string(2 * cy.ell));
        for (const auto& spec : field_list) {
            const unsigned long expected = expected_period_dynkin(t, spec);
            visit_field(spec, [&](auto f) {
                const auto te = trivial_extension(path_algebra(q, f));
                const auto v = syzygy_orbit(te);
                check(t.name() + " simple " + spec.name(), v.kind == VerdictKind::Periodic && expected % v.n == 0,
                      verdict_summary(v) + ", expected period " + std::to_string(expected));
                if (t.rank <= 3) {
                    const auto b = bimodule_syzygy_orbit(te);
                    check(t.name() + " bimodule " + spec.name(), b.kind == VerdictKind::Periodic && b.n == expected,
                          verdict_summary(b, true) + ", expected " + std::to_string(expected));
                }
            });
        }
    }
    report["failures"] = failures;
    write_json(report, json);
    return failures ? kExitVerifyFailed : kExitOk;
}

int cmd_export_qpa(const std::string& input, std::size_t max_steps, const std::string& output)
{
    const auto in = load_input(input);
    if (!in.is_poset())
        throw InputError("export-qpa needs a poset");
    std::string script;
    try {
        script = export_qpa(std::get<Poset>(in.value), max_steps);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (output.empty() || output == "-") {
        std::cout << script;
    } else {
        std::ofstream out(output);
        if (!out)
            throw InputError("cannot write '" + output + "'");
        out << script;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Trivial extensions of incidence and path algebras: syzygy periodicity, Coxeter screen, census"};
    app.require_subcommand(1);

    ResolveArgs ra;
    auto* resolve = app.add_subcommand("resolve", "syzygy orbits of simples (or of A as a bimodule)");
    resolve->add_option("input", ra.input, "poset/quiver file, named:<family>[:n] or dynkin:<type>")->required();
    resolve->add_flag("--te", ra.te, "use the trivial extension T(A)");
    resolve->add_flag("--bimodule", ra.bimodule, "iterate Omega over the enveloping algebra");
    resolve->add_option("--field,--fields", ra.fields, "comma separated: q, or a prime p");
    resolve->add_option("--max-steps", ra.max_steps);
    resolve->add_option("--dim-cap", ra.dim_cap);
    resolve->add_option("--divergence-stride", ra.stride);
    resolve->add_option("--workers", ra.workers);
    resolve->add_option("--bimodule-steps", ra.bimodule_steps);
    resolve->add_option("--bimodule-guard", ra.bimodule_guard, "largest dim A allowed in bimodule mode");
    resolve->add_option("--json", ra.json, "write the JSON report ('-' for stdout)");

    CensusArgs ca;
    auto* census = app.add_subcommand("census", "distributive lattices of size m, Coxeter screen, periodicity of T(k[L])");
    census->add_option("m", ca.m)->required();
    census->add_flag("--extended", ca.extended, "allow m > 8");
    census->add_option("--workers", ca.workers);
    census->add_option("--field", ca.field);
    census->add_option("--max-steps", ca.max_steps);
    census->add_option("--dim-cap", ca.dim_cap);
    census->add_option("--divergence-stride", ca.stride);
    census->add_option("--json", ca.json);

    std::string cox_input, cox_json;
    auto* coxeter = app.add_subcommand("coxeter", "Cartan and Coxeter matrices, Coxeter polynomial and period");
    coxeter->add_option("input", cox_input)->required();
    coxeter->add_option("--json", cox_json);

    std::size_t max_rank = 8;
    std::string vd_fields = "q,2", vd_json;
    auto* verify = app.add_subcommand("verify-dynkin", "check engine output against the Dynkin formulas");
    verify->add_option("--max-rank", max_rank);
    verify->add_option("--fields", vd_fields);
    verify->add_option("--json", vd_json);

    std::string qpa_input, qpa_output;
    std::size_t qpa_steps = 60;
    auto* qpa = app.add_subcommand("export-qpa", "GAP/QPA script presenting T(k[P]) for a bounded poset");
    qpa->add_option("input", qpa_input)->required();
    qpa->add_option("--max-steps", qpa_steps);
    qpa->add_option("-o,--output", qpa_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    for (const auto* j : {&ra.json, &ca.json, &cox_json, &vd_json})
        if (*j == "-")
            text_stream = &std::cerr;
    try {
        if (*resolve)
            return cmd_resolve(ra);
        if (*census)
            return cmd_census(ca);
        if (*coxeter)
            return cmd_coxeter(cox_input, cox_json);
        if (*verify)
            return cmd_verify_dynkin(max_rank, vd_fields, vd_json);
        if (*qpa)
            return cmd_export_qpa(qpa_input, qpa_steps, qpa_output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const SingularMatrixError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
