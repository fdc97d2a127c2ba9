#include "oracles.hpp"

#include "trivext/census.hpp"
#include "trivext/io.hpp"
#include "trivext/qpa.hpp"
#include "trivext/report.hpp"

#include <doctest.h>

using namespace trivext;

namespace {

using Terms = BasedAlgebra<Rationals>::Terms;

/// Evaluates a path of presentation arrows inside T(k[P]) built by trivial_extension.
Terms evaluate(const BasedAlgebra<Rationals>& t, const TrivialExtensionPresentation& pr, const std::vector<std::size_t>& path)
{
    const std::size_t w = pr.arrows.size() - 1;
    Terms acc;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto [s, d] = pr.arrows[path[k]];
        const auto between = t.between(s, d);
        // Hasse arrows are the A-part elements, w the dual of the interval [bottom, top]
        std::optional<std::uint32_t> element;
        for (auto b : between)
            if ((t.basis(b).degree == 1) == (path[k] == w))
                element = b;
        REQUIRE(element);
        Terms x{{*element, Rational(1)}};
        acc = k == 0 ? x : t.multiply(acc, x);
    }
    return acc;
}

void check_relations_hold(const Poset& p)
{
    const auto pr = trivial_extension_presentation(p);
    const auto t = trivial_extension(incidence_algebra(p, Rationals{}));
    for (const auto* list : {&pr.commutativity, &pr.socle, &pr.incomparable})
        for (const auto& r : *list) {
            auto lhs = evaluate(t, pr, r.lhs);
            if (!r.rhs.empty()) {
                auto rhs = evaluate(t, pr, r.rhs);
                for (auto& [i, c] : rhs)
                    c = -c;
                lhs.insert(lhs.end(), rhs.begin(), rhs.end());
                lhs = consolidate(Rationals{}, std::move(lhs));
            }
            CHECK(lhs.empty());
        }
}

}  // namespace

TEST_CASE("trivial_extension_presentation examples")
{
    SUBCASE("2-chain")
    {
        const auto pr = trivial_extension_presentation(named_poset("chain", 2));
        CHECK(pr.vertex_count == 2);
        CHECK(pr.arrows.size() == 2);
        CHECK(pr.arrows.back() == std::pair<std::size_t, std::size_t>{1, 0});
        CHECK(pr.commutativity.empty());
        CHECK(pr.incomparable.empty());
    }
    SUBCASE("Boolean lattice B2")
    {
        const auto pr = trivial_extension_presentation(named_poset("boolean", 2));
        CHECK(pr.vertex_count == 4);
        CHECK(pr.arrows.size() == 5);
        CHECK(pr.commutativity.size() == 1);
        CHECK(pr.incomparable.size() == 2);
    }
    SUBCASE("posets without a top or bottom")
    {
        CHECK_THROWS_AS(trivial_extension_presentation(named_poset("antichain", 2)), std::invalid_argument);
        CHECK_THROWS_AS(trivial_extension_presentation(named_poset("chain", 1)), std::invalid_argument);
        CHECK_THROWS_AS(export_qpa(Poset::from_covers(3, {{0, 1}, {0, 2}})), std::invalid_argument);
    }
}

TEST_CASE("property: presentation relations hold in T(k[P])")
{
    for (const char* spec : {"chain:2", "chain:4", "boolean:2", "boolean:3", "tamari:3", "tamari:4"}) {
        const std::string s(spec);
        const auto colon = s.find(':');
        check_relations_hold(named_poset(s.substr(0, colon), std::stoul(s.substr(colon + 1))));
    }
    check_relations_hold(named_poset("fdl3"));
    for (const auto& l : census_distributive_lattices(7))
        check_relations_hold(l);
}

TEST_CASE("exported scripts pass the GAP lint")
{
    for (const char* spec : {"named:boolean:2", "named:tamari:3", "named:fdl3"}) {
        const auto in = load_input(spec);
        const auto script = export_qpa(std::get<Poset>(in.value));
        CHECK(lint_gap(script).empty());
        CHECK(script.find("GBNPGroebnerBasis") != std::string::npos);
        CHECK(script.find("IsomorphicModules") != std::string::npos);
    }
    const auto boolean = export_qpa(named_poset("boolean", 2));
    CHECK(boolean.find("18") != std::string::npos);  // expected dimension 2 * #intervals
}

TEST_CASE("lint_gap flags broken scripts")
{
    CHECK(lint_gap("x := 1;\n").empty());
    CHECK(lint_gap("f := function(a) return a; end;\n").empty());
    CHECK(!lint_gap("x := (1 + 2;\n").empty());
    CHECK(!lint_gap("x := [1, 2);\n").empty());
    CHECK(!lint_gap("s := \"open;\n").empty());
    CHECK(!lint_gap("f := function(a) return a;\n").empty());
    CHECK(!lint_gap("if x then y := 1;\n").empty());
    CHECK(!lint_gap("for i in [1..3] do Print(i);\n").empty());
    CHECK(!lint_gap("x := 1\n").empty());
    CHECK(!lint_gap("x := f(1; 2);\n").empty());
    CHECK(!lint_gap("end;\n").empty());
}

TEST_CASE("parse_quiver")
{
    const auto q = parse_quiver("# Kronecker\nvertex x\nx -> y : alpha\nx -> y\n");
    CHECK(q.vertex_count == 2);
    CHECK(q.vertex_names == std::vector<std::string>{"x", "y"});
    CHECK(q.arrows.size() == 2);
    CHECK(q.arrows[0].label == "alpha");
    CHECK(q.arrows[1].label == "a2");
    const auto again = parse_quiver(format_quiver(q));
    CHECK(again.vertex_names == q.vertex_names);
    CHECK(again.arrows.size() == 2);
    CHECK(again.arrows[0].label == "alpha");
    CHECK_THROWS_AS(parse_quiver(""), InputError);
    CHECK_THROWS_AS(parse_quiver("a b\n"), InputError);
    CHECK_THROWS_AS(parse_quiver("vertex a\nvertex a\n"), InputError);
    CHECK_THROWS_AS(parse_quiver("a -> b : x\nb -> c : x\n"), InputError);
}

TEST_CASE("load_input")
{
    CHECK(load_input("named:boolean:2").is_poset());
    CHECK(!load_input("dynkin:E6").is_poset());
    CHECK(std::get<Quiver>(load_input("dynkin:E6").value).vertex_count == 6);
    CHECK_THROWS_AS(load_input("named:nonsense:2"), InputError);
    CHECK_THROWS_AS(load_input("dynkin:Z2"), InputError);
    CHECK_THROWS_AS(load_input("/nonexistent/file.poset"), InputError);
}

TEST_CASE("small censuses")
{
    const auto two = run_census(2);
    CHECK(two.lattice_count() == 1);
    CHECK(two.coxeter_periodic_count() == 1);
    CHECK(two.simple_periodic_count() == 1);
    CHECK(run_census(5).lattice_count() == 3);
    const auto eight = run_census(8, {FieldSpec::parse("2")});
    CHECK(eight.lattice_count() == 15);
    CHECK(eight.simple_periodic_count() <= eight.coxeter_periodic_count());
    for (const auto& r : eight.records)
        CHECK(r.verdict.has_value() == r.coxeter_period.has_value());
}

TEST_CASE("property: census JSON does not depend on the worker count")
{
    CensusOptions one, many;
    one.workers = 1;
    many.workers = 4;
    for (std::size_t m : {6, 8}) {
        const auto a = census_json(run_census(m, one)).dump();
        const auto b = census_json(run_census(m, many)).dump();
        CHECK(a == b);
    }
}

TEST_CASE("report JSON layout")
{
    const auto r = census_json(run_census(4));
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["m"] == 4);
    CHECK(r["records"].size() == 2);
    CHECK(r["records"][0].contains("coxeter_polynomial"));
    PeriodicityVerdict v;
    v.kind = VerdictKind::Inconclusive;
    v.reason = InconclusiveReason::DimCap;
    v.last_step = 3;
    CHECK(verdict_json(v)["reason"] == "dim-cap");
    CHECK(verdict_summary(v) == "inconclusive at step 3, dim-cap");
}
