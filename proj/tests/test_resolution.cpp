#include "oracles.hpp"

#include "trivext/dynkin.hpp"
#include "trivext/resolution.hpp"

#include <doctest.h>

using namespace trivext;

namespace {

template <class F>
BasedAlgebra<F> te_dynkin(const char* name, F f)
{
    return trivial_extension(path_algebra(dynkin_quiver(DynkinType::parse(name)), f));
}

std::size_t element(const BasedAlgebra<Rationals>& a, const std::string& label)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.basis(i).label == label)
            return i;
    throw std::out_of_range(label);
}

/// Kronecker representation k -> k with arrows acting by (x, y).
template <class F>
RightModule<F> kronecker_rep(const BasedAlgebra<F>& a, long long x, long long y)
{
    const F& f = a.field();
    std::vector<std::vector<SparseVec<typename F::value_type>>> action(a.dim());
    const auto scalar = [&](long long c) {
        return f.is_zero(f.from_int(c)) ? SparseVec<typename F::value_type>{} : SparseVec<typename F::value_type>{{0, f.from_int(c)}};
    };
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const auto& e = a.basis(b);
        if (e.kind == ElementKind::Idempotent)
            action[b].push_back(scalar(1));
        else
            action[b].push_back(scalar(e.label == "a" ? x : y));
    }
    return RightModule<F>(a, {1, 1}, std::move(action));
}

/// Same module written in a random basis of each vertex component.
RightModule<Rationals> rebase(const RightModule<Rationals>& m, std::mt19937_64& rng)
{
    const auto& a = m.algebra();
    const Rationals q;
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<ExactMatrix<Rationals>> g, ginv;
    for (std::size_t u = 0; u < a.vertex_count(); ++u) {
        const std::size_t d = m.dim(u);
        for (;;) {
            ExactMatrix<Rationals> x(q, d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    x(i, j) = entry(rng);
            if (x.rank() == d) {
                ginv.push_back(x.inverse());
                g.push_back(std::move(x));
                break;
            }
        }
    }
    std::vector<std::vector<SparseVec<Rational>>> action(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const std::size_t u = a.basis(b).source, w = a.basis(b).target;
        ExactMatrix<Rationals> ab(q, m.dim(w), m.dim(u));
        for (std::uint32_t j = 0; j < m.dim(u); ++j)
            for (const auto& [k, c] : m.act(b, j))
                ab(k, j) = c;
        const auto conj = ginv[w] * ab * g[u];
        for (std::size_t j = 0; j < m.dim(u); ++j) {
            SparseVec<Rational> col;
            for (std::size_t k = 0; k < m.dim(w); ++k)
                if (!conj(k, j).is_zero())
                    col.emplace_back(static_cast<std::uint32_t>(k), conj(k, j));
            action[b].push_back(std::move(col));
        }
    }
    return RightModule<Rationals>(a, m.dims(), std::move(action));
}

/// Omega^t(S_v) by repeated materialised syzygies, independent of simple_orbit.
template <class F>
std::vector<std::vector<std::size_t>> dimension_vectors_along_orbit(const BasedAlgebra<F>& a, std::size_t v, std::size_t steps)
{
    std::vector<std::vector<std::size_t>> out;
    auto m = simple_module(a, v);
    for (std::size_t t = 0; t < steps; ++t) {
        auto next = materialize(syzygy(m));
        out.push_back(dimension_vector(next));
        m = std::move(next);
    }
    return out;
}

std::optional<std::size_t> simple_at(const std::vector<std::size_t>& dims)
{
    std::size_t total = 0, at = 0;
    for (std::size_t w = 0; w < dims.size(); ++w) {
        total += dims[w];
        if (dims[w])
            at = w;
    }
    return total == 1 ? std::optional(at) : std::nullopt;
}

std::vector<BasedAlgebra<Rationals>> small_selfinjective_suite()
{
    std::vector<BasedAlgebra<Rationals>> out;
    for (const char* t : {"A1", "A2", "A3", "A4", "D4", "A5"})
        out.push_back(te_dynkin(t, Rationals{}));
    for (const char* p : {"boolean:2", "chain:3"}) {
        const std::string s(p);
        const auto colon = s.find(':');
        out.push_back(trivial_extension(incidence_algebra(named_poset(s.substr(0, colon), std::stoul(s.substr(colon + 1))), Rationals{})));
    }
    return out;
}

}  // namespace

TEST_CASE("simple and projective modules")
{
    const auto a = path_algebra(dynkin_quiver(DynkinType::parse("A3")), Rationals{});
    CHECK(simple_module(a, 1).total_dim() == 1);
    CHECK(dimension_vector(projective_module(a, 0)) == std::vector<std::size_t>{1, 1, 1});
    CHECK(dimension_vector(projective_module(a, 2)) == std::vector<std::size_t>{0, 0, 1});
    CHECK(!projective_module(a, 0).validation_error());
    CHECK(!simple_module(a, 0).validation_error());
    CHECK_THROWS_AS(simple_module(a, 3), std::out_of_range);
}

TEST_CASE("projective cover examples")
{
    SUBCASE("k[x]/(x^2): Omega(S) = S")
    {
        const auto t = trivial_extension(semisimple_algebra(Rationals{}, 1));
        const auto cover = projective_cover(simple_module(t, 0));
        CHECK(cover.multiplicities == std::vector<std::size_t>{1});
        CHECK(cover.projective->total_dim() == 2);
        CHECK(syzygy(simple_module(t, 0)).total_dim() == 1);
    }
    SUBCASE("T(kA2): Omega(S_0) has dimension 2")
    {
        const auto t = te_dynkin("A2", Rationals{});
        const auto o = syzygy(simple_module(t, 0));
        CHECK(o.total_dim() == 2);
        CHECK(dimension_vector(o) == std::vector<std::size_t>{1, 1});
    }
    SUBCASE("projectives have zero syzygy")
    {
        const auto t = te_dynkin("A3", Rationals{});
        for (std::size_t v = 0; v < 3; ++v)
            CHECK(syzygy(projective_module(t, v)).total_dim() == 0);
    }
    SUBCASE("zero module is rejected")
    {
        const auto t = te_dynkin("A2", Rationals{});
        std::vector<std::vector<SparseVec<Rational>>> action(t.dim());
        CHECK_THROWS_AS(projective_cover(RightModule<Rationals>(t, {0, 0}, action)), std::invalid_argument);
    }
}

TEST_CASE("property: covers are exact and minimal")
{
    const auto rad_dim = [](const auto& m) {
        // dim M.rad from the action of every radical basis element
        const auto& a = m.algebra();
        std::size_t total = 0;
        for (std::size_t w = 0; w < a.vertex_count(); ++w) {
            RowEchelon<Rationals> e(a.field(), m.dim(w));
            for (std::size_t b = 0; b < a.dim(); ++b)
                if (a.basis(b).kind == ElementKind::Radical && a.basis(b).target == w)
                    for (std::uint32_t j = 0; j < m.dim(a.basis(b).source); ++j)
                        e.insert(m.act(b, j));
            total += e.rank();
        }
        return total;
    };
    std::size_t observed = 0;
    const CoverObserver exact = [&](const CoverStats& s) {
        ++observed;
        CHECK(s.module_dim + s.syzygy_dim == s.projective_dim);
    };
    for (const auto& a : small_selfinjective_suite()) {
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            auto m = materialize(syzygy(simple_module(a, v), exact));
            for (int step = 0; step < 4 && m.total_dim() > 0; ++step) {
                const auto cover = projective_cover(m, exact);
                std::size_t summands = 0;
                for (auto k : cover.multiplicities)
                    summands += k;
                CHECK(summands == m.total_dim() - rad_dim(m));
                m = materialize(syzygy(m, exact));
                CHECK_MESSAGE(!m.validation_error(), a.name());
            }
        }
    }
    CHECK(observed > 100);
}

TEST_CASE("modules_isomorphic examples")
{
    const Quiver kq{2, {{0, 1, "a"}, {0, 1, "b"}}, {}};
    SUBCASE("Kronecker over Q, random search")
    {
        const auto a = path_algebra(kq, Rationals{});
        CHECK(modules_isomorphic(kronecker_rep(a, 1, 0), kronecker_rep(a, 2, 0)).outcome == IsoOutcome::Isomorphic);
        CHECK(modules_isomorphic(kronecker_rep(a, 1, 1), kronecker_rep(a, 3, 3)).outcome == IsoOutcome::Isomorphic);
        const auto different = modules_isomorphic(kronecker_rep(a, 1, 0), kronecker_rep(a, 0, 1));
        CHECK(different.outcome == IsoOutcome::NonIsomorphic);
        CHECK(modules_isomorphic(kronecker_rep(a, 1, 0), kronecker_rep(a, 1, 1)).outcome == IsoOutcome::NonIsomorphic);
        CHECK(modules_isomorphic(simple_module(a, 0), simple_module(a, 1)).outcome == IsoOutcome::NonIsomorphic);
    }
    SUBCASE("Kronecker over GF(3), exhaustive search")
    {
        const auto a = path_algebra(kq, PrimeField(3));
        CHECK(modules_isomorphic(kronecker_rep(a, 1, 2), kronecker_rep(a, 2, 1)).outcome == IsoOutcome::Isomorphic);
        const auto r = modules_isomorphic(kronecker_rep(a, 1, 0), kronecker_rep(a, 0, 0));
        CHECK(r.outcome == IsoOutcome::NonIsomorphic);
        CHECK(r.reason.find("exhaustive") != std::string::npos);
    }
    SUBCASE("the certificate intertwines the actions")
    {
        const auto a = path_algebra(kq, Rationals{});
        const auto m = kronecker_rep(a, 2, 3), n = kronecker_rep(a, 4, 6);
        const auto r = modules_isomorphic(m, n);
        REQUIRE(r.outcome == IsoOutcome::Isomorphic);
        for (std::size_t b = 0; b < a.dim(); ++b) {
            const std::size_t u = a.basis(b).source, w = a.basis(b).target;
            SparseVec<Rational> lhs;
            for (const auto& [l, c] : m.act(b, 0))
                axpy(a.field(), lhs, c, r.certificate[w][l]);
            CHECK(lhs == act_on(n, b, r.certificate[u][0]));
        }
    }
    SUBCASE("modules over different algebras")
    {
        const auto a = path_algebra(kq, Rationals{}), b = path_algebra(kq, Rationals{});
        CHECK_THROWS_AS(modules_isomorphic(simple_module(a, 0), simple_module(b, 0)), std::invalid_argument);
    }
    CHECK(element(path_algebra(kq, Rationals{}), "b") == 3);
}

TEST_CASE("property: a module is isomorphic to itself in any basis")
{
    std::mt19937_64 rng(31);
    for (const auto& a : small_selfinjective_suite()) {
        for (std::size_t v = 0; v < a.vertex_count(); ++v) {
            const auto m = materialize(syzygy(simple_module(a, v)));
            const auto r = rebase(m, rng);
            CHECK(!r.validation_error());
            CHECK_MESSAGE(modules_isomorphic(m, r).outcome == IsoOutcome::Isomorphic, a.name());
            CHECK(modules_isomorphic(m, projective_module(a, v)).outcome == IsoOutcome::NonIsomorphic);
        }
    }
}

TEST_CASE("assemble_verdict")
{
    const auto orbit = [](std::size_t ret, std::size_t steps) {
        SimpleOrbit o;
        o.kind = VerdictKind::Periodic;
        o.return_vertex = ret;
        o.steps = steps;
        return o;
    };
    SUBCASE("a transposition with unequal return times")
    {
        const auto v = assemble_verdict({orbit(1, 2), orbit(0, 3)});
        CHECK(v.kind == VerdictKind::Periodic);
        CHECK(v.n == 5);
        CHECK(v.permutation == std::vector<std::size_t>{0, 1});
        CHECK(v.per_simple_periods == std::vector<std::size_t>{5, 5});
    }
    SUBCASE("fixed points with coprime periods")
    {
        const auto v = assemble_verdict({orbit(0, 2), orbit(1, 3)});
        CHECK(v.n == 6);
        CHECK(v.per_simple_periods == std::vector<std::size_t>{2, 3});
    }
    SUBCASE("a transposition at the common time")
    {
        const auto v = assemble_verdict({orbit(1, 4), orbit(0, 4), orbit(2, 2)});
        CHECK(v.n == 4);
        CHECK(v.permutation == std::vector<std::size_t>{1, 0, 2});
        CHECK(v.per_simple_periods == std::vector<std::size_t>{8, 8, 2});
    }
    SUBCASE("not a permutation")
    {
        const auto v = assemble_verdict({orbit(0, 2), orbit(0, 2)});
        CHECK(v.kind == VerdictKind::Inconclusive);
        CHECK(v.reason == InconclusiveReason::NotPermutation);
    }
    SUBCASE("diverging takes precedence over inconclusive")
    {
        SimpleOrbit stuck, grows;
        stuck.reason = InconclusiveReason::StepBound;
        stuck.steps = 7;
        grows.kind = VerdictKind::Diverging;
        grows.steps = 9;
        const auto v = assemble_verdict({orbit(0, 1), stuck, grows});
        CHECK(v.kind == VerdictKind::Diverging);
        CHECK(v.failing_vertex == std::optional<std::size_t>(2));
        CHECK(v.last_step == 9);
        const auto w = assemble_verdict({orbit(0, 1), stuck});
        CHECK(w.kind == VerdictKind::Inconclusive);
        CHECK(w.reason == InconclusiveReason::StepBound);
    }
}

TEST_CASE("diverging rule")
{
    OrbitOptions o;
    o.dim_cap = 100;
    std::vector<std::size_t> rising(20);
    std::iota(rising.begin(), rising.end(), std::size_t{41});  // 41..60
    CHECK(diverging(rising, o));
    std::vector<std::size_t> low(rising.begin(), rising.end() - 10);  // ends at 50, not above cap / 2
    CHECK(!diverging(low, o));
    auto flat = rising;
    flat[15] = flat[14];
    CHECK(!diverging(flat, o));
    CHECK(!diverging(std::vector<std::size_t>(rising.begin(), rising.begin() + 9), o));
    SUBCASE("stride compares block minima")
    {
        std::vector<std::size_t> wobble;
        for (std::size_t i = 0; i < 40; ++i)
            wobble.push_back(40 + 2 * i + (i % 2 ? 0 : 5));
        CHECK(!diverging(wobble, o));
        o.divergence_stride = 2;
        CHECK(diverging(wobble, o));
        o.divergence_stride = 3;
        CHECK(diverging(wobble, o));
    }
}

TEST_CASE("syzygy_orbit examples")
{
    CHECK(syzygy_orbit(te_dynkin("A1", Rationals{})).n == 1);
    const auto a2 = syzygy_orbit(te_dynkin("A2", Rationals{}));
    CHECK(a2.kind == VerdictKind::Periodic);
    CHECK(a2.dim_traces[0].front() == 2);
    SUBCASE("non-selfinjective algebras reach a projective")
    {
        const auto v = syzygy_orbit(path_algebra(dynkin_quiver(DynkinType::parse("A3")), Rationals{}));
        CHECK(v.kind == VerdictKind::Inconclusive);
        CHECK(v.reason == InconclusiveReason::ZeroSyzygy);
    }
    SUBCASE("budgets")
    {
        OrbitOptions o;
        o.max_steps = 1;
        const auto v = syzygy_orbit(te_dynkin("A4", Rationals{}), o);
        CHECK(v.kind == VerdictKind::Inconclusive);
        CHECK(v.reason == InconclusiveReason::StepBound);
        o.max_steps = 200;
        o.dim_cap = 1;
        CHECK(syzygy_orbit(te_dynkin("A4", Rationals{}), o).reason == InconclusiveReason::DimCap);
    }
}

TEST_CASE("property: the permutation agrees with step-by-step syzygies")
{
    for (const auto& a : small_selfinjective_suite()) {
        const auto v = syzygy_orbit(a);
        REQUIRE_MESSAGE(v.kind == VerdictKind::Periodic, a.name());
        const std::size_t horizon = *std::max_element(v.per_simple_periods.begin(), v.per_simple_periods.end());
        std::vector<std::vector<std::vector<std::size_t>>> paths;
        for (std::size_t u = 0; u < a.vertex_count(); ++u)
            paths.push_back(dimension_vectors_along_orbit(a, u, std::max(horizon, v.n)));
        for (std::size_t u = 0; u < a.vertex_count(); ++u) {
            CHECK(simple_at(paths[u][v.n - 1]) == std::optional(v.permutation[u]));
            const std::size_t t = v.per_simple_periods[u];
            CHECK(simple_at(paths[u][t - 1]) == std::optional(u));
            for (std::size_t s = 1; s < t; ++s)
                CHECK(simple_at(paths[u][s - 1]) != std::optional(u));
            CHECK(v.dim_traces[u].front() == std::accumulate(paths[u][0].begin(), paths[u][0].end(), std::size_t{0}));
        }
        for (std::size_t s = 1; s < v.n; ++s) {
            bool all = true;
            for (std::size_t u = 0; u < a.vertex_count(); ++u)
                all = all && simple_at(paths[u][s - 1]);
            CHECK(!all);
        }
    }
}

TEST_CASE("property: verdicts do not depend on the worker count")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        const auto a = trivial_extension(incidence_algebra(oracle::random_poset(4, 0.5, rng), Rationals{}));
        OrbitOptions one, many;
        one.workers = 1;
        many.workers = 4;
        one.max_steps = many.max_steps = 40;
        const auto x = syzygy_orbit(a, one), y = syzygy_orbit(a, many);
        CHECK(x.kind == y.kind);
        CHECK(x.n == y.n);
        CHECK(x.permutation == y.permutation);
        CHECK(x.dim_traces == y.dim_traces);
    }
}

TEST_CASE("bimodule periods")
{
    CHECK(bimodule_syzygy_orbit(trivial_extension(semisimple_algebra(Rationals{}, 1))).n == 2);
    CHECK(bimodule_syzygy_orbit(trivial_extension(semisimple_algebra(PrimeField(2), 1))).n == 1);
    CHECK(bimodule_syzygy_orbit(trivial_extension(semisimple_algebra(PrimeField(3), 1))).n == 2);
    CHECK_THROWS_AS(bimodule_syzygy_orbit(te_dynkin("A4", Rationals{})), std::invalid_argument);
    BimoduleOptions short_budget;
    short_budget.max_steps = 2;
    const auto v = bimodule_syzygy_orbit(te_dynkin("A2", Rationals{}), short_budget);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.reason == InconclusiveReason::StepBound);
}

TEST_CASE("property: the simple-level period divides the bimodule period")
{
    std::vector<BasedAlgebra<Rationals>> algebras;
    for (const char* t : {"A1", "A2"})
        algebras.push_back(te_dynkin(t, Rationals{}));
    algebras.push_back(trivial_extension(incidence_algebra(named_poset("antichain", 2), Rationals{})));
    algebras.push_back(trivial_extension(path_algebra(Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}, {}}, Rationals{})));
    for (const auto& a : algebras) {
        BimoduleOptions o;
        o.max_algebra_dim = 12;
        const auto b = bimodule_syzygy_orbit(a, o);
        const auto s = syzygy_orbit(a);
        if (b.kind != VerdictKind::Periodic) {
            CHECK_MESSAGE(s.kind != VerdictKind::Periodic, a.name());
            continue;
        }
        REQUIRE(s.kind == VerdictKind::Periodic);
        CHECK_MESSAGE(b.n % s.n == 0, a.name());
    }
}
