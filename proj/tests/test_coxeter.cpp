#include "oracles.hpp"

#include "trivext/coxeter.hpp"
#include "trivext/dynkin.hpp"
#include "trivext/io.hpp"

#include <doctest.h>

using namespace trivext;

namespace {

ExactMatrix<Rationals> ints(std::vector<std::vector<long long>> rows)
{
    return ExactMatrix<Rationals>::from_ints(Rationals{}, rows);
}

bool special(const DynkinType& t)
{
    return (t.family == DynkinFamily::A && t.rank == 1) || (t.family == DynkinFamily::D && t.rank % 2 == 0) ||
           (t.family == DynkinFamily::E && t.rank >= 7);
}

}  // namespace

TEST_CASE("coxeter matrix examples")
{
    SUBCASE("kA2")
    {
        const auto a = path_algebra(dynkin_quiver(DynkinType::parse("A2")), Rationals{});
        CHECK(coxeter_matrix(a) == ints({{0, 1}, {-1, -1}}));
        CHECK(coxeter_polynomial(a) == IntPolynomial{1, 1, 1});
        CHECK(coxeter_periodicity(a) == 3UL);
    }
    SUBCASE("semisimple")
    {
        const auto a = semisimple_algebra(Rationals{}, 3);
        CHECK(coxeter_matrix(a) == ints({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
        CHECK(coxeter_periodicity(a) == 2UL);
    }
    SUBCASE("Kronecker is not periodic")
    {
        const auto a = path_algebra(Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}, {}}, Rationals{});
        CHECK(coxeter_matrix(a) == ints({{3, 2}, {-2, -1}}));
        CHECK(coxeter_polynomial(a) == IntPolynomial{1, -2, 1});
        CHECK(!coxeter_periodicity(a));
    }
    SUBCASE("singular Cartan matrix")
    {
        CHECK_THROWS_AS(coxeter_from_cartan(ints({{1, 1}, {1, 1}})), SingularMatrixError);
    }
    SUBCASE("non-integral Coxeter matrix")
    {
        const auto d = coxeter_data_from_cartan(ints({{2, 0}, {0, 1}}));
        CHECK(d.coxeter(0, 0) == Rational(-1));
        CHECK(d.period == 2UL);
        const auto c = coxeter_from_cartan(ints({{2, 1}, {0, 1}}));
        CHECK(c(0, 0) == Rational(-1, 2));
        CHECK(!matrix_period(c));
        CHECK_THROWS(coxeter_data_from_cartan(ints({{2, 1}, {0, 1}})));
    }
}

TEST_CASE("Coxeter polynomial is unchanged by reorienting A4")
{
    const IntPolynomial expected{1, 1, 1, 1, 1};
    for (unsigned mask = 0; mask < 8; ++mask) {
        Quiver q{4, {}, {}};
        for (std::size_t i = 0; i < 3; ++i) {
            const bool flip = (mask >> i) & 1U;
            q.arrows.push_back({flip ? i + 1 : i, flip ? i : i + 1, "a" + std::to_string(i)});
        }
        CHECK(coxeter_polynomial(path_algebra(q, Rationals{})) == expected);
    }
}

TEST_CASE("property: Dynkin Coxeter matrices have order h and c^(2 ell) = I")
{
    for (const auto& t : dynkin_types(8)) {
        const auto a = path_algebra(dynkin_quiver(t), Rationals{});
        const auto c = coxeter_matrix(a);
        const auto h = coxeter_number(t);
        const auto cy = cydim_dynkin(t);
        CAPTURE(t.name());
        CHECK(coxeter_periodicity(a) == h);
        CHECK(c.pow(static_cast<unsigned long>(2 * cy.ell)).is_identity());
        // c^(h/2) = -I exactly in the special types
        if (h % 2 == 0) {
            auto minus = ExactMatrix<Rationals>::identity(Rationals{}, t.rank);
            for (std::size_t i = 0; i < t.rank; ++i)
                minus(i, i) = Rational(-1);
            CHECK((c.pow(h / 2) == minus) == special(t));
        } else {
            CHECK(!special(t));
        }
        if (t.family == DynkinFamily::A) {
            IntPolynomial all_ones(std::vector<mpz_class>(t.rank + 1, 1));
            CHECK(coxeter_polynomial(a) == all_ones);
        }
    }
}

TEST_CASE("property: Coxeter period is the order found by powering")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = oracle::random_poset(2 + trial % 5, 0.5, rng);
        const auto a = incidence_algebra(p, Rationals{});
        const auto c = coxeter_matrix(a);
        const auto period = coxeter_periodicity(a);
        std::optional<unsigned long> found;
        for (unsigned long k = 1; k <= 60 && !found; ++k)
            if (c.pow(k).is_identity())
                found = k;
        if (period && *period <= 60)
            CHECK(found == period);
        if (!period)
            CHECK(!found);
        // the polynomial is a derived invariant and reciprocal up to sign
        const auto chi = coxeter_polynomial(a);
        const std::size_t n = p.size();
        const int sign = chi.coefficient(0) == chi.coefficient(n) ? 1 : -1;
        for (std::size_t i = 0; i <= n; ++i)
            CHECK(chi.coefficient(i) == sign * chi.coefficient(n - i));
    }
}

TEST_CASE("fixture lattices")
{
    const auto a = base_algebra(load_input(std::string(TRIVEXT_FIXTURE_DIR) + "/lattice11_a.poset"), Rationals{});
    const auto b = base_algebra(load_input(std::string(TRIVEXT_FIXTURE_DIR) + "/lattice11_b.poset"), Rationals{});
    CHECK(coxeter_polynomial(a).to_string() == "x^11 + x^10 + x^9 + x^2 + x + 1");
    CHECK(coxeter_polynomial(b).to_string() == "x^11 + x^10 - x^6 - x^5 + x + 1");
    CHECK(coxeter_periodicity(a) == 18UL);
    CHECK(coxeter_periodicity(b) == 30UL);
    // neither polynomial is that of A11 or D11
    for (const char* t : {"A11", "D11"}) {
        const auto d = coxeter_polynomial(path_algebra(dynkin_quiver(DynkinType::parse(t)), Rationals{}));
        CHECK(d != coxeter_polynomial(a));
        CHECK(d != coxeter_polynomial(b));
    }
}
