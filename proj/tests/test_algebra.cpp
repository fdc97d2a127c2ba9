#include "oracles.hpp"

#include "trivext/algebra.hpp"
#include "trivext/dynkin.hpp"

#include <doctest.h>

using namespace trivext;

namespace {

Quiver linear_quiver(std::size_t n)
{
    return dynkin_quiver(DynkinType(DynkinFamily::A, n));
}

Quiver kronecker()
{
    return Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}, {}};
}

using Terms = BasedAlgebra<Rationals>::Terms;

Terms unit(std::size_t i)
{
    return {{static_cast<std::uint32_t>(i), Rational(1)}};
}

}  // namespace

TEST_CASE("path_algebra examples")
{
    CHECK(path_algebra(linear_quiver(2), Rationals{}).dim() == 3);
    CHECK(path_algebra(linear_quiver(4), Rationals{}).dim() == 10);
    CHECK(path_algebra(kronecker(), Rationals{}).dim() == 4);
    Quiver cyclic{2, {{0, 1, "a"}, {1, 0, "b"}}, {}};
    CHECK_THROWS_AS(path_algebra(cyclic, Rationals{}), std::invalid_argument);
    Quiver duplicate{2, {{0, 1, "a"}, {0, 1, "a"}}, {}};
    CHECK_THROWS(path_algebra(duplicate, Rationals{}));
}

TEST_CASE("incidence_algebra examples")
{
    CHECK(incidence_algebra(named_poset("chain", 2), Rationals{}).dim() == 3);
    CHECK(incidence_algebra(named_poset("boolean", 2), Rationals{}).dim() == 9);
    CHECK(incidence_algebra(named_poset("antichain", 5), Rationals{}).dim() == 5);
}

TEST_CASE("trivial_extension examples")
{
    SUBCASE("T(k) = k[x]/(x^2)")
    {
        auto t = trivial_extension(semisimple_algebra(Rationals{}, 1));
        REQUIRE(t.dim() == 2);
        CHECK(t.product(1, 1).empty());
        CHECK(t.basis(1).degree == 1);
        CHECK(t.generators() == std::vector<std::uint32_t>{1});
    }
    SUBCASE("T(kA2) has a 2-cycle as quiver")
    {
        auto t = trivial_extension(path_algebra(linear_quiver(2), Rationals{}));
        CHECK(t.dim() == 6);
        CHECK(gabriel_quiver(t) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
    }
    SUBCASE("T(k[B2])")
    {
        CHECK(trivial_extension(incidence_algebra(named_poset("boolean", 2), Rationals{})).dim() == 18);
    }
}

TEST_CASE("tensor_product and enveloping examples")
{
    auto a2 = path_algebra(linear_quiver(2), Rationals{});
    CHECK(tensor_product(a2, semisimple_algebra(Rationals{}, 1)).dim() == a2.dim());
    auto sq = tensor_product(a2, a2);
    CHECK(sq.dim() == 9);
    CHECK(sq.vertex_count() == 4);
    // same Cartan matrix as k[B2] once both are ordered by a linear extension
    CHECK(cartan_matrix(sq) == cartan_matrix(incidence_algebra(Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), Rationals{})));
    CHECK(enveloping(semisimple_algebra(Rationals{}, 1)).dim() == 1);
    CHECK(enveloping(trivial_extension(semisimple_algebra(Rationals{}, 1))).dim() == 4);
    auto env = enveloping(a2);
    CHECK(env.dim() == 9);
    CHECK(env.vertex_count() == 4);
    CHECK_THROWS_AS(tensor_product(semisimple_algebra(PrimeField(2), 1), semisimple_algebra(PrimeField(3), 1)), std::invalid_argument);
}

TEST_CASE("cartan_matrix examples")
{
    CHECK(cartan_matrix(path_algebra(linear_quiver(2), Rationals{})) == ExactMatrix<Rationals>::from_ints(Rationals{}, {{1, 1}, {0, 1}}));
    const auto b2 = named_poset("boolean", 2);
    const auto u = cartan_matrix(incidence_algebra(b2, Rationals{}));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
            CHECK(u(x, y) == Rational(b2.leq(x, y) ? 1 : 0));
    CHECK(cartan_matrix(semisimple_algebra(Rationals{}, 3)).is_identity());
}

TEST_CASE("property: Cartan matrix of a tensor product is the Kronecker product")
{
    std::vector<BasedAlgebra<Rationals>> algebras;
    algebras.push_back(path_algebra(linear_quiver(3), Rationals{}));
    algebras.push_back(path_algebra(kronecker(), Rationals{}));
    algebras.push_back(trivial_extension(path_algebra(linear_quiver(2), Rationals{})));
    algebras.push_back(incidence_algebra(named_poset("boolean", 2), Rationals{}));
    for (const auto& a : algebras)
        for (const auto& b : algebras) {
            const auto ua = cartan_matrix(a), ub = cartan_matrix(b), ut = cartan_matrix(tensor_product(a, b));
            const std::size_t nb = b.vertex_count();
            for (std::size_t i = 0; i < a.vertex_count(); ++i)
                for (std::size_t p = 0; p < nb; ++p)
                    for (std::size_t j = 0; j < a.vertex_count(); ++j)
                        for (std::size_t q = 0; q < nb; ++q)
                            CHECK(ut(i * nb + p, j * nb + q) == ua(i, j) * ub(p, q));
        }
}

TEST_CASE("property: tensor product is associative on the canonical basis bijection")
{
    auto a = path_algebra(linear_quiver(2), Rationals{});
    auto b = trivial_extension(semisimple_algebra(Rationals{}, 1));
    auto c = path_algebra(kronecker(), Rationals{});
    auto left = tensor_product(tensor_product(a, b), c);
    auto right = tensor_product(a, tensor_product(b, c));
    REQUIRE(left.dim() == right.dim());
    for (std::size_t i = 0; i < left.dim(); ++i) {
        CHECK(left.basis(i).source == right.basis(i).source);
        CHECK(left.basis(i).target == right.basis(i).target);
        CHECK(left.products_from(i) == right.products_from(i));
    }
}

TEST_CASE("property: every constructor output passes the validator")
{
    std::mt19937_64 rng(17);
    std::vector<BasedAlgebra<Rationals>> outputs;
    outputs.push_back(semisimple_algebra(Rationals{}, 3));
    outputs.push_back(path_algebra(kronecker(), Rationals{}));
    for (const auto& t : dynkin_types(6))
        outputs.push_back(trivial_extension(path_algebra(dynkin_quiver(t), Rationals{})));
    for (int i = 0; i < 10; ++i) {
        auto p = oracle::random_poset(5, 0.4, rng);
        auto a = incidence_algebra(p, Rationals{});
        outputs.push_back(opposite(a));
        outputs.push_back(trivial_extension(a));
    }
    outputs.push_back(enveloping(path_algebra(linear_quiver(3), Rationals{})));
    for (const auto& a : outputs)
        CHECK_MESSAGE(!a.validation_error(), a.name());
}

TEST_CASE("validator rejects corrupted structure constants")
{
    // A4 path algebra with basis e0..e3, then a, b, c and their composites
    const auto base = [] {
        BasedAlgebra<Rationals>::Builder b(Rationals{}, "broken", 2);
        const auto e0 = b.add({0, 0, ElementKind::Idempotent, 0, "e0"});
        const auto e1 = b.add({1, 1, ElementKind::Idempotent, 0, "e1"});
        const auto x = b.add({0, 1, ElementKind::Radical, 0, "x"});
        b.set_product(e0, e0, unit(e0));
        b.set_product(e1, e1, unit(e1));
        b.set_product(e0, x, unit(x));
        b.set_product(x, e1, unit(x));
        return b;
    };
    const auto validate = [](BasedAlgebra<Rationals>::Builder b) { return std::move(b).build_unchecked().validation_error(); };

    CHECK(!validate(base()));

    SUBCASE("missing unit action")
    {
        auto b = base();
        b.set_product(0, 2, {});
        CHECK(validate(std::move(b)));
    }
    SUBCASE("idempotents not orthogonal")
    {
        auto b = base();
        b.set_product(0, 1, unit(0));
        CHECK(validate(std::move(b)));
    }
    SUBCASE("product leaves e_s A e_t")
    {
        auto b = base();
        b.set_product(2, 1, unit(0));
        CHECK(validate(std::move(b)));
    }
    SUBCASE("two idempotents at one vertex")
    {
        auto b = base();
        b.add({0, 0, ElementKind::Idempotent, 0, "f0"});
        CHECK(validate(std::move(b)));
    }
    SUBCASE("radical not nilpotent")
    {
        BasedAlgebra<Rationals>::Builder b(Rationals{}, "loop", 1);
        b.add({0, 0, ElementKind::Idempotent, 0, "e"});
        b.add({0, 0, ElementKind::Radical, 0, "x"});
        b.set_product(0, 0, unit(0));
        b.set_product(0, 1, unit(1));
        b.set_product(1, 0, unit(1));
        b.set_product(1, 1, unit(1));
        CHECK(validate(std::move(b)));
        BasedAlgebra<Rationals>::Builder c(Rationals{}, "loop", 1);
        c.add({0, 0, ElementKind::Idempotent, 0, "e"});
        c.add({0, 0, ElementKind::Radical, 0, "x"});
        c.set_product(0, 0, unit(0));
        c.set_product(0, 1, unit(1));
        c.set_product(1, 0, unit(1));
        c.set_product(1, 1, unit(1));
        CHECK_THROWS_AS(std::move(c).build(), InvalidAlgebraError);
    }
    SUBCASE("not associative")
    {
        auto a4 = path_algebra(linear_quiver(4), Rationals{});
        BasedAlgebra<Rationals>::Builder b(Rationals{}, "A4 broken", 4);
        for (const auto& e : a4.basis())
            b.add(e);
        std::size_t a = 0, bc = 0;
        for (std::size_t i = 0; i < a4.dim(); ++i) {
            if (a4.basis(i).label == "a1")
                a = i;
            if (a4.basis(i).label == "a2*a3")
                bc = i;
            for (const auto& [j, terms] : a4.products_from(i))
                b.set_product(i, j, terms);
        }
        REQUIRE(a != 0);
        REQUIRE(bc != 0);
        REQUIRE(!a4.product(a, bc).empty());
        b.set_product(a, bc, {});
        CHECK(validate(std::move(b)));
    }
    SUBCASE("zero algebra")
    {
        BasedAlgebra<Rationals>::Builder b(Rationals{}, "zero", 0);
        CHECK(validate(std::move(b)));
    }
}

TEST_CASE("property: T(A) is symmetric for random posets")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = oracle::random_poset(2 + trial % 5, 0.5, rng);
        const auto a = incidence_algebra(p, Rationals{});
        const auto t = trivial_extension(a);
        CHECK(t.dim() == 2 * a.dim());
        const auto lambda = trivial_extension_trace(a);
        const auto beta = bilinear_form(t, lambda);
        CHECK(beta == beta.transpose());
        CHECK(beta.rank() == t.dim());
        // beta(xy, z) = beta(x, yz) on basis triples
        for (std::size_t x = 0; x < t.dim(); ++x)
            for (std::size_t y : t.elements_from(t.basis(x).target))
                for (std::size_t z : t.elements_from(t.basis(y).target)) {
                    const auto xy_z = t.multiply(t.product(x, y), unit(z));
                    const auto x_yz = t.multiply(unit(x), t.product(y, z));
                    CHECK(xy_z == x_yz);
                }
        // the degree-one part squares to zero
        for (std::size_t i = a.dim(); i < t.dim(); ++i)
            for (const auto& [j, terms] : t.products_from(i))
                CHECK(j < a.dim());
    }
}

TEST_CASE("property: incidence algebras of bounded posets have unimodular Cartan matrices")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<Poset::Cover> rel;
        const auto inner = oracle::random_poset(n, 0.4, rng);
        for (std::size_t i = 0; i < n; ++i) {
            rel.emplace_back(0, i + 1);
            rel.emplace_back(i + 1, n + 1);
        }
        for (const auto& [x, y] : inner.covers())
            rel.emplace_back(x + 1, y + 1);
        const auto p = Poset::from_relations(n + 2, rel);
        const auto u = cartan_matrix(incidence_algebra(p, Rationals{}));
        std::vector<std::vector<mpz_class>> m(u.rows(), std::vector<mpz_class>(u.cols()));
        for (std::size_t i = 0; i < u.rows(); ++i)
            for (std::size_t j = 0; j < u.cols(); ++j)
                m[i][j] = u(i, j).to_mpq().get_num();
        const mpz_class d = oracle::det_cofactor(m);
        CHECK(abs(d) == 1);
    }
}
