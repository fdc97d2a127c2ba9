#pragma once

// Independent brute-force references used by the test suites.

#include "trivext/algebra.hpp"
#include "trivext/poset.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

/// Strict order on n <= 8 points as a bit mask over ordered pairs (bit i*n+j set iff i < j).
using Relation = std::uint64_t;

inline bool related(Relation r, std::size_t n, std::size_t i, std::size_t j) { return (r >> (i * n + j)) & 1U; }

/// Naturally labelled strict orders on n points (i < j in the order implies i < j as integers).
inline std::vector<Relation> natural_orders(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    std::vector<Relation> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
        Relation r = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((s >> k) & 1U)
                r |= Relation{1} << (pairs[k].first * n + pairs[k].second);
        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            for (std::size_t j = i + 1; j < n && transitive; ++j)
                for (std::size_t k = j + 1; k < n && transitive; ++k)
                    if (related(r, n, i, j) && related(r, n, j, k) && !related(r, n, i, k))
                        transitive = false;
        if (transitive)
            out.push_back(r);
    }
    return out;
}

/// Isomorphism invariant: the largest relabelled mask over all n! permutations.
inline Relation brute_canonical(Relation r, std::size_t n)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Relation best = 0;
    do {
        Relation s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (related(r, n, i, j))
                    s |= Relation{1} << (perm[i] * n + perm[j]);
        best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::size_t count_posets(std::size_t n)
{
    std::set<Relation> classes;
    for (Relation r : natural_orders(n))
        classes.insert(brute_canonical(r, n));
    return classes.size();
}

inline trivext::Poset to_poset(Relation r, std::size_t n)
{
    std::vector<trivext::Poset::Cover> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (related(r, n, i, j))
                rel.emplace_back(i, j);
    return trivext::Poset::from_relations(n, rel);
}

/// Adds a bottom (index 0) and a top (index n + 1) around a strict order on n points.
inline trivext::Poset bounded(Relation r, std::size_t n)
{
    std::vector<trivext::Poset::Cover> rel;
    for (std::size_t i = 0; i < n; ++i) {
        rel.emplace_back(0, i + 1);
        rel.emplace_back(i + 1, n + 1);
        for (std::size_t j = 0; j < n; ++j)
            if (related(r, n, i, j))
                rel.emplace_back(i + 1, j + 1);
    }
    if (n == 0)
        rel.emplace_back(0, 1);
    return trivext::Poset::from_relations(n + 2, rel);
}

/// Distributive lattices with m elements up to isomorphism, by brute force over bounded posets (m >= 2).
inline std::size_t count_distributive_lattices(std::size_t m)
{
    if (m == 1)
        return 1;
    const std::size_t inner = m - 2;
    std::set<Relation> classes;
    for (Relation r : natural_orders(inner)) {
        const auto p = bounded(r, inner);
        // meets and joins, then distributivity, all by direct search
        const auto leq = [&](std::size_t x, std::size_t y) { return p.leq(x, y); };
        const auto bound = [&](std::size_t x, std::size_t y, bool join) -> long {
            long best = -1;
            for (std::size_t z = 0; z < m; ++z) {
                const bool ok = join ? leq(x, z) && leq(y, z) : leq(z, x) && leq(z, y);
                if (!ok)
                    continue;
                if (best < 0 || (join ? leq(z, static_cast<std::size_t>(best)) : leq(static_cast<std::size_t>(best), z)))
                    best = static_cast<long>(z);
            }
            for (std::size_t z = 0; z < m; ++z) {
                const bool ok = join ? leq(x, z) && leq(y, z) : leq(z, x) && leq(z, y);
                if (ok && !(join ? leq(static_cast<std::size_t>(best), z) : leq(z, static_cast<std::size_t>(best))))
                    return -1;
            }
            return best;
        };
        bool lattice = true;
        std::vector<std::vector<std::size_t>> meet(m, std::vector<std::size_t>(m)), join(m, std::vector<std::size_t>(m));
        for (std::size_t x = 0; x < m && lattice; ++x)
            for (std::size_t y = 0; y < m && lattice; ++y) {
                const long a = bound(x, y, false), b = bound(x, y, true);
                if (a < 0 || b < 0)
                    lattice = false;
                else {
                    meet[x][y] = static_cast<std::size_t>(a);
                    join[x][y] = static_cast<std::size_t>(b);
                }
            }
        if (!lattice)
            continue;
        bool distributive = true;
        for (std::size_t x = 0; x < m && distributive; ++x)
            for (std::size_t y = 0; y < m && distributive; ++y)
                for (std::size_t z = 0; z < m && distributive; ++z)
                    distributive = meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]];
        if (distributive)
            classes.insert(brute_canonical(r, inner));
    }
    return classes.size();
}

/// det by cofactor expansion along the first row.
inline mpz_class det_cofactor(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<mpz_class>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            minor.push_back(row);
        }
        const mpz_class term = m[0][j] * det_cofactor(minor);
        total += (j % 2 == 0) ? term : mpz_class(-term);
    }
    return total;
}

/// Characteristic polynomial det(xI - m) by evaluating at n+1 integers and Lagrange interpolation.
inline std::vector<mpz_class> char_poly_by_interpolation(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t n = m.size();
    std::vector<mpq_class> xs, ys;
    for (std::size_t k = 0; k <= n; ++k) {
        auto a = m;
        for (std::size_t i = 0; i < n; ++i) {
            for (auto& e : a[i])
                e = -e;
            a[i][i] += static_cast<long>(k);
        }
        xs.emplace_back(static_cast<long>(k));
        ys.emplace_back(det_cofactor(a));
    }
    std::vector<mpq_class> coeffs(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<mpq_class> basis{1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i)
                continue;
            std::vector<mpq_class> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k)
            coeffs[k] += ys[i] * basis[k] / denom;
    }
    std::vector<mpz_class> out;
    for (auto& c : coeffs) {
        c.canonicalize();
        out.push_back(c.get_num());
    }
    return out;
}

/// Random poset on n points: each pair i < j related with probability p, then closed transitively.
inline trivext::Poset random_poset(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<trivext::Poset::Cover> rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                rel.emplace_back(i, j);
    return trivext::Poset::from_relations(n, rel);
}

}  // namespace oracle
