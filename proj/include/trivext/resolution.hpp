#pragma once

#include "trivext/module.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace trivext {

struct CoverStats {
    std::size_t module_dim = 0;
    std::size_t projective_dim = 0;
    std::size_t syzygy_dim = 0;
};

using CoverObserver = std::function<void(const CoverStats&)>;

template <class F>
struct CoverData {
    std::shared_ptr<const ProjectiveLayout<F>> projective;
    std::vector<std::size_t> multiplicities;           // per vertex
    std::vector<std::pair<std::size_t, std::uint32_t>> top_basis;  // (vertex, index in M_vertex), one per summand
    /// Kernel of the cover map, per vertex, in reduced row-echelon form over the coordinates of P.
    std::vector<std::vector<SparseVec<typename F::value_type>>> kernel;
};

/*
  Minimal projective cover of m. The top M / M.rad is complemented by the
  unit vectors at the non-pivot coordinates of M.rad (where M.rad is the
  span of the actions of the rad/rad^2 generators), and each such vector
  spans one summand e_v A of the cover. Throws std::logic_error when the
  computed map fails surjectivity or minimality; the checks are cheap and
  always on.
*/
template <class M>
auto projective_cover(const M& m, const CoverObserver& observe = {})
{
    using F = std::remove_cvref_t<decltype(m.algebra().field())>;
    using T = typename F::value_type;
    const auto& a = m.algebra();
    const F& f = a.field();
    const std::size_t n = a.vertex_count();

    CoverData<F> cover;
    cover.multiplicities.assign(n, 0);
    std::vector<std::size_t> tops;
    std::size_t mdim = 0;
    for (std::size_t w = 0; w < n; ++w) {
        const std::size_t d = m.dim(w);
        mdim += d;
        if (d == 0)
            continue;
        RowEchelon<F> rad(f, d);
        for (auto g : a.generators()) {
            if (a.basis(g).target != w)
                continue;
            for (std::uint32_t j = 0; j < m.dim(a.basis(g).source) && rad.rank() < d; ++j)
                rad.insert(m.act(g, j));
        }
        for (std::uint32_t j = 0; j < d; ++j)
            if (!rad.is_pivot(j)) {
                cover.top_basis.emplace_back(w, j);
                tops.push_back(w);
                ++cover.multiplicities[w];
            }
    }
    if (mdim == 0)
        throw std::invalid_argument("projective_cover: zero module");
    cover.projective = std::make_shared<ProjectiveLayout<F>>(a, tops);
    const auto& p = *cover.projective;

    cover.kernel.resize(n);
    std::size_t kdim = 0;
    for (std::size_t u = 0; u < n; ++u) {
        std::vector<SparseVec<T>> columns(p.dim(u));
        for (std::uint32_t col = 0; col < p.dim(u); ++col) {
            const auto i = p.summand(u, col);
            columns[col] = m.act(p.element(u, col), cover.top_basis[i].second);
        }
        cover.kernel[u] = null_space_of_columns(f, columns, m.dim(u));
        if (p.dim(u) - cover.kernel[u].size() != m.dim(u))
            throw std::logic_error("projective_cover: cover map is not surjective");
        kdim += cover.kernel[u].size();
    }
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const std::uint32_t g = p.generator_coordinate(i);
        for (const auto& v : cover.kernel[tops[i]])
            if (!f.is_zero(sparse_at(v, g, f)))
                throw std::logic_error("projective_cover: kernel is not contained in P.rad");
    }
    if (observe)
        observe({mdim, p.total_dim(), kdim});
    return cover;
}

template <class M>
auto syzygy(const M& m, const CoverObserver& observe = {})
{
    using F = std::remove_cvref_t<decltype(m.algebra().field())>;
    auto cover = projective_cover(m, observe);
    return EmbeddedModule<F>(cover.projective, std::move(cover.kernel));
}

// ---------------------------------------------------------------------------
// periodicity verdicts

enum class VerdictKind { Periodic, Diverging, Inconclusive };
enum class InconclusiveReason { None, StepBound, DimCap, ZeroSyzygy, NotPermutation, IsoUnknown };

std::string to_string(VerdictKind k);
std::string to_string(InconclusiveReason r);

struct OrbitOptions {
    std::size_t max_steps = 200;
    std::size_t dim_cap = 20000;
    std::size_t workers = 0;            // 0: hardware concurrency
    std::size_t divergence_window = 10;
    std::size_t divergence_stride = 1;  // block length of the window; 1 compares single steps
    CoverObserver observe;              // called from worker threads
};

struct PeriodicityVerdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    InconclusiveReason reason = InconclusiveReason::None;
    std::size_t n = 0;                               // Periodic: least common return time
    std::vector<std::size_t> permutation;            // Periodic: Omega^n(S_v) = S_{permutation[v]}
    std::vector<std::size_t> per_simple_periods;     // Periodic: least t with Omega^t(S_v) = S_v
    std::vector<std::size_t> return_vertex;          // first simple reached from S_v
    std::vector<std::size_t> return_step;            // and the step where it is reached
    std::size_t last_step = 0;                       // Diverging / Inconclusive
    std::optional<std::size_t> failing_vertex;
    std::vector<std::vector<std::size_t>> dim_traces;  // total dimensions of Omega^1, Omega^2, ... per simple
};

/*
  Divergence evidence: the trace is cut into blocks of divergence_stride
  steps ending at the latest step; the minima of the last divergence_window
  blocks must be strictly increasing and the last minimum must exceed
  dim_cap / 2. With stride 1 this is "the last window dimensions strictly
  increase and the latest exceeds dim_cap / 2".
*/
bool diverging(const std::vector<std::size_t>& trace, const OrbitOptions& opts);

struct SimpleOrbit {
    VerdictKind kind = VerdictKind::Inconclusive;
    InconclusiveReason reason = InconclusiveReason::None;
    std::size_t return_vertex = 0;
    std::size_t steps = 0;
    std::vector<std::size_t> trace;
};

/// Iterates Omega on S_v until a one-dimensional syzygy (necessarily simple) appears.
template <class F>
SimpleOrbit simple_orbit(const BasedAlgebra<F>& a, std::size_t v, const OrbitOptions& opts)
{
    SimpleOrbit out;
    const auto step = [&](auto&& module) -> std::optional<EmbeddedModule<F>> {
        auto next = syzygy(module, opts.observe);
        const std::size_t d = next.total_dim();
        out.trace.push_back(d);
        out.steps = out.trace.size();
        if (d == 0) {
            out.reason = InconclusiveReason::ZeroSyzygy;
            return std::nullopt;
        }
        if (d == 1) {
            out.kind = VerdictKind::Periodic;
            for (std::size_t w = 0; w < a.vertex_count(); ++w)
                if (next.dim(w) == 1)
                    out.return_vertex = w;
            return std::nullopt;
        }
        if (diverging(out.trace, opts)) {
            out.kind = VerdictKind::Diverging;
            return std::nullopt;
        }
        if (d > opts.dim_cap) {
            out.reason = InconclusiveReason::DimCap;
            return std::nullopt;
        }
        if (out.steps >= opts.max_steps) {
            out.reason = InconclusiveReason::StepBound;
            return std::nullopt;
        }
        return next;
    };
    auto current = step(simple_module(a, v));
    while (current)
        current = step(*current);
    return out;
}

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace detail

/// Combines per-simple return data (tau, r) into a verdict; exposed for testing.
PeriodicityVerdict assemble_verdict(std::vector<SimpleOrbit> orbits);

/// Simple-level periodicity: Omega^n(S_v) = S_{sigma(v)} for every vertex v.
template <class F>
PeriodicityVerdict syzygy_orbit(const BasedAlgebra<F>& a, const OrbitOptions& opts = {})
{
    std::vector<SimpleOrbit> orbits(a.vertex_count());
    detail::parallel_for(a.vertex_count(), opts.workers, [&](std::size_t v) { orbits[v] = simple_orbit(a, v, opts); });
    return assemble_verdict(std::move(orbits));
}

// ---------------------------------------------------------------------------
// isomorphism

enum class IsoOutcome { Isomorphic, NonIsomorphic, Unknown };

template <class F>
struct IsoResult {
    IsoOutcome outcome = IsoOutcome::Unknown;
    std::string reason;
    /// Isomorphic: per vertex, the image of each basis vector of M_v in N_v.
    std::vector<std::vector<SparseVec<typename F::value_type>>> certificate;
};

struct IsoOptions {
    std::size_t random_samples = 64;
    std::size_t exhaustive_limit = 4096;
    std::uint64_t seed = 0;  // 0: TRIVEXT_SEED or a fixed default
};

std::uint64_t iso_seed(std::uint64_t requested);

namespace detail {

/// Rank of a dense square block given as rows.
template <class F>
std::size_t block_rank(const F& f, const std::vector<SparseVec<typename F::value_type>>& rows, std::size_t cols)
{
    RowEchelon<F> e(f, cols);
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

}  // namespace detail

/*
  Solves the intertwining system for Hom(M, N) on the rad/rad^2 generators
  (idempotents are handled by the vertex blocks) and searches the solution
  space for an invertible element. Any certificate is checked exactly against
  every algebra basis element before it is returned.
*/
template <class M, class N>
auto modules_isomorphic(const M& m, const N& n, const IsoOptions& opts = {})
{
    using F = std::remove_cvref_t<decltype(m.algebra().field())>;
    using T = typename F::value_type;
    IsoResult<F> result;
    const auto& a = m.algebra();
    if (&a != &n.algebra())
        throw std::invalid_argument("modules_isomorphic: modules over different algebras");
    const F& f = a.field();
    const std::size_t nv = a.vertex_count();
    if (dimension_vector(m) != dimension_vector(n)) {
        result.outcome = IsoOutcome::NonIsomorphic;
        result.reason = "dimension vectors differ";
        return result;
    }
    // unknown phi_u(j, k): image of basis vector j of M_u has coefficient k in N_u
    std::vector<std::uint32_t> base(nv + 1, 0);
    for (std::size_t u = 0; u < nv; ++u)
        base[u + 1] = base[u] + static_cast<std::uint32_t>(m.dim(u) * m.dim(u));
    const std::uint32_t unknowns = base[nv];
    const auto var = [&](std::size_t u, std::size_t j, std::size_t k) { return base[u] + static_cast<std::uint32_t>(j * m.dim(u) + k); };

    std::vector<SparseVec<T>> equations;
    for (auto g : a.generators()) {
        const std::size_t u = a.basis(g).source, w = a.basis(g).target;
        const std::size_t du = m.dim(u), dw = m.dim(w);
        if (du == 0 || dw == 0)
            continue;
        // phi_w(m_j . g) = phi_u(m_j) . g, compared coefficientwise in N_w
        std::vector<SparseVec<T>> ng(du);
        for (std::uint32_t k = 0; k < du; ++k)
            ng[k] = n.act(g, k);
        for (std::uint32_t j = 0; j < du; ++j) {
            const auto mg = m.act(g, j);
            std::vector<SparseVec<T>> eq(dw);
            for (const auto& [l, c] : mg)
                for (std::uint32_t q = 0; q < dw; ++q)
                    eq[q].emplace_back(var(w, l, q), c);
            for (std::uint32_t k = 0; k < du; ++k)
                for (const auto& [q, c] : ng[k])
                    eq[q].emplace_back(var(u, j, k), f.neg(c));
            for (auto& e : eq) {
                e = consolidate(f, std::move(e));
                if (!e.empty())
                    equations.push_back(std::move(e));
            }
        }
    }
    const auto hom = null_space(f, equations, unknowns);
    if (hom.empty()) {
        result.outcome = IsoOutcome::NonIsomorphic;
        result.reason = "no nonzero homomorphisms";
        return result;
    }

    const auto blocks_of = [&](const SparseVec<T>& x) {
        std::vector<std::vector<SparseVec<T>>> phi(nv);
        for (std::size_t u = 0; u < nv; ++u)
            phi[u].resize(m.dim(u));
        std::size_t u = 0;
        for (const auto& [idx, c] : x) {
            while (idx >= base[u + 1])
                ++u;
            const std::size_t local = idx - base[u];
            phi[u][local / m.dim(u)].emplace_back(static_cast<std::uint32_t>(local % m.dim(u)), c);
        }
        return phi;
    };
    const auto invertible = [&](const std::vector<std::vector<SparseVec<T>>>& phi) {
        for (std::size_t u = 0; u < nv; ++u)
            if (detail::block_rank(f, phi[u], m.dim(u)) != m.dim(u))
                return false;
        return true;
    };
    const auto equivariant = [&](const std::vector<std::vector<SparseVec<T>>>& phi) {
        for (std::size_t b = 0; b < a.dim(); ++b) {
            const std::size_t u = a.basis(b).source, w = a.basis(b).target;
            for (std::uint32_t j = 0; j < m.dim(u); ++j) {
                SparseVec<T> lhs;  // phi_w(m_j . b)
                for (const auto& [l, c] : m.act(b, j))
                    axpy(f, lhs, c, phi[w][l]);
                if (lhs != act_on(n, b, phi[u][j]))
                    return false;
            }
        }
        return true;
    };
    const auto accept = [&](const SparseVec<T>& x) {
        auto phi = blocks_of(x);
        if (!invertible(phi) || !equivariant(phi))
            return false;
        result.outcome = IsoOutcome::Isomorphic;
        result.certificate = std::move(phi);
        return true;
    };
    const auto combine = [&](const std::vector<T>& coeffs) {
        SparseVec<T> x;
        for (std::size_t k = 0; k < hom.size(); ++k)
            axpy(f, x, coeffs[k], hom[k]);
        return x;
    };

    const std::size_t r = hom.size();
    const long long p = f.characteristic();
    if (p > 0) {
        double count = 1;
        for (std::size_t k = 0; k < r && count <= static_cast<double>(opts.exhaustive_limit); ++k)
            count *= static_cast<double>(p);
        if (count <= static_cast<double>(opts.exhaustive_limit)) {
            std::vector<long long> digits(r, 0);
            for (;;) {
                std::size_t k = 0;
                while (k < r && ++digits[k] == p)
                    digits[k++] = 0;
                if (k == r)
                    break;
                std::vector<T> coeffs(r);
                for (std::size_t i = 0; i < r; ++i)
                    coeffs[i] = f.from_int(digits[i]);
                if (accept(combine(coeffs)))
                    return result;
            }
            result.outcome = IsoOutcome::NonIsomorphic;
            result.reason = "no invertible homomorphism (exhaustive search)";
            return result;
        }
    }
    std::mt19937_64 rng(iso_seed(opts.seed));
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (std::size_t s = 0; s < opts.random_samples; ++s) {
        std::vector<T> coeffs(r);
        for (auto& c : coeffs)
            c = f.from_int(dist(rng));
        if (accept(combine(coeffs)))
            return result;
    }
    result.outcome = IsoOutcome::Unknown;
    result.reason = "no invertible homomorphism among " + std::to_string(opts.random_samples) + " random samples";
    return result;
}

struct BimoduleOptions {
    std::size_t max_steps = 24;
    std::size_t max_algebra_dim = 12;
    IsoOptions iso;
    CoverObserver observe;
};

/// Least n with Omega^n_{A^e}(A) isomorphic to A as bimodules, searched up to max_steps.
template <class F>
PeriodicityVerdict bimodule_syzygy_orbit(const BasedAlgebra<F>& a, const BimoduleOptions& opts = {})
{
    if (a.dim() > opts.max_algebra_dim)
        throw std::invalid_argument("bimodule_syzygy_orbit: algebra dimension " + std::to_string(a.dim()) + " exceeds the guard " +
                                    std::to_string(opts.max_algebra_dim));
    const auto env = enveloping(a);
    const auto regular = regular_bimodule(a, env);
    const auto target = dimension_vector(regular);
    PeriodicityVerdict verdict;
    verdict.dim_traces.resize(1);
    auto& trace = verdict.dim_traces[0];
    bool unknown = false;
    std::optional<EmbeddedModule<F>> current;
    for (std::size_t step = 1; step <= opts.max_steps; ++step) {
        auto next = current ? syzygy(*current, opts.observe) : syzygy(regular, opts.observe);
        trace.push_back(next.total_dim());
        verdict.last_step = step;
        if (next.total_dim() == 0) {
            verdict.reason = InconclusiveReason::ZeroSyzygy;
            return verdict;
        }
        if (dimension_vector(next) == target) {
            const auto iso = modules_isomorphic(next, regular, opts.iso);
            if (iso.outcome == IsoOutcome::Isomorphic) {
                verdict.kind = VerdictKind::Periodic;
                verdict.n = step;
                verdict.permutation.resize(a.vertex_count());
                std::iota(verdict.permutation.begin(), verdict.permutation.end(), std::size_t{0});
                return verdict;
            }
            unknown = unknown || iso.outcome == IsoOutcome::Unknown;
        }
        current.emplace(std::move(next));
    }
    verdict.reason = unknown ? InconclusiveReason::IsoUnknown : InconclusiveReason::StepBound;
    return verdict;
}

}  // namespace trivext
