#pragma once

#include "trivext/algebra.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace trivext {

/*
  Right module given explicitly: a vertex-graded vector space with one action
  map per algebra basis element. action[b][j] holds the image of the j-th
  basis vector of M_{source(b)} as coordinates in M_{target(b)}.
*/
template <class F>
class RightModule {
public:
    using T = typename F::value_type;
    using Vec = SparseVec<T>;

    RightModule(const BasedAlgebra<F>& a, std::vector<std::size_t> dims, std::vector<std::vector<Vec>> action)
        : a_(&a), dims_(std::move(dims)), action_(std::move(action))
    {
        if (dims_.size() != a.vertex_count() || action_.size() != a.dim())
            throw std::invalid_argument("RightModule: shape does not match the algebra");
    }

    const BasedAlgebra<F>& algebra() const { return *a_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    const Vec& act(std::size_t b, std::uint32_t j) const { return action_[b][j]; }

    /// Checks shapes, the idempotent actions and (m b_i) b_j = m (b_i b_j) on every basis vector.
    std::optional<std::string> validation_error() const;

private:
    const BasedAlgebra<F>* a_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Vec>> action_;
};

/// Applies basis element b to an arbitrary vector of M_{source(b)}.
template <class M, class F = std::remove_cvref_t<decltype(std::declval<const M&>().algebra().field())>>
SparseVec<typename F::value_type> act_on(const M& m, std::size_t b, const SparseVec<typename F::value_type>& x)
{
    const F& f = m.algebra().field();
    SparseVec<typename F::value_type> out;
    for (const auto& [j, c] : x)
        axpy(f, out, c, m.act(b, j));
    return out;
}

template <class F>
std::optional<std::string> RightModule<F>::validation_error() const
{
    const auto& a = *a_;
    const F& f = a.field();
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const auto& e = a.basis(b);
        if (action_[b].size() != dims_[e.source])
            return "action of " + std::to_string(b) + " has the wrong number of columns";
        for (const auto& col : action_[b])
            for (const auto& [k, c] : col)
                if (k >= dims_[e.target])
                    return "action of " + std::to_string(b) + " leaves the target component";
    }
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
        for (std::uint32_t j = 0; j < dims_[v]; ++j) {
            const auto& col = action_[a.idempotent(v)][j];
            if (col.size() != 1 || col[0].first != j || !f.is_one(col[0].second))
                return "idempotent " + std::to_string(v) + " does not act as the identity";
        }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& [k, ik] : a.products_from(i))
            for (std::uint32_t j = 0; j < dims_[a.basis(i).source]; ++j) {
                auto lhs = act_on(*this, k, action_[i][j]);
                Vec rhs;
                for (const auto& [r, c] : ik)
                    axpy(f, rhs, c, action_[r][j]);
                if (lhs != rhs)
                    return "action is not multiplicative at (" + std::to_string(i) + ", " + std::to_string(k) + ")";
            }
    return std::nullopt;
}

template <class F>
RightModule<F> simple_module(const BasedAlgebra<F>& a, std::size_t v)
{
    if (v >= a.vertex_count())
        throw std::out_of_range("simple_module: vertex out of range");
    std::vector<std::size_t> dims(a.vertex_count(), 0);
    dims[v] = 1;
    std::vector<std::vector<SparseVec<typename F::value_type>>> action(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b)
        if (a.basis(b).source == v)
            action[b].push_back(b == a.idempotent(v) ? SparseVec<typename F::value_type>{{0, a.field().one()}}
                                                     : SparseVec<typename F::value_type>{});
    return RightModule<F>(a, std::move(dims), std::move(action));
}

/// P_v = e_v A; the basis of the w-component is between(v, w).
template <class F>
RightModule<F> projective_module(const BasedAlgebra<F>& a, std::size_t v)
{
    if (v >= a.vertex_count())
        throw std::out_of_range("projective_module: vertex out of range");
    std::vector<std::size_t> dims(a.vertex_count());
    for (std::size_t w = 0; w < a.vertex_count(); ++w)
        dims[w] = a.between(v, w).size();
    std::vector<std::vector<SparseVec<typename F::value_type>>> action(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const std::size_t u = a.basis(b).source;
        for (auto p : a.between(v, u)) {
            SparseVec<typename F::value_type> col;
            for (const auto& [k, c] : a.product(p, b))
                col.emplace_back(a.position(k), c);
            action[b].push_back(consolidate(a.field(), std::move(col)));
        }
    }
    return RightModule<F>(a, std::move(dims), std::move(action));
}

/// Regular bimodule as a right module over env = enveloping(a): component (i, j) is e_j A e_i and m.(x (x) y) = y m x.
template <class F>
RightModule<F> regular_bimodule(const BasedAlgebra<F>& a, const BasedAlgebra<F>& env)
{
    const std::size_t n = a.vertex_count(), d = a.dim();
    if (env.vertex_count() != n * n || env.dim() != d * d)
        throw std::invalid_argument("regular_bimodule: algebra is not the enveloping algebra");
    const F& f = a.field();
    std::vector<std::size_t> dims(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dims[i * n + j] = a.between(j, i).size();
    std::vector<std::vector<SparseVec<typename F::value_type>>> action(env.dim());
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) {
            const std::size_t i = a.basis(x).source, j = a.basis(y).target;
            auto& cols = action[x * d + y];
            for (auto m : a.between(j, i)) {
                SparseVec<typename F::value_type> col;
                for (const auto& [ym, c] : a.product(y, m))
                    for (const auto& [ymx, e] : a.product(ym, x))
                        col.emplace_back(a.position(ymx), f.mul(c, e));
                cols.push_back(consolidate(f, std::move(col)));
            }
        }
    return RightModule<F>(env, std::move(dims), std::move(action));
}

/*
  Direct sum P = (+)_i e_{tops[i]} A. The u-component has coordinates
  (i, c) for c in between(tops[i], u), laid out summand by summand.
*/
template <class F>
class ProjectiveLayout {
public:
    ProjectiveLayout(const BasedAlgebra<F>& a, std::vector<std::size_t> tops) : a_(&a), tops_(std::move(tops))
    {
        const std::size_t n = a.vertex_count();
        offset_.assign(n, {});
        summand_.assign(n, {});
        dims_.assign(n, 0);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t i = 0; i < tops_.size(); ++i) {
                offset_[u].push_back(static_cast<std::uint32_t>(dims_[u]));
                const std::size_t k = a.between(tops_[i], u).size();
                summand_[u].insert(summand_[u].end(), k, static_cast<std::uint32_t>(i));
                dims_[u] += k;
            }
    }

    const BasedAlgebra<F>& algebra() const { return *a_; }
    const std::vector<std::size_t>& tops() const { return tops_; }
    std::size_t dim(std::size_t u) const { return dims_[u]; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    std::uint32_t summand(std::size_t u, std::uint32_t col) const { return summand_[u][col]; }
    std::uint32_t offset(std::size_t u, std::size_t i) const { return offset_[u][i]; }
    /// Algebra basis element behind coordinate col of the u-component.
    std::uint32_t element(std::size_t u, std::uint32_t col) const
    {
        const auto i = summand_[u][col];
        return a_->between(tops_[i], u)[col - offset_[u][i]];
    }
    /// Coordinate of the generator e_{tops[i]} of summand i.
    std::uint32_t generator_coordinate(std::size_t i) const { return offset_[tops_[i]][i] + a_->position(a_->idempotent(tops_[i])); }

    /// x . b for x in the source(b)-component.
    SparseVec<typename F::value_type> act(std::size_t b, const SparseVec<typename F::value_type>& x) const
    {
        const auto& a = *a_;
        const F& f = a.field();
        const std::size_t u = a.basis(b).source, w = a.basis(b).target;
        SparseVec<typename F::value_type> out;
        out.reserve(x.size());
        for (const auto& [col, c] : x) {
            const auto i = summand_[u][col];
            const std::uint32_t p = a.between(tops_[i], u)[col - offset_[u][i]];
            for (const auto& [k, d] : a.product(p, b))
                out.emplace_back(offset_[w][i] + a.position(k), f.mul(c, d));
        }
        return consolidate(f, std::move(out));
    }

private:
    const BasedAlgebra<F>* a_;
    std::vector<std::size_t> tops_;
    std::vector<std::vector<std::uint32_t>> offset_;
    std::vector<std::vector<std::uint32_t>> summand_;
    std::vector<std::size_t> dims_;
};

/*
  Submodule of a projective P given by a reduced row-echelon basis of each
  vertex component. Coordinates of x in the basis are read off at the pivot
  columns.
*/
template <class F>
class EmbeddedModule {
public:
    using T = typename F::value_type;
    using Vec = SparseVec<T>;

    EmbeddedModule(std::shared_ptr<const ProjectiveLayout<F>> layout, std::vector<std::vector<Vec>> basis)
        : layout_(std::move(layout)), basis_(std::move(basis))
    {
        const std::size_t n = layout_->algebra().vertex_count();
        row_of_.resize(n);
        for (std::size_t u = 0; u < n; ++u) {
            row_of_[u].assign(layout_->dim(u), -1);
            for (std::size_t r = 0; r < basis_[u].size(); ++r)
                row_of_[u][basis_[u][r].front().first] = static_cast<int>(r);
        }
    }

    const BasedAlgebra<F>& algebra() const { return layout_->algebra(); }
    const ProjectiveLayout<F>& layout() const { return *layout_; }
    std::size_t dim(std::size_t u) const { return basis_[u].size(); }
    std::size_t total_dim() const
    {
        std::size_t s = 0;
        for (const auto& b : basis_)
            s += b.size();
        return s;
    }
    const std::vector<Vec>& basis(std::size_t u) const { return basis_[u]; }

    /// Coordinates of (j-th basis vector of the source(b)-component) . b.
    Vec act(std::size_t b, std::uint32_t j) const
    {
        const std::size_t u = algebra().basis(b).source, w = algebra().basis(b).target;
        Vec y = layout_->act(b, basis_[u][j]);
        Vec out;
        for (auto& [col, c] : y)
            if (const int r = row_of_[w][col]; r >= 0)
                out.emplace_back(static_cast<std::uint32_t>(r), std::move(c));
        return out;
    }

private:
    std::shared_ptr<const ProjectiveLayout<F>> layout_;
    std::vector<std::vector<Vec>> basis_;
    std::vector<std::vector<int>> row_of_;
};

/// Explicit copy of any module.
template <class M>
auto materialize(const M& m)
{
    using F = std::remove_cvref_t<decltype(m.algebra().field())>;
    const auto& a = m.algebra();
    std::vector<std::size_t> dims(a.vertex_count());
    for (std::size_t v = 0; v < dims.size(); ++v)
        dims[v] = m.dim(v);
    std::vector<std::vector<SparseVec<typename F::value_type>>> action(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b)
        for (std::uint32_t j = 0; j < dims[a.basis(b).source]; ++j)
            action[b].push_back(m.act(b, j));
    return RightModule<F>(a, std::move(dims), std::move(action));
}

template <class M>
std::vector<std::size_t> dimension_vector(const M& m)
{
    std::vector<std::size_t> d(m.algebra().vertex_count());
    for (std::size_t v = 0; v < d.size(); ++v)
        d[v] = m.dim(v);
    return d;
}

}  // namespace trivext
