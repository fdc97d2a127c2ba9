#pragma once

#include "trivext/field.hpp"
#include "trivext/matrix.hpp"
#include "trivext/poset.hpp"
#include "trivext/sparse.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivext {

class InvalidAlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

struct Quiver {
    std::size_t vertex_count = 0;
    std::vector<Arrow> arrows;
    std::vector<std::string> vertex_names;  // optional

    /// Checks index ranges and label uniqueness; throws std::invalid_argument.
    void validate() const;
    bool is_acyclic() const;
    std::string vertex_name(std::size_t v) const;
};

enum class ElementKind { Idempotent, Radical };

struct BasisElement {
    std::size_t source = 0;
    std::size_t target = 0;
    ElementKind kind = ElementKind::Radical;
    int degree = 0;
    std::string label;
};

/*
  Split-basic finite-dimensional algebra given by a basis adapted to a
  complete set of primitive orthogonal idempotents and exact structure
  constants. Basis element b with source s and target t satisfies
  b = e_s b e_t; products compose left to right (b_i b_j can be nonzero only
  when target(b_i) == source(b_j)). Instances are immutable and validated on
  construction.
*/
template <class F>
class BasedAlgebra {
public:
    using T = typename F::value_type;
    using Terms = SparseVec<T>;

    class Builder {
    public:
        Builder(F f, std::string name, std::size_t vertex_count) : f_(std::move(f)), name_(std::move(name)), vertices_(vertex_count) {}

        std::size_t add(BasisElement b)
        {
            basis_.push_back(std::move(b));
            return basis_.size() - 1;
        }
        /// Sets b_i * b_j; duplicate indices in terms are summed.
        void set_product(std::size_t i, std::size_t j, Terms terms)
        {
            products_[{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}] = consolidate(f_, std::move(terms));
        }
        const F& field() const { return f_; }
        std::size_t size() const { return basis_.size(); }

        /// Validates every algebra axiom; throws InvalidAlgebraError.
        BasedAlgebra build() &&
        {
            BasedAlgebra a(std::move(*this));
            if (auto err = a.validation_error())
                throw InvalidAlgebraError(a.name_ + ": " + *err);
            a.compute_generators();
            return a;
        }
        /// Skips validation; for tests that need to inspect broken tables.
        BasedAlgebra build_unchecked() && { return BasedAlgebra(std::move(*this)); }

    private:
        friend class BasedAlgebra;
        F f_;
        std::string name_;
        std::size_t vertices_;
        std::vector<BasisElement> basis_;
        std::map<std::pair<std::uint32_t, std::uint32_t>, Terms> products_;
    };

    const F& field() const { return f_; }
    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return vertices_; }
    std::size_t dim() const { return basis_.size(); }
    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t idempotent(std::size_t v) const { return idempotent_[v]; }
    bool is_radical(std::size_t i) const { return basis_[i].kind == ElementKind::Radical; }

    /// b_i * b_j as a combination of basis indices (empty when zero).
    const Terms& product(std::size_t i, std::size_t j) const
    {
        const auto& row = rows_[i];
        auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(j),
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        return it != row.end() && it->first == j ? it->second : empty_;
    }
    /// Nonzero products b_i * b_j, sorted by j.
    const std::vector<std::pair<std::uint32_t, Terms>>& products_from(std::size_t i) const { return rows_[i]; }

    /// Basis elements with the given source and target, ascending.
    const std::vector<std::uint32_t>& between(std::size_t source, std::size_t target) const { return between_[source * vertices_ + target]; }
    /// Basis elements with the given source, ascending.
    const std::vector<std::uint32_t>& elements_from(std::size_t source) const { return from_[source]; }
    /// Position of basis element i inside between(source(i), target(i)).
    std::uint32_t position(std::size_t i) const { return position_[i]; }
    /// Radical basis elements whose classes form a basis of rad/rad^2.
    const std::vector<std::uint32_t>& generators() const { return generators_; }

    /// Sparse product of two arbitrary elements.
    Terms multiply(const Terms& x, const Terms& y) const
    {
        Terms acc;
        for (const auto& [i, a] : x)
            for (const auto& [j, b] : y) {
                const T ab = f_.mul(a, b);
                for (const auto& [k, c] : product(i, j))
                    acc.emplace_back(k, f_.mul(ab, c));
            }
        return consolidate(f_, std::move(acc));
    }

    /// First violated axiom, if any.
    std::optional<std::string> validation_error() const;

private:
    explicit BasedAlgebra(Builder&& b);
    void compute_generators();

    F f_;
    std::string name_;
    std::size_t vertices_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::pair<std::uint32_t, Terms>>> rows_;
    std::vector<std::size_t> idempotent_;
    std::vector<std::vector<std::uint32_t>> between_;
    std::vector<std::uint32_t> position_;
    std::vector<std::vector<std::uint32_t>> from_;
    std::vector<std::uint32_t> generators_;
    Terms empty_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const BasedAlgebra<F>>;

template <class F>
BasedAlgebra<F>::BasedAlgebra(Builder&& b)
    : f_(std::move(b.f_)), name_(std::move(b.name_)), vertices_(b.vertices_), basis_(std::move(b.basis_)), rows_(basis_.size())
{
    for (auto& [key, terms] : b.products_)
        if (key.first < basis_.size() && !terms.empty())
            rows_[key.first].emplace_back(key.second, std::move(terms));
    idempotent_.assign(vertices_, static_cast<std::size_t>(-1));
    between_.assign(vertices_ * vertices_, {});
    position_.assign(basis_.size(), 0);
    from_.assign(vertices_, {});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& e = basis_[i];
        if (e.source >= vertices_ || e.target >= vertices_)
            continue;
        if (e.kind == ElementKind::Idempotent && idempotent_[e.source] == static_cast<std::size_t>(-1))
            idempotent_[e.source] = i;
        from_[e.source].push_back(static_cast<std::uint32_t>(i));
        auto& group = between_[e.source * vertices_ + e.target];
        position_[i] = static_cast<std::uint32_t>(group.size());
        group.push_back(static_cast<std::uint32_t>(i));
    }
}

template <class F>
std::optional<std::string> BasedAlgebra<F>::validation_error() const
{
    const std::size_t n = dim();
    if (vertices_ == 0 || n == 0)
        return "the zero algebra is not allowed";
    std::vector<int> idem_count(vertices_, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = basis_[i];
        if (e.source >= vertices_ || e.target >= vertices_)
            return "basis element " + std::to_string(i) + " has an out-of-range vertex";
        if (e.kind == ElementKind::Idempotent) {
            if (e.source != e.target)
                return "idempotent " + std::to_string(i) + " is not a loop at its vertex";
            ++idem_count[e.source];
        }
    }
    for (std::size_t v = 0; v < vertices_; ++v)
        if (idem_count[v] != 1)
            return "vertex " + std::to_string(v) + " has " + std::to_string(idem_count[v]) + " idempotents";

    // vertex compatibility
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, terms] : rows_[i]) {
            if (basis_[i].target != basis_[j].source)
                return "product of " + std::to_string(i) + " and " + std::to_string(j) + " should vanish";
            for (const auto& [k, c] : terms)
                if (basis_[k].source != basis_[i].source || basis_[k].target != basis_[j].target)
                    return "product of " + std::to_string(i) + " and " + std::to_string(j) + " leaves e_s A e_t";
        }

    // unit and orthogonality: e_v b = [s(b) = v] b, b e_v = [t(b) = v] b
    for (std::size_t v = 0; v < vertices_; ++v) {
        const std::size_t ev = idempotent_[v];
        for (std::size_t i = 0; i < n; ++i) {
            const Terms& left = product(ev, i);
            const Terms& right = product(i, ev);
            const bool ls = basis_[i].source == v, rt = basis_[i].target == v;
            const auto is_unit = [&](const Terms& t) { return t.size() == 1 && t[0].first == i && f_.is_one(t[0].second); };
            if (ls ? !is_unit(left) : !left.empty())
                return "idempotent " + std::to_string(v) + " does not act as a left unit on " + std::to_string(i);
            if (rt ? !is_unit(right) : !right.empty())
                return "idempotent " + std::to_string(v) + " does not act as a right unit on " + std::to_string(i);
        }
    }

    // associativity, only over composable triples
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, ij] : rows_[i])
            for (std::size_t k : elements_from(basis_[j].target)) {
                Terms lhs;
                for (const auto& [m, c] : ij)
                    for (const auto& [r, d] : product(m, k))
                        lhs.emplace_back(r, f_.mul(c, d));
                lhs = consolidate(f_, std::move(lhs));
                Terms rhs;
                for (const auto& [m, c] : product(j, k))
                    for (const auto& [r, d] : product(i, m))
                        rhs.emplace_back(r, f_.mul(c, d));
                rhs = consolidate(f_, std::move(rhs));
                if (lhs.size() != rhs.size() || !std::equal(lhs.begin(), lhs.end(), rhs.begin(), [&](const auto& a, const auto& b) {
                        return a.first == b.first && f_.equal(a.second, b.second);
                    }))
                    return "associativity fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
            }

    // radical span is an ideal and nilpotent
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, terms] : rows_[i]) {
            if (!is_radical(i) && !is_radical(j))
                continue;
            for (const auto& [k, c] : terms)
                if (!is_radical(k))
                    return "radical span is not an ideal (" + std::to_string(i) + " * " + std::to_string(j) + ")";
        }
    std::vector<Terms> power;
    for (std::size_t i = 0; i < n; ++i)
        if (is_radical(i))
            power.push_back(Terms{{static_cast<std::uint32_t>(i), f_.one()}});
    for (std::size_t step = 0; !power.empty(); ++step) {
        if (step > n)
            return "radical is not nilpotent";
        RowEchelon<F> next(f_, n);
        for (const auto& x : power)
            for (std::size_t g = 0; g < n; ++g)
                if (is_radical(g))
                    next.insert(multiply(x, Terms{{static_cast<std::uint32_t>(g), f_.one()}}));
        power = next.rows();
    }
    return std::nullopt;
}

template <class F>
void BasedAlgebra<F>::compute_generators()
{
    const std::size_t n = dim();
    RowEchelon<F> rad2(f_, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_radical(i))
            continue;
        for (const auto& [j, terms] : rows_[i])
            if (is_radical(j))
                rad2.insert(terms);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (is_radical(i) && rad2.insert(Terms{{static_cast<std::uint32_t>(i), f_.one()}}))
            generators_.push_back(static_cast<std::uint32_t>(i));
}

// ---------------------------------------------------------------------------
// constructions

template <class F>
BasedAlgebra<F> semisimple_algebra(const F& f, std::size_t n)
{
    typename BasedAlgebra<F>::Builder b(f, n == 1 ? "k" : "k^" + std::to_string(n), n);
    for (std::size_t v = 0; v < n; ++v)
        b.add({v, v, ElementKind::Idempotent, 0, "e" + std::to_string(v)});
    for (std::size_t v = 0; v < n; ++v)
        b.set_product(v, v, {{static_cast<std::uint32_t>(v), f.one()}});
    return std::move(b).build();
}

/// Path algebra of an acyclic quiver; basis: trivial paths, then paths by source, length, arrow sequence.
template <class F>
BasedAlgebra<F> path_algebra(const Quiver& q, const F& f, std::string name = "kQ")
{
    q.validate();
    if (!q.is_acyclic())
        throw std::invalid_argument("path_algebra: quiver has an oriented cycle");
    using Path = std::vector<std::size_t>;
    std::vector<Path> paths;
    std::vector<std::vector<std::size_t>> out(q.vertex_count);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        out[q.arrows[a].source].push_back(a);
    for (std::size_t v = 0; v < q.vertex_count; ++v) {
        std::vector<Path> layer;
        for (std::size_t a : out[v])
            layer.push_back({a});
        while (!layer.empty()) {
            std::vector<Path> next;
            for (const auto& p : layer) {
                paths.push_back(p);
                for (std::size_t a : out[q.arrows[p.back()].target]) {
                    Path ext = p;
                    ext.push_back(a);
                    next.push_back(std::move(ext));
                }
            }
            layer = std::move(next);
        }
    }
    typename BasedAlgebra<F>::Builder b(f, std::move(name), q.vertex_count);
    for (std::size_t v = 0; v < q.vertex_count; ++v)
        b.add({v, v, ElementKind::Idempotent, 0, "e_" + q.vertex_name(v)});
    std::map<Path, std::size_t> index;
    for (const auto& p : paths) {
        std::string label;
        for (std::size_t a : p)
            label += (label.empty() ? "" : "*") + q.arrows[a].label;
        index[p] = b.add({q.arrows[p.front()].source, q.arrows[p.back()].target, ElementKind::Radical, 0, label});
    }
    const auto one = f.one();
    for (std::size_t v = 0; v < q.vertex_count; ++v)
        b.set_product(v, v, {{static_cast<std::uint32_t>(v), one}});
    for (const auto& [p, i] : index) {
        const std::size_t s = q.arrows[p.front()].source, t = q.arrows[p.back()].target;
        b.set_product(s, i, {{static_cast<std::uint32_t>(i), one}});
        b.set_product(i, t, {{static_cast<std::uint32_t>(i), one}});
        for (const auto& [p2, j] : index) {
            if (q.arrows[p2.front()].source != t)
                continue;
            Path cat = p;
            cat.insert(cat.end(), p2.begin(), p2.end());
            b.set_product(i, j, {{static_cast<std::uint32_t>(index.at(cat)), one}});
        }
    }
    return std::move(b).build();
}

/// Incidence algebra: basis the intervals [x, y], x <= y, with [x, y][y, z] = [x, z].
template <class F>
BasedAlgebra<F> incidence_algebra(const Poset& p, const F& f, std::string name = "k[P]")
{
    typename BasedAlgebra<F>::Builder b(f, std::move(name), p.size());
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t x = 0; x < p.size(); ++x)
        index[{x, x}] = b.add({x, x, ElementKind::Idempotent, 0, "[" + p.name(x) + "]"});
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, y))
                index[{x, y}] = b.add({x, y, ElementKind::Radical, 0, "[" + p.name(x) + "," + p.name(y) + "]"});
    for (const auto& [xy, i] : index)
        for (std::size_t z = 0; z < p.size(); ++z)
            if (p.leq(xy.second, z))
                b.set_product(i, index.at({xy.second, z}), {{static_cast<std::uint32_t>(index.at({xy.first, z})), f.one()}});
    return std::move(b).build();
}

/*
  T(A) = A + DA with (a, f)(b, g) = (ab, ag + fb). Basis: A's basis (degree 0)
  followed by the dual basis b_i* (degree 1, index dim A + i) with source
  target(b_i) and target source(b_i). Bimodule structure on DA:
  (b.f)(x) = f(xb) and (f.b)(x) = f(bx).
*/
template <class F>
BasedAlgebra<F> trivial_extension(const BasedAlgebra<F>& a)
{
    const F& f = a.field();
    const std::size_t n = a.dim();
    typename BasedAlgebra<F>::Builder b(f, "T(" + a.name() + ")", a.vertex_count());
    for (std::size_t i = 0; i < n; ++i) {
        BasisElement e = a.basis(i);
        e.degree = 0;
        b.add(e);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = a.basis(i);
        b.add({e.target, e.source, ElementKind::Radical, 1, e.label + "*"});
    }
    using Terms = typename BasedAlgebra<F>::Terms;
    // deg0 * deg0
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, terms] : a.products_from(i))
            b.set_product(i, j, terms);
    // b_i * b_j^* = sum_k coeff_{b_j}(b_k b_i) b_k^*   and   b_j^* * b_i = sum_k coeff_{b_j}(b_i b_k) b_k^*
    std::map<std::pair<std::uint32_t, std::uint32_t>, Terms> left, right;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& [i, terms] : a.products_from(k))
            for (const auto& [j, c] : terms)
                left[{i, j}].emplace_back(static_cast<std::uint32_t>(n + k), c);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [k, terms] : a.products_from(i))
            for (const auto& [j, c] : terms)
                right[{static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)}].emplace_back(static_cast<std::uint32_t>(n + k), c);
    for (auto& [ij, terms] : left)
        b.set_product(ij.first, n + ij.second, std::move(terms));
    for (auto& [ji, terms] : right)
        b.set_product(n + ji.first, ji.second, std::move(terms));
    return std::move(b).build();
}

/// A (x) B with basis pairs (i, j) at index i * dim B + j and vertices (v, w) at v * |B_0| + w.
template <class F>
BasedAlgebra<F> tensor_product(const BasedAlgebra<F>& a, const BasedAlgebra<F>& b)
{
    if (!(a.field() == b.field()))
        throw std::invalid_argument("tensor_product: algebras over different fields");
    const F& f = a.field();
    const std::size_t nb = b.dim(), vb = b.vertex_count();
    typename BasedAlgebra<F>::Builder t(f, a.name() + "(x)" + b.name(), a.vertex_count() * vb);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const auto &x = a.basis(i), &y = b.basis(j);
            const bool idem = x.kind == ElementKind::Idempotent && y.kind == ElementKind::Idempotent;
            t.add({x.source * vb + y.source, x.target * vb + y.target, idem ? ElementKind::Idempotent : ElementKind::Radical,
                   x.degree + y.degree, x.label + "(x)" + y.label});
        }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& [k, ik] : a.products_from(i))
            for (std::size_t j = 0; j < nb; ++j)
                for (const auto& [l, jl] : b.products_from(j)) {
                    typename BasedAlgebra<F>::Terms terms;
                    for (const auto& [p, c] : ik)
                        for (const auto& [q, d] : jl)
                            terms.emplace_back(static_cast<std::uint32_t>(p * nb + q), f.mul(c, d));
                    t.set_product(i * nb + j, k * nb + l, std::move(terms));
                }
    return std::move(t).build();
}

/// Opposite algebra: same basis and vertex order, sources and targets swapped, products reversed.
template <class F>
BasedAlgebra<F> opposite(const BasedAlgebra<F>& a)
{
    typename BasedAlgebra<F>::Builder b(a.field(), a.name() + "^op", a.vertex_count());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        BasisElement e = a.basis(i);
        std::swap(e.source, e.target);
        b.add(e);
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& [j, terms] : a.products_from(i))
            b.set_product(j, i, terms);
    return std::move(b).build();
}

/// A^e = A (x) A^op.
template <class F>
BasedAlgebra<F> enveloping(const BasedAlgebra<F>& a)
{
    return tensor_product(a, opposite(a));
}

/// U_ij = dim e_i A e_j.
template <class F>
ExactMatrix<Rationals> cartan_matrix(const BasedAlgebra<F>& a)
{
    const std::size_t n = a.vertex_count();
    ExactMatrix<Rationals> u(Rationals{}, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            u(i, j) = static_cast<long long>(a.between(i, j).size());
    return u;
}

/// Arrow counts of the Gabriel quiver: dim e_i (rad / rad^2) e_j.
template <class F>
std::vector<std::vector<std::size_t>> gabriel_quiver(const BasedAlgebra<F>& a)
{
    std::vector<std::vector<std::size_t>> arrows(a.vertex_count(), std::vector<std::size_t>(a.vertex_count(), 0));
    for (auto g : a.generators())
        ++arrows[a.basis(g).source][a.basis(g).target];
    return arrows;
}

/// Matrix of (x, y) -> lambda(x y) for a linear functional lambda given on the basis.
template <class F>
ExactMatrix<F> bilinear_form(const BasedAlgebra<F>& a, const std::vector<typename F::value_type>& functional)
{
    const F& f = a.field();
    ExactMatrix<F> m(f, a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& [j, terms] : a.products_from(i)) {
            auto s = f.zero();
            for (const auto& [k, c] : terms)
                s = f.add(s, f.mul(c, functional[k]));
            m(i, j) = s;
        }
    return m;
}

/// The symmetrizing functional of T(A): (a, f) -> f(1), i.e. 1 on every dual idempotent.
template <class F>
std::vector<typename F::value_type> trivial_extension_trace(const BasedAlgebra<F>& base)
{
    const F& f = base.field();
    std::vector<typename F::value_type> lambda(2 * base.dim(), f.zero());
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
        lambda[base.dim() + base.idempotent(v)] = f.one();
    return lambda;
}

}  // namespace trivext
