#include "trivext/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trivext {

std::string CanonicalForm::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::string out = std::to_string(size) + ":";
    for (std::size_t k = 0; k < bits.size(); k += 4) {
        int d = 0;
        for (std::size_t b = 0; b < 4; ++b)
            d = d * 2 + (k + b < bits.size() && bits[k + b] ? 1 : 0);
        out += digits[d];
    }
    return out;
}

std::uint64_t SmallPoset::below(std::size_t x) const
{
    std::uint64_t m = 0;
    for (std::size_t y = 0; y < above.size(); ++y)
        if (above[y] >> x & 1)
            m |= std::uint64_t{1} << y;
    return m;
}

SmallPoset SmallPoset::from(const Poset& p)
{
    if (p.size() > 64)
        throw PosetError(PosetError::Kind::Bound, "SmallPoset: more than 64 elements");
    SmallPoset s;
    s.above.assign(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, y))
                s.above[x] |= std::uint64_t{1} << y;
    return s;
}

Poset SmallPoset::to_poset() const
{
    std::vector<Poset::Cover> rel;
    for (std::size_t x = 0; x < above.size(); ++x)
        for (std::size_t y = 0; y < above.size(); ++y)
            if (above[x] >> y & 1)
                rel.emplace_back(x, y);
    return Poset::from_relations(above.size(), rel);
}

namespace {

using Cells = std::vector<std::vector<int>>;

class CanonicalSearch {
public:
    CanonicalSearch(const SmallPoset& p, const std::vector<int>& colors) : p_(p), n_(p.size()), colors_(colors)
    {
        below_.resize(n_);
        for (std::size_t x = 0; x < n_; ++x)
            below_[x] = p.below(x);
        if (colors_.empty())
            colors_.assign(n_, 0);
    }

    CanonicalLabeling run()
    {
        std::vector<int> verts(n_);
        std::iota(verts.begin(), verts.end(), 0);
        const auto key = [&](int v) {
            return std::make_tuple(colors_[v], __builtin_popcountll(below_[v]), __builtin_popcountll(p_.above[v]));
        };
        std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return key(a) < key(b); });
        Cells cells;
        for (int v : verts) {
            if (cells.empty() || key(cells.back().front()) != key(v))
                cells.emplace_back();
            cells.back().push_back(v);
        }
        std::vector<int> prefix;
        dfs(std::move(cells), prefix);
        CanonicalLabeling result;
        result.form.size = n_;
        result.form.bits = best_bits_;
        result.order.assign(best_order_.begin(), best_order_.end());
        return result;
    }

private:
    void refine(Cells& cells) const
    {
        for (;;) {
            std::vector<int> cell_of(n_);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    cell_of[v] = static_cast<int>(c);
            std::vector<std::uint64_t> cell_mask(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c])
                    cell_mask[c] |= std::uint64_t{1} << v;

            Cells next;
            bool changed = false;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> sig;
                for (int v : cell) {
                    std::vector<int> s(2 * cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        s[2 * c] = __builtin_popcountll(p_.above[v] & cell_mask[c]);
                        s[2 * c + 1] = __builtin_popcountll(below_[v] & cell_mask[c]);
                    }
                    sig.emplace_back(std::move(s), v);
                }
                std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                for (std::size_t k = 0; k < sig.size(); ++k) {
                    if (k == 0 || sig[k].first != sig[k - 1].first) {
                        next.emplace_back();
                        if (k > 0)
                            changed = true;
                    }
                    next.back().push_back(sig[k].second);
                }
            }
            cells = std::move(next);
            if (!changed)
                return;
        }
    }

    bool twins(int u, int v) const
    {
        const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        return (p_.above[u] & mask) == (p_.above[v] & mask) && (below_[u] & mask) == (below_[v] & mask);
    }

    bool same_orbit(int u, int v, const std::vector<int>& prefix) const
    {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& g : automorphisms_) {
            if (!std::all_of(prefix.begin(), prefix.end(), [&](int x) { return g[x] == x; }))
                continue;
            any = true;
            for (std::size_t x = 0; x < n_; ++x)
                parent[find(static_cast<int>(x))] = find(g[x]);
        }
        return any && find(u) == find(v);
    }

    void leaf(const Cells& cells)
    {
        std::vector<int> order;
        for (const auto& c : cells)
            order.push_back(c.front());
        std::vector<bool> bits(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                bits[i * n_ + j] = p_.above[order[i]] >> order[j] & 1;
        if (!have_best_ || bits > best_bits_) {
            have_best_ = true;
            best_bits_ = std::move(bits);
            best_order_ = std::move(order);
        } else if (bits == best_bits_) {
            std::vector<int> g(n_);
            bool identity = true;
            for (std::size_t k = 0; k < n_; ++k) {
                g[best_order_[k]] = order[k];
                identity = identity && best_order_[k] == order[k];
            }
            if (!identity)
                automorphisms_.push_back(std::move(g));
        }
    }

    void dfs(Cells cells, std::vector<int>& prefix)
    {
        refine(cells);
        if (cells.size() == n_) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        const std::vector<int> candidates = cells[target];
        std::vector<int> tried;
        for (int v : candidates) {
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v) || same_orbit(u, v, prefix); }))
                continue;
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[c])
                    if (u != v)
                        rest.push_back(u);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            dfs(std::move(child), prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }

    const SmallPoset& p_;
    std::size_t n_;
    std::vector<int> colors_;
    std::vector<std::uint64_t> below_;
    bool have_best_ = false;
    std::vector<bool> best_bits_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallPoset& p, const std::vector<int>& colors)
{
    if (p.size() > 64)
        throw PosetError(PosetError::Kind::Bound, "canonical_labeling: more than 64 elements");
    if (!colors.empty() && colors.size() != p.size())
        throw std::invalid_argument("canonical_labeling: color vector has wrong length");
    if (p.size() == 0)
        return {};
    return CanonicalSearch(p, colors).run();
}

CanonicalForm canonical_form(const Poset& p) { return canonical_labeling(SmallPoset::from(p)).form; }

std::size_t count_ideals(const SmallPoset& p)
{
    // elements in a linear extension: repeatedly take a minimal remaining one
    const std::size_t n = p.size();
    std::vector<std::uint64_t> below(n);
    for (std::size_t x = 0; x < n; ++x)
        below[x] = p.below(x);
    std::vector<std::size_t> order;
    std::uint64_t placed = 0;
    while (order.size() < n)
        for (std::size_t x = 0; x < n; ++x)
            if (!(placed >> x & 1) && (below[x] & ~placed) == 0) {
                order.push_back(x);
                placed |= std::uint64_t{1} << x;
            }
    std::size_t count = 0;
    const auto rec = [&](auto&& self, std::size_t k, std::uint64_t mask) -> void {
        if (k == n) {
            ++count;
            return;
        }
        const std::size_t x = order[k];
        self(self, k + 1, mask);
        if ((below[x] & ~mask) == 0)
            self(self, k + 1, mask | (std::uint64_t{1} << x));
    };
    rec(rec, 0, 0);
    return count;
}

namespace {

void extend(const SmallPoset& parent, std::size_t n, const std::function<bool(const SmallPoset&)>& keep,
            const std::function<void(const SmallPoset&)>& visit)
{
    visit(parent);
    const std::size_t k = parent.size();
    if (k == n)
        return;

    // down-sets of the parent; indices already form a linear extension
    std::vector<std::uint64_t> below(k);
    for (std::size_t x = 0; x < k; ++x)
        below[x] = parent.below(x);
    std::vector<std::uint64_t> ideals;
    const auto rec = [&](auto&& self, std::size_t i, std::uint64_t mask) -> void {
        if (i == k) {
            ideals.push_back(mask);
            return;
        }
        self(self, i + 1, mask);
        if ((below[i] & ~mask) == 0)
            self(self, i + 1, mask | (std::uint64_t{1} << i));
    };
    rec(rec, 0, 0);

    std::set<CanonicalForm> siblings;
    for (std::uint64_t ideal : ideals) {
        SmallPoset child = parent;
        child.above.push_back(0);
        for (std::size_t y = 0; y < k; ++y)
            if (ideal >> y & 1)
                child.above[y] |= std::uint64_t{1} << k;
        if (!keep(child))
            continue;
        const auto lab = canonical_labeling(child);
        // canonical deletion: the maximal element with the largest canonical label
        std::size_t chosen = k;
        for (std::size_t pos = child.size(); pos-- > 0;)
            if (child.above[lab.order[pos]] == 0) {
                chosen = lab.order[pos];
                break;
            }
        if (chosen != k) {
            std::vector<int> mark_new(child.size(), 0), mark_chosen(child.size(), 0);
            mark_new[k] = 1;
            mark_chosen[chosen] = 1;
            if (canonical_labeling(child, mark_new).form != canonical_labeling(child, mark_chosen).form)
                continue;
        }
        if (!siblings.insert(lab.form).second)
            continue;
        extend(child, n, keep, visit);
    }
}

}  // namespace

void for_each_poset(std::size_t n, const std::function<bool(const SmallPoset&)>& keep,
                    const std::function<void(const SmallPoset&)>& visit)
{
    if (n > 63)
        throw PosetError(PosetError::Kind::Bound, "for_each_poset: n too large");
    extend(SmallPoset{}, n, keep, visit);
}

std::vector<Poset> enumerate_posets(std::size_t n)
{
    if (n > 10)
        throw PosetError(PosetError::Kind::Bound, "enumerate_posets: n must be at most 10");
    std::vector<Poset> out;
    for_each_poset(
        n, [](const SmallPoset&) { return true; },
        [&](const SmallPoset& p) {
            if (p.size() == n)
                out.push_back(p.to_poset());
        });
    return out;
}

std::vector<Poset> census_distributive_lattices(std::size_t m)
{
    if (m < 1 || m > 12)
        throw PosetError(PosetError::Kind::Bound, "census_distributive_lattices: m must be in 1..12");
    // a distributive lattice with m elements is J(P) for P its join-irreducibles, |P| <= m-1;
    // adding a maximal element strictly increases the number of ideals, so prune at m
    std::vector<std::pair<CanonicalForm, Poset>> found;
    for_each_poset(
        m - 1, [m](const SmallPoset& p) { return count_ideals(p) <= m; },
        [&](const SmallPoset& p) {
            if (count_ideals(p) != m)
                return;
            Poset lattice = order_ideals(p.to_poset());
            found.emplace_back(canonical_form(lattice), std::move(lattice));
        });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Poset> out;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (i > 0 && found[i].first == found[i - 1].first)
            throw std::logic_error("census_distributive_lattices: duplicate isomorphism class");
        out.push_back(std::move(found[i].second));
    }
    return out;
}

}  // namespace trivext
