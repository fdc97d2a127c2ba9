#include "trivext/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace trivext {

namespace {

std::vector<std::string> default_names(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return names;
}

// Kahn's algorithm, smallest index first; empty result signals a cycle.
std::vector<std::size_t> topological_order(std::size_t n, const std::vector<std::vector<std::size_t>>& succ)
{
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& s : succ)
        for (std::size_t y : s)
            ++indeg[y];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < n; ++x)
        if (indeg[x] == 0)
            ready.push(x);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t x = ready.top();
        ready.pop();
        order.push_back(x);
        for (std::size_t y : succ[x])
            if (--indeg[y] == 0)
                ready.push(y);
    }
    if (order.size() != n)
        order.clear();
    return order;
}

std::vector<boost::dynamic_bitset<>> closure(std::size_t n, const std::vector<std::vector<std::size_t>>& succ)
{
    auto order = topological_order(n, succ);
    if (order.size() != n)
        throw PosetError(PosetError::Kind::Cycle, "relation contains a cycle");
    std::vector<boost::dynamic_bitset<>> up(n, boost::dynamic_bitset<>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        up[*it].set(*it);
        for (std::size_t y : succ[*it])
            up[*it] |= up[y];
    }
    return up;
}

}  // namespace

Poset Poset::from_covers(std::size_t n, std::vector<Cover> covers, std::vector<std::string> names)
{
    Poset p;
    p.n_ = n;
    p.names_ = names.empty() ? default_names(n) : std::move(names);
    if (p.names_.size() != n)
        throw std::invalid_argument("Poset: name count does not match size");
    std::set<Cover> seen;
    for (const auto& [x, y] : covers) {
        if (x >= n || y >= n)
            throw PosetError(PosetError::Kind::UnknownElement, "cover refers to an element out of range");
        if (x == y)
            throw PosetError(PosetError::Kind::Cycle, "element " + p.names_[x] + " below itself");
        if (!seen.insert({x, y}).second)
            throw PosetError(PosetError::Kind::DuplicateCover, "duplicate cover " + p.names_[x] + " < " + p.names_[y]);
    }
    std::sort(covers.begin(), covers.end());
    p.covers_ = std::move(covers);
    p.finish();
    for (const auto& [x, y] : p.covers_) {
        auto between = p.up_[x] & p.down_[y];
        if (between.count() != 2)
            throw PosetError(PosetError::Kind::Redundant,
                             "cover " + p.names_[x] + " < " + p.names_[y] + " is implied by transitivity");
    }
    return p;
}

Poset Poset::from_relations(std::size_t n, const std::vector<Cover>& relations, std::vector<std::string> names)
{
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& [x, y] : relations) {
        if (x >= n || y >= n)
            throw PosetError(PosetError::Kind::UnknownElement, "relation refers to an element out of range");
        if (x == y)
            throw PosetError(PosetError::Kind::Cycle, "element below itself");
        succ[x].push_back(y);
    }
    auto up = closure(n, succ);
    std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = up[x].find_first(); y != boost::dynamic_bitset<>::npos; y = up[x].find_next(y))
            down[y].set(x);
    std::vector<Cover> covers;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = up[x].find_first(); y != boost::dynamic_bitset<>::npos; y = up[x].find_next(y))
            if (y != x && (up[x] & down[y]).count() == 2)
                covers.emplace_back(x, y);
    return from_covers(n, std::move(covers), std::move(names));
}

void Poset::finish()
{
    upper_.assign(n_, {});
    lower_.assign(n_, {});
    for (const auto& [x, y] : covers_) {
        upper_[x].push_back(y);
        lower_[y].push_back(x);
    }
    up_ = closure(n_, upper_);
    down_.assign(n_, boost::dynamic_bitset<>(n_));
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = up_[x].find_first(); y != boost::dynamic_bitset<>::npos; y = up_[x].find_next(y))
            down_[y].set(x);
}

std::size_t Poset::interval_count() const
{
    std::size_t total = 0;
    for (const auto& u : up_)
        total += u.count();
    return total;
}

std::vector<std::size_t> Poset::linear_extension() const { return topological_order(n_, upper_); }

std::optional<std::size_t> Poset::bottom() const
{
    for (std::size_t x = 0; x < n_; ++x)
        if (up_[x].all())
            return x;
    return std::nullopt;
}

std::optional<std::size_t> Poset::top() const
{
    for (std::size_t x = 0; x < n_; ++x)
        if (down_[x].all())
            return x;
    return std::nullopt;
}

Poset Poset::relabeled(const std::vector<std::size_t>& perm) const
{
    std::vector<Cover> covers;
    for (const auto& [x, y] : covers_)
        covers.emplace_back(perm[x], perm[y]);
    std::vector<std::string> names(n_);
    for (std::size_t x = 0; x < n_; ++x)
        names[perm[x]] = names_[x];
    return from_covers(n_, std::move(covers), std::move(names));
}

Poset Poset::induced(const std::vector<std::size_t>& elements) const
{
    std::vector<Cover> rel;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        names.push_back(names_[elements[i]]);
        for (std::size_t j = 0; j < elements.size(); ++j)
            if (less(elements[i], elements[j]))
                rel.emplace_back(i, j);
    }
    return from_relations(elements.size(), rel, std::move(names));
}

Poset parse_poset(const std::string& text)
{
    std::vector<std::string> names;
    std::map<std::string, std::size_t> index;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, std::string>> relations;
    const auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, names.size());
        if (fresh)
            names.push_back(name);
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (words[0] == "elem") {
            if (words.size() < 2)
                throw PosetError(PosetError::Kind::Syntax, where + "expected a name after 'elem'");
            for (std::size_t k = 1; k < words.size(); ++k) {
                intern(words[k]);
                declared.insert(words[k]);
            }
            continue;
        }
        // a < b < c ...
        if (words.size() < 3 || words.size() % 2 == 0)
            throw PosetError(PosetError::Kind::Syntax, where + "expected '<a> < <b>'");
        for (std::size_t k = 1; k < words.size(); k += 2)
            if (words[k] != "<")
                throw PosetError(PosetError::Kind::Syntax, where + "expected '<' but found '" + words[k] + "'");
        for (std::size_t k = 0; k < words.size(); k += 2)
            intern(words[k]);
        for (std::size_t k = 0; k + 2 < words.size(); k += 2)
            relations.emplace_back(words[k], words[k + 2]);
    }

    if (!declared.empty())
        for (const auto& [a, b] : relations)
            for (const auto& nm : {a, b})
                if (!declared.count(nm))
                    throw PosetError(PosetError::Kind::UnknownElement, "undeclared element '" + nm + "'");

    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Poset::Cover> rel;
    for (const auto& [a, b] : relations) {
        if (!seen.insert({a, b}).second)
            throw PosetError(PosetError::Kind::DuplicateCover, "duplicate relation " + a + " < " + b);
        rel.emplace_back(index[a], index[b]);
    }
    return Poset::from_relations(names.size(), rel, names);
}

std::string format_poset(const Poset& p)
{
    std::ostringstream os;
    for (std::size_t x = 0; x < p.size(); ++x)
        os << "elem " << p.name(x) << '\n';
    for (const auto& [x, y] : p.covers())
        os << p.name(x) << " < " << p.name(y) << '\n';
    return os.str();
}

namespace {

// Calls fn(mask) for every down-set, in a fixed order.
template <class Fn>
void for_each_ideal(const Poset& p, Fn&& fn)
{
    const auto order = p.linear_extension();
    std::vector<std::uint64_t> lower(p.size(), 0);
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y : p.lower_covers(x))
            lower[x] |= std::uint64_t{1} << y;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t mask) {
        if (k == order.size()) {
            fn(mask);
            return;
        }
        const std::size_t x = order[k];
        rec(k + 1, mask);
        if ((lower[x] & ~mask) == 0)
            rec(k + 1, mask | (std::uint64_t{1} << x));
    };
    rec(0, 0);
}

}  // namespace

std::size_t count_order_ideals(const Poset& p)
{
    if (p.size() > 64)
        throw PosetError(PosetError::Kind::Bound, "count_order_ideals: poset larger than 64 elements");
    std::size_t count = 0;
    for_each_ideal(p, [&](std::uint64_t) { ++count; });
    return count;
}

Poset order_ideals(const Poset& p, std::size_t max_size)
{
    if (p.size() > max_size || p.size() > 64)
        throw PosetError(PosetError::Kind::Bound,
                         "order_ideals: poset has " + std::to_string(p.size()) + " elements, bound is " + std::to_string(max_size));
    constexpr std::size_t kMaxIdeals = std::size_t{1} << 16;
    std::vector<std::uint64_t> ideals;
    for_each_ideal(p, [&](std::uint64_t m) {
        if (ideals.size() >= kMaxIdeals)
            throw PosetError(PosetError::Kind::Bound, "order_ideals: more than 65536 ideals");
        ideals.push_back(m);
    });
    // order by size, then by the sorted element list, giving a linear extension
    const auto key = [&](std::uint64_t m) {
        std::vector<std::size_t> elems;
        for (std::size_t x = 0; x < p.size(); ++x)
            if (m >> x & 1)
                elems.push_back(x);
        return std::make_pair(elems.size(), elems);
    };
    std::sort(ideals.begin(), ideals.end(), [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    std::map<std::uint64_t, std::size_t> index;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        index[ideals[i]] = i;
        std::string nm = "{";
        bool first = true;
        for (std::size_t x = 0; x < p.size(); ++x)
            if (ideals[i] >> x & 1) {
                nm += (first ? "" : ",") + p.name(x);
                first = false;
            }
        names.push_back(nm + "}");
    }
    std::vector<Poset::Cover> covers;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (ideals[i] >> x & 1)
                continue;
            auto it = index.find(ideals[i] | (std::uint64_t{1} << x));
            if (it != index.end())
                covers.emplace_back(i, it->second);
        }
    return Poset::from_covers(ideals.size(), std::move(covers), std::move(names));
}

LatticeCheck is_distributive_lattice(const Poset& p)
{
    LatticeCheck check;
    const std::size_t n = p.size();
    if (n == 0) {
        check.reason = "empty poset";
        return check;
    }
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> meet(n * n, kNone), join(n * n, kNone);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x; y < n; ++y) {
            const auto lower = p.down_set(x) & p.down_set(y);
            const auto upper = p.up_set(x) & p.up_set(y);
            for (std::size_t z = lower.find_first(); z != boost::dynamic_bitset<>::npos; z = lower.find_next(z))
                if (p.down_set(z) == lower) {
                    meet[x * n + y] = meet[y * n + x] = z;
                    break;
                }
            for (std::size_t z = upper.find_first(); z != boost::dynamic_bitset<>::npos; z = upper.find_next(z))
                if (p.up_set(z) == upper) {
                    join[x * n + y] = join[y * n + x] = z;
                    break;
                }
            if (meet[x * n + y] == kNone) {
                check.reason = "no meet for " + p.name(x) + " and " + p.name(y);
                return check;
            }
            if (join[x * n + y] == kNone) {
                check.reason = "no join for " + p.name(x) + " and " + p.name(y);
                return check;
            }
        }
    check.is_lattice = true;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const std::size_t lhs = meet[x * n + join[y * n + z]];
                const std::size_t rhs = join[meet[x * n + y] * n + meet[x * n + z]];
                if (lhs != rhs) {
                    check.reason = "distributivity fails for (" + p.name(x) + ", " + p.name(y) + ", " + p.name(z) + ")";
                    return check;
                }
            }
    check.is_distributive = true;
    return check;
}

Poset join_irreducibles(const Poset& lattice)
{
    std::vector<std::size_t> elems;
    for (std::size_t x = 0; x < lattice.size(); ++x)
        if (lattice.lower_covers(x).size() == 1)
            elems.push_back(x);
    return lattice.induced(elems);
}

namespace {

Poset boolean_lattice(std::size_t n)
{
    if (n > 10)
        throw PosetError(PosetError::Kind::Bound, "boolean lattice limited to n <= 10");
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::string> names;
    for (std::size_t m = 0; m < size; ++m) {
        std::string nm = "{";
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1) {
                nm += (first ? "" : ",") + std::to_string(i + 1);
                first = false;
            }
        names.push_back(nm + "}");
    }
    std::vector<Poset::Cover> covers;
    for (std::size_t m = 0; m < size; ++m)
        for (std::size_t i = 0; i < n; ++i)
            if (!(m >> i & 1))
                covers.emplace_back(m, m | (std::size_t{1} << i));
    return Poset::from_covers(size, std::move(covers), std::move(names));
}

// Bracketings of `leaves` letters, as strings like "((ab)c)".
std::vector<std::string> bracketings(const std::string& leaves)
{
    if (leaves.size() == 1)
        return {leaves};
    std::vector<std::string> out;
    for (std::size_t k = 1; k < leaves.size(); ++k)
        for (const auto& l : bracketings(leaves.substr(0, k)))
            for (const auto& r : bracketings(leaves.substr(k)))
                out.push_back("(" + l + r + ")");
    return out;
}

// Splits "(XY)" into X and Y.
std::pair<std::string, std::string> split_tree(const std::string& t)
{
    std::size_t depth = 0, k = 1;
    do {
        if (t[k] == '(')
            ++depth;
        else if (t[k] == ')')
            --depth;
        ++k;
    } while (depth > 0);
    return {t.substr(1, k - 1), t.substr(k, t.size() - k - 1)};
}

// All trees reachable by one right rotation (XY)Z -> X(YZ).
std::vector<std::string> right_rotations(const std::string& t)
{
    if (t.size() == 1)
        return {};
    auto [l, r] = split_tree(t);
    std::vector<std::string> out;
    if (l.size() > 1) {
        auto [a, b] = split_tree(l);
        out.push_back("(" + a + "(" + b + r + "))");
    }
    for (const auto& l2 : right_rotations(l))
        out.push_back("(" + l2 + r + ")");
    for (const auto& r2 : right_rotations(r))
        out.push_back("(" + l + r2 + ")");
    return out;
}

Poset tamari(std::size_t n)
{
    if (n < 1 || n > 6)
        throw PosetError(PosetError::Kind::Bound, "tamari lattice limited to 1 <= n <= 6");
    std::string leaves;
    for (std::size_t k = 0; k <= n; ++k)
        leaves += static_cast<char>('a' + k);
    auto trees = bracketings(leaves);
    std::sort(trees.begin(), trees.end());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < trees.size(); ++i)
        index[trees[i]] = i;
    std::vector<Poset::Cover> covers;
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (const auto& t : right_rotations(trees[i]))
            covers.emplace_back(i, index.at(t));
    return Poset::from_covers(trees.size(), std::move(covers), trees);
}

}  // namespace

Poset named_poset(const std::string& family, std::size_t n)
{
    if (family == "chain") {
        std::vector<Poset::Cover> covers;
        for (std::size_t i = 0; i + 1 < n; ++i)
            covers.emplace_back(i, i + 1);
        return Poset::from_covers(n, std::move(covers));
    }
    if (family == "antichain")
        return Poset::from_covers(n, {});
    if (family == "boolean")
        return boolean_lattice(n);
    if (family == "tamari")
        return tamari(n);
    if (family == "fdl3")
        return order_ideals(boolean_lattice(3));
    throw std::invalid_argument("unknown poset family '" + family + "'");
}

}  // namespace trivext
