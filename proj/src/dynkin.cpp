#include "trivext/dynkin.hpp"

#include <numeric>
#include <stdexcept>

namespace trivext {

DynkinType::DynkinType(DynkinFamily f, std::size_t n) : family(f), rank(n)
{
    const bool ok = (f == DynkinFamily::A && n >= 1) || (f == DynkinFamily::D && n >= 4) || (f == DynkinFamily::E && n >= 6 && n <= 8);
    if (!ok)
        throw std::invalid_argument("no Dynkin type " + name());
}

DynkinType DynkinType::parse(const std::string& text)
{
    if (text.size() < 2)
        throw std::invalid_argument("bad Dynkin type '" + text + "'");
    DynkinFamily f;
    switch (text[0]) {
    case 'A': case 'a': f = DynkinFamily::A; break;
    case 'D': case 'd': f = DynkinFamily::D; break;
    case 'E': case 'e': f = DynkinFamily::E; break;
    default: throw std::invalid_argument("bad Dynkin type '" + text + "'");
    }
    std::size_t used = 0;
    unsigned long n = 0;
    try {
        n = std::stoul(text.substr(1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad Dynkin type '" + text + "'");
    }
    if (used + 1 != text.size())
        throw std::invalid_argument("bad Dynkin type '" + text + "'");
    return DynkinType(f, n);
}

std::string DynkinType::name() const
{
    const char letter = family == DynkinFamily::A ? 'A' : family == DynkinFamily::D ? 'D' : 'E';
    return letter + std::to_string(rank);
}

std::vector<DynkinType> dynkin_types(std::size_t max_rank)
{
    std::vector<DynkinType> out;
    for (std::size_t n = 1; n <= max_rank; ++n)
        out.emplace_back(DynkinFamily::A, n);
    for (std::size_t n = 4; n <= max_rank; ++n)
        out.emplace_back(DynkinFamily::D, n);
    for (std::size_t n = 6; n <= std::min<std::size_t>(max_rank, 8); ++n)
        out.emplace_back(DynkinFamily::E, n);
    return out;
}

unsigned long coxeter_number(const DynkinType& t)
{
    switch (t.family) {
    case DynkinFamily::A: return t.rank + 1;
    case DynkinFamily::D: return 2 * (t.rank - 1);
    case DynkinFamily::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    }
    return 0;
}

namespace {

bool special_branch(const DynkinType& t)
{
    return (t.family == DynkinFamily::A && t.rank == 1) || (t.family == DynkinFamily::D && t.rank % 2 == 0) ||
           (t.family == DynkinFamily::E && t.rank >= 7);
}

}  // namespace

CyDim cydim_dynkin(const DynkinType& t)
{
    const long long h = static_cast<long long>(coxeter_number(t));
    if (special_branch(t))
        return {h / 2 - 1, h / 2};
    return {h - 2, h};
}

CyDim tensor_cydim(const std::vector<CyDim>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("tensor_cydim: empty list");
    long long ell = 1;
    for (const auto& c : parts) {
        if (c.ell <= 0)
            throw std::invalid_argument("tensor_cydim: ell must be positive");
        ell = std::lcm(ell, c.ell);
    }
    long long m = 0;
    for (const auto& c : parts)
        m += c.m * (ell / c.ell);
    return {m, ell};
}

unsigned long minimal_period_trivext(const CyDim& c, const FieldSpec& f)
{
    const long long s = c.ell + c.m;
    if (s <= 0)
        throw std::invalid_argument("minimal_period_trivext: ell + m must be positive");
    return static_cast<unsigned long>(s % 2 == 0 || f.characteristic == 2 ? s : 2 * s);
}

std::pair<long long, long long> dct_parameters(long long d, const CyDim& c)
{
    if (d <= 0)
        throw std::invalid_argument("dct_parameters: d must be positive");
    const long long g = std::gcd(c.ell + c.m, d + 1);
    return {g, ((d + 1) * c.ell - (c.ell + c.m)) / g};
}

unsigned long expected_period_dynkin(const DynkinType& t, const FieldSpec& f)
{
    const unsigned long h = coxeter_number(t);
    if (f.characteristic == 2 && special_branch(t))
        return h - 1;
    return 2 * h - 2;
}

Quiver dynkin_quiver(const DynkinType& t)
{
    Quiver q;
    q.vertex_count = t.rank;
    const std::size_t arm = t.family == DynkinFamily::A ? t.rank : t.rank - 1;
    for (std::size_t i = 0; i + 1 < arm; ++i)
        q.arrows.push_back({i, i + 1, "a" + std::to_string(i + 1)});
    if (t.family == DynkinFamily::D)
        q.arrows.push_back({t.rank - 3, t.rank - 1, "a" + std::to_string(t.rank - 1)});
    if (t.family == DynkinFamily::E)
        q.arrows.push_back({2, t.rank - 1, "a" + std::to_string(t.rank - 1)});
    return q;
}

}  // namespace trivext
