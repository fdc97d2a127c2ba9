#include "trivext/algebra.hpp"

#include <set>

namespace trivext {

void Quiver::validate() const
{
    if (!vertex_names.empty() && vertex_names.size() != vertex_count)
        throw std::invalid_argument("quiver: vertex name count does not match vertex count");
    std::set<std::string> labels;
    for (const auto& a : arrows) {
        if (a.source >= vertex_count || a.target >= vertex_count)
            throw std::invalid_argument("quiver: arrow '" + a.label + "' has an out-of-range endpoint");
        if (a.label.empty())
            throw std::invalid_argument("quiver: arrows need labels");
        if (!labels.insert(a.label).second)
            throw std::invalid_argument("quiver: duplicate arrow label '" + a.label + "'");
    }
}

bool Quiver::is_acyclic() const
{
    std::vector<std::size_t> indeg(vertex_count, 0);
    for (const auto& a : arrows)
        ++indeg[a.target];
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < vertex_count; ++v)
        if (indeg[v] == 0)
            ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.source == v && --indeg[a.target] == 0)
                ready.push_back(a.target);
    }
    return seen == vertex_count;
}

std::string Quiver::vertex_name(std::size_t v) const
{
    return v < vertex_names.size() ? vertex_names[v] : std::to_string(v + 1);
}

}  // namespace trivext
