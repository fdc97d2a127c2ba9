#include "trivext/io.hpp"

#include "trivext/dynkin.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace trivext {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Quiver parse_quiver(const std::string& text)
{
    Quiver q;
    std::map<std::string, std::size_t> index;
    const auto vertex = [&](const std::string& name) {
        auto [it, fresh] = index.emplace(name, q.vertex_count);
        if (fresh) {
            q.vertex_names.push_back(name);
            ++q.vertex_count;
        }
        return it->second;
    };
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        const auto where = "line " + std::to_string(lineno) + ": ";
        if (line.rfind("vertex ", 0) == 0) {
            const std::string name = trim(line.substr(7));
            if (name.empty() || name.find_first_of(" \t") != std::string::npos)
                throw InputError(where + "bad vertex declaration");
            if (index.count(name))
                throw InputError(where + "vertex '" + name + "' declared twice");
            vertex(name);
            continue;
        }
        const auto arrow = line.find("->");
        if (arrow == std::string::npos)
            throw InputError(where + "expected 'vertex <name>' or '<src> -> <dst>'");
        std::string rest = line.substr(arrow + 2), label;
        if (const auto colon = rest.find(':'); colon != std::string::npos) {
            label = trim(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        const std::string src = trim(line.substr(0, arrow)), dst = trim(rest);
        if (src.empty() || dst.empty() || src.find_first_of(" \t") != std::string::npos || dst.find_first_of(" \t") != std::string::npos)
            throw InputError(where + "bad arrow");
        const std::size_t s = vertex(src), t = vertex(dst);
        if (label.empty())
            label = "a" + std::to_string(q.arrows.size() + 1);
        q.arrows.push_back({s, t, label});
    }
    if (q.vertex_count == 0)
        throw InputError("quiver has no vertices");
    try {
        q.validate();
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return q;
}

std::string format_quiver(const Quiver& q)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < q.vertex_count; ++v)
        out << "vertex " << q.vertex_name(v) << "\n";
    for (const auto& a : q.arrows)
        out << q.vertex_name(a.source) << " -> " << q.vertex_name(a.target) << " : " << a.label << "\n";
    return out.str();
}

LoadedInput load_input(const std::string& spec)
{
    if (spec.rfind("named:", 0) == 0) {
        std::string family = spec.substr(6);
        std::size_t n = 0;
        if (const auto colon = family.find(':'); colon != std::string::npos) {
            try {
                n = std::stoul(family.substr(colon + 1));
            } catch (const std::exception&) {
                throw InputError("bad size in '" + spec + "'");
            }
            family = family.substr(0, colon);
        }
        try {
            return {family + (n ? std::to_string(n) : ""), named_poset(family, n)};
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    if (spec.rfind("dynkin:", 0) == 0) {
        try {
            const auto t = DynkinType::parse(spec.substr(7));
            return {t.name(), dynkin_quiver(t)};
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    std::ifstream file(spec);
    if (!file)
        throw InputError("cannot open '" + spec + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    std::string stem = spec.substr(spec.find_last_of('/') == std::string::npos ? 0 : spec.find_last_of('/') + 1);
    stem = stem.substr(0, stem.find('.'));
    bool arrows = false;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);)
        arrows = arrows || line.substr(0, line.find('#')).find("->") != std::string::npos;
    if (arrows)
        return {stem, parse_quiver(text)};
    try {
        return {stem, parse_poset(text)};
    } catch (const PosetError& e) {
        throw InputError(e.what());
    }
}

}  // namespace trivext
