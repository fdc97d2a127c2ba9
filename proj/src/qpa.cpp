#include "trivext/qpa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trivext {

namespace {

/// The fixed path from x to y (x <= y): always take the first Hasse arrow that stays below y.
std::vector<std::size_t> first_path(const Poset& p, const std::vector<std::vector<std::size_t>>& out_arrows, std::size_t x, std::size_t y)
{
    std::vector<std::size_t> path;
    while (x != y) {
        for (std::size_t a : out_arrows[x]) {
            const std::size_t z = p.covers()[a].second;
            if (p.leq(z, y)) {
                path.push_back(a);
                x = z;
                break;
            }
        }
    }
    return path;
}

std::vector<std::size_t> concat(std::vector<std::size_t> a, const std::vector<std::size_t>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TrivialExtensionPresentation trivial_extension_presentation(const Poset& p)
{
    const auto bottom = p.bottom(), top = p.top();
    if (!bottom || !top || *bottom == *top)
        throw std::invalid_argument("export: poset needs distinct top and bottom elements");
    TrivialExtensionPresentation t;
    t.vertex_count = p.size();
    t.vertex_names = p.names();
    std::vector<std::vector<std::size_t>> out_arrows(p.size());
    for (std::size_t a = 0; a < p.covers().size(); ++a) {
        t.arrows.push_back(p.covers()[a]);
        out_arrows[p.covers()[a].first].push_back(a);
    }
    const std::size_t w = t.arrows.size();
    t.arrows.emplace_back(*top, *bottom);

    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!p.less(x, y))
                continue;
            const auto chosen = first_path(p, out_arrows, x, y);
            for (std::size_t a : out_arrows[x]) {
                const std::size_t z = p.covers()[a].second;
                if (a == chosen.front() || !p.leq(z, y))
                    continue;
                t.commutativity.push_back({chosen, concat({a}, first_path(p, out_arrows, z, y))});
            }
        }

    for (std::size_t l = 0; l < p.size(); ++l) {
        const auto cycle = concat(concat(first_path(p, out_arrows, l, *top), {w}), first_path(p, out_arrows, *bottom, l));
        for (std::size_t a = 0; a < t.arrows.size(); ++a) {
            for (auto rel : {t.arrows[a].second == l ? concat({a}, cycle) : std::vector<std::size_t>{},
                             t.arrows[a].first == l ? concat(cycle, {a}) : std::vector<std::size_t>{}})
                if (!rel.empty() && std::none_of(t.socle.begin(), t.socle.end(), [&](const auto& r) { return r.lhs == rel; }))
                    t.socle.push_back({rel, {}});
        }
    }

    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (!p.comparable(a, b))
                t.incomparable.push_back({concat(concat(first_path(p, out_arrows, a, *top), {w}), first_path(p, out_arrows, *bottom, b)), {}});
    return t;
}

std::string export_qpa(const Poset& p, std::size_t max_steps)
{
    const auto t = trivial_extension_presentation(p);
    const std::size_t w = t.arrows.size() - 1;
    const auto arrow_name = [&](std::size_t a) { return a == w ? std::string("w") : "a" + std::to_string(a + 1); };
    const auto vertex_name = [](std::size_t v) { return "v" + std::to_string(v + 1); };
    const auto path = [&](const std::vector<std::size_t>& path) {
        std::string s;
        for (std::size_t a : path)
            s += (s.empty() ? "" : "*") + std::string("kQ.") + arrow_name(a);
        return s;
    };

    std::ostringstream out;
    out << "# Trivial extension T(k[P]) of an incidence algebra as a bound quiver algebra.\n";
    out << "# Vertices:";
    for (std::size_t v = 0; v < t.vertex_count; ++v)
        out << " " << vertex_name(v) << "=" << t.vertex_names[v];
    out << "\n";
    out << "LoadPackage(\"qpa\");\n";
    out << "Q := Quiver([";
    for (std::size_t v = 0; v < t.vertex_count; ++v)
        out << (v ? ", " : "") << "\"" << vertex_name(v) << "\"";
    out << "],\n  [";
    for (std::size_t a = 0; a < t.arrows.size(); ++a)
        out << (a ? ",\n   " : "") << "[\"" << vertex_name(t.arrows[a].first) << "\", \"" << vertex_name(t.arrows[a].second) << "\", \""
            << arrow_name(a) << "\"]";
    out << "]);\n";
    out << "kQ := PathAlgebra(Rationals, Q);\n";
    out << "rels := [];\n";
    const auto emit = [&](const char* comment, const std::vector<TrivialExtensionPresentation::Relation>& rels) {
        out << "# " << comment << "\n";
        for (const auto& r : rels) {
            out << "Add(rels, " << path(r.lhs);
            if (!r.rhs.empty())
                out << " - " << path(r.rhs);
            out << ");\n";
        }
    };
    emit("parallel paths of the Hasse quiver", t.commutativity);
    emit("alpha p_l^l and p_l^l alpha", t.socle);
    emit("p^a_top w p^bottom_b for incomparable a, b", t.incomparable);
    std::size_t intervals = p.interval_count();
    out << "gb := GBNPGroebnerBasis(rels, kQ);\n";
    out << "I := Ideal(kQ, gb);\n";
    out << "GroebnerBasis(I, gb);\n";
    out << "A := kQ/I;\n";
    out << "if Dimension(A) <> " << 2 * intervals << " then\n";
    out << "  Print(\"unexpected dimension \", Dimension(A), \"\\n\");\n";
    out << "fi;\n";
    out << "# Least n with Omega^n(S) isomorphic to S for each simple S, or fail.\n";
    out << "SimplePeriods := function(A, maxsteps)\n";
    out << "  local result, S, M, n, found;\n";
    out << "  result := [];\n";
    out << "  for S in SimpleModules(A) do\n";
    out << "    M := S;\n";
    out << "    found := fail;\n";
    out << "    for n in [1 .. maxsteps] do\n";
    out << "      M := 1stSyzygy(M);\n";
    out << "      if Dimension(M) = 1 and IsomorphicModules(M, S) then\n";
    out << "        found := n;\n";
    out << "        break;\n";
    out << "      fi;\n";
    out << "    od;\n";
    out << "    Add(result, found);\n";
    out << "  od;\n";
    out << "  return result;\n";
    out << "end;\n";
    out << "Print(SimplePeriods(A, " << max_steps << "), \"\\n\");\n";
    return out.str();
}

std::vector<std::string> lint_gap(const std::string& script)
{
    std::vector<std::string> problems;
    std::vector<std::pair<std::string, std::size_t>> stack;  // open bracket or keyword, line
    const auto closes = [](const std::string& open) -> std::string {
        if (open == "(") return ")";
        if (open == "[") return "]";
        if (open == "{") return "}";
        if (open == "function") return "end";
        if (open == "if") return "fi";
        if (open == "for" || open == "while") return "od";
        if (open == "repeat") return "until";
        return "";
    };
    std::size_t line = 1;
    std::string last_token;  // last significant token outside comments
    std::size_t i = 0;
    const std::size_t n = script.size();
    while (i < n) {
        const char c = script[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < n && script[i] != '\n')
                ++i;
        } else if (c == '"') {
            const std::size_t start_line = line;
            ++i;
            while (i < n && script[i] != '"') {
                if (script[i] == '\\')
                    ++i;
                else if (script[i] == '\n') {
                    problems.push_back("line " + std::to_string(start_line) + ": newline in string literal");
                    ++line;
                }
                ++i;
            }
            if (i >= n) {
                problems.push_back("line " + std::to_string(start_line) + ": unterminated string literal");
                break;
            }
            ++i;
            last_token = "\"";
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(script[j])) || script[j] == '_'))
                ++j;
            const std::string word = script.substr(i, j - i);
            i = j;
            if (word == "function" || word == "if" || word == "for" || word == "while" || word == "repeat") {
                stack.emplace_back(word, line);
            } else if (word == "end" || word == "fi" || word == "od" || word == "until") {
                if (stack.empty() || closes(stack.back().first) != word)
                    problems.push_back("line " + std::to_string(line) + ": unexpected '" + word + "'");
                else
                    stack.pop_back();
            }
            last_token = word;
        } else if (c == '(' || c == '[' || c == '{') {
            stack.emplace_back(std::string(1, c), line);
            last_token = std::string(1, c);
            ++i;
        } else if (c == ')' || c == ']' || c == '}') {
            if (stack.empty() || closes(stack.back().first) != std::string(1, c))
                problems.push_back("line " + std::to_string(line) + ": unbalanced '" + std::string(1, c) + "'");
            else
                stack.pop_back();
            last_token = std::string(1, c);
            ++i;
        } else if (c == ';') {
            if (!stack.empty() && (stack.back().first == "(" || stack.back().first == "[" || stack.back().first == "{"))
                problems.push_back("line " + std::to_string(line) + ": ';' inside open '" + stack.back().first + "'");
            last_token = ";";
            ++i;
        } else {
            if (!std::isspace(static_cast<unsigned char>(c)))
                last_token = std::string(1, c);
            ++i;
        }
    }
    for (const auto& [open, l] : stack)
        problems.push_back("line " + std::to_string(l) + ": '" + open + "' is never closed");
    if (!last_token.empty() && last_token != ";")
        problems.push_back("script does not end with ';'");
    return problems;
}

}  // namespace trivext
