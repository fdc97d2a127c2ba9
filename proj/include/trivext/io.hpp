#pragma once

#include "trivext/algebra.hpp"
#include "trivext/poset.hpp"

#include <string>
#include <variant>

namespace trivext {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Quiver text format: optional `vertex <name>` lines, then `<src> -> <dst> [: <label>]` arrows; `#` comments.
Quiver parse_quiver(const std::string& text);
std::string format_quiver(const Quiver& q);

struct LoadedInput {
    std::string description;
    std::variant<Poset, Quiver> value;

    bool is_poset() const { return std::holds_alternative<Poset>(value); }
};

/*
  Accepts a path to a poset or quiver file (a file with "->" outside comments
  is a quiver), `named:<family>[:<n>]` for named posets, or `dynkin:<type>` for
  the standard Dynkin quiver. Throws InputError.
*/
LoadedInput load_input(const std::string& spec);

/// k[P] or kQ over the given field.
template <class F>
BasedAlgebra<F> base_algebra(const LoadedInput& in, const F& f)
{
    if (const auto* p = std::get_if<Poset>(&in.value))
        return incidence_algebra(*p, f, "k[" + in.description + "]");
    return path_algebra(std::get<Quiver>(in.value), f, "k" + in.description);
}

}  // namespace trivext
