#pragma once

#include "trivext/poset.hpp"

#include <string>
#include <vector>

namespace trivext {

/*
  Bound-quiver presentation of T(k[P]) for a poset with distinct top and
  bottom: the Hasse quiver plus one arrow w from the top to the bottom.
  Vertices are v1..vn in element order; Hasse arrows are a1..ak in cover order.
  Paths are written left to right as lists of arrow indices (w is index k).
*/
struct TrivialExtensionPresentation {
    std::size_t vertex_count = 0;
    std::vector<std::string> vertex_names;  // element names of P
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // Hasse arrows, then w
    struct Relation {
        std::vector<std::size_t> lhs;  // a path; empty only for a trivial path, which never occurs here
        std::vector<std::size_t> rhs;  // subtracted path, or empty for a monomial relation
    };
    std::vector<Relation> commutativity;  // parallel Hasse paths
    std::vector<Relation> socle;          // alpha p_l^l and p_l^l alpha
    std::vector<Relation> incomparable;   // p^a_top w p^bottom_b, a and b incomparable
};

/// Throws std::invalid_argument unless P has a top and a bottom that differ.
TrivialExtensionPresentation trivial_extension_presentation(const Poset& p);

/// GAP/QPA script declaring the presentation and a routine checking simple periodicity.
std::string export_qpa(const Poset& p, std::size_t max_steps = 60);

/// Grammar-level problems of a GAP script (brackets, strings, keyword blocks, statement terminators).
std::vector<std::string> lint_gap(const std::string& script);

}  // namespace trivext
