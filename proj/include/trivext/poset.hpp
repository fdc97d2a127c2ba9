#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trivext {

class PosetError : public std::runtime_error {
public:
    enum class Kind { Syntax, Cycle, UnknownElement, DuplicateCover, Redundant, Bound };

    PosetError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/*
  Finite partial order stored by its cover relation (the Hasse quiver) together
  with the cached reflexive-transitive closure. Elements are 0..size-1.
*/
class Poset {
public:
    using Cover = std::pair<std::size_t, std::size_t>;  // (lower, upper)

    Poset() = default;

    /// Covers must be irredundant and acyclic; throws PosetError otherwise.
    static Poset from_covers(std::size_t n, std::vector<Cover> covers, std::vector<std::string> names = {});
    /// Any generating set of strict relations; the cover relation is its transitive reduction.
    static Poset from_relations(std::size_t n, const std::vector<Cover>& relations, std::vector<std::string> names = {});

    std::size_t size() const { return n_; }
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t x) const { return names_[x]; }

    bool leq(std::size_t x, std::size_t y) const { return up_[x][y]; }
    bool less(std::size_t x, std::size_t y) const { return x != y && up_[x][y]; }
    bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
    /// {y : x <= y}
    const boost::dynamic_bitset<>& up_set(std::size_t x) const { return up_[x]; }
    /// {y : y <= x}
    const boost::dynamic_bitset<>& down_set(std::size_t x) const { return down_[x]; }
    const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
    const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }

    std::size_t interval_count() const;
    /// Elements in an order compatible with the partial order (stable on indices).
    std::vector<std::size_t> linear_extension() const;

    std::optional<std::size_t> bottom() const;
    std::optional<std::size_t> top() const;

    /// Relabels: element x of this poset becomes element perm[x].
    Poset relabeled(const std::vector<std::size_t>& perm) const;
    Poset induced(const std::vector<std::size_t>& elements) const;

private:
    void finish();

    std::size_t n_ = 0;
    std::vector<Cover> covers_;
    std::vector<std::string> names_;
    std::vector<boost::dynamic_bitset<>> up_, down_;
    std::vector<std::vector<std::size_t>> upper_, lower_;
};

/// Parses the text poset format: `elem <name>` lines and `<a> < <b> [< <c> ...]` relations, `#` comments.
Poset parse_poset(const std::string& text);
std::string format_poset(const Poset& p);

/// Lattice of down-closed subsets ordered by inclusion.
Poset order_ideals(const Poset& p, std::size_t max_size = 20);
/// Number of down-closed subsets (no lattice is built).
std::size_t count_order_ideals(const Poset& p);

struct LatticeCheck {
    bool is_lattice = false;
    bool is_distributive = false;
    std::string reason;
    explicit operator bool() const { return is_distributive; }
};

LatticeCheck is_distributive_lattice(const Poset& p);

/// Join-irreducible elements of a lattice (elements with exactly one lower cover), as an induced subposet.
Poset join_irreducibles(const Poset& lattice);

/// family: chain, antichain, boolean, tamari, fdl3.
Poset named_poset(const std::string& family, std::size_t n = 0);

}  // namespace trivext
