#pragma once

#include "trivext/poset.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace trivext {

/*
  Canonical encoding of a poset up to isomorphism.

  Elements are relabelled 0..n-1 by the canonical labelling; the encoding is
  the n*n strict-order matrix read row-major (bit i*n+j set iff i < j). The
  canonical labelling is the one maximising this bit string among all
  labellings compatible with the refined vertex partition. The text form is
  "<n>:" followed by the bit string in hex, four bits per digit, most
  significant bit first, zero-padded at the end to a whole digit.
*/
struct CanonicalForm {
    std::size_t size = 0;
    std::vector<bool> bits;

    std::string hex() const;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Strict up-sets as bit masks; the working representation for small posets (n <= 64).
struct SmallPoset {
    std::vector<std::uint64_t> above;  // above[x] = {y : x < y}

    std::size_t size() const { return above.size(); }
    std::uint64_t below(std::size_t x) const;
    static SmallPoset from(const Poset& p);
    Poset to_poset() const;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<std::size_t> order;  // order[k] = element receiving canonical label k
};

/// colors (optional) must be preserved by isomorphisms.
CanonicalLabeling canonical_labeling(const SmallPoset& p, const std::vector<int>& colors = {});
CanonicalForm canonical_form(const Poset& p);

/// Number of down-sets of a small poset.
std::size_t count_ideals(const SmallPoset& p);

/*
  Orderly generation of posets up to isomorphism by adding one maximal element
  at a time, accepting a child only when the new element lies in the orbit of
  the canonically chosen maximal element. `keep` may prune: if it rejects a
  poset, none of its extensions are generated (so it must be inherited by
  canonical parents). `visit` sees each accepted poset of every size <= n.
*/
void for_each_poset(std::size_t n, const std::function<bool(const SmallPoset&)>& keep,
                    const std::function<void(const SmallPoset&)>& visit);

/// One poset per isomorphism class on exactly n points, in generation order.
std::vector<Poset> enumerate_posets(std::size_t n);

/// All distributive lattices with m elements, one per isomorphism class, sorted by canonical form.
std::vector<Poset> census_distributive_lattices(std::size_t m);

}  // namespace trivext
