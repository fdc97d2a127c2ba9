#pragma once

#include "trivext/algebra.hpp"
#include "trivext/field.hpp"

#include <string>
#include <vector>

namespace trivext {

enum class DynkinFamily { A, D, E };

struct DynkinType {
    DynkinFamily family = DynkinFamily::A;
    std::size_t rank = 1;

    /// Throws std::invalid_argument outside A_n (n >= 1), D_n (n >= 4), E_6..E_8.
    DynkinType(DynkinFamily family, std::size_t rank);
    static DynkinType parse(const std::string& text);  // "A3", "D4", "E8"
    std::string name() const;
    bool operator==(const DynkinType&) const = default;
};

/// All valid types with rank <= max_rank, ordered A, D, E then by rank.
std::vector<DynkinType> dynkin_types(std::size_t max_rank);

struct CyDim {
    long long m = 0;
    long long ell = 1;
    bool operator==(const CyDim&) const = default;
};

unsigned long coxeter_number(const DynkinType& t);
CyDim cydim_dynkin(const DynkinType& t);
/// (m, ell) with ell = lcm of the ell_i and m = ell * sum m_i / ell_i.
CyDim tensor_cydim(const std::vector<CyDim>& parts);
/// ell + m when (-1)^(ell + m) = 1 in the field, else 2 (ell + m).
unsigned long minimal_period_trivext(const CyDim& c, const FieldSpec& f);
/// (g, r) with g = gcd(ell + m, d + 1) and r = ((d + 1) ell - (ell + m)) / g.
std::pair<long long, long long> dct_parameters(long long d, const CyDim& c);
unsigned long expected_period_dynkin(const DynkinType& t, const FieldSpec& f);

/*
  Quiver of the given type with vertices 0..n-1: a path 0 -> 1 -> ... -> k
  along the long arm, plus the branch vertex n-1 attached by an arrow from
  n-3 (type D) or from vertex 2 (type E).
*/
Quiver dynkin_quiver(const DynkinType& t);

}  // namespace trivext
