#pragma once

#include "trivext/canonical.hpp"
#include "trivext/field.hpp"
#include "trivext/polynomial.hpp"
#include "trivext/resolution.hpp"

#include <optional>
#include <vector>

namespace trivext {

struct CensusOptions {
    FieldSpec field;
    std::size_t workers = 0;  // 0: hardware concurrency
    OrbitOptions orbit = census_orbit_defaults();

    /*
      Syzygy budget for census runs. The non-periodic size-11 survivors grow
      linearly with oscillating dimensions, so the window compares minima of
      blocks of 4 steps, and the cap is sized to the census range.
    */
    static OrbitOptions census_orbit_defaults()
    {
        OrbitOptions o;
        o.max_steps = 200;
        o.dim_cap = 300;
        o.divergence_stride = 4;
        return o;
    }
};

struct CensusRecord {
    Poset lattice;
    CanonicalForm form;
    IntPolynomial coxeter_polynomial;
    std::optional<unsigned long> coxeter_period;
    std::optional<PeriodicityVerdict> verdict;  // only for Coxeter-periodic lattices
};

struct CensusReport {
    std::size_t m = 0;
    FieldSpec field;
    OrbitOptions orbit;
    std::vector<CensusRecord> records;  // sorted by canonical form

    std::size_t lattice_count() const { return records.size(); }
    std::size_t coxeter_periodic_count() const;
    std::size_t simple_periodic_count() const;
};

/// Census -> Coxeter screen -> simple periodicity of T(k[L]); the result does not depend on the worker count.
CensusReport run_census(std::size_t m, const CensusOptions& opts = {});

}  // namespace trivext
