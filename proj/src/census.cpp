#include "trivext/census.hpp"

#include "trivext/coxeter.hpp"

namespace trivext {

std::size_t CensusReport::coxeter_periodic_count() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.coxeter_period.has_value(); }));
}

std::size_t CensusReport::simple_periodic_count() const
{
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.verdict && r.verdict->kind == VerdictKind::Periodic;
    }));
}

CensusReport run_census(std::size_t m, const CensusOptions& opts)
{
    CensusReport report;
    report.m = m;
    report.field = opts.field;
    report.orbit = opts.orbit;
    report.orbit.observe = nullptr;
    for (auto& l : census_distributive_lattices(m)) {
        CensusRecord r;
        r.form = canonical_form(l);
        r.lattice = std::move(l);
        report.records.push_back(std::move(r));
    }
    OrbitOptions inner = opts.orbit;
    inner.workers = 1;
    detail::parallel_for(report.records.size(), opts.workers, [&](std::size_t i) {
        auto& r = report.records[i];
        const auto cox = coxeter_data_from_cartan(visit_field(FieldSpec::rationals(), [&](auto f) {
            return cartan_matrix(incidence_algebra(r.lattice, f));
        }));
        r.coxeter_polynomial = cox.char_polynomial;
        r.coxeter_period = cox.period;
        if (!r.coxeter_period)
            return;
        r.verdict = visit_field(opts.field, [&](auto f) { return syzygy_orbit(trivial_extension(incidence_algebra(r.lattice, f)), inner); });
    });
    return report;
}

}  // namespace trivext
