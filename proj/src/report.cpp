#include "trivext/report.hpp"

#include <sstream>

namespace trivext {

using nlohmann::ordered_json;

ordered_json orbit_options_json(const OrbitOptions& o)
{
    return {{"max_steps", o.max_steps}, {"dim_cap", o.dim_cap}, {"divergence_window", o.divergence_window},
            {"divergence_stride", o.divergence_stride}};
}

ordered_json verdict_json(const PeriodicityVerdict& v)
{
    ordered_json j;
    j["kind"] = to_string(v.kind);
    if (v.kind == VerdictKind::Periodic) {
        j["n"] = v.n;
        j["permutation"] = v.permutation;
        j["per_simple_periods"] = v.per_simple_periods;
    } else {
        j["last_step"] = v.last_step;
        if (v.kind == VerdictKind::Inconclusive)
            j["reason"] = to_string(v.reason);
        if (v.failing_vertex)
            j["vertex"] = *v.failing_vertex;
    }
    j["dim_traces"] = v.dim_traces;
    return j;
}

ordered_json coxeter_json(const CoxeterData& d)
{
    const auto rows = [](const ExactMatrix<Rationals>& m) {
        ordered_json out = ordered_json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < m.cols(); ++j)
                row.push_back(m(i, j).to_string());
            out.push_back(row);
        }
        return out;
    };
    ordered_json j;
    j["cartan"] = rows(d.cartan);
    j["coxeter"] = rows(d.coxeter);
    j["coxeter_polynomial"] = d.char_polynomial.to_string();
    j["period"] = d.period ? ordered_json(*d.period) : ordered_json(nullptr);
    return j;
}

ordered_json census_json(const CensusReport& r)
{
    ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = "census";
    j["m"] = r.m;
    j["field"] = r.field.name();
    j["budget"] = orbit_options_json(r.orbit);
    j["counts"] = {{"lattices", r.lattice_count()},
                   {"coxeter_periodic", r.coxeter_periodic_count()},
                   {"simple_periodic", r.simple_periodic_count()}};
    ordered_json recs = ordered_json::array();
    for (const auto& rec : r.records) {
        ordered_json e;
        e["canonical_form"] = rec.form.hex();
        e["coxeter_polynomial"] = rec.coxeter_polynomial.to_string();
        e["coxeter_period"] = rec.coxeter_period ? ordered_json(*rec.coxeter_period) : ordered_json(nullptr);
        if (rec.verdict) {
            e["verdict"] = to_string(rec.verdict->kind);
            e["per_simple_periods"] = rec.verdict->per_simple_periods;
            e["syzygy"] = verdict_json(*rec.verdict);
        } else {
            e["verdict"] = nullptr;
        }
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

std::string verdict_summary(const PeriodicityVerdict& v, bool bimodule)
{
    std::ostringstream out;
    out << to_string(v.kind);
    if (v.kind == VerdictKind::Periodic && bimodule) {
        out << ": Omega^" << v.n << "(A) = A as bimodules";
    } else if (v.kind == VerdictKind::Periodic) {
        out << ": Omega^" << v.n << "(S_v) = S_sigma(v), sigma = [";
        for (std::size_t i = 0; i < v.permutation.size(); ++i)
            out << (i ? " " : "") << v.permutation[i];
        out << "]";
        if (!v.per_simple_periods.empty()) {
            out << ", periods [";
            for (std::size_t i = 0; i < v.per_simple_periods.size(); ++i)
                out << (i ? " " : "") << v.per_simple_periods[i];
            out << "]";
        }
    } else {
        out << " at step " << v.last_step;
        if (v.failing_vertex)
            out << " (simple " << *v.failing_vertex << ")";
        if (v.kind == VerdictKind::Inconclusive)
            out << ", " << to_string(v.reason);
    }
    return out.str();
}

}  // namespace trivext
