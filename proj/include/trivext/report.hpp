#pragma once

#include "trivext/census.hpp"
#include "trivext/coxeter.hpp"
#include "trivext/resolution.hpp"

#include <json.hpp>

namespace trivext {

inline constexpr int kReportSchema = 1;

nlohmann::ordered_json verdict_json(const PeriodicityVerdict& v);
nlohmann::ordered_json coxeter_json(const CoxeterData& d);
nlohmann::ordered_json census_json(const CensusReport& r);
nlohmann::ordered_json orbit_options_json(const OrbitOptions& o);

/// One-line human summary of a verdict.
std::string verdict_summary(const PeriodicityVerdict& v, bool bimodule = false);

}  // namespace trivext
