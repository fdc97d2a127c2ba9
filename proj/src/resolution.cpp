#include "trivext/resolution.hpp"

#include <numeric>

namespace trivext {

std::string to_string(VerdictKind k)
{
    switch (k) {
    case VerdictKind::Periodic: return "periodic";
    case VerdictKind::Diverging: return "diverging";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(InconclusiveReason r)
{
    switch (r) {
    case InconclusiveReason::None: return "none";
    case InconclusiveReason::StepBound: return "step-bound";
    case InconclusiveReason::DimCap: return "dim-cap";
    case InconclusiveReason::ZeroSyzygy: return "zero-syzygy";
    case InconclusiveReason::NotPermutation: return "not-permutation";
    case InconclusiveReason::IsoUnknown: return "iso-unknown";
    }
    return "?";
}

std::uint64_t iso_seed(std::uint64_t requested)
{
    if (requested != 0)
        return requested;
    if (const char* env = std::getenv("TRIVEXT_SEED"); env && *env) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 0x5eed2024ULL;
}

bool diverging(const std::vector<std::size_t>& trace, const OrbitOptions& opts)
{
    const std::size_t k = opts.divergence_window, s = std::max<std::size_t>(opts.divergence_stride, 1);
    if (k == 0 || trace.size() < k * s)
        return false;
    std::size_t previous = 0;
    for (std::size_t b = 0; b < k; ++b) {
        const auto begin = trace.end() - static_cast<std::ptrdiff_t>((k - b) * s);
        const std::size_t low = *std::min_element(begin, begin + static_cast<std::ptrdiff_t>(s));
        if (b > 0 && low <= previous)
            return false;
        previous = low;
    }
    return previous > opts.dim_cap / 2;
}

PeriodicityVerdict assemble_verdict(std::vector<SimpleOrbit> orbits)
{
    PeriodicityVerdict v;
    const std::size_t n = orbits.size();
    v.dim_traces.reserve(n);
    for (auto& o : orbits) {
        v.return_vertex.push_back(o.return_vertex);
        v.return_step.push_back(o.steps);
    }
    for (auto& o : orbits)
        v.dim_traces.push_back(std::move(o.trace));

    // worst outcome wins: diverging, then inconclusive
    for (const auto kind : {VerdictKind::Diverging, VerdictKind::Inconclusive})
        for (std::size_t i = 0; i < n; ++i)
            if (orbits[i].kind == kind) {
                v.kind = kind;
                v.reason = orbits[i].reason;
                v.failing_vertex = i;
                v.last_step = orbits[i].steps;
                return v;
            }

    std::vector<char> hit(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        hit[v.return_vertex[i]] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
        v.kind = VerdictKind::Inconclusive;
        v.reason = InconclusiveReason::NotPermutation;
        return v;
    }

    v.per_simple_periods.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t w = i, t = 0;
        do {
            t += v.return_step[w];
            w = v.return_vertex[w];
        } while (w != i);
        v.per_simple_periods[i] = t;
    }

    // least n at which every chain sits at a simple; bounded by lcm of the periods
    std::vector<std::size_t> time(n, 0), pos(n);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    const auto advance = [&](std::size_t i) {
        time[i] += v.return_step[pos[i]];
        pos[i] = v.return_vertex[pos[i]];
    };
    for (std::size_t i = 0; i < n; ++i)
        advance(i);
    for (;;) {
        const std::size_t target = *std::max_element(time.begin(), time.end());
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            while (time[i] < target)
                advance(i);
            all = all && time[i] == target;
        }
        if (all) {
            v.kind = VerdictKind::Periodic;
            v.n = target;
            v.permutation = pos;
            return v;
        }
    }
}

}  // namespace trivext
