#include <fptprop/interval.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace fptprop::interval {

std::vector<Run> runs_of(const Domain &domain)
{
    std::vector<Run> runs;
    for (Value v : domain) {
        if (!runs.empty() && runs.back().hi + 1 == v)
            runs.back().hi = v;
        else
            runs.push_back({v, v});
    }
    return runs;
}

int intervals_count(const Domain &domain)
{
    if (domain.empty())
        throw UsageError("intervals_count on an empty domain");
    int count = 0;
    for (Value v : domain)
        if (!domain.contains(v + 1))
            ++count;
    return count;
}

std::optional<std::vector<Bounds>> sum_bc_fixpoint(std::vector<Bounds> bounds)
{
    if (bounds.empty())
        throw UsageError("sum propagator needs at least the target variable");
    const std::size_t n = bounds.size() - 1;
    auto &target = bounds[n];

    bool changed = true;
    while (changed) {
        changed = false;
        long long sum_lo = 0, sum_hi = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sum_lo += bounds[i].lo;
            sum_hi += bounds[i].hi;
        }

        // compare in 64 bits before narrowing so huge partial sums cannot
        // overflow the stored bounds
        auto tighten = [&](Bounds &b, long long lo, long long hi) {
            if (lo > hi || lo > b.hi || hi < b.lo)
                return false;
            if (lo > b.lo) {
                b.lo = static_cast<Value>(lo);
                changed = true;
            }
            if (hi < b.hi) {
                b.hi = static_cast<Value>(hi);
                changed = true;
            }
            return true;
        };

        if (!tighten(target, sum_lo, sum_hi))
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) {
            long long others_lo = sum_lo - bounds[i].lo;
            long long others_hi = sum_hi - bounds[i].hi;
            if (!tighten(bounds[i], static_cast<long long>(target.lo) - others_hi,
                    static_cast<long long>(target.hi) - others_lo))
                return std::nullopt;
        }
    }
    return bounds;
}

BCPropagator sum_bc()
{
    BCPropagator bc;
    bc.run = [](const std::vector<Bounds> &bounds) { return sum_bc_fixpoint(bounds); };
    bc.bounds_value_complete = true;
    return bc;
}

FilterOutcome lift_to_dc(const BCPropagator &bc, std::span<const VarId> scope,
    ProblemState &state, long long run_product_cap, LiftStats *stats)
{
    if (!bc.run)
        throw UsageError("lift_to_dc needs a BC propagator");
    {
        std::set<VarId> seen(scope.begin(), scope.end());
        if (seen.size() != scope.size())
            throw UsageError("lift_to_dc: a variable appears twice in the scope");
    }

    const std::size_t n = scope.size();
    std::vector<std::vector<Run>> runs(n);
    std::vector<std::size_t> multi; // variables with more than one run
    for (std::size_t i = 0; i < n; ++i) {
        runs[i] = runs_of(state.dom(scope[i]));
        if (runs[i].size() > 1)
            multi.push_back(i);
    }

    // per-probe cost: product of run counts over everybody else
    for (std::size_t i = 0; i < n; ++i) {
        long long product = 1;
        for (auto j : multi)
            if (j != i) {
                product *= static_cast<long long>(runs[j].size());
                if (product > run_product_cap)
                    throw ParameterTooLarge("run-count product exceeds cap " +
                        std::to_string(run_product_cap) + " (at least " +
                        std::to_string(product) + ")");
            }
    }

    std::vector<std::vector<char>> certified(n);
    std::size_t uncertified = 0;
    for (std::size_t i = 0; i < n; ++i) {
        certified[i].assign(state.dom(scope[i]).size(), 0);
        uncertified += certified[i].size();
    }

    auto certify = [&](std::size_t i, Value lo, Value hi) {
        const auto &values = state.dom(scope[i]).values();
        auto from = std::lower_bound(values.begin(), values.end(), lo);
        for (auto it = from; it != values.end() && *it <= hi; ++it) {
            auto &flag = certified[i][static_cast<std::size_t>(it - values.begin())];
            if (!flag) {
                flag = 1;
                --uncertified;
            }
        }
    };

    auto invoke = [&](const std::vector<Bounds> &boxes) {
        if (stats)
            ++stats->bc_invocations;
        return bc.run(boxes);
    };

    std::vector<Bounds> boxes(n);
    for (std::size_t i = 0; i < n; ++i)
        boxes[i] = {runs[i].front().lo, runs[i].front().hi};

    if (bc.bounds_value_complete) {
        // every surviving box certifies all values inside its fixpoint
        // bounds, so one sweep over the run selections settles everything
        std::vector<std::size_t> selector(multi.size(), 0);
        for (;;) {
            for (std::size_t s = 0; s < multi.size(); ++s) {
                const auto &run = runs[multi[s]][selector[s]];
                boxes[multi[s]] = {run.lo, run.hi};
            }
            if (auto fixed = invoke(boxes))
                for (std::size_t i = 0; i < n; ++i)
                    certify(i, (*fixed)[i].lo, (*fixed)[i].hi);
            if (uncertified == 0)
                break;

            std::size_t pos = multi.size();
            while (pos > 0) {
                --pos;
                if (++selector[pos] < runs[multi[pos]].size())
                    break;
                selector[pos] = 0;
                if (pos == 0) {
                    pos = multi.size() + 1; // odometer wrapped, done
                    break;
                }
            }
            if (multi.empty() || pos > multi.size())
                break;
        }
    }
    else {
        // plain probing: pin each value and try every selection of the other
        // variables' runs until one box survives
        for (std::size_t i = 0; i < n && uncertified > 0; ++i) {
            std::vector<std::size_t> others;
            for (auto j : multi)
                if (j != i)
                    others.push_back(j);
            const auto &values = state.dom(scope[i]).values();
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (certified[i][t])
                    continue;
                std::vector<std::size_t> selector(others.size(), 0);
                bool supported = false;
                for (;;) {
                    for (std::size_t s = 0; s < others.size(); ++s) {
                        const auto &run = runs[others[s]][selector[s]];
                        boxes[others[s]] = {run.lo, run.hi};
                    }
                    boxes[i] = {values[t], values[t]};
                    if (invoke(boxes)) {
                        supported = true;
                        break;
                    }
                    std::size_t pos = others.size();
                    bool wrapped = others.empty();
                    while (pos > 0) {
                        --pos;
                        if (++selector[pos] < runs[others[pos]].size())
                            break;
                        selector[pos] = 0;
                        if (pos == 0)
                            wrapped = true;
                    }
                    if (wrapped)
                        break;
                }
                if (supported)
                    certify(i, values[t], values[t]);
                // restore the default box for subsequent probes
                boxes[i] = {runs[i].front().lo, runs[i].front().hi};
                for (auto j : others)
                    boxes[j] = {runs[j].front().lo, runs[j].front().hi};
            }
        }
    }

    std::vector<std::pair<VarId, Domain>> replacements;
    for (std::size_t i = 0; i < n; ++i) {
        const auto &values = state.dom(scope[i]).values();
        std::vector<Value> kept;
        for (std::size_t t = 0; t < values.size(); ++t)
            if (certified[i][t])
                kept.push_back(values[t]);
        replacements.emplace_back(scope[i], Domain{std::move(kept)});
    }
    return apply_domains(state, replacements);
}

} // namespace fptprop::interval
