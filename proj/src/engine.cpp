#include <fptprop/engine.hpp>

#include <algorithm>
#include <deque>

namespace fptprop {

namespace {
    void merge_removed(FilterOutcome &into, const FilterOutcome &from)
    {
        for (const auto &[id, values] : from.removed) {
            auto &list = into.removed[id];
            list.insert(list.end(), values.begin(), values.end());
            std::sort(list.begin(), list.end());
        }
    }

    void check_contraction(const std::vector<Domain> &before, const ProblemState &state,
        const std::string &name)
    {
        for (std::size_t i = 0; i < before.size(); ++i) {
            const auto &now = state.variables[i].domain;
            if (now.empty())
                throw ContractViolation("propagator " + name + " stored an empty domain");
            for (Value v : now)
                if (!before[i].contains(v))
                    throw ContractViolation("propagator " + name + " added value " +
                        std::to_string(v) + " to " + state.variables[i].name);
        }
    }
}

FilterOutcome fixpoint(ProblemState &state, const std::vector<Propagator> &propagators,
    FixpointStats *stats)
{
    if (stats) {
        stats->invocations.assign(propagators.size(), 0);
        stats->wiped_by.clear();
    }

    FilterOutcome total;
    std::deque<std::size_t> queue;
    std::vector<bool> queued(propagators.size(), false);
    for (std::size_t i = 0; i < propagators.size(); ++i) {
        queue.push_back(i);
        queued[i] = true;
    }

    std::vector<Domain> snapshot;
    while (!queue.empty()) {
        auto p = queue.front();
        queue.pop_front();
        queued[p] = false;

        snapshot.clear();
        snapshot.reserve(state.variables.size());
        for (const auto &v : state.variables)
            snapshot.push_back(v.domain);

        auto out = propagators[p].filter(state);
        if (stats)
            ++stats->invocations[p];
        check_contraction(snapshot, state, propagators[p].name);

        if (out.wiped()) {
            if (stats)
                stats->wiped_by = propagators[p].name;
            total.status = FilterStatus::Wipeout;
            return total;
        }
        if (out.pruned()) {
            merge_removed(total, out);
            for (std::size_t q = 0; q < propagators.size(); ++q)
                if (q != p && !queued[q]) {
                    queue.push_back(q);
                    queued[q] = true;
                }
        }
    }

    total.status = total.removed.empty() ? FilterStatus::Unchanged : FilterStatus::Pruned;
    return total;
}

} // namespace fptprop
