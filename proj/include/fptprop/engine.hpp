#pragma once

#include <fptprop/core.hpp>

#include <functional>

// Fixpoint driver. Propagators are contracting filters over a shared state;
// the engine runs a round-robin queue and re-enqueues everybody else whenever
// one of them prunes, until the queue drains or somebody wipes out. With
// contracting monotone propagators the result is the unique greatest common
// fixpoint, so registration order must not matter (tests rely on this).

namespace fptprop {

struct Propagator {
    std::string name;
    std::function<FilterOutcome(ProblemState &)> filter;
};

struct FixpointStats {
    std::vector<long long> invocations; // aligned with the propagator list
    std::string wiped_by;               // propagator name, empty unless wipeout
};

// The engine snapshots domains around each call and throws ContractViolation
// if a propagator grew one. Removed lists from all calls are merged.
FilterOutcome fixpoint(ProblemState &state, const std::vector<Propagator> &propagators,
                       FixpointStats *stats = nullptr);

} // namespace fptprop
