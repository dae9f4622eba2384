#pragma once

#include <fptprop/core.hpp>

#include <functional>
#include <span>

// Lifting a bound-consistency propagator to domain consistency on domains
// with holes. Every domain splits into maximal gap-free runs; assigning one
// run to each multi-run variable yields an all-interval box on which the BC
// propagator is complete (non-failure implies a satisfying tuple). A value is
// domain consistent iff some box built around it survives BC, so the lift
// probes values against run selections and keeps exactly the certified ones.

namespace fptprop::interval {

inline constexpr long long default_run_product_cap = 4096;

struct Run {
    Value lo;
    Value hi;

    bool operator==(const Run &) const = default;
};

// maximal gap-free runs, ascending
std::vector<Run> runs_of(const Domain &domain);

// number of v in the domain with v+1 absent; equals the run count
int intervals_count(const Domain &domain); // UsageError on empty

struct Bounds {
    Value lo;
    Value hi;
};

struct BCPropagator {
    // Returns the bound-consistent fixpoint of the boxes, or nullopt on
    // failure. Must be sound and contracting; on all-interval domains,
    // non-failure implies a satisfying tuple exists. Nothing here can verify
    // that promise, a violating propagator silently breaks the lift.
    std::function<std::optional<std::vector<Bounds>>(const std::vector<Bounds> &)> run;
    // Strengthened promise: every value inside the returned fixpoint bounds
    // participates in a satisfying tuple (true for unit-coefficient sums).
    // Lets one surviving box certify every value it contains instead of one,
    // so whole completions are shared across probes.
    bool bounds_value_complete = false;
};

// sum of the leading variables equals the last one; the strengthened promise
// above holds, so the returned propagator sets bounds_value_complete
BCPropagator sum_bc();
std::optional<std::vector<Bounds>> sum_bc_fixpoint(std::vector<Bounds> bounds);

struct LiftStats {
    long long bc_invocations = 0;
};

// Domain-consistent filtering of the scope. The product of run counts over
// the non-probed variables is capped (ParameterTooLarge above it).
FilterOutcome lift_to_dc(const BCPropagator &bc, std::span<const VarId> scope,
                         ProblemState &state,
                         long long run_product_cap = default_run_product_cap,
                         LiftStats *stats = nullptr);

} // namespace fptprop::interval
