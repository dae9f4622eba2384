#pragma once

#include <fptprop/automata.hpp>
#include <fptprop/backdoor.hpp>
#include <fptprop/core.hpp>
#include <fptprop/engine.hpp>
#include <fptprop/interval.hpp>
#include <fptprop/oracle.hpp>

// Turns constraint descriptors into runnable propagators and into their
// brute-force twins. The automaton-backed kinds rebuild their automaton from
// the current domains on every call (universes shrink as domains do), the
// backdoor and lifting kinds call straight into their modules.

namespace fptprop {

struct PropagatorConfig {
    int k_max = backdoor::default_k_max;
    long long run_product_cap = interval::default_run_product_cap;
    int bitmask_cap = automata::default_bitmask_cap;
    long long oracle_cap = oracle::default_enumeration_cap;
};

// Shape checks a descriptor against a state: scope arities, duplicate
// variables, set indices, tuple arities. UsageError with the constraint name
// on anything off.
void validate_descriptor(const ConstraintDescriptor &c, const ProblemState &state);

Propagator make_propagator(const ConstraintDescriptor &c, const PropagatorConfig &config = {});
std::vector<Propagator> make_propagators(const ProblemState &state,
                                         const PropagatorConfig &config = {});

struct OracleConstraint {
    std::vector<VarId> scope; // descriptor scope plus any set bits, in order
    oracle::Checker check;
};
OracleConstraint oracle_constraint(const ConstraintDescriptor &c, const ProblemState &state);

// The small quantity the constraint's filtering cost is exponential in,
// measured against the current domains. Reported per constraint.
long long fpt_parameter(const ConstraintDescriptor &c, const ProblemState &state);

} // namespace fptprop
