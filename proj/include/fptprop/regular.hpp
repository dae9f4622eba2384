#pragma once

#include <fptprop/core.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <span>

// Layered unfolding of a deterministic automaton over a variable scope.
// Layer i holds the states reachable after reading scope[0..i-1]; arcs in a
// layer connect its states to the next layer, one arc per (state, domain
// value) the transition function accepts. Only forward-reachable states are
// ever materialized; a backward sweep then marks the states from which an
// accepting final state can still be reached. An arc is live iff its source
// is forward-reachable and its target backward-reachable, and a value is
// supported at position i iff some live arc of layer i carries it.

namespace fptprop::regular {

using StateId = std::uint64_t;

struct Automaton {
    int n_layers = 0;
    StateId initial = 0;
    // nullopt rejects; a returned state may still turn out to be dead
    std::function<std::optional<StateId>(int layer, StateId state, Value v)> transition;
    std::function<bool(StateId final_state)> accepting;
    // builders that know their theoretical state count set this; unfold
    // throws ContractViolation if a layer materializes more (0 = unchecked)
    std::uint64_t layer_state_bound = 0;
};

struct LayeredGraph {
    struct Arc {
        StateId from;
        Value value;
        StateId to;
    };

    int n_layers = 0;
    // materialized states per layer, mapped to the reaches-accepting flag;
    // materialization itself implies forward-reachability
    std::vector<std::map<StateId, bool>> layers;
    std::vector<std::vector<Arc>> arcs; // arcs[i] connects layer i to i+1

    bool arc_live(int layer, const Arc &arc) const;
    bool has_accepting_path() const;
    std::vector<Value> live_values(int layer) const; // sorted, deduplicated
};

LayeredGraph unfold(const Automaton &automaton, const ProblemState &state,
                    std::span<const VarId> scope);

// Domain-consistent filtering: keeps exactly the values carried by live arcs.
// Wipes out (state untouched) iff the graph has no accepting path.
FilterOutcome filter(const Automaton &automaton, ProblemState &state,
                     std::span<const VarId> scope);

// Runs the word through the automaton; used by tests to cross-check builders
// against their brute-force checkers.
bool accepts(const Automaton &automaton, std::span<const Value> word);

} // namespace fptprop::regular
