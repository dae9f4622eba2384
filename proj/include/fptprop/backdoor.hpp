#pragma once

#include <fptprop/core.hpp>

#include <functional>
#include <span>

// Strong-backdoor filtering. A decomposition names a small set of 0/1
// variables such that once they are all fixed, the residual problem is
// polynomial to filter to domain consistency. enumerate_union walks every
// completion of the unfixed backdoor bits in binary counting order, runs the
// per-completion sub-filter on a clone, and keeps the union of the surviving
// domains; a value survives iff it survives under at least one completion,
// and the whole thing wipes out iff every completion does. Once every value
// of every variable has been confirmed supported the remaining completions
// are skipped.

namespace fptprop::backdoor {

inline constexpr int default_k_max = 20;

struct BackdoorDecomposition {
    std::vector<VarId> backdoor; // 0/1 variables, possibly partially fixed
    // Runs on a clone whose backdoor bits are all fixed; must reach domain
    // consistency of the residual problem and only prune.
    std::function<FilterOutcome(ProblemState &)> sub_filter;
};

FilterOutcome enumerate_union(const BackdoorDecomposition &dec, ProblemState &state,
                              int k_max = default_k_max);

// Disjointness of two variable groups (no X may equal any Y). The backdoor
// has one bit per value shared between the groups' domain unions, deciding
// which side may still use it; k is the number of shared values.
FilterOutcome disjoint_dc(std::span<const VarId> x, std::span<const VarId> y,
                          ProblemState &state, int k_max = default_k_max);

// |{i : X_i in S}| = N for a set variable S. The backdoor is the set of
// undecided membership bits; with S decided, counting bounds filter X and N
// to domain consistency directly.
FilterOutcome among_set_dc(std::span<const VarId> x, int set_index, VarId n_var,
                           ProblemState &state, int k_max = default_k_max);

// (i in S) <-> (X_i in T) for set variables S (over positions 1..n) and T
// (over values). The backdoor is the set of undecided T bits; with T decided
// the problem falls apart into independent (S_i, X_i) pairs.
FilterOutcome roots_dc(std::span<const VarId> x, int s_index, int t_index,
                       ProblemState &state, int k_max = default_k_max);

} // namespace fptprop::backdoor
