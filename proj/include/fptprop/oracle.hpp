#pragma once

#include <fptprop/core.hpp>

#include <functional>
#include <span>

// Brute-force reference semantics. Each constraint kind gets a checker over
// complete assignments; brute_force_dc enumerates the scope's Cartesian
// product and keeps exactly the values that appear in some satisfying
// assignment. Deliberately simple and independent of the propagators it is
// used to validate.

namespace fptprop::oracle {

using Checker = std::function<bool(std::span<const Value>)>;

inline constexpr long long default_enumeration_cap = 10000000;

// Refuses (UsageError, quoting the product size) when the Cartesian product
// of the scope domains exceeds cap.
long long product_size(const ProblemState &state, std::span<const VarId> scope, long long cap);

// Calls fn for every complete assignment of the scope, in lexicographic
// order: scope position is the significance, values ascend per domain.
void for_each_assignment(const ProblemState &state, std::span<const VarId> scope,
                         const std::function<void(std::span<const Value>)> &fn,
                         long long cap = default_enumeration_cap);

// Exact domain consistency by enumeration. Prunes the scoped variables of
// state in place; a variable appearing twice in scope keeps only values
// supported at each occurrence.
FilterOutcome brute_force_dc(const Checker &check, ProblemState &state,
                             std::span<const VarId> scope,
                             long long cap = default_enumeration_cap);

std::vector<std::vector<Value>> enumerate_solutions(const Checker &check,
                                                    const ProblemState &state,
                                                    std::span<const VarId> scope,
                                                    long long cap = default_enumeration_cap);

// Checkers, written against the descriptor scope orders listed in core.hpp.
Checker nvalue_check(int n);                                  // X_1..X_n, N
Checker uses_check(int n, int m);                             // X_1..X_n, Y_1..Y_m
Checker cardpath_check(int p, std::function<bool(std::span<const Value>)> allowed,
                       int n);                                // X_1..X_n, N
Checker valsymbreak_check(std::vector<ValuePermutation> sigmas); // X_1..X_n
Checker disjoint_check(int n, int m);                         // X_1..X_n, Y_1..Y_m
Checker among_check(int n, std::vector<Value> universe);      // X_1..X_n, bits, N
Checker roots_check(int n, std::vector<Value> t_universe);    // X_1..X_n, S bits, T bits
Checker sum_check(int n);                                     // X_1..X_n, target
Checker table_check(std::vector<std::vector<Value>> rows);    // X_1..X_n

// Conjunction, for multi-constraint fixtures: each sub-checker reads its own
// slice of one concatenated assignment.
Checker all_of(std::vector<std::pair<Checker, std::pair<int, int>>> parts); // (offset, length)

} // namespace fptprop::oracle
