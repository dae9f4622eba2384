#pragma once

#include <fptprop/core.hpp>
#include <fptprop/regular.hpp>

#include <functional>
#include <span>
#include <string_view>

// Automaton builders whose state spaces are exponential only in a small
// instance parameter. Each builder returns a deterministic automaton meant
// for regular::filter over the scope order documented next to it; states are
// packed into 64-bit keys and the builder refuses parameters the packing (or
// the configured bitmask cap) cannot carry.

namespace fptprop::automata {

inline constexpr int default_bitmask_cap = 32;
inline constexpr int hard_bitmask_cap = 63; // packing limit for subset states

using TuplePredicate = std::function<bool(std::span<const Value>)>;

// Counting distinct values: scope X_1..X_n then N. States along the X prefix
// are the subsets of the universe seen so far; reading N from subset q is
// accepted iff |q| = N and leads to the single accepting sink.
struct NValueParams {
    std::vector<Value> universe; // must cover every current X_i domain value
    int n = 0;
    int bitmask_cap = default_bitmask_cap;
};
regular::Automaton nvalue_automaton(const NValueParams &params);

// Containment of the X values in the Y values: scope Y_1..Y_m then X_1..X_n
// (the Y side is scanned first so the collected subset is complete before
// any X is read). Reading Y_j extends the subset; reading X_i is accepted
// iff its value was collected, staying in place. Every final state accepts.
struct UsesParams {
    std::vector<Value> y_universe; // must cover every current Y_j domain value
    int n = 0;                     // X count
    int m = 0;                     // Y count
    int bitmask_cap = default_bitmask_cap;
};
regular::Automaton uses_automaton(const UsesParams &params);

// Sliding-window counting: scope X_1..X_n then N. A state is the window of
// the last p-1 values read plus the number of satisfied windows so far;
// shorter prefixes are warm-up states. Reading N from count r is accepted
// iff N = r.
struct CardPathParams {
    int p = 0;
    TuplePredicate allowed;
    int n = 0;
    std::vector<std::vector<Value>> universes; // one per chain position
};
regular::Automaton cardpath_automaton(const CardPathParams &params);

TuplePredicate builtin_predicate(std::string_view name, int p); // equal, not-equal, less-than
TuplePredicate table_predicate(std::vector<std::vector<Value>> rows, int p);

// Lexicographic symmetry breaking X <=lex sigma(X) for every sigma: scope
// X_1..X_n. A state is the subset of permutations already broken strictly;
// value v is accepted iff every unbroken sigma has v <= sigma(v), and the
// sigmas with v < sigma(v) join the broken set. Every final state accepts.
struct SymmetrySet {
    std::vector<ValuePermutation> sigmas;
    int bitmask_cap = default_bitmask_cap;
};
regular::Automaton valsymbreak_automaton(const SymmetrySet &params, int n);

} // namespace fptprop::automata
