#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Finite-domain basics shared by every propagator: values, domains,
// variables, set variables (a vector of 0/1 bit variables plus a fixed
// universe), problem states and the constraint descriptors attached to them.
//
// Domains are explicit sorted duplicate-free value lists. A live state never
// holds an empty domain: emptiness is reported through FilterOutcome as a
// wipeout and the state is left untouched.

namespace fptprop {

using Value = std::int32_t;
using VarId = int;

// Instance readers reject values outside this range; arithmetic on sums is
// done in 64 bits so in-range values never overflow.
inline constexpr Value value_min = -1000000000;
inline constexpr Value value_max = 1000000000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an internal invariant breaks (a propagator adding values, a
// layered graph exceeding its declared state bound, ...). Never expected on
// any input reachable from the CLI.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<Value> values);

    static Domain singleton(Value v);
    static Domain range(Value lo, Value hi);

    bool contains(Value v) const;
    bool remove(Value v); // true if v was present

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    Value min() const;
    Value max() const;

    const std::vector<Value> &values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const Domain &) const = default;

private:
    std::vector<Value> values_; // sorted, duplicate-free
};

struct FDVariable {
    VarId id = -1;
    std::string name;
    Domain domain;

    bool operator==(const FDVariable &) const = default;
};

// A set variable is its characteristic vector: bits[t] is the id of a 0/1
// variable deciding whether universe[t] is a member. The lower and upper
// bounds are views computed from the bit domains, never stored.
struct SetVariable {
    std::string name;
    std::vector<Value> universe; // sorted, duplicate-free
    std::vector<VarId> bits;     // one per universe element

    bool operator==(const SetVariable &) const = default;
};

enum class ConstraintKind {
    NValue,
    Uses,
    CardPath,
    ValSymBreak,
    Disjoint,
    AmongSet,
    Roots,
    SumEq,
    Extensional,
};

std::string_view kind_name(ConstraintKind kind);
std::optional<ConstraintKind> kind_from_name(std::string_view name);

// A bijection over an explicit value universe. apply() refuses values the
// permutation was not built for instead of guessing.
class ValuePermutation {
public:
    ValuePermutation() = default;

    // universe sorted+deduped internally; pairs give the non-identity part,
    // unlisted universe values map to themselves. Throws UsageError unless
    // the completed map is a bijection of the universe onto itself.
    static ValuePermutation from_pairs(std::vector<Value> universe,
                                       const std::vector<std::pair<Value, Value>> &pairs);
    static ValuePermutation identity(std::vector<Value> universe);

    bool defined_on(Value v) const;
    Value apply(Value v) const;

    const std::vector<Value> &universe() const { return universe_; }
    const std::vector<Value> &image() const { return image_; }

    bool operator==(const ValuePermutation &) const = default;

private:
    std::vector<Value> universe_; // sorted
    std::vector<Value> image_;    // image_[i] = sigma(universe_[i])
};

// One descriptor covers every kind; only the fields its kind reads are
// meaningful. Scope orders:
//   nvalue:      X_1..X_n, N
//   uses:        X_1..X_n, Y_1..Y_m          (split = n)
//   cardpath:    X_1..X_n, N                 (arity = p)
//   valsymbreak: X_1..X_n                    (sigmas)
//   disjoint:    X_1..X_n, Y_1..Y_m          (split = n)
//   among:       X_1..X_n, N                 (setvars = {S})
//   roots:       X_1..X_n                    (setvars = {S, T})
//   sum:         X_1..X_n, target
//   table:       X_1..X_n                    (tuples)
struct ConstraintDescriptor {
    ConstraintKind kind = ConstraintKind::Extensional;
    std::string name;
    std::vector<VarId> scope;
    int split = 0;
    int arity = 0;
    std::string builtin;                      // cardpath: comparator name, empty if tabled
    std::vector<std::vector<Value>> tuples;   // cardpath / table rows
    std::vector<ValuePermutation> sigmas;     // valsymbreak
    std::vector<int> setvars;                 // indices into ProblemState::sets

    bool operator==(const ConstraintDescriptor &) const = default;
};

enum class FilterStatus { Unchanged, Pruned, Wipeout };

std::string_view status_name(FilterStatus status);

struct FilterOutcome {
    FilterStatus status = FilterStatus::Unchanged;
    std::map<VarId, std::vector<Value>> removed; // sorted values per variable

    bool pruned() const { return status == FilterStatus::Pruned; }
    bool wiped() const { return status == FilterStatus::Wipeout; }

    static FilterOutcome unchanged() { return {}; }
    static FilterOutcome wipeout() { return {FilterStatus::Wipeout, {}}; }
};

struct ProblemState {
    std::vector<FDVariable> variables;
    std::vector<SetVariable> sets;
    std::vector<ConstraintDescriptor> constraints;

    VarId add_variable(std::string name, Domain domain);

    // Creates one 0/1 bit variable per universe element: {1} for lb members,
    // {0,1} for ub-only members, {0} for the rest. Returns the set's index.
    int add_set_variable(std::string name, std::vector<Value> universe,
                         const std::vector<Value> &lb, const std::vector<Value> &ub);

    const FDVariable &var(VarId id) const;
    FDVariable &var(VarId id);
    const Domain &dom(VarId id) const { return var(id).domain; }

    std::vector<Value> set_lb(int set_index) const;
    std::vector<Value> set_ub(int set_index) const;

    bool operator==(const ProblemState &) const = default;
};

// Single-value removal. Removing the last value reports a wipeout and leaves
// the domain holding that value.
FilterOutcome remove_value(ProblemState &state, VarId id, Value v);

bool is_fixed(const ProblemState &state, VarId id);
Value assigned_value(const ProblemState &state, VarId id); // UsageError if unfixed

// Atomically replaces the listed domains. If any replacement is empty the
// state is left untouched and the outcome is a wipeout; otherwise removed
// lists are derived per variable. Replacements must be subsets of the current
// domains (ContractViolation otherwise: propagators only prune).
FilterOutcome apply_domains(ProblemState &state,
                            const std::vector<std::pair<VarId, Domain>> &replacements);

} // namespace fptprop
