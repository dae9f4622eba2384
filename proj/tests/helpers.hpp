#pragma once

#include <fptprop/cli.hpp>
#include <fptprop/core.hpp>
#include <fptprop/gen.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

// Builders shared across the test binaries.

namespace testutil {

using fptprop::Domain;
using fptprop::ProblemState;
using fptprop::Value;
using fptprop::VarId;

// state with plain variables only; ids are handed out in list order
inline ProblemState vars(
    const std::vector<std::pair<std::string, std::vector<Value>>> &decls)
{
    ProblemState state;
    for (const auto &[name, values] : decls)
        state.add_variable(name, Domain(values));
    return state;
}

inline int draw(std::mt19937 &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random sum instance per the interval-lift test shape: up to max_n addends
// over [0,9] with at most two holes each, target wandering around the
// feasible range so both prunings and wipeouts occur.
inline ProblemState holey_sum_instance(std::mt19937 &rng, int max_n)
{
    ProblemState state;
    fptprop::ConstraintDescriptor c;
    c.kind = fptprop::ConstraintKind::SumEq;
    c.name = "c0";

    int n = draw(rng, 1, max_n);
    long long sum_lo = 0, sum_hi = 0;
    for (int i = 0; i < n; ++i) {
        int lo = draw(rng, 0, 5);
        int hi = std::min(9, lo + draw(rng, 0, 4));
        std::vector<Value> values;
        for (Value v = lo; v <= hi; ++v)
            values.push_back(v);
        for (int hole = draw(rng, 0, 2); hole > 0 && values.size() > 1; --hole)
            values.erase(values.begin() + draw(rng, 0, static_cast<int>(values.size()) - 1));
        sum_lo += values.front();
        sum_hi += values.back();
        c.scope.push_back(
            state.add_variable("X" + std::to_string(i + 1), Domain(std::move(values))));
    }

    int t_lo = static_cast<int>(sum_lo) + draw(rng, -1, 2);
    int t_hi = t_lo + draw(rng, 0, static_cast<int>(sum_hi - sum_lo) + 1);
    std::vector<Value> target;
    for (Value v = t_lo; v <= t_hi; ++v)
        target.push_back(v);
    for (int hole = draw(rng, 0, 2); hole > 0 && target.size() > 1; --hole)
        target.erase(target.begin() + draw(rng, 0, static_cast<int>(target.size()) - 1));
    c.scope.push_back(state.add_variable("T", Domain(std::move(target))));

    state.constraints.push_back(std::move(c));
    return state;
}

// draws a shape within the given ceilings and compares propagator vs oracle
inline fptprop::cli::CompareResult random_equivalence_case(fptprop::ConstraintKind kind,
    std::mt19937 &rng, int max_n, int max_d, int max_k, ProblemState *out_state = nullptr)
{
    fptprop::gen::RandomSpec spec;
    spec.kind = kind;
    spec.n = draw(rng, 1, max_n);
    spec.d = draw(rng, 1, max_d);
    spec.k = draw(rng, 1, max_k);
    ProblemState state = fptprop::gen::random_instance(spec, rng);
    auto result = fptprop::cli::compare_constraint(state, 0);
    if (out_state)
        *out_state = std::move(state);
    return result;
}

} // namespace testutil
