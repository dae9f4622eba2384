#pragma once

#include <fptprop/core.hpp>

#include <random>
#include <vector>

// Random instance generation for the oracle comparison harness, plus the
// hitting-set encoding used to exercise NValue on known-hard inputs.

namespace fptprop::gen {

struct RandomSpec {
    ConstraintKind kind = ConstraintKind::NValue;
    int n = 4; // X scope size
    int d = 4; // max domain size
    int k = 3; // parameter budget: universe / shared values / undecided bits
};

// One state holding exactly one constraint of spec.kind, with shapes sized so
// the brute-force oracle stays cheap: domains of at most d values drawn from
// pools of roughly k values. All draws come from rng, so a (seed, index) pair
// pins the instance.
ProblemState random_instance(const RandomSpec &spec, std::mt19937 &rng);

// Collections for the hitting-set round trip: between 1 and max_sets sets,
// each a nonempty subset of {1..max_universe}.
std::vector<std::vector<Value>> random_set_collection(std::mt19937 &rng, int max_sets,
                                                      int max_universe);

// Encodes "is there a hitting set of size at most k": X_i ranges over the
// i-th set, N over {0..k}, one nvalue constraint ties them together. Any
// assignment uses one element per set, so the distinct-count is the size of a
// hitting set. Rejects empty sets and k < 0 with UsageError.
ProblemState hitting_set_instance(const std::vector<std::vector<Value>> &sets, int k);

} // namespace fptprop::gen
