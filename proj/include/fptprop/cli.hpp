#pragma once

#include <fptprop/core.hpp>
#include <fptprop/engine.hpp>
#include <fptprop/propagators.hpp>

#include <iosfwd>
#include <string>
#include <vector>

// Command implementations behind the fptprop binary, written against streams
// so tests can drive them without spawning processes.
//
// Exit codes across all commands:
//   0  success (propagate reached a fixpoint / comparison matched)
//   1  semantic failure (wipeout, or an engine/oracle mismatch)
//   2  bad input: usage errors, parse errors, a parameter over its cap

namespace fptprop::cli {

struct Options {
    PropagatorConfig config;
    std::string format = "text"; // "text" or "machine"
};

int cmd_propagate(const std::string &path, const Options &opts, std::ostream &out,
                  std::ostream &err);

// One constraint filtered in isolation vs the enumeration oracle on a copy of
// the same state. Every variable is diffed, not just the constraint's scope.
struct DomainDiff {
    std::string name;
    std::vector<Value> engine;
    std::vector<Value> oracle;
};

struct CompareResult {
    bool match = true;
    std::string engine_status;
    std::string oracle_status;
    std::vector<DomainDiff> diffs; // empty when the statuses already disagree
};

CompareResult compare_constraint(const ProblemState &state, std::size_t index,
                                 const PropagatorConfig &config = {});

// Same comparison with a caller-supplied filter standing in for the built-in
// propagator. Lets tests hand in a broken one and watch the mismatch surface.
CompareResult compare_constraint(const ProblemState &state, std::size_t index,
                                 const PropagatorConfig &config, const Propagator &prop);

int cmd_compare(const std::string &path, const Options &opts, std::ostream &out,
                std::ostream &err);

struct RandomRuns {
    unsigned seed = 1;
    int n = 4;
    int d = 4;
    int k = 3;
    int count = 200;
    std::string kind; // empty means every kind
};

int cmd_compare_random(const RandomRuns &runs, const Options &opts, std::ostream &out,
                       std::ostream &err);

// sets come as value lists like "1,2,5"; emits instance text on out.
int cmd_gen_hitting_set(const std::vector<std::string> &sets, int k, std::ostream &out,
                        std::ostream &err);

int cmd_bench(const std::string &kind, const std::vector<int> &ns, const std::vector<int> &ks,
              int d, unsigned seed, std::ostream &out, std::ostream &err);

} // namespace fptprop::cli
