#pragma once

#include <fptprop/core.hpp>
#include <fptprop/engine.hpp>

#include <string>
#include <vector>

// Propagation reports: what a fixpoint run did to an instance, renderable as
// aligned text or as JSON. wall_ms is informational only; golden-file tests
// compare everything except timing.

namespace fptprop::report {

struct VarLine {
    std::string name;
    std::vector<Value> before;
    std::vector<Value> after;
};

struct SetLine {
    std::string name;
    std::vector<Value> lb_before, ub_before;
    std::vector<Value> lb_after, ub_after;
};

struct ConstraintLine {
    std::string name;
    std::string kind;
    long long parameter = 0; // fpt_parameter against the pre-run domains
    long long invocations = 0;
};

struct Report {
    std::string instance;
    std::string status;   // "fixpoint" or "wipeout"
    std::string wiped_by; // empty unless wipeout
    std::vector<VarLine> variables; // set bit variables fold into sets below
    std::vector<SetLine> sets;
    std::vector<ConstraintLine> constraints;
    double wall_ms = 0.0;
};

// before must be the pre-run state, after the post-run state (same shape).
Report build_report(const ProblemState &before, const ProblemState &after,
                    const FilterOutcome &outcome, const FixpointStats &stats,
                    const std::string &instance_name, double wall_ms);

std::string render_text(const Report &r);
std::string render_json(const Report &r);

} // namespace fptprop::report
