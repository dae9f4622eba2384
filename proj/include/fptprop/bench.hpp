#pragma once

#include <fptprop/engine.hpp>
#include <fptprop/gen.hpp>
#include <fptprop/propagators.hpp>

#include <string>
#include <vector>

// Small timing harness. Each measurement times filter() on a fresh copy of
// the state (copying is linear and negligible next to filtering), repeats
// enough times to get off the clock floor, and reports the median of a few
// samples to shrug off scheduler noise.

namespace fptprop::bench {

// median per-call milliseconds
double median_filter_ms(const ProblemState &state, const Propagator &prop, int samples = 5);

struct Row {
    std::string kind;
    int n = 0;
    int d = 0;
    int k = 0;
    unsigned seed = 0;
    double ms = 0.0;
};

Row measure(const gen::RandomSpec &spec, unsigned seed, const PropagatorConfig &config = {});

std::string render_table(const std::vector<Row> &rows);

} // namespace fptprop::bench
