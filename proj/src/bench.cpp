#include <fptprop/bench.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace fptprop::bench {

namespace {
    using clock = std::chrono::steady_clock;

    double run_batch(const ProblemState &state, const Propagator &prop, int reps)
    {
        auto t0 = clock::now();
        for (int i = 0; i < reps; ++i) {
            ProblemState copy = state;
            prop.filter(copy);
        }
        auto t1 = clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
    }
}

double median_filter_ms(const ProblemState &state, const Propagator &prop, int samples)
{
    // grow the batch until one batch takes a few milliseconds
    int reps = 1;
    while (reps < (1 << 20) && run_batch(state, prop, reps) * reps < 4.0)
        reps *= 2;

    std::vector<double> times;
    for (int s = 0; s < std::max(1, samples); ++s)
        times.push_back(run_batch(state, prop, reps));
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

Row measure(const gen::RandomSpec &spec, unsigned seed, const PropagatorConfig &config)
{
    std::mt19937 rng(seed);
    ProblemState state = gen::random_instance(spec, rng);
    Propagator prop = make_propagator(state.constraints.front(), config);

    Row row;
    row.kind = std::string(kind_name(spec.kind));
    row.n = spec.n;
    row.d = spec.d;
    row.k = spec.k;
    row.seed = seed;
    row.ms = median_filter_ms(state, prop);
    return row;
}

std::string render_table(const std::vector<Row> &rows)
{
    std::ostringstream out;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-11s %6s %6s %4s %7s %9s\n", "kind", "n", "d", "k", "seed",
        "ms");
    out << buf;
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%-11s %6d %6d %4d %7u %9.4f\n", r.kind.c_str(), r.n, r.d,
            r.k, r.seed, r.ms);
        out << buf;
    }
    return out.str();
}

} // namespace fptprop::bench
