#include <fptprop/cli.hpp>

#include <fptprop/bench.hpp>
#include <fptprop/engine.hpp>
#include <fptprop/gen.hpp>
#include <fptprop/instance.hpp>
#include <fptprop/oracle.hpp>
#include <fptprop/report.hpp>

#include <chrono>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace fptprop::cli {

namespace {
    // UsageError covers ParseError; ContractViolation is a bug and escapes
    template <typename Fn> int guarded(std::ostream &err, Fn &&fn)
    {
        try {
            return fn();
        }
        catch (const ParameterTooLarge &e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const UsageError &e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
    }

    std::string values_text(const std::vector<Value> &values)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(values[i]);
        }
        return s + "}";
    }
}

int cmd_propagate(const std::string &path, const Options &opts, std::ostream &out,
    std::ostream &err)
{
    return guarded(err, [&] {
        ProblemState state = instance::parse_file(path);
        ProblemState before = state;
        auto propagators = make_propagators(state, opts.config);

        FixpointStats stats;
        auto t0 = std::chrono::steady_clock::now();
        FilterOutcome outcome = fixpoint(state, propagators, &stats);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        // reports name the instance by file name so goldens stay path-free
        auto r = report::build_report(before, state, outcome, stats,
            std::filesystem::path(path).filename().string(), ms);
        out << (opts.format == "machine" ? report::render_json(r) : report::render_text(r));
        return outcome.wiped() ? 1 : 0;
    });
}

CompareResult compare_constraint(const ProblemState &state, std::size_t index,
    const PropagatorConfig &config)
{
    if (index >= state.constraints.size())
        throw UsageError("constraint index " + std::to_string(index) + " out of range");
    return compare_constraint(state, index, config,
        make_propagator(state.constraints[index], config));
}

CompareResult compare_constraint(const ProblemState &state, std::size_t index,
    const PropagatorConfig &config, const Propagator &prop)
{
    if (index >= state.constraints.size())
        throw UsageError("constraint index " + std::to_string(index) + " out of range");
    const auto &c = state.constraints[index];

    ProblemState engine_state = state;
    FilterOutcome engine_outcome = prop.filter(engine_state);

    ProblemState oracle_state = state;
    OracleConstraint oc = oracle_constraint(c, state);
    FilterOutcome oracle_outcome =
        oracle::brute_force_dc(oc.check, oracle_state, oc.scope, config.oracle_cap);

    CompareResult result;
    result.engine_status = std::string(status_name(engine_outcome.status));
    result.oracle_status = std::string(status_name(oracle_outcome.status));
    if (engine_outcome.wiped() != oracle_outcome.wiped()) {
        result.match = false;
        return result;
    }
    if (engine_outcome.wiped())
        return result; // both wiped: domains are untouched by convention

    for (const auto &v : state.variables) {
        const auto &engine_dom = engine_state.dom(v.id);
        const auto &oracle_dom = oracle_state.dom(v.id);
        if (engine_dom != oracle_dom) {
            result.match = false;
            result.diffs.push_back({v.name, engine_dom.values(), oracle_dom.values()});
        }
    }
    // a Pruned/Unchanged disagreement with equal domains would mean one side
    // mislabeled its outcome; surface that too
    if (engine_outcome.status != oracle_outcome.status)
        result.match = false;
    return result;
}

namespace {
    void print_compare(std::ostream &out, const std::string &label, const CompareResult &r)
    {
        if (r.match) {
            out << label << ": match (" << r.engine_status << ")\n";
            return;
        }
        out << label << ": MISMATCH engine=" << r.engine_status << " oracle=" << r.oracle_status
            << '\n';
        for (const auto &d : r.diffs)
            out << "  " << d.name << "  engine " << values_text(d.engine) << "  oracle "
                << values_text(d.oracle) << '\n';
    }
}

int cmd_compare(const std::string &path, const Options &opts, std::ostream &out,
    std::ostream &err)
{
    return guarded(err, [&] {
        ProblemState state = instance::parse_file(path);
        if (state.constraints.empty())
            throw UsageError("nothing to compare: " + path + " declares no constraints");
        bool all_match = true;
        for (std::size_t i = 0; i < state.constraints.size(); ++i) {
            auto result = compare_constraint(state, i, opts.config);
            const auto &c = state.constraints[i];
            print_compare(out, c.name + " (" + std::string(kind_name(c.kind)) + ")", result);
            all_match = all_match && result.match;
        }
        return all_match ? 0 : 1;
    });
}

int cmd_compare_random(const RandomRuns &runs, const Options &opts, std::ostream &out,
    std::ostream &err)
{
    return guarded(err, [&] {
        std::vector<ConstraintKind> kinds;
        if (runs.kind.empty()) {
            kinds = {ConstraintKind::NValue, ConstraintKind::Uses, ConstraintKind::CardPath,
                ConstraintKind::ValSymBreak, ConstraintKind::Disjoint, ConstraintKind::AmongSet,
                ConstraintKind::Roots, ConstraintKind::SumEq, ConstraintKind::Extensional};
        }
        else {
            auto kind = kind_from_name(runs.kind);
            if (!kind)
                throw UsageError("unknown constraint kind '" + runs.kind + "'");
            kinds = {*kind};
        }
        if (runs.count < 1)
            throw UsageError("count must be at least 1");

        int mismatches = 0;
        for (ConstraintKind kind : kinds) {
            std::mt19937 rng(runs.seed);
            int kind_mismatches = 0;
            for (int i = 0; i < runs.count; ++i) {
                gen::RandomSpec spec{kind, runs.n, runs.d, runs.k};
                ProblemState state = gen::random_instance(spec, rng);
                auto result = compare_constraint(state, 0, opts.config);
                if (!result.match) {
                    ++kind_mismatches;
                    print_compare(err,
                        std::string(kind_name(kind)) + " seed=" + std::to_string(runs.seed) +
                            " index=" + std::to_string(i),
                        result);
                }
            }
            out << kind_name(kind);
            for (std::size_t pad = kind_name(kind).size(); pad < 12; ++pad)
                out << ' ';
            out << runs.count - kind_mismatches << "/" << runs.count << " match\n";
            mismatches += kind_mismatches;
        }
        return mismatches == 0 ? 0 : 1;
    });
}

int cmd_gen_hitting_set(const std::vector<std::string> &sets, int k, std::ostream &out,
    std::ostream &err)
{
    return guarded(err, [&] {
        std::vector<std::vector<Value>> parsed;
        for (const auto &text : sets) {
            std::vector<Value> values;
            std::istringstream in(text);
            std::string item;
            while (std::getline(in, item, ',')) {
                long long v = 0;
                try {
                    v = std::stoll(item);
                }
                catch (const std::exception &) {
                    throw UsageError("bad set element '" + item + "' in '" + text + "'");
                }
                if (v < value_min || v > value_max)
                    throw UsageError("set element " + item + " outside the supported range");
                values.push_back(static_cast<Value>(v));
            }
            parsed.push_back(std::move(values));
        }
        out << instance::write(gen::hitting_set_instance(parsed, k));
        return 0;
    });
}

int cmd_bench(const std::string &kind_name_arg, const std::vector<int> &ns,
    const std::vector<int> &ks, int d, unsigned seed, std::ostream &out, std::ostream &err)
{
    return guarded(err, [&] {
        auto kind = kind_from_name(kind_name_arg);
        if (!kind)
            throw UsageError("unknown constraint kind '" + kind_name_arg + "'");
        if (ns.empty() || ks.empty())
            throw UsageError("bench needs at least one n and one k");

        std::vector<bench::Row> rows;
        for (int n : ns)
            for (int k : ks)
                rows.push_back(bench::measure({*kind, n, d, k}, seed));
        out << bench::render_table(rows);
        return 0;
    });
}

} // namespace fptprop::cli
