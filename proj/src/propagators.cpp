#include <fptprop/propagators.hpp>

#include <fptprop/regular.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace fptprop {

namespace {
    std::string label(const ConstraintDescriptor &c)
    {
        return c.name.empty() ? std::string(kind_name(c.kind)) : c.name;
    }

    void fail(const ConstraintDescriptor &c, const std::string &message)
    {
        throw UsageError(label(c) + ": " + message);
    }

    std::vector<Value> scope_union(const ProblemState &state, std::span<const VarId> vars)
    {
        std::vector<Value> values;
        for (VarId id : vars)
            values.insert(values.end(), state.dom(id).begin(), state.dom(id).end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return values;
    }

    std::span<const VarId> x_part(const ConstraintDescriptor &c)
    {
        return {c.scope.data(), static_cast<std::size_t>(c.split)};
    }

    std::span<const VarId> y_part(const ConstraintDescriptor &c)
    {
        return {c.scope.data() + c.split, c.scope.size() - static_cast<std::size_t>(c.split)};
    }

    automata::TuplePredicate cardpath_predicate(const ConstraintDescriptor &c)
    {
        if (!c.builtin.empty())
            return automata::builtin_predicate(c.builtin, c.arity);
        return automata::table_predicate(c.tuples, c.arity);
    }

    // the table kind is filtered directly: a value survives iff some row
    // through it stays inside all the current domains
    FilterOutcome table_filter(const ConstraintDescriptor &c, ProblemState &state)
    {
        std::vector<std::set<Value>> supported(c.scope.size());
        for (const auto &row : c.tuples) {
            bool alive = true;
            for (std::size_t i = 0; i < c.scope.size() && alive; ++i)
                alive = state.dom(c.scope[i]).contains(row[i]);
            if (!alive)
                continue;
            for (std::size_t i = 0; i < c.scope.size(); ++i)
                supported[i].insert(row[i]);
        }
        std::vector<std::pair<VarId, Domain>> replacements;
        for (std::size_t i = 0; i < c.scope.size(); ++i)
            replacements.emplace_back(c.scope[i],
                Domain{std::vector<Value>(supported[i].begin(), supported[i].end())});
        return apply_domains(state, replacements);
    }

    void check_sigmas_cover(const ConstraintDescriptor &c, const ProblemState &state)
    {
        for (VarId id : c.scope)
            for (Value v : state.dom(id))
                for (const auto &sigma : c.sigmas)
                    if (!sigma.defined_on(v))
                        fail(c, "permutation undefined on domain value " + std::to_string(v));
    }
}

void validate_descriptor(const ConstraintDescriptor &c, const ProblemState &state)
{
    for (VarId id : c.scope)
        state.var(id); // throws on unknown ids
    {
        std::set<VarId> seen(c.scope.begin(), c.scope.end());
        if (seen.size() != c.scope.size())
            fail(c, "a variable appears twice in the scope");
    }
    for (int s : c.setvars)
        if (s < 0 || static_cast<std::size_t>(s) >= state.sets.size())
            fail(c, "unknown set variable index " + std::to_string(s));

    switch (c.kind) {
    case ConstraintKind::NValue:
        if (c.scope.empty())
            fail(c, "needs a counter variable");
        break;
    case ConstraintKind::Uses:
    case ConstraintKind::Disjoint:
        if (c.split < 0 || static_cast<std::size_t>(c.split) > c.scope.size())
            fail(c, "split outside the scope");
        break;
    case ConstraintKind::CardPath: {
        if (c.arity < 1)
            fail(c, "arity must be at least 1");
        int n = static_cast<int>(c.scope.size()) - 1;
        if (n < c.arity)
            fail(c, "chain of length " + std::to_string(n) + " is shorter than arity " +
                    std::to_string(c.arity));
        if (c.builtin.empty() == c.tuples.empty())
            fail(c, "needs exactly one of a builtin comparator or a tuple table");
        for (const auto &row : c.tuples)
            if (static_cast<int>(row.size()) != c.arity)
                fail(c, "tuple arity does not match the declared arity");
        break;
    }
    case ConstraintKind::ValSymBreak:
        check_sigmas_cover(c, state);
        break;
    case ConstraintKind::AmongSet:
        if (c.scope.empty())
            fail(c, "needs a counter variable");
        if (c.setvars.size() != 1)
            fail(c, "needs exactly one set variable");
        break;
    case ConstraintKind::Roots:
        if (c.setvars.size() != 2)
            fail(c, "needs a position set and a value set");
        break;
    case ConstraintKind::SumEq:
        if (c.scope.empty())
            fail(c, "needs a target variable");
        break;
    case ConstraintKind::Extensional:
        for (const auto &row : c.tuples)
            if (row.size() != c.scope.size())
                fail(c, "tuple arity does not match the scope");
        break;
    }
}

Propagator make_propagator(const ConstraintDescriptor &c, const PropagatorConfig &config)
{
    Propagator p;
    p.name = label(c);

    switch (c.kind) {
    case ConstraintKind::NValue:
        p.filter = [c, config](ProblemState &s) {
            const int n = static_cast<int>(c.scope.size()) - 1;
            automata::NValueParams params;
            params.universe = scope_union(s, {c.scope.data(), static_cast<std::size_t>(n)});
            params.n = n;
            params.bitmask_cap = config.bitmask_cap;
            return regular::filter(automata::nvalue_automaton(params), s, c.scope);
        };
        break;

    case ConstraintKind::Uses:
        p.filter = [c, config](ProblemState &s) {
            auto x = x_part(c), y = y_part(c);
            automata::UsesParams params;
            params.y_universe = scope_union(s, y);
            params.n = static_cast<int>(x.size());
            params.m = static_cast<int>(y.size());
            params.bitmask_cap = config.bitmask_cap;
            std::vector<VarId> scan(y.begin(), y.end());
            scan.insert(scan.end(), x.begin(), x.end());
            return regular::filter(automata::uses_automaton(params), s, scan);
        };
        break;

    case ConstraintKind::CardPath:
        p.filter = [c, predicate = cardpath_predicate(c)](ProblemState &s) {
            const int n = static_cast<int>(c.scope.size()) - 1;
            automata::CardPathParams params;
            params.p = c.arity;
            params.allowed = predicate;
            params.n = n;
            for (int i = 0; i < n; ++i)
                params.universes.push_back(s.dom(c.scope[static_cast<std::size_t>(i)]).values());
            return regular::filter(automata::cardpath_automaton(params), s, c.scope);
        };
        break;

    case ConstraintKind::ValSymBreak:
        p.filter = [c, config](ProblemState &s) {
            check_sigmas_cover(c, s);
            automata::SymmetrySet set{c.sigmas, config.bitmask_cap};
            auto automaton = automata::valsymbreak_automaton(set, static_cast<int>(c.scope.size()));
            return regular::filter(automaton, s, c.scope);
        };
        break;

    case ConstraintKind::Disjoint:
        p.filter = [c, config](ProblemState &s) {
            return backdoor::disjoint_dc(x_part(c), y_part(c), s, config.k_max);
        };
        break;

    case ConstraintKind::AmongSet:
        p.filter = [c, config](ProblemState &s) {
            std::span<const VarId> x{c.scope.data(), c.scope.size() - 1};
            return backdoor::among_set_dc(x, c.setvars[0], c.scope.back(), s, config.k_max);
        };
        break;

    case ConstraintKind::Roots:
        p.filter = [c, config](ProblemState &s) {
            return backdoor::roots_dc(c.scope, c.setvars[0], c.setvars[1], s, config.k_max);
        };
        break;

    case ConstraintKind::SumEq:
        p.filter = [c, config](ProblemState &s) {
            return interval::lift_to_dc(interval::sum_bc(), c.scope, s, config.run_product_cap);
        };
        break;

    case ConstraintKind::Extensional:
        p.filter = [c](ProblemState &s) { return table_filter(c, s); };
        break;
    }
    return p;
}

std::vector<Propagator> make_propagators(const ProblemState &state, const PropagatorConfig &config)
{
    std::vector<Propagator> propagators;
    propagators.reserve(state.constraints.size());
    for (const auto &c : state.constraints) {
        validate_descriptor(c, state);
        propagators.push_back(make_propagator(c, config));
    }
    return propagators;
}

OracleConstraint oracle_constraint(const ConstraintDescriptor &c, const ProblemState &state)
{
    OracleConstraint oc;
    oc.scope = c.scope;

    switch (c.kind) {
    case ConstraintKind::NValue:
        oc.check = oracle::nvalue_check(static_cast<int>(c.scope.size()) - 1);
        break;
    case ConstraintKind::Uses:
        oc.check = oracle::uses_check(c.split, static_cast<int>(c.scope.size()) - c.split);
        break;
    case ConstraintKind::CardPath:
        oc.check = oracle::cardpath_check(c.arity, cardpath_predicate(c),
            static_cast<int>(c.scope.size()) - 1);
        break;
    case ConstraintKind::ValSymBreak:
        oc.check = oracle::valsymbreak_check(c.sigmas);
        break;
    case ConstraintKind::Disjoint:
        oc.check = oracle::disjoint_check(c.split, static_cast<int>(c.scope.size()) - c.split);
        break;
    case ConstraintKind::AmongSet: {
        const auto &set = state.sets.at(static_cast<std::size_t>(c.setvars[0]));
        const int n = static_cast<int>(c.scope.size()) - 1;
        oc.scope.assign(c.scope.begin(), c.scope.end() - 1);
        oc.scope.insert(oc.scope.end(), set.bits.begin(), set.bits.end());
        oc.scope.push_back(c.scope.back());
        oc.check = oracle::among_check(n, set.universe);
        break;
    }
    case ConstraintKind::Roots: {
        const auto &s_set = state.sets.at(static_cast<std::size_t>(c.setvars[0]));
        const auto &t_set = state.sets.at(static_cast<std::size_t>(c.setvars[1]));
        oc.scope.insert(oc.scope.end(), s_set.bits.begin(), s_set.bits.end());
        oc.scope.insert(oc.scope.end(), t_set.bits.begin(), t_set.bits.end());
        oc.check = oracle::roots_check(static_cast<int>(c.scope.size()), t_set.universe);
        break;
    }
    case ConstraintKind::SumEq:
        oc.check = oracle::sum_check(static_cast<int>(c.scope.size()) - 1);
        break;
    case ConstraintKind::Extensional:
        oc.check = oracle::table_check(c.tuples);
        break;
    }
    return oc;
}

long long fpt_parameter(const ConstraintDescriptor &c, const ProblemState &state)
{
    switch (c.kind) {
    case ConstraintKind::NValue:
        return static_cast<long long>(
            scope_union(state, {c.scope.data(), c.scope.size() - 1}).size());
    case ConstraintKind::Uses:
        return static_cast<long long>(scope_union(state, y_part(c)).size());
    case ConstraintKind::CardPath: {
        std::size_t d = 0;
        for (std::size_t i = 0; i + 1 < c.scope.size(); ++i)
            d = std::max(d, state.dom(c.scope[i]).size());
        return c.arity + static_cast<long long>(d);
    }
    case ConstraintKind::ValSymBreak:
        return static_cast<long long>(c.sigmas.size());
    case ConstraintKind::Disjoint: {
        auto x = scope_union(state, x_part(c));
        auto y = scope_union(state, y_part(c));
        std::vector<Value> shared;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
            std::back_inserter(shared));
        return static_cast<long long>(shared.size());
    }
    case ConstraintKind::AmongSet:
    case ConstraintKind::Roots: {
        int set_index = c.kind == ConstraintKind::AmongSet ? c.setvars[0] : c.setvars[1];
        auto lb = state.set_lb(set_index);
        auto ub = state.set_ub(set_index);
        return static_cast<long long>(ub.size() - lb.size());
    }
    case ConstraintKind::SumEq: {
        long long p = 0, q = 0;
        for (VarId id : c.scope) {
            auto runs = interval::intervals_count(state.dom(id));
            p = std::max<long long>(p, runs);
            if (runs > 1)
                ++q;
        }
        return p + q;
    }
    case ConstraintKind::Extensional:
        return 0;
    }
    throw ContractViolation("unknown constraint kind");
}

} // namespace fptprop
