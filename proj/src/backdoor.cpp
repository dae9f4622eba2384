#include <fptprop/backdoor.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

namespace fptprop::backdoor {

namespace {
    std::vector<Value> domain_union(const ProblemState &state, std::span<const VarId> vars)
    {
        std::vector<Value> values;
        for (VarId id : vars)
            values.insert(values.end(), state.dom(id).begin(), state.dom(id).end());
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return values;
    }

    bool sorted_contains(const std::vector<Value> &values, Value v)
    {
        return std::binary_search(values.begin(), values.end(), v);
    }

    void require_distinct(const ProblemState &state, std::span<const VarId> vars,
        std::string_view what)
    {
        std::set<VarId> seen;
        for (VarId id : vars) {
            state.var(id);
            if (!seen.insert(id).second)
                throw UsageError(std::string(what) + ": variable " + state.var(id).name +
                    " appears twice in the scope");
        }
    }
}

FilterOutcome enumerate_union(const BackdoorDecomposition &dec, ProblemState &state, int k_max)
{
    if (static_cast<int>(dec.backdoor.size()) > k_max)
        throw ParameterTooLarge("backdoor size k=" + std::to_string(dec.backdoor.size()) +
            " exceeds cap k_max=" + std::to_string(k_max));

    std::vector<VarId> free;
    for (VarId id : dec.backdoor) {
        for (Value v : state.dom(id))
            if (v != 0 && v != 1)
                throw UsageError("backdoor variable " + state.var(id).name + " is not 0/1");
        if (state.dom(id).size() == 2)
            free.push_back(id);
    }

    // one support flag per (variable, value); completions only ever set them,
    // so the accumulated union grows monotonically
    std::vector<std::vector<char>> supported(state.variables.size());
    std::size_t missing = 0;
    for (std::size_t i = 0; i < state.variables.size(); ++i) {
        supported[i].assign(state.variables[i].domain.size(), 0);
        missing += supported[i].size();
    }

    bool any_survivor = false;
    const std::uint64_t completions = std::uint64_t{1} << free.size();
    for (std::uint64_t counter = 0; counter < completions; ++counter) {
        ProblemState work = state;
        for (std::size_t j = 0; j < free.size(); ++j)
            work.var(free[j]).domain = Domain::singleton((counter >> j) & 1 ? 1 : 0);

        if (dec.sub_filter(work).wiped())
            continue;
        any_survivor = true;

        for (std::size_t i = 0; i < state.variables.size(); ++i) {
            const auto &original = state.variables[i].domain.values();
            for (Value v : work.variables[i].domain) {
                auto it = std::lower_bound(original.begin(), original.end(), v);
                if (it == original.end() || *it != v)
                    throw ContractViolation("backdoor sub-filter added value " +
                        std::to_string(v) + " to " + state.variables[i].name);
                auto &flag = supported[i][static_cast<std::size_t>(it - original.begin())];
                if (!flag) {
                    flag = 1;
                    --missing;
                }
            }
        }
        if (missing == 0)
            break; // every value is supported, the rest cannot change anything
    }

    if (!any_survivor)
        return FilterOutcome::wipeout();

    std::vector<std::pair<VarId, Domain>> replacements;
    for (std::size_t i = 0; i < state.variables.size(); ++i) {
        const auto &original = state.variables[i].domain.values();
        std::vector<Value> kept;
        for (std::size_t t = 0; t < original.size(); ++t)
            if (supported[i][t])
                kept.push_back(original[t]);
        if (kept.size() != original.size())
            replacements.emplace_back(state.variables[i].id, Domain{std::move(kept)});
    }
    return apply_domains(state, replacements);
}

FilterOutcome disjoint_dc(std::span<const VarId> x, std::span<const VarId> y,
    ProblemState &state, int k_max)
{
    require_distinct(state, x, "disjoint");
    require_distinct(state, y, "disjoint");

    auto x_union = domain_union(state, x);
    auto y_union = domain_union(state, y);
    std::vector<Value> shared;
    std::set_intersection(x_union.begin(), x_union.end(), y_union.begin(), y_union.end(),
        std::back_inserter(shared));
    if (static_cast<int>(shared.size()) > k_max)
        throw ParameterTooLarge("disjoint backdoor size k=" + std::to_string(shared.size()) +
            " exceeds cap k_max=" + std::to_string(k_max));

    // materialize one side-ownership bit per shared value on a working copy;
    // bit = 1 hands the value to the X side, 0 to the Y side
    ProblemState work = state;
    std::vector<VarId> bits;
    bits.reserve(shared.size());
    for (Value v : shared)
        bits.push_back(work.add_variable("disjoint#" + std::to_string(v), Domain{{0, 1}}));

    BackdoorDecomposition dec;
    dec.backdoor = bits;
    dec.sub_filter = [x, y, shared, x_union, y_union, bits](ProblemState &s) -> FilterOutcome {
        auto side_of = [&](Value v) {
            auto it = std::lower_bound(shared.begin(), shared.end(), v);
            return s.dom(bits[static_cast<std::size_t>(it - shared.begin())]).min();
        };
        std::map<VarId, Domain> residual;
        auto restrict = [&](VarId id, bool x_side) {
            std::vector<Value> kept;
            const auto &other = x_side ? y_union : x_union;
            for (Value v : s.dom(id)) {
                if (!sorted_contains(other, v))
                    kept.push_back(v); // private to this side
                else if (sorted_contains(shared, v) && side_of(v) == (x_side ? 1 : 0))
                    kept.push_back(v);
            }
            Domain d{std::move(kept)};
            auto [it, fresh] = residual.try_emplace(id, d);
            if (!fresh) { // variable listed on both sides: no value can work on both
                std::vector<Value> both;
                std::set_intersection(it->second.begin(), it->second.end(), d.begin(), d.end(),
                    std::back_inserter(both));
                it->second = Domain{std::move(both)};
            }
        };
        for (VarId id : x)
            restrict(id, true);
        for (VarId id : y)
            restrict(id, false);

        std::vector<std::pair<VarId, Domain>> replacements(residual.begin(), residual.end());
        return apply_domains(s, replacements);
    };

    auto outcome = enumerate_union(dec, work, k_max);
    if (outcome.wiped())
        return outcome;

    // map the union back onto the caller's state, dropping the scratch bits
    std::vector<std::pair<VarId, Domain>> replacements;
    std::set<VarId> scoped(x.begin(), x.end());
    scoped.insert(y.begin(), y.end());
    for (VarId id : scoped)
        replacements.emplace_back(id, work.dom(id));
    return apply_domains(state, replacements);
}

FilterOutcome among_set_dc(std::span<const VarId> x, int set_index, VarId n_var,
    ProblemState &state, int k_max)
{
    require_distinct(state, x, "among");
    if (set_index < 0 || static_cast<std::size_t>(set_index) >= state.sets.size())
        throw UsageError("among: unknown set variable index " + std::to_string(set_index));
    const auto &set = state.sets[static_cast<std::size_t>(set_index)];
    std::set<VarId> bit_ids(set.bits.begin(), set.bits.end());
    for (VarId id : x)
        if (id == n_var || bit_ids.count(id))
            throw UsageError("among: scope overlaps the counter or the set's bits");
    if (bit_ids.count(n_var))
        throw UsageError("among: counter is one of the set's bits");

    BackdoorDecomposition dec;
    for (VarId bit : set.bits)
        if (state.dom(bit).size() == 2)
            dec.backdoor.push_back(bit);

    std::vector<VarId> x_vars(x.begin(), x.end());
    dec.sub_filter = [x_vars, set_index, n_var](ProblemState &s) -> FilterOutcome {
        auto members = s.set_lb(set_index); // bits fixed, so lb == ub
        auto inside = [&](VarId id) {
            int common = 0, total = 0;
            for (Value v : s.dom(id)) {
                ++total;
                if (sorted_contains(members, v))
                    ++common;
            }
            return std::pair{common > 0, common == total};
        };

        int lo = 0, hi = 0;
        for (VarId id : x_vars) {
            auto [some, all] = inside(id);
            lo += all ? 1 : 0;
            hi += some ? 1 : 0;
        }

        const auto &n_dom = s.dom(n_var);
        auto count_reachable = [&](int from, int to) {
            for (Value c : n_dom)
                if (c >= from && c <= to)
                    return true;
            return false;
        };

        std::vector<std::pair<VarId, Domain>> replacements;
        for (VarId id : x_vars) {
            auto [some, all] = inside(id);
            int lo_rest = lo - (all ? 1 : 0);
            int hi_rest = hi - (some ? 1 : 0);
            std::vector<Value> kept;
            for (Value v : s.dom(id)) {
                int inc = sorted_contains(members, v) ? 1 : 0;
                if (count_reachable(lo_rest + inc, hi_rest + inc))
                    kept.push_back(v);
            }
            replacements.emplace_back(id, Domain{std::move(kept)});
        }
        std::vector<Value> n_kept;
        for (Value c : n_dom)
            if (c >= lo && c <= hi)
                n_kept.push_back(c);
        replacements.emplace_back(n_var, Domain{std::move(n_kept)});
        return apply_domains(s, replacements);
    };

    return enumerate_union(dec, state, k_max);
}

FilterOutcome roots_dc(std::span<const VarId> x, int s_index, int t_index,
    ProblemState &state, int k_max)
{
    require_distinct(state, x, "roots");
    if (s_index < 0 || static_cast<std::size_t>(s_index) >= state.sets.size() || t_index < 0 ||
        static_cast<std::size_t>(t_index) >= state.sets.size() || s_index == t_index)
        throw UsageError("roots: bad set variable indices");
    const auto &s_set = state.sets[static_cast<std::size_t>(s_index)];
    const auto &t_set = state.sets[static_cast<std::size_t>(t_index)];

    // S ranges over positions, 1-based to match the usual statement
    const int n = static_cast<int>(x.size());
    if (static_cast<int>(s_set.universe.size()) != n)
        throw UsageError("roots: position set has " + std::to_string(s_set.universe.size()) +
            " elements for " + std::to_string(n) + " scope variables");
    for (int i = 0; i < n; ++i)
        if (s_set.universe[static_cast<std::size_t>(i)] != i + 1)
            throw UsageError("roots: position set universe must be exactly 1..n");

    std::set<VarId> reserved(s_set.bits.begin(), s_set.bits.end());
    reserved.insert(t_set.bits.begin(), t_set.bits.end());
    for (VarId id : x)
        if (reserved.count(id))
            throw UsageError("roots: scope overlaps the sets' bits");

    BackdoorDecomposition dec;
    for (VarId bit : t_set.bits)
        if (state.dom(bit).size() == 2)
            dec.backdoor.push_back(bit);

    std::vector<VarId> x_vars(x.begin(), x.end());
    dec.sub_filter = [x_vars, s_index, t_index](ProblemState &s) -> FilterOutcome {
        auto members = s.set_lb(t_index); // T is fixed under this completion
        const auto &s_bits = s.sets[static_cast<std::size_t>(s_index)].bits;

        // independent pairs: (i in S) <-> (X_i in T)
        std::vector<std::pair<VarId, Domain>> replacements;
        for (std::size_t i = 0; i < x_vars.size(); ++i) {
            const auto &x_dom = s.dom(x_vars[i]);
            const auto &bit_dom = s.dom(s_bits[i]);
            bool in_possible = false, out_possible = false;
            for (Value v : x_dom)
                (sorted_contains(members, v) ? in_possible : out_possible) = true;

            std::vector<Value> bit_kept;
            for (Value b : bit_dom)
                if (b == 1 ? in_possible : out_possible)
                    bit_kept.push_back(b);
            std::vector<Value> x_kept;
            for (Value v : x_dom)
                if (bit_dom.contains(sorted_contains(members, v) ? 1 : 0))
                    x_kept.push_back(v);

            replacements.emplace_back(s_bits[i], Domain{std::move(bit_kept)});
            replacements.emplace_back(x_vars[i], Domain{std::move(x_kept)});
        }
        return apply_domains(s, replacements);
    };

    return enumerate_union(dec, state, k_max);
}

} // namespace fptprop::backdoor
