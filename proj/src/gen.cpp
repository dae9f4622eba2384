#include <fptprop/gen.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace fptprop::gen {

namespace {
    int pick(std::mt19937 &rng, int lo, int hi) // inclusive
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    // nonempty subset of pool with at most max_size elements
    std::vector<Value> subset(std::mt19937 &rng, const std::vector<Value> &pool, int max_size)
    {
        int size = pick(rng, 1, std::min<int>(max_size, static_cast<int>(pool.size())));
        std::vector<Value> shuffled = pool;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.resize(static_cast<std::size_t>(size));
        std::sort(shuffled.begin(), shuffled.end());
        return shuffled;
    }

    std::vector<Value> iota_pool(Value lo, int count)
    {
        std::vector<Value> pool(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            pool[static_cast<std::size_t>(i)] = lo + i;
        return pool;
    }

    std::vector<VarId> add_scope(ProblemState &state, std::mt19937 &rng, const std::string &stem,
        int n, const std::vector<Value> &pool, int d)
    {
        std::vector<VarId> ids;
        for (int i = 0; i < n; ++i)
            ids.push_back(state.add_variable(stem + std::to_string(i + 1),
                Domain(subset(rng, pool, d))));
        return ids;
    }

    // random lb <= ub over universe keeping |ub \ lb| at most max_undecided
    std::pair<std::vector<Value>, std::vector<Value>> random_bounds(std::mt19937 &rng,
        const std::vector<Value> &universe, int max_undecided)
    {
        std::vector<Value> lb, ub;
        int undecided = 0;
        for (Value v : universe) {
            switch (pick(rng, 0, 2)) {
            case 0:
                lb.push_back(v);
                ub.push_back(v);
                break;
            case 1:
                if (undecided < max_undecided) {
                    ub.push_back(v);
                    ++undecided;
                }
                break;
            default:
                break;
            }
        }
        return {lb, ub};
    }

    ValuePermutation random_permutation(std::mt19937 &rng, const std::vector<Value> &universe)
    {
        std::vector<Value> image = universe;
        std::shuffle(image.begin(), image.end(), rng);
        std::vector<std::pair<Value, Value>> pairs;
        for (std::size_t i = 0; i < universe.size(); ++i)
            if (image[i] != universe[i])
                pairs.emplace_back(universe[i], image[i]);
        return ValuePermutation::from_pairs(universe, pairs);
    }
}

ProblemState random_instance(const RandomSpec &spec, std::mt19937 &rng)
{
    if (spec.n < 1 || spec.d < 1 || spec.k < 1)
        throw UsageError("random instance needs n, d, k all at least 1");

    ProblemState state;
    ConstraintDescriptor c;
    c.kind = spec.kind;
    c.name = "c0";

    switch (spec.kind) {
    case ConstraintKind::NValue: {
        auto pool = iota_pool(1, spec.k);
        c.scope = add_scope(state, rng, "X", spec.n, pool, spec.d);
        c.scope.push_back(
            state.add_variable("N", Domain(subset(rng, iota_pool(0, spec.n + 1), spec.d))));
        break;
    }
    case ConstraintKind::Uses: {
        // Y universe is the parameter; X may also hold values Y cannot take
        auto y_pool = iota_pool(1, spec.k);
        auto x_pool = iota_pool(1, spec.k + 2);
        int m = pick(rng, 1, spec.n);
        auto x = add_scope(state, rng, "X", spec.n, x_pool, spec.d);
        auto y = add_scope(state, rng, "Y", m, y_pool, spec.d);
        c.split = spec.n;
        c.scope = std::move(x);
        c.scope.insert(c.scope.end(), y.begin(), y.end());
        break;
    }
    case ConstraintKind::CardPath: {
        int p = pick(rng, 1, std::min(3, spec.n));
        auto pool = iota_pool(1, std::max(2, spec.d));
        c.scope = add_scope(state, rng, "X", spec.n, pool, spec.d);
        c.scope.push_back(state.add_variable("N",
            Domain(subset(rng, iota_pool(0, spec.n - p + 2), spec.d))));
        c.arity = p;
        if (p == 2 && pick(rng, 0, 1) == 0) {
            const char *names[] = {"equal", "not-equal", "less-than"};
            c.builtin = names[pick(rng, 0, 2)];
        }
        else {
            std::set<std::vector<Value>> rows;
            int want = pick(rng, 1, 4);
            for (int r = 0; r < want; ++r) {
                std::vector<Value> row;
                for (int i = 0; i < p; ++i)
                    row.push_back(pool[static_cast<std::size_t>(
                        pick(rng, 0, static_cast<int>(pool.size()) - 1))]);
                rows.insert(std::move(row));
            }
            c.tuples.assign(rows.begin(), rows.end());
        }
        break;
    }
    case ConstraintKind::ValSymBreak: {
        auto pool = iota_pool(1, std::max(2, spec.k));
        c.scope = add_scope(state, rng, "X", spec.n, pool, spec.d);
        int sigmas = pick(rng, 1, 3);
        for (int s = 0; s < sigmas; ++s)
            c.sigmas.push_back(random_permutation(rng, pool));
        break;
    }
    case ConstraintKind::Disjoint: {
        // k shared values plus private tails on both sides
        auto shared = iota_pool(1, spec.k);
        auto x_pool = shared, y_pool = shared;
        auto x_extra = iota_pool(spec.k + 1, 2);
        auto y_extra = iota_pool(spec.k + 3, 2);
        x_pool.insert(x_pool.end(), x_extra.begin(), x_extra.end());
        y_pool.insert(y_pool.end(), y_extra.begin(), y_extra.end());
        int m = pick(rng, 1, spec.n);
        auto x = add_scope(state, rng, "X", spec.n, x_pool, spec.d);
        auto y = add_scope(state, rng, "Y", m, y_pool, spec.d);
        c.split = spec.n;
        c.scope = std::move(x);
        c.scope.insert(c.scope.end(), y.begin(), y.end());
        break;
    }
    case ConstraintKind::AmongSet: {
        auto universe = iota_pool(1, std::min(spec.d, 4));
        auto [lb, ub] = random_bounds(rng, universe, spec.k);
        auto x_pool = iota_pool(1, static_cast<int>(universe.size()) + 2);
        c.scope = add_scope(state, rng, "X", spec.n, x_pool, spec.d);
        c.setvars.push_back(state.add_set_variable("S", universe, lb, ub));
        c.scope.push_back(
            state.add_variable("N", Domain(subset(rng, iota_pool(0, spec.n + 1), spec.d))));
        break;
    }
    case ConstraintKind::Roots: {
        auto positions = iota_pool(1, spec.n); // S universe is fixed by shape
        auto t_universe = iota_pool(1, std::max(2, spec.k));
        auto x_pool = iota_pool(1, static_cast<int>(t_universe.size()) + 1);
        c.scope = add_scope(state, rng, "X", spec.n, x_pool, spec.d);
        auto [s_lb, s_ub] = random_bounds(rng, positions, spec.n);
        auto [t_lb, t_ub] = random_bounds(rng, t_universe, spec.k);
        c.setvars.push_back(state.add_set_variable("S", positions, s_lb, s_ub));
        c.setvars.push_back(state.add_set_variable("T", t_universe, t_lb, t_ub));
        break;
    }
    case ConstraintKind::SumEq: {
        auto pool = iota_pool(0, spec.k + 2);
        c.scope = add_scope(state, rng, "X", spec.n, pool, spec.d);
        long long lo = 0, hi = 0;
        for (VarId id : c.scope) {
            lo += state.dom(id).min();
            hi += state.dom(id).max();
        }
        auto span = iota_pool(static_cast<Value>(lo - 1), static_cast<int>(hi - lo) + 3);
        c.scope.push_back(state.add_variable("T", Domain(subset(rng, span, spec.d))));
        break;
    }
    case ConstraintKind::Extensional: {
        auto pool = iota_pool(1, std::max(2, spec.d));
        c.scope = add_scope(state, rng, "X", spec.n, pool, spec.d);
        std::set<std::vector<Value>> rows;
        int want = pick(rng, 1, 5);
        for (int r = 0; r < want; ++r) {
            std::vector<Value> row;
            for (int i = 0; i < spec.n; ++i)
                row.push_back(pool[static_cast<std::size_t>(
                    pick(rng, 0, static_cast<int>(pool.size()) - 1))]);
            rows.insert(std::move(row));
        }
        c.tuples.assign(rows.begin(), rows.end());
        break;
    }
    }

    state.constraints.push_back(std::move(c));
    return state;
}

std::vector<std::vector<Value>> random_set_collection(std::mt19937 &rng, int max_sets,
    int max_universe)
{
    int count = pick(rng, 1, max_sets);
    auto universe = iota_pool(1, max_universe);
    std::vector<std::vector<Value>> sets;
    for (int i = 0; i < count; ++i)
        sets.push_back(subset(rng, universe, max_universe));
    return sets;
}

ProblemState hitting_set_instance(const std::vector<std::vector<Value>> &sets, int k)
{
    if (sets.empty())
        throw UsageError("hitting set needs at least one set");
    if (k < 0)
        throw UsageError("hitting set budget must be at least 0");

    ProblemState state;
    ConstraintDescriptor c;
    c.kind = ConstraintKind::NValue;
    c.name = "hitting";

    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto values = sets[i];
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (values.empty())
            throw UsageError("set " + std::to_string(i + 1) + " is empty, nothing can hit it");
        c.scope.push_back(
            state.add_variable("X" + std::to_string(i + 1), Domain(std::move(values))));
    }

    // N counts the distinct picks; capping it at k asks for a small hitting
    // set (0 is never reachable with a nonempty scope but belongs to the
    // encoding: a budget of 0 must wipe out)
    std::vector<Value> budget;
    for (Value v = 0; v <= k; ++v)
        budget.push_back(v);
    c.scope.push_back(state.add_variable("N", Domain(std::move(budget))));

    state.constraints.push_back(std::move(c));
    return state;
}

} // namespace fptprop::gen
