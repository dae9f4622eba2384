#include <fptprop/oracle.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace fptprop::oracle {

long long product_size(const ProblemState &state, std::span<const VarId> scope, long long cap)
{
    long long product = 1;
    for (VarId id : scope) {
        product *= static_cast<long long>(state.dom(id).size());
        if (product > cap)
            throw UsageError("assignment space exceeds enumeration cap " + std::to_string(cap) +
                " (at least " + std::to_string(product) + " assignments)");
    }
    return product;
}

void for_each_assignment(const ProblemState &state, std::span<const VarId> scope,
    const std::function<void(std::span<const Value>)> &fn, long long cap)
{
    product_size(state, scope, cap);
    if (scope.empty()) {
        fn({});
        return;
    }

    std::vector<std::size_t> index(scope.size(), 0);
    std::vector<Value> assignment(scope.size());
    for (std::size_t i = 0; i < scope.size(); ++i)
        assignment[i] = state.dom(scope[i]).values()[0];

    for (;;) {
        fn(assignment);
        // odometer step, last position fastest
        std::size_t pos = scope.size();
        while (pos > 0) {
            --pos;
            const auto &values = state.dom(scope[pos]).values();
            if (++index[pos] < values.size()) {
                assignment[pos] = values[index[pos]];
                break;
            }
            index[pos] = 0;
            assignment[pos] = values[0];
            if (pos == 0)
                return;
        }
    }
}

FilterOutcome brute_force_dc(const Checker &check, ProblemState &state,
    std::span<const VarId> scope, long long cap)
{
    // supported[i] collects per-occurrence support; repeated variables keep
    // the intersection over their occurrences
    std::vector<std::set<Value>> supported(scope.size());
    for_each_assignment(state, scope,
        [&](std::span<const Value> assignment) {
            if (!check(assignment))
                return;
            for (std::size_t i = 0; i < scope.size(); ++i)
                supported[i].insert(assignment[i]);
        },
        cap);

    std::map<VarId, std::vector<Value>> kept;
    for (std::size_t i = 0; i < scope.size(); ++i) {
        std::vector<Value> occurrence(supported[i].begin(), supported[i].end());
        auto [it, fresh] = kept.try_emplace(scope[i], occurrence);
        if (!fresh) {
            std::vector<Value> both;
            std::set_intersection(it->second.begin(), it->second.end(), occurrence.begin(),
                occurrence.end(), std::back_inserter(both));
            it->second = std::move(both);
        }
    }

    std::vector<std::pair<VarId, Domain>> replacements;
    replacements.reserve(kept.size());
    for (auto &[id, values] : kept)
        replacements.emplace_back(id, Domain{std::move(values)});
    return apply_domains(state, replacements);
}

std::vector<std::vector<Value>> enumerate_solutions(const Checker &check,
    const ProblemState &state, std::span<const VarId> scope, long long cap)
{
    std::vector<std::vector<Value>> solutions;
    for_each_assignment(state, scope,
        [&](std::span<const Value> assignment) {
            if (check(assignment))
                solutions.emplace_back(assignment.begin(), assignment.end());
        },
        cap);
    return solutions;
}

Checker nvalue_check(int n)
{
    return [n](std::span<const Value> a) {
        std::set<Value> used(a.begin(), a.begin() + n);
        return static_cast<Value>(used.size()) == a[static_cast<std::size_t>(n)];
    };
}

Checker uses_check(int n, int m)
{
    return [n, m](std::span<const Value> a) {
        auto y_begin = a.begin() + n;
        auto y_end = y_begin + m;
        for (int i = 0; i < n; ++i)
            if (std::find(y_begin, y_end, a[static_cast<std::size_t>(i)]) == y_end)
                return false;
        return true;
    };
}

Checker cardpath_check(int p, std::function<bool(std::span<const Value>)> allowed, int n)
{
    return [p, n, allowed = std::move(allowed)](std::span<const Value> a) {
        int r = 0;
        for (int i = 0; i + p <= n; ++i)
            if (allowed(a.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(p))))
                ++r;
        return r == a[static_cast<std::size_t>(n)];
    };
}

Checker valsymbreak_check(std::vector<ValuePermutation> sigmas)
{
    return [sigmas = std::move(sigmas)](std::span<const Value> a) {
        for (const auto &sigma : sigmas) {
            // lexicographic test a <= sigma(a)
            for (Value v : a) {
                Value sv = sigma.apply(v);
                if (v < sv)
                    break;
                if (v > sv)
                    return false;
            }
        }
        return true;
    };
}

Checker disjoint_check(int n, int m)
{
    return [n, m](std::span<const Value> a) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(n + j)])
                    return false;
        return true;
    };
}

Checker among_check(int n, std::vector<Value> universe)
{
    return [n, universe = std::move(universe)](std::span<const Value> a) {
        int count = 0;
        for (int i = 0; i < n; ++i) {
            Value v = a[static_cast<std::size_t>(i)];
            auto it = std::lower_bound(universe.begin(), universe.end(), v);
            if (it != universe.end() && *it == v &&
                a[static_cast<std::size_t>(n) + static_cast<std::size_t>(it - universe.begin())] == 1)
                ++count;
        }
        return count == a[static_cast<std::size_t>(n) + universe.size()];
    };
}

Checker roots_check(int n, std::vector<Value> t_universe)
{
    return [n, t_universe = std::move(t_universe)](std::span<const Value> a) {
        auto in_t = [&](Value v) {
            auto it = std::lower_bound(t_universe.begin(), t_universe.end(), v);
            if (it == t_universe.end() || *it != v)
                return false;
            return a[static_cast<std::size_t>(2 * n) + static_cast<std::size_t>(it - t_universe.begin())] == 1;
        };
        for (int i = 0; i < n; ++i) {
            bool in_s = a[static_cast<std::size_t>(n + i)] == 1;
            if (in_s != in_t(a[static_cast<std::size_t>(i)]))
                return false;
        }
        return true;
    };
}

Checker sum_check(int n)
{
    return [n](std::span<const Value> a) {
        long long total = 0;
        for (int i = 0; i < n; ++i)
            total += a[static_cast<std::size_t>(i)];
        return total == a[static_cast<std::size_t>(n)];
    };
}

Checker table_check(std::vector<std::vector<Value>> rows)
{
    return [rows = std::move(rows)](std::span<const Value> a) {
        for (const auto &row : rows)
            if (row.size() == a.size() && std::equal(row.begin(), row.end(), a.begin()))
                return true;
        return false;
    };
}

Checker all_of(std::vector<std::pair<Checker, std::pair<int, int>>> parts)
{
    return [parts = std::move(parts)](std::span<const Value> a) {
        for (const auto &[check, slice] : parts)
            if (!check(a.subspan(static_cast<std::size_t>(slice.first),
                    static_cast<std::size_t>(slice.second))))
                return false;
        return true;
    };
}

} // namespace fptprop::oracle
