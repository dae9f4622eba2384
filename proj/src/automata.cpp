#include <fptprop/automata.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

namespace fptprop::automata {

namespace {
    void check_subset_width(std::size_t k, int cap, std::string_view what)
    {
        int limit = std::min(cap, hard_bitmask_cap);
        if (static_cast<int>(k) > limit)
            throw ParameterTooLarge(std::string(what) + " needs " + std::to_string(k) +
                " subset bits, cap is " + std::to_string(limit));
    }

    std::vector<Value> sorted_unique(std::vector<Value> values)
    {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        return values;
    }

    // index of v in a sorted universe, nullopt when absent
    std::optional<std::size_t> index_in(const std::vector<Value> &universe, Value v)
    {
        auto it = std::lower_bound(universe.begin(), universe.end(), v);
        if (it == universe.end() || *it != v)
            return std::nullopt;
        return static_cast<std::size_t>(it - universe.begin());
    }
}

regular::Automaton nvalue_automaton(const NValueParams &params)
{
    auto universe = sorted_unique(params.universe);
    check_subset_width(universe.size(), params.bitmask_cap, "nvalue universe");

    const auto k = universe.size();
    const regular::StateId sink = regular::StateId{1} << k; // lone accepting state

    regular::Automaton automaton;
    automaton.n_layers = params.n + 1;
    automaton.initial = 0;
    automaton.layer_state_bound = (regular::StateId{1} << k) + 1;
    automaton.transition = [universe, n = params.n, sink](int layer, regular::StateId q,
                               Value v) -> std::optional<regular::StateId> {
        if (layer < n) {
            auto idx = index_in(universe, v);
            if (!idx)
                return std::nullopt;
            return q | (regular::StateId{1} << *idx);
        }
        // final layer reads N
        if (v >= 0 && std::popcount(q) == v)
            return sink;
        return std::nullopt;
    };
    automaton.accepting = [sink](regular::StateId s) { return s == sink; };
    return automaton;
}

regular::Automaton uses_automaton(const UsesParams &params)
{
    auto universe = sorted_unique(params.y_universe);
    check_subset_width(universe.size(), params.bitmask_cap, "uses y-universe");

    regular::Automaton automaton;
    automaton.n_layers = params.m + params.n;
    automaton.initial = 0;
    automaton.layer_state_bound = regular::StateId{1} << universe.size();
    automaton.transition = [universe, m = params.m](int layer, regular::StateId q,
                               Value v) -> std::optional<regular::StateId> {
        auto idx = index_in(universe, v);
        if (layer < m) {
            if (!idx)
                return std::nullopt; // Y value outside its declared universe
            return q | (regular::StateId{1} << *idx);
        }
        // X side: accepted iff the value was collected, state unchanged
        if (!idx || !(q & (regular::StateId{1} << *idx)))
            return std::nullopt;
        return q;
    };
    automaton.accepting = [](regular::StateId) { return true; };
    return automaton;
}

regular::Automaton cardpath_automaton(const CardPathParams &params)
{
    if (params.p < 1)
        throw UsageError("cardpath arity must be at least 1");
    if (params.n < params.p)
        throw UsageError("cardpath needs a chain at least as long as its arity");
    if (static_cast<int>(params.universes.size()) != params.n)
        throw UsageError("cardpath expects one value universe per chain position");
    if (!params.allowed)
        throw UsageError("cardpath needs a tuple predicate");

    std::vector<Value> joint;
    for (const auto &u : params.universes)
        joint.insert(joint.end(), u.begin(), u.end());
    joint = sorted_unique(joint);

    // A state packs (window, count): windows of length 0..p-1 over the joint
    // universe get codes 0..W-1, the full key is count * W + window_code.
    const auto base = std::max<std::uint64_t>(joint.size(), 1);
    std::vector<std::uint64_t> offset(static_cast<std::size_t>(params.p), 0);
    std::uint64_t window_codes = 0, power = 1;
    for (int len = 0; len < params.p; ++len) {
        offset[static_cast<std::size_t>(len)] = window_codes;
        if (window_codes > std::numeric_limits<std::uint64_t>::max() - power)
            throw ParameterTooLarge("cardpath window space overflows the state packing");
        window_codes += power;
        if (len + 1 < params.p) {
            if (power > std::numeric_limits<std::uint64_t>::max() / base)
                throw ParameterTooLarge("cardpath window space overflows the state packing");
            power *= base;
        }
    }
    const auto counts = static_cast<std::uint64_t>(params.n) + 1;
    if (window_codes != 0 &&
        counts >= std::numeric_limits<std::uint64_t>::max() / window_codes)
        throw ParameterTooLarge("cardpath state space overflows the state packing: " +
            std::to_string(window_codes) + " windows x " + std::to_string(counts) + " counts");
    const std::uint64_t sink = window_codes * counts; // accepting state past every packed key

    // window helpers over packed codes
    auto decode_window = [base, offset, p = params.p](std::uint64_t code,
                             std::vector<std::size_t> &digits) {
        int len = p - 1;
        while (len > 0 && code < offset[static_cast<std::size_t>(len)])
            --len;
        code -= offset[static_cast<std::size_t>(len)];
        digits.resize(static_cast<std::size_t>(len));
        for (auto &digit : digits) {
            digit = code % base;
            code /= base;
        }
    };

    regular::Automaton automaton;
    automaton.n_layers = params.n + 1;
    automaton.initial = 0;
    automaton.layer_state_bound = sink + 1;
    automaton.transition = [joint, base, offset, window_codes, sink, decode_window,
                               p = params.p, n = params.n, allowed = params.allowed](int layer,
                               regular::StateId state, Value v) -> std::optional<regular::StateId> {
        const std::uint64_t count = state / window_codes;
        const std::uint64_t window_code = state % window_codes;
        std::vector<std::size_t> digits;
        decode_window(window_code, digits);

        if (layer == n) {
            // reading the count variable
            if (v >= 0 && static_cast<std::uint64_t>(v) == count)
                return sink;
            return std::nullopt;
        }

        auto idx = index_in(joint, v);
        if (!idx)
            return std::nullopt;

        std::uint64_t next_count = count;
        std::vector<std::size_t> next_digits;
        if (static_cast<int>(digits.size()) < p - 1) {
            // warm-up: the window is still filling
            next_digits = digits;
            next_digits.push_back(*idx);
        }
        else {
            std::vector<Value> tuple(static_cast<std::size_t>(p));
            for (std::size_t j = 0; j < digits.size(); ++j)
                tuple[j] = joint[digits[j]];
            tuple[static_cast<std::size_t>(p) - 1] = v;
            if (allowed(tuple))
                ++next_count;
            next_digits.assign(digits.begin() + (p > 1 ? 1 : 0), digits.end());
            if (p > 1)
                next_digits.push_back(*idx);
        }

        std::uint64_t code = offset[next_digits.size()];
        std::uint64_t scale = 1;
        for (auto digit : next_digits) {
            code += digit * scale;
            scale *= base;
        }
        return next_count * window_codes + code;
    };
    automaton.accepting = [sink](regular::StateId s) { return s == sink; };
    return automaton;
}

TuplePredicate builtin_predicate(std::string_view name, int p)
{
    if (p != 2)
        throw UsageError("builtin comparators are binary, got arity " + std::to_string(p));
    if (name == "equal")
        return [](std::span<const Value> t) { return t[0] == t[1]; };
    if (name == "not-equal")
        return [](std::span<const Value> t) { return t[0] != t[1]; };
    if (name == "less-than")
        return [](std::span<const Value> t) { return t[0] < t[1]; };
    throw UsageError("unknown builtin comparator '" + std::string(name) +
        "' (have: equal, not-equal, less-than)");
}

TuplePredicate table_predicate(std::vector<std::vector<Value>> rows, int p)
{
    for (const auto &row : rows)
        if (static_cast<int>(row.size()) != p)
            throw UsageError("tuple of arity " + std::to_string(row.size()) +
                " in a table of arity " + std::to_string(p));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return [rows = std::move(rows)](std::span<const Value> t) {
        return std::binary_search(rows.begin(), rows.end(),
            std::vector<Value>(t.begin(), t.end()));
    };
}

regular::Automaton valsymbreak_automaton(const SymmetrySet &params, int n)
{
    check_subset_width(params.sigmas.size(), params.bitmask_cap, "symmetry set");

    regular::Automaton automaton;
    automaton.n_layers = n;
    automaton.initial = 0;
    automaton.layer_state_bound = regular::StateId{1} << params.sigmas.size();
    automaton.transition = [sigmas = params.sigmas](int, regular::StateId q,
                               Value v) -> std::optional<regular::StateId> {
        regular::StateId next = q;
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            if (q & (regular::StateId{1} << j))
                continue; // already broken strictly, anything goes
            Value sv = sigmas[j].apply(v);
            if (v > sv)
                return std::nullopt;
            if (v < sv)
                next |= regular::StateId{1} << j;
        }
        return next;
    };
    automaton.accepting = [](regular::StateId) { return true; };
    return automaton;
}

} // namespace fptprop::automata
