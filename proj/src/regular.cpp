#include <fptprop/regular.hpp>

#include <algorithm>
#include <string>

namespace fptprop::regular {

bool LayeredGraph::arc_live(int layer, const Arc &arc) const
{
    const auto &next = layers[static_cast<std::size_t>(layer) + 1];
    auto it = next.find(arc.to);
    return it != next.end() && it->second;
}

bool LayeredGraph::has_accepting_path() const
{
    const auto &first = layers.front();
    return std::any_of(first.begin(), first.end(), [](const auto &entry) { return entry.second; });
}

std::vector<Value> LayeredGraph::live_values(int layer) const
{
    std::vector<Value> values;
    for (const auto &arc : arcs[static_cast<std::size_t>(layer)])
        if (arc_live(layer, arc))
            values.push_back(arc.value);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

LayeredGraph unfold(const Automaton &automaton, const ProblemState &state,
    std::span<const VarId> scope)
{
    if (static_cast<int>(scope.size()) != automaton.n_layers)
        throw UsageError("automaton expects " + std::to_string(automaton.n_layers) +
            " scope variables, got " + std::to_string(scope.size()));

    LayeredGraph graph;
    graph.n_layers = automaton.n_layers;
    graph.layers.resize(scope.size() + 1);
    graph.arcs.resize(scope.size());
    graph.layers[0].emplace(automaton.initial, false);

    // forward pass
    for (std::size_t i = 0; i < scope.size(); ++i) {
        const auto &values = state.dom(scope[i]).values();
        for (const auto &[from, flag] : graph.layers[i]) {
            for (Value v : values) {
                auto to = automaton.transition(static_cast<int>(i), from, v);
                if (!to)
                    continue;
                graph.layers[i + 1].emplace(*to, false);
                graph.arcs[i].push_back({from, v, *to});
            }
        }
        if (automaton.layer_state_bound != 0 &&
            graph.layers[i + 1].size() > automaton.layer_state_bound)
            throw ContractViolation("layer " + std::to_string(i + 1) + " materialized " +
                std::to_string(graph.layers[i + 1].size()) + " states, bound is " +
                std::to_string(automaton.layer_state_bound));
    }

    // backward pass
    for (auto &[final_state, flag] : graph.layers.back())
        flag = automaton.accepting(final_state);
    for (std::size_t i = scope.size(); i-- > 0;) {
        const auto &next = graph.layers[i + 1];
        for (const auto &arc : graph.arcs[i]) {
            auto it = next.find(arc.to);
            if (it != next.end() && it->second)
                graph.layers[i].find(arc.from)->second = true;
        }
    }

    return graph;
}

FilterOutcome filter(const Automaton &automaton, ProblemState &state,
    std::span<const VarId> scope)
{
    auto graph = unfold(automaton, state, scope);
    if (!graph.has_accepting_path())
        return FilterOutcome::wipeout();

    // repeated scope variables keep the intersection over their occurrences
    std::map<VarId, std::vector<Value>> kept;
    for (std::size_t i = 0; i < scope.size(); ++i) {
        auto supported = graph.live_values(static_cast<int>(i));
        auto [it, fresh] = kept.try_emplace(scope[i], supported);
        if (!fresh) {
            std::vector<Value> both;
            std::set_intersection(it->second.begin(), it->second.end(), supported.begin(),
                supported.end(), std::back_inserter(both));
            it->second = std::move(both);
        }
    }

    std::vector<std::pair<VarId, Domain>> replacements;
    replacements.reserve(kept.size());
    for (auto &[id, values] : kept)
        replacements.emplace_back(id, Domain{std::move(values)});
    return apply_domains(state, replacements);
}

bool accepts(const Automaton &automaton, std::span<const Value> word)
{
    if (static_cast<int>(word.size()) != automaton.n_layers)
        throw UsageError("word length does not match automaton layer count");
    StateId state = automaton.initial;
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto next = automaton.transition(static_cast<int>(i), state, word[i]);
        if (!next)
            return false;
        state = *next;
    }
    return automaton.accepting(state);
}

} // namespace fptprop::regular
