#include <fptprop/core.hpp>

#include <algorithm>

namespace fptprop {

Domain::Domain(std::vector<Value> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

Domain Domain::singleton(Value v)
{
    return Domain{{v}};
}

Domain Domain::range(Value lo, Value hi)
{
    if (lo > hi)
        throw UsageError("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
    std::vector<Value> vals;
    vals.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Value v = lo; v <= hi; ++v)
        vals.push_back(v);
    return Domain{std::move(vals)};
}

bool Domain::contains(Value v) const
{
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool Domain::remove(Value v)
{
    auto it = std::lower_bound(values_.begin(), values_.end(), v);
    if (it == values_.end() || *it != v)
        return false;
    values_.erase(it);
    return true;
}

Value Domain::min() const
{
    if (values_.empty())
        throw UsageError("min() on empty domain");
    return values_.front();
}

Value Domain::max() const
{
    if (values_.empty())
        throw UsageError("max() on empty domain");
    return values_.back();
}

std::string_view kind_name(ConstraintKind kind)
{
    switch (kind) {
    case ConstraintKind::NValue: return "nvalue";
    case ConstraintKind::Uses: return "uses";
    case ConstraintKind::CardPath: return "cardpath";
    case ConstraintKind::ValSymBreak: return "valsymbreak";
    case ConstraintKind::Disjoint: return "disjoint";
    case ConstraintKind::AmongSet: return "among";
    case ConstraintKind::Roots: return "roots";
    case ConstraintKind::SumEq: return "sum";
    case ConstraintKind::Extensional: return "table";
    }
    throw ContractViolation("unknown constraint kind");
}

std::optional<ConstraintKind> kind_from_name(std::string_view name)
{
    for (auto kind : {ConstraintKind::NValue, ConstraintKind::Uses, ConstraintKind::CardPath,
             ConstraintKind::ValSymBreak, ConstraintKind::Disjoint, ConstraintKind::AmongSet,
             ConstraintKind::Roots, ConstraintKind::SumEq, ConstraintKind::Extensional})
        if (kind_name(kind) == name)
            return kind;
    return std::nullopt;
}

ValuePermutation ValuePermutation::from_pairs(std::vector<Value> universe,
    const std::vector<std::pair<Value, Value>> &pairs)
{
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    ValuePermutation sigma;
    sigma.universe_ = universe;
    sigma.image_.resize(universe.size());

    auto index_of = [&](Value v) -> std::size_t {
        auto it = std::lower_bound(universe.begin(), universe.end(), v);
        if (it == universe.end() || *it != v)
            throw UsageError("permutation entry " + std::to_string(v) + " outside universe");
        return static_cast<std::size_t>(it - universe.begin());
    };

    std::vector<bool> listed(universe.size(), false);
    for (std::size_t i = 0; i < universe.size(); ++i)
        sigma.image_[i] = universe[i];
    for (const auto &[from, to] : pairs) {
        auto i = index_of(from);
        index_of(to);
        if (listed[i])
            throw UsageError("duplicate permutation entry for " + std::to_string(from));
        listed[i] = true;
        sigma.image_[i] = to;
    }

    auto sorted_image = sigma.image_;
    std::sort(sorted_image.begin(), sorted_image.end());
    if (sorted_image != universe)
        throw UsageError("permutation is not a bijection of its universe");
    return sigma;
}

ValuePermutation ValuePermutation::identity(std::vector<Value> universe)
{
    return from_pairs(std::move(universe), {});
}

bool ValuePermutation::defined_on(Value v) const
{
    return std::binary_search(universe_.begin(), universe_.end(), v);
}

Value ValuePermutation::apply(Value v) const
{
    auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
    if (it == universe_.end() || *it != v)
        throw UsageError("permutation undefined on value " + std::to_string(v));
    return image_[static_cast<std::size_t>(it - universe_.begin())];
}

std::string_view status_name(FilterStatus status)
{
    switch (status) {
    case FilterStatus::Unchanged: return "unchanged";
    case FilterStatus::Pruned: return "pruned";
    case FilterStatus::Wipeout: return "wipeout";
    }
    throw ContractViolation("unknown filter status");
}

VarId ProblemState::add_variable(std::string name, Domain domain)
{
    if (domain.empty())
        throw UsageError("variable " + name + " declared with an empty domain");
    VarId id = static_cast<VarId>(variables.size());
    variables.push_back({id, std::move(name), std::move(domain)});
    return id;
}

int ProblemState::add_set_variable(std::string name, std::vector<Value> universe,
    const std::vector<Value> &lb, const std::vector<Value> &ub)
{
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    auto member = [](const std::vector<Value> &vals, Value v) {
        return std::find(vals.begin(), vals.end(), v) != vals.end();
    };
    for (Value v : lb)
        if (!member(universe, v))
            throw UsageError("set " + name + ": lb value " + std::to_string(v) + " outside universe");
    for (Value v : ub)
        if (!member(universe, v))
            throw UsageError("set " + name + ": ub value " + std::to_string(v) + " outside universe");
    for (Value v : lb)
        if (!member(ub, v))
            throw UsageError("set " + name + ": lb value " + std::to_string(v) + " missing from ub");

    SetVariable set;
    set.name = name;
    set.universe = universe;
    for (Value v : universe) {
        Domain bit;
        if (member(lb, v))
            bit = Domain::singleton(1);
        else if (member(ub, v))
            bit = Domain{{0, 1}};
        else
            bit = Domain::singleton(0);
        set.bits.push_back(add_variable(name + "." + std::to_string(v), std::move(bit)));
    }
    sets.push_back(std::move(set));
    return static_cast<int>(sets.size()) - 1;
}

const FDVariable &ProblemState::var(VarId id) const
{
    if (id < 0 || static_cast<std::size_t>(id) >= variables.size())
        throw UsageError("unknown variable id " + std::to_string(id));
    return variables[static_cast<std::size_t>(id)];
}

FDVariable &ProblemState::var(VarId id)
{
    if (id < 0 || static_cast<std::size_t>(id) >= variables.size())
        throw UsageError("unknown variable id " + std::to_string(id));
    return variables[static_cast<std::size_t>(id)];
}

std::vector<Value> ProblemState::set_lb(int set_index) const
{
    const auto &set = sets.at(static_cast<std::size_t>(set_index));
    std::vector<Value> lb;
    for (std::size_t t = 0; t < set.universe.size(); ++t) {
        const auto &bit = dom(set.bits[t]);
        if (bit.size() == 1 && bit.min() == 1)
            lb.push_back(set.universe[t]);
    }
    return lb;
}

std::vector<Value> ProblemState::set_ub(int set_index) const
{
    const auto &set = sets.at(static_cast<std::size_t>(set_index));
    std::vector<Value> ub;
    for (std::size_t t = 0; t < set.universe.size(); ++t)
        if (dom(set.bits[t]).contains(1))
            ub.push_back(set.universe[t]);
    return ub;
}

FilterOutcome remove_value(ProblemState &state, VarId id, Value v)
{
    auto &domain = state.var(id).domain;
    if (!domain.contains(v))
        return FilterOutcome::unchanged();
    if (domain.size() == 1)
        return FilterOutcome::wipeout();
    domain.remove(v);
    FilterOutcome out;
    out.status = FilterStatus::Pruned;
    out.removed[id] = {v};
    return out;
}

bool is_fixed(const ProblemState &state, VarId id)
{
    return state.dom(id).size() == 1;
}

Value assigned_value(const ProblemState &state, VarId id)
{
    const auto &domain = state.dom(id);
    if (domain.size() != 1)
        throw UsageError("variable " + state.var(id).name + " is not fixed");
    return domain.min();
}

FilterOutcome apply_domains(ProblemState &state,
    const std::vector<std::pair<VarId, Domain>> &replacements)
{
    for (const auto &[id, domain] : replacements) {
        const auto &current = state.dom(id);
        for (Value v : domain)
            if (!current.contains(v))
                throw ContractViolation("propagator added value " + std::to_string(v) +
                    " to variable " + state.var(id).name);
        if (domain.empty())
            return FilterOutcome::wipeout();
    }

    FilterOutcome out;
    for (const auto &[id, domain] : replacements) {
        const auto &current = state.dom(id);
        if (current == domain)
            continue;
        std::vector<Value> gone;
        for (Value v : current)
            if (!domain.contains(v))
                gone.push_back(v);
        out.removed[id] = std::move(gone);
        state.var(id).domain = domain;
    }
    out.status = out.removed.empty() ? FilterStatus::Unchanged : FilterStatus::Pruned;
    return out;
}

} // namespace fptprop
