#include <fptprop/report.hpp>

#include <fptprop/propagators.hpp>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace fptprop::report {

namespace {
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

Report build_report(const ProblemState &before, const ProblemState &after,
    const FilterOutcome &outcome, const FixpointStats &stats, const std::string &instance_name,
    double wall_ms)
{
    Report r;
    r.instance = instance_name;
    r.status = outcome.wiped() ? "wipeout" : "fixpoint";
    r.wiped_by = stats.wiped_by;
    r.wall_ms = wall_ms;

    std::set<VarId> bit_vars;
    for (const auto &set : before.sets)
        bit_vars.insert(set.bits.begin(), set.bits.end());

    for (const auto &v : before.variables) {
        if (bit_vars.count(v.id))
            continue;
        r.variables.push_back(
            {v.name, v.domain.values(), after.var(v.id).domain.values()});
    }

    for (std::size_t s = 0; s < before.sets.size(); ++s) {
        int idx = static_cast<int>(s);
        r.sets.push_back({before.sets[s].name, before.set_lb(idx), before.set_ub(idx),
            after.set_lb(idx), after.set_ub(idx)});
    }

    for (std::size_t i = 0; i < before.constraints.size(); ++i) {
        const auto &c = before.constraints[i];
        ConstraintLine line;
        line.name = c.name;
        line.kind = std::string(kind_name(c.kind));
        line.parameter = fpt_parameter(c, before);
        line.invocations = i < stats.invocations.size() ? stats.invocations[i] : 0;
        r.constraints.push_back(std::move(line));
    }
    return r;
}

std::string render_text(const Report &r)
{
    std::ostringstream out;
    out << "instance: " << r.instance << '\n';
    out << "status:   " << r.status;
    if (!r.wiped_by.empty())
        out << " (by " << r.wiped_by << ")";
    out << '\n';

    if (!r.variables.empty()) {
        out << "variables:\n";
        std::size_t width = 0;
        for (const auto &v : r.variables)
            width = std::max(width, v.name.size());
        for (const auto &v : r.variables) {
            out << "  " << v.name << std::string(width - v.name.size(), ' ') << "  "
                << values_text(v.before);
            if (v.after != v.before)
                out << " -> " << values_text(v.after);
            out << '\n';
        }
    }

    if (!r.sets.empty()) {
        out << "sets:\n";
        for (const auto &s : r.sets) {
            out << "  " << s.name << "  lb " << values_text(s.lb_before);
            if (s.lb_after != s.lb_before)
                out << " -> " << values_text(s.lb_after);
            out << "  ub " << values_text(s.ub_before);
            if (s.ub_after != s.ub_before)
                out << " -> " << values_text(s.ub_after);
            out << '\n';
        }
    }

    if (!r.constraints.empty()) {
        out << "constraints:\n";
        for (const auto &c : r.constraints)
            out << "  " << c.name << "  " << c.kind << "  parameter=" << c.parameter
                << "  invocations=" << c.invocations << '\n';
    }

    out << "elapsed:  " << r.wall_ms << " ms\n";
    return out.str();
}

std::string render_json(const Report &r)
{
    nlohmann::ordered_json j;
    j["instance"] = r.instance;
    j["status"] = r.status;
    if (!r.wiped_by.empty())
        j["wiped_by"] = r.wiped_by;

    j["variables"] = nlohmann::ordered_json::array();
    for (const auto &v : r.variables) {
        nlohmann::ordered_json line;
        line["name"] = v.name;
        line["before"] = v.before;
        line["after"] = v.after;
        j["variables"].push_back(std::move(line));
    }

    j["sets"] = nlohmann::ordered_json::array();
    for (const auto &s : r.sets) {
        nlohmann::ordered_json line;
        line["name"] = s.name;
        line["lb_before"] = s.lb_before;
        line["ub_before"] = s.ub_before;
        line["lb_after"] = s.lb_after;
        line["ub_after"] = s.ub_after;
        j["sets"].push_back(std::move(line));
    }

    j["constraints"] = nlohmann::ordered_json::array();
    for (const auto &c : r.constraints) {
        nlohmann::ordered_json line;
        line["name"] = c.name;
        line["kind"] = c.kind;
        line["parameter"] = c.parameter;
        line["invocations"] = c.invocations;
        j["constraints"].push_back(std::move(line));
    }

    j["wall_ms"] = r.wall_ms;
    return j.dump(2) + "\n";
}

} // namespace fptprop::report
