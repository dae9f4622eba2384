#include <fptprop/instance.hpp>

#include <fptprop/propagators.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace fptprop::instance {

namespace {
    struct LineParser {
        std::string_view path;
        int line_no = 0;
        std::string_view text;
        std::size_t pos = 0;

        [[noreturn]] void fail(const std::string &message) const
        {
            throw ParseError(std::string(path) + ":" + std::to_string(line_no) + ": " + message +
                " (column " + std::to_string(pos + 1) + ")");
        }

        void skip_spaces()
        {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                ++pos;
        }

        bool at_end()
        {
            skip_spaces();
            return pos >= text.size();
        }

        bool eat(char c)
        {
            skip_spaces();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        void expect(char c)
        {
            if (!eat(c))
                fail(std::string("expected '") + c + "'");
        }

        bool eat_word(std::string_view word)
        {
            skip_spaces();
            if (text.substr(pos, word.size()) != word)
                return false;
            auto after = pos + word.size();
            if (after < text.size() &&
                (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
                return false;
            pos = after;
            return true;
        }

        std::string ident()
        {
            skip_spaces();
            auto start = pos;
            while (pos < text.size() &&
                (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (pos == start)
                fail("expected a name");
            if (std::isdigit(static_cast<unsigned char>(text[start])))
                fail("names must not start with a digit");
            return std::string(text.substr(start, pos - start));
        }

        Value integer()
        {
            skip_spaces();
            auto start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
                ++pos;
            auto digits = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (pos == digits)
                fail("expected an integer");
            long long parsed = 0;
            try {
                parsed = std::stoll(std::string(text.substr(start, pos - start)));
            }
            catch (const std::out_of_range &) {
                fail("integer out of range");
            }
            if (parsed < value_min || parsed > value_max)
                fail("value " + std::to_string(parsed) + " outside the supported range [" +
                    std::to_string(value_min) + ", " + std::to_string(value_max) + "]");
            return static_cast<Value>(parsed);
        }

        // {1, 2, 5..7} possibly empty
        std::vector<Value> value_set()
        {
            expect('{');
            std::vector<Value> values;
            if (eat('}'))
                return values;
            for (;;) {
                Value lo = integer();
                if (eat('.')) {
                    expect('.');
                    Value hi = integer();
                    if (lo > hi)
                        fail("descending range " + std::to_string(lo) + ".." + std::to_string(hi));
                    if (static_cast<long long>(hi) - lo > 1000000)
                        fail("range wider than one million values");
                    for (Value v = lo; v <= hi; ++v)
                        values.push_back(v);
                }
                else {
                    values.push_back(lo);
                }
                if (eat('}'))
                    return values;
                expect(',');
            }
        }

        std::vector<std::string> name_list()
        {
            expect('[');
            std::vector<std::string> names;
            if (eat(']'))
                return names;
            for (;;) {
                names.push_back(ident());
                if (eat(']'))
                    return names;
                expect(',');
            }
        }

        std::vector<std::vector<Value>> tuple_set(int &arity)
        {
            expect('{');
            std::vector<std::vector<Value>> rows;
            if (eat('}')) {
                arity = 0;
                return rows;
            }
            for (;;) {
                expect('(');
                std::vector<Value> row;
                if (!eat(')')) {
                    for (;;) {
                        row.push_back(integer());
                        if (eat(')'))
                            break;
                        expect(',');
                    }
                }
                if (!rows.empty() && rows.front().size() != row.size())
                    fail("tuples of mixed arity");
                rows.push_back(std::move(row));
                if (eat('}'))
                    break;
                expect(';');
            }
            arity = static_cast<int>(rows.front().size());
            return rows;
        }

        std::vector<std::pair<Value, Value>> pair_set()
        {
            expect('{');
            std::vector<std::pair<Value, Value>> pairs;
            if (eat('}'))
                return pairs;
            for (;;) {
                Value from = integer();
                expect(':');
                Value to = integer();
                pairs.emplace_back(from, to);
                if (eat('}'))
                    return pairs;
                expect(',');
            }
        }
    };

    struct Builder {
        ProblemState state;
        std::map<std::string, VarId> vars;
        std::map<std::string, int> sets;

        void check_fresh(LineParser &p, const std::string &name)
        {
            if (vars.count(name) || sets.count(name))
                p.fail("name '" + name + "' already declared");
        }

        VarId var_ref(LineParser &p, const std::string &name)
        {
            auto it = vars.find(name);
            if (it == vars.end())
                p.fail(sets.count(name) ? "'" + name + "' is a set, expected a variable"
                                        : "unknown variable '" + name + "'");
            return it->second;
        }

        std::vector<VarId> var_refs(LineParser &p, const std::vector<std::string> &names)
        {
            std::vector<VarId> ids;
            ids.reserve(names.size());
            for (const auto &name : names)
                ids.push_back(var_ref(p, name));
            return ids;
        }

        int set_ref(LineParser &p, const std::string &name)
        {
            auto it = sets.find(name);
            if (it == sets.end())
                p.fail(vars.count(name) ? "'" + name + "' is a variable, expected a set"
                                        : "unknown set '" + name + "'");
            return it->second;
        }
    };

    // permutations are written sparsely; close them over everything the
    // constraint can currently see so apply() is total there
    ValuePermutation close_permutation(LineParser &p, const ProblemState &state,
        const std::vector<VarId> &scope, const std::vector<std::pair<Value, Value>> &pairs)
    {
        std::vector<Value> universe;
        for (VarId id : scope)
            universe.insert(universe.end(), state.dom(id).begin(), state.dom(id).end());
        for (const auto &[from, to] : pairs) {
            universe.push_back(from);
            universe.push_back(to);
        }
        try {
            return ValuePermutation::from_pairs(std::move(universe), pairs);
        }
        catch (const UsageError &e) {
            p.fail(e.what());
        }
    }
}

ProblemState parse(std::istream &in, const std::string &path)
{
    Builder b;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        LineParser p{path, line_no, line, 0};
        if (p.at_end())
            continue;

        if (p.eat_word("var")) {
            auto name = p.ident();
            b.check_fresh(p, name);
            p.expect('=');
            auto values = p.value_set();
            if (values.empty())
                p.fail("variable '" + name + "' declared with an empty domain");
            if (!p.at_end())
                p.fail("trailing input after variable declaration");
            b.vars[name] = b.state.add_variable(name, Domain{std::move(values)});
            continue;
        }

        if (p.eat_word("set")) {
            auto name = p.ident();
            b.check_fresh(p, name);
            if (!p.eat_word("universe") || !p.eat('='))
                p.fail("expected universe={...}");
            auto universe = p.value_set();
            std::vector<Value> lb, ub = universe;
            bool saw_ub = false;
            while (!p.at_end()) {
                if (p.eat_word("lb")) {
                    p.expect('=');
                    lb = p.value_set();
                }
                else if (p.eat_word("ub")) {
                    p.expect('=');
                    ub = p.value_set();
                    saw_ub = true;
                }
                else {
                    p.fail("expected lb={...} or ub={...}");
                }
            }
            if (!saw_ub)
                ub = universe;
            try {
                b.sets[name] = b.state.add_set_variable(name, universe, lb, ub);
            }
            catch (const UsageError &e) {
                p.fail(e.what());
            }
            continue;
        }

        ConstraintDescriptor c;
        c.name = "c" + std::to_string(b.state.constraints.size());

        if (p.eat_word("nvalue")) {
            c.kind = ConstraintKind::NValue;
            c.scope = b.var_refs(p, p.name_list());
            c.scope.push_back(b.var_ref(p, p.ident()));
        }
        else if (bool uses = p.eat_word("uses"); uses || p.eat_word("disjoint")) {
            c.kind = uses ? ConstraintKind::Uses : ConstraintKind::Disjoint;
            auto x = b.var_refs(p, p.name_list());
            auto y = b.var_refs(p, p.name_list());
            c.split = static_cast<int>(x.size());
            c.scope = std::move(x);
            c.scope.insert(c.scope.end(), y.begin(), y.end());
        }
        else if (p.eat_word("cardpath")) {
            c.kind = ConstraintKind::CardPath;
            c.scope = b.var_refs(p, p.name_list());
            c.scope.push_back(b.var_ref(p, p.ident()));
            if (!p.eat_word("p") || !p.eat('='))
                p.fail("expected p=<arity>");
            c.arity = p.integer();
            if (p.eat_word("builtin")) {
                p.expect('=');
                auto start = p.pos;
                while (p.pos < p.text.size() && (std::isalnum(static_cast<unsigned char>(p.text[p.pos])) || p.text[p.pos] == '-'))
                    ++p.pos;
                c.builtin = std::string(p.text.substr(start, p.pos - start));
                if (c.builtin.empty())
                    p.fail("expected a comparator name");
            }
            else if (p.eat_word("tuples")) {
                p.expect('=');
                int arity = 0;
                c.tuples = p.tuple_set(arity);
                if (c.tuples.empty())
                    p.fail("empty tuple table");
            }
            else {
                p.fail("expected builtin=<name> or tuples={...}");
            }
        }
        else if (p.eat_word("valsymbreak")) {
            c.kind = ConstraintKind::ValSymBreak;
            c.scope = b.var_refs(p, p.name_list());
            while (!p.at_end()) {
                if (!p.eat_word("sigma") || !p.eat('='))
                    p.fail("expected sigma={from:to, ...}");
                c.sigmas.push_back(close_permutation(p, b.state, c.scope, p.pair_set()));
            }
            if (c.sigmas.empty())
                p.fail("needs at least one sigma");
        }
        else if (p.eat_word("among")) {
            c.kind = ConstraintKind::AmongSet;
            c.scope = b.var_refs(p, p.name_list());
            c.setvars.push_back(b.set_ref(p, p.ident()));
            c.scope.push_back(b.var_ref(p, p.ident()));
        }
        else if (p.eat_word("roots")) {
            c.kind = ConstraintKind::Roots;
            c.scope = b.var_refs(p, p.name_list());
            c.setvars.push_back(b.set_ref(p, p.ident()));
            c.setvars.push_back(b.set_ref(p, p.ident()));
        }
        else if (p.eat_word("sum")) {
            c.kind = ConstraintKind::SumEq;
            c.scope = b.var_refs(p, p.name_list());
            p.expect('=');
            c.scope.push_back(b.var_ref(p, p.ident()));
        }
        else if (p.eat_word("table")) {
            c.kind = ConstraintKind::Extensional;
            c.scope = b.var_refs(p, p.name_list());
            if (!p.eat_word("tuples") || !p.eat('='))
                p.fail("expected tuples={...}");
            int arity = 0;
            c.tuples = p.tuple_set(arity);
        }
        else {
            p.fail("unknown declaration");
        }

        if (!p.at_end())
            p.fail("trailing input after constraint");
        try {
            validate_descriptor(c, b.state);
        }
        catch (const UsageError &e) {
            p.fail(e.what());
        }
        b.state.constraints.push_back(std::move(c));
    }
    return b.state;
}

ProblemState parse_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open instance file '" + path + "'");
    return parse(in, path);
}

ProblemState parse_string(const std::string &text, const std::string &path)
{
    std::istringstream in(text);
    return parse(in, path);
}

namespace {
    void write_values(std::ostream &out, const std::vector<Value> &values)
    {
        out << '{';
        for (std::size_t i = 0; i < values.size(); ++i)
            out << (i ? ", " : "") << values[i];
        out << '}';
    }

    void write_tuples(std::ostream &out, const std::vector<std::vector<Value>> &rows)
    {
        out << "tuples={";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << (r ? "; " : "") << '(';
            for (std::size_t i = 0; i < rows[r].size(); ++i)
                out << (i ? ", " : "") << rows[r][i];
            out << ')';
        }
        out << '}';
    }

    void write_names(std::ostream &out, const ProblemState &state, std::span<const VarId> ids)
    {
        out << '[';
        for (std::size_t i = 0; i < ids.size(); ++i)
            out << (i ? ", " : "") << state.var(ids[i]).name;
        out << ']';
    }
}

std::string write(const ProblemState &state)
{
    std::ostringstream out;

    // bit variables are not written directly, their set declaration covers
    // them; a set is emitted where its first bit sits in declaration order
    std::map<VarId, int> set_of_first_bit;
    std::map<VarId, bool> is_bit;
    for (std::size_t s = 0; s < state.sets.size(); ++s) {
        const auto &set = state.sets[s];
        for (VarId bit : set.bits)
            is_bit[bit] = true;
        if (!set.bits.empty())
            set_of_first_bit[set.bits.front()] = static_cast<int>(s);
    }

    for (const auto &v : state.variables) {
        if (auto it = set_of_first_bit.find(v.id); it != set_of_first_bit.end()) {
            const auto &set = state.sets[static_cast<std::size_t>(it->second)];
            out << "set " << set.name << " universe=";
            write_values(out, set.universe);
            out << " lb=";
            write_values(out, state.set_lb(it->second));
            out << " ub=";
            write_values(out, state.set_ub(it->second));
            out << '\n';
            continue;
        }
        if (is_bit.count(v.id))
            continue;
        out << "var " << v.name << " = ";
        write_values(out, v.domain.values());
        out << '\n';
    }

    for (const auto &c : state.constraints) {
        switch (c.kind) {
        case ConstraintKind::NValue:
            out << "nvalue ";
            write_names(out, state, {c.scope.data(), c.scope.size() - 1});
            out << ' ' << state.var(c.scope.back()).name;
            break;
        case ConstraintKind::Uses:
        case ConstraintKind::Disjoint:
            out << (c.kind == ConstraintKind::Uses ? "uses " : "disjoint ");
            write_names(out, state, {c.scope.data(), static_cast<std::size_t>(c.split)});
            out << ' ';
            write_names(out, state,
                {c.scope.data() + c.split, c.scope.size() - static_cast<std::size_t>(c.split)});
            break;
        case ConstraintKind::CardPath:
            out << "cardpath ";
            write_names(out, state, {c.scope.data(), c.scope.size() - 1});
            out << ' ' << state.var(c.scope.back()).name << " p=" << c.arity << ' ';
            if (!c.builtin.empty())
                out << "builtin=" << c.builtin;
            else
                write_tuples(out, c.tuples);
            break;
        case ConstraintKind::ValSymBreak: {
            out << "valsymbreak ";
            write_names(out, state, c.scope);
            for (const auto &sigma : c.sigmas) {
                out << " sigma={";
                bool first = true;
                const auto &universe = sigma.universe();
                for (std::size_t i = 0; i < universe.size(); ++i) {
                    if (sigma.image()[i] == universe[i])
                        continue; // identity entries stay implicit
                    out << (first ? "" : ", ") << universe[i] << ':' << sigma.image()[i];
                    first = false;
                }
                out << '}';
            }
            break;
        }
        case ConstraintKind::AmongSet:
            out << "among ";
            write_names(out, state, {c.scope.data(), c.scope.size() - 1});
            out << ' ' << state.sets[static_cast<std::size_t>(c.setvars[0])].name << ' '
                << state.var(c.scope.back()).name;
            break;
        case ConstraintKind::Roots:
            out << "roots ";
            write_names(out, state, c.scope);
            out << ' ' << state.sets[static_cast<std::size_t>(c.setvars[0])].name << ' '
                << state.sets[static_cast<std::size_t>(c.setvars[1])].name;
            break;
        case ConstraintKind::SumEq:
            out << "sum ";
            write_names(out, state, {c.scope.data(), c.scope.size() - 1});
            out << " = " << state.var(c.scope.back()).name;
            break;
        case ConstraintKind::Extensional:
            out << "table ";
            write_names(out, state, c.scope);
            out << ' ';
            write_tuples(out, c.tuples);
            break;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace fptprop::instance
