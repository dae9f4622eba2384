#include <doctest.h>

#include <fptprop/core.hpp>
#include <fptprop/engine.hpp>
#include <fptprop/instance.hpp>
#include <fptprop/propagators.hpp>

#include "helpers.hpp"

#include <algorithm>

using namespace fptprop;
using testutil::vars;

TEST_CASE("domain construction sorts and deduplicates")
{
    Domain d({3, 1, 2, 3, 1});
    CHECK(d.values() == std::vector<Value>{1, 2, 3});
    CHECK(d.size() == 3);
    CHECK(d.min() == 1);
    CHECK(d.max() == 3);
    CHECK(d.contains(2));
    CHECK_FALSE(d.contains(4));

    CHECK(Domain::singleton(7).values() == std::vector<Value>{7});
    CHECK(Domain::range(2, 4).values() == std::vector<Value>{2, 3, 4});
}

TEST_CASE("remove_value outcomes")
{
    auto state = vars({{"X", {1, 2}}});

    SUBCASE("present value prunes")
    {
        auto out = remove_value(state, 0, 2);
        CHECK(out.status == FilterStatus::Pruned);
        CHECK(out.removed.at(0) == std::vector<Value>{2});
        CHECK(state.dom(0).values() == std::vector<Value>{1});
    }
    SUBCASE("absent value is a no-op")
    {
        auto out = remove_value(state, 0, 5);
        CHECK(out.status == FilterStatus::Unchanged);
        CHECK(state.dom(0).size() == 2);
    }
    SUBCASE("last value wipes out without storing emptiness")
    {
        remove_value(state, 0, 2);
        auto out = remove_value(state, 0, 1);
        CHECK(out.status == FilterStatus::Wipeout);
        CHECK_FALSE(state.dom(0).empty());
    }
    SUBCASE("unknown variable is a usage error")
    {
        CHECK_THROWS_AS(remove_value(state, 9, 1), UsageError);
    }
}

TEST_CASE("fixedness queries")
{
    auto state = vars({{"A", {3}}, {"B", {1, 2}}, {"bit", {0}}});
    CHECK(is_fixed(state, 0));
    CHECK(assigned_value(state, 0) == 3);
    CHECK_FALSE(is_fixed(state, 1));
    CHECK_THROWS_AS(assigned_value(state, 1), UsageError);
    CHECK(assigned_value(state, 2) == 0);
}

TEST_CASE("apply_domains is atomic")
{
    auto state = vars({{"X", {1, 2, 3}}, {"Y", {1, 2}}});

    SUBCASE("prunes several variables and reports removals")
    {
        auto out = apply_domains(state, {{0, Domain({1, 3})}, {1, Domain({1, 2})}});
        CHECK(out.status == FilterStatus::Pruned);
        CHECK(out.removed.at(0) == std::vector<Value>{2});
        CHECK(out.removed.count(1) == 0);
    }
    SUBCASE("any empty replacement wipes out and leaves everything untouched")
    {
        auto out = apply_domains(state, {{0, Domain({1})}, {1, Domain(std::vector<Value>{})}});
        CHECK(out.status == FilterStatus::Wipeout);
        CHECK(state.dom(0).size() == 3);
        CHECK(state.dom(1).size() == 2);
    }
    SUBCASE("growing a domain violates the pruning contract")
    {
        CHECK_THROWS_AS(apply_domains(state, {{1, Domain({1, 2, 3})}}), ContractViolation);
    }
}

TEST_CASE("set variables expose computed bounds")
{
    ProblemState state;
    int s = state.add_set_variable("S", {1, 2, 3}, {2}, {1, 2});
    CHECK(state.set_lb(s) == std::vector<Value>{2});
    CHECK(state.set_ub(s) == std::vector<Value>{1, 2});
    // bits: 1 undecided, 2 fixed in, 3 fixed out
    CHECK(state.dom(state.sets[0].bits[0]).values() == std::vector<Value>{0, 1});
    CHECK(state.dom(state.sets[0].bits[1]).values() == std::vector<Value>{1});
    CHECK(state.dom(state.sets[0].bits[2]).values() == std::vector<Value>{0});

    CHECK_THROWS_AS(state.add_set_variable("bad", {1, 2}, {1}, {2}), UsageError); // lb not in ub
    CHECK_THROWS_AS(state.add_set_variable("bad", {1}, {}, {5}), UsageError);     // ub outside
}

TEST_CASE("empty domains never enter a state")
{
    ProblemState state;
    CHECK_THROWS_AS(state.add_variable("X", Domain(std::vector<Value>{})), UsageError);
}

TEST_CASE("value permutations")
{
    auto sigma = ValuePermutation::from_pairs({1, 2, 3}, {{1, 2}, {2, 1}});
    CHECK(sigma.apply(1) == 2);
    CHECK(sigma.apply(2) == 1);
    CHECK(sigma.apply(3) == 3); // identity-completed
    CHECK_FALSE(sigma.defined_on(4));
    CHECK_THROWS_AS(sigma.apply(4), UsageError);

    // 1 -> 2 with nothing mapping back onto 1 is not a bijection
    CHECK_THROWS_AS(ValuePermutation::from_pairs({1, 2}, {{1, 2}, {2, 2}}), UsageError);
    // pair endpoint outside the universe
    CHECK_THROWS_AS(ValuePermutation::from_pairs({1, 2}, {{1, 9}}), UsageError);
}

TEST_CASE("kind names round-trip")
{
    for (auto kind : {ConstraintKind::NValue, ConstraintKind::Uses, ConstraintKind::CardPath,
             ConstraintKind::ValSymBreak, ConstraintKind::Disjoint, ConstraintKind::AmongSet,
             ConstraintKind::Roots, ConstraintKind::SumEq, ConstraintKind::Extensional})
        CHECK(kind_from_name(kind_name(kind)) == kind);
    CHECK_FALSE(kind_from_name("alldifferent").has_value());
}

TEST_CASE("fixpoint with no propagators is the identity")
{
    auto state = vars({{"X", {1, 2}}});
    auto before = state;
    auto out = fixpoint(state, {});
    CHECK(out.status == FilterStatus::Unchanged);
    CHECK(state == before);
}

TEST_CASE("fixpoint of one propagator equals a single call")
{
    auto parsed = instance::parse_string(R"(
var X1 = {1, 2}
var X2 = {2, 3}
var X3 = {1, 3}
var N = {1, 3}
nvalue [X1, X2, X3] N
)");
    auto single = parsed;
    auto prop = make_propagator(parsed.constraints[0]);
    prop.filter(single);

    auto through_engine = parsed;
    fixpoint(through_engine, make_propagators(parsed));
    CHECK(single == through_engine);
    CHECK(through_engine.dom(3).values() == std::vector<Value>{3});
}

TEST_CASE("mutually feeding constraints reach the same fixpoint in either order")
{
    auto parsed = instance::parse_string(R"(
var X1 = {1, 2, 3}
var Y1 = {2, 3}
var Y2 = {3, 4}
var T = {5}
uses [X1] [Y1]
sum [Y1, Y2] = T
)");
    auto props = make_propagators(parsed);

    auto forward = parsed;
    auto out_f = fixpoint(forward, props);
    CHECK(out_f.status == FilterStatus::Pruned);

    auto backward = parsed;
    std::vector<Propagator> reversed = {props[1], props[0]};
    fixpoint(backward, reversed);

    CHECK(forward == backward);
    CHECK(forward.dom(0).values() == std::vector<Value>{2}); // X1: only 2 is used by Y1
    CHECK(forward.dom(1).values() == std::vector<Value>{2}); // Y1: 3 would push the sum past 5
    CHECK(forward.dom(2).values() == std::vector<Value>{3});
}

TEST_CASE("the engine catches a propagator that grows a domain")
{
    auto state = vars({{"X", {1, 2}}});
    Propagator rogue{"rogue", [](ProblemState &s) {
        s.var(0).domain = Domain({1, 2, 3});
        FilterOutcome out;
        out.status = FilterStatus::Pruned;
        return out;
    }};
    CHECK_THROWS_AS(fixpoint(state, {rogue}), ContractViolation);
}

TEST_CASE("wipeout stops the run and names the propagator")
{
    auto parsed = instance::parse_string(R"(
var X1 = {1, 2}
var Y1 = {1}
var Y2 = {2}
disjoint [X1] [Y1, Y2]
)");
    FixpointStats stats;
    auto out = fixpoint(parsed, make_propagators(parsed), &stats);
    CHECK(out.status == FilterStatus::Wipeout);
    CHECK(stats.wiped_by == "c0");
}

TEST_CASE("fixpoint is idempotent and order independent on random pairs")
{
    std::mt19937 rng(20240811);
    int interacting = 0;
    for (int round = 0; round < 60; ++round) {
        auto kind = std::vector{ConstraintKind::NValue, ConstraintKind::Uses,
            ConstraintKind::SumEq, ConstraintKind::Disjoint,
            ConstraintKind::Extensional}[testutil::draw(rng, 0, 4)];
        gen::RandomSpec spec{kind, testutil::draw(rng, 2, 4), testutil::draw(rng, 2, 4),
            testutil::draw(rng, 1, 3)};
        auto state = gen::random_instance(spec, rng);

        // second constraint: a random binary table over two existing variables
        ConstraintDescriptor extra;
        extra.kind = ConstraintKind::Extensional;
        extra.name = "extra";
        int a = testutil::draw(rng, 0, static_cast<int>(state.variables.size()) - 1);
        int b = (a + 1) % static_cast<int>(state.variables.size());
        if (a == b)
            continue;
        extra.scope = {state.variables[a].id, state.variables[b].id};
        for (Value va : state.dom(extra.scope[0]))
            for (Value vb : state.dom(extra.scope[1]))
                if (testutil::draw(rng, 0, 2) != 0)
                    extra.tuples.push_back({va, vb});
        if (extra.tuples.empty())
            extra.tuples.push_back({state.dom(extra.scope[0]).min(),
                state.dom(extra.scope[1]).min()});
        state.constraints.push_back(extra);

        auto props = make_propagators(state);
        auto forward = state;
        auto out = fixpoint(forward, props);

        auto backward = state;
        std::vector<Propagator> reversed(props.rbegin(), props.rend());
        auto out_rev = fixpoint(backward, reversed);

        CAPTURE(round);
        CHECK(out.status == out_rev.status);
        if (out.status != FilterStatus::Wipeout) {
            CHECK(forward == backward);
            auto again = forward;
            auto out2 = fixpoint(again, props);
            CHECK(out2.status == FilterStatus::Unchanged);
            CHECK(again == forward);
        }
        if (out.status == FilterStatus::Pruned)
            ++interacting;
    }
    CHECK(interacting > 10); // the generator must not produce only trivia
}
