#include <doctest.h>

#include <fptprop/automata.hpp>
#include <fptprop/oracle.hpp>

#include "helpers.hpp"

#include <array>

using namespace fptprop;
using testutil::vars;

namespace {
    bool run(const oracle::Checker &check, std::vector<Value> a)
    {
        return check(std::span<const Value>(a));
    }
}

TEST_CASE("checker semantics on hand assignments")
{
    CHECK(run(oracle::nvalue_check(3), {1, 2, 3, 3}));
    CHECK_FALSE(run(oracle::nvalue_check(3), {1, 1, 3, 3}));

    CHECK(run(oracle::uses_check(2, 2), {1, 2, 2, 1}));
    CHECK_FALSE(run(oracle::uses_check(2, 1), {1, 2, 2}));

    // exactly one adjacent strict increase in 1,2,1
    CHECK(run(oracle::cardpath_check(2, automata::builtin_predicate("less-than", 2), 3),
        {1, 2, 1, 1}));
    CHECK_FALSE(run(oracle::cardpath_check(2, automata::builtin_predicate("less-than", 2), 3),
        {1, 2, 1, 2}));

    CHECK_FALSE(run(oracle::disjoint_check(1, 1), {1, 1}));
    CHECK(run(oracle::disjoint_check(1, 1), {1, 2}));

    auto swap12 = ValuePermutation::from_pairs({1, 2}, {{1, 2}, {2, 1}});
    CHECK(run(oracle::valsymbreak_check({swap12}), {1, 2}));
    CHECK_FALSE(run(oracle::valsymbreak_check({swap12}), {2, 1}));

    // among over universe {1,2}: bits follow the X values, count matches N
    CHECK(run(oracle::among_check(2, {1, 2}), {1, 3, 1, 0, 1}));
    CHECK_FALSE(run(oracle::among_check(2, {1, 2}), {1, 3, 1, 0, 2}));

    // roots over t-universe {1}: x=(1), S bit says 1 iff X1 in T
    CHECK(run(oracle::roots_check(1, {1}), {1, 1, 1}));
    CHECK_FALSE(run(oracle::roots_check(1, {1}), {1, 0, 1}));

    CHECK(run(oracle::sum_check(2), {2, 3, 5}));
    CHECK_FALSE(run(oracle::sum_check(2), {2, 3, 6}));

    CHECK(run(oracle::table_check({{1, 2}, {2, 1}}), {2, 1}));
    CHECK_FALSE(run(oracle::table_check({{1, 2}, {2, 1}}), {1, 1}));
}

TEST_CASE("brute_force_dc on singleton scopes")
{
    auto sat = vars({{"X", {2}}, {"T", {2}}});
    std::vector<VarId> scope{0, 1};
    auto out = oracle::brute_force_dc(oracle::sum_check(1), sat, scope);
    CHECK(out.status == FilterStatus::Unchanged);

    auto unsat = vars({{"X", {2}}, {"T", {3}}});
    out = oracle::brute_force_dc(oracle::sum_check(1), unsat, scope);
    CHECK(out.status == FilterStatus::Wipeout);
    CHECK(unsat.dom(0).size() == 1); // untouched
}

TEST_CASE("brute_force_dc keeps exactly supported values")
{
    auto state = vars({{"X1", {1, 2}}, {"X2", {2, 3}}, {"X3", {1, 3}}, {"N", {1, 3}}});
    std::vector<VarId> scope{0, 1, 2, 3};
    auto out = oracle::brute_force_dc(oracle::nvalue_check(3), state, scope);
    CHECK(out.status == FilterStatus::Pruned);
    CHECK(state.dom(3).values() == std::vector<Value>{3});
    CHECK(state.dom(0).size() == 2);
    CHECK(out.removed.at(3) == std::vector<Value>{1});
}

TEST_CASE("always-true checker changes nothing")
{
    auto state = vars({{"A", {1, 2, 3}}, {"B", {4, 5}}});
    std::vector<VarId> scope{0, 1};
    auto out = oracle::brute_force_dc([](std::span<const Value>) { return true; }, state, scope);
    CHECK(out.status == FilterStatus::Unchanged);
}

TEST_CASE("brute_force_dc is idempotent")
{
    auto state = vars({{"X1", {1, 2, 3}}, {"X2", {1, 2, 3}}, {"T", {4}}});
    std::vector<VarId> scope{0, 1, 2};
    oracle::brute_force_dc(oracle::sum_check(2), state, scope);
    auto first = state;
    auto out = oracle::brute_force_dc(oracle::sum_check(2), state, scope);
    CHECK(out.status == FilterStatus::Unchanged);
    CHECK(state == first);
}

TEST_CASE("enumerate_solutions walks lexicographically")
{
    auto state = vars({{"X1", {1, 2}}, {"X2", {1, 2}}, {"T", {3}}});
    std::vector<VarId> scope{0, 1, 2};
    auto sols = oracle::enumerate_solutions(oracle::sum_check(2), state, scope);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::vector<Value>{1, 2, 3});
    CHECK(sols[1] == std::vector<Value>{2, 1, 3});

    auto none = vars({{"X", {1}}, {"T", {9}}});
    std::vector<VarId> scope2{0, 1};
    CHECK(oracle::enumerate_solutions(oracle::sum_check(1), none, scope2).empty());
}

TEST_CASE("the enumeration cap refuses oversized products")
{
    ProblemState state;
    std::vector<VarId> scope;
    std::vector<Value> wide;
    for (Value v = 0; v < 100; ++v)
        wide.push_back(v);
    for (int i = 0; i < 5; ++i)
        scope.push_back(state.add_variable("X" + std::to_string(i), Domain(wide)));

    CHECK(oracle::product_size(state, scope, 1LL << 40) == 10000000000LL);
    CHECK_THROWS_AS(oracle::product_size(state, scope, oracle::default_enumeration_cap),
        UsageError);
    CHECK_THROWS_AS(
        oracle::brute_force_dc([](std::span<const Value>) { return true; }, state, scope),
        UsageError);
}

TEST_CASE("all_of slices one concatenated assignment")
{
    // X1+X2 = T and X2 != 1, scope (X1, X2, T)
    auto both = oracle::all_of({
        {oracle::sum_check(2), {0, 3}},
        {oracle::table_check({{2}, {3}}), {1, 1}},
    });
    CHECK(run(both, {1, 2, 3}));
    CHECK_FALSE(run(both, {2, 1, 3}));
}
