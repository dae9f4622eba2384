#include <doctest.h>

#include <fptprop/instance.hpp>
#include <fptprop/interval.hpp>
#include <fptprop/oracle.hpp>
#include <fptprop/propagators.hpp>

#include "helpers.hpp"

using namespace fptprop;
using testutil::vars;

TEST_CASE("run decomposition")
{
    CHECK(interval::runs_of(Domain({1, 2, 3})) == std::vector<interval::Run>{{1, 3}});
    CHECK(interval::runs_of(Domain({1, 3})) == std::vector<interval::Run>{{1, 1}, {3, 3}});
    CHECK(interval::runs_of(Domain({1, 2, 4, 7, 8})) ==
        std::vector<interval::Run>{{1, 2}, {4, 4}, {7, 8}});

    CHECK(interval::intervals_count(Domain({1, 2, 3})) == 1);
    CHECK(interval::intervals_count(Domain({1, 3})) == 2);
    CHECK(interval::intervals_count(Domain({7})) == 1);
    CHECK_THROWS_AS(interval::intervals_count(Domain{}), UsageError);
}

TEST_CASE("the two hole-counting formulations agree")
{
    std::mt19937 rng(20240815);
    for (int round = 0; round < 200; ++round) {
        std::vector<Value> values;
        for (Value v = 0; v < 12; ++v)
            if (testutil::draw(rng, 0, 1))
                values.push_back(v);
        if (values.empty())
            continue;
        Domain d{values};
        int holes = 0;
        for (Value v : d)
            if (!d.contains(v + 1) && v != d.max())
                ++holes;
        CHECK(interval::intervals_count(d) == holes + 1);
        CHECK(static_cast<int>(interval::runs_of(d).size()) == holes + 1);
    }
}

TEST_CASE("sum bounds fixpoint")
{
    using B = interval::Bounds;
    SUBCASE("infeasible hulls fail")
    {
        CHECK_FALSE(interval::sum_bc_fixpoint({B{1, 2}, B{1, 2}, B{5, 5}}).has_value());
    }
    SUBCASE("tight targets force the maxima")
    {
        auto r = interval::sum_bc_fixpoint({B{1, 3}, B{1, 3}, B{6, 6}});
        REQUIRE(r.has_value());
        CHECK((*r)[0].lo == 3);
        CHECK((*r)[0].hi == 3);
        CHECK((*r)[1].lo == 3);
        CHECK((*r)[1].hi == 3);
    }
    SUBCASE("bounds arithmetic on an asymmetric pair")
    {
        auto r = interval::sum_bc_fixpoint({B{0, 9}, B{0, 1}, B{4, 5}});
        REQUIRE(r.has_value());
        CHECK((*r)[0].lo == 3);
        CHECK((*r)[0].hi == 5);
    }
}

TEST_CASE("lifting filters holes that bound consistency cannot see")
{
    SUBCASE("hole in one addend propagates to the other")
    {
        auto state = vars({{"X1", {1, 3}}, {"X2", {1, 2, 3, 4}}, {"T", {5}}});
        std::vector<VarId> scope{0, 1, 2};
        auto out = interval::lift_to_dc(interval::sum_bc(), scope, state);
        CHECK(out.status == FilterStatus::Pruned);
        CHECK(state.dom(0).values() == std::vector<Value>{1, 3});
        CHECK(state.dom(1).values() == std::vector<Value>{2, 4});
    }
    SUBCASE("single runs everywhere keep the plain BC result")
    {
        auto state = vars({{"X1", {1, 2}}, {"X2", {1, 2}}, {"T", {3}}});
        std::vector<VarId> scope{0, 1, 2};
        auto out = interval::lift_to_dc(interval::sum_bc(), scope, state);
        CHECK(out.status == FilterStatus::Unchanged);
    }
    SUBCASE("two holey addends")
    {
        auto state = vars({{"X1", {1, 4}}, {"X2", {1, 4}}, {"T", {8}}});
        std::vector<VarId> scope{0, 1, 2};
        auto out = interval::lift_to_dc(interval::sum_bc(), scope, state);
        CHECK(out.status == FilterStatus::Pruned);
        CHECK(state.dom(0).values() == std::vector<Value>{4});
        CHECK(state.dom(1).values() == std::vector<Value>{4});
    }
    SUBCASE("an infeasible target wipes out and leaves the state alone")
    {
        auto state = vars({{"X1", {1, 3}}, {"X2", {1, 3}}, {"T", {5}}});
        std::vector<VarId> scope{0, 1, 2};
        auto out = interval::lift_to_dc(interval::sum_bc(), scope, state);
        CHECK(out.status == FilterStatus::Wipeout);
        CHECK(state.dom(0).size() == 2);
    }
}

TEST_CASE("scope hygiene and caps")
{
    auto state = vars({{"X", {1, 3}}, {"T", {4}}});
    std::vector<VarId> dup{0, 0};
    CHECK_THROWS_AS(interval::lift_to_dc(interval::sum_bc(), dup, state), UsageError);

    // ten variables with three runs each: the completion product explodes
    ProblemState wide;
    std::vector<VarId> scope;
    for (int i = 0; i < 10; ++i)
        scope.push_back(wide.add_variable("X" + std::to_string(i), Domain({0, 2, 4})));
    scope.push_back(wide.add_variable("T", Domain({0})));
    CHECK_THROWS_AS(interval::lift_to_dc(interval::sum_bc(), scope, wide, 4096),
        ParameterTooLarge);
}

TEST_CASE("memoized and plain probing agree with the oracle")
{
    std::mt19937 rng(20240816);
    auto plain_bc = interval::sum_bc();
    plain_bc.bounds_value_complete = false; // forces per-value probing

    for (int round = 0; round < 200; ++round) {
        auto state = testutil::holey_sum_instance(rng, 4);
        const auto &scope = state.constraints[0].scope;
        int n = static_cast<int>(scope.size());

        auto oracle_state = state;
        auto oracle_out = oracle::brute_force_dc(oracle::sum_check(n - 1), oracle_state,
            std::span<const VarId>(scope));

        auto memo_state = state;
        interval::LiftStats memo_stats;
        auto memo_out = interval::lift_to_dc(interval::sum_bc(),
            std::span<const VarId>(scope), memo_state, interval::default_run_product_cap,
            &memo_stats);

        auto plain_state = state;
        interval::LiftStats plain_stats;
        auto plain_out = interval::lift_to_dc(plain_bc, std::span<const VarId>(scope),
            plain_state, interval::default_run_product_cap, &plain_stats);

        CAPTURE(round);
        CHECK(memo_out.status == oracle_out.status);
        CHECK(plain_out.status == oracle_out.status);
        if (oracle_out.status != FilterStatus::Wipeout) {
            CHECK(memo_state == oracle_state);
            CHECK(plain_state == oracle_state);
        }

        // cost envelope: invocations <= n * d * product of run counts
        long long product = 1;
        std::size_t d_max = 0;
        for (VarId id : scope) {
            product *= interval::intervals_count(state.dom(id));
            d_max = std::max(d_max, state.dom(id).size());
        }
        long long envelope = static_cast<long long>(n) * static_cast<long long>(d_max) * product;
        CHECK(memo_stats.bc_invocations <= envelope);
        CHECK(plain_stats.bc_invocations <= envelope);
    }
}

TEST_CASE("the lifted propagator behind sum descriptors matches the oracle")
{
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        auto result = testutil::random_equivalence_case(ConstraintKind::SumEq, rng, 4, 6, 4);
        CAPTURE(i);
        CHECK(result.match);
    }
}
