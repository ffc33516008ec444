#include <doctest.h>

#include <utility>
#include <vector>

#include "core/channels.hpp"
#include "core/coalgebra.hpp"
#include "core/errors.hpp"
#include "core/findist.hpp"
#include "core/multiset.hpp"
#include "core/rational.hpp"

using definetti::Bit;
using definetti::Coalgebra;
using definetti::Error;
using definetti::FinDist;
using definetti::Multiset;
using definetti::Rational;
using definetti::UrnState;

TEST_CASE("urn state validation and key") {
    CHECK(definetti::atom_key(UrnState(2, 3)) == "(2,3)");
    CHECK_NOTHROW(UrnState(1, 0));
    CHECK_THROWS_AS(UrnState(0, 0), Error);
    CHECK_THROWS_AS(UrnState(-1, 2), Error);
}

TEST_CASE("polya step reinforces the drawn color") {
    auto out = definetti::polya().step(UrnState(1, 2));
    CHECK(out.prob({1, UrnState(2, 2)}) == Rational(1, 3));
    CHECK(out.prob({0, UrnState(1, 3)}) == Rational(2, 3));
}

TEST_CASE("polya two-step joint") {
    auto d = definetti::iterate_ordered(definetti::polya(), UrnState(1, 2), 2);
    CHECK(d.prob({{1, 1}, UrnState(3, 2)}) == Rational(1, 6));
    CHECK(d.prob({{1, 0}, UrnState(2, 3)}) == Rational(1, 6));
    CHECK(d.prob({{0, 1}, UrnState(2, 3)}) == Rational(1, 6));
    CHECK(d.prob({{0, 0}, UrnState(1, 4)}) == Rational(1, 2));
}

TEST_CASE("alternating system flips deterministically") {
    auto d = definetti::iterate_ordered(definetti::alternating(), 0, 2);
    CHECK(d == FinDist<std::pair<std::vector<Bit>, Bit>>::dirac({{0, 1}, 0}));
    CHECK_THROWS_AS(definetti::alternating().step(2), Error);
}

TEST_CASE("bernoulli system is memoryless") {
    auto d = definetti::ordered_marginal(definetti::bernoulli(Rational(1, 3)),
                                         Rational(1, 3), 2);
    CHECK(d.prob({1, 1}) == Rational(1, 9));
    CHECK(d.prob({1, 0}) == Rational(2, 9));
    CHECK(d.prob({0, 1}) == Rational(2, 9));
    CHECK(d.prob({0, 0}) == Rational(4, 9));
    CHECK_THROWS_AS(definetti::bernoulli(Rational(3, 2)), Error);
    CHECK_THROWS_AS(definetti::bernoulli(Rational(-1, 3)), Error);
    CHECK_THROWS_AS(definetti::bernoulli(Rational(1, 2)).step(Rational(2)), Error);
}

TEST_CASE("iterate rejects negative step counts") {
    CHECK_THROWS_AS(definetti::iterate_ordered(definetti::polya(), UrnState(1, 1), -1),
                    Error);
    CHECK_THROWS_AS(
        definetti::iterate_accumulated(definetti::polya(), UrnState(1, 1), -1), Error);
}

TEST_CASE("ordered polya marginal is exchangeable across outcomes") {
    auto d = definetti::ordered_marginal(definetti::polya(), UrnState(1, 1), 2);
    CHECK(d.prob({1, 1}) == Rational(1, 3));
    CHECK(d.prob({1, 0}) == Rational(1, 6));
    CHECK(d.prob({0, 1}) == Rational(1, 6));
    CHECK(d.prob({0, 0}) == Rational(1, 3));
}

TEST_CASE("accumulated marginal forgets order") {
    auto via_ordered = definetti::pushforward(
        [](const std::vector<Bit>& bits) { return definetti::accumulate_bits(bits); },
        definetti::ordered_marginal(definetti::polya(), UrnState(2, 3), 4));
    auto direct = definetti::accumulated_marginal(definetti::polya(), UrnState(2, 3), 4);
    CHECK(via_ordered == direct);
}

TEST_CASE("accumulated bernoulli marginal is binomial") {
    auto d = definetti::accumulated_marginal(definetti::bernoulli(Rational(2, 5)),
                                             Rational(2, 5), 4);
    auto b = definetti::binomial(4, Rational(2, 5));
    for (std::int64_t k = 0; k <= 4; ++k)
        CHECK(d.prob(definetti::binary_multiset(k, 4 - k)) == b.prob(k));
}

TEST_CASE("accumulated polya marginal is beta-binomial") {
    auto d = definetti::accumulated_marginal(definetti::polya(), UrnState(2, 3), 4);
    auto bb = definetti::beta_binomial(
        4, definetti::BetaParams(Rational(2), Rational(3)));
    for (std::int64_t k = 0; k <= 4; ++k)
        CHECK(d.prob(definetti::binary_multiset(k, 4 - k)) == bb.prob(k));
    CHECK(d.prob(definetti::binary_multiset(0, 4)) == Rational(3, 14));
}

TEST_CASE("exchangeability verdicts") {
    CHECK(definetti::is_exchangeable(definetti::polya(), UrnState(1, 1)));
    CHECK(definetti::is_exchangeable(definetti::polya(), UrnState(3, 2)));
    CHECK(definetti::is_exchangeable(definetti::bernoulli(Rational(1, 3)),
                                     Rational(1, 3)));
    CHECK_FALSE(definetti::is_exchangeable(definetti::alternating(), 0));
}

TEST_CASE("alternating swap witness") {
    auto w = definetti::exchangeability_counterexample(definetti::alternating(), 0);
    REQUIRE(w.has_value());
    CHECK(w->first_bit == 0);
    CHECK(w->second_bit == 1);
    CHECK(w->state == 0);
    CHECK(w->weight == Rational(1));
    CHECK(w->swapped_weight == Rational(0));
}

TEST_CASE("reachable states") {
    auto states = definetti::reachable_states(definetti::polya(), UrnState(1, 1), 2);
    CHECK(states.size() == 6);
    CHECK(states.front() == UrnState(1, 1));
    auto fixed = definetti::reachable_states(definetti::bernoulli(Rational(1, 2)),
                                             Rational(1, 2), 5);
    CHECK(fixed.size() == 1);
}

TEST_CASE("normal form agrees with the direct accumulated unfolding") {
    for (int steps = 0; steps <= 5; ++steps) {
        CHECK(definetti::exchangeable_accumulated(definetti::polya(), UrnState(2, 3),
                                                  steps) ==
              definetti::accumulated_marginal(definetti::polya(), UrnState(2, 3), steps));
        CHECK(definetti::exchangeable_accumulated(definetti::bernoulli(Rational(1, 3)),
                                                  Rational(1, 3), steps) ==
              definetti::accumulated_marginal(definetti::bernoulli(Rational(1, 3)),
                                              Rational(1, 3), steps));
    }
}

TEST_CASE("normal form rejects non-exchangeable systems") {
    CHECK_THROWS_AS(
        definetti::exchangeable_accumulated(definetti::alternating(), 0, 3),
        definetti::NotExchangeableError);
    try {
        definetti::exchangeable_accumulated(definetti::alternating(), 0, 3);
    } catch (const definetti::NotExchangeableError& e) {
        CHECK(e.state_key() == "0");
        CHECK(e.first_bit() == 0);
        CHECK(e.second_bit() == 1);
        CHECK(e.weight() == Rational(1));
        CHECK(e.swapped_weight() == Rational(0));
    }
    // Zero steps never consults the step function, so no check is triggered.
    CHECK(definetti::exchangeable_accumulated(definetti::alternating(), 0, 0) ==
          FinDist<Multiset>::dirac(definetti::binary_multiset(0, 0)));
}
