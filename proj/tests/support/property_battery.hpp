#pragma once

// Randomized invariant battery shared by the unit test suite and the
// acceptance runner.  Every family draws independent instances from a seeded
// generator, so runs are reproducible; failures carry a description of the
// violated law and the instance number.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/coalgebra.hpp"
#include "core/findist.hpp"
#include "core/multiset.hpp"

namespace definetti::testing {

struct BatteryResult {
  int instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Rational probability() {
    int den = range(1, 12);
    return Rational(range(0, den), den);
  }

  /// Random distribution over {0, ..., domain-1} with small exact weights;
  /// zero weights are legitimate and exercise pruning.
  FinDist<int> dist(int domain) {
    std::vector<std::int64_t> weights(static_cast<std::size_t>(domain), 0);
    std::int64_t total = 0;
    for (auto& w : weights) {
      w = range(0, 6);
      total += w;
    }
    if (total == 0) {
      weights[static_cast<std::size_t>(range(0, domain - 1))] = 1;
      total = 1;
    }
    std::vector<std::pair<int, Rational>> entries;
    for (int i = 0; i < domain; ++i) {
      entries.emplace_back(i, Rational(weights[static_cast<std::size_t>(i)], total));
    }
    return FinDist<int>::from_weights(std::move(entries));
  }

  /// Extensional random kernel {0..dom-1} -> Dist{0..codom-1}.
  Channel<int, int> kernel(int dom, int codom) {
    std::vector<std::pair<int, FinDist<int>>> rows;
    for (int a = 0; a < dom; ++a) {
      rows.emplace_back(a, dist(codom));
    }
    return channel_from_table(std::move(rows));
  }

  std::vector<std::string> sequence(const std::vector<std::string>& alphabet,
                                    int length) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
      out.push_back(alphabet[static_cast<std::size_t>(
          range(0, static_cast<int>(alphabet.size()) - 1))]);
    }
    return out;
  }

  /// Random bit-emitting transition system on states {0..states-1}, given by
  /// an extensional table.
  Coalgebra<int> coalgebra(int states) {
    std::vector<std::pair<int, FinDist<std::pair<Bit, int>>>> rows;
    for (int s = 0; s < states; ++s) {
      FinDist<int> raw = dist(2 * states);
      rows.emplace_back(s, pushforward(
                               [states](int i) {
                                 return std::make_pair(i % 2, i / 2 % states);
                               },
                               raw));
    }
    return Coalgebra<int>{channel_from_table(std::move(rows))};
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

template <class A>
bool valid_dist(const FinDist<A>& d) {
  Rational total(0);
  for (const auto& e : d.support()) {
    if (!(e.prob > Rational(0))) return false;  // pruning: no zero weights kept
    total += e.prob;
  }
  return total.is_one();  // normalization: weights sum exactly to 1
}

inline BatteryResult run_property_battery(std::uint64_t seed, int per_family) {
  BatteryResult result;
  Gen g(seed);
  auto fail = [&result](const std::string& what, int instance) {
    result.failures.push_back(what + " (instance " + std::to_string(instance) + ")");
  };

  // Monad left identity: bind(dirac(a), k) == k(a).
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    int dom = g.range(1, 5);
    int codom = g.range(1, 5);
    auto k = g.kernel(dom, codom);
    int a = g.range(0, dom - 1);
    FinDist<int> lhs = definetti::bind(FinDist<int>::dirac(a), k);
    if (!(lhs == k(a)) || !valid_dist(lhs)) fail("monad left identity", i);
  }

  // Monad right identity: bind(d, dirac) == d.
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    FinDist<int> d = g.dist(g.range(1, 6));
    FinDist<int> lhs = definetti::bind(d, [](int a) { return FinDist<int>::dirac(a); });
    if (!(lhs == d) || !valid_dist(lhs)) fail("monad right identity", i);
  }

  // Monad associativity: bind(bind(d,k1),k2) == bind(d, x -> bind(k1(x),k2)).
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    int d1 = g.range(1, 4), d2 = g.range(1, 4), d3 = g.range(1, 4);
    FinDist<int> d = g.dist(d1);
    auto k1 = g.kernel(d1, d2);
    auto k2 = g.kernel(d2, d3);
    FinDist<int> lhs = definetti::bind(definetti::bind(d, k1), k2);
    FinDist<int> rhs =
        definetti::bind(d, [&](int x) { return definetti::bind(k1(x), k2); });
    if (!(lhs == rhs) || !valid_dist(lhs)) fail("monad associativity", i);
  }

  // Functor/monad agreement plus kleisli associativity.
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    int d1 = g.range(1, 4), d2 = g.range(1, 4), d3 = g.range(1, 4), d4 = g.range(1, 4);
    FinDist<int> d = g.dist(d1);
    auto via_push = pushforward([](int x) { return x * x; }, d);
    auto via_bind = definetti::bind(d, [](int x) { return FinDist<int>::dirac(x * x); });
    if (!(via_push == via_bind) || !valid_dist(via_push)) {
      fail("pushforward agrees with bind through dirac", i);
    }
    auto f = g.kernel(d1, d2);
    auto k1 = g.kernel(d2, d3);
    auto k2 = g.kernel(d3, d4);
    int a = g.range(0, d1 - 1);
    auto left = kleisli_compose(k2, kleisli_compose(k1, f));
    auto right = kleisli_compose(kleisli_compose(k2, k1), f);
    if (!(left(a) == right(a))) fail("kleisli composition associativity", i);
  }

  // Accumulation is permutation invariant.
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    std::vector<std::string> alphabet = {"a", "b", "c"};
    std::vector<std::string> seq = g.sequence(alphabet, g.range(0, 8));
    std::vector<std::string> shuffled = seq;
    std::shuffle(shuffled.begin(), shuffled.end(), g.rng());
    if (!(accumulate(alphabet, seq) == accumulate(alphabet, shuffled))) {
      fail("accumulate permutation invariance", i);
    }
  }

  // Direct accumulated iteration equals the ordered iteration pushed forward
  // along accumulation, for random table systems.
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    int states = g.range(1, 3);
    Coalgebra<int> h = g.coalgebra(states);
    int start = g.range(0, states - 1);
    int steps = g.range(0, 4);
    auto direct = iterate_accumulated(h, start, steps);
    auto via_ordered = pushforward(
        [](const std::pair<std::vector<Bit>, int>& p) {
          return std::make_pair(accumulate_bits(p.first), p.second);
        },
        iterate_ordered(h, start, steps));
    if (!(direct == via_ordered) || !valid_dist(direct)) {
      fail("accumulated iteration two-route agreement", i);
    }
  }

  // The same two-route agreement on the named urn systems.
  for (int i = 0; i < per_family; ++i, ++result.instances) {
    int steps = g.range(0, 4);
    if (g.range(0, 1) == 0) {
      UrnState start(g.range(1, 4), g.range(1, 4));
      auto direct = iterate_accumulated(polya(), start, steps);
      auto via_ordered = pushforward(
          [](const std::pair<std::vector<Bit>, UrnState>& p) {
            return std::make_pair(accumulate_bits(p.first), p.second);
          },
          iterate_ordered(polya(), start, steps));
      if (!(direct == via_ordered) || !valid_dist(direct)) {
        fail("urn iteration two-route agreement", i);
      }
    } else {
      Rational bias = g.probability();
      auto h = bernoulli(bias);
      auto direct = iterate_accumulated(h, bias, steps);
      auto via_ordered = pushforward(
          [](const std::pair<std::vector<Bit>, Rational>& p) {
            return std::make_pair(accumulate_bits(p.first), p.second);
          },
          iterate_ordered(h, bias, steps));
      if (!(direct == via_ordered) || !valid_dist(direct)) {
        fail("coin iteration two-route agreement", i);
      }
    }
  }

  return result;
}

}  // namespace definetti::testing
