#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/channels.hpp"
#include "core/findist.hpp"
#include "core/multiset.hpp"

namespace definetti {

using Bit = int;

/// Probabilistic transition system emitting one bit per step: a channel
/// S -> Dist(Bit x S).  Unfolding such a system yields finite sequences of
/// observations; the accumulated (order-forgetting) unfoldings of the
/// exchangeable ones form cones over the draw-and-delete chain.
template <class S>
struct Coalgebra {
  Channel<S, std::pair<Bit, S>> step;
};

/// Urn with black and white ball counts; at least one ball total.
struct UrnState {
  UrnState(std::int64_t b, std::int64_t w) : black(b), white(w) {
    if (b < 0 || w < 0 || b + w < 1) {
      raise(ErrorCode::bad_params,
            "urn needs nonnegative counts and at least one ball, got (" +
                std::to_string(b) + ", " + std::to_string(w) + ")");
    }
  }

  bool operator==(const UrnState& o) const = default;

  std::int64_t black;
  std::int64_t white;
};

inline std::string atom_key(const UrnState& s) {
  return "(" + std::to_string(s.black) + "," + std::to_string(s.white) + ")";
}

/// Polya urn: observe a uniformly drawn ball, then return it together with
/// one extra ball of the same color.  Black is reported as bit 1.
inline Coalgebra<UrnState> polya() {
  return {[](const UrnState& s) {
    Rational total(s.black + s.white);
    return FinDist<std::pair<Bit, UrnState>>::from_weights(
        {{{1, UrnState(s.black + 1, s.white)}, Rational(s.black) / total},
         {{0, UrnState(s.black, s.white + 1)}, Rational(s.white) / total}});
  }};
}

/// Deterministic system that emits its state bit and flips it.  Its ordered
/// unfoldings alternate strictly, so it is the standard non-exchangeable
/// example.
inline Coalgebra<Bit> alternating() {
  return {[](const Bit& b) {
    if (b != 0 && b != 1) {
      raise(ErrorCode::bad_argument, "alternating state must be 0 or 1");
    }
    return FinDist<std::pair<Bit, Bit>>::dirac({b, 1 - b});
  }};
}

/// Memoryless coin whose state is its own bias: emits 1 with probability r
/// and never changes state.
inline Coalgebra<Rational> bernoulli(const Rational& bias) {
  if (bias.sign() < 0 || bias > Rational(1)) {
    raise(ErrorCode::bad_probability, "bias " + bias.str() + " outside [0, 1]");
  }
  return {[](const Rational& r) {
    if (r.sign() < 0 || r > Rational(1)) {
      raise(ErrorCode::bad_probability, "bias " + r.str() + " outside [0, 1]");
    }
    return FinDist<std::pair<Bit, Rational>>::from_weights(
        {{{1, r}, r}, {{0, r}, Rational(1) - r}});
  }};
}

/// Joint distribution of the emitted bit sequence (most recent last) and the
/// final state after `steps` unfoldings.
template <class S>
FinDist<std::pair<std::vector<Bit>, S>> iterate_ordered(const Coalgebra<S>& h,
                                                        const S& start, int steps) {
  if (steps < 0) {
    raise(ErrorCode::bad_argument, "negative step count");
  }
  auto dist =
      FinDist<std::pair<std::vector<Bit>, S>>::dirac({std::vector<Bit>{}, start});
  for (int i = 0; i < steps; ++i) {
    dist = definetti::bind(dist, [&h](const std::pair<std::vector<Bit>, S>& p) {
      return pushforward(
          [&p](const std::pair<Bit, S>& bs) {
            std::vector<Bit> bits = p.first;
            bits.push_back(bs.first);
            return std::make_pair(std::move(bits), bs.second);
          },
          h.step(p.second));
    });
  }
  return dist;
}

template <class S>
FinDist<std::vector<Bit>> ordered_marginal(const Coalgebra<S>& h, const S& start,
                                           int steps) {
  return first_marginal(iterate_ordered(h, start, steps));
}

namespace detail {

template <class S>
auto accumulated_step(const Coalgebra<S>& h) {
  return [&h](const std::pair<Multiset, S>& p) {
    return pushforward(
        [&p](const std::pair<Bit, S>& bs) {
          return std::make_pair(p.first.adding_at(static_cast<std::size_t>(bs.first)),
                                bs.second);
        },
        h.step(p.second));
  };
}

}  // namespace detail

/// Joint distribution of the accumulated observation multiset and the final
/// state: the direct recursion that counts each emitted bit as it appears.
/// Agrees with pushing iterate_ordered forward along accumulation.
template <class S>
FinDist<std::pair<Multiset, S>> iterate_accumulated(const Coalgebra<S>& h,
                                                    const S& start, int steps) {
  if (steps < 0) {
    raise(ErrorCode::bad_argument, "negative step count");
  }
  auto dist =
      FinDist<std::pair<Multiset, S>>::dirac({binary_multiset(0, 0), start});
  for (int i = 0; i < steps; ++i) {
    dist = definetti::bind(dist, detail::accumulated_step(h));
  }
  return dist;
}

template <class S>
FinDist<Multiset> accumulated_marginal(const Coalgebra<S>& h, const S& start,
                                       int steps) {
  return first_marginal(iterate_accumulated(h, start, steps));
}

/// Counterexample to two-step swap invariance: an outcome (b1, b2, state)
/// whose probability differs from that of (b2, b1, state).
template <class S>
struct SwapWitness {
  Bit first_bit;
  Bit second_bit;
  S state;
  Rational weight;
  Rational swapped_weight;
};

template <class S>
std::optional<SwapWitness<S>> exchangeability_counterexample(const Coalgebra<S>& h,
                                                             const S& start) {
  using TwoStep = std::pair<Bit, std::pair<Bit, S>>;
  auto two_step = kleisli_compose(tensor_id_channel(h.step), h.step);
  FinDist<TwoStep> original = two_step(start);
  FinDist<TwoStep> swapped = pushforward(
      [](const TwoStep& a) {
        return std::make_pair(a.second.first,
                              std::make_pair(a.first, a.second.second));
      },
      original);
  if (original == swapped) return std::nullopt;
  // First differing outcome in canonical atom order over both supports.
  const auto& lhs = original.support();
  const auto& rhs = swapped.support();
  std::size_t i = 0, j = 0;
  const ShortLexLess less;
  while (i < lhs.size() || j < rhs.size()) {
    const typename FinDist<TwoStep>::Entry* pick = nullptr;
    if (j == rhs.size() || (i < lhs.size() && less(lhs[i].key, rhs[j].key))) {
      pick = &lhs[i];
    } else if (i == lhs.size() || less(rhs[j].key, lhs[i].key)) {
      pick = &rhs[j];
    } else {
      pick = &lhs[i];  // same atom in both supports
    }
    Rational w = original.prob_by_key(pick->key);
    Rational sw = swapped.prob_by_key(pick->key);
    if (!(w == sw)) {
      const TwoStep& atom = pick->atom;
      return SwapWitness<S>{atom.first, atom.second.first, atom.second.second, w, sw};
    }
    if (i < lhs.size() && lhs[i].key == pick->key) ++i;
    if (j < rhs.size() && rhs[j].key == pick->key) ++j;
  }
  raise(ErrorCode::internal_error, "distributions differ but no witness found");
}

/// Two-step swap invariance of the unfolding at the given state.
template <class S>
bool is_exchangeable(const Coalgebra<S>& h, const S& start) {
  return !exchangeability_counterexample(h, start).has_value();
}

class NotExchangeableError : public Error {
 public:
  NotExchangeableError(std::string state_key, Bit first_bit, Bit second_bit,
                       Rational weight, Rational swapped_weight)
      : Error(ErrorCode::not_exchangeable,
              "not exchangeable at state " + state_key + ": outcome (" +
                  std::to_string(first_bit) + ", " + std::to_string(second_bit) +
                  ") has weight " + weight.str() + " but " +
                  swapped_weight.str() + " after swapping"),
        state_key_(std::move(state_key)),
        first_bit_(first_bit),
        second_bit_(second_bit),
        weight_(std::move(weight)),
        swapped_weight_(std::move(swapped_weight)) {}

  const std::string& state_key() const { return state_key_; }
  Bit first_bit() const { return first_bit_; }
  Bit second_bit() const { return second_bit_; }
  const Rational& weight() const { return weight_; }
  const Rational& swapped_weight() const { return swapped_weight_; }

 private:
  std::string state_key_;
  Bit first_bit_;
  Bit second_bit_;
  Rational weight_;
  Rational swapped_weight_;
};

/// States reachable from `start` in at most `depth` steps, in first-reached
/// order (deduplicated by canonical key).
template <class S>
std::vector<S> reachable_states(const Coalgebra<S>& h, const S& start, int depth) {
  std::vector<S> order;
  std::set<std::string> seen;
  std::deque<std::pair<S, int>> frontier;
  frontier.push_back({start, 0});
  seen.insert(atom_key(start));
  order.push_back(start);
  while (!frontier.empty()) {
    auto [state, d] = frontier.front();
    frontier.pop_front();
    if (d >= depth) continue;
    // Named local: ranging directly over h.step(...).support() would leave the
    // loop iterating a member of an already-destroyed temporary.
    FinDist<std::pair<Bit, S>> out = h.step(state);
    for (const auto& e : out.support()) {
      const S& next = e.atom.second;
      if (seen.insert(atom_key(next)).second) {
        order.push_back(next);
        frontier.push_back({next, d + 1});
      }
    }
  }
  return order;
}

/// Accumulated unfolding computed through the normal form available for
/// exchangeable systems: the ones-count k gets weight C(steps, k) times the
/// probability of the ordered run 1^k 0^(steps-k).  Exchangeability is first
/// checked at every state reachable within steps-1 transitions; the first
/// counterexample is raised as NotExchangeableError.
template <class S>
FinDist<Multiset> exchangeable_accumulated(const Coalgebra<S>& h, const S& start,
                                           int steps) {
  if (steps < 0) {
    raise(ErrorCode::bad_argument, "negative step count");
  }
  if (steps > 0) {
    for (const S& s : reachable_states(h, start, steps - 1)) {
      if (auto w = exchangeability_counterexample(h, s)) {
        throw NotExchangeableError(atom_key(s), w->first_bit, w->second_bit,
                                   w->weight, w->swapped_weight);
      }
    }
  }
  std::vector<std::pair<Multiset, Rational>> weights;
  for (int k = 0; k <= steps; ++k) {
    // Weight of the forced run: k ones then steps-k zeros.
    std::map<std::string, std::pair<S, Rational>, ShortLexLess> current;
    current.emplace(atom_key(start), std::make_pair(start, Rational(1)));
    for (int pos = 0; pos < steps; ++pos) {
      Bit target = pos < k ? 1 : 0;
      std::map<std::string, std::pair<S, Rational>, ShortLexLess> next;
      for (const auto& [key, state_weight] : current) {
        FinDist<std::pair<Bit, S>> out = h.step(state_weight.first);
        for (const auto& e : out.support()) {
          if (e.atom.first != target) continue;
          Rational w = state_weight.second * e.prob;
          auto it = next.find(atom_key(e.atom.second));
          if (it == next.end()) {
            next.emplace(atom_key(e.atom.second), std::make_pair(e.atom.second, w));
          } else {
            it->second.second += w;
          }
        }
      }
      current = std::move(next);
    }
    Rational run_weight(0);
    for (const auto& [key, state_weight] : current) {
      run_weight += state_weight.second;
    }
    weights.emplace_back(binary_multiset(k, steps - k),
                         binomial_coefficient(steps, k) * run_weight);
  }
  return FinDist<Multiset>::from_weights(std::move(weights));
}

}  // namespace definetti
