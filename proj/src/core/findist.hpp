#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "core/atom_key.hpp"
#include "core/errors.hpp"
#include "core/rational.hpp"

namespace definetti {

/// Finitely supported probability distribution with exact rational weights.
/// Invariants: every stored weight is > 0, the weights sum to exactly 1, and
/// the support is sorted by canonical atom key (ShortLexLess).  Structural
/// equality compares keys and weights.
template <class A>
class FinDist {
 public:
  using atom_type = A;

  struct Entry {
    std::string key;
    A atom;
    Rational prob;
  };

  static FinDist dirac(A atom) {
    FinDist d;
    std::string key = atom_key(atom);
    d.entries_.push_back(Entry{std::move(key), std::move(atom), Rational(1)});
    return d;
  }

  /// Validates weights: none negative, total exactly 1.  Zero-weight atoms
  /// are pruned; weights on atoms with equal keys accumulate.
  static FinDist from_weights(std::vector<std::pair<A, Rational>> weights) {
    std::map<std::string, std::pair<A, Rational>, ShortLexLess> acc;
    for (auto& [atom, prob] : weights) {
      if (prob.sign() < 0) {
        raise(ErrorCode::bad_argument, "negative weight " + prob.str());
      }
      std::string key = atom_key(atom);
      auto it = acc.find(key);
      if (it == acc.end()) {
        acc.emplace(std::move(key), std::make_pair(std::move(atom), prob));
      } else {
        it->second.second += prob;
      }
    }
    Rational total(0);
    FinDist d;
    d.entries_.reserve(acc.size());
    for (auto& [key, atom_prob] : acc) {
      total += atom_prob.second;
      if (atom_prob.second.is_zero()) continue;
      d.entries_.push_back(Entry{key, std::move(atom_prob.first),
                                 std::move(atom_prob.second)});
    }
    if (!total.is_one()) {
      raise(ErrorCode::bad_argument, "weights sum to " + total.str() + ", not 1");
    }
    return d;
  }

  const std::vector<Entry>& support() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// Weight of an atom; exact zero when outside the support.
  Rational prob(const A& atom) const { return prob_by_key(atom_key(atom)); }

  Rational prob_by_key(const std::string& key) const {
    const Entry* e = find_key(key);
    return e ? e->prob : Rational(0);
  }

  bool contains(const A& atom) const { return find_key(atom_key(atom)) != nullptr; }

  /// The unique atom of a dirac distribution.
  const A& only_atom() const {
    if (entries_.size() != 1) {
      raise(ErrorCode::bad_argument, "distribution is not a point mass");
    }
    return entries_.front().atom;
  }

  bool operator==(const FinDist& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].key != o.entries_[i].key) return false;
      if (!(entries_[i].prob == o.entries_[i].prob)) return false;
    }
    return true;
  }
  bool operator!=(const FinDist& o) const { return !(*this == o); }

 private:
  const Entry* find_key(const std::string& key) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const std::string& k) { return ShortLexLess{}(e.key, k); });
    if (it != entries_.end() && it->key == key) return &*it;
    return nullptr;
  }

  std::vector<Entry> entries_;
};

/// Probabilistic map A -> FinDist<B> (a Kleisli arrow).  Channels may be given
/// intensionally (any callable) or extensionally via channel_from_table; both
/// satisfy the same contracts.
template <class A, class B>
using Channel = std::function<FinDist<B>(const A&)>;

namespace detail {

template <class A>
class DistAccumulator {
 public:
  void add(const A& atom, const Rational& prob) {
    if (prob.sign() < 0) {
      raise(ErrorCode::internal_error, "negative weight produced: " + prob.str());
    }
    if (prob.is_zero()) return;
    std::string key = atom_key(atom);
    auto it = acc_.find(key);
    if (it == acc_.end()) {
      acc_.emplace(std::move(key), std::make_pair(atom, prob));
    } else {
      it->second.second += prob;
    }
  }

  FinDist<A> build() {
    std::vector<std::pair<A, Rational>> weights;
    weights.reserve(acc_.size());
    for (auto& [key, atom_prob] : acc_) {
      weights.emplace_back(std::move(atom_prob.first), std::move(atom_prob.second));
    }
    return FinDist<A>::from_weights(std::move(weights));
  }

 private:
  std::map<std::string, std::pair<A, Rational>, ShortLexLess> acc_;
};

}  // namespace detail

/// Functor action: applies f to every atom, merging collisions.
template <class F, class A>
auto pushforward(F&& f, const FinDist<A>& d)
    -> FinDist<std::decay_t<decltype(f(d.support().front().atom))>> {
  using B = std::decay_t<decltype(f(d.support().front().atom))>;
  detail::DistAccumulator<B> acc;
  for (const auto& e : d.support()) {
    acc.add(f(e.atom), e.prob);
  }
  return acc.build();
}

/// Monad bind: k(a) must itself be normalized for every a in the support.
template <class A, class K>
auto bind(const FinDist<A>& d, K&& k)
    -> std::decay_t<decltype(k(d.support().front().atom))> {
  using DistB = std::decay_t<decltype(k(d.support().front().atom))>;
  detail::DistAccumulator<typename DistB::atom_type> acc;
  for (const auto& e : d.support()) {
    DistB inner = k(e.atom);
    for (const auto& ie : inner.support()) {
      acc.add(ie.atom, e.prob * ie.prob);
    }
  }
  return acc.build();
}

/// Kleisli composition g after f: (g . f)(x) = bind(f(x), g).
template <class F, class G>
auto kleisli_compose(G g, F f) {
  return [g = std::move(g), f = std::move(f)](const auto& x) {
    // Qualified: ADL on std::pair atoms would otherwise pull in std::bind,
    // whose forwarding reference out-ranks our const& for rvalue arguments.
    return definetti::bind(f(x), g);
  };
}

/// id (x) f : (C, A) -> Dist(C, B), carrying the first component along.
template <class F>
auto tensor_id_channel(F f) {
  return [f = std::move(f)](const auto& ca) {
    const auto& c = ca.first;
    return pushforward(
        [&c](const auto& b) { return std::make_pair(c, b); }, f(ca.second));
  };
}

template <class A, class B>
FinDist<A> first_marginal(const FinDist<std::pair<A, B>>& d) {
  return pushforward([](const std::pair<A, B>& p) { return p.first; }, d);
}

template <class A, class B>
FinDist<B> second_marginal(const FinDist<std::pair<A, B>>& d) {
  return pushforward([](const std::pair<A, B>& p) { return p.second; }, d);
}

/// Total variation distance: (1/2) sum over atoms of |p1 - p2|.
template <class A>
Rational total_variation(const FinDist<A>& d1, const FinDist<A>& d2) {
  Rational sum(0);
  for (const auto& e : d1.support()) {
    sum += (e.prob - d2.prob_by_key(e.key)).abs();
  }
  for (const auto& e : d2.support()) {
    if (!d1.prob_by_key(e.key).is_zero()) continue;  // counted above
    sum += e.prob;
  }
  return sum / Rational(2);
}

/// Extensional channel given by a finite table of rows; inputs outside the
/// table raise bad_argument.
template <class A, class B>
Channel<A, B> channel_from_table(std::vector<std::pair<A, FinDist<B>>> rows) {
  auto table = std::make_shared<std::map<std::string, FinDist<B>, ShortLexLess>>();
  for (auto& [atom, dist] : rows) {
    table->emplace(atom_key(atom), std::move(dist));
  }
  return [table](const A& a) {
    auto it = table->find(atom_key(a));
    if (it == table->end()) {
      raise(ErrorCode::bad_argument, "input outside channel table: " + atom_key(a));
    }
    return it->second;
  };
}

}  // namespace definetti
