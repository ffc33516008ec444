#include "core/channels.hpp"

#include <cmath>

namespace definetti {

namespace {

void check_probability(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) {
    raise(ErrorCode::bad_probability, "probability " + p.str() + " outside [0, 1]");
  }
}

}  // namespace

FinDist<std::pair<std::string, Multiset>> draw(const Multiset& urn) {
  std::int64_t total = urn.size();
  if (total == 0) {
    raise(ErrorCode::empty_urn, "cannot draw from the empty multiset " + urn.text());
  }
  std::vector<std::pair<std::pair<std::string, Multiset>, Rational>> weights;
  for (std::size_t i = 0; i < urn.alphabet().size(); ++i) {
    if (urn.counts()[i] == 0) continue;
    weights.push_back({{urn.alphabet()[i], urn.removing_at(i)},
                       Rational(urn.counts()[i], total)});
  }
  return FinDist<std::pair<std::string, Multiset>>::from_weights(std::move(weights));
}

FinDist<Multiset> draw_delete(const Multiset& urn) {
  return second_marginal(draw(urn));
}

FinDist<std::int64_t> binomial(std::int64_t trials, const Rational& bias) {
  if (trials < 0) {
    raise(ErrorCode::bad_argument, "negative trial count");
  }
  check_probability(bias);
  Rational miss = Rational(1) - bias;
  std::vector<std::pair<std::int64_t, Rational>> weights;
  for (std::int64_t k = 0; k <= trials; ++k) {
    weights.emplace_back(
        k, binomial_coefficient(trials, k) * bias.pow(static_cast<int>(k)) *
               miss.pow(static_cast<int>(trials - k)));
  }
  return FinDist<std::int64_t>::from_weights(std::move(weights));
}

namespace {

void enumerate_count_vectors(std::size_t index, std::int64_t remaining,
                             std::vector<std::int64_t>& counts,
                             const std::function<void()>& emit) {
  if (index + 1 == counts.size()) {
    counts[index] = remaining;
    emit();
    return;
  }
  for (std::int64_t c = 0; c <= remaining; ++c) {
    counts[index] = c;
    enumerate_count_vectors(index + 1, remaining - c, counts, emit);
  }
}

}  // namespace

FinDist<Multiset> multinomial(std::int64_t size, const FinDist<std::string>& weights) {
  if (size < 0) {
    raise(ErrorCode::bad_argument, "negative multiset size");
  }
  std::vector<std::string> alphabet;
  std::vector<Rational> probs;
  alphabet.reserve(weights.size());
  for (const auto& e : weights.support()) {
    alphabet.push_back(e.atom);
    probs.push_back(e.prob);
  }
  Rational size_fact = factorial(size);
  std::vector<std::pair<Multiset, Rational>> out;
  std::vector<std::int64_t> counts(alphabet.size(), 0);
  enumerate_count_vectors(0, size, counts, [&]() {
    Rational w = size_fact;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      w = w / factorial(counts[i]) * probs[i].pow(static_cast<int>(counts[i]));
    }
    out.emplace_back(Multiset::from_counts(alphabet, counts), w);
  });
  return FinDist<Multiset>::from_weights(std::move(out));
}

FinDist<std::int64_t> hypergeometric(std::int64_t survivors, std::int64_t removals,
                                     std::int64_t ones) {
  if (survivors < 0 || removals < 0) {
    raise(ErrorCode::bad_argument, "negative population parameters");
  }
  std::int64_t population = survivors + removals;
  if (ones < 0 || ones > population) {
    raise(ErrorCode::out_of_range,
          "ones count " + std::to_string(ones) + " outside [0, " +
              std::to_string(population) + "]");
  }
  Rational denom = binomial_coefficient(population, survivors);
  std::vector<std::pair<std::int64_t, Rational>> weights;
  for (std::int64_t k = 0; k <= survivors; ++k) {
    weights.emplace_back(k, binomial_coefficient(ones, k) *
                                binomial_coefficient(population - ones, survivors - k) /
                                denom);
  }
  return FinDist<std::int64_t>::from_weights(std::move(weights));
}

BetaParams::BetaParams(Rational a, Rational b)
    : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha.sign() <= 0 || beta.sign() <= 0) {
    raise(ErrorCode::bad_params,
          "beta parameters must be positive, got (" + alpha.str() + ", " +
              beta.str() + ")");
  }
}

Rational rising_factorial(const Rational& x, std::int64_t n) {
  if (n < 0) {
    raise(ErrorCode::bad_argument, "negative rising factorial length");
  }
  Rational acc(1);
  for (std::int64_t i = 0; i < n; ++i) {
    acc *= x + Rational(i);
  }
  return acc;
}

Rational beta_fn(const BetaParams& p) {
  if (!p.is_integral()) {
    raise(ErrorCode::bad_params,
          "exact Beta function requires integer parameters, got (" +
              p.alpha.str() + ", " + p.beta.str() + ")");
  }
  std::int64_t a = p.alpha_int();
  std::int64_t b = p.beta_int();
  return factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1);
}

double beta_fn(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    raise(ErrorCode::bad_params, "beta parameters must be positive");
  }
  return std::exp(std::lgamma(alpha) + std::lgamma(beta) - std::lgamma(alpha + beta));
}

Rational beta_moment(const BetaParams& p, std::int64_t order) {
  if (order < 0) {
    raise(ErrorCode::bad_argument, "negative moment order");
  }
  return rising_factorial(p.alpha, order) / rising_factorial(p.alpha + p.beta, order);
}

FinDist<std::int64_t> beta_binomial(std::int64_t trials, const BetaParams& p) {
  if (trials < 0) {
    raise(ErrorCode::bad_argument, "negative trial count");
  }
  Rational denom = rising_factorial(p.alpha + p.beta, trials);
  std::vector<std::pair<std::int64_t, Rational>> weights;
  for (std::int64_t k = 0; k <= trials; ++k) {
    weights.emplace_back(k, binomial_coefficient(trials, k) *
                                rising_factorial(p.alpha, k) *
                                rising_factorial(p.beta, trials - k) / denom);
  }
  return FinDist<std::int64_t>::from_weights(std::move(weights));
}

FinDist<Multiset> uniform_counts(std::int64_t size) {
  if (size < 0) {
    raise(ErrorCode::bad_argument, "negative multiset size");
  }
  Rational w(1, size + 1);
  std::vector<std::pair<Multiset, Rational>> weights;
  for (std::int64_t k = 0; k <= size; ++k) {
    weights.emplace_back(binary_multiset(k, size - k), w);
  }
  return FinDist<Multiset>::from_weights(std::move(weights));
}

}  // namespace definetti
