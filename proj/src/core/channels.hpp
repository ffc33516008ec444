#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "core/findist.hpp"
#include "core/multiset.hpp"
#include "core/rational.hpp"

namespace definetti {

/// Uniformly draw one element: probability count/size of observing a symbol
/// together with the urn minus that occurrence.  Empty urns are an error.
FinDist<std::pair<std::string, Multiset>> draw(const Multiset& urn);

/// draw with the observed symbol forgotten: a channel from size-(K+1)
/// multisets to size-K multisets.
FinDist<Multiset> draw_delete(const Multiset& urn);

/// Number of heads in `trials` independent tosses of a coin with the given
/// bias (probability of 1).  Bias outside [0, 1] is an error.
FinDist<std::int64_t> binomial(std::int64_t trials, const Rational& bias);

/// Frequency counts of `size` independent draws from `weights`: the multiset
/// phi over the support alphabet gets weight size!/prod(phi(x)!) *
/// prod(weights(x)^phi(x)).  The resulting alphabet lists the support symbols
/// in canonical order.
FinDist<Multiset> multinomial(std::int64_t size, const FinDist<std::string>& weights);

/// Ones left after deleting `removals` elements uniformly without replacement
/// from a binary population of size survivors+removals containing `ones`
/// ones: weight(k) = C(ones,k) * C(survivors+removals-ones, survivors-k)
/// / C(survivors+removals, survivors).  Equals `removals`-fold draw_delete.
FinDist<std::int64_t> hypergeometric(std::int64_t survivors, std::int64_t removals,
                                     std::int64_t ones);

/// Positive parameters for the Beta family.  The exact code paths require
/// is_integral(); the floating path accepts any positive reals.
struct BetaParams {
  BetaParams(Rational alpha, Rational beta);

  bool is_integral() const { return alpha.is_integer() && beta.is_integer(); }
  std::int64_t alpha_int() const { return alpha.to_int64(); }
  std::int64_t beta_int() const { return beta.to_int64(); }

  Rational alpha;
  Rational beta;
};

/// Exact Beta function B(a, b) = (a-1)!(b-1)!/(a+b-1)! for positive integer
/// parameters; non-integral parameters must go through the floating overload.
Rational beta_fn(const BetaParams& p);

/// Floating Beta function via log-gamma; relative error is well inside 1e-12
/// for the moderate arguments used here.  This is the only floating-point
/// path in the library.
double beta_fn(double alpha, double beta);

/// Exact j-th raw moment of Beta(alpha, beta):
/// prod_{i<j} (alpha+i)/(alpha+beta+i).  Exact for any positive rationals.
Rational beta_moment(const BetaParams& p, std::int64_t order);

/// Number of heads in `trials` tosses of a coin whose bias is Beta(alpha,
/// beta) distributed: weight(k) = C(K,k) * B(alpha+k, beta+K-k) / B(alpha,
/// beta), computed exactly through rising factorials.
FinDist<std::int64_t> beta_binomial(std::int64_t trials, const BetaParams& p);

/// Uniform distribution over the size-K binary multisets: each of the K+1
/// ones-counts gets weight 1/(K+1).
FinDist<Multiset> uniform_counts(std::int64_t size);

/// prod_{i<n} (x+i), exactly.
Rational rising_factorial(const Rational& x, std::int64_t n);

}  // namespace definetti
