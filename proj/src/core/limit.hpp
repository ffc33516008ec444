#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/channels.hpp"
#include "core/coalgebra.hpp"
#include "core/findist.hpp"
#include "core/multiset.hpp"
#include "core/rational.hpp"

namespace definetti {

/// Finite prefix of a cone over the draw-and-delete chain: one distribution
/// per level K = 0..horizon, where level K is supported on size-K binary
/// multisets and level 0 is the point mass at the empty multiset.  The cone
/// condition itself (each level is the draw-and-delete image of the next) is
/// a separate check, verify_cone, so that near-cones can be represented and
/// reported on.
class ConePrefix {
 public:
  static ConePrefix from_levels(std::vector<FinDist<Multiset>> levels);

  int horizon() const { return static_cast<int>(levels_.size()) - 1; }
  const FinDist<Multiset>& level(int k) const;
  const std::vector<FinDist<Multiset>>& levels() const { return levels_; }

  bool operator==(const ConePrefix& o) const = default;

 private:
  ConePrefix() = default;

  std::vector<FinDist<Multiset>> levels_;
};

/// First violated instance of the cone condition, in (level, atom) order:
/// lhs is the level-K weight of the atom, rhs the weight induced from level
/// K+1 by draw-and-delete.
struct ConeFailure {
  int level;
  Multiset atom;
  Rational lhs;
  Rational rhs;
};

/// Checks, for K = 0..horizon-1 and every size-K binary multiset phi, that
///   level_K(phi) = (phi(1)+1)/(K+1) * level_{K+1}(phi + |1>)
///                + (phi(0)+1)/(K+1) * level_{K+1}(phi + |0>).
/// Returns the first failure, or nullopt when the prefix is a genuine cone.
std::optional<ConeFailure> verify_cone(const ConePrefix& cone);

/// Accumulated marginals of a transition system up to the horizon.  No
/// exchangeability is assumed; for non-exchangeable systems the result is
/// typically not a cone, which verify_cone will then witness.
template <class S>
ConePrefix cone_from_coalgebra(const Coalgebra<S>& h, const S& start, int horizon) {
  if (horizon < 0) {
    raise(ErrorCode::bad_argument, "negative horizon");
  }
  std::vector<FinDist<Multiset>> levels;
  levels.reserve(static_cast<std::size_t>(horizon) + 1);
  auto joint =
      FinDist<std::pair<Multiset, S>>::dirac({binary_multiset(0, 0), start});
  levels.push_back(first_marginal(joint));
  for (int k = 0; k < horizon; ++k) {
    joint = definetti::bind(joint, detail::accumulated_step(h));
    levels.push_back(first_marginal(joint));
  }
  return ConePrefix::from_levels(std::move(levels));
}

/// Finite prefix b_0..b_horizon of a would-be moment sequence: b_0 = 1 and
/// every entry lies in [0, 1].  Monotonicity is deliberately not enforced
/// here — complete monotonicity (which implies it) is a separate check with
/// an explicit witness.
class MomentSeq {
 public:
  explicit MomentSeq(std::vector<Rational> values);

  int horizon() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& at(int order) const;
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const MomentSeq& o) const = default;

 private:
  std::vector<Rational> values_;
};

/// k-th forward difference at index n: requires n + k <= horizon.
Rational finite_difference(const MomentSeq& m, int order, int index);

/// (-1)^order * finite_difference(m, order, index); nonnegative for all
/// admissible (order, index) exactly when m is completely monotone.
Rational signed_difference(const MomentSeq& m, int order, int index);

struct MonotoneFailure {
  int order;
  int index;
  Rational value;  // the negative signed difference
};

/// Scans orders (then indices) ascending over order + index <= horizon.
std::optional<MonotoneFailure> check_complete_monotone(const MomentSeq& m);

/// Moments of a verified cone prefix: b_K is the level-K weight of the
/// all-ones multiset.  Raises not_a_cone (with the witness in the message)
/// when the prefix fails verify_cone.
MomentSeq moments_from_cone(const ConePrefix& cone);

/// Levels from moments: the level-K weight of k ones is
/// C(K,k) * signed_difference(m, K-k, k).  Requires horizon <= m.horizon()
/// and complete monotonicity (the weights would otherwise be negative).
/// Inverse to moments_from_cone on verified cones.
ConePrefix reconstruct_cone(const MomentSeq& m, int horizon);

/// Description of a candidate limit: a probability measure on [0, 1] given
/// either in closed form or by a raw moment prefix.  The exact machinery
/// accepts point masses, Lebesgue measure, and integer-parameter Beta
/// measures; Beta with non-integer parameters is represented but its exact
/// operations raise inexact_candidate.
class LimitCandidate {
 public:
  enum class Kind { point_mass, lebesgue, beta, raw_moments };

  static LimitCandidate point_mass(Rational r);
  static LimitCandidate lebesgue();
  static LimitCandidate beta(BetaParams params);
  static LimitCandidate raw_moments(MomentSeq m);

  Kind kind() const { return kind_; }
  std::string describe() const;

  /// Exact raw moment of the measure.  Raises inexact_candidate for
  /// non-integer Beta parameters and horizon_exceeded past a raw prefix.
  Rational moment(int order) const;
  MomentSeq moments(int horizon) const;

  const Rational& point() const;
  const BetaParams& params() const;
  const MomentSeq& raw() const;

 private:
  explicit LimitCandidate(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Rational> point_;
  std::optional<BetaParams> params_;
  std::optional<MomentSeq> raw_;
};

/// The cone whose level-K weights are the candidate's mixture of binomials,
/// computed exactly from the candidate's moments.
ConePrefix cone_from_candidate(const LimitCandidate& candidate, int horizon);

/// Integral of x^n (1-x)^k against the candidate, computed two ways — from
/// the finite differences of the moment sequence, and in closed form where
/// one exists — which must agree.
Rational mixed_moment(const LimitCandidate& candidate, int n, int k);

struct CandidateMismatch {
  int level;
  std::int64_t ones;
  Rational lhs;  // cone weight
  Rational rhs;  // weight induced by the candidate's moments
};

/// Compares a verified cone prefix against the cone induced by the
/// candidate, level by level (ones counts ascending within a level).
std::optional<CandidateMismatch> match_candidate(const ConePrefix& cone,
                                                 const LimitCandidate& candidate);

/// Level K of a cone rescaled onto the grid {0, 1/K, ..., 1}: the discrete
/// measure on [0, 1] that approximates the limit.  Level 0 carries no grid
/// (0/0), so K >= 1.
struct Approximant {
  int level;
  FinDist<Rational> grid;
};

Approximant approximant(const ConePrefix& cone, int level);

/// max over the supplied evaluation points t of |CDF_approximant(t) -
/// CDF_candidate(t)|.  Only point masses and Lebesgue measure have rational
/// CDFs; other candidates raise inexact_candidate.
Rational cdf_distance(const Approximant& approx, const LimitCandidate& candidate,
                      const std::vector<Rational>& points);

enum class ConjugacyFault {
  none,
  /// Deliberately wrong posterior update (adds 2 instead of 1 to the updated
  /// component) for exercising the detector.
  posterior_shift,
};

struct ConjugacyRow {
  int outcome;  // emitted bit
  int order;    // moment order the paths are compared at
  Rational lhs;  // observe-then-average path
  Rational rhs;  // update-then-average path
  bool equal;
};

struct ConjugacyReport {
  std::int64_t black;
  std::int64_t white;
  int max_order;
  ConjugacyFault fault;
  bool commutes;
  std::vector<ConjugacyRow> rows;
  std::optional<ConjugacyRow> first_mismatch;
};

/// Beta/coin conjugacy: tossing a Beta(black, white) coin once and averaging
/// r^order over the posterior weighted by each outcome must equal drawing
/// from the urn and averaging r^order over the updated urn's Beta measure.
/// Checked exactly for every outcome and order 0..max_order (orders
/// ascending, outcome 1 before 0).
ConjugacyReport conjugacy_check(std::int64_t black, std::int64_t white, int max_order,
                                ConjugacyFault fault = ConjugacyFault::none);

}  // namespace definetti
