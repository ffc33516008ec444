#include "core/limit.hpp"

#include <algorithm>

namespace definetti {

namespace {

/// Size-K binary multisets in canonical atom order.
std::vector<Multiset> level_atoms(int size) {
  std::vector<Multiset> atoms;
  atoms.reserve(static_cast<std::size_t>(size) + 1);
  for (std::int64_t k = 0; k <= size; ++k) {
    atoms.push_back(binary_multiset(k, size - k));
  }
  std::sort(atoms.begin(), atoms.end(), [](const Multiset& a, const Multiset& b) {
    return ShortLexLess{}(a.text(), b.text());
  });
  return atoms;
}

}  // namespace

ConePrefix ConePrefix::from_levels(std::vector<FinDist<Multiset>> levels) {
  if (levels.empty()) {
    raise(ErrorCode::bad_argument, "a cone prefix needs at least level 0");
  }
  for (std::size_t k = 0; k < levels.size(); ++k) {
    for (const auto& e : levels[k].support()) {
      if (!is_binary(e.atom) || e.atom.size() != static_cast<std::int64_t>(k)) {
        raise(ErrorCode::bad_argument,
              "level " + std::to_string(k) + " contains the atom " + e.atom.text() +
                  ", which is not a size-" + std::to_string(k) + " binary multiset");
      }
    }
  }
  if (!(levels[0] == FinDist<Multiset>::dirac(binary_multiset(0, 0)))) {
    raise(ErrorCode::bad_argument,
          "level 0 must be the point mass at the empty multiset");
  }
  ConePrefix cone;
  cone.levels_ = std::move(levels);
  return cone;
}

const FinDist<Multiset>& ConePrefix::level(int k) const {
  if (k < 0) {
    raise(ErrorCode::bad_argument, "negative cone level");
  }
  if (k > horizon()) {
    raise(ErrorCode::horizon_exceeded,
          "level " + std::to_string(k) + " beyond horizon " +
              std::to_string(horizon()));
  }
  return levels_[static_cast<std::size_t>(k)];
}

std::optional<ConeFailure> verify_cone(const ConePrefix& cone) {
  for (int level = 0; level < cone.horizon(); ++level) {
    const FinDist<Multiset>& lower = cone.level(level);
    const FinDist<Multiset>& upper = cone.level(level + 1);
    Rational denom(level + 1);
    for (const Multiset& atom : level_atoms(level)) {
      Rational lhs = lower.prob(atom);
      Rational rhs = (Rational(atom.counts()[1] + 1) / denom) * upper.prob(atom.adding_at(1)) +
                     (Rational(atom.counts()[0] + 1) / denom) * upper.prob(atom.adding_at(0));
      if (!(lhs == rhs)) {
        return ConeFailure{level, atom, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

MomentSeq::MomentSeq(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) {
    raise(ErrorCode::bad_argument, "a moment sequence needs at least order 0");
  }
  if (!values_[0].is_one()) {
    raise(ErrorCode::bad_argument,
          "moment of order 0 must be 1, got " + values_[0].str());
  }
  for (const Rational& v : values_) {
    if (v.sign() < 0 || v > Rational(1)) {
      raise(ErrorCode::bad_argument, "moment " + v.str() + " outside [0, 1]");
    }
  }
}

const Rational& MomentSeq::at(int order) const {
  if (order < 0) {
    raise(ErrorCode::bad_argument, "negative moment order");
  }
  if (order > horizon()) {
    raise(ErrorCode::horizon_exceeded,
          "moment of order " + std::to_string(order) + " beyond horizon " +
              std::to_string(horizon()));
  }
  return values_[static_cast<std::size_t>(order)];
}

Rational finite_difference(const MomentSeq& m, int order, int index) {
  if (order < 0 || index < 0) {
    raise(ErrorCode::bad_argument, "negative difference order or index");
  }
  if (order + index > m.horizon()) {
    raise(ErrorCode::horizon_exceeded,
          "difference of order " + std::to_string(order) + " at index " +
              std::to_string(index) + " needs moments up to " +
              std::to_string(order + index) + ", horizon is " +
              std::to_string(m.horizon()));
  }
  Rational sum(0);
  for (int i = 0; i <= order; ++i) {
    Rational term = binomial_coefficient(order, i) * m.at(index + i);
    sum += ((order - i) % 2 == 0) ? term : -term;
  }
  return sum;
}

Rational signed_difference(const MomentSeq& m, int order, int index) {
  Rational fd = finite_difference(m, order, index);
  return (order % 2 == 0) ? fd : -fd;
}

std::optional<MonotoneFailure> check_complete_monotone(const MomentSeq& m) {
  for (int order = 0; order <= m.horizon(); ++order) {
    for (int index = 0; index + order <= m.horizon(); ++index) {
      Rational v = signed_difference(m, order, index);
      if (v.sign() < 0) {
        return MonotoneFailure{order, index, v};
      }
    }
  }
  return std::nullopt;
}

MomentSeq moments_from_cone(const ConePrefix& cone) {
  if (auto failure = verify_cone(cone)) {
    raise(ErrorCode::not_a_cone,
          "cone condition fails at level " + std::to_string(failure->level) +
              ", atom " + failure->atom.text() + ": " + failure->lhs.str() +
              " != " + failure->rhs.str());
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(cone.horizon()) + 1);
  for (int k = 0; k <= cone.horizon(); ++k) {
    values.push_back(cone.level(k).prob(binary_multiset(k, 0)));
  }
  return MomentSeq(std::move(values));
}

ConePrefix reconstruct_cone(const MomentSeq& m, int horizon) {
  if (horizon < 0) {
    raise(ErrorCode::bad_argument, "negative horizon");
  }
  if (horizon > m.horizon()) {
    raise(ErrorCode::horizon_exceeded,
          "reconstruction to level " + std::to_string(horizon) +
              " needs moments up to that order, horizon is " +
              std::to_string(m.horizon()));
  }
  if (auto failure = check_complete_monotone(m)) {
    raise(ErrorCode::not_completely_monotone,
          "signed difference of order " + std::to_string(failure->order) +
              " at index " + std::to_string(failure->index) + " is " +
              failure->value.str());
  }
  std::vector<FinDist<Multiset>> levels;
  levels.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int level = 0; level <= horizon; ++level) {
    std::vector<std::pair<Multiset, Rational>> weights;
    for (int k = 0; k <= level; ++k) {
      weights.emplace_back(
          binary_multiset(k, level - k),
          binomial_coefficient(level, k) * signed_difference(m, level - k, k));
    }
    levels.push_back(FinDist<Multiset>::from_weights(std::move(weights)));
  }
  return ConePrefix::from_levels(std::move(levels));
}

LimitCandidate LimitCandidate::point_mass(Rational r) {
  if (r.sign() < 0 || r > Rational(1)) {
    raise(ErrorCode::bad_probability, "point mass " + r.str() + " outside [0, 1]");
  }
  LimitCandidate c(Kind::point_mass);
  c.point_ = std::move(r);
  return c;
}

LimitCandidate LimitCandidate::lebesgue() { return LimitCandidate(Kind::lebesgue); }

LimitCandidate LimitCandidate::beta(BetaParams params) {
  LimitCandidate c(Kind::beta);
  c.params_ = std::move(params);
  return c;
}

LimitCandidate LimitCandidate::raw_moments(MomentSeq m) {
  LimitCandidate c(Kind::raw_moments);
  c.raw_ = std::move(m);
  return c;
}

std::string LimitCandidate::describe() const {
  switch (kind_) {
    case Kind::point_mass:
      return "point-mass(" + point_->str() + ")";
    case Kind::lebesgue:
      return "lebesgue";
    case Kind::beta:
      return "beta(" + params_->alpha.str() + ", " + params_->beta.str() + ")";
    case Kind::raw_moments:
      return "raw-moments(horizon " + std::to_string(raw_->horizon()) + ")";
  }
  return "unknown";
}

Rational LimitCandidate::moment(int order) const {
  if (order < 0) {
    raise(ErrorCode::bad_argument, "negative moment order");
  }
  switch (kind_) {
    case Kind::point_mass:
      return point_->pow(order);
    case Kind::lebesgue:
      return Rational(1, order + 1);
    case Kind::beta:
      if (!params_->is_integral()) {
        raise(ErrorCode::inexact_candidate,
              describe() + " has non-integer parameters; no exact moment path");
      }
      return beta_moment(*params_, order);
    case Kind::raw_moments:
      return raw_->at(order);
  }
  raise(ErrorCode::internal_error, "unhandled candidate kind");
}

MomentSeq LimitCandidate::moments(int horizon) const {
  if (horizon < 0) {
    raise(ErrorCode::bad_argument, "negative horizon");
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int j = 0; j <= horizon; ++j) {
    values.push_back(moment(j));
  }
  return MomentSeq(std::move(values));
}

const Rational& LimitCandidate::point() const {
  if (kind_ != Kind::point_mass) {
    raise(ErrorCode::bad_argument, "not a point mass: " + describe());
  }
  return *point_;
}

const BetaParams& LimitCandidate::params() const {
  if (kind_ != Kind::beta) {
    raise(ErrorCode::bad_argument, "not a beta candidate: " + describe());
  }
  return *params_;
}

const MomentSeq& LimitCandidate::raw() const {
  if (kind_ != Kind::raw_moments) {
    raise(ErrorCode::bad_argument, "not a raw moment candidate: " + describe());
  }
  return *raw_;
}

ConePrefix cone_from_candidate(const LimitCandidate& candidate, int horizon) {
  return reconstruct_cone(candidate.moments(horizon), horizon);
}

Rational mixed_moment(const LimitCandidate& candidate, int n, int k) {
  if (n < 0 || k < 0) {
    raise(ErrorCode::bad_argument, "negative mixed moment exponents");
  }
  Rational from_differences = signed_difference(candidate.moments(n + k), k, n);
  std::optional<Rational> closed;
  switch (candidate.kind()) {
    case LimitCandidate::Kind::point_mass: {
      const Rational& r = candidate.point();
      closed = r.pow(n) * (Rational(1) - r).pow(k);
      break;
    }
    case LimitCandidate::Kind::lebesgue:
      closed = factorial(n) * factorial(k) / factorial(n + k + 1);
      break;
    case LimitCandidate::Kind::beta: {
      const BetaParams& p = candidate.params();
      closed = rising_factorial(p.alpha, n) * rising_factorial(p.beta, k) /
               rising_factorial(p.alpha + p.beta, n + k);
      break;
    }
    case LimitCandidate::Kind::raw_moments:
      break;  // the difference route is the definition
  }
  if (closed && !(*closed == from_differences)) {
    raise(ErrorCode::internal_error,
          "mixed moment routes disagree: " + closed->str() + " vs " +
              from_differences.str());
  }
  return from_differences;
}

std::optional<CandidateMismatch> match_candidate(const ConePrefix& cone,
                                                 const LimitCandidate& candidate) {
  if (auto failure = verify_cone(cone)) {
    raise(ErrorCode::not_a_cone,
          "cone condition fails at level " + std::to_string(failure->level) +
              ", atom " + failure->atom.text() + ": " + failure->lhs.str() +
              " != " + failure->rhs.str());
  }
  MomentSeq m = candidate.moments(cone.horizon());
  for (int level = 0; level <= cone.horizon(); ++level) {
    for (int k = 0; k <= level; ++k) {
      Rational lhs = cone.level(level).prob(binary_multiset(k, level - k));
      Rational rhs =
          binomial_coefficient(level, k) * signed_difference(m, level - k, k);
      if (!(lhs == rhs)) {
        return CandidateMismatch{level, k, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

Approximant approximant(const ConePrefix& cone, int level) {
  if (level < 1) {
    raise(ErrorCode::bad_argument,
          "approximants start at level 1 (level 0 has no grid)");
  }
  if (level > cone.horizon()) {
    raise(ErrorCode::horizon_exceeded,
          "level " + std::to_string(level) + " beyond horizon " +
              std::to_string(cone.horizon()));
  }
  FinDist<Rational> grid = pushforward(
      [level](const Multiset& m) { return Rational(ones_count(m), level); },
      cone.level(level));
  return Approximant{level, std::move(grid)};
}

Rational cdf_distance(const Approximant& approx, const LimitCandidate& candidate,
                      const std::vector<Rational>& points) {
  if (candidate.kind() != LimitCandidate::Kind::point_mass &&
      candidate.kind() != LimitCandidate::Kind::lebesgue) {
    raise(ErrorCode::inexact_candidate,
          candidate.describe() + " has no rational CDF to compare against");
  }
  Rational best(0);
  for (const Rational& t : points) {
    Rational approx_cdf(0);
    for (const auto& e : approx.grid.support()) {
      if (e.atom <= t) approx_cdf += e.prob;
    }
    Rational candidate_cdf(0);
    if (candidate.kind() == LimitCandidate::Kind::point_mass) {
      candidate_cdf = t < candidate.point() ? Rational(0) : Rational(1);
    } else {
      if (t.sign() <= 0) {
        candidate_cdf = Rational(0);
      } else if (t >= Rational(1)) {
        candidate_cdf = Rational(1);
      } else {
        candidate_cdf = t;
      }
    }
    Rational gap = (approx_cdf - candidate_cdf).abs();
    if (gap > best) best = gap;
  }
  return best;
}

ConjugacyReport conjugacy_check(std::int64_t black, std::int64_t white, int max_order,
                                ConjugacyFault fault) {
  if (black < 1 || white < 1) {
    raise(ErrorCode::bad_params,
          "urn needs at least one ball of each color, got (" +
              std::to_string(black) + ", " + std::to_string(white) + ")");
  }
  if (max_order < 0) {
    raise(ErrorCode::bad_argument, "negative moment order");
  }
  const std::int64_t shift = fault == ConjugacyFault::posterior_shift ? 2 : 1;
  BetaParams prior{Rational(black), Rational(white)};
  BetaParams after_one{Rational(black + shift), Rational(white)};
  BetaParams after_zero{Rational(black), Rational(white + shift)};
  Rational p_one = Rational(black, black + white);
  Rational p_zero = Rational(white, black + white);

  ConjugacyReport report{black, white, max_order, fault, true, {}, std::nullopt};
  for (int order = 0; order <= max_order; ++order) {
    Rational lhs_one = beta_moment(prior, order + 1);
    Rational rhs_one = p_one * beta_moment(after_one, order);
    ConjugacyRow row_one{1, order, lhs_one, rhs_one, lhs_one == rhs_one};
    report.rows.push_back(row_one);

    Rational lhs_zero = beta_moment(prior, order) - beta_moment(prior, order + 1);
    Rational rhs_zero = p_zero * beta_moment(after_zero, order);
    ConjugacyRow row_zero{0, order, lhs_zero, rhs_zero, lhs_zero == rhs_zero};
    report.rows.push_back(row_zero);
  }
  for (const ConjugacyRow& row : report.rows) {
    if (!row.equal) {
      report.commutes = false;
      report.first_mismatch = row;
      break;
    }
  }
  return report;
}

}  // namespace definetti
