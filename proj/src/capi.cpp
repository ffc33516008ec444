#include "definetti.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "core/coalgebra.hpp"
#include "core/errors.hpp"
#include "core/limit.hpp"
#include "core/serialize.hpp"

using nlohmann::json;

namespace {

using namespace definetti;

thread_local std::string t_last_error;

df_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_argument:
      return DF_ERR_BAD_ARGUMENT;
    case ErrorCode::parse_error:
      return DF_ERR_PARSE;
    case ErrorCode::divide_by_zero:
      return DF_ERR_DIVIDE_BY_ZERO;
    case ErrorCode::empty_urn:
      return DF_ERR_EMPTY_URN;
    case ErrorCode::bad_probability:
      return DF_ERR_BAD_PROBABILITY;
    case ErrorCode::out_of_range:
      return DF_ERR_OUT_OF_RANGE;
    case ErrorCode::bad_params:
      return DF_ERR_BAD_PARAMS;
    case ErrorCode::horizon_exceeded:
      return DF_ERR_HORIZON_EXCEEDED;
    case ErrorCode::not_a_cone:
      return DF_ERR_NOT_A_CONE;
    case ErrorCode::not_completely_monotone:
      return DF_ERR_NOT_COMPLETELY_MONOTONE;
    case ErrorCode::not_exchangeable:
      return DF_ERR_NOT_EXCHANGEABLE;
    case ErrorCode::inexact_candidate:
      return DF_ERR_INEXACT_CANDIDATE;
    case ErrorCode::internal_error:
      return DF_ERR_INTERNAL;
  }
  return DF_ERR_INTERNAL;
}

template <class F>
df_status guarded(F&& f) {
  t_last_error.clear();
  try {
    return f();
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return DF_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return DF_ERR_INTERNAL;
  }
}

df_status emit(const std::string& text, char** out, df_status status) {
  char* p = static_cast<char*>(std::malloc(text.size() + 1));
  if (p == nullptr) {
    t_last_error = "out of memory";
    return DF_ERR_INTERNAL;
  }
  std::memcpy(p, text.c_str(), text.size() + 1);
  *out = p;
  return status;
}

df_status emit_json(const json& j, char** out, df_status status) {
  return emit(j.dump(2), out, status);
}

void require(bool condition, const char* message) {
  if (!condition) {
    raise(ErrorCode::bad_argument, message);
  }
}

json cone_failure_json(const ConeFailure& f) {
  return {{"level", f.level},
          {"atom", f.atom.text()},
          {"lhs", f.lhs.str()},
          {"rhs", f.rhs.str()}};
}

json monotone_failure_json(const MonotoneFailure& f) {
  return {{"order", f.order}, {"index", f.index}, {"value", f.value.str()}};
}

json mismatch_json(const CandidateMismatch& m) {
  return {{"level", m.level},
          {"ones", m.ones},
          {"lhs", m.lhs.str()},
          {"rhs", m.rhs.str()}};
}

template <class S>
json swap_witness_json(const SwapWitness<S>& w) {
  return {{"outcome", {w.first_bit, w.second_bit}},
          {"state", atom_key(w.state)},
          {"weight", w.weight.str()},
          {"swapped_weight", w.swapped_weight.str()}};
}

}  // namespace

struct df_source {
  enum class Kind { polya, alternating, bernoulli, point_mass, lebesgue, beta };

  Kind kind;
  std::int64_t black = 0;
  std::int64_t white = 0;
  int start_bit = 0;
  std::optional<definetti::Rational> rate;  // bernoulli bias / point-mass location
  std::optional<definetti::BetaParams> beta_params;
};

namespace {

json describe(const df_source& s) {
  switch (s.kind) {
    case df_source::Kind::polya:
      return {{"kind", "polya"}, {"black", s.black}, {"white", s.white}};
    case df_source::Kind::alternating:
      return {{"kind", "alternating"}, {"state", s.start_bit}};
    case df_source::Kind::bernoulli:
      return {{"kind", "bernoulli"}, {"bias", s.rate->str()}};
    case df_source::Kind::point_mass:
      return {{"kind", "point-mass"}, {"r", s.rate->str()}};
    case df_source::Kind::lebesgue:
      return {{"kind", "lebesgue"}};
    case df_source::Kind::beta:
      return {{"kind", "beta"},
              {"alpha", s.beta_params->alpha.str()},
              {"beta", s.beta_params->beta.str()}};
  }
  return {{"kind", "unknown"}};
}

bool is_coalgebra_kind(df_source::Kind kind) {
  return kind == df_source::Kind::polya || kind == df_source::Kind::alternating ||
         kind == df_source::Kind::bernoulli;
}

LimitCandidate to_candidate(const df_source& s) {
  switch (s.kind) {
    case df_source::Kind::point_mass:
      return LimitCandidate::point_mass(*s.rate);
    case df_source::Kind::lebesgue:
      return LimitCandidate::lebesgue();
    case df_source::Kind::beta:
      return LimitCandidate::beta(*s.beta_params);
    default:
      raise(ErrorCode::bad_argument,
            "source is a transition system, not a candidate measure");
  }
}

ConePrefix build_cone(const df_source& s, int horizon) {
  switch (s.kind) {
    case df_source::Kind::polya:
      return cone_from_coalgebra(polya(), UrnState(s.black, s.white), horizon);
    case df_source::Kind::alternating:
      return cone_from_coalgebra(alternating(), s.start_bit, horizon);
    case df_source::Kind::bernoulli:
      return cone_from_coalgebra(bernoulli(*s.rate), *s.rate, horizon);
    default:
      return cone_from_candidate(to_candidate(s), horizon);
  }
}

template <class S>
df_status exchangeable_impl(const Coalgebra<S>& h, const S& start, json source_desc,
                            char** out) {
  json report = {{"coalgebra", std::move(source_desc)}, {"state", atom_key(start)}};
  if (auto witness = exchangeability_counterexample(h, start)) {
    report["exchangeable"] = false;
    report["witness"] = swap_witness_json(*witness);
    return emit_json(report, out, DF_CHECK_FAILED);
  }
  report["exchangeable"] = true;
  return emit_json(report, out, DF_OK);
}

}  // namespace

struct df_cone {
  definetti::ConePrefix cone;
  json source;
};

extern "C" {

const char* df_status_name(df_status status) {
  switch (status) {
    case DF_OK:
      return "ok";
    case DF_CHECK_FAILED:
      return "check_failed";
    case DF_ERR_BAD_ARGUMENT:
      return "bad_argument";
    case DF_ERR_PARSE:
      return "parse_error";
    case DF_ERR_DIVIDE_BY_ZERO:
      return "divide_by_zero";
    case DF_ERR_EMPTY_URN:
      return "empty_urn";
    case DF_ERR_BAD_PROBABILITY:
      return "bad_probability";
    case DF_ERR_OUT_OF_RANGE:
      return "out_of_range";
    case DF_ERR_BAD_PARAMS:
      return "bad_params";
    case DF_ERR_HORIZON_EXCEEDED:
      return "horizon_exceeded";
    case DF_ERR_NOT_A_CONE:
      return "not_a_cone";
    case DF_ERR_NOT_COMPLETELY_MONOTONE:
      return "not_completely_monotone";
    case DF_ERR_NOT_EXCHANGEABLE:
      return "not_exchangeable";
    case DF_ERR_INEXACT_CANDIDATE:
      return "inexact_candidate";
    case DF_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* df_last_error(void) { return t_last_error.c_str(); }

void df_string_free(char* s) { std::free(s); }

df_status df_source_polya(int64_t black, int64_t white, df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    UrnState validated(black, white);
    (void)validated;
    *out = new df_source{df_source::Kind::polya, black, white, 0, std::nullopt,
                         std::nullopt};
    return DF_OK;
  });
}

df_status df_source_alternating(int start_bit, df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    require(start_bit == 0 || start_bit == 1, "start bit must be 0 or 1");
    *out = new df_source{df_source::Kind::alternating, 0, 0, start_bit,
                         std::nullopt, std::nullopt};
    return DF_OK;
  });
}

df_status df_source_bernoulli(const char* bias, df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    require(bias != nullptr, "null bias");
    Rational r = Rational::parse(bias);
    (void)bernoulli(r);  // validates the range
    *out = new df_source{df_source::Kind::bernoulli, 0, 0, 0, std::move(r),
                         std::nullopt};
    return DF_OK;
  });
}

df_status df_source_point_mass(const char* r, df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    require(r != nullptr, "null location");
    Rational loc = Rational::parse(r);
    (void)LimitCandidate::point_mass(loc);  // validates the range
    *out = new df_source{df_source::Kind::point_mass, 0, 0, 0, std::move(loc),
                         std::nullopt};
    return DF_OK;
  });
}

df_status df_source_lebesgue(df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    *out = new df_source{df_source::Kind::lebesgue, 0, 0, 0, std::nullopt,
                         std::nullopt};
    return DF_OK;
  });
}

df_status df_source_beta(const char* alpha, const char* beta, df_source** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    require(alpha != nullptr && beta != nullptr, "null beta parameter");
    BetaParams params(Rational::parse(alpha), Rational::parse(beta));
    *out = new df_source{df_source::Kind::beta, 0, 0, 0, std::nullopt,
                         std::move(params)};
    return DF_OK;
  });
}

int df_source_is_coalgebra(const df_source* source) {
  return source != nullptr && is_coalgebra_kind(source->kind) ? 1 : 0;
}

df_status df_source_describe_json(const df_source* source, char** out) {
  return guarded([&]() -> df_status {
    require(source != nullptr, "null source");
    require(out != nullptr, "null output pointer");
    return emit_json(describe(*source), out, DF_OK);
  });
}

void df_source_free(df_source* source) { delete source; }

df_status df_cone_build(const df_source* source, int32_t horizon, df_cone** out) {
  return guarded([&]() -> df_status {
    require(source != nullptr, "null source");
    require(out != nullptr, "null output pointer");
    *out = new df_cone{build_cone(*source, horizon), describe(*source)};
    return DF_OK;
  });
}

int32_t df_cone_horizon(const df_cone* cone) {
  return cone == nullptr ? -1 : cone->cone.horizon();
}

df_status df_cone_level_json(const df_cone* cone, int32_t level, char** out) {
  return guarded([&]() -> df_status {
    require(cone != nullptr, "null cone");
    require(out != nullptr, "null output pointer");
    json j = findist_json(cone->cone.level(level));
    j["level"] = level;
    return emit_json(j, out, DF_OK);
  });
}

void df_cone_free(df_cone* cone) { delete cone; }

df_status df_cone_verify_json(const df_cone* cone, char** out) {
  return guarded([&]() -> df_status {
    require(cone != nullptr, "null cone");
    require(out != nullptr, "null output pointer");
    json report = {{"source", cone->source}, {"horizon", cone->cone.horizon()}};
    auto failure = verify_cone(cone->cone);
    if (failure) {
      report["verdict"] = "fail";
      report["witness"] = cone_failure_json(*failure);
      return emit_json(report, out, DF_CHECK_FAILED);
    }
    report["verdict"] = "ok";
    return emit_json(report, out, DF_OK);
  });
}

df_status df_definetti_report_json(const df_cone* cone, const df_source* candidate,
                                   char** out) {
  return guarded([&]() -> df_status {
    require(cone != nullptr, "null cone");
    require(candidate != nullptr, "null candidate");
    require(out != nullptr, "null output pointer");
    LimitCandidate target = to_candidate(*candidate);
    json report = {{"source", cone->source},
                   {"horizon", cone->cone.horizon()},
                   {"candidate", describe(*candidate)}};

    if (auto failure = verify_cone(cone->cone)) {
      report["cone_verdict"] = "fail";
      report["witness"] = cone_failure_json(*failure);
      return emit_json(report, out, DF_CHECK_FAILED);
    }
    report["cone_verdict"] = "ok";

    MomentSeq moments = moments_from_cone(cone->cone);
    json moment_strings = json::array();
    for (const Rational& m : moments.values()) {
      moment_strings.push_back(m.str());
    }
    report["moments"] = std::move(moment_strings);

    if (auto failure = check_complete_monotone(moments)) {
      report["completely_monotone"] = false;
      report["witness"] = monotone_failure_json(*failure);
      return emit_json(report, out, DF_CHECK_FAILED);
    }
    report["completely_monotone"] = true;

    bool roundtrip =
        reconstruct_cone(moments, cone->cone.horizon()) == cone->cone;
    report["reconstruction_roundtrip"] = roundtrip;

    auto mismatch = match_candidate(cone->cone, target);
    if (mismatch) {
      report["match_verdict"] = "mismatch";
      report["witness"] = mismatch_json(*mismatch);
    } else {
      report["match_verdict"] = "match";
    }
    bool ok = roundtrip && !mismatch;
    return emit_json(report, out, ok ? DF_OK : DF_CHECK_FAILED);
  });
}

df_status df_table_csv(const df_cone* cone, const int32_t* levels, size_t levels_len,
                       char** out) {
  return guarded([&]() -> df_status {
    require(cone != nullptr, "null cone");
    require(out != nullptr, "null output pointer");
    require(levels != nullptr && levels_len > 0, "at least one level is required");
    std::vector<int> ks(levels, levels + levels_len);
    return emit(approximant_table_csv(cone->cone, ks), out, DF_OK);
  });
}

df_status df_table_json(const df_cone* cone, const int32_t* levels, size_t levels_len,
                        char** out) {
  return guarded([&]() -> df_status {
    require(cone != nullptr, "null cone");
    require(out != nullptr, "null output pointer");
    require(levels != nullptr && levels_len > 0, "at least one level is required");
    std::vector<int> ks(levels, levels + levels_len);
    return emit_json(approximant_table_json(cone->cone, ks), out, DF_OK);
  });
}

df_status df_exchangeable_json(const df_source* source, char** out) {
  return guarded([&]() -> df_status {
    require(source != nullptr, "null source");
    require(out != nullptr, "null output pointer");
    switch (source->kind) {
      case df_source::Kind::polya:
        return exchangeable_impl(polya(), UrnState(source->black, source->white),
                                 describe(*source), out);
      case df_source::Kind::alternating:
        return exchangeable_impl(alternating(), source->start_bit,
                                 describe(*source), out);
      case df_source::Kind::bernoulli:
        return exchangeable_impl(bernoulli(*source->rate), *source->rate,
                                 describe(*source), out);
      default:
        raise(ErrorCode::bad_argument,
              "exchangeability is a property of transition systems, not "
              "candidate measures");
    }
  });
}

df_status df_conjugacy_json(int64_t black, int64_t white, int32_t max_order,
                            int inject_posterior_shift, char** out) {
  return guarded([&]() -> df_status {
    require(out != nullptr, "null output pointer");
    ConjugacyFault fault = inject_posterior_shift != 0
                               ? ConjugacyFault::posterior_shift
                               : ConjugacyFault::none;
    ConjugacyReport result = conjugacy_check(black, white, max_order, fault);
    json rows = json::array();
    for (const ConjugacyRow& row : result.rows) {
      rows.push_back({{"outcome", row.outcome},
                      {"order", row.order},
                      {"lhs", row.lhs.str()},
                      {"rhs", row.rhs.str()},
                      {"equal", row.equal}});
    }
    json report = {{"black", black},
                   {"white", white},
                   {"max_order", max_order},
                   {"fault", fault == ConjugacyFault::none ? "none" : "posterior-shift"},
                   {"rows", std::move(rows)},
                   {"verdict", result.commutes ? "commutes" : "mismatch"}};
    if (result.first_mismatch) {
      report["witness"] = {{"outcome", result.first_mismatch->outcome},
                           {"order", result.first_mismatch->order},
                           {"lhs", result.first_mismatch->lhs.str()},
                           {"rhs", result.first_mismatch->rhs.str()}};
    }
    return emit_json(report, out, result.commutes ? DF_OK : DF_CHECK_FAILED);
  });
}

}  // extern "C"
