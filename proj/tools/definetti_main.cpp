// Command-line front end over the definetti C API.  Exit codes: 0 when every
// requested check verifies (or plain output succeeds), 1 when a check ran and
// found a counterexample (the witness is in the JSON on stdout), 2 for usage
// or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "definetti.h"

namespace {

constexpr long kDefaultMaxHorizon = 64;

bool read_max_horizon(long& cap, std::string& err) {
  const char* raw = std::getenv("DEFINETTI_MAX_HORIZON");
  if (raw == nullptr) {
    cap = kDefaultMaxHorizon;
    return true;
  }
  std::string text(raw);
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    err = "DEFINETTI_MAX_HORIZON must be a nonnegative integer, got '" + text + "'";
    return false;
  }
  cap = std::strtol(text.c_str(), nullptr, 10);
  return true;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return 2;
}

bool check_cap(long value, long cap, const char* what, std::string& err) {
  if (value > cap) {
    err = std::string(what) + " " + std::to_string(value) +
          " exceeds the cap " + std::to_string(cap) +
          " (DEFINETTI_MAX_HORIZON)";
    return false;
  }
  return true;
}

struct SourceOpts {
  std::string coalgebra;
  std::string candidate;
  std::int64_t black = 1;
  std::int64_t white = 1;
  int state = 0;
  std::string bias;
  std::string r;
  std::string alpha;
  std::string beta;
};

void add_source_flags(CLI::App* cmd, SourceOpts& o, bool candidates_allowed) {
  cmd->add_option("--coalgebra", o.coalgebra,
                  "transition system source: polya, alternating, or bernoulli")
      ->check(CLI::IsMember({"polya", "alternating", "bernoulli"}));
  if (candidates_allowed) {
    cmd->add_option("--candidate", o.candidate,
                    "candidate measure source: point-mass, lebesgue, or beta")
        ->check(CLI::IsMember({"point-mass", "lebesgue", "beta"}));
  }
  cmd->add_option("--black", o.black, "polya: initial black ball count (default 1)");
  cmd->add_option("--white", o.white, "polya: initial white ball count (default 1)");
  cmd->add_option("--state", o.state, "alternating: start bit (default 0)");
  cmd->add_option("--bias", o.bias, "bernoulli: heads probability as num/den");
  cmd->add_option("--r", o.r, "point-mass: location as num/den");
  cmd->add_option("--alpha", o.alpha, "beta: first parameter as num/den");
  cmd->add_option("--beta", o.beta, "beta: second parameter as num/den");
}

// Builds the source handle, or returns null with a message in err.
df_source* make_source(const SourceOpts& o, std::string& err) {
  const bool has_coalgebra = !o.coalgebra.empty();
  const bool has_candidate = !o.candidate.empty();
  if (has_coalgebra == has_candidate) {
    err = "exactly one of --coalgebra or --candidate is required";
    return nullptr;
  }
  df_source* source = nullptr;
  df_status status = DF_OK;
  if (has_coalgebra) {
    if (o.coalgebra == "polya") {
      status = df_source_polya(o.black, o.white, &source);
    } else if (o.coalgebra == "alternating") {
      status = df_source_alternating(o.state, &source);
    } else {
      if (o.bias.empty()) {
        err = "--coalgebra bernoulli requires --bias";
        return nullptr;
      }
      status = df_source_bernoulli(o.bias.c_str(), &source);
    }
  } else {
    if (o.candidate == "point-mass") {
      if (o.r.empty()) {
        err = "--candidate point-mass requires --r";
        return nullptr;
      }
      status = df_source_point_mass(o.r.c_str(), &source);
    } else if (o.candidate == "lebesgue") {
      status = df_source_lebesgue(&source);
    } else {
      if (o.alpha.empty() || o.beta.empty()) {
        err = "--candidate beta requires --alpha and --beta";
        return nullptr;
      }
      status = df_source_beta(o.alpha.c_str(), o.beta.c_str(), &source);
    }
  }
  if (status != DF_OK) {
    err = df_last_error();
    return nullptr;
  }
  return source;
}

void print_payload(const char* text) {
  std::fputs(text, stdout);
  std::size_t len = std::strlen(text);
  if (len == 0 || text[len - 1] != '\n') {
    std::fputc('\n', stdout);
  }
}

// Prints the payload (if any) and maps the status to the process exit code.
int finish(df_status status, char* payload) {
  if (payload != nullptr) {
    print_payload(payload);
    df_string_free(payload);
  }
  if (status == DF_OK) return 0;
  if (status == DF_CHECK_FAILED) return 1;
  std::fprintf(stderr, "error: %s (%s)\n", df_last_error(), df_status_name(status));
  return 2;
}

int run_cone_verify(const SourceOpts& src, long horizon, const std::string& format,
                    long cap) {
  std::string err;
  if (format != "json") return usage_error("cone-verify only supports --format json");
  if (!check_cap(horizon, cap, "horizon", err)) return usage_error(err);
  df_source* source = make_source(src, err);
  if (source == nullptr) return usage_error(err);
  df_cone* cone = nullptr;
  df_status status = df_cone_build(source, static_cast<int32_t>(horizon), &cone);
  df_source_free(source);
  if (status != DF_OK) return finish(status, nullptr);
  char* payload = nullptr;
  status = df_cone_verify_json(cone, &payload);
  df_cone_free(cone);
  return finish(status, payload);
}

int run_definetti(const SourceOpts& src, const std::string& vs,
                  const std::string& vs_r, const std::string& vs_alpha,
                  const std::string& vs_beta, long horizon,
                  const std::string& format, long cap) {
  std::string err;
  if (format != "json") return usage_error("definetti only supports --format json");
  if (!check_cap(horizon, cap, "horizon", err)) return usage_error(err);
  SourceOpts vs_opts;
  vs_opts.candidate = vs;
  vs_opts.r = vs_r;
  vs_opts.alpha = vs_alpha;
  vs_opts.beta = vs_beta;
  df_source* source = make_source(src, err);
  if (source == nullptr) return usage_error(err);
  df_source* candidate = make_source(vs_opts, err);
  if (candidate == nullptr) {
    df_source_free(source);
    return usage_error(err);
  }
  df_cone* cone = nullptr;
  df_status status = df_cone_build(source, static_cast<int32_t>(horizon), &cone);
  df_source_free(source);
  if (status != DF_OK) {
    df_source_free(candidate);
    return finish(status, nullptr);
  }
  char* payload = nullptr;
  status = df_definetti_report_json(cone, candidate, &payload);
  df_cone_free(cone);
  df_source_free(candidate);
  return finish(status, payload);
}

int run_table(const SourceOpts& src, const std::vector<int>& levels,
              const std::string& format, long cap) {
  std::string err;
  if (levels.empty()) return usage_error("--Ks needs at least one level");
  int horizon = *std::max_element(levels.begin(), levels.end());
  if (!check_cap(horizon, cap, "level", err)) return usage_error(err);
  df_source* source = make_source(src, err);
  if (source == nullptr) return usage_error(err);
  df_cone* cone = nullptr;
  df_status status = df_cone_build(source, horizon, &cone);
  df_source_free(source);
  if (status != DF_OK) return finish(status, nullptr);
  std::vector<int32_t> ks(levels.begin(), levels.end());
  char* payload = nullptr;
  if (format == "csv") {
    status = df_table_csv(cone, ks.data(), ks.size(), &payload);
  } else {
    status = df_table_json(cone, ks.data(), ks.size(), &payload);
  }
  df_cone_free(cone);
  return finish(status, payload);
}

int run_conjugacy(std::int64_t black, std::int64_t white, long orders,
                  const std::string& fault, const std::string& format, long cap) {
  std::string err;
  if (format != "json") return usage_error("conjugacy only supports --format json");
  if (!check_cap(orders, cap, "moment order", err)) return usage_error(err);
  char* payload = nullptr;
  df_status status =
      df_conjugacy_json(black, white, static_cast<int32_t>(orders),
                        fault == "posterior-shift" ? 1 : 0, &payload);
  return finish(status, payload);
}

int run_exchangeable(const SourceOpts& src, const std::string& format) {
  std::string err;
  if (format != "json") return usage_error("exchangeable only supports --format json");
  df_source* source = make_source(src, err);
  if (source == nullptr) return usage_error(err);
  char* payload = nullptr;
  df_status status = df_exchangeable_json(source, &payload);
  df_source_free(source);
  return finish(status, payload);
}

}  // namespace

int main(int argc, char** argv) {
  long cap = kDefaultMaxHorizon;
  std::string env_err;
  if (!read_max_horizon(cap, env_err)) return usage_error(env_err);

  CLI::App app{
      "Exact exchangeable-process toolkit: urn transition systems, cones over "
      "the draw-and-delete chain, moment sequences, and candidate limit "
      "measures."};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "output format: json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* cone_verify = app.add_subcommand(
      "cone-verify", "Build cone levels from a source and check the "
                     "draw-and-delete condition between consecutive levels");
  SourceOpts cv_src;
  long cv_horizon = 8;
  std::string cv_format = "json";
  add_source_flags(cone_verify, cv_src, true);
  cone_verify->add_option("--horizon", cv_horizon, "deepest level to build (default 8)");
  add_format(cone_verify, cv_format);

  auto* definetti_cmd = app.add_subcommand(
      "definetti", "Extract the moment sequence of a verified cone, check "
                   "complete monotonicity and reconstruction, and match a "
                   "candidate measure");
  SourceOpts df_src;
  std::string vs, vs_r, vs_alpha, vs_beta;
  long df_horizon = 8;
  std::string df_format = "json";
  add_source_flags(definetti_cmd, df_src, true);
  definetti_cmd
      ->add_option("--vs", vs, "candidate to match: point-mass, lebesgue, or beta")
      ->required()
      ->check(CLI::IsMember({"point-mass", "lebesgue", "beta"}));
  definetti_cmd->add_option("--vs-r", vs_r, "point-mass location as num/den");
  definetti_cmd->add_option("--vs-alpha", vs_alpha, "beta first parameter");
  definetti_cmd->add_option("--vs-beta", vs_beta, "beta second parameter");
  definetti_cmd->add_option("--horizon", df_horizon, "deepest level to use (default 8)");
  add_format(definetti_cmd, df_format);

  auto* table = app.add_subcommand(
      "table", "Approximant grid tables (grid point k/K with its exact weight) "
               "at the requested levels");
  SourceOpts tb_src;
  std::vector<int> tb_levels;
  std::string tb_format = "json";
  add_source_flags(table, tb_src, true);
  table->add_option("--Ks", tb_levels, "comma-separated approximant levels, e.g. 5,10,50")
      ->required()
      ->delimiter(',');
  add_format(table, tb_format);

  auto* conjugacy = app.add_subcommand(
      "conjugacy", "Exact Beta/coin conjugacy square check for an urn, with "
                   "optional fault injection");
  std::int64_t cj_black = 0;
  std::int64_t cj_white = 0;
  long cj_orders = 6;
  std::string cj_fault;
  std::string cj_format = "json";
  conjugacy->add_option("--black", cj_black, "black ball count")->required();
  conjugacy->add_option("--white", cj_white, "white ball count")->required();
  conjugacy->add_option("--orders", cj_orders, "highest moment order to compare (default 6)");
  conjugacy
      ->add_option("--inject-fault", cj_fault,
                   "deliberately corrupt the posterior update (posterior-shift)")
      ->check(CLI::IsMember({"posterior-shift"}));
  add_format(conjugacy, cj_format);

  auto* exchangeable = app.add_subcommand(
      "exchangeable", "Two-step swap-invariance check of a transition system "
                      "at its start state");
  SourceOpts ex_src;
  std::string ex_format = "json";
  add_source_flags(exchangeable, ex_src, false);
  add_format(exchangeable, ex_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(cone_verify)) {
    return run_cone_verify(cv_src, cv_horizon, cv_format, cap);
  }
  if (app.got_subcommand(definetti_cmd)) {
    return run_definetti(df_src, vs, vs_r, vs_alpha, vs_beta, df_horizon,
                         df_format, cap);
  }
  if (app.got_subcommand(table)) {
    return run_table(tb_src, tb_levels, tb_format, cap);
  }
  if (app.got_subcommand(conjugacy)) {
    return run_conjugacy(cj_black, cj_white, cj_orders, cj_fault, cj_format, cap);
  }
  if (app.got_subcommand(exchangeable)) {
    return run_exchangeable(ex_src, ex_format);
  }
  return usage_error("no subcommand selected");
}
