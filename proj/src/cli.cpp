#include "cantor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/oscillator.hpp"
#include "cantor/serialize.hpp"
#include "cantor/verify.hpp"

namespace cantor::cli {

namespace {

constexpr unsigned kMaxApproximantLevel = 20;
constexpr unsigned kMaxVariationLevel = 12;

enum class Command { Eval, Locate, Approximant, Variation, Witness, Cut, Verify };

struct RunConfig {
  Command command = Command::Eval;
  unsigned level = 0;
  unsigned max_level = 0;
  unsigned depth = 4;
  std::string policy = "literal";
  std::string x;
  std::string delta;
  std::string epsilon;
  std::string format = "csv";
  std::string out;
  int float_digits = kDefaultFloatDigits;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, otherwise to the output stream.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + cfg.out + "'");
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const Rational x = Rational::parse(cfg.x);
  const auto policy = parse_policy(cfg.policy);
  const Rational y = cfg.level > 0 ? approximant(cfg.level, policy)(x) : eval_limit(x, policy);
  emit(cfg, out, y.to_compact_string() + "\n");
  return kSuccess;
}

int cmd_locate(const RunConfig& cfg, std::ostream& out) {
  const Rational x = Rational::parse(cfg.x);
  emit(cfg, out, location_to_json(x, cantor_membership(x)).dump(2) + "\n");
  return kSuccess;
}

int cmd_approximant(const RunConfig& cfg, std::ostream& out) {
  if (cfg.level < 1 || cfg.level > kMaxApproximantLevel) {
    throw UsageError("--level must be in 1.." + std::to_string(kMaxApproximantLevel));
  }
  const PLFunction f = approximant(cfg.level, parse_policy(cfg.policy));
  if (cfg.format == "csv") {
    emit(cfg, out, to_csv(f, cfg.float_digits));
  } else if (cfg.format == "json") {
    Json j;
    j["level"] = cfg.level;
    j["policy"] = cfg.policy;
    j.update(to_json(f, cfg.float_digits));
    emit(cfg, out, j.dump(2) + "\n");
  } else {
    emit(cfg, out, to_svg(f));
  }
  return kSuccess;
}

int cmd_variation(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_level < 1 || cfg.max_level > kMaxVariationLevel) {
    throw UsageError("--max-level must be in 1.." + std::to_string(kMaxVariationLevel));
  }
  bool all_agree = true;
  std::ostringstream csv;
  csv << "n,variation_exact,variation_float,agrees\n";
  Json rows = Json::array();
  std::optional<Rational> previous;
  for (unsigned n = 1; n <= cfg.max_level; ++n) {
    const Rational closed = variation_closed_form(n);
    const Rational direct = pl_total_variation(approximant(n, parse_policy(cfg.policy)));
    const bool increasing = !previous || closed > *previous;
    const bool agrees = closed == direct && increasing;
    all_agree = all_agree && agrees;
    previous = closed;
    csv << n << ',' << closed.to_string() << ',' << closed.to_decimal(cfg.float_digits) << ','
        << (agrees ? "true" : "false") << '\n';
    rows.push_back({{"n", n},
                    {"variation", closed.to_string()},
                    {"variation_float", closed.to_decimal(cfg.float_digits)},
                    {"agrees", agrees}});
  }
  if (cfg.format == "json") {
    emit(cfg, out, Json{{"rows", rows}, {"all_agree", all_agree}}.dump(2) + "\n");
  } else {
    emit(cfg, out, csv.str());
  }
  return all_agree ? kSuccess : kVerificationFailed;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  const Rational delta = Rational::parse(cfg.delta);
  const Rational epsilon = Rational::parse(cfg.epsilon);
  if (delta.sign() <= 0 || epsilon.sign() <= 0) throw UsageError("--delta and --epsilon must be positive");
  const auto policy = parse_policy(cfg.policy);
  const WitnessFamily w = witness_family(delta, epsilon, policy);
  const WitnessVerdict verdict = check_witness(w, epsilon, policy);
  emit(cfg, out, to_json(w, epsilon, verdict, cfg.float_digits).dump(2) + "\n");
  return verdict.passed() ? kSuccess : kVerificationFailed;
}

int cmd_cut(const RunConfig& cfg, std::ostream& out) {
  if (cfg.depth < 1) throw UsageError("--depth must be >= 1");
  const CutReport report = verify_cut(Rational::parse(cfg.x), cfg.depth, parse_policy(cfg.policy));
  emit(cfg, out, to_json(report, cfg.float_digits).dump(2) + "\n");
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_level < 1 || cfg.max_level > 10) throw UsageError("--max-level must be in 1..10");
  const VerificationReport report = run_verification(cfg.max_level);
  emit(cfg, out, to_json(report).dump(2) + "\n");
  return report.passed() ? kSuccess : kVerificationFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::Eval: return cmd_eval(cfg, out);
    case Command::Locate: return cmd_locate(cfg, out);
    case Command::Approximant: return cmd_approximant(cfg, out);
    case Command::Variation: return cmd_variation(cfg, out);
    case Command::Witness: return cmd_witness(cfg, out);
    case Command::Cut: return cmd_cut(cfg, out);
    case Command::Verify: return cmd_verify(cfg, out);
  }
  return kUsageError;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact construction and certificates for a Cantor-supported oscillating function", "cantor"};
  app.require_subcommand(1);
  const auto policies = CLI::IsMember({"literal", "alternating"});

  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--policy", cfg.policy, "Gap triangle orientation")->check(policies);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default: stdout)");
    sub->add_option("--float-digits", cfg.float_digits, "Significant digits of float columns")
        ->check(CLI::Range(1, 60));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate the limit function (or f_n with --level) at x");
  eval->add_option("x", cfg.x, "Point in [0,1] as p/q")->required();
  eval->add_option("--level", cfg.level, "Evaluate approximant f_n instead of the limit")
      ->check(CLI::Range(1u, kMaxApproximantLevel));
  add_policy(eval);
  add_output(eval);

  auto* locate = app.add_subcommand("locate", "Cantor membership or containing gap of x");
  locate->add_option("x", cfg.x, "Point in [0,1] as p/q")->required();
  add_output(locate);

  auto* approx = app.add_subcommand("approximant", "Export the breakpoints of f_n");
  approx->add_option("--level", cfg.level, "Construction step n")->required();
  approx->add_option("--format", cfg.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
  add_policy(approx);
  add_output(approx);

  auto* variation = app.add_subcommand("variation", "Tabulate V(f_n) with the closed-form cross-check");
  variation->add_option("--max-level", cfg.max_level, "Largest n")->required();
  variation->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_policy(variation);
  add_output(variation);

  auto* witness = app.add_subcommand("witness", "Certificate that absolute continuity fails for (epsilon, delta)");
  witness->add_option("--delta", cfg.delta, "Challenged delta as p/q")->required();
  witness->add_option("--epsilon", cfg.epsilon, "Epsilon as p/q")->required();
  add_policy(witness);
  add_output(witness);

  auto* cut = app.add_subcommand("cut", "Look for points of both signs around a Cantor point");
  cut->add_option("x", cfg.x, "Cantor point as p/q")->required();
  cut->add_option("--depth", cfg.depth, "Radii 3^-1 .. 3^-depth");
  add_policy(cut);
  add_output(cut);

  auto* verify = app.add_subcommand("verify", "Run every invariant suite");
  verify->add_option("--max-level", cfg.max_level, "Deepest construction level checked")
      ->default_val(8u);
  add_output(verify);

  const std::vector<std::pair<CLI::App*, Command>> commands{
      {eval, Command::Eval},       {locate, Command::Locate},   {approx, Command::Approximant},
      {variation, Command::Variation}, {witness, Command::Witness}, {cut, Command::Cut},
      {verify, Command::Verify}};

  std::vector<std::string> storage{"cantor"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }

  try {
    return dispatch(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace cantor::cli
