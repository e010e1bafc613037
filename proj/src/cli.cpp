#include "linres/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linres/betti.hpp"
#include "linres/criterion.hpp"
#include "linres/harness.hpp"
#include "linres/quotients.hpp"
#include "linres/render.hpp"
#include "linres/serialize.hpp"

namespace linres {

namespace {

using nlohmann::ordered_json;

struct CommonOpts {
  std::string ideal_arg;
  std::vector<int> characteristics;
  bool pretty = false;
  bool exit_status = false;
};

// --ideal accepts a file path or a literal generator list.
MonomialIdeal load_ideal(const std::string& arg, std::ostream& err) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  ParsedIdeal parsed = parse_ideal(text);
  for (const std::string& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed.ideal;
}

void emit(const ordered_json& payload, bool pretty, std::ostream& out) {
  out << (pretty ? payload.dump(2) : payload.dump()) << "\n";
}

std::vector<int> chars_or_default(const std::vector<int>& given, std::vector<int> fallback) {
  if (given.empty()) return fallback;
  for (int c : given) validate_characteristic(c);
  return given;
}

int cmd_check(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  const CriterionVerdict verdict = has_linear_resolution_criterion(ideal);
  emit(criterion_to_json(ideal, verdict), opts.pretty, out);
  return (opts.exit_status && !verdict.linear_resolution) ? 1 : 0;
}

int cmd_betti(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  const std::vector<int> chars = chars_or_default(opts.characteristics, {0});
  const std::vector<BettiTable> tables = betti_tables(ideal, chars);
  if (tables.size() == 1) {
    emit(betti_to_json(tables.front()), opts.pretty, out);
  } else {
    ordered_json array = ordered_json::array();
    for (const BettiTable& t : tables) array.push_back(betti_to_json(t));
    emit(array, opts.pretty, out);
  }
  return 0;
}

int cmd_order(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  const TreeOrder order = tree_order(ideal);
  const QuotientVerdict colon = has_linear_quotients_in_order(ideal, order.order);

  ordered_json trace = ordered_json::array();
  std::vector<Monomial> prefix;
  for (std::size_t i = 0; i < order.order.size(); ++i) {
    const Monomial& m = ideal.generator(order.order[i]);
    if (i > 0) {
      ordered_json colon_json = ordered_json::array();
      bool linear = true;
      for (const Monomial& q : colon_generators(prefix, m)) {
        colon_json.push_back(format_monomial(q));
        linear = linear && q.degree() == 1;
      }
      trace.push_back(ordered_json{{"index", i + 1},
                                   {"generator", format_monomial(m)},
                                   {"colon", colon_json},
                                   {"linear", linear}});
    }
    prefix.push_back(m);
  }

  ordered_json payload = tree_order_to_json(order);
  payload["has_linear_quotients"] = colon.has_linear_quotients;
  if (colon.failing_index) payload["failing_index"] = *colon.failing_index;
  if (colon.offending_generator)
    payload["offending_generator"] = format_monomial(*colon.offending_generator);
  payload["colon_trace"] = trace;
  emit(payload, opts.pretty, out);
  return (opts.exit_status && !colon.has_linear_quotients) ? 1 : 0;
}

int cmd_socle(const CommonOpts& opts, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  const std::vector<Monomial> socle = socle_monomials(ideal);
  ordered_json monomials = ordered_json::array();
  ordered_json degrees = ordered_json::array();
  for (const Monomial& f : socle) {
    monomials.push_back(format_monomial(f));
    degrees.push_back(f.degree());
  }
  emit(ordered_json{{"socle", monomials}, {"degrees", degrees}}, opts.pretty, out);
  return 0;
}

int cmd_power(const CommonOpts& opts, int k, std::ostream& out, std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  const MonomialIdeal pk = power(ideal, k);
  emit(ordered_json{{"k", k},
                    {"degree", pk.degree()},
                    {"count", pk.num_generators()},
                    {"generators", generators_to_json(pk)}},
       opts.pretty, out);
  return 0;
}

int cmd_render(const CommonOpts& opts, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const MonomialIdeal ideal = load_ideal(opts.ideal_arg, err);
  if (format == "svg") {
    out << render_lattice_svg(ideal);
  } else if (format == "dot") {
    out << render_lattice_dot(ideal);
  } else {
    throw CLI::ValidationError("--format must be dot or svg");
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"linear-resolution toolkit for equigenerated monomial ideals in three variables"};
  app.require_subcommand(1);

  CommonOpts opts;
  auto add_common = [&](CLI::App* cmd, bool wants_ideal = true) {
    if (wants_ideal)
      cmd->add_option("--ideal", opts.ideal_arg, "ideal: file path or literal generator list")
          ->required();
    cmd->add_option("--char", opts.characteristics, "field characteristic (repeatable)");
    cmd->add_flag("--pretty", opts.pretty, "indented JSON output");
    cmd->add_flag("--exit-status", opts.exit_status,
                  "exit 1 when a predicate subcommand reports a negative verdict");
  };

  CLI::App* check = app.add_subcommand("check", "combinatorial linear-resolution criterion");
  add_common(check);

  CLI::App* betti = app.add_subcommand("betti", "exact multigraded Betti table (oracle)");
  add_common(betti);

  CLI::App* order = app.add_subcommand("order", "tree ordering and colon trace");
  add_common(order);

  CLI::App* socle = app.add_subcommand("socle", "socle monomials of S/I");
  add_common(socle);

  int power_k = 2;
  CLI::App* power_cmd = app.add_subcommand("power", "minimal generators of I^k");
  add_common(power_cmd);
  power_cmd->add_option("--powers", power_k, "exponent k")->required();

  std::string format = "svg";
  CLI::App* render = app.add_subcommand("render", "lattice picture of the dual graph");
  add_common(render);
  render->add_option("--format", format, "dot | svg");

  int sweep_degree = 0;
  std::string sweep_mode = "exhaustive";
  std::int64_t sweep_samples = 0;
  std::uint64_t sweep_seed = 0;
  int sweep_powers = 2;
  int sweep_threads = 0;
  bool force_exhaustive = false;
  CLI::App* sweep = app.add_subcommand("sweep", "enumerate ideals and cross-validate all checks");
  add_common(sweep, /*wants_ideal=*/false);
  sweep->add_option("--degree", sweep_degree, "generation degree d")->required();
  sweep->add_option("--mode", sweep_mode, "exhaustive | sample");
  sweep->add_option("--samples", sweep_samples, "sample count (sample mode)");
  sweep->add_option("--seed", sweep_seed, "sample seed (sample mode)");
  sweep->add_option("--powers", sweep_powers, "validate powers up to this exponent");
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = hardware)");
  sweep->add_flag("--force-exhaustive", force_exhaustive,
                  "allow exhaustive enumeration above degree 4");

  CLI::App* reisner = app.add_subcommand("reisner", "characteristic-dependence demonstration");
  add_common(reisner, /*wants_ideal=*/false);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("linres");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(opts, out, err);
    if (betti->parsed()) return cmd_betti(opts, out, err);
    if (order->parsed()) return cmd_order(opts, out, err);
    if (socle->parsed()) return cmd_socle(opts, out, err);
    if (power_cmd->parsed()) return cmd_power(opts, power_k, out, err);
    if (render->parsed()) return cmd_render(opts, format, out, err);
    if (reisner->parsed()) {
      const std::vector<int> chars = chars_or_default(opts.characteristics, {0, 2, 3});
      emit(reisner_to_json(reisner_demo(chars)), opts.pretty, out);
      return 0;
    }
    if (sweep->parsed()) {
      EnumerationMode mode;
      if (sweep_mode == "exhaustive") {
        mode = EnumerationMode::Exhaustive();
        mode.allow_large_exhaustive = force_exhaustive;
      } else if (sweep_mode == "sample") {
        mode = EnumerationMode::Sample(sweep_samples, sweep_seed);
      } else {
        err << "error: --mode must be exhaustive or sample\n";
        return 2;
      }
      const std::vector<int> chars = chars_or_default(opts.characteristics, {0, 2, 3});
      const SweepReport report = run_sweep(sweep_degree, mode, sweep_powers, chars, sweep_threads);
      emit(sweep_to_json(report), opts.pretty, out);
      err << "sweep: " << report.population << " ideals in " << report.elapsed_ms << " ms\n";
      return report.mismatches.empty() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace linres
