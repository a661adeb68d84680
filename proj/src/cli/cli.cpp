#include "lctkit/cli/cli.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lctkit/core/error.hpp"

namespace lctkit::cli {

using nlohmann::json;

namespace {

struct Spec {
  const char* name;
  const char* help;
  std::vector<std::string> flags;
};

// Which flags each subcommand accepts.
const std::vector<Spec>& subcommands() {
  static const std::vector<Spec> specs = {
      {"parse", "Parse a monomial ideal or a polynomial list", {"ideal", "poly", "vars"}},
      {"lct", "Log canonical threshold of a monomial ideal", {"ideal", "vars", "c"}},
      {"newton", "Newton polyhedron and its central face", {"ideal", "vars", "point"}},
      {"multiplier", "Multiplier ideal of a monomial ideal", {"ideal", "vars", "c", "strict"}},
      {"colength", "Colength of a monomial ideal", {"ideal", "vars"}},
      {"initial", "Initial ideal via truncated linear algebra",
       {"ideal", "poly", "vars", "order", "weights", "max-trunc", "trunc"}},
      {"semidecide", "Sound log canonical test through the initial ideal",
       {"ideal", "poly", "vars", "c", "order", "weights", "max-trunc"}},
      {"lattice", "Lattice points of a rational simplex", {"a"}},
      {"bounds", "Lower bounds on simplex lattice counts", {"n", "crossover"}},
      {"rigidity", "Quadric count against the colength bound", {"n"}},
      {"degrees", "Degree arithmetic on a hypersurface", {"d", "m", "degz", "degw", "degx", "steps"}},
      {"verify", "Exhaustive verification over a monomial universe", {"suite", "n", "box"}},
      {"registry", "Recorded literature thresholds", {"name", "param"}},
      {"weighted", "Threshold of a pure-power system", {"m", "c"}},
      {"criterion", "Weighted-degree test for a polynomial", {"poly", "vars", "weights", "c"}},
      {"witness", "Monomial non-log-canonical witness", {"ideal", "vars", "weights", "c"}},
      {"corti", "Intersection bound on a weighted blow-up", {"weights", "c"}},
      {"blowup", "Discrepancy of a smooth blow-up", {"codim", "c", "mult"}},
  };
  return specs;
}

void add_flag(CLI::App* sub, const std::string& flag, Options& o) {
  if (flag == "ideal") sub->add_option("-i,--ideal", o.ideal, "Comma-separated generators, or @path");
  else if (flag == "poly") sub->add_option("-p,--poly", o.poly, "Comma-separated polynomials, or @path");
  else if (flag == "vars") sub->add_option("--vars", o.vars, "Variable names, e.g. x,y,z");
  else if (flag == "c") sub->add_option("--c", o.c, "Coefficient p/q");
  else if (flag == "weights") sub->add_option("--weights", o.weights, "Comma-separated rational weights");
  else if (flag == "order")
    sub->add_option("--order", o.order, "Term order")->check(CLI::IsMember({"lexlow", "weight"}));
  else if (flag == "max-trunc")
    sub->add_option("--max-trunc", o.max_trunc, "Largest truncation order tried")->check(CLI::Range(1u, 4096u));
  else if (flag == "trunc") sub->add_option("--trunc", o.trunc, "Fixed truncation order")->check(CLI::Range(1u, 4096u));
  else if (flag == "point") sub->add_option("--point", o.point, "Point to test for membership");
  else if (flag == "strict") sub->add_flag("--strict", o.strict, "Ordinary instead of upper multiplier ideal");
  else if (flag == "a") sub->add_option("--a", o.a, "Positive rational normal, or @path");
  else if (flag == "n") sub->add_option("--n", o.n, "Dimension");
  else if (flag == "crossover") sub->add_flag("--crossover", o.crossover, "Table for every dimension up to --n");
  else if (flag == "d") sub->add_option("--d", o.d, "Hypersurface degree");
  else if (flag == "m") sub->add_option("--m", o.m, "Comma-separated multiples or exponents");
  else if (flag == "degz") sub->add_option("--degz", o.deg_z, "Degree of the cycle Z");
  else if (flag == "degw") sub->add_option("--degw", o.deg_w, "Degree of the cycle W");
  else if (flag == "degx") sub->add_option("--degx", o.deg_x, "Degree of the ambient X");
  else if (flag == "steps") sub->add_option("--steps", o.steps, "Residual steps");
  else if (flag == "suite")
    sub->add_option("--suite", o.suite, "Suite to run")->check(CLI::IsMember({"colength", "multiplier", "all"}));
  else if (flag == "box") sub->add_option("--box", o.box, "Box side B");
  else if (flag == "name") sub->add_option("--name", o.name, "Entry name");
  else if (flag == "param") sub->add_option("--param", o.params, "key=value, repeatable");
  else if (flag == "codim") sub->add_option("--codim", o.codim, "Codimension of the centre");
  else if (flag == "mult") sub->add_option("--mult", o.mult, "Multiplicity along the centre");
}

void print_error(std::ostream& err, bool table_mode, const std::string& kind, const std::string& message) {
  if (table_mode) {
    err << "error (" << kind << "): " << message << "\n";
  } else {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    err << j.dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  bool json_mode = false;
  bool table_mode = std::find(args.begin(), args.end(), "--table") != args.end();

  CLI::App app{"Exact log canonical thresholds and colength bounds for monomial ideals", "lctkit"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* json_flag = app.add_flag("--json", json_mode, "JSON output (default)");
  app.add_flag("--table", table_mode, "Human-readable output")->excludes(json_flag);

  for (const auto& spec : subcommands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& flag : spec.flags) add_flag(sub, flag, opts);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, table_mode, "usage", e.what());
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  for (const CLI::Option* opt : chosen->get_options())
    if (opt->count() > 0 && !opt->get_lnames().empty()) opts.present.push_back(opt->get_lnames().front());

  try {
    const Outcome outcome = run_command(chosen->get_name(), opts);
    if (table_mode)
      render_table(out, outcome.value);
    else
      out << outcome.value.dump() << "\n";
    return outcome.exit_code;
  } catch (const UsageError& e) {
    print_error(err, table_mode, "usage", e.what());
    return 2;
  } catch (const Error& e) {
    print_error(err, table_mode, e.kind(), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error(err, table_mode, "internal", e.what());
    return 1;
  }
}

}  // namespace lctkit::cli
