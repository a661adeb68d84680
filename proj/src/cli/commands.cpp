#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "lctkit/core/error.hpp"
#include "lctkit/core/parser.hpp"
#include "lctkit/initial/initial_ideal.hpp"
#include "lctkit/lattice/bounds.hpp"
#include "lctkit/lattice/simplex.hpp"
#include "lctkit/ledger/degrees.hpp"
#include "lctkit/ledger/report_json.hpp"
#include "lctkit/ledger/rigidity.hpp"
#include "lctkit/ledger/verification.hpp"
#include "lctkit/newton/multiplier_ideal.hpp"
#include "lctkit/newton/newton_polyhedron.hpp"
#include "lctkit/newton/threshold.hpp"
#include "lctkit/singularity/colength.hpp"
#include "lctkit/singularity/formulas.hpp"
#include "lctkit/singularity/registry.hpp"
#include "lctkit/singularity/verdict.hpp"
#include "lctkit/singularity/witness.hpp"

namespace lctkit::cli {

using nlohmann::json;

bool Options::has(const std::string& flag) const {
  return std::find(present.begin(), present.end(), flag) != present.end();
}

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// "@path" reads the file; anything else is taken literally.
std::string resolve_input(const std::string& value) {
  if (value.empty() || value[0] != '@') return value;
  const std::string path = value.substr(1);
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return trim(buffer.str());
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(trim(item));
  return parts;
}

std::vector<Rational> rational_list(const std::string& text, const char* flag) {
  std::vector<Rational> values;
  for (const auto& part : split_commas(text)) values.push_back(Rational::parse(part));
  if (values.empty()) throw UsageError(std::string("--") + flag + " needs at least one value");
  return values;
}

std::uint32_t parse_exponent(const std::string& text) {
  const Rational q = Rational::parse(text);
  if (!q.is_integer() || q.sign() <= 0 || q > Rational(std::uint32_t(-1)))
    throw DomainError("expected a positive integer, got '" + text + "'");
  return static_cast<std::uint32_t>(q.numerator().get_ui());
}

void require(const Options& o, std::initializer_list<const char*> flags) {
  for (const char* f : flags)
    if (!o.has(f)) throw UsageError(std::string("missing required flag --") + f);
}

json big_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json exponents_json(const ExponentVector& e) { return json(e.entries()); }

json generators_json(const MonomialIdeal& ideal) {
  json list = json::array();
  for (const auto& g : ideal.generators()) list.push_back(exponents_json(g));
  return list;
}

json rationals_json(const std::vector<Rational>& v) {
  json list = json::array();
  for (const auto& q : v) list.push_back(rational_json(q));
  return list;
}

json integers_as_strings(const std::vector<BigInt>& v) {
  json list = json::array();
  for (const auto& z : v) list.push_back(z.get_str());
  return list;
}

struct MonomialInput {
  VariableList vars;
  MonomialIdeal ideal;
};

MonomialInput monomial_input(const Options& o) {
  require(o, {"ideal"});
  const std::string text = resolve_input(o.ideal);
  VariableList vars = o.has("vars") ? VariableList::parse(o.vars) : VariableList::infer(text);
  MonomialIdeal ideal = parse_monomial_ideal(text, vars);
  return {std::move(vars), std::move(ideal)};
}

struct PolynomialInput {
  VariableList vars;
  std::vector<Polynomial> generators;
};

PolynomialInput polynomial_input(const Options& o) {
  if (o.has("ideal") == o.has("poly")) throw UsageError("give exactly one of --ideal or --poly");
  const std::string text = resolve_input(o.has("poly") ? o.poly : o.ideal);
  VariableList vars = o.has("vars") ? VariableList::parse(o.vars) : VariableList::infer(text);
  auto generators = parse_polynomial_list(text, vars);
  return {std::move(vars), std::move(generators)};
}

TermOrder term_order(const Options& o) {
  if (o.order == "lexlow") {
    if (o.has("weights")) throw UsageError("--weights needs --order weight");
    return TermOrder::lex_lowest();
  }
  if (!o.has("weights")) throw UsageError("--order weight needs --weights");
  return TermOrder::weight_then_lex(WeightVector(rational_list(o.weights, "weights")));
}

TruncationPolicy policy(const Options& o) {
  TruncationPolicy p;
  p.cap = o.max_trunc;
  p.start = std::min(p.start, p.cap);
  return p;
}

json certificate_json(const TruncationCertificate& cert) {
  json j;
  j["truncation"] = cert.truncation;
  j["status"] = to_string(cert.status);
  j["max_standard_degree"] = cert.max_standard_degree ? json(*cert.max_standard_degree) : json(nullptr);
  return j;
}

Outcome cmd_parse(const Options& o) {
  json j;
  if (o.has("ideal") && !o.has("poly")) {
    auto in = monomial_input(o);
    j["vars"] = in.vars.names();
    j["ideal"] = to_string(in.ideal, in.vars);
    j["generators"] = generators_json(in.ideal);
    return {j};
  }
  auto in = polynomial_input(o);
  j["vars"] = in.vars.names();
  json polys = json::array();
  for (const auto& p : in.generators) polys.push_back(to_string(p, in.vars));
  j["polynomials"] = polys;
  return {j};
}

Outcome cmd_lct(const Options& o) {
  auto in = monomial_input(o);
  const auto crossing = diagonal_crossing(newton_polyhedron(in.ideal));
  json j;
  if (crossing) {
    j["lct"] = rational_json(crossing->xi.reciprocal());
    j["xi"] = rational_json(crossing->xi);
    j["normal"] = integers_as_strings(crossing->integer_normal);
  } else {
    j["lct"] = "inf";
    j["xi"] = nullptr;
    j["normal"] = nullptr;
  }
  if (o.has("c")) {
    const Rational c = Rational::parse(o.c);
    const auto verdict = monomial_verdict(in.ideal, c);
    j["c"] = rational_json(c);
    j["verdict"] = to_string(verdict.verdict);
  }
  return {j};
}

Outcome cmd_newton(const Options& o) {
  auto in = monomial_input(o);
  const NewtonPolyhedron poly = newton_polyhedron(in.ideal);
  json j;
  json vertices = json::array();
  for (const auto& v : poly.vertex_candidates()) vertices.push_back(exponents_json(v));
  j["vertices"] = vertices;
  j["orthant"] = poly.is_orthant();
  if (const auto crossing = diagonal_crossing(poly)) {
    j["xi"] = rational_json(crossing->xi);
    j["dual_normal"] = rationals_json(crossing->dual_normal);
    j["canonical_normal"] = rationals_json(crossing->canonical_normal);
    j["normal"] = integers_as_strings(crossing->integer_normal);
  } else {
    j["xi"] = nullptr;
  }
  if (o.has("point")) {
    const auto point = rational_list(o.point, "point");
    require_same_dimension(poly.dimension(), point.size());
    j["point"] = rationals_json(point);
    j["contains"] = poly.contains(point);
  }
  return {j};
}

Outcome cmd_multiplier(const Options& o) {
  require(o, {"c"});
  auto in = monomial_input(o);
  const Rational c = Rational::parse(o.c);
  const MonomialIdeal result = o.strict ? multiplier_ideal(in.ideal, c) : multiplier_ideal_plus(in.ideal, c);
  json j;
  j["c"] = rational_json(c);
  j["variant"] = o.strict ? "strict" : "upper";
  j["ideal"] = to_string(result, in.vars);
  j["generators"] = generators_json(result);
  j["trivial"] = result.is_unit();
  return {j};
}

Outcome cmd_colength(const Options& o) {
  auto in = monomial_input(o);
  const auto value = colength(in.ideal);
  json j;
  j["colength"] = value.is_finite() ? json(value.value()) : json("inf");
  j["zero_dimensional"] = in.ideal.is_zero_dimensional();
  return {j};
}

Outcome cmd_initial(const Options& o) {
  auto in = polynomial_input(o);
  const TermOrder order = term_order(o);
  const InitialIdeal result = o.has("trunc") ? initial_ideal(in.generators, order, o.trunc)
                                             : certified_initial_ideal(in.generators, order, policy(o));
  json j = certificate_json(result.certificate);
  j["order"] = order.str();
  j["initial"] = to_string(result.ideal, in.vars);
  j["generators"] = generators_json(result.ideal);
  j["standard_count"] = result.standard_count;
  return {j};
}

Outcome cmd_semidecide(const Options& o) {
  require(o, {"c"});
  auto in = polynomial_input(o);
  const Rational c = Rational::parse(o.c);
  const TermOrder order = term_order(o);
  const Semidecision s = lc_semidecide(in.generators, c, order, policy(o));
  json j;
  j["c"] = rational_json(c);
  j["order"] = order.str();
  j["verdict"] = to_string(s.verdict);
  j["source"] = to_string(s.source);
  j["initial"] = s.initial ? json(to_string(*s.initial, in.vars)) : json(nullptr);
  j["threshold"] = s.initial ? rational_json(s.threshold) : json(nullptr);
  j["certificate"] = s.certificate ? certificate_json(*s.certificate) : json(nullptr);
  return {j};
}

Outcome cmd_lattice(const Options& o) {
  require(o, {"a"});
  const SimplexSpec spec(rational_list(resolve_input(o.a), "a"));
  const auto n = static_cast<unsigned>(spec.dimension());
  json j;
  j["n"] = n;
  j["normal"] = rationals_json(spec.normal());
  j["count"] = simplex_count(spec);
  j["bound_pairing"] = rational_json(bound_pairing(n));
  j["bound_pairing_attained"] = rational_json(bound_pairing_attained(n));
  j["bound_cyclic"] = rational_json(bound_cyclic(n));
  return {j};
}

json crossover_json(const CrossoverRow& row) {
  json j;
  j["n"] = row.n;
  j["pairing"] = rational_json(row.pairing);
  j["pairing_attained"] = rational_json(bound_pairing_attained(row.n));
  j["cyclic"] = rational_json(row.cyclic);
  j["combined"] = rational_json(row.combined);
  j["larger"] = row.larger;
  j["quoted"] = row.quoted;
  j["agrees"] = row.agrees;
  return j;
}

Outcome cmd_bounds(const Options& o) {
  require(o, {"n"});
  if (o.n == 0 || o.n > 1000) throw DomainError("--n must lie in [1, 1000]");
  const auto rows = crossover_table(static_cast<unsigned>(o.n));
  json j;
  if (o.crossover) {
    json table = json::array();
    for (const auto& row : rows) table.push_back(crossover_json(row));
    j["rows"] = table;
  } else {
    j = crossover_json(rows.back());
  }
  j["computed_crossover"] = computed_crossover();
  return {j};
}

Outcome cmd_rigidity(const Options& o) {
  require(o, {"n"});
  return {to_json(rigidity_check(o.n))};
}

Outcome cmd_degrees(const Options& o) {
  json j;
  if (o.has("d")) {
    std::vector<std::uint64_t> multiples;
    if (o.has("m"))
      for (const auto& part : split_commas(o.m)) multiples.push_back(parse_exponent(part));
    j["bezout_degree"] = big_json(bezout_degree(o.d, multiples));
    if (o.has("degz") && o.has("steps")) j["residual_degree"] = big_json(residual_degree(o.d, o.deg_z, o.steps));
  }
  if (o.has("degw") && o.has("degx")) {
    j["mult_bound"] = rational_json(mult_bound(o.deg_w, o.deg_x));
    if (o.has("degz")) {
      const Rational number = intersection_number(o.deg_z, o.deg_w, o.deg_x);
      j["intersection_number"] = rational_json(number);
      j["intersection_integral"] = number.is_integer();
    }
  }
  if (j.is_null()) throw UsageError("degrees needs --d, or --degw with --degx");
  return {j};
}

Outcome cmd_verify(const Options& o) {
  if (o.suite != "colength" && o.suite != "multiplier" && o.suite != "all")
    throw UsageError("--suite must be colength, multiplier or all");
  const std::size_t n = o.has("n") ? o.n : 2;
  const auto box = static_cast<std::uint32_t>(o.has("box") ? o.box : 4);
  std::vector<VerificationReport> reports;
  if (o.suite != "multiplier") reports.push_back(verify_colength_theorem(n, box));
  if (o.suite != "colength") {
    const auto grid = lemma_grid();
    reports.push_back(verify_multiplier_lemmas(n, box, grid));
  }
  bool passed = true;
  json j;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    j[r.suite] = to_json(r);
  }
  if (reports.size() == 1) j = j.front();
  return {j, passed ? 0 : 1};
}

json entry_json(const RegistryEntry& e) {
  json j;
  j["name"] = e.name;
  json params = json::object();
  for (const auto& [key, values] : e.parameters)
    params[key] = values.size() == 1 ? json(values.front()) : json(values);
  j["parameters"] = params;
  j["threshold"] = rational_json(e.threshold);
  j["citation"] = e.citation;
  j["status"] = to_string(e.status);
  return j;
}

Outcome cmd_registry(const Options& o) {
  const Registry& registry = Registry::builtin();
  if (!o.has("name")) {
    json entries = json::array();
    for (const auto& e : registry.entries()) entries.push_back(entry_json(e));
    json j;
    j["schema_version"] = registry.schema_version();
    j["entries"] = entries;
    return {j};
  }
  std::map<std::string, std::vector<long>> params;
  for (const auto& p : o.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects key=value, got '" + p + "'");
    std::vector<long> values;
    for (const auto& part : split_commas(p.substr(eq + 1))) values.push_back(parse_exponent(part));
    params[trim(p.substr(0, eq))] = values;
  }
  return {entry_json(registry.lookup(o.name, params))};
}

Outcome cmd_weighted(const Options& o) {
  require(o, {"m"});
  std::vector<std::uint32_t> exponents;
  for (const auto& part : split_commas(resolve_input(o.m))) exponents.push_back(parse_exponent(part));
  json j;
  j["threshold"] = rational_json(weighted_lct(exponents));
  if (o.has("c")) {
    const auto verdict = pure_power_verdict(exponents, Rational::parse(o.c));
    j["c"] = rational_json(verdict.coefficient);
    j["verdict"] = to_string(verdict.verdict);
    j["witness"] = verdict.witness ? json(*verdict.witness) : json(nullptr);
  }
  return {j};
}

Outcome cmd_criterion(const Options& o) {
  require(o, {"poly", "weights", "c"});
  const std::string text = resolve_input(o.poly);
  const VariableList vars = o.has("vars") ? VariableList::parse(o.vars) : VariableList::infer(text);
  const Polynomial f = parse_polynomial(text, vars);
  const WeightVector w(rational_list(o.weights, "weights"));
  const Rational c = Rational::parse(o.c);
  json j;
  j["c"] = rational_json(c);
  j["satisfied"] = weight_criterion(c, f, w);
  return {j};
}

Outcome cmd_witness(const Options& o) {
  require(o, {"weights", "c"});
  auto in = monomial_input(o);
  const auto w = rational_list(o.weights, "weights");
  if (w.size() != 2) throw UsageError("--weights takes the two weights a,b");
  const Rational c = Rational::parse(o.c);
  const auto& monomials = in.ideal.generators();
  json j;
  j["c"] = rational_json(c);
  if (in.ideal.dimension() == 2) {
    j["kind"] = "surface";
    j["holds"] = surface_monomial_witness(monomials, w[0], w[1], c);
  } else {
    j["kind"] = "threefold";
    j["holds"] = kawakita_witness(monomials, w[0], w[1], c);
  }
  return {j};
}

Outcome cmd_corti(const Options& o) {
  require(o, {"weights", "c"});
  const auto w = rational_list(o.weights, "weights");
  if (w.size() != 2) throw UsageError("--weights takes the two weights a,b");
  json j;
  j["bound"] = rational_json(corti_intersection_bound(w[0], w[1], Rational::parse(o.c)));
  return {j};
}

Outcome cmd_blowup(const Options& o) {
  require(o, {"codim", "c", "mult"});
  if (o.codim > 1'000'000) throw DomainError("--codim is too large");
  const auto r = static_cast<unsigned>(o.codim);
  const Rational c = Rational::parse(o.c);
  const Rational mult = Rational::parse(o.mult);
  json j;
  j["margin"] = rational_json(blowup_margin(r, c, mult));
  j["canonical_necessary"] = canonical_necessary(r, c, mult);
  j["log_canonical_necessary"] = log_canonical_necessary(r, c, mult);
  return {j};
}

}  // namespace

Outcome run_command(const std::string& name, const Options& opts) {
  static const std::map<std::string, std::function<Outcome(const Options&)>> table = {
      {"parse", cmd_parse},         {"lct", cmd_lct},
      {"newton", cmd_newton},       {"multiplier", cmd_multiplier},
      {"colength", cmd_colength},   {"initial", cmd_initial},
      {"semidecide", cmd_semidecide}, {"lattice", cmd_lattice},
      {"bounds", cmd_bounds},       {"rigidity", cmd_rigidity},
      {"degrees", cmd_degrees},     {"verify", cmd_verify},
      {"registry", cmd_registry},   {"weighted", cmd_weighted},
      {"criterion", cmd_criterion}, {"witness", cmd_witness},
      {"corti", cmd_corti},         {"blowup", cmd_blowup},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown subcommand '" + name + "'");
  return it->second(opts);
}

}  // namespace lctkit::cli
