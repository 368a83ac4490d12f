#include "toricarc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "toricarc/errors.hpp"
#include "toricarc/report.hpp"

namespace toricarc {

std::size_t resolve_budget(std::optional<std::size_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value == nullptr || *env_value == '\0') return kDefaultBudget;
  std::string text(env_value);
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 18)
    throw ParseError("TORICARC_BUDGET must be a nonnegative integer, got '" + text + "'");
  return std::stoull(text);
}

namespace {

struct RunConfig {
  std::string subcommand;
  std::string path;
  std::size_t cutoff = 20;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool allow_non_fano = false;
  std::optional<std::size_t> budget;
  std::string q_spec;
  bool symbolic = false;
  std::string a;
  std::string b;
  std::size_t order = 0;
};

std::vector<Rational> parse_q_spec(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

IntVector point_or_zero(const std::string& text, std::size_t rank) {
  if (text.empty()) return IntVector(rank, Int(0));
  IntVector v = parse_int_vector(text);
  if (v.size() != rank)
    throw InvariantError("lattice point " + to_string(v) + " must have " + std::to_string(rank) + " coordinates");
  return v;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("'" + path + "' contains no relations");
  return lines;
}

Report dispatch(const RunConfig& cfg) {
  std::size_t budget = resolve_budget(cfg.budget, std::getenv("TORICARC_BUDGET"));

  if (cfg.subcommand == "jets") {
    auto lines = read_lines(cfg.path);
    VariableNames names = discover_variables(lines);
    std::vector<Poly> base;
    for (const auto& l : lines) base.push_back(parse_poly(l, names));
    return jets_report(jet_relations(base, names, cfg.order));
  }

  Fan fan = load_fan(cfg.path);
  if (cfg.subcommand == "validate") return validation_report(fan, validate_fan(fan));

  CoxData cd = build_cox_data(fan);
  if (cfg.subcommand == "cohomology") {
    Presentation p = classical_presentation(cd);
    GroebnerBasis gb = buchberger(p.relations, p.order, budget);
    return cohomology_report(cd, p, gb, betti_numbers(cd, budget));
  }
  if (cfg.subcommand == "quantum") {
    std::optional<std::vector<Rational>> spec;
    if (!cfg.q_spec.empty()) spec = parse_q_spec(cfg.q_spec);
    QuantumRing ring(cd, spec, cfg.allow_non_fano, budget);
    RankReport rank = quantum_rank_check(cd, cfg.trials, cfg.seed, cfg.allow_non_fano, budget);
    std::vector<ProductEntry> products;
    std::size_t n = cd.num_rays();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) products.push_back({{i, j}, ring.product({i, j})});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) products.push_back({{i, j, k}, ring.product({i, j, k})});
    return quantum_report(cd, ring, rank, products);
  }
  if (cfg.subcommand == "series") return series_report(cd, cousin_series_check(cd, cfg.cutoff));
  if (cfg.subcommand == "verify-main") return theorem_report(cd, check_theorem_main(cd, cfg.trials, cfg.seed, budget));
  if (cfg.subcommand == "codim") {
    IntVector a = point_or_zero(cfg.a, cd.a_rank);
    IntVector b = point_or_zero(cfg.b, cd.a_rank);
    if (!cd.semigroup.contains(a)) throw NotInAPlus(to_string(a) + " is not in A_+");
    Int codim = self_embedding_codim(cd, a, b);
    IntVector image = cd.beta(b);
    Int top = *std::max_element(image.begin(), image.end());
    std::size_t m = top.get_ui();
    ShiftMap sa = epsilon_shift(cd, a, m);
    ShiftMap sb = epsilon_shift(cd, b, m);
    std::vector<std::string> warnings = sb.warnings;
    return codim_report(cd, {a, b, codim, m, nested_image_codim(sa, sb)}, warnings);
  }
  if (cfg.subcommand == "strata") return strata_report(cd, stratum_descriptor(cd, point_or_zero(cfg.a, cd.a_rank)));
  if (cfg.subcommand == "floer") return floer_report(cd, floer_series(cd, cfg.cutoff, budget));
  throw InputError("unknown subcommand '" + cfg.subcommand + "'");
}

bool report_failed(const Report& r) {
  const auto& j = r.json;
  const std::string command = j.at("command");
  if (command == "series") return !j.at("holds").get<bool>();
  if (command == "verify-main") return !j.at("verified").get<bool>();
  return false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Cohomology of toric varieties and their arc spaces", "toricarc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cutoff", cfg.cutoff, "Series truncation degree")->check(CLI::PositiveNumber);
  app.add_option("--trials", cfg.trials, "Random q-specializations")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for q-specializations");
  app.add_flag("--allow-non-fano", cfg.allow_non_fano, "Build quantum relations for non-Fano fans");
  app.add_option("--budget", cfg.budget, "Groebner reduction step budget");

  auto fan_command = [&](const std::string& name, const std::string& description) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("fan", cfg.path, "Fan file")->required();
    return sub;
  };
  fan_command("validate", "Check smoothness, facet pairing, spanning and the Fano condition");
  fan_command("cohomology", "Classical presentation and Betti numbers");
  CLI::App* quantum = fan_command("quantum", "Quantum presentation, rank check and product table");
  auto* qspec = quantum->add_option("--q-spec", cfg.q_spec, "Specialize q to nonzero rationals c1,...,cr");
  auto* symbolic = quantum->add_flag("--symbolic", cfg.symbolic, "Keep q symbolic (default)");
  qspec->excludes(symbolic);
  fan_command("series", "Check the graded series identity of the stratification");
  fan_command("verify-main", "Verify the arc cohomology isomorphism");
  CLI::App* codim = fan_command("codim", "Codimension of nested self-embeddings");
  codim->add_option("--a", cfg.a, "Lattice point a (default 0)");
  codim->add_option("--b", cfg.b, "Lattice point b")->required();
  CLI::App* strata = fan_command("strata", "Describe the stratum of a lattice point");
  strata->add_option("--a", cfg.a, "Lattice point a")->required();
  fan_command("floer", "Rank and degree shifts of the localization");
  CLI::App* jets = app.add_subcommand("jets", "Jet relations of polynomials read one per line");
  jets->add_option("file", cfg.path, "Relation file")->required();
  jets->add_option("--order", cfg.order, "Truncation order m")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    Report report = dispatch(cfg);
    if (cfg.format == "json") {
      out << report.json.dump(2) << "\n";
    } else {
      out << report.text;
    }
    return report_failed(report) ? 1 : 0;
  } catch (const VerificationError& e) {
    err << "toricarc: verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "toricarc: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace toricarc
