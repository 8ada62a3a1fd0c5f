#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "manifest.hpp"
#include "simpcalc/constructions.hpp"
#include "simpcalc/enumeration.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/nerve.hpp"
#include "workspace.hpp"

namespace simpcalc::cli {

namespace {

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw InvalidArgument("not a number: " + s);
  return v;
}

/// space simplex 2 | boundary 2 | horn 2 1 | nerve f.json | circle |
/// product A B | quotient A B | suspension A | cone A | <spec>
FiniteSSet build_space(const Workspace& ws, const std::vector<std::string>& a) {
  const auto need = [&](std::size_t n) {
    if (a.size() != n + 1) throw InvalidArgument("space " + a[0] + " takes " + std::to_string(n) + " argument(s)");
  };
  if (a.empty()) throw InvalidArgument("space: missing builder");
  static const std::map<std::string, std::size_t> arity{
      {"simplex", 1}, {"boundary", 1}, {"horn", 2},    {"sphere", 1}, {"nerve", 1},
      {"product", 2}, {"quotient", 2}, {"suspension", 1}, {"cone", 1}};
  const std::string& b = a[0];
  const auto it = arity.find(b);
  need(it == arity.end() ? 0 : it->second);
  if (b == "simplex") return standard_simplex(to_int(a[1]));
  if (b == "boundary") return boundary(to_int(a[1]));
  if (b == "horn") return horn(to_int(a[1]), to_int(a[2]));
  if (b == "sphere") return ws.space("sphere" + a[1]);
  if (b == "nerve") {
    const Json j = read_json_file(a[1]);
    return nerve(category_from_json(j), j.contains("d") ? std::optional<int>(j.at("d").get<int>()) : std::nullopt);
  }
  if (b == "product") return product(ws.space(a[1]), ws.space(a[2])).space();
  if (b == "quotient") return quotient_by_subspace(ws.space(a[1]), ws.space(a[2]));
  if (b == "suspension") return suspension(ws.space(a[1]));
  if (b == "cone") return cone(ws.space(a[1]));
  return ws.space(b);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    if (end > start) out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite simplicial sets, homology, Mayer-Vietoris sequences and excisive towers", "simpcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false, assert_verdict = false;
  std::size_t max_enum = default_enumeration_limit;
  app.add_flag("--json", json, "Print the structured record as JSON");
  app.add_flag("--assert", assert_verdict, "Exit with 1 when the computed verdict fails");
  app.add_option("--max-enum", max_enum, "Candidate budget for exhaustive searches");

  int top = 2, dim = -1, stages = 3;
  std::string output;
  std::vector<std::string> space_args;
  auto* space = app.add_subcommand("space", "Build a simplicial set and print it");
  space->add_option("builder", space_args, "simplex n | boundary n | horn n i | sphere n | nerve FILE | "
                                           "product A B | quotient A B | suspension A | cone A | SPEC")
      ->required();
  space->add_option("-o,--output", output, "Also write the JSON serialization to a file");

  std::string spec, second, third;
  auto* homology = app.add_subcommand("homology", "Integral homology of a space");
  homology->add_option("space", spec)->required();
  homology->add_option("--top", top, "Highest degree");

  std::string cover_space, u_cells, v_cells;
  auto* mv = app.add_subcommand("mv", "Mayer-Vietoris sequence of a cover");
  mv->add_option("cover", spec, "Builtin cover name");
  mv->add_option("--space", cover_space, "Space for an explicit cover");
  mv->add_option("--u", u_cells, "Comma separated cells generating U");
  mv->add_option("--v", v_cells, "Comma separated cells generating V");
  mv->add_option("--top", top, "Highest degree");

  auto* qcat = app.add_subcommand("qcat", "Check inner horn fillers");
  qcat->add_option("space", spec)->required();
  qcat->add_option("-d", dim, "Highest horn dimension (default 2)");

  auto* mapspace = app.add_subcommand("mapspace", "Mapping space between two vertices");
  mapspace->add_option("space", spec)->required();
  mapspace->add_option("x", second)->required();
  mapspace->add_option("y", third)->required();
  mapspace->add_option("-d", dim, "Dimension cap (default 1)");

  auto* excision = app.add_subcommand("excision", "Homology pushout and chain bicartesian verdicts for a square");
  excision->add_option("square", spec)->required();

  auto* tower = app.add_subcommand("tower", "Finite stages of the excisive approximation tower");
  tower->add_option("evaluator", spec, "reduced_chains | unreduced_chains | l1_mock")->required();
  tower->add_option("space", second)->required();
  tower->add_option("-N", stages, "Last stage");
  tower->add_option("--top", top, "Highest degree in the homology table");

  auto* reduced = app.add_subcommand("reduced", "Evaluate a functor on the point");
  reduced->add_option("evaluator", spec)->required();
  reduced->add_option("-N", stages, "Last stage");

  app.add_subcommand("counterexample", "Evidence that the identity functor is not excisive");

  auto* complex = app.add_subcommand("complex", "Homology of a chain complex against its Dold-Kan homotopy");
  complex->add_option("complex", spec, "FILE.json | chains:SPACE | reduced:SPACE")->required();
  complex->add_option("--top", top, "Highest degree");

  auto* manifest = app.add_subcommand("run", "Run every task of a manifest");
  manifest->add_option("manifest", spec)->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    const Workspace ws;
    CommandResult r;
    const std::string which = app.get_subcommands().front()->get_name();
    if (which == "space") {
      const FiniteSSet x = build_space(ws, space_args);
      r = cmd_space(x);
      if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw InvalidArgument("cannot write '" + output + "'");
        file << dump(r.record.at("space"));
      }
    } else if (which == "homology") {
      r = cmd_homology(ws.space(spec), top);
    } else if (which == "mv") {
      if (!cover_space.empty()) {
        r = cmd_mv(CoverData::from_names(ws.space(cover_space), split(u_cells), split(v_cells)), top);
      } else {
        if (spec.empty()) throw InvalidArgument("mv: give a cover name or --space with --u and --v");
        r = cmd_mv(ws.cover(spec), top);
      }
    } else if (which == "qcat") {
      r = cmd_qcat(ws.space(spec), dim < 0 ? 2 : dim, max_enum);
    } else if (which == "mapspace") {
      r = cmd_mapspace(ws.space(spec), second, third, dim < 0 ? 1 : dim, max_enum);
    } else if (which == "excision") {
      r = cmd_excision(ws.square(spec));
    } else if (which == "tower") {
      r = cmd_tower(Workspace::evaluator(spec), ws.space(second), stages, top);
    } else if (which == "reduced") {
      r = cmd_reduced(Workspace::evaluator(spec), stages);
    } else if (which == "counterexample") {
      r = cmd_counterexample();
    } else if (which == "complex") {
      r = cmd_complex(ws.complex(spec), top);
    } else {
      r = run_manifest(read_json_file(spec), max_enum);
    }
    out << (json ? dump(r.record) : r.text);
    return assert_verdict && !r.ok ? 1 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace simpcalc::cli
