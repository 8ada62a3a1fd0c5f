#include "commands.hpp"

#include <iomanip>
#include <sstream>

#include "simpcalc/dold_kan.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/mayer_vietoris.hpp"
#include "simpcalc/quasicat.hpp"
#include "simpcalc/simplicial_chains.hpp"

namespace simpcalc::cli {

namespace {

std::string counts_text(const FiniteSSet& x) {
  std::string out;
  for (auto c : x.counts()) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out.empty() ? "(empty)" : out;
}

Json counts_json(const FiniteSSet& x) { return Json(x.counts()); }

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string row(const std::vector<std::string>& cells, std::size_t width = 12) {
  std::ostringstream os;
  for (const auto& c : cells) os << std::left << std::setw(static_cast<int>(width)) << c;
  std::string s = os.str();
  s.erase(s.find_last_not_of(' ') + 1);
  return s + "\n";
}

}  // namespace

CommandResult cmd_space(const FiniteSSet& x) {
  std::ostringstream os;
  os << "counts: " << counts_text(x) << "\n";
  os << "basepoint: " << (x.basepoint() ? x.cell(*x.basepoint()).name : "-") << "\n";
  for (int k = 0; k <= x.top_dim(); ++k) {
    os << "dim " << k << ":";
    for (int id : x.ids_of_dim(k)) {
      os << " " << x.cell(id).name;
      if (k > 0) {
        os << "[";
        const auto& faces = x.cell(id).faces;
        for (std::size_t i = 0; i < faces.size(); ++i) os << (i ? "," : "") << x.format(faces[i]);
        os << "]";
      }
    }
    os << "\n";
  }
  Json record{{"counts", counts_json(x)}, {"space", to_json(x)}};
  return CommandResult{std::move(record), os.str(), true};
}

CommandResult cmd_homology(const FiniteSSet& x, int top) {
  const auto groups = homology_groups(normalized_chains(x), 0, top);
  std::ostringstream os;
  Json list = Json::array();
  for (int k = 0; k <= top; ++k) {
    os << "H_" << k << " = " << groups[static_cast<std::size_t>(k)].to_string() << "\n";
    list.push_back(to_json(groups[static_cast<std::size_t>(k)]));
  }
  return CommandResult{Json{{"counts", counts_json(x)}, {"homology", std::move(list)}}, os.str(), true};
}

CommandResult cmd_mv(const CoverData& cover, int top) {
  const CoverSequence ses = cover_short_exact_sequence(cover);
  const LongExactSequence les = long_exact_sequence(ses.alpha, ses.beta, top);
  std::ostringstream os;
  os << "cover: |X| = " << cover.x().size() << ", |U| = " << cover.u().size() << ", |V| = " << cover.v().size()
     << ", |W| = " << cover.w().size() << "\n";
  os << "short exact sequence of chains: " << (ses.exact() ? "exact" : "NOT exact") << "\n";
  os << row({"degree", "position", "group", "exact", "map to next"});
  for (std::size_t k = 0; k < les.entries.size(); ++k) {
    const auto& e = les.entries[k];
    std::ostringstream m;
    if (k < les.maps.size()) m << les.maps[k];
    os << row({std::to_string(e.degree), to_string(e.position), e.group.to_string(), les.exact_at[k] ? "yes" : "NO",
               m.str()});
  }
  os << "long exact sequence: " << (les.exact() ? "exact" : "NOT exact") << "\n";
  Json record{{"short_exact", to_json(ses.exactness)}, {"les", to_json(les)}};
  return CommandResult{std::move(record), os.str(), ses.exact() && les.exact()};
}

CommandResult cmd_qcat(const FiniteSSet& x, int d, std::size_t max_enum) {
  const QuasicategoryVerdict v = is_quasicategory_up_to(x, d, max_enum);
  std::ostringstream os;
  if (v.passed) {
    os << "PASS: every inner horn up to dimension " << d << " has a filler (" << v.horns_checked << " horns)\n";
  } else {
    const HornMap& h = *v.failure;
    os << "FAIL: inner horn Λ^" << h.n << "_" << h.i << " has no filler:";
    const FiniteSSet& src = h.assignment.source();
    for (int id = 0; id < static_cast<int>(src.size()); ++id)
      if (src.cell(id).dim == h.n - 1) os << " " << src.cell(id).name << " -> " << h.target().format(h.assignment.image_of_cell(id));
    os << "\n";
  }
  return CommandResult{to_json(v), os.str(), v.passed};
}

CommandResult cmd_mapspace(const FiniteSSet& c, const std::string& x, const std::string& y, int d,
                           std::size_t max_enum) {
  const FiniteSSet m = mapping_space(c, c.id_of(x), c.id_of(y), d, max_enum);
  std::ostringstream os;
  os << "Map(" << x << ", " << y << ") up to dimension " << d << ": counts " << counts_text(m) << "\n";
  const auto groups = homology_groups(normalized_chains(m), 0, std::max(d - 1, 0));
  for (std::size_t k = 0; k < groups.size(); ++k) os << "H_" << k << " = " << groups[k].to_string() << "\n";
  Json hom = Json::array();
  for (const auto& g : groups) hom.push_back(to_json(g));
  Json record{{"counts", counts_json(m)}, {"homology", std::move(hom)}, {"space", to_json(m)}};
  return CommandResult{std::move(record), os.str(), true};
}

CommandResult cmd_excision(const SSetSquare& s) {
  const ExcisionReport r = excision_check(s);
  std::ostringstream os;
  os << "homology pushout: " << yes(r.homology_pushout) << "\n";
  os << "chain image bicartesian: " << yes(r.chain_bicartesian) << "\n";
  os << "pushout => bicartesian: " << (r.consistent() ? "holds" : "VIOLATED") << "\n";
  return CommandResult{to_json(r), os.str(), r.consistent()};
}

CommandResult cmd_tower(const StageEvaluator& f, const FiniteSSet& x, int n, int top) {
  const TowerReport r = tower_report(f, x, n, top);
  std::ostringstream os;
  os << "evaluator " << r.evaluator << ", stages 0.." << n << "\n";
  std::vector<std::string> head{"stage"};
  for (int k = 0; k <= top; ++k) head.push_back("H_" + std::to_string(k));
  head.push_back("map");
  os << row(head);
  for (std::size_t s = 0; s < r.stage_homology.size(); ++s) {
    std::vector<std::string> cells{std::to_string(s)};
    for (const auto& g : r.stage_homology[s]) cells.push_back(g.to_string());
    cells.push_back(s < r.map_is_quasi_iso.size() ? (r.map_is_quasi_iso[s] ? "quasi-iso" : "-") : "");
    os << row(cells);
  }
  if (r.colimit) {
    os << "colimit from stage " << r.colimit->index << ": ";
    if (r.colimit->value.is_zero()) {
      os << "zero complex\n";
    } else {
      for (std::size_t k = 0; k < r.colimit_homology.size(); ++k)
        os << (k ? ", " : "") << "H_" << k << " = " << r.colimit_homology[k].to_string();
      os << "\n";
    }
  } else {
    os << "no colimit: " << r.failure << "\n";
  }
  return CommandResult{to_json(r), os.str(), r.colimit.has_value()};
}

CommandResult cmd_reduced(const StageEvaluator& f, int n) {
  const ReducednessCertificate c = check_reduced(f, n);
  std::ostringstream os;
  os << "evaluator " << c.evaluator << " on the point, stages 0.." << n << ": "
     << (c.reduced ? "acyclic (reduced)" : "NOT acyclic") << "\n";
  for (std::size_t s = 0; s < c.witness.size(); ++s) {
    os << "  stage " << s << ":";
    if (c.witness[s].empty()) os << " zero complex";
    for (const auto& g : c.witness[s]) os << " " << g.to_string();
    os << "\n";
  }
  return CommandResult{to_json(c), os.str(), c.reduced};
}

CommandResult cmd_counterexample() {
  const CounterexampleReport r = identity_counterexample_report();
  std::ostringstream os;
  os << "square: S0 -> D1, S0 -> point, into D1/S0\n";
  os << "square is a homology pushout: " << yes(r.square_is_pushout) << "\n";
  os << "strict pullback of point -> D1/S0 <- D1: H_0 rank " << r.pullback_h0_rank
     << (r.pullback_is_s0 ? " (it is S0)" : "") << "\n";
  os << "H_1(D1/S0) = " << r.corner_h1.to_string() << "\n";
  os << "component counts differ (2 versus |Z|): " << yes(r.cardinalities_differ()) << "\n";
  const bool ok = r.square_is_pushout && r.pullback_h0_rank == 2 && r.corner_h1 == HomologyGroup{1, {}};
  return CommandResult{to_json(r), os.str(), ok};
}

CommandResult cmd_complex(const ChainComplex& c, int top) {
  std::ostringstream os;
  os << row({"degree", "H_n", "pi_n K(c)"});
  Json rows = Json::array();
  bool ok = true;
  for (int n = 0; n <= top; ++n) {
    const HomologyGroup h = homology(c, n);
    const HomologyGroup pi = map_homotopy_groups(c, n);
    ok = ok && h == pi;
    os << row({std::to_string(n), h.to_string(), pi.to_string()});
    rows.push_back(Json{{"degree", n}, {"homology", to_json(h)}, {"homotopy", to_json(pi)}});
  }
  os << "agree: " << yes(ok) << "\n";
  return CommandResult{Json{{"complex", to_json(c)}, {"degrees", std::move(rows)}, {"agree", ok}}, os.str(), ok};
}

}  // namespace simpcalc::cli
