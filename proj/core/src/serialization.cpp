#include "simpcalc/serialization.hpp"

#include <algorithm>
#include <map>

#include "simpcalc/error.hpp"

namespace simpcalc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

std::string word(const Simplex& s) {
  std::string out;
  for (int d : s.degeneracies) out += "s" + std::to_string(d);
  return out;
}

std::vector<int> parse_word(const std::string& w) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    if (w[pos] != 's') throw InvalidArgument("json: bad degeneracy word '" + w + "'");
    std::size_t end = pos + 1;
    while (end < w.size() && std::isdigit(static_cast<unsigned char>(w[end]))) ++end;
    if (end == pos + 1) throw InvalidArgument("json: bad degeneracy word '" + w + "'");
    out.push_back(std::stoi(w.substr(pos + 1, end - pos - 1)));
    pos = end;
  }
  return out;
}

Json groups_to_json(const std::vector<HomologyGroup>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) out.push_back(to_json(g));
  return out;
}

const char* kind_name(Stabilization k) {
  switch (k) {
    case Stabilization::zero_tail: return "zero-tail";
    case Stabilization::isomorphisms: return "isomorphisms";
    case Stabilization::quasi_isomorphisms: return "quasi-isomorphisms";
  }
  return "?";
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("json: bad integer '" + j.get<std::string>() + "'");
    return x;
  }
  throw InvalidArgument("json: expected an integer");
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw InvalidArgument("json: matrix must be a list of rows");
  IntMatrix m(rows, cols);
  if (rows == 0) {
    if (!j.empty()) throw InvalidArgument("json: matrix has rows but none were expected");
    return m;
  }
  if (j.size() != rows) throw InvalidArgument("json: matrix has the wrong number of rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidArgument("json: matrix row has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("json: matrix must be a list of rows");
  const std::size_t cols = j.empty() || !j[0].is_array() ? 0 : j[0].size();
  return matrix_from_json(j, j.size(), cols);
}

Json to_json(const FiniteSSet& x) {
  Json out;
  out["basepoint"] = x.basepoint() ? Json(x.cell(*x.basepoint()).name) : Json(nullptr);
  Json dims = Json::array();
  for (int k = 0; k <= x.top_dim(); ++k) {
    Json cells = Json::array();
    for (int id : x.ids_of_dim(k)) {
      const auto& c = x.cell(id);
      Json cell;
      cell["name"] = c.name;
      if (k > 0) {
        Json faces = Json::array();
        for (const auto& f : c.faces) faces.push_back(Json::array({word(f), x.cell(f.base).name}));
        cell["faces"] = std::move(faces);
      }
      cells.push_back(std::move(cell));
    }
    dims.push_back(Json{{"dim", k}, {"cells", std::move(cells)}});
  }
  out["simplices"] = std::move(dims);
  return out;
}

FiniteSSet sset_from_json(const Json& j) {
  struct Raw {
    std::string name;
    int dim;
    std::vector<std::pair<std::string, std::string>> faces;
  };
  std::vector<Raw> raws;
  for (const auto& level : field(j, "simplices")) {
    const int dim = field(level, "dim").get<int>();
    if (dim < 0) throw InvalidArgument("json: negative dimension");
    for (const auto& cell : field(level, "cells")) {
      Raw r{field(cell, "name").get<std::string>(), dim, {}};
      if (cell.contains("faces"))
        for (const auto& f : cell.at("faces")) {
          if (!f.is_array() || f.size() != 2) throw InvalidArgument("json: a face is a [word, base] pair");
          r.faces.emplace_back(f[0].get<std::string>(), f[1].get<std::string>());
        }
      raws.push_back(std::move(r));
    }
  }
  std::stable_sort(raws.begin(), raws.end(), [](const Raw& a, const Raw& b) { return a.dim < b.dim; });
  FiniteSSet::Builder builder;
  std::map<std::string, int> ids;
  for (const auto& r : raws) {
    std::vector<Simplex> faces;
    for (const auto& [w, base] : r.faces) {
      const auto it = ids.find(base);
      if (it == ids.end()) throw InvalidArgument("json: face '" + base + "' of '" + r.name + "' is not a lower cell");
      faces.push_back(Simplex{it->second, parse_word(w), r.dim - 1});
    }
    const int id = builder.add(r.name, r.dim, std::move(faces));
    if (!ids.emplace(r.name, id).second) throw InvalidArgument("json: duplicate cell name '" + r.name + "'");
  }
  if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
    const auto it = ids.find(j.at("basepoint").get<std::string>());
    if (it == ids.end()) throw InvalidArgument("json: unknown basepoint");
    builder.set_basepoint(it->second);
  }
  return std::move(builder).build();
}

Json to_json(const HomologyGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(to_json(t));
  return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}, {"text", g.to_string()}};
}

HomologyGroup homology_group_from_json(const Json& j) {
  IntVector torsion;
  if (j.contains("torsion"))
    for (const auto& t : j.at("torsion")) torsion.push_back(integer_from_json(t));
  return HomologyGroup::make(field(j, "rank").get<std::size_t>(), std::move(torsion));
}

Json to_json(const ChainComplex& c) {
  Json boundaries = Json::array();
  for (int n = c.low(); n <= c.high(); ++n) boundaries.push_back(to_json(c.boundary(n)));
  return Json{{"low", c.low()}, {"ranks", c.ranks()}, {"boundaries", std::move(boundaries)}};
}

ChainComplex chain_complex_from_json(const Json& j) {
  const int low = field(j, "low").get<int>();
  const auto ranks = field(j, "ranks").get<std::vector<std::size_t>>();
  const Json& bs = field(j, "boundaries");
  if (!bs.is_array() || bs.size() != ranks.size()) throw InvalidArgument("json: one boundary matrix per degree");
  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 0; k < ranks.size(); ++k)
    boundaries.push_back(matrix_from_json(bs[k], k == 0 ? 0 : ranks[k - 1], ranks[k]));
  return ChainComplex(low, ranks, std::move(boundaries));
}

Json to_json(const ChainMap& f) {
  Json blocks = Json::array();
  for (int n = f.low(); n <= f.high(); ++n) blocks.push_back(Json{{"degree", n}, {"matrix", to_json(f.block(n))}});
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"blocks", std::move(blocks)}};
}

Json to_json(const ExactnessReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(Json{{"slot", e.slot}, {"degree", e.degree}, {"exact", e.exact}});
  return Json{{"all_exact", r.all_exact()}, {"entries", std::move(entries)}};
}

Json to_json(const QuasicategoryVerdict& v) {
  Json out{{"passed", v.passed}, {"max_dimension", v.max_dimension}, {"horns_checked", v.horns_checked}};
  if (v.failure) {
    const HornMap& h = *v.failure;
    Json assignment = Json::object();
    const FiniteSSet& src = h.assignment.source();
    for (int id = 0; id < static_cast<int>(src.size()); ++id)
      assignment[src.cell(id).name] = h.target().format(h.assignment.image_of_cell(id));
    out["failure"] = Json{{"n", h.n}, {"i", h.i}, {"assignment", std::move(assignment)}};
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

Json to_json(const LongExactSequence& les) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < les.entries.size(); ++k) {
    const auto& e = les.entries[k];
    Json row{{"degree", e.degree}, {"position", to_string(e.position)}, {"group", to_json(e.group)},
             {"exact", static_cast<bool>(les.exact_at[k])}};
    row["map_to_next"] = k < les.maps.size() ? to_json(les.maps[k]) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return Json{{"exact", les.exact()}, {"entries", std::move(rows)}};
}

Json to_json(const ExcisionReport& r) {
  return Json{{"homology_pushout", r.homology_pushout},
              {"chain_bicartesian", r.chain_bicartesian},
              {"consistent", r.consistent()}};
}

Json to_json(const CounterexampleReport& r) {
  return Json{{"pullback_H0_rank", r.pullback_h0_rank},
              {"pullback_is_S0", r.pullback_is_s0},
              {"corner_H1", to_json(r.corner_h1)},
              {"square_is_pushout", r.square_is_pushout},
              {"cardinalities_differ", r.cardinalities_differ()},
              {"excision", to_json(r.excision)}};
}

Json to_json(const ReducednessCertificate& c) {
  Json witness = Json::array();
  for (const auto& groups : c.witness) witness.push_back(groups_to_json(groups));
  return Json{{"evaluator", c.evaluator}, {"reduced", c.reduced}, {"witness", std::move(witness)}};
}

Json to_json(const TowerReport& r) {
  Json stages = Json::array();
  for (std::size_t n = 0; n < r.stage_homology.size(); ++n) {
    Json s{{"stage", n}, {"homology", groups_to_json(r.stage_homology[n])}};
    s["map_is_quasi_iso"] = n < r.map_is_quasi_iso.size() ? Json(static_cast<bool>(r.map_is_quasi_iso[n])) : Json(nullptr);
    stages.push_back(std::move(s));
  }
  Json out{{"evaluator", r.evaluator}, {"top", r.top}, {"stages", std::move(stages)}};
  if (r.colimit) {
    out["colimit"] = Json{{"index", r.colimit->index},
                          {"kind", kind_name(r.colimit->kind)},
                          {"zero", r.colimit->value.is_zero()},
                          {"homology", groups_to_json(r.colimit_homology)}};
  } else {
    out["colimit"] = nullptr;
    out["failure"] = r.failure;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace simpcalc
