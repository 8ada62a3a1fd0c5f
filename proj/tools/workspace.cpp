#include "workspace.hpp"

#include <fstream>
#include <regex>

#include "simpcalc/constructions.hpp"
#include "simpcalc/error.hpp"
#include "simpcalc/simplicial_chains.hpp"

namespace simpcalc::cli {

namespace {

int to_int(const std::string& s) {
  if (s.size() > 6) throw InvalidArgument("number too large: " + s);
  return std::stoi(s);
}

std::vector<std::string> cell_names(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a list of cell names");
  return j.get<std::vector<std::string>>();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

FiniteSSet pointed_at(const FiniteSSet& x, const std::string& vertex) {
  const auto id = x.find(vertex);
  if (!id || x.cell(*id).dim != 0) throw InvalidArgument("'" + vertex + "' is not a vertex");
  return x.with_basepoint(*id);
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

FiniteCategory category_from_json(const Json& j) {
  const auto objects = j.at("objects").get<std::vector<std::string>>();
  const auto index = [&](const std::string& name) {
    for (std::size_t k = 0; k < objects.size(); ++k)
      if (objects[k] == name) return static_cast<int>(k);
    throw InvalidArgument("unknown object '" + name + "'");
  };
  if (j.contains("order")) {
    const std::size_t n = objects.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < n; ++k) leq[k][k] = true;
    for (const auto& pair : j.at("order")) {
      const auto ends = pair.get<std::vector<std::string>>();
      if (ends.size() != 2) throw InvalidArgument("an order relation is a pair");
      leq[static_cast<std::size_t>(index(ends[0]))][static_cast<std::size_t>(index(ends[1]))] = true;
    }
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (leq[a][m] && leq[m][b]) leq[a][b] = true;
    return FiniteCategory::preorder(objects, [&](int a, int b) {
      return leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    });
  }
  std::vector<FiniteCategory::Morphism> morphisms;
  std::map<std::string, int> ids;
  for (const auto& m : j.at("morphisms")) {
    const auto name = m.at("name").get<std::string>();
    ids[name] = static_cast<int>(morphisms.size());
    morphisms.push_back({name, index(m.at("source").get<std::string>()), index(m.at("target").get<std::string>())});
  }
  const auto morphism = [&](const std::string& name) {
    const auto it = ids.find(name);
    if (it == ids.end()) throw InvalidArgument("unknown morphism '" + name + "'");
    return it->second;
  };
  std::vector<int> identities;
  for (const auto& name : j.at("identities").get<std::vector<std::string>>()) identities.push_back(morphism(name));
  std::vector<std::vector<int>> composition(morphisms.size(), std::vector<int>(morphisms.size(), -1));
  for (const auto& triple : j.at("composition")) {
    const auto t = triple.get<std::vector<std::string>>();
    if (t.size() != 3) throw InvalidArgument("a composition entry is [g, f, g∘f]");
    composition[static_cast<std::size_t>(morphism(t[0]))][static_cast<std::size_t>(morphism(t[1]))] = morphism(t[2]);
  }
  return FiniteCategory(objects, std::move(morphisms), std::move(identities), std::move(composition));
}

FiniteSSet quotient_by_subspace(const FiniteSSet& x, const FiniteSSet& sub) {
  std::vector<std::string> names;
  for (const auto& c : sub.cells()) names.push_back(c.name);
  const SimplicialSubset a = SimplicialSubset::closure(x, names);
  if (!(a.materialize().with_basepoint(sub.basepoint()) == sub))
    throw InvalidArgument("quotient: the second space is not a subspace of the first");
  return quotient(a).space;
}

FiniteSSet suspension(const FiniteSSet& x) {
  return x.is_pointed() ? reduced_suspension(x) : unreduced_suspension(x);
}

FiniteSSet Workspace::space(const std::string& spec) const {
  if (const auto it = spaces_.find(spec); it != spaces_.end()) return it->second;
  if (const auto at = spec.rfind('@'); at != std::string::npos && at > 0)
    return pointed_at(space(spec.substr(0, at)), spec.substr(at + 1));
  std::smatch m;
  if (spec == "point") return point();
  if (spec == "circle") return quotient(boundary_subset(1)).space;
  if (spec == "s0") return pointed_at(boundary(1), "0");
  if (spec == "square") return nerve(FiniteCategory::square());
  if (std::regex_match(spec, m, std::regex(R"(simplex(\d+))"))) return standard_simplex(to_int(m[1]));
  if (std::regex_match(spec, m, std::regex(R"(boundary(\d+))"))) return boundary(to_int(m[1]));
  if (std::regex_match(spec, m, std::regex(R"(horn(\d+)_(\d+))"))) return horn(to_int(m[1]), to_int(m[2]));
  if (std::regex_match(spec, m, std::regex(R"(ordinal(\d+))"))) return nerve(FiniteCategory::ordinal(to_int(m[1])));
  if (std::regex_match(spec, m, std::regex(R"(sphere(\d+))")))
    return pointed_at(boundary(to_int(m[1]) + 1), "0");
  if (ends_with(spec, ".json")) {
    const Json j = read_json_file(spec);
    if (j.contains("objects")) return nerve(category_from_json(j), j.contains("d") ? std::optional<int>(j.at("d").get<int>()) : std::nullopt);
    return sset_from_json(j);
  }
  throw InvalidArgument("unknown space '" + spec + "'");
}

FiniteSSet Workspace::build_space(const Json& j) const {
  if (j.is_string()) return space(j.get<std::string>());
  if (!j.is_object()) throw InvalidArgument("a space is a name or an object");
  if (j.contains("simplices")) return sset_from_json(j);
  if (j.contains("product")) {
    const Json& p = j.at("product");
    return product(build_space(p.at(0)), build_space(p.at(1))).space();
  }
  if (j.contains("quotient")) {
    const Json& p = j.at("quotient");
    return quotient_by_subspace(build_space(p.at(0)), build_space(p.at(1)));
  }
  if (j.contains("suspension")) return suspension(build_space(j.at("suspension")));
  if (j.contains("cone")) return cone(build_space(j.at("cone")));
  if (j.contains("nerve")) {
    const Json& c = j.at("nerve");
    return nerve(category_from_json(c), c.contains("d") ? std::optional<int>(c.at("d").get<int>()) : std::nullopt);
  }
  if (j.contains("pointed")) {
    const Json& p = j.at("pointed");
    return pointed_at(build_space(p.at(0)), p.at(1).get<std::string>());
  }
  throw InvalidArgument("unrecognised space description");
}

CoverData Workspace::cover(const std::string& spec) const {
  if (const auto it = covers_.find(spec); it != covers_.end()) return it->second;
  if (spec == "two-arc") return two_arc_cover();
  if (spec == "square-halves") {
    const FiniteSSet x = nerve(FiniteCategory::square());
    const std::vector<std::string> u{"00<10<11"}, v{"00<01<11"};
    return CoverData::from_names(x, u, v);
  }
  if (spec == "degenerate-circle") {
    const FiniteSSet x = boundary(2);
    return CoverData(SimplicialSubset::whole(x), SimplicialSubset::whole(x));
  }
  if (spec == "retract" || spec == "interval-vertex") {
    const FiniteSSet x = spec == "retract" ? boundary(2) : standard_simplex(1);
    const std::vector<std::string> v{"0"};
    return CoverData(SimplicialSubset::whole(x), SimplicialSubset::closure(x, v));
  }
  throw InvalidArgument("unknown cover '" + spec + "'");
}

CoverData Workspace::build_cover(const Json& j) const {
  if (j.is_string()) return cover(j.get<std::string>());
  const FiniteSSet x = build_space(j.at("space"));
  return CoverData::from_names(x, cell_names(j.at("u")), cell_names(j.at("v")));
}

SSetSquare Workspace::square(const std::string& spec) const {
  if (const auto it = squares_.find(spec); it != squares_.end()) return square(it->second);
  if (spec == "circle") return circle_square();
  if (spec == "collapsed-circle") return collapsed_circle_square();
  if (spec == "collapsed-point") return collapsed_point_square();
  if (spec.rfind("identity:", 0) == 0) return identity_square(space(spec.substr(9)));
  throw InvalidArgument("unknown square '" + spec + "'");
}

ChainComplex Workspace::complex(const std::string& spec) const {
  if (const auto it = complexes_.find(spec); it != complexes_.end()) return it->second;
  if (spec.rfind("chains:", 0) == 0) return normalized_chains(space(spec.substr(7)));
  if (spec.rfind("reduced:", 0) == 0) return reduced_normalized_chains(space(spec.substr(8)));
  if (ends_with(spec, ".json")) return chain_complex_from_json(read_json_file(spec));
  throw InvalidArgument("unknown complex '" + spec + "'");
}

StageEvaluator Workspace::evaluator(const std::string& name) {
  if (name == "reduced_chains" || name == "chains") return reduced_chains_evaluator();
  if (name == "unreduced_chains") return unreduced_chains_evaluator();
  if (name == "l1_mock") return l1_mock_evaluator();
  throw InvalidArgument("unknown evaluator '" + name + "'");
}

void Workspace::define_space(const std::string& name, FiniteSSet x) { spaces_.insert_or_assign(name, std::move(x)); }
void Workspace::define_cover(const std::string& name, CoverData c) { covers_.insert_or_assign(name, std::move(c)); }
void Workspace::define_square(const std::string& name, const std::string& spec) {
  if (spec == name) throw InvalidArgument("square '" + name + "' refers to itself");
  squares_.insert_or_assign(name, spec);
}
void Workspace::define_complex(const std::string& name, ChainComplex c) {
  complexes_.insert_or_assign(name, std::move(c));
}

}  // namespace simpcalc::cli
