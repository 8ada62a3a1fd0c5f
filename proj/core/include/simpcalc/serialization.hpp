#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "simpcalc/chain_complex.hpp"
#include "simpcalc/excision.hpp"
#include "simpcalc/homology.hpp"
#include "simpcalc/integer_matrix.hpp"
#include "simpcalc/mayer_vietoris.hpp"
#include "simpcalc/quasicat.hpp"
#include "simpcalc/simplicial_set.hpp"
#include "simpcalc/tower.hpp"

namespace simpcalc {

using Json = nlohmann::ordered_json;

/// Integers are JSON numbers when they fit in 64 bits, decimal strings
/// otherwise; both are accepted on input.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// A list of rows.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
/// Shape taken from the rows; an empty list is 0 × 0.
IntMatrix matrix_from_json(const Json& j);

/// {"basepoint": name or null, "simplices": [{"dim": k, "cells": [{"name",
/// "faces": [[word, base], ...]}]}]}, dimensions ascending and names sorted.
/// A face word is "" or "s2s0".
Json to_json(const FiniteSSet& x);
/// Throws InvalidArgument on malformed input.
FiniteSSet sset_from_json(const Json& j);

Json to_json(const HomologyGroup& g);
HomologyGroup homology_group_from_json(const Json& j);

/// {"low", "ranks", "boundaries"}.
Json to_json(const ChainComplex& c);
ChainComplex chain_complex_from_json(const Json& j);

Json to_json(const ChainMap& f);
Json to_json(const ExactnessReport& r);
Json to_json(const QuasicategoryVerdict& v);
Json to_json(const LongExactSequence& les);
Json to_json(const ExcisionReport& r);
Json to_json(const CounterexampleReport& r);
Json to_json(const ReducednessCertificate& c);
Json to_json(const TowerReport& r);

/// Canonical text: two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace simpcalc
