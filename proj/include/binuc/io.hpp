#pragma once

#include <string>

#include <json.hpp>

#include "binuc/algebra.hpp"
#include "binuc/binuclear.hpp"
#include "binuc/lattice.hpp"
#include "binuc/torsion.hpp"

namespace binuc {

/// Lattice JSON: { "name", "elements": [...], "covers": [[lower, upper], ...] }.
nlohmann::json lattice_to_json(const FinPoset& p);
FinLattice lattice_from_json(const nlohmann::json& j);

/// Binuclear interval orders serialize as lattice JSON with "[lo,hi]" labels.
nlohmann::json binuc_poset_to_json(const BinucPoset& bp);

/// Algebra JSON per the schema with indecomposables / hom / ses tables.
nlohmann::json algebra_to_json(const AlgebraSpec& a);
AlgebraSpec algebra_from_json(const nlohmann::json& j);  // validates; SchemaError on shape issues

/// Lattice JSON plus a "classes" map from element label to indecomposables.
nlohmann::json tors_to_json(const TorsData& t);

bool looks_like_algebra(const nlohmann::json& j);

}  // namespace binuc
