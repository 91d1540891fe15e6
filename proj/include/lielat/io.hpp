#pragma once

#include <json.hpp>

#include "lielat/lattice.hpp"

namespace lielat {

using Json = nlohmann::ordered_json;

// Lattice file format: {"name", "p", "dim", "basis"?, "brackets": [{"i","j","coeffs"}]}.
// Unlisted pairs mean zero bracket; coeffs are rational strings "a" or "a/b".
LieLattice lattice_from_json(const Json& j);
Json lattice_to_json(const LieLattice& l);

// Resolves "builtin:<name>[?dim=<d>]" (requires p) or reads a JSON file.
// Runs validation; throws InvalidInput / NotALattice / NotALieAlgebra.
LieLattice parse_lattice_spec(const std::string& spec, const Int& p_override);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

// Accepts "diag(a,b,...)", an inline JSON array of rows, or a filename.
QMatrix parse_matrix_arg(const std::string& arg);

std::vector<Rat> vector_from_json(const Json& j);
Json vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> parse_vector_arg(const std::string& arg);

}  // namespace lielat
