#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parasurf/homology.hpp"
#include "parasurf/poly.hpp"
#include "parasurf/surface.hpp"

namespace parasurf {

using Json = nlohmann::json;

// Polynomials serialize as arrays of "num" / "num/den" strings, constant term
// first; vectors as {"x": [...], "y": [...]}; matrices as row-major 4-arrays.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json polyvec_to_json(const PolyVec& v);
PolyVec polyvec_from_json(const Json& j);

Json polymatrix_to_json(const PolyMatrix& m);

// A class argument combines any of
//   {"sigma": j}  or  {"sigma": {"j": "coeff", ...}}   edge classes
//   {"gamma": j}  or  {"gamma": {"j": "coeff", ...}}   closed-curve classes
//   {"hvec": {"x": [...], "y": [...]}}                  explicit holonomy
// summed together; output always uses the explicit "hvec" form.
PolyVec class_from_json(const Json& j);
Json class_to_json(const PolyVec& v);

Json connection_to_json(const SaddleConnection& s);

// Minimal CSV writing: fields joined with commas, rows with newlines.  Fields
// are expected to be comma-free (numbers and simple tokens).
std::string csv_row(const std::vector<std::string>& fields);

} // namespace parasurf
