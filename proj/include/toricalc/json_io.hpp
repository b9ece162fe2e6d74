#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "toricalc/cones_semigroups.hpp"
#include "toricalc/git_toric.hpp"
#include "toricalc/lattice_linalg.hpp"
#include "toricalc/polyhedra.hpp"

namespace toricalc::json_io {

using nlohmann::json;

// Integers are written as decimal strings; readers accept strings or JSON
// numbers. Rationals use "num/den" (plain "num" when integral). Malformed
// input raises std::invalid_argument.

BigInt parse_integer(const json& j);
BigInt parse_integer_text(std::string_view text);
BigRat parse_rational(std::string_view text);
IntVector parse_int_vector(const json& j);
IntegerMatrix parse_matrix(const json& j, std::size_t cols);
Polyhedron parse_polyhedron(const json& j);
LinearizedAction parse_action(const json& j);

/// "1,2" -> {0, 1}. Indices are 1-based in text; empty text is the empty set.
Support parse_support(std::string_view csv, std::size_t n);
RatVector parse_point(std::string_view csv);

json to_json(const BigInt& x);
json to_json(const BigRat& x);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntegerMatrix& m);
json to_json(const Polyhedron& p);
json to_json(const LinearizedAction& a);
json to_json(const VRepresentation& v);
json to_json(const GradedSemigroupElement& g);
json to_json(const RingPresentation& r);
json to_json(const Support& s);

} // namespace toricalc::json_io
