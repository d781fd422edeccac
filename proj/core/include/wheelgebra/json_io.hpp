#pragma once

#include <memory>
#include <string>

#include "wheelgebra/connection.hpp"
#include "wheelgebra/quiver.hpp"
#include "wheelgebra/wheel.hpp"

namespace wg {

// Quiver description:
//   {"vertices": ["v", ...],
//    "arrows": [{"name": "x", "tail": "v", "head": "v"}, ...],
//    "double": true, "star_parity": 1, "omega": true}
// "x*" and "dx" style names are reserved for the derived arrows.
std::unique_ptr<Quiver> load_quiver_json(const std::string& text);
std::unique_ptr<Quiver> load_quiver_file(const std::string& path);

// Connection description: a list of records
//   {"arrow": "x", "left": ["dx * x*", ...], "right": ["x* * dx", ...]}
// with the values written in the expression grammar.
Connection load_connection_json(const Quiver& q, const std::string& text);
Connection load_connection_file(const Quiver& q, const std::string& path);

// JSON rendering of a wheel element: a list of terms mirroring the canonical
// fields (coefficient, permutation, word, cyclic part).
std::string wheel_to_json(const WheelElement& u);

}  // namespace wg
