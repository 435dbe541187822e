#pragma once

#include <string>

#include "pcube/poset.hpp"
#include "pcube/representation.hpp"

namespace pcube {

// {"ground": [...], "sets": {element-label: [ground-labels...]}}
std::string representation_to_json(const Poset& p, const Representation& r);

// Strict parse of the same shape: the sets object must cover exactly p's
// elements, members must come from "ground", and every ground label must be
// used. Malformed input throws parse_error.
Representation representation_from_json(const Poset& p, const std::string& text);

// Bottom-to-top cover diagram with one rank per height; when r is given each
// node label carries its set, e.g. `top {a,b,top}`.
std::string to_dot(const Poset& p, const Representation* r = nullptr);

} // namespace pcube
