#pragma once

#include <string>
#include <string_view>

#include "kobgeo/holomap.hpp"

namespace kobgeo {

/// Parses a map file: a JSON tree of {"kind", "params", "children"} records.
/// Errors are InputError messages that start with the node path, e.g.
/// "compose/children[2]/boundary_contraction: C outside (0,1]".
HoloMap parse_map(std::string_view text);

/// Canonical form: sorted keys, shortest round-trip floats, two-space indent,
/// trailing newline. serialize_map(parse_map(s)) == s for canonical s.
std::string serialize_map(const HoloMap& f);

}  // namespace kobgeo
