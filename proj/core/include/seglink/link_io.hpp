#pragma once

#include <iosfwd>
#include <string>

#include "seglink/geom.hpp"
#include "seglink/periodic.hpp"

namespace seglink {

/// Thrown for malformed or schema-violating geometry files.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a two-component link from JSON:
///   { "components": [ { "vertices": [[x,y,z], ...], "closed": bool }, ... ] }
/// Exactly 2 components, each with at least 2 vertices of finite numbers.
PolyLink read_link_json(const std::string& text);
PolyLink read_link_file(const std::string& path);

/// Serializes with round-trip-exact doubles, so re-reading reproduces the
/// same linking number to the last bit.
std::string write_link_json(const PolyLink& link);

/// Reads a lattice experiment description:
///   { "probe": {"a":[x,y,z],"b":[x,y,z]},
///     "cell": [ {"a":[...],"b":[...]}, ... ],
///     "directions": [[x,y,z], ...] }
/// The copy count is supplied separately by the caller.
LatticeSpec read_lattice_json(const std::string& text);
LatticeSpec read_lattice_file(const std::string& path);

}  // namespace seglink
