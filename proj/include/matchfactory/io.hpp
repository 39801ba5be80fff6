#pragma once

#include <string>

#include "matchfactory/multigraph.hpp"

namespace matchfactory {

/// Canonical edge-list document. Exact layout (documented in the README):
///   {"n": <int>, "edges": [
///   [a,b],
///   ...
///   ]}
/// with one edge per line and the edge id equal to the list position.
std::string serialize(const Multigraph& g);

/// Parses the edge-list document (any valid JSON with fields "n" and
/// "edges" is accepted, not just the canonical layout). Throws
/// std::invalid_argument on malformed documents, loop edges, or endpoints
/// outside [0, n).
Multigraph parse(const std::string& text);

/// DOT export; parallel copies are emitted as repeated edge statements.
std::string to_dot(const Multigraph& g, const std::string& name = "G");

}  // namespace matchfactory
