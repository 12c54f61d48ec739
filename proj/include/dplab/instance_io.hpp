#pragma once

#include <string>

#include "dplab/model.hpp"

namespace dplab {

/// Serializes an instance to the JSON schema:
///   {"x_points": [...], "y_graph": {"vertices": [...], "edges": [[i,j],...]},
///    "rows": [[...], ...],
///    "meta": {"expected_eps": e?, "expected_dist": d?, "provenance": "..."}}
/// Edge entries are 0-based positions into the vertex list.
std::string instance_to_json(const InstanceBundle& bundle, int indent = 2);

/// Parses and validates an instance; throws ValidationError on malformed input.
InstanceBundle instance_from_json(const std::string& text);

InstanceBundle read_instance_file(const std::string& path);
void write_instance_file(const InstanceBundle& bundle, const std::string& path);

}  // namespace dplab
