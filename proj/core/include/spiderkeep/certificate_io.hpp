#pragma once

#include <string>

#include "spiderkeep/extraction.hpp"

namespace spiderkeep {

// Stable field order, two-space indent, trailing newline; byte-identical
// across runs for the same certificate.
std::string certificate_to_json(const Certificate& c);

// Inverse of certificate_to_json; MalformedLine on anything unparsable.
Certificate certificate_from_json(const std::string& text);

// Graphviz rendering with the witness highlighted.
std::string certificate_to_dot(const Graph& g, const Certificate& c);

// Short human-readable account of one certificate.
std::string certificate_summary(const Certificate& c);

}  // namespace spiderkeep
