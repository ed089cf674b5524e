#pragma once

// JSON file formats: WDGLA files and weighted-cone files. Exact rational
// strings throughout.

#include "repgerm/cones.hpp"
#include "repgerm/wdgla.hpp"

#include <string>

namespace repgerm {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

WDGLA wdgla_from_json(const std::string& text);
std::string wdgla_to_json(const WDGLA& L);

WeightedCone cone_from_json(const std::string& text);
std::string cone_to_json(const WeightedCone& c);

}  // namespace repgerm
